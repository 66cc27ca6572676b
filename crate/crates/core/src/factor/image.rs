use num::Zero;

use crate::algebra::{Element, TriangularAlgebra};
use crate::error::{check_len, Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::sylvester::{find_shift, solve_sylvester, BimoduleProblem, SylvesterSolution};

/// Target `[a1, a2] + [b1, b2] + m` in a triangular algebra. The pairs are
/// given in the coordinates of `A1` and `A2`, `module` in the coordinates of
/// the bimodule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageTarget {
    pub left_pair: (Element, Element),
    pub right_pair: (Element, Element),
    pub module: Vec<Rational>,
}

impl ImageTarget {
    pub fn total(&self, t: &TriangularAlgebra) -> Element {
        let alg = &t.algebra;
        let (a1, a2) = (t.embed_left(&self.left_pair.0), t.embed_left(&self.left_pair.1));
        let (b1, b2) = (t.embed_right(&self.right_pair.0), t.embed_right(&self.right_pair.1));
        let sum = &alg.bracket(&a1, &a2) + &alg.bracket(&b1, &b2);
        &sum + &t.embed_module(&self.module)
    }
}

/// `alpha x y + beta y x`
pub fn degree_two_eval(t: &TriangularAlgebra, alpha: &Rational, beta: &Rational, x: &Element, y: &Element) -> Element {
    let alg = &t.algebra;
    &alg.mul(x, y).scale(alpha) + &alg.mul(y, x).scale(beta)
}

/// Witness `(x, y)` with `alpha x y + beta y x` equal to the assembled target.
///
/// For `alpha + beta != 0` the unit does it. Otherwise the polynomial is a
/// multiple of the commutator and the module part is reached by a shifted
/// Sylvester solve: `x = a1 + b1 + λ 1_{A2}`, `y = (a2 + b2 + z) / alpha`
/// with `a1 z - z (b1 + λ) = m`.
pub fn poly_image_witness(
    t: &TriangularAlgebra,
    alpha: &Rational,
    beta: &Rational,
    target: &ImageTarget,
) -> Result<(Element, Element)> {
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::DegeneratePolynomial);
    }
    check_len(t.left_dim(), target.left_pair.0.dim())?;
    check_len(t.left_dim(), target.left_pair.1.dim())?;
    check_len(t.right_dim(), target.right_pair.0.dim())?;
    check_len(t.right_dim(), target.right_pair.1.dim())?;
    check_len(t.module_dim(), target.module.len())?;

    let alg = &t.algebra;
    let total_coeff = alpha + beta;
    if !total_coeff.is_zero() {
        let x = target.total(t).scale(&total_coeff.recip());
        return Ok((x, alg.unit().clone()));
    }

    let a1 = t.embed_left(&target.left_pair.0);
    let a2 = t.embed_left(&target.left_pair.1);
    let b1 = t.embed_right(&target.right_pair.0);
    let b2 = t.embed_right(&target.right_pair.1);

    let offset = t.left_dim() + t.right_dim();
    let m = t.module_dim();
    let module_coords = |v: &Element| v.coords()[offset..].to_vec();
    let op = |f: &dyn Fn(&Element) -> Element| {
        let cols: Vec<Vec<Rational>> = (0..m)
            .map(|k| module_coords(&f(&Element::basis(alg.dim(), offset + k))))
            .collect();
        Matrix::from_columns(m, &cols).expect("module-length columns")
    };
    let left = op(&|z| alg.mul(&a1, z));
    let right = op(&|z| alg.mul(z, &b1));

    // disjoint(L + μ, R) iff disjoint(L, R - μ); shift the right side by λ = -μ
    let lambda = -find_shift(&left, &right)?;
    let shifted_right = &right + &Matrix::scalar(m, &lambda);
    let problem = BimoduleProblem::new(left, shifted_right, target.module.clone())?;
    let z = match solve_sylvester(&problem) {
        SylvesterSolution::Unique(z) => t.embed_module(&z),
        _ => return Err(Error::VerificationFailed),
    };
    let x = &(&a1 + &b1) + &t.right_unit().scale(&lambda);
    let y = (&(&a2 + &b2) + &z).scale(&alpha.recip());
    Ok((x, y))
}
