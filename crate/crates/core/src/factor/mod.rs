//! Constructive commutator factorization.
//!
//! [`gbt_factor`] follows the induction on the number of simple components:
//! peel off the last block, factor the rest inside the subalgebra on the
//! remaining blocks, factor the last block by [`ams_factor`], and glue the
//! two with one Sylvester solve on the bimodule `sum_i rad(A)_{i,r}`.

mod ams;
mod image;

pub use ams::{ams_factor, zero_diagonal_similarity};
pub use image::{degree_two_eval, poly_image_witness, ImageTarget};

use crate::algebra::wm::is_gbt_unchecked;
use crate::algebra::{is_gbt, peirce_component, verify_wm_data, Algebra, Element, Subspace, WmData};
use crate::error::{check_len, Error, Result};
use crate::linalg::{solve_linear, Matrix, Rational, SolveResult};
use crate::multitrace::{multitrace, semisimple_projection, Multitrace};
use crate::sylvester::{find_shift, solve_sylvester, BimoduleProblem, SylvesterSolution};

/// Witness pair `(x, y)` for `[x, y] = target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationCertificate {
    pub x: Element,
    pub y: Element,
    pub target: Element,
    /// Set only after `[x, y] = target` was checked exactly.
    pub verified: bool,
    /// Every shift used by the Sylvester steps, innermost recursion level first.
    pub lambda_shifts: Vec<Rational>,
}

impl FactorizationCertificate {
    pub fn new(alg: &Algebra, x: Element, y: Element, target: Element, lambda_shifts: Vec<Rational>) -> Self {
        let verified = alg.commutator(&x, &y).is_ok_and(|c| c == target);
        FactorizationCertificate {
            x,
            y,
            target,
            verified,
            lambda_shifts,
        }
    }

    /// Re-runs the exact check against `alg`.
    pub fn verify(&self, alg: &Algebra) -> bool {
        alg.commutator(&self.x, &self.y).is_ok_and(|c| c == self.target)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommutatorDecision {
    Yes(FactorizationCertificate),
    /// Nonzero multitrace: not a commutator.
    No(Multitrace),
    /// Multitrace zero outside the generalized block-triangular class.
    Unknown(String),
}

/// Coordinates with respect to a fixed list of independent vectors.
struct Frame {
    ambient: usize,
    basis: Vec<Element>,
    matrix: Matrix,
}

impl Frame {
    fn new(ambient: usize, basis: Vec<Element>) -> Self {
        let cols: Vec<Vec<Rational>> = basis.iter().map(|b| b.coords().to_vec()).collect();
        let matrix = Matrix::from_columns(ambient, &cols).expect("ambient-length vectors");
        debug_assert_eq!(matrix.rank(), basis.len());
        Frame {
            ambient,
            basis,
            matrix,
        }
    }

    fn coords(&self, v: &Element) -> Result<Vec<Rational>> {
        match solve_linear(&self.matrix, v.coords())? {
            SolveResult::Solution { particular, .. } => Ok(particular),
            SolveResult::NoSolution => Err(Error::NotInSpan),
        }
    }

    fn element(&self, coords: &[Rational]) -> Element {
        Element::combination(self.ambient, coords.iter().zip(&self.basis))
    }

    /// Matrix of a linear map preserving the span.
    fn operator(&self, f: impl Fn(&Element) -> Element) -> Result<Matrix> {
        let cols = self
            .basis
            .iter()
            .map(|b| self.coords(&f(b)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(self.basis.len(), &cols)
    }
}

/// Factors a multitrace-zero element of a generalized block-triangular
/// algebra as a commutator. The returned certificate is always verified.
pub fn gbt_factor(alg: &Algebra, wm: &WmData, a: &Element) -> Result<FactorizationCertificate> {
    check_len(alg.dim(), a.dim())?;
    if !is_gbt(alg, wm)? {
        return Err(Error::NotGbt);
    }
    factor_checked(alg, wm, a)
}

/// `gbt_factor` once the decomposition is known to be valid and GBT.
fn factor_checked(alg: &Algebra, wm: &WmData, a: &Element) -> Result<FactorizationCertificate> {
    let mtr = multitrace(alg, wm, a)?;
    if !mtr.is_zero() {
        return Err(Error::NonzeroMultitrace(mtr.to_string()));
    }
    let mut shifts = Vec::new();
    let (x, y) = factor_rec(alg, wm, a, &mut shifts)?;
    let cert = FactorizationCertificate::new(alg, x, y, a.clone(), shifts);
    if !cert.verified {
        return Err(Error::VerificationFailed);
    }
    Ok(cert)
}

fn factor_rec(alg: &Algebra, wm: &WmData, a: &Element, shifts: &mut Vec<Rational>) -> Result<(Element, Element)> {
    if a.is_zero() {
        return Ok((alg.zero(), alg.zero()));
    }
    let r = wm.block_count();
    let proj = semisimple_projection(alg, wm, a)?;
    if r == 1 {
        // rad(A) = rad(A)_{11} = 0, so A is a full matrix algebra
        let (x, y) = ams_factor(&proj.blocks[0])?;
        return Ok((wm.embed_block(0, &x), wm.embed_block(0, &y)));
    }

    let last = r - 1;
    let e_last = wm.idempotent(last);
    let e_rest = (0..last).fold(alg.zero(), |acc, k| &acc + &wm.idempotent(k));
    let sandwich = |l: &Element, v: &Element, rgt: &Element| alg.mul(&alg.mul(l, v), rgt);

    // a = a0 + c + j_r
    let j_rest = sandwich(&e_rest, &proj.radical, &e_rest);
    let j_last = sandwich(&e_rest, &proj.radical, &e_last);
    debug_assert_eq!(&j_rest + &j_last, proj.radical);
    let a0 = (0..last).fold(j_rest, |acc, k| &acc + &wm.embed_block(k, &proj.blocks[k]));

    // A0 = B0 + rad(A)_0 on blocks 0..last, materialized as its own algebra
    let rad0: Vec<Element> = wm
        .radical_basis()
        .iter()
        .map(|v| sandwich(&e_rest, v, &e_rest))
        .collect();
    let rad0 = Subspace::span(alg.dim(), &rad0);
    let units0: Vec<Element> = (0..last).flat_map(|k| wm.block_units(k).into_iter().flatten()).collect();
    let n_units = units0.len();
    let frame0 = Frame::new(alg.dim(), units0.into_iter().chain(rad0.basis().iter().cloned()).collect());
    let (alg0, wm0) = restrict(alg, wm, &frame0, &e_rest, last, n_units)?;
    debug_assert!(
        verify_wm_data(&alg0, &wm0).is_valid() && is_gbt_unchecked(&alg0, &wm0),
        "A0 must be generalized block-triangular"
    );

    let a0_local = Element::new(frame0.coords(&a0)?);
    let (x0, y0) = factor_rec(&alg0, &wm0, &a0_local, shifts)?;
    let (x0, y0) = (frame0.element(x0.coords()), frame0.element(y0.coords()));

    let (cx, cy) = ams_factor(&proj.blocks[last])?;
    let (cx, cy) = (wm.embed_block(last, &cx), wm.embed_block(last, &cy));

    // Sylvester step on N = rad(A)_{0,last} + ... + rad(A)_{last-1,last}
    let mut nbasis = Vec::new();
    for i in 0..last {
        nbasis.extend(peirce_component(alg, wm, i, last)?.basis().iter().cloned());
    }
    let frame_n = Frame::new(alg.dim(), nbasis);
    let left = frame_n.operator(|z| alg.mul(&x0, z))?;
    let right = frame_n.operator(|z| alg.mul(z, &cx))?;
    let lambda = find_shift(&left, &right)?;
    let shifted = &left + &Matrix::scalar(left.rows(), &lambda);
    let problem = BimoduleProblem::new(shifted, right, frame_n.coords(&j_last)?)?;
    let z = match solve_sylvester(&problem) {
        SylvesterSolution::Unique(z) => frame_n.element(&z),
        _ => return Err(Error::VerificationFailed),
    };
    shifts.push(lambda.clone());

    let x = &(&x0 + &e_rest.scale(&lambda)) + &cx;
    let y = &(&y0 + &cy) + &z;
    Ok((x, y))
}

/// Structure constants and decomposition of the subalgebra spanned by
/// `frame` (matrix units of the first `blocks` blocks, then radical).
fn restrict(
    alg: &Algebra,
    wm: &WmData,
    frame: &Frame,
    unit: &Element,
    blocks: usize,
    n_units: usize,
) -> Result<(Algebra, WmData)> {
    let dim = frame.basis.len();
    let structure = frame
        .basis
        .iter()
        .map(|u| {
            frame
                .basis
                .iter()
                .map(|v| Ok(Element::new(frame.coords(&alg.mul(u, v))?)))
                .collect()
        })
        .collect::<Result<_>>()?;
    let labels = (0..dim).map(|i| format!("s{}", i + 1)).collect();
    let sub = Algebra::new_trusted(labels, structure, Element::new(frame.coords(unit)?))?;

    let mut next = 0;
    let units = wm.block_sizes()[..blocks]
        .iter()
        .map(|&d| {
            (0..d)
                .map(|_| {
                    (0..d)
                        .map(|_| {
                            next += 1;
                            Element::basis(dim, next - 1)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let rad = (n_units..dim).map(|i| Element::basis(dim, i)).collect();
    let sub_wm = WmData::new(wm.block_sizes()[..blocks].to_vec(), units, rad)?;
    Ok((sub, sub_wm))
}

/// Decision by multitrace: nonzero means no; zero in a generalized
/// block-triangular algebra means yes (with certificate); otherwise unknown.
pub fn is_commutator(alg: &Algebra, wm: &WmData, a: &Element) -> Result<CommutatorDecision> {
    check_len(alg.dim(), a.dim())?;
    verify_wm_data(alg, wm).into_result()?;
    let mtr = multitrace(alg, wm, a)?;
    if !mtr.is_zero() {
        return Ok(CommutatorDecision::No(mtr));
    }
    if !is_gbt_unchecked(alg, wm) {
        return Ok(CommutatorDecision::Unknown(
            "multitrace is zero but the algebra is not generalized block-triangular in the given block order".into(),
        ));
    }
    factor_checked(alg, wm, a).map(CommutatorDecision::Yes)
}
