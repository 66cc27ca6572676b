//! Finite-dimensional unital associative algebras given by structure
//! constants, together with Wedderburn-Malcev data and the standard builders.

mod build;
mod element;
mod subspace;
pub(crate) mod wm;

pub use build::{build_semisimple, build_triangular, build_ut, BimoduleAction, TriangularAlgebra};
pub use element::Element;
pub use subspace::Subspace;
pub use wm::{is_gbt, peirce_component, verify_wm_data, ValidationReport, WmData, WmIssue};

use num::Zero;

use crate::error::{check_len, Error, Result};
use crate::linalg::{solve_linear, Matrix, Rational, SolveResult};

/// A unital associative algebra over the rationals.
///
/// `structure[i][j]` holds the coordinates of `b_i * b_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    labels: Vec<String>,
    structure: Vec<Vec<Element>>,
    unit: Element,
}

impl Algebra {
    /// Builds an algebra and verifies associativity and the unit law on all
    /// basis triples.
    pub fn new(labels: Vec<String>, structure: Vec<Vec<Element>>, unit: Element) -> Result<Self> {
        let alg = Algebra::new_trusted(labels, structure, unit)?;
        alg.check_laws()?;
        Ok(alg)
    }

    /// Builds an algebra checking only shapes. For builders whose output is
    /// associative and unital by construction.
    pub fn new_trusted(
        labels: Vec<String>,
        structure: Vec<Vec<Element>>,
        unit: Element,
    ) -> Result<Self> {
        let dim = labels.len();
        check_len(dim, structure.len())?;
        for row in &structure {
            check_len(dim, row.len())?;
            for v in row {
                check_len(dim, v.dim())?;
            }
        }
        check_len(dim, unit.dim())?;
        Ok(Algebra {
            dim,
            labels,
            structure,
            unit,
        })
    }

    /// Algebra spanned by linearly independent square matrices, closed under
    /// multiplication and containing the identity.
    pub fn from_matrix_basis(labels: Vec<String>, basis: &[Matrix]) -> Result<Self> {
        check_len(labels.len(), basis.len())?;
        let Some(first) = basis.first() else {
            return Err(Error::Schema("empty matrix basis".into()));
        };
        let n = first.rows();
        let flat: Vec<Vec<Rational>> = basis
            .iter()
            .map(|m| {
                check_len(n, m.rows())?;
                check_len(n, m.cols())?;
                Ok(m.entries().to_vec())
            })
            .collect::<Result<_>>()?;
        let cols = Matrix::from_columns(n * n, &flat)?;
        if cols.rank() != basis.len() {
            return Err(Error::Schema("matrix basis is linearly dependent".into()));
        }
        let express = |m: &Matrix| -> Result<Element> {
            match solve_linear(&cols, m.entries())? {
                SolveResult::Solution { particular, .. } => Ok(Element::new(particular)),
                SolveResult::NoSolution => Err(Error::NotInSpan),
            }
        };
        let structure = basis
            .iter()
            .map(|a| basis.iter().map(|b| express(&(a * b))).collect())
            .collect::<Result<_>>()?;
        let unit = express(&Matrix::identity(n))?;
        Algebra::new_trusted(labels, structure, unit)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim)
    }

    /// Coordinates of `b_i * b_j`.
    pub fn structure_constant(&self, i: usize, j: usize) -> &Element {
        &self.structure[i][j]
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        check_len(self.dim, x.dim())?;
        check_len(self.dim, y.dim())?;
        Ok(self.mul(x, y))
    }

    /// `xy - yx`
    pub fn commutator(&self, x: &Element, y: &Element) -> Result<Element> {
        check_len(self.dim, x.dim())?;
        check_len(self.dim, y.dim())?;
        Ok(self.bracket(x, y))
    }

    pub(crate) fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, s) in out.iter_mut().zip(self.structure[i][j].coords()) {
                    if !s.is_zero() {
                        *o += &c * s;
                    }
                }
            }
        }
        Element::new(out)
    }

    pub(crate) fn bracket(&self, x: &Element, y: &Element) -> Element {
        &self.mul(x, y) - &self.mul(y, x)
    }

    /// Matrix of `m -> x m` in the algebra basis (column `j` is `x b_j`).
    pub fn left_mul_matrix(&self, x: &Element) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim)
            .map(|j| self.mul(x, &self.basis_element(j)).into_coords())
            .collect();
        Matrix::from_columns(self.dim, &cols).expect("square by construction")
    }

    /// Trace of left multiplication by `x` in the regular representation.
    pub fn regular_trace(&self, x: &Element) -> Rational {
        let traces = self.basis_traces();
        x.coords().iter().zip(&traces).map(|(a, t)| a * t).sum()
    }

    fn basis_traces(&self) -> Vec<Rational> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| &self.structure[i][j].coords()[j]).sum())
            .collect()
    }

    /// Span of all products `u v` with `u` in `left` and `v` in `right`.
    pub fn product_space(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let prods: Vec<Element> = left
            .basis()
            .iter()
            .flat_map(|u| right.basis().iter().map(move |v| self.mul(u, v)))
            .collect();
        Subspace::span(self.dim, &prods)
    }

    /// Checks associativity on every basis triple and the unit law on every
    /// basis element.
    pub fn check_laws(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let bij = &self.structure[i][j];
                for k in 0..n {
                    let left = self.mul(bij, &self.basis_element(k));
                    let right = self.mul(&self.basis_element(i), &self.structure[j][k]);
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        for i in 0..n {
            let b = self.basis_element(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::UnitLaw(i));
            }
        }
        Ok(())
    }
}

/// Jacobson radical via the trace-form criterion valid in characteristic
/// zero: `rad(A) = {x : tr(L_{xy}) = 0 for all y}`.
pub fn radical(alg: &Algebra) -> Subspace {
    let n = alg.dim();
    let traces = alg.basis_traces();
    // form[k][i] = tr(L_{b_i b_k})
    let mut form = Matrix::zeros(n, n);
    for i in 0..n {
        for k in 0..n {
            form[(k, i)] = alg.structure[i][k]
                .coords()
                .iter()
                .zip(&traces)
                .map(|(a, t)| a * t)
                .sum();
        }
    }
    let kernel: Vec<Element> = form.kernel().into_iter().map(Element::new).collect();
    Subspace::span(n, &kernel)
}

/// `[A, A]`: span of the commutators of all basis pairs.
pub fn commutator_subspace(alg: &Algebra) -> Subspace {
    let n = alg.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = alg.bracket(&alg.basis_element(i), &alg.basis_element(j));
            if !c.is_zero() {
                brackets.push(c);
            }
        }
    }
    Subspace::span(n, &brackets)
}

/// `dim A - dim [A, A]`
pub fn quotient_dim(alg: &Algebra) -> usize {
    alg.dim() - commutator_subspace(alg).dim()
}

/// Smallest `k` with `I^k = 0`, or `None` if the powers stabilize at a
/// nonzero subspace.
pub fn nilpotency_index(alg: &Algebra, ideal: &Subspace) -> Option<usize> {
    let mut power = ideal.clone();
    for k in 1..=alg.dim() + 1 {
        if power.is_zero() {
            return Some(k);
        }
        let next = alg.product_space(&power, ideal);
        if next == power {
            return None;
        }
        power = next;
    }
    None
}
