use super::Element;
use crate::linalg::{Matrix, Rational};

/// Linear subspace of an algebra, stored by its reduced row echelon basis.
///
/// The echelon basis is unique for a given subspace, so two subspaces are
/// equal exactly when their bases are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Element>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, &(0..ambient).map(|i| Element::basis(ambient, i)).collect::<Vec<_>>())
    }

    /// Span of arbitrary (possibly dependent) vectors of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Element]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let rows = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.dim(), ambient, "subspace vector dimension mismatch");
                v.coords().to_vec()
            })
            .collect();
        let (r, pivots) = Matrix::from_rows(rows).expect("equal row lengths").rref();
        let basis = (0..pivots.len()).map(|i| Element::new(r.row(i).to_vec())).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    /// Coordinates of `v` with respect to [`Self::basis`], if `v` lies in the span.
    pub fn coordinates(&self, v: &Element) -> Option<Vec<Rational>> {
        if v.dim() != self.ambient {
            return None;
        }
        let coeffs: Vec<Rational> = self.pivots.iter().map(|&p| v.coords()[p].clone()).collect();
        let rebuilt = Element::combination(self.ambient, coeffs.iter().zip(&self.basis));
        (rebuilt == *v).then_some(coeffs)
    }

    pub fn contains(&self, v: &Element) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let all: Vec<Element> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.ambient, &all)
    }

    /// True when the vectors are linearly independent.
    pub fn independent(ambient: usize, vectors: &[Element]) -> bool {
        Subspace::span(ambient, vectors).dim() == vectors.len()
    }
}

impl Default for Subspace {
    fn default() -> Self {
        Subspace::zero(0)
    }
}
