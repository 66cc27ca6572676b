use std::fmt;

use super::{radical, Algebra, Element, Subspace};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Explicit Wedderburn-Malcev data `A = B + rad(A)` with
/// `B = M_{d_1} + ... + M_{d_r}` given by matrix units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WmData {
    block_sizes: Vec<usize>,
    // per block, the d x d matrix units in row-major order
    matrix_units: Vec<Vec<Element>>,
    radical_basis: Vec<Element>,
}

impl WmData {
    /// `matrix_units[k][p][q]` is `E^{(k)}_{pq}`. Only shapes are checked here;
    /// use [`verify_wm_data`] for the algebraic relations.
    pub fn new(
        block_sizes: Vec<usize>,
        matrix_units: Vec<Vec<Vec<Element>>>,
        radical_basis: Vec<Element>,
    ) -> Result<Self> {
        if block_sizes.is_empty() || block_sizes.contains(&0) {
            return Err(Error::InvalidWmData("block sizes must be a nonempty list of positive counts".into()));
        }
        if matrix_units.len() != block_sizes.len() {
            return Err(Error::InvalidWmData(format!(
                "{} blocks declared but {} matrix-unit grids supplied",
                block_sizes.len(),
                matrix_units.len()
            )));
        }
        let mut flat = Vec::with_capacity(block_sizes.len());
        for (k, (grid, &d)) in matrix_units.into_iter().zip(&block_sizes).enumerate() {
            if grid.len() != d || grid.iter().any(|row| row.len() != d) {
                return Err(Error::InvalidWmData(format!(
                    "matrix units of block {k} do not form a {d}x{d} grid"
                )));
            }
            flat.push(grid.into_iter().flatten().collect());
        }
        Ok(WmData {
            block_sizes,
            matrix_units: flat,
            radical_basis,
        })
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// Number `r` of simple components.
    pub fn block_count(&self) -> usize {
        self.block_sizes.len()
    }

    /// `E^{(k)}_{pq}`, zero-based.
    pub fn unit(&self, k: usize, p: usize, q: usize) -> &Element {
        &self.matrix_units[k][p * self.block_sizes[k] + q]
    }

    pub fn radical_basis(&self) -> &[Element] {
        &self.radical_basis
    }

    /// Matrix units of block `k` as a grid.
    pub fn block_units(&self, k: usize) -> Vec<Vec<Element>> {
        let d = self.block_sizes[k];
        self.matrix_units[k].chunks(d).map(<[Element]>::to_vec).collect()
    }

    /// All matrix units, block by block, row-major within a block.
    pub fn all_units(&self) -> impl Iterator<Item = &Element> {
        self.matrix_units.iter().flatten()
    }

    fn dim(&self) -> usize {
        self.matrix_units[0][0].dim()
    }

    /// Central idempotent `e_k = sum_p E^{(k)}_{pp}`.
    pub fn idempotent(&self, k: usize) -> Element {
        let d = self.block_sizes[k];
        let mut e = Element::zero(self.dim());
        for p in 0..d {
            e = &e + self.unit(k, p, p);
        }
        e
    }

    /// Image of a `d_k x d_k` matrix under the embedding `M_{d_k} -> A`.
    pub fn embed_block(&self, k: usize, m: &Matrix) -> Element {
        let d = self.block_sizes[k];
        assert!(m.rows() == d && m.cols() == d, "block matrix has wrong size");
        Element::combination(self.dim(), m.entries().iter().zip(&self.matrix_units[k]))
    }

    pub(crate) fn with_units(&self, matrix_units: Vec<Vec<Element>>) -> WmData {
        WmData {
            block_sizes: self.block_sizes.clone(),
            matrix_units,
            radical_basis: self.radical_basis.clone(),
        }
    }

    pub(crate) fn flat_units(&self) -> &[Vec<Element>] {
        &self.matrix_units
    }
}

/// A violated Wedderburn-Malcev invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WmIssue {
    ElementDimension { expected: usize, found: usize },
    MatrixUnitRelation { block: usize, p: usize, q: usize, s: usize, t: usize },
    CrossBlockProduct { left: usize, right: usize },
    IdempotentSum,
    DimensionMismatch { expected: usize, found: usize },
    NotComplement { rank: usize, expected: usize },
    RadicalMismatch { computed_dim: usize, supplied_dim: usize },
}

impl fmt::Display for WmIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WmIssue::ElementDimension { expected, found } => {
                write!(f, "element of length {found} in an algebra of dimension {expected}")
            }
            WmIssue::MatrixUnitRelation { block, p, q, s, t } => write!(
                f,
                "matrix-unit relation fails in block {block}: E{p}{q} * E{s}{t}"
            ),
            WmIssue::CrossBlockProduct { left, right } => {
                write!(f, "matrix units of blocks {left} and {right} have a nonzero product")
            }
            WmIssue::IdempotentSum => f.write_str("block idempotents do not sum to the unit"),
            WmIssue::DimensionMismatch { expected, found } => write!(
                f,
                "dimension mismatch: matrix units plus radical basis give {found}, algebra has {expected}"
            ),
            WmIssue::NotComplement { rank, expected } => write!(
                f,
                "matrix units and radical basis span only {rank} of {expected} dimensions"
            ),
            WmIssue::RadicalMismatch {
                computed_dim,
                supplied_dim,
            } => write!(
                f,
                "supplied radical (dim {supplied_dim}) differs from the Jacobson radical (dim {computed_dim})"
            ),
        }
    }
}

/// Outcome of [`verify_wm_data`]; empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<WmIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub(crate) fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidWmData(self.to_string()))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return f.write_str("valid");
        }
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}

/// Checks every invariant of the supplied decomposition against the algebra.
pub fn verify_wm_data(alg: &Algebra, wm: &WmData) -> ValidationReport {
    let n = alg.dim();
    let mut issues = Vec::new();
    for v in wm.all_units().chain(wm.radical_basis()) {
        if v.dim() != n {
            issues.push(WmIssue::ElementDimension {
                expected: n,
                found: v.dim(),
            });
        }
    }
    if !issues.is_empty() {
        return ValidationReport { issues };
    }

    let sizes = wm.block_sizes();
    for (k, &d) in sizes.iter().enumerate() {
        for p in 0..d {
            for q in 0..d {
                for s in 0..d {
                    for t in 0..d {
                        let prod = alg.mul(wm.unit(k, p, q), wm.unit(k, s, t));
                        let ok = if q == s {
                            prod == *wm.unit(k, p, t)
                        } else {
                            prod.is_zero()
                        };
                        if !ok {
                            issues.push(WmIssue::MatrixUnitRelation { block: k, p, q, s, t });
                        }
                    }
                }
            }
        }
    }
    for k in 0..sizes.len() {
        for l in 0..sizes.len() {
            if k == l {
                continue;
            }
            let nonzero = wm.flat_units()[k]
                .iter()
                .any(|u| wm.flat_units()[l].iter().any(|v| !alg.mul(u, v).is_zero()));
            if nonzero {
                issues.push(WmIssue::CrossBlockProduct { left: k, right: l });
            }
        }
    }

    let mut total = Element::zero(n);
    for k in 0..sizes.len() {
        total = &total + &wm.idempotent(k);
    }
    if total != *alg.unit() {
        issues.push(WmIssue::IdempotentSum);
    }

    let supplied = sizes.iter().map(|d| d * d).sum::<usize>() + wm.radical_basis().len();
    if supplied != n {
        issues.push(WmIssue::DimensionMismatch {
            expected: n,
            found: supplied,
        });
    }
    let all: Vec<Element> = wm.all_units().chain(wm.radical_basis()).cloned().collect();
    let rank = Subspace::span(n, &all).dim();
    if rank != n {
        issues.push(WmIssue::NotComplement { rank, expected: n });
    }

    let computed = radical(alg);
    let given = Subspace::span(n, wm.radical_basis());
    if computed != given || given.dim() != wm.radical_basis().len() {
        issues.push(WmIssue::RadicalMismatch {
            computed_dim: computed.dim(),
            supplied_dim: wm.radical_basis().len(),
        });
    }
    ValidationReport { issues }
}

/// Basis of `e_i rad(A) e_j` (zero-based block indices). Assumes `wm` is valid.
pub fn peirce_component(alg: &Algebra, wm: &WmData, i: usize, j: usize) -> Result<Subspace> {
    let r = wm.block_count();
    for idx in [i, j] {
        if idx >= r {
            return Err(Error::IndexOutOfRange { index: idx, bound: r });
        }
    }
    let (ei, ej) = (wm.idempotent(i), wm.idempotent(j));
    let parts: Vec<Element> = wm
        .radical_basis()
        .iter()
        .map(|v| alg.mul(&alg.mul(&ei, v), &ej))
        .collect();
    Ok(Subspace::span(alg.dim(), &parts))
}

/// Generalized block-triangular test: `rad(A)_{ij} = 0` for all `i >= j`,
/// evaluated in the supplied block order.
pub fn is_gbt(alg: &Algebra, wm: &WmData) -> Result<bool> {
    verify_wm_data(alg, wm).into_result()?;
    Ok(is_gbt_unchecked(alg, wm))
}

pub(crate) fn is_gbt_unchecked(alg: &Algebra, wm: &WmData) -> bool {
    let r = wm.block_count();
    (0..r).all(|i| {
        (0..=i).all(|j| {
            peirce_component(alg, wm, i, j)
                .expect("indices in range")
                .is_zero()
        })
    })
}
