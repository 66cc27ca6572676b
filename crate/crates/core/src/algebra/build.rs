use super::{radical, verify_wm_data, Algebra, Element, WmData};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

fn unit_label(p: usize, q: usize, n: usize) -> String {
    if n < 10 {
        format!("e{}{}", p + 1, q + 1)
    } else {
        format!("e{}_{}", p + 1, q + 1)
    }
}

/// Block upper-triangular matrix algebra `UT(d_1, ..., d_m)`.
///
/// The basis is the set of admissible matrix positions in row-major order.
/// The returned decomposition has the diagonal blocks as simple components
/// and the positions strictly above the diagonal blocks as radical basis.
pub fn build_ut(blocks: &[usize]) -> Result<(Algebra, WmData)> {
    if blocks.is_empty() || blocks.contains(&0) {
        return Err(Error::EmptyBlockList);
    }
    let n: usize = blocks.iter().sum();
    let mut block_of = Vec::with_capacity(n);
    let mut offsets = Vec::with_capacity(blocks.len());
    for (k, &d) in blocks.iter().enumerate() {
        offsets.push(block_of.len());
        block_of.extend(std::iter::repeat_n(k, d));
    }
    let mut index = vec![vec![None; n]; n];
    let mut positions = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if block_of[p] <= block_of[q] {
                index[p][q] = Some(positions.len());
                positions.push((p, q));
            }
        }
    }
    let dim = positions.len();
    let at = |p: usize, q: usize| Element::basis(dim, index[p][q].expect("admissible position"));

    let structure = positions
        .iter()
        .map(|&(p, q)| {
            positions
                .iter()
                .map(|&(s, t)| if q == s { at(p, t) } else { Element::zero(dim) })
                .collect()
        })
        .collect();
    let mut unit = Element::zero(dim);
    for p in 0..n {
        unit = &unit + &at(p, p);
    }
    let labels = positions.iter().map(|&(p, q)| unit_label(p, q, n)).collect();
    let alg = Algebra::new_trusted(labels, structure, unit)?;

    let units = blocks
        .iter()
        .zip(&offsets)
        .map(|(&d, &o)| {
            (0..d)
                .map(|p| (0..d).map(|q| at(o + p, o + q)).collect())
                .collect()
        })
        .collect();
    let rad = positions
        .iter()
        .filter(|&&(p, q)| block_of[p] < block_of[q])
        .map(|&(p, q)| at(p, q))
        .collect();
    let wm = WmData::new(blocks.to_vec(), units, rad)?;
    Ok((alg, wm))
}

/// Semisimple algebra `M_{d_1} x ... x M_{d_r}` with its matrix-unit basis,
/// block by block.
pub fn build_semisimple(blocks: &[usize]) -> Result<(Algebra, WmData)> {
    if blocks.is_empty() || blocks.contains(&0) {
        return Err(Error::EmptyBlockList);
    }
    let mut positions = Vec::new();
    for (k, &d) in blocks.iter().enumerate() {
        for p in 0..d {
            for q in 0..d {
                positions.push((k, p, q));
            }
        }
    }
    let dim = positions.len();
    let find = |k: usize, p: usize, q: usize| {
        let i = positions.iter().position(|&x| x == (k, p, q)).expect("known position");
        Element::basis(dim, i)
    };
    let structure = positions
        .iter()
        .map(|&(k, p, q)| {
            positions
                .iter()
                .map(|&(l, s, t)| {
                    if k == l && q == s {
                        find(k, p, t)
                    } else {
                        Element::zero(dim)
                    }
                })
                .collect()
        })
        .collect();
    let mut unit = Element::zero(dim);
    for (k, &d) in blocks.iter().enumerate() {
        for p in 0..d {
            unit = &unit + &find(k, p, p);
        }
    }
    let labels = positions
        .iter()
        .map(|&(k, p, q)| format!("b{}{}", k + 1, unit_label(p, q, blocks[k])))
        .collect();
    let alg = Algebra::new_trusted(labels, structure, unit)?;
    let units = blocks
        .iter()
        .enumerate()
        .map(|(k, &d)| {
            (0..d)
                .map(|p| (0..d).map(|q| find(k, p, q)).collect())
                .collect()
        })
        .collect();
    let wm = WmData::new(blocks.to_vec(), units, Vec::new())?;
    Ok((alg, wm))
}

/// Bimodule structure on `M = K^dim`: `left[i]` is the matrix of `m -> b_i m`
/// for the basis of the left algebra, `right[j]` the matrix of `m -> m b_j`
/// for the basis of the right algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleAction {
    pub dim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

impl BimoduleAction {
    fn left_of(&self, x: &Element) -> Matrix {
        combine(self.dim, x, &self.left)
    }

    fn right_of(&self, x: &Element) -> Matrix {
        combine(self.dim, x, &self.right)
    }

    /// Checks the left-module, right-module and compatibility laws on basis
    /// elements.
    pub fn check(&self, left_alg: &Algebra, right_alg: &Algebra) -> Result<()> {
        let violation = |msg: String| Err(Error::ActionLawViolation(msg));
        if self.left.len() != left_alg.dim() || self.right.len() != right_alg.dim() {
            return violation("one action matrix per basis element is required".into());
        }
        if self
            .left
            .iter()
            .chain(&self.right)
            .any(|m| m.rows() != self.dim || m.cols() != self.dim)
        {
            return violation(format!("action matrices must be {0}x{0}", self.dim));
        }
        let id = Matrix::identity(self.dim);
        if self.left_of(left_alg.unit()) != id {
            return violation("left unit does not act as the identity".into());
        }
        if self.right_of(right_alg.unit()) != id {
            return violation("right unit does not act as the identity".into());
        }
        for i in 0..left_alg.dim() {
            for j in 0..left_alg.dim() {
                if self.left_of(left_alg.structure_constant(i, j)) != &self.left[i] * &self.left[j] {
                    return violation(format!("(b{i} b{j}) m != b{i} (b{j} m)"));
                }
            }
        }
        for i in 0..right_alg.dim() {
            for j in 0..right_alg.dim() {
                if self.right_of(right_alg.structure_constant(i, j)) != &self.right[j] * &self.right[i] {
                    return violation(format!("m (b{i} b{j}) != (m b{i}) b{j}"));
                }
            }
        }
        for (i, l) in self.left.iter().enumerate() {
            for (j, r) in self.right.iter().enumerate() {
                if l * r != r * l {
                    return violation(format!("(a{i} m) b{j} != a{i} (m b{j})"));
                }
            }
        }
        Ok(())
    }
}

fn combine(dim: usize, x: &Element, mats: &[Matrix]) -> Matrix {
    x.coords()
        .iter()
        .zip(mats)
        .fold(Matrix::zeros(dim, dim), |acc, (c, m)| &acc + &m.scale(c))
}

/// Triangular algebra `[[A1, M], [0, A2]]` with the coordinate layout
/// `(A1 | A2 | M)`.
#[derive(Debug, Clone)]
pub struct TriangularAlgebra {
    pub algebra: Algebra,
    pub wm: WmData,
    left_dim: usize,
    right_dim: usize,
    module_dim: usize,
    left_blocks: usize,
}

impl TriangularAlgebra {
    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    fn place(&self, offset: usize, coords: &[Rational]) -> Element {
        let mut out = Element::zero(self.algebra.dim()).into_coords();
        out[offset..offset + coords.len()].clone_from_slice(coords);
        Element::new(out)
    }

    /// Embeds an element of `A1` given in its own coordinates.
    pub fn embed_left(&self, a: &Element) -> Element {
        assert_eq!(a.dim(), self.left_dim, "left element dimension mismatch");
        self.place(0, a.coords())
    }

    pub fn embed_right(&self, b: &Element) -> Element {
        assert_eq!(b.dim(), self.right_dim, "right element dimension mismatch");
        self.place(self.left_dim, b.coords())
    }

    pub fn embed_module(&self, m: &[Rational]) -> Element {
        assert_eq!(m.len(), self.module_dim, "module element dimension mismatch");
        self.place(self.left_dim + self.right_dim, m)
    }

    /// `1_{A2}` as an element of the triangular algebra.
    pub fn right_unit(&self) -> Element {
        let coords = &self.algebra.unit().coords()[self.left_dim..self.left_dim + self.right_dim];
        self.place(self.left_dim, coords)
    }

    /// `1_{A1}` as an element of the triangular algebra.
    pub fn left_unit(&self) -> Element {
        let coords = &self.algebra.unit().coords()[..self.left_dim];
        self.place(0, coords)
    }

    /// Number of simple components contributed by `A1`.
    pub fn left_blocks(&self) -> usize {
        self.left_blocks
    }
}

/// Triangular algebra of two semisimple algebras and a bimodule between them.
///
/// The decomposition lists the blocks of `a1` first, then those of `a2`; the
/// radical is the bimodule. The result is generalized block-triangular.
pub fn build_triangular(
    a1: (&Algebra, &WmData),
    a2: (&Algebra, &WmData),
    action: &BimoduleAction,
) -> Result<TriangularAlgebra> {
    for (alg, wm) in [a1, a2] {
        let rad = radical(alg);
        if !rad.is_zero() {
            return Err(Error::NotSemisimple(rad.dim()));
        }
        verify_wm_data(alg, wm).into_result()?;
    }
    let (alg1, wm1) = a1;
    let (alg2, wm2) = a2;
    action.check(alg1, alg2)?;

    let (n1, n2, m) = (alg1.dim(), alg2.dim(), action.dim);
    let dim = n1 + n2 + m;
    let place = |offset: usize, coords: &[Rational]| {
        let mut out = Element::zero(dim).into_coords();
        out[offset..offset + coords.len()].clone_from_slice(coords);
        Element::new(out)
    };

    let mut structure = vec![vec![Element::zero(dim); dim]; dim];
    for i in 0..n1 {
        for j in 0..n1 {
            structure[i][j] = place(0, alg1.structure_constant(i, j).coords());
        }
        for k in 0..m {
            structure[i][n1 + n2 + k] = place(n1 + n2, &action.left[i].column(k));
        }
    }
    for i in 0..n2 {
        for j in 0..n2 {
            structure[n1 + i][n1 + j] = place(n1, alg2.structure_constant(i, j).coords());
        }
    }
    for k in 0..m {
        for j in 0..n2 {
            structure[n1 + n2 + k][n1 + j] = place(n1 + n2, &action.right[j].column(k));
        }
    }
    let unit = &place(0, alg1.unit().coords()) + &place(n1, alg2.unit().coords());
    let labels = alg1
        .labels()
        .iter()
        .map(|l| format!("L.{l}"))
        .chain(alg2.labels().iter().map(|l| format!("R.{l}")))
        .chain((0..m).map(|k| format!("m{}", k + 1)))
        .collect();
    let algebra = Algebra::new_trusted(labels, structure, unit)?;
    debug_assert!(algebra.check_laws().is_ok());

    let mut blocks = wm1.block_sizes().to_vec();
    blocks.extend_from_slice(wm2.block_sizes());
    let mut units = Vec::new();
    for k in 0..wm1.block_count() {
        units.push(
            wm1.block_units(k)
                .iter()
                .map(|row| row.iter().map(|u| place(0, u.coords())).collect())
                .collect(),
        );
    }
    for k in 0..wm2.block_count() {
        units.push(
            wm2.block_units(k)
                .iter()
                .map(|row| row.iter().map(|u| place(n1, u.coords())).collect())
                .collect(),
        );
    }
    let rad = (0..m).map(|k| Element::basis(dim, n1 + n2 + k)).collect();
    let wm = WmData::new(blocks, units, rad)?;
    Ok(TriangularAlgebra {
        algebra,
        wm,
        left_dim: n1,
        right_dim: n2,
        module_dim: m,
        left_blocks: wm1.block_count(),
    })
}
