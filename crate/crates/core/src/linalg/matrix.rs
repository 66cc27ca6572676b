use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Zero};

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

fn denominator_lcm<'a>(entries: impl Iterator<Item = &'a Rational>) -> BigInt {
    entries.fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// `x * d` for a multiple `d` of the denominator of `x`.
fn scaled(x: &Rational, d: &BigInt) -> BigInt {
    x.numer() * (d / x.denom())
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, s: &Rational) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let mut m = Matrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        crate::error::check_len(rows * cols, data.len())?;
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            crate::error::check_len(ncols, row.len())?;
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Builds an `n x k` matrix whose columns are the given length-`n` vectors.
    pub fn from_columns(n: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Matrix::zeros(n, columns.len());
        for (j, col) in columns.iter().enumerate() {
            crate::error::check_len(n, col.len())?;
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| super::int(v)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    pub fn column_vector(v: &[Rational]) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Result<Rational> {
        self.require_square()?;
        Ok((0..self.rows).map(|i| &self[(i, i)]).sum())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        // Scale rows of self and columns of other to integers so each entry
        // is normalized once instead of after every partial sum.
        let row_dens: Vec<BigInt> = (0..self.rows).map(|i| denominator_lcm(self.row(i).iter())).collect();
        let col_dens: Vec<BigInt> = (0..other.cols)
            .map(|j| denominator_lcm((0..other.rows).map(|k| &other[(k, j)])))
            .collect();
        let lhs: Vec<BigInt> = (0..self.rows * self.cols)
            .map(|idx| scaled(&self.data[idx], &row_dens[idx / self.cols]))
            .collect();
        let rhs: Vec<BigInt> = (0..other.rows * other.cols)
            .map(|idx| scaled(&other.data[idx], &col_dens[idx % other.cols]))
            .collect();
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut sum = BigInt::zero();
                for k in 0..self.cols {
                    let (a, b) = (&lhs[i * self.cols + k], &rhs[k * other.cols + j]);
                    if !a.is_zero() && !b.is_zero() {
                        sum += a * b;
                    }
                }
                data.push(Rational::new(sum, &row_dens[i] * &col_dens[j]));
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.require_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.require_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        crate::error::check_len(self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..a.cols {
            if prow == a.rows {
                break;
            }
            let Some(found) = (prow..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(found, prow);
            let inv = a[(prow, col)].recip();
            for j in col..a.cols {
                let v = &a[(prow, j)] * &inv;
                a[(prow, j)] = v;
            }
            for r in 0..a.rows {
                if r == prow || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in col..a.cols {
                    if a[(prow, j)].is_zero() {
                        continue;
                    }
                    let delta = &factor * &a[(prow, j)];
                    a[(r, j)] -= delta;
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, free)].clone();
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Result<Rational> {
        self.require_square()?;
        let mut a = self.clone();
        let n = a.rows;
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &pivot;
                for j in col..n {
                    let delta = &factor * &a[(col, j)];
                    a[(r, j)] -= delta;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.require_square()?;
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Characteristic polynomial `det(tI - self)` by the Faddeev-LeVerrier
    /// recurrence.
    pub fn char_poly(&self) -> Result<Polynomial> {
        self.require_square()?;
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        // m_k = A m_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A m_k) / k
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &m;
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            m = next;
            let am = self * &m;
            let tr: Rational = (0..n).map(|i| &am[(i, i)]).sum();
            coeffs[n - k] = -tr / Rational::from_integer(k.into());
        }
        Ok(Polynomial::new(coeffs))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn require_same_shape(&self, other: &Matrix) -> Result<()> {
        crate::error::check_len(self.rows, other.rows)?;
        crate::error::check_len(self.cols, other.cols)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

// The operator impls panic on shape mismatch; use the `try_*` methods when
// shapes come from untrusted input.
impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix sum shape mismatch")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix difference shape mismatch")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Outcome of [`solve_linear`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    /// A particular solution and a basis of the kernel of the system matrix.
    Solution {
        particular: Vec<Rational>,
        kernel: Vec<Vec<Rational>>,
    },
    NoSolution,
}

/// Solves `m * x = rhs` exactly.
///
/// The particular solution sets every free variable to zero.
pub fn solve_linear(m: &Matrix, rhs: &[Rational]) -> Result<SolveResult> {
    crate::error::check_len(m.rows(), rhs.len())?;
    let n = m.cols();
    let mut aug = Matrix::zeros(m.rows(), n + 1);
    for i in 0..m.rows() {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, n)] = rhs[i].clone();
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(SolveResult::NoSolution);
    }
    let mut particular = vec![Rational::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        particular[p] = r[(row, n)].clone();
    }
    Ok(SolveResult::Solution {
        particular,
        kernel: m.kernel(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    fn col(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn mat_mul_examples() {
        let m = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(&Matrix::identity(2) * &m, m);
        let n = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!((&n * &n).is_zero());
        let v = Matrix::from_i64(&[&[5], &[6]]);
        assert_eq!(&m * &v, Matrix::from_i64(&[&[17], &[39]]));
        assert_eq!(
            v.try_mul(&m),
            Err(Error::DimensionMismatch {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn solve_linear_examples() {
        let r = solve_linear(&Matrix::identity(2), &col(&[3, 4])).unwrap();
        assert_eq!(
            r,
            SolveResult::Solution {
                particular: col(&[3, 4]),
                kernel: vec![]
            }
        );
        let ones = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        let SolveResult::Solution { particular, kernel } =
            solve_linear(&ones, &col(&[0, 0])).unwrap()
        else {
            panic!("expected a solution");
        };
        assert_eq!(particular, col(&[0, 0]));
        assert_eq!(kernel, vec![col(&[-1, 1])]);
        assert_eq!(
            solve_linear(&ones, &col(&[1, 0])).unwrap(),
            SolveResult::NoSolution
        );
    }

    #[test]
    fn char_poly_examples() {
        let n = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(n.char_poly().unwrap(), Polynomial::from_i64(&[0, 0, 1]));
        let two = Matrix::from_i64(&[&[2]]);
        assert_eq!(two.char_poly().unwrap(), Polynomial::from_i64(&[-2, 1]));
        let m = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.char_poly().unwrap(), Polynomial::from_i64(&[-2, -5, 1]));
        assert_eq!(
            Matrix::zeros(2, 3).char_poly(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
        assert_eq!(Matrix::zeros(0, 0).char_poly().unwrap(), Polynomial::one());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(3, 2).rank(), 0);
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.determinant().unwrap(), int(1));
        assert_eq!(&m * &m.inverse().unwrap(), Matrix::identity(2));
        let s = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(Error::Singular));
        assert_eq!(s.determinant().unwrap(), int(0));
        let h = Matrix::from_rows(vec![
            vec![int(1), rat(1, 2)],
            vec![rat(1, 2), rat(1, 3)],
        ])
        .unwrap();
        assert_eq!(h.determinant().unwrap(), rat(1, 12));
    }
}
