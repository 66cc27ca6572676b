//! Trace-zero matrices as commutators over the rationals.

use num::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

fn require_trace_zero(a: &Matrix) -> Result<()> {
    let tr = a.trace()?;
    if tr.is_zero() {
        Ok(())
    } else {
        Err(Error::NonzeroTrace(tr.to_string()))
    }
}

/// Invertible `S` such that `S^{-1} a S` has zero diagonal.
///
/// Works one position at a time: for a nonzero trace-zero matrix pick `v`
/// with `a v` independent of `v`, change to a basis starting `v, a v` (which
/// zeroes the `(0, 0)` entry) and recurse on the trailing block, whose trace
/// is still zero.
pub fn zero_diagonal_similarity(a: &Matrix) -> Result<Matrix> {
    require_trace_zero(a)?;
    Ok(zero_diag(a).0)
}

/// The similarity together with its inverse.
fn zero_diag(a: &Matrix) -> (Matrix, Matrix) {
    let n = a.rows();
    if a.is_zero() {
        return (Matrix::identity(n), Matrix::identity(n));
    }
    // a is nonzero with trace zero, hence not scalar (characteristic zero),
    // hence n >= 2 and a non-eigenvector exists
    let v = non_eigenvector(a);
    let av = a.apply(&v).expect("square");
    // complete v, av with the standard vectors off the pivots of [v; av]
    let (_, pivots) = Matrix::from_rows(vec![v.clone(), av.clone()]).expect("n columns").rref();
    let mut cols = vec![v, av];
    for i in (0..n).filter(|i| !pivots.contains(i)) {
        let mut e = vec![Rational::zero(); n];
        e[i] = crate::linalg::one();
        cols.push(e);
    }
    let p = Matrix::from_columns(n, &cols).expect("n rows");
    let p_inv = p.inverse().expect("basis");
    let b = &(&p_inv * a) * &p;
    debug_assert!(b[(0, 0)].is_zero());

    let mut trailing = Matrix::zeros(n - 1, n - 1);
    for i in 1..n {
        for j in 1..n {
            trailing[(i - 1, j - 1)] = b[(i, j)].clone();
        }
    }
    let (inner, inner_inv) = zero_diag(&trailing);
    let lift = |m: &Matrix| {
        let mut out = Matrix::identity(n);
        for i in 1..n {
            for j in 1..n {
                out[(i, j)] = m[(i - 1, j - 1)].clone();
            }
        }
        out
    };
    (&p * &lift(&inner), &lift(&inner_inv) * &p_inv)
}

fn non_eigenvector(a: &Matrix) -> Vec<Rational> {
    let n = a.rows();
    let unit = |i: usize| {
        let mut e = vec![Rational::zero(); n];
        e[i] = crate::linalg::one();
        e
    };
    for j in 0..n {
        if (0..n).any(|i| i != j && !a[(i, j)].is_zero()) {
            return unit(j);
        }
    }
    // diagonal and not scalar
    for i in 0..n {
        for j in i + 1..n {
            if a[(i, i)] != a[(j, j)] {
                let mut v = unit(i);
                v[j] = crate::linalg::one();
                return v;
            }
        }
    }
    unreachable!("scalar trace-zero matrix is zero")
}

/// `(X, Y)` with `XY - YX = a` for trace-zero `a`.
///
/// After conjugating to zero diagonal `a'`, take `X' = diag(0, 1, ..., n-1)`
/// and `Y'_{ij} = a'_{ij} / (i - j)`; then conjugate back.
pub fn ams_factor(a: &Matrix) -> Result<(Matrix, Matrix)> {
    require_trace_zero(a)?;
    let n = a.rows();
    if a.is_zero() {
        return Ok((Matrix::zeros(n, n), Matrix::zeros(n, n)));
    }
    let (s, s_inv) = zero_diag(a);
    let conj = &(&s_inv * a) * &s;
    let x = Matrix::diagonal(&(0..n).map(|i| Rational::from_integer(i.into())).collect::<Vec<_>>());
    let mut y = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let gap = Rational::from_integer((i as i64 - j as i64).into());
                y[(i, j)] = &conj[(i, j)] / gap;
            }
        }
    }
    let x = &(&s * &x) * &s_inv;
    let y = &(&s * &y) * &s_inv;
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    fn assert_zero_diagonal_conjugate(a: &Matrix) {
        let s = zero_diagonal_similarity(a).unwrap();
        let c = &(&s.inverse().unwrap() * a) * &s;
        for i in 0..a.rows() {
            assert!(c[(i, i)].is_zero(), "diagonal entry {i} of {c:?}");
        }
    }

    #[test]
    fn zero_diagonal_examples() {
        assert_eq!(zero_diagonal_similarity(&Matrix::zeros(3, 3)).unwrap(), Matrix::identity(3));
        assert_zero_diagonal_conjugate(&m(&[&[1, 0], &[0, -1]]));
        // the explicit witness S = [[1,1],[1,-1]] also works
        let s = m(&[&[1, 1], &[1, -1]]);
        let c = &(&s.inverse().unwrap() * &m(&[&[1, 0], &[0, -1]])) * &s;
        assert_eq!(c, m(&[&[0, 1], &[1, 0]]));
        let nil = m(&[&[0, 5], &[0, 0]]);
        assert_zero_diagonal_conjugate(&nil);
        assert_zero_diagonal_conjugate(&m(&[&[1, 2, 0], &[0, 3, 1], &[4, 0, -4]]));
        assert_zero_diagonal_conjugate(&m(&[&[2, 0, 0], &[0, -1, 0], &[0, 0, -1]]));
        assert!(matches!(
            zero_diagonal_similarity(&m(&[&[1]])),
            Err(Error::NonzeroTrace(_))
        ));
    }

    #[test]
    fn ams_examples() {
        let a = m(&[&[1, 0], &[0, -1]]);
        let (x, y) = ams_factor(&a).unwrap();
        assert_eq!(x.commutator(&y).unwrap(), a);
        let e12 = m(&[&[0, 1], &[0, 0]]);
        let e21 = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(e12.commutator(&e21).unwrap(), a);

        let (x, y) = ams_factor(&Matrix::zeros(3, 3)).unwrap();
        assert!(x.is_zero() && y.is_zero());

        let b = m(&[&[3, -1, 2], &[7, 0, 5], &[1, 1, -3]]);
        let (x, y) = ams_factor(&b).unwrap();
        assert_eq!(x.commutator(&y).unwrap(), b);
        assert!(matches!(ams_factor(&Matrix::identity(2)), Err(Error::NonzeroTrace(_))));
        assert!(matches!(ams_factor(&Matrix::zeros(1, 2)), Err(Error::NotSquare { .. })));
        assert_eq!(ams_factor(&Matrix::zeros(1, 1)).unwrap().0, Matrix::zeros(1, 1));
    }
}
