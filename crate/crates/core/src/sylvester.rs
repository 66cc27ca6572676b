//! Sylvester equations `a x - x b = c` on a finite-dimensional bimodule,
//! posed through the operator matrices of `L_a` and `R_b`.
//!
//! Spectral disjointness in the algebraic closure is decided without
//! eigenvalues: the characteristic polynomials share a root iff their gcd
//! over the rationals is non-constant.

use num::Zero;

use crate::error::{check_len, Error, Result};
use crate::linalg::{poly_gcd, solve_linear, Matrix, Polynomial, Rational, SolveResult};

/// `(L_a - R_b) x = c` on a bimodule of dimension `m_dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleProblem {
    left_op: Matrix,
    right_op: Matrix,
    rhs: Vec<Rational>,
}

impl BimoduleProblem {
    /// Rejects operators that do not commute, since left and right actions
    /// of a bimodule always do.
    pub fn new(left_op: Matrix, right_op: Matrix, rhs: Vec<Rational>) -> Result<Self> {
        require_same_square(&left_op, &right_op)?;
        check_len(left_op.rows(), rhs.len())?;
        if &left_op * &right_op != &right_op * &left_op {
            return Err(Error::NonCommutingOperators);
        }
        Ok(BimoduleProblem {
            left_op,
            right_op,
            rhs,
        })
    }

    pub fn m_dim(&self) -> usize {
        self.rhs.len()
    }

    pub fn left_op(&self) -> &Matrix {
        &self.left_op
    }

    pub fn right_op(&self) -> &Matrix {
        &self.right_op
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// `L_a - R_b`
    pub fn operator(&self) -> Matrix {
        &self.left_op - &self.right_op
    }
}

fn require_same_square(left: &Matrix, right: &Matrix) -> Result<()> {
    for m in [left, right] {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
    }
    check_len(left.rows(), right.rows())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SylvesterSolution {
    Unique(Vec<Rational>),
    NonUnique {
        x: Vec<Rational>,
        kernel: Vec<Vec<Rational>>,
    },
    NoSolution,
}

impl SylvesterSolution {
    pub fn solution(&self) -> Option<&[Rational]> {
        match self {
            SylvesterSolution::Unique(x) | SylvesterSolution::NonUnique { x, .. } => Some(x),
            SylvesterSolution::NoSolution => None,
        }
    }
}

/// True iff `char(left)` and `char(right)` are coprime.
pub fn spectra_disjoint(left_op: &Matrix, right_op: &Matrix) -> Result<bool> {
    require_same_square(left_op, right_op)?;
    coprime(&left_op.char_poly()?, &right_op.char_poly()?)
}

fn coprime(p: &Polynomial, q: &Polynomial) -> Result<bool> {
    Ok(poly_gcd(p, q)?.is_coprime())
}

/// Solves the vectorized system exactly and classifies the solution set.
pub fn solve_sylvester(problem: &BimoduleProblem) -> SylvesterSolution {
    match solve_linear(&problem.operator(), &problem.rhs).expect("shapes checked at construction") {
        SolveResult::NoSolution => SylvesterSolution::NoSolution,
        SolveResult::Solution { particular, kernel } if kernel.is_empty() => {
            SylvesterSolution::Unique(particular)
        }
        SolveResult::Solution { particular, kernel } => SylvesterSolution::NonUnique {
            x: particular,
            kernel,
        },
    }
}

/// The candidate shifts `0, 1, -1, 2, -2, ...` in search order.
pub fn shift_candidates() -> impl Iterator<Item = Rational> {
    (0i64..).flat_map(|k| {
        let first = (k == 0).then(Rational::zero);
        let pair = (k > 0).then(|| [Rational::from_integer(k.into()), -Rational::from_integer(k.into())]);
        first.into_iter().chain(pair.into_iter().flatten())
    })
}

/// First `λ` in [`shift_candidates`] with `Spec(left + λI)` disjoint from
/// `Spec(right)`.
///
/// At most `n^2` candidates can fail, because a bad `λ` is a difference of a
/// root of `char(right)` and a root of `char(left)`.
pub fn find_shift(left_op: &Matrix, right_op: &Matrix) -> Result<Rational> {
    require_same_square(left_op, right_op)?;
    let p = left_op.char_poly()?;
    let q = right_op.char_poly()?;
    for lambda in shift_candidates() {
        // char(left + λI)(t) = p(t - λ)
        if coprime(&p.translate(&-lambda.clone()), &q)? {
            return Ok(lambda);
        }
    }
    unreachable!("only finitely many shifts share a root")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    #[test]
    fn spectra_disjoint_examples() {
        assert!(spectra_disjoint(&m(&[&[2]]), &m(&[&[1]])).unwrap());
        assert!(!spectra_disjoint(&m(&[&[1]]), &m(&[&[1]])).unwrap());
        assert!(spectra_disjoint(&m(&[&[0, 1], &[0, 0]]), &m(&[&[3, 0], &[0, 3]])).unwrap());
        assert!(spectra_disjoint(&m(&[&[1]]), &m(&[&[1, 0], &[0, 1]])).is_err());
        // irrational eigenvalues ±√2 shared: gcd is t^2 - 2
        let r2 = m(&[&[0, 2], &[1, 0]]);
        let r2b = m(&[&[0, 1], &[2, 0]]);
        assert!(!spectra_disjoint(&r2, &r2b).unwrap());
    }

    #[test]
    fn solve_examples() {
        let p = BimoduleProblem::new(m(&[&[2]]), m(&[&[1]]), vec![int(5)]).unwrap();
        assert_eq!(solve_sylvester(&p), SylvesterSolution::Unique(vec![int(5)]));
        let p = BimoduleProblem::new(m(&[&[1]]), m(&[&[1]]), vec![int(0)]).unwrap();
        assert_eq!(
            solve_sylvester(&p),
            SylvesterSolution::NonUnique {
                x: vec![int(0)],
                kernel: vec![vec![int(1)]]
            }
        );
        let p = BimoduleProblem::new(m(&[&[1]]), m(&[&[1]]), vec![int(1)]).unwrap();
        assert_eq!(solve_sylvester(&p), SylvesterSolution::NoSolution);
    }

    #[test]
    fn rejects_non_commuting_operators() {
        let err = BimoduleProblem::new(
            m(&[&[0, 1], &[0, 0]]),
            m(&[&[0, 0], &[1, 0]]),
            vec![int(0), int(0)],
        )
        .unwrap_err();
        assert_eq!(err, Error::NonCommutingOperators);
        assert!(BimoduleProblem::new(m(&[&[1]]), m(&[&[1]]), vec![]).is_err());
    }

    #[test]
    fn candidate_order() {
        let c: Vec<Rational> = shift_candidates().take(5).collect();
        assert_eq!(c, vec![int(0), int(1), int(-1), int(2), int(-2)]);
    }

    #[test]
    fn find_shift_examples() {
        assert_eq!(find_shift(&m(&[&[2]]), &m(&[&[1]])).unwrap(), int(0));
        assert_eq!(find_shift(&m(&[&[1]]), &m(&[&[1]])).unwrap(), int(1));
        // {0,1} vs {1,2}: λ = 0 and λ = 1 collide, λ = -1 gives {-1, 0}
        let left = m(&[&[0, 0], &[0, 1]]);
        let right = m(&[&[1, 0], &[0, 2]]);
        assert_eq!(find_shift(&left, &right).unwrap(), int(-1));
        let shifted = &left + &Matrix::scalar(2, &int(-1));
        assert!(spectra_disjoint(&shifted, &right).unwrap());
    }
}
