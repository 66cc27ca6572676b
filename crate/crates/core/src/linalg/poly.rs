use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::{Matrix, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial with rational coefficients, lowest degree first.
///
/// The coefficient list never ends in a zero; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `t - root`
    pub fn linear_root(root: &Rational) -> Self {
        Polynomial::new(vec![-root.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Polynomial::zero(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Evaluates at a square matrix by Horner's scheme.
    pub fn eval_matrix(&self, m: &Matrix) -> Result<Matrix> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::scalar(n, c);
        }
        Ok(acc)
    }

    /// Returns `p(t + c)`.
    pub fn translate(&self, c: &Rational) -> Polynomial {
        let shift = Polynomial::new(vec![c.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, k| {
                &(&acc * &shift) + &Polynomial::constant(k.clone())
            })
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Option<(Polynomial, Polynomial)> {
        let dd = divisor.degree()?;
        let lc_inv = divisor.leading()?.recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() * &lc_inv;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * d;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Some((Polynomial::new(quot), Polynomial::new(rem)))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        Polynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &-rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Monic gcd with Bezout cofactors: `p * r + q * s = gcd`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdResult {
    pub gcd: Polynomial,
    pub r: Polynomial,
    pub s: Polynomial,
}

impl GcdResult {
    /// The inputs are coprime exactly when the gcd is constant.
    pub fn is_coprime(&self) -> bool {
        self.gcd.is_unit()
    }
}

/// Extended Euclidean algorithm over the rationals.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<GcdResult> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::BothZero);
    }
    // invariant: a = p*ra + q*sa, b = p*rb + q*sb
    let (mut a, mut ra, mut sa) = (p.clone(), Polynomial::one(), Polynomial::zero());
    let (mut b, mut rb, mut sb) = (q.clone(), Polynomial::zero(), Polynomial::one());
    while !b.is_zero() {
        let (quot, rem) = a.div_rem(&b).expect("nonzero divisor");
        let rn = &ra - &(&quot * &rb);
        let sn = &sa - &(&quot * &sb);
        a = std::mem::replace(&mut b, rem);
        ra = std::mem::replace(&mut rb, rn);
        sa = std::mem::replace(&mut sb, sn);
    }
    let lc_inv = a.leading().expect("gcd is nonzero").recip();
    Ok(GcdResult {
        gcd: a.scale(&lc_inv),
        r: ra.scale(&lc_inv),
        s: sa.scale(&lc_inv),
    })
}
