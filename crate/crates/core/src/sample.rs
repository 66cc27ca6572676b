//! Seeded random inputs for tests and the CLI. All generators draw from
//! ChaCha8 so a seed reproduces the same values across platforms.

use num::{BigInt, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element, WmData};
use crate::error::Result;
use crate::linalg::{Matrix, Rational};
use crate::multitrace::multitrace_zero_part;

pub const DEFAULT_SEED: u64 = 0x5eed;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| <= bound` and `1 <= q <= bound`.
pub fn small_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound.max(1));
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn small_integer<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    Rational::from_integer(rng.gen_range(-bound..=bound).into())
}

pub fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = (0..rows * cols).map(|_| small_rational(rng, bound)).collect();
    Matrix::from_vec(rows, cols, data).expect("sized data")
}

pub fn integer_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = (0..rows * cols).map(|_| small_integer(rng, bound)).collect();
    Matrix::from_vec(rows, cols, data).expect("sized data")
}

/// Random trace-zero matrix with every entry drawn as in [`small_rational`].
///
/// Off-diagonal entries are free; the diagonal is redrawn until the entry
/// forced by the trace condition is itself within `bound`.
pub fn trace_zero_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Matrix {
    let mut m = matrix(rng, n, n, bound);
    if n == 0 {
        return m;
    }
    let limit = BigInt::from(bound.max(1));
    loop {
        let diag: Vec<Rational> = (0..n - 1).map(|_| small_rational(rng, bound)).collect();
        let last = -diag.iter().sum::<Rational>();
        if last.numer().abs() <= limit && last.denom() <= &limit {
            for (i, d) in diag.into_iter().chain([last]).enumerate() {
                m[(i, i)] = d;
            }
            return m;
        }
    }
}

pub fn element<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> Element {
    Element::new((0..dim).map(|_| small_rational(rng, bound)).collect())
}

pub fn multitrace_zero_element<R: Rng>(rng: &mut R, alg: &Algebra, wm: &WmData, bound: i64) -> Result<Element> {
    multitrace_zero_part(alg, wm, &element(rng, alg.dim(), bound))
}

/// Random combination of the supplied radical basis.
pub fn radical_element<R: Rng>(rng: &mut R, alg: &Algebra, wm: &WmData, bound: i64) -> Element {
    let coeffs: Vec<Rational> = wm.radical_basis().iter().map(|_| small_rational(rng, bound)).collect();
    Element::combination(alg.dim(), coeffs.iter().zip(wm.radical_basis()))
}
