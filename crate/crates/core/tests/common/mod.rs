//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use mtrace::algebra::{build_semisimple, build_triangular, build_ut, BimoduleAction, TriangularAlgebra};
use mtrace::gallery;
use mtrace::linalg::{int, Matrix, Polynomial, Rational};
use mtrace::{Algebra, WmData};
use rand::Rng;

/// Block shapes of the upper block-triangular family used throughout.
pub const UT_FAMILY: [&[usize]; 7] = [&[1, 1], &[2, 1], &[1, 2], &[2, 2], &[1, 1, 1], &[2, 2, 1], &[3, 2]];

pub fn ut_family() -> Vec<(String, Algebra, WmData)> {
    UT_FAMILY
        .iter()
        .map(|blocks| {
            let (alg, wm) = build_ut(blocks).unwrap();
            (format!("ut{blocks:?}"), alg, wm)
        })
        .collect()
}

pub fn gallery_algebras() -> Vec<(String, Algebra, WmData)> {
    vec![
        ("example0".into(), gallery::example0().0, gallery::example0().1),
        ("m2_dual".into(), gallery::m2_dual().0, gallery::m2_dual().1),
    ]
}

/// Matrix unit `E_pq` of size `n`.
pub fn unit_matrix(n: usize, p: usize, q: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(p, q)] = int(1);
    m
}

/// Kronecker product.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (r, c) = (a.rows() * b.rows(), a.cols() * b.cols());
    let mut out = Matrix::zeros(r, c);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out[(i * b.rows() + k, j * b.cols() + l)] = &a[(i, j)] * &b[(k, l)];
                }
            }
        }
    }
    out
}

/// Random invertible integer matrix: unit lower times unit upper triangular.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = int(rng.gen_range(-2..=2));
            upper[(j, i)] = int(rng.gen_range(-2..=2));
        }
    }
    &lower * &upper
}

/// Upper triangular integer matrix with the given diagonal, conjugated by a
/// random invertible matrix.
pub fn with_spectrum<R: Rng>(rng: &mut R, diag: &[i64]) -> Matrix {
    let n = diag.len();
    let mut t = Matrix::zeros(n, n);
    for i in 0..n {
        t[(i, i)] = int(diag[i]);
        for j in i + 1..n {
            t[(i, j)] = int(rng.gen_range(-3..=3));
        }
    }
    let p = random_invertible(rng, n);
    &(&p * &t) * &p.inverse().unwrap()
}

/// Random triangular algebra `[[A1, M], [0, A2]]` over semisimple `A1`, `A2`.
///
/// `M` is a direct sum of blocks `K^{d_i x e_j}` (matrices acted on by
/// multiplication) for a random nonempty set of block pairs `(i, j)`, written
/// in coordinates twisted by a random invertible matrix so that the action
/// matrices are not simply matrix units.
pub fn random_triangular<R: Rng>(rng: &mut R) -> TriangularAlgebra {
    let mut blocks = |max_blocks: usize| -> Vec<usize> {
        let count = rng.gen_range(1..=max_blocks);
        (0..count).map(|_| rng.gen_range(1..=2)).collect()
    };
    let left_sizes = blocks(2);
    let right_sizes = blocks(2);
    let mut pairs = Vec::new();
    for i in 0..left_sizes.len() {
        for j in 0..right_sizes.len() {
            if rng.gen_bool(0.6) {
                pairs.push((i, j));
            }
        }
    }
    if pairs.is_empty() {
        pairs.push((rng.gen_range(0..left_sizes.len()), rng.gen_range(0..right_sizes.len())));
    }
    let (a1, w1) = build_semisimple(&left_sizes).unwrap();
    let (a2, w2) = build_semisimple(&right_sizes).unwrap();

    let dim: usize = pairs.iter().map(|&(i, j)| left_sizes[i] * right_sizes[j]).sum();
    let action_on = |sizes: &[usize], on_left: bool| -> Vec<Matrix> {
        let mut mats = Vec::new();
        for (k, &n) in sizes.iter().enumerate() {
            for p in 0..n {
                for q in 0..n {
                    let mut big = Matrix::zeros(dim, dim);
                    let mut offset = 0;
                    for &(i, j) in &pairs {
                        let (d, e) = (left_sizes[i], right_sizes[j]);
                        // row-major vec: vec(E m) = (E ⊗ I) vec m, vec(m E) = (I ⊗ E^T) vec m
                        let hit = if on_left { i == k } else { j == k };
                        if hit {
                            let local = if on_left {
                                kron(&unit_matrix(d, p, q), &Matrix::identity(e))
                            } else {
                                kron(&Matrix::identity(d), &unit_matrix(e, p, q).transpose())
                            };
                            for r in 0..d * e {
                                for c in 0..d * e {
                                    big[(offset + r, offset + c)] = local[(r, c)].clone();
                                }
                            }
                        }
                        offset += d * e;
                    }
                    mats.push(big);
                }
            }
        }
        mats
    };
    let twist = random_invertible(rng, dim);
    let untwist = twist.inverse().unwrap();
    let conj = |m: &Matrix| &(&twist * m) * &untwist;
    let action = BimoduleAction {
        dim,
        left: action_on(&left_sizes, true).iter().map(conj).collect(),
        right: action_on(&right_sizes, false).iter().map(conj).collect(),
    };
    build_triangular((&a1, &w1), (&a2, &w2), &action).unwrap()
}

/// Solution of `(L - R) x = c` built from a Bezout identity `p r + q s = 1`
/// for `p = char(L)`, `q = char(R)`: with `p(t) - p(s) = (t - s) h(t, s)`,
/// `x = -h(L, R) r(R) c`. Needs `L R = R L`.
pub fn bezout_solution(left: &Matrix, right: &Matrix, rhs: &[Rational]) -> Vec<Rational> {
    let p = left.char_poly().unwrap();
    let q = right.char_poly().unwrap();
    let g = mtrace::linalg::poly_gcd(&p, &q).unwrap();
    assert!(g.is_coprime());
    let n = left.rows();
    let powers = |m: &Matrix, count: usize| {
        let mut out = vec![Matrix::identity(n)];
        for k in 1..count {
            out.push(&out[k - 1] * m);
        }
        out
    };
    let deg = p.degree().unwrap();
    let lp = powers(left, deg.max(1));
    let rp = powers(right, deg.max(1));
    let mut h = Matrix::zeros(n, n);
    for (k, coeff) in p.coeffs().iter().enumerate().skip(1) {
        for i in 0..k {
            let term = &lp[i] * &rp[k - 1 - i];
            h = &h + &term.scale(coeff);
        }
    }
    let r_of_right = g.r.eval_matrix(right).unwrap();
    let x = (&h * &r_of_right).apply(rhs).unwrap();
    x.into_iter().map(|v| -v).collect()
}

/// `p(t) = prod (t - root)`.
pub fn poly_from_roots(roots: &[i64]) -> Polynomial {
    roots
        .iter()
        .fold(Polynomial::one(), |acc, &r| &acc * &Polynomial::linear_root(&int(r)))
}
