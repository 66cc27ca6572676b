mod common;

use mtrace::algebra::{build_ut, commutator_subspace, quotient_dim, verify_wm_data};
use mtrace::factor::ams_factor;
use mtrace::json;
use mtrace::linalg::{format_rational, parse_rational, poly_gcd, solve_linear, Matrix, Polynomial, Rational, SolveResult};
use mtrace::multitrace::{conjugate_wm, multitrace, multitrace_zero_part, semisimple_projection};
use mtrace::sample;
use mtrace::sylvester::{find_shift, shift_candidates, solve_sylvester, spectra_disjoint, BimoduleProblem, SylvesterSolution};
use mtrace::gbt_factor;
use num::{BigInt, Zero};
use proptest::prelude::*;

use common::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

fn square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(rational(), n * n).prop_map(move |d| Matrix::from_vec(n, n, d).unwrap())
    })
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(Polynomial::new)
}

fn ut_index() -> impl Strategy<Value = usize> {
    0..UT_FAMILY.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cayley_hamilton(m in square(5)) {
        let p = m.char_poly().unwrap();
        prop_assert_eq!(p.degree(), Some(m.rows()));
        prop_assert!(p.eval_matrix(&m).unwrap().is_zero());
        // constant term is (-1)^n det
        let sign = if m.rows() % 2 == 0 { Rational::from_integer(1.into()) } else { Rational::from_integer((-1).into()) };
        prop_assert_eq!(&p.coeffs()[0], &(sign * m.determinant().unwrap()));
    }

    #[test]
    fn gcd_bezout_identity(p in poly(4), q in poly(4)) {
        prop_assume!(!(p.is_zero() && q.is_zero()));
        let g = poly_gcd(&p, &q).unwrap();
        prop_assert_eq!(&(&(&p * &g.r) + &(&q * &g.s)), &g.gcd);
        prop_assert_eq!(g.gcd.leading(), Some(&Rational::from_integer(1.into())));
        for f in [&p, &q] {
            if !f.is_zero() {
                prop_assert!(f.div_rem(&g.gcd).unwrap().1.is_zero());
            }
        }
    }

    #[test]
    fn solve_linear_solutions_check(
        m in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| prop::collection::vec(rational(), r * c)
            .prop_map(move |d| Matrix::from_vec(r, c, d).unwrap())),
        seed in any::<u64>(),
    ) {
        let mut rng = sample::rng(seed);
        // rhs in the image, so a solution must exist
        let x0: Vec<Rational> = (0..m.cols()).map(|_| sample::small_rational(&mut rng, 5)).collect();
        let rhs = m.apply(&x0).unwrap();
        match solve_linear(&m, &rhs).unwrap() {
            SolveResult::Solution { particular, kernel } => {
                prop_assert_eq!(m.apply(&particular).unwrap(), rhs);
                prop_assert_eq!(kernel.len(), m.cols() - m.rank());
                for k in &kernel {
                    prop_assert!(m.apply(k).unwrap().iter().all(|v| v.is_zero()));
                }
            }
            SolveResult::NoSolution => prop_assert!(false, "consistent system reported unsolvable"),
        }
    }

    #[test]
    fn rational_text_round_trip(x in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn ams_reproduces_trace_zero_input(seed in any::<u64>(), n in 1usize..=5) {
        let a = sample::trace_zero_matrix(&mut sample::rng(seed), n, 9);
        let (x, y) = ams_factor(&a).unwrap();
        prop_assert_eq!(x.commutator(&y).unwrap(), a);
    }

    #[test]
    fn commutators_have_zero_multitrace(k in ut_index(), seed in any::<u64>()) {
        let (alg, wm) = build_ut(UT_FAMILY[k]).unwrap();
        let mut rng = sample::rng(seed);
        let x = sample::element(&mut rng, alg.dim(), 9);
        let y = sample::element(&mut rng, alg.dim(), 9);
        prop_assert!(multitrace(&alg, &wm, &alg.commutator(&x, &y).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn multitrace_is_additive_and_sorted(k in ut_index(), seed in any::<u64>()) {
        let (alg, wm) = build_ut(UT_FAMILY[k]).unwrap();
        let mut rng = sample::rng(seed);
        let a = sample::element(&mut rng, alg.dim(), 9);
        let zero_part = multitrace_zero_part(&alg, &wm, &a).unwrap();
        prop_assert!(multitrace(&alg, &wm, &zero_part).unwrap().is_zero());
        let values = multitrace(&alg, &wm, &a).unwrap();
        prop_assert!(values.values().windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(values.values().len(), wm.block_count());
    }

    #[test]
    fn projection_is_idempotent(k in ut_index(), seed in any::<u64>()) {
        let (alg, wm) = build_ut(UT_FAMILY[k]).unwrap();
        let a = sample::element(&mut sample::rng(seed), alg.dim(), 9);
        let proj = semisimple_projection(&alg, &wm, &a).unwrap();
        let s = proj.semisimple_part(&wm);
        prop_assert_eq!(&(&s + &proj.radical), &a);
        let again = semisimple_projection(&alg, &wm, &s).unwrap();
        prop_assert_eq!(again.semisimple_part(&wm), s);
        prop_assert!(again.radical.is_zero());
    }

    #[test]
    fn conjugated_wm_data_is_valid_and_agrees(k in ut_index(), seed in any::<u64>()) {
        let (alg, wm) = build_ut(UT_FAMILY[k]).unwrap();
        let mut rng = sample::rng(seed);
        let r = sample::radical_element(&mut rng, &alg, &wm, 9);
        let conj = conjugate_wm(&alg, &wm, &r).unwrap();
        prop_assert!(verify_wm_data(&alg, &conj).is_valid());
        let a = sample::element(&mut rng, alg.dim(), 9);
        prop_assert_eq!(multitrace(&alg, &wm, &a).unwrap(), multitrace(&alg, &conj, &a).unwrap());
    }

    #[test]
    fn sylvester_round_trip(seed in any::<u64>(), p in 1usize..=3, q in 1usize..=2) {
        let mut rng = sample::rng(seed);
        let a = sample::matrix(&mut rng, p, p, 9);
        let b = sample::matrix(&mut rng, q, q, 9);
        let left = kron(&a, &Matrix::identity(q));
        let right = kron(&Matrix::identity(p), &b.transpose());
        let rhs: Vec<Rational> = (0..p * q).map(|_| sample::small_rational(&mut rng, 9)).collect();
        let problem = BimoduleProblem::new(left.clone(), right.clone(), rhs.clone()).unwrap();
        let disjoint = spectra_disjoint(&left, &right).unwrap();
        match solve_sylvester(&problem) {
            SylvesterSolution::Unique(x) => {
                prop_assert!(disjoint);
                prop_assert_eq!(problem.operator().apply(&x).unwrap(), rhs);
            }
            SylvesterSolution::NonUnique { x, kernel } => {
                prop_assert!(!disjoint && !kernel.is_empty());
                prop_assert_eq!(problem.operator().apply(&x).unwrap(), rhs);
            }
            SylvesterSolution::NoSolution => prop_assert!(!disjoint),
        }
    }

    #[test]
    fn find_shift_is_first_good_candidate(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = sample::rng(seed);
        let dl: Vec<i64> = (0..n).map(|_| rand::Rng::gen_range(&mut rng, -2..=2)).collect();
        let dr: Vec<i64> = (0..n).map(|_| rand::Rng::gen_range(&mut rng, -2..=2)).collect();
        let left = with_spectrum(&mut rng, &dl);
        let right = with_spectrum(&mut rng, &dr);
        let lambda = find_shift(&left, &right).unwrap();
        for c in shift_candidates() {
            let good = spectra_disjoint(&(&left + &Matrix::scalar(n, &c)), &right).unwrap();
            if c == lambda {
                prop_assert!(good);
                break;
            }
            prop_assert!(!good, "earlier candidate {} already works", c);
        }
    }

    #[test]
    fn factorization_certificates_verify(k in ut_index(), seed in any::<u64>()) {
        let (alg, wm) = build_ut(UT_FAMILY[k]).unwrap();
        let a = sample::multitrace_zero_element(&mut sample::rng(seed), &alg, &wm, 9).unwrap();
        let cert = gbt_factor(&alg, &wm, &a).unwrap();
        prop_assert!(cert.verified);
        prop_assert_eq!(alg.commutator(&cert.x, &cert.y).unwrap(), a);
    }

    #[test]
    fn json_round_trips(k in ut_index(), seed in any::<u64>()) {
        let (alg, wm) = build_ut(UT_FAMILY[k]).unwrap();
        let text = serde_json::to_string(&json::algebra_to_json(&alg, Some(&wm))).unwrap();
        let (alg2, wm2) = json::algebra_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(&alg2, &alg);
        prop_assert_eq!(wm2.as_ref(), Some(&wm));

        let a = sample::multitrace_zero_element(&mut sample::rng(seed), &alg, &wm, 9).unwrap();
        let cert = gbt_factor(&alg, &wm, &a).unwrap();
        let text = serde_json::to_string(&json::certificate_to_json(&cert)).unwrap();
        let back = json::certificate_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, cert);
    }
}

#[test]
fn quotient_bound_on_random_triangular_algebras() {
    let mut rng = sample::rng(sample::DEFAULT_SEED);
    for _ in 0..10 {
        let t = random_triangular(&mut rng);
        assert!(verify_wm_data(&t.algebra, &t.wm).is_valid());
        let q = quotient_dim(&t.algebra);
        assert_eq!(q, t.wm.block_count());
        assert_eq!(commutator_subspace(&t.algebra).dim() + q, t.algebra.dim());
    }
}

#[test]
fn bezout_oracle_matches_hand_example() {
    // L = diag(1, 2), R = 0: x = L^{-1} c
    let left = Matrix::from_i64(&[&[1, 0], &[0, 2]]);
    let right = Matrix::zeros(2, 2);
    let c = vec![Rational::from_integer(3.into()), Rational::from_integer(4.into())];
    let x = bezout_solution(&left, &right, &c);
    assert_eq!(x, vec![Rational::from_integer(3.into()), Rational::from_integer(2.into())]);
}

#[test]
fn random_triangular_is_deterministic() {
    let a = random_triangular(&mut sample::rng(7));
    let b = random_triangular(&mut sample::rng(7));
    assert_eq!(a.algebra, b.algebra);
}
