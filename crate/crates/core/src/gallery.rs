//! The two counterexample algebras and their machine-checked facts.

use crate::algebra::{commutator_subspace, is_gbt, quotient_dim, verify_wm_data, Algebra, Element, Subspace, WmData};
use crate::linalg::Matrix;
use crate::multitrace::multitrace;

fn matrix_unit(n: usize, p: usize, q: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(p, q)] = crate::linalg::one();
    m
}

/// `{[[a, c, d], [0, a, 0], [0, 0, b]]}` with basis `e11+e22, e12, e13, e33`
/// and decomposition `K(e11+e22) + Ke33 + rad`, `rad = Ke12 + Ke13`.
pub fn example0() -> (Algebra, WmData) {
    let e = |p, q| matrix_unit(3, p, q);
    let basis = [&e(0, 0) + &e(1, 1), e(0, 1), e(0, 2), e(2, 2)];
    let labels = ["e11+e22", "e12", "e13", "e33"].map(String::from).to_vec();
    let alg = Algebra::from_matrix_basis(labels, &basis).expect("closed matrix basis");
    let b = |i| Element::basis(4, i);
    let wm = WmData::new(vec![1, 1], vec![vec![vec![b(0)]], vec![vec![b(3)]]], vec![b(1), b(2)])
        .expect("well-shaped data");
    (alg, wm)
}

/// `M_2(K)[x]/(x^2)`, realized as `a + bx -> [[a, b], [0, a]]` in `M_4`.
/// Basis `e11, e12, e21, e22, x e11, x e12, x e21, x e22`.
pub fn m2_dual() -> (Algebra, WmData) {
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for shift in [false, true] {
        for p in 0..2 {
            for q in 0..2 {
                let (row, col) = if shift { (p, q + 2) } else { (p, q) };
                let mut m = matrix_unit(4, row, col);
                if !shift {
                    m = &m + &matrix_unit(4, p + 2, q + 2);
                }
                basis.push(m);
                labels.push(format!("{}e{}{}", if shift { "x" } else { "" }, p + 1, q + 1));
            }
        }
    }
    let alg = Algebra::from_matrix_basis(labels, &basis).expect("closed matrix basis");
    let b = |i| Element::basis(8, i);
    let wm = WmData::new(
        vec![2],
        vec![vec![vec![b(0), b(1)], vec![b(2), b(3)]]],
        (4..8).map(b).collect(),
    )
    .expect("well-shaped data");
    (alg, wm)
}

/// A named fact about a gallery algebra, checkable with library operations.
#[derive(Debug, Clone)]
pub enum Fact {
    ValidDecomposition,
    Dim(usize),
    BlockCount(usize),
    Gbt(bool),
    QuotientDim(usize),
    /// `quotient_dim > r`
    BoundStrict,
    CommutatorSpanEquals(Subspace),
    CommutatorSpanWithin(Subspace),
    /// Multitrace zero, yet outside `[A, A]`.
    ZeroMultitraceOutsideSpan(Element),
}

#[derive(Debug, Clone)]
pub struct Assertion {
    pub name: String,
    pub fact: Fact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssertionOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub algebra: Algebra,
    pub wm: WmData,
    pub assertions: Vec<Assertion>,
}

impl GalleryEntry {
    pub fn run(&self) -> Vec<AssertionOutcome> {
        self.assertions
            .iter()
            .map(|a| {
                let (passed, detail) = self.check(&a.fact);
                AssertionOutcome {
                    name: a.name.clone(),
                    passed,
                    detail,
                }
            })
            .collect()
    }

    fn check(&self, fact: &Fact) -> (bool, String) {
        let alg = &self.algebra;
        let wm = &self.wm;
        match fact {
            Fact::ValidDecomposition => {
                let report = verify_wm_data(alg, wm);
                (report.is_valid(), report.to_string())
            }
            Fact::Dim(d) => (alg.dim() == *d, format!("dim = {}", alg.dim())),
            Fact::BlockCount(r) => (wm.block_count() == *r, format!("r = {}", wm.block_count())),
            Fact::Gbt(expected) => match is_gbt(alg, wm) {
                Ok(g) => (g == *expected, format!("is_gbt = {g}")),
                Err(e) => (false, e.to_string()),
            },
            Fact::QuotientDim(q) => {
                let got = quotient_dim(alg);
                (got == *q, format!("quotient_dim = {got}"))
            }
            Fact::BoundStrict => {
                let got = quotient_dim(alg);
                (got > wm.block_count(), format!("quotient_dim = {got}, r = {}", wm.block_count()))
            }
            Fact::CommutatorSpanEquals(s) => {
                let span = commutator_subspace(alg);
                (span == *s, format!("dim [A,A] = {}", span.dim()))
            }
            Fact::CommutatorSpanWithin(s) => {
                let span = commutator_subspace(alg);
                (span.is_subspace_of(s), format!("dim [A,A] = {}, container dim = {}", span.dim(), s.dim()))
            }
            Fact::ZeroMultitraceOutsideSpan(x) => {
                let zero = multitrace(alg, wm, x).map(|m| m.is_zero()).unwrap_or(false);
                let outside = !commutator_subspace(alg).contains(x);
                (
                    zero && outside,
                    format!("multitrace zero = {zero}, outside [A,A] = {outside}"),
                )
            }
        }
    }
}

pub const GALLERY_NAMES: [&str; 2] = ["example0", "m2_dual"];

fn assertion(name: &str, fact: Fact) -> Assertion {
    Assertion {
        name: name.to_string(),
        fact,
    }
}

fn by_label(alg: &Algebra, label: &str) -> Element {
    let i = alg.labels().iter().position(|l| l == label).expect("known label");
    alg.basis_element(i)
}

pub fn gallery_entry(name: &str) -> Option<GalleryEntry> {
    match name {
        "example0" => {
            let (algebra, wm) = example0();
            let e13 = Subspace::span(4, &[by_label(&algebra, "e13")]);
            let e12 = by_label(&algebra, "e12");
            let assertions = vec![
                assertion("wm_data_valid", Fact::ValidDecomposition),
                assertion("dim_is_4", Fact::Dim(4)),
                assertion("r_is_2", Fact::BlockCount(2)),
                assertion("quotient_dim_is_3", Fact::QuotientDim(3)),
                assertion("commutator_span_is_K_e13", Fact::CommutatorSpanEquals(e13)),
                assertion("not_gbt", Fact::Gbt(false)),
                assertion("e12_zero_multitrace_not_in_span", Fact::ZeroMultitraceOutsideSpan(e12)),
            ];
            Some(GalleryEntry {
                name: "example0",
                algebra,
                wm,
                assertions,
            })
        }
        "m2_dual" => {
            let (algebra, wm) = m2_dual();
            let l = |s: &str| by_label(&algebra, s);
            let sl2_pair = Subspace::span(
                8,
                &[
                    l("e12"),
                    l("e21"),
                    &l("e11") - &l("e22"),
                    l("xe12"),
                    l("xe21"),
                    &l("xe11") - &l("xe22"),
                ],
            );
            let x = &l("xe11") + &l("xe22");
            let assertions = vec![
                assertion("wm_data_valid", Fact::ValidDecomposition),
                assertion("dim_is_8", Fact::Dim(8)),
                assertion("r_is_1", Fact::BlockCount(1)),
                assertion("commutator_span_within_sl2_plus_sl2x", Fact::CommutatorSpanWithin(sl2_pair.clone())),
                assertion("commutator_span_is_sl2_plus_sl2x", Fact::CommutatorSpanEquals(sl2_pair)),
                assertion("quotient_dim_is_2", Fact::QuotientDim(2)),
                assertion("bound_is_strict", Fact::BoundStrict),
                assertion("not_gbt", Fact::Gbt(false)),
                assertion("x_zero_multitrace_not_in_span", Fact::ZeroMultitraceOutsideSpan(x)),
            ];
            Some(GalleryEntry {
                name: "m2_dual",
                algebra,
                wm,
                assertions,
            })
        }
        _ => None,
    }
}
