//! Semisimple projection and the multitrace invariant.

use num::Zero;

use crate::algebra::{Algebra, Element, Subspace, WmData};
use crate::error::{check_len, Error, Result};
use crate::linalg::{Matrix, Rational};

/// Multiset of block traces, stored as an ascending list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multitrace {
    values: Vec<Rational>,
}

impl Multitrace {
    pub fn new(mut values: Vec<Rational>) -> Self {
        values.sort();
        Multitrace { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        is_multitrace_zero(self)
    }
}

impl std::fmt::Display for Multitrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn is_multitrace_zero(mtr: &Multitrace) -> bool {
    mtr.values.iter().all(Zero::is_zero)
}

/// `a = sum_k embed(blocks[k]) + radical`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub blocks: Vec<Matrix>,
    pub radical: Element,
}

impl Projection {
    /// The semisimple part `b` as an algebra element.
    pub fn semisimple_part(&self, wm: &WmData) -> Element {
        let mut b = Element::zero(self.radical.dim());
        for (k, m) in self.blocks.iter().enumerate() {
            b = &b + &wm.embed_block(k, m);
        }
        b
    }
}

/// Splits `a = b + j` along the supplied decomposition.
///
/// Only checks that matrix units and radical basis together form a basis of
/// the algebra; run [`crate::algebra::verify_wm_data`] for the full check.
pub fn semisimple_projection(alg: &Algebra, wm: &WmData, a: &Element) -> Result<Projection> {
    check_len(alg.dim(), a.dim())?;
    let basis: Vec<Vec<Rational>> = wm
        .all_units()
        .chain(wm.radical_basis())
        .map(|v| v.coords().to_vec())
        .collect();
    if basis.len() != alg.dim() || basis.iter().any(|v| v.len() != alg.dim()) {
        return Err(Error::InvalidWmData(
            "matrix units and radical basis do not form a basis".into(),
        ));
    }
    let change = Matrix::from_columns(alg.dim(), &basis)?
        .inverse()
        .map_err(|_| Error::InvalidWmData("matrix units and radical basis are dependent".into()))?;
    let coords = change.apply(a.coords())?;

    let mut offset = 0;
    let mut blocks = Vec::with_capacity(wm.block_count());
    for &d in wm.block_sizes() {
        blocks.push(Matrix::from_vec(d, d, coords[offset..offset + d * d].to_vec())?);
        offset += d * d;
    }
    let radical = Element::combination(alg.dim(), coords[offset..].iter().zip(wm.radical_basis()));
    Ok(Projection { blocks, radical })
}

/// `mtr(a) = {tr(b_1), ..., tr(b_r)}`.
pub fn multitrace(alg: &Algebra, wm: &WmData, a: &Element) -> Result<Multitrace> {
    let proj = semisimple_projection(alg, wm, a)?;
    Ok(Multitrace::new(
        proj.blocks
            .iter()
            .map(|b| b.trace().expect("square block"))
            .collect(),
    ))
}

/// `a - sum_k (tr(b_k) / d_k) e_k`, the multitrace-zero element obtained by
/// removing the scalar part of each block.
pub fn multitrace_zero_part(alg: &Algebra, wm: &WmData, a: &Element) -> Result<Element> {
    let proj = semisimple_projection(alg, wm, a)?;
    let mut out = a.clone();
    for (k, b) in proj.blocks.iter().enumerate() {
        let d = Rational::from_integer(wm.block_sizes()[k].into());
        let s = b.trace().expect("square block") / d;
        out = &out - &wm.idempotent(k).scale(&s);
    }
    Ok(out)
}

/// Conjugates the matrix units by the unit `1 + r`, `r` in the radical:
/// `E -> (1 + r)^{-1} E (1 + r)`.
pub fn conjugate_wm(alg: &Algebra, wm: &WmData, rad_elem: &Element) -> Result<WmData> {
    check_len(alg.dim(), rad_elem.dim())?;
    if !Subspace::span(alg.dim(), wm.radical_basis()).contains(rad_elem) {
        return Err(Error::NotInRadical);
    }
    let u = alg.unit() + rad_elem;
    let u_inv = nilpotent_unit_inverse(alg, rad_elem).ok_or(Error::NotInRadical)?;
    let units = (0..wm.block_count())
        .map(|k| {
            wm.block_units(k)
                .into_iter()
                .flatten()
                .map(|e| alg.mul(&alg.mul(&u_inv, &e), &u))
                .collect()
        })
        .collect();
    Ok(wm.with_units(units))
}

/// `(1 + r)^{-1} = 1 - r + r^2 - ...`, or `None` if `r` is not nilpotent.
fn nilpotent_unit_inverse(alg: &Algebra, r: &Element) -> Option<Element> {
    let minus_r = -r;
    let mut term = alg.unit().clone();
    let mut sum = alg.zero();
    for _ in 0..=alg.dim() {
        if term.is_zero() {
            return Some(sum);
        }
        sum = &sum + &term;
        term = alg.mul(&term, &minus_r);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_ut, verify_wm_data};
    use crate::gallery::example0;
    use crate::linalg::{int, rat};

    #[test]
    fn projection_examples() {
        let (a, wm) = build_ut(&[2, 1]).unwrap();
        let p = semisimple_projection(&a, &wm, a.unit()).unwrap();
        assert_eq!(p.blocks, vec![Matrix::identity(2), Matrix::identity(1)]);
        assert!(p.radical.is_zero());

        let (ut2, wm) = build_ut(&[1, 1]).unwrap();
        let e12 = ut2.basis_element(1);
        let p = semisimple_projection(&ut2, &wm, &e12).unwrap();
        assert_eq!(p.blocks, vec![Matrix::zeros(1, 1), Matrix::zeros(1, 1)]);
        assert_eq!(p.radical, e12);

        let (ex, wm) = example0();
        let e13 = ex.basis_element(2);
        let p = semisimple_projection(&ex, &wm, &e13).unwrap();
        assert!(p.blocks.iter().all(Matrix::is_zero));
        assert_eq!(p.radical, e13);
    }

    #[test]
    fn projection_reassembles() {
        let (a, wm) = build_ut(&[2, 1]).unwrap();
        let x = Element::from_i64(&[1, -2, 3, 4, 5, -6, 7]);
        let p = semisimple_projection(&a, &wm, &x).unwrap();
        assert_eq!(&p.semisimple_part(&wm) + &p.radical, x);
        let again = semisimple_projection(&a, &wm, &p.semisimple_part(&wm)).unwrap();
        assert_eq!(again.blocks, p.blocks);
        assert!(again.radical.is_zero());
    }

    #[test]
    fn multitrace_examples() {
        let (a, wm) = build_ut(&[2, 1]).unwrap();
        assert_eq!(
            multitrace(&a, &wm, a.unit()).unwrap().values(),
            &[int(1), int(2)]
        );
        let (ex, wm) = example0();
        let m = multitrace(&ex, &wm, &ex.basis_element(2)).unwrap();
        assert_eq!(m.values(), &[int(0), int(0)]);
        assert!(m.is_zero());
    }

    #[test]
    fn multitrace_zero_test() {
        assert!(is_multitrace_zero(&Multitrace::new(vec![int(0), int(0)])));
        assert!(!is_multitrace_zero(&Multitrace::new(vec![int(1), int(2)])));
        assert!(!is_multitrace_zero(&Multitrace::new(vec![int(0), rat(1, 2)])));
        assert_eq!(Multitrace::new(vec![int(2), int(-1), int(2)]).to_string(), "{-1, 2, 2}");
    }

    #[test]
    fn zero_part_has_zero_multitrace() {
        let (a, wm) = build_ut(&[2, 1]).unwrap();
        let x = Element::from_i64(&[1, -2, 3, 4, 5, -6, 7]);
        let z = multitrace_zero_part(&a, &wm, &x).unwrap();
        assert!(multitrace(&a, &wm, &z).unwrap().is_zero());
    }

    #[test]
    fn conjugation_examples() {
        let (ut2, wm) = build_ut(&[1, 1]).unwrap();
        assert_eq!(conjugate_wm(&ut2, &wm, &ut2.zero()).unwrap(), wm);
        let e12 = ut2.basis_element(1);
        let conj = conjugate_wm(&ut2, &wm, &e12).unwrap();
        // (1 - e12) e11 (1 + e12) = e11 + e12
        assert_eq!(*conj.unit(0, 0, 0), Element::from_i64(&[1, 1, 0]));
        assert_eq!(*conj.unit(1, 0, 0), Element::from_i64(&[0, -1, 1]));
        assert!(verify_wm_data(&ut2, &conj).is_valid());
        assert_eq!(
            conjugate_wm(&ut2, &wm, &ut2.basis_element(0)).unwrap_err(),
            Error::NotInRadical
        );
    }

    #[test]
    fn invalid_decomposition_is_rejected() {
        let (ut2, wm) = build_ut(&[1, 1]).unwrap();
        let short = WmData::new(
            vec![1, 1],
            vec![wm.block_units(0), wm.block_units(1)],
            vec![],
        )
        .unwrap();
        assert!(matches!(
            multitrace(&ut2, &short, ut2.unit()),
            Err(Error::InvalidWmData(_))
        ));
    }
}
