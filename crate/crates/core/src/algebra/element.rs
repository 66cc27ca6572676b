use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::Zero;

use crate::linalg::{int, Rational};

/// Coordinate vector of an algebra element in the algebra's basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Rational>,
}

impl Element {
    pub fn new(coords: Vec<Rational>) -> Self {
        Element { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Element::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Element::new(vec![Rational::zero(); dim])
    }

    /// The `i`-th basis vector of a `dim`-dimensional algebra.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Element::zero(dim);
        e.coords[i] = int(1);
        e
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Element {
        Element::new(self.coords.iter().map(|c| c * s).collect())
    }

    /// Linear combination `sum c_i v_i`; `dim` is used when the list is empty.
    pub fn combination<'a>(
        dim: usize,
        terms: impl IntoIterator<Item = (&'a Rational, &'a Element)>,
    ) -> Element {
        let mut out = Element::zero(dim);
        for (c, v) in terms {
            if c.is_zero() {
                continue;
            }
            assert_eq!(v.dim(), dim, "element dimension mismatch");
            for (o, x) in out.coords.iter_mut().zip(&v.coords) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element::new(self.coords.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}
