//! Exact computations with finite-dimensional unital associative algebras
//! over the rationals: Wedderburn-Malcev data, the multitrace invariant,
//! Sylvester equations on bimodules and constructive factorization of
//! multitrace-zero elements of generalized block-triangular algebras as
//! commutators `[x, y]`.
//!
//! ```
//! use mtrace::algebra::build_ut;
//! use mtrace::factor::gbt_factor;
//!
//! let (alg, wm) = build_ut(&[2, 1]).unwrap();
//! let a = &alg.basis_element(1) + &alg.basis_element(2); // e12 + e13
//! let cert = gbt_factor(&alg, &wm, &a).unwrap();
//! assert!(cert.verified);
//! assert_eq!(alg.commutator(&cert.x, &cert.y).unwrap(), a);
//! ```

pub mod algebra;
pub mod error;
pub mod factor;
pub mod gallery;
pub mod json;
pub mod linalg;
pub mod multitrace;
pub mod sample;
pub mod sylvester;

pub use algebra::{Algebra, Element, Subspace, WmData};
pub use error::{Error, Result};
pub use factor::{gbt_factor, is_commutator, CommutatorDecision, FactorizationCertificate};
pub use linalg::{Matrix, Polynomial, Rational};
pub use multitrace::{multitrace, Multitrace};
