//! Knot and lens-space invariants behind small-surgery SU(2) certificates.
//!
//! The crate is organized bottom-up:
//!
//! - [`laurent`]: exact Laurent polynomials, cyclotomics, resultants.
//! - [`knot_invariants`]: torus-knot Alexander polynomials, determinants,
//!   instanton L-space Alexander patterns, framed instanton dimensions.
//! - [`lens_simple`]: the primitive simple knots `S(p, 2q, 10q)` in `L(p, 2q)`.
//! - [`cover_arith`]: branched cyclic cover orders and the cyclotomic
//!   nondegeneracy criterion; cyclic representation angles.
//! - [`certifier`]: the slope classification pipeline.
//! - [`su2`]: presentations, abelianizations and a numerical search for
//!   irreducible SU(2) representations.
//! - [`acceptance`]: the end-to-end checks behind `su2cert selftest`.

pub mod acceptance;
pub mod certifier;
pub mod cover_arith;
pub mod error;
pub mod knot_invariants;
pub mod laurent;
pub mod lens_simple;
pub mod slope;
pub mod su2;

pub use error::{Error, Result};
pub use laurent::{IntPoly, LaurentPoly};
pub use slope::Slope;
