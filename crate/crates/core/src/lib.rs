//! Exact arithmetic for the Padé approximants of the truncated exponential.
//!
//! The approximants `P(u,v,x)` and `Q(u,v,x)` are shifted generalized Laguerre
//! polynomials. This crate constructs them with exact integer coefficients and
//! certifies their irreducibility and Galois groups with p-adic Newton
//! polygons, Dedekind cycle types and discriminant square classes.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, JSON and the
//! command line live in the companion `pade-galois-cli` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod families;
pub mod galois;
pub mod newton;
pub mod numeric;
pub mod poly;

pub use error::{Error, Result};
pub use families::{Family, FamilySpec};
pub use galois::{
    AnEvidence, Conclusion, GaloisCertificate, GroupKind, GroupTag, IrreducibilityEvidence,
};
pub use newton::{NewtonPolygon, Segment};
pub use numeric::{Rational, SquareClass};
pub use poly::{ModPolynomial, Polynomial};
