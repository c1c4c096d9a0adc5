//! Exact-arithmetic checks for twisted tangent bundles `T_X(k)` being Ulrich.
//!
//! Every numerical necessary condition, interpolation argument, lattice
//! effectivity decision, cohomology vanishing and Diophantine enumeration is
//! carried out over arbitrary-precision rationals and integers, and the
//! results are packaged as [`Certificate`]s that can be replayed and compared.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod certificate;
pub mod certify;
pub mod curves;
pub mod diophantine;
mod error;
pub mod hilbert;
pub mod picard;
pub mod qexact;
pub mod trace;
pub mod ulrich;

pub use certificate::{Certificate, Check, Status, Witness};
pub use error::Error;
pub use qexact::Rational;
