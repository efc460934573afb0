//! Category theory internal to finite sets.
//!
//! The base category is finite sets with chosen finite limits ([`base`]).
//! Internal categories, functors and 2-cells live in [`internal`]; the
//! adjunctions relating them to the base and the nerve are in [`transfer`];
//! finite 2-limits, powers and copowers by 2, and internal homs are in
//! [`limits2d`]; the lifted factorisation systems are in [`factorisation`];
//! classifiers and sections of fully faithful epis in [`classify`]; the
//! aggregate axiom report in [`audit`]; serialization, corpus generation
//! and the naive oracle in [`io`].

pub mod audit;
pub mod base;
pub mod classify;
pub mod error;
pub mod factorisation;
pub mod internal;
pub mod io;
pub mod limits2d;
pub mod transfer;

pub use error::{Error, Result};

#[cfg(test)]
mod test_support;
