//! The lifted orthogonal factorisation system on internal categories: left part
//! in the base left class on objects, right part fully faithful with objects
//! part in the base right class.

mod lifted;
mod ofs;

pub use lifted::{factor_internal, full_preimage, is_acute, lift_square, lift_two_cell, LiftedFactorisation};
pub use ofs::{BaseOfs, EpiMono, IsoAll};

#[cfg(test)]
mod tests;
