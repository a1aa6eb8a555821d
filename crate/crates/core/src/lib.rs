//! Kunz-coordinate arithmetic for normalized ideals of numerical semigroups.
//!
//! A normalized ideal `I` of a numerical semigroup `S` with multiplicity `m`
//! is determined by its Apéry set `{w_0 = 0, w_1, …, w_{m-1}}`, and writing
//! `w_i = m·x_i + i` gives the Kunz coordinates `(x_1, …, x_{m-1})`. Every
//! set operation on ideals (membership, inclusion, union, intersection and
//! Minkowski sum) has a closed form in these coordinates, which is what this
//! crate implements.
//!
//! On top of the arithmetic the crate builds the finite poset of normalized
//! ideals ordered by `I ⪯ J ⟺ ∃K: I + K = J`, computes its Hasse diagram,
//! quarks and depths, and for multiplicity three recovers `S` from the
//! unlabeled Hasse diagram alone.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
mod error;
pub mod ideal;
pub mod kunz;
pub mod oracle;
pub mod poset;
pub mod semigroup;

pub use analysis::{
    order_coincidence_sweep, quark_report, reconstruct, verify_suite, Check, CheckReport,
    Failure, QuarkReport, ReconstructionResult,
};
pub use error::{Error, Result, Violation};
pub use ideal::NormalizedIdeal;
pub use kunz::KunzVector;
pub use poset::{AbstractPoset, IdealPoset, IdealSet};
pub use semigroup::{Classification, NumericalSemigroup};
