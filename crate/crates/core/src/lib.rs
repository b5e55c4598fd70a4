//! Exact invariants of special generalized null correlation bundles.
//!
//! A special generalized null correlation bundle `E` on `P^{2n+1}` is the
//! cohomology of a self-dual monad
//!
//! ```text
//! O(-c) --> H = O(a_1) + ... + O(a_{n+1}) + O(-a_1) + ... + O(-a_{n+1}) --> O(c)
//! ```
//!
//! with `c > a_1 >= ... >= a_{n+1} >= 0`. Everything in this crate works at
//! the level of these degrees: cohomology of split bundles ([`combinat`]),
//! truncated Chern polynomials ([`chern`]), the Hilbert function of the
//! complete intersection `M` and the cohomology table of `E` ([`monadcoh`]),
//! End-cohomology and moduli dimensions on `P^5` ([`moduli`]), and the
//! Diophantine search producing moduli component certificates ([`dioph`]).
//!
//! All results are exact arbitrary-precision integers.

pub mod chern;
pub mod combinat;
pub mod dioph;
mod error;
pub mod moduli;
pub mod monadcoh;
pub mod oracles;
pub mod selftest;

pub use chern::{ChernVector, P5Chern};
pub use combinat::SplitBundle;
pub use dioph::{ComponentCertificate, ComponentEntry, TripleClass};
pub use error::{Error, Result};
pub use moduli::{Flag, ModuliReport, StabilityReport};
pub use monadcoh::{CohomologyTable, HilbertFunction, MonadSpec};
