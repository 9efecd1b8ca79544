//! Zero-containment disks for polynomials with complex coefficients.
//!
//! The crate evaluates the Eneström–Kakeya family of bounds (the classical
//! theorem, its wedge-condition extensions, and the off-center refinements),
//! checks their coefficient hypotheses, searches the free parameters
//! `(t1, t2)` for the tightest admissible disk, and verifies every disk
//! against an independent simultaneous-iteration root finder.
//!
//! Coefficients are always stored in ascending order: `coeffs[j]` multiplies
//! `z^j`.

// `!(x > 0.0)` is used deliberately so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod exec;
pub mod genpoly;
pub mod hypotheses;
pub mod io;
pub mod oracle;
pub mod poly;
pub mod search;
pub mod wedge;

pub use bounds::{best_bound, BoundReport, Theorem};
pub use error::{Error, Result};
pub use exec::Execution;
pub use hypotheses::{ConditionSeq, HypothesisReport, SplitIndices};
pub use oracle::RootSet;
pub use poly::{Disk, Polynomial, C64};
pub use search::{SearchConfig, SearchResult};
pub use wedge::Wedge;
