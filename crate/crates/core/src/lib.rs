//! Factor-based precedential reasoning and its classifier-logic semantics.
//!
//! - [`casebase`]: precedents, reason preferences, consistency, the a
//!   fortiori constraint and update checking.
//! - [`bcl`]: the modal classifier logic, its concrete syntax, classifier
//!   models, model checking and tiny-scale satisfiability.
//! - [`bridge`]: translations of precedents into formulas and the canonical
//!   model deciding consistency.
//! - [`explain`]: implicants, abductive and contrastive explanations.
//! - [`io`]: JSON case-base and model files.

pub mod bcl;
pub mod bridge;
pub mod casebase;
pub mod error;
pub mod examples;
pub mod explain;
pub mod gen;
pub mod io;
pub mod selftest;
pub mod signature;

pub use casebase::{CaseBase, Forced, Precedent, Reason, UpdateVerdict};
pub use error::{Error, Result};
pub use signature::{AtomSet, Outcome, Signature};
