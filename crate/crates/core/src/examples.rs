//! The trade-secrets case base used throughout the tests and docs.
//!
//! Plaintiff factors: `pi1` deception, `pi2` bribery, `pi3` security
//! measures. Defendant factors: `delta1` obtainable elsewhere, `delta2`
//! reverse-engineerable, `delta3` voluntary disclosure.

use crate::casebase::{CaseBase, Precedent};
use crate::signature::{Outcome, Signature};

pub fn running_signature() -> Signature {
    Signature::numbered(3, 3).expect("static signature")
}

/// `c1 = ({pi1,pi3,delta1,delta3}, {pi1}, 1)` and
/// `c2 = ({pi2,delta1,delta3}, {delta3}, 0)`.
pub fn running_example() -> CaseBase {
    let sig = running_signature();
    let c1 = Precedent::named(
        &sig,
        "c1",
        &["pi1", "pi3", "delta1", "delta3"],
        &["pi1"],
        Outcome::Plaintiff,
    )
    .expect("static case");
    let c2 = Precedent::named(
        &sig,
        "c2",
        &["pi2", "delta1", "delta3"],
        &["delta3"],
        Outcome::Defendant,
    )
    .expect("static case");
    CaseBase::with_cases(sig, [c1, c2])
}
