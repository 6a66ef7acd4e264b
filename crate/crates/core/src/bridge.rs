//! From case bases to classifier models.
//!
//! Each precedent translates to a `<>`-formula naming one valuation and its
//! outcome. The canonical model decides every valuation by the a fortiori
//! constraint and leaves the rest at `?`; it exists exactly when the case
//! base is consistent, which makes it a decision procedure for
//! satisfiability of the translation together with Compl and 2Mon.

use crate::bcl::formula::Formula;
use crate::bcl::model::{ClassifierModel, FULL_MODEL_BOUND};
use crate::bcl::search::{is_satisfiable_tiny, ModelClass};
use crate::bcl::term::Term;
use crate::casebase::{CaseBase, Forced, Precedent};
use crate::error::{Error, Result};
use crate::signature::{AtomSet, Outcome, Signature};

fn describe_with_outcome(sig: &Signature, state: AtomSet, x: Outcome) -> Formula {
    Formula::somewhere(Formula::and(
        Term::of_state(state, sig.all()).to_formula(),
        Formula::t(x),
    ))
}

/// Result-model translation: `<>(conj_s ∧ t(x))`.
pub fn tr1(sig: &Signature, c: &Precedent) -> Result<Formula> {
    if !c.is_result_case(sig) {
        return Err(Error::NotResultCase(c.id.clone()));
    }
    Ok(describe_with_outcome(sig, c.facts, c.outcome))
}

/// The valuation a reason-model precedent is translated to: its reason plus
/// the opposing factors it was decided against.
pub fn translated_state(sig: &Signature, c: &Precedent) -> AtomSet {
    c.reason.union(c.con_side(sig))
}

/// Reason-model translation: `<>(conj_{X ∪ (s ∩ con)} ∧ t(x))`.
pub fn tr2(sig: &Signature, c: &Precedent) -> Formula {
    describe_with_outcome(sig, translated_state(sig, c), c.outcome)
}

pub fn tr1_cb(cb: &CaseBase) -> Result<Formula> {
    let parts = cb
        .cases()
        .iter()
        .map(|c| tr1(cb.signature(), c))
        .collect::<Result<Vec<_>>>()?;
    Ok(Formula::conjunction(parts))
}

pub fn tr2_cb(cb: &CaseBase) -> Formula {
    Formula::conjunction(cb.cases().iter().map(|c| tr2(cb.signature(), c)))
}

/// A state forced both ways, with the first precedent forcing each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictReport {
    pub state: AtomSet,
    pub forcing_for_1: Precedent,
    pub forcing_for_0: Precedent,
}

#[derive(Clone, Debug)]
pub enum Canonical {
    Model(ClassifierModel),
    Conflict(ConflictReport),
}

impl Canonical {
    pub fn model(self) -> Option<ClassifierModel> {
        match self {
            Canonical::Model(m) => Some(m),
            Canonical::Conflict(_) => None,
        }
    }
}

/// Builds the canonical model over every valuation, or reports a state that
/// would need two outcomes. Case fact situations are reported first; among
/// other states the least in canonical order.
pub fn canonical_model(cb: &CaseBase) -> Result<Canonical> {
    let sig = cb.signature();
    sig.ensure_at_most("canonical model", FULL_MODEL_BOUND)?;
    let mut decisions = Vec::with_capacity(1 << sig.len());
    let mut first_conflict = None;
    for s in sig.valuations() {
        match cb.forced_outcome(s) {
            Forced::Outcome(x) => decisions.push((s, x)),
            Forced::Conflict => {
                first_conflict.get_or_insert(s);
                decisions.push((s, Outcome::Undecided));
            }
        }
    }
    if let Some(least) = first_conflict {
        let state = cb
            .cases()
            .iter()
            .map(|c| c.facts)
            .find(|&s| cb.forced_outcome(s) == Forced::Conflict)
            .unwrap_or(least);
        let first = |x| {
            cb.forcing(state, x)
                .next()
                .cloned()
                .expect("conflict state is forced both ways")
        };
        return Ok(Canonical::Conflict(ConflictReport {
            state,
            forcing_for_1: first(Outcome::Plaintiff),
            forcing_for_0: first(Outcome::Defendant),
        }));
    }
    Ok(Canonical::Model(ClassifierModel::new(
        sig.clone(),
        decisions,
    )?))
}

/// Satisfiability of the translation under Compl and 2Mon, decided by
/// whether the canonical model exists.
pub fn theorem1_decide(cb: &CaseBase) -> Result<bool> {
    Ok(matches!(canonical_model(cb)?, Canonical::Model(_)))
}

/// Satisfiability of the translation by enumerating every model over all
/// valuations whose decisions respect precedent.
pub fn brute_force_prec_satisfiable(cb: &CaseBase) -> Result<bool> {
    Ok(is_satisfiable_tiny(&tr2_cb(cb), cb.signature(), ModelClass::CmPrec)?.is_some())
}

/// The result-model special case; every case must be a result case.
pub fn corollary1_decide(cb: &CaseBase) -> Result<bool> {
    if let Some(c) = cb
        .cases()
        .iter()
        .find(|c| !c.is_result_case(cb.signature()))
    {
        return Err(Error::NotResultCase(c.id.clone()));
    }
    theorem1_decide(cb)
}

/// Whether `new_case` may be added without losing consistency.
pub fn corollary2_decide(cb: &CaseBase, new_case: &Precedent) -> Result<bool> {
    theorem1_decide(&cb.extended(new_case.clone()))
}
