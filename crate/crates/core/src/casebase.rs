//! Precedents, case bases and the precedential constraint.
//!
//! A precedent `(s, X, x)` records the factors present in a situation, the
//! reason cited for the decision and the outcome. Each precedent induces a
//! preference of its reason (and any stronger reason) over the opposing
//! factors it was decided against; a case base is consistent when no two
//! reasons end up preferred over each other.

use std::fmt;

use crate::error::{Error, Result};
use crate::signature::{AtomSet, Outcome, Signature};

/// Largest signature the reason-pair enumeration oracle accepts.
pub const BRUTE_FORCE_BOUND: usize = 20;

/// A set of same-side factors cited in favour of `polarity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Reason {
    pub factors: AtomSet,
    pub polarity: Outcome,
}

impl Reason {
    pub fn new(factors: AtomSet, polarity: Outcome) -> Self {
        Reason { factors, polarity }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Precedent {
    pub id: String,
    pub facts: AtomSet,
    pub reason: AtomSet,
    pub outcome: Outcome,
}

impl Precedent {
    pub fn new(id: impl Into<String>, facts: AtomSet, reason: AtomSet, outcome: Outcome) -> Self {
        Precedent {
            id: id.into(),
            facts,
            reason,
            outcome,
        }
    }

    /// Builds a precedent from factor names.
    pub fn named<S: AsRef<str>>(
        sig: &Signature,
        id: impl Into<String>,
        facts: &[S],
        reason: &[S],
        outcome: Outcome,
    ) -> Result<Self> {
        Ok(Precedent::new(
            id,
            sig.set_of(facts)?,
            sig.set_of(reason)?,
            outcome,
        ))
    }

    pub fn reason(&self) -> Reason {
        Reason::new(self.reason, self.outcome)
    }

    fn key(&self) -> (AtomSet, AtomSet, Outcome) {
        (self.facts, self.reason, self.outcome)
    }

    /// Pro and con factors of the situation, relative to the outcome.
    pub fn pro_side(&self, sig: &Signature) -> AtomSet {
        self.facts.intersection(sig.side(self.outcome))
    }

    pub fn con_side(&self, sig: &Signature) -> AtomSet {
        match self.outcome.opposite() {
            Ok(other) => self.facts.intersection(sig.side(other)),
            Err(_) => AtomSet::EMPTY,
        }
    }

    /// True when the reason is every pro-factor of the situation.
    pub fn is_result_case(&self, sig: &Signature) -> bool {
        self.reason == self.pro_side(sig)
    }

    /// Whether this precedent forces its outcome on situation `s`: the
    /// reason is present and `s` has no con-factor outside the precedent's.
    pub fn forces(&self, sig: &Signature, s: AtomSet) -> bool {
        self.outcome.is_decided()
            && self.reason.is_subset(s)
            && match self.outcome.opposite() {
                Ok(other) => s
                    .intersection(sig.side(other))
                    .is_subset(self.con_side(sig)),
                Err(_) => false,
            }
    }

    /// Violations of the well-formedness rules, if any.
    pub fn violations(&self, sig: &Signature) -> Vec<ViolationKind> {
        let mut out = Vec::new();
        if !sig.contains_set(self.facts) || !sig.contains_set(self.reason) {
            out.push(ViolationKind::OutsideSignature);
        }
        if !self.outcome.is_decided() {
            out.push(ViolationKind::UndecidedOutcome);
        } else if !self.reason.is_subset(sig.side(self.outcome)) {
            out.push(ViolationKind::ReasonPolarityMismatch);
        }
        if !self.reason.is_subset(self.facts) {
            out.push(ViolationKind::ReasonNotInFacts);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    OutsideSignature,
    UndecidedOutcome,
    ReasonPolarityMismatch,
    ReasonNotInFacts,
    DuplicateId,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::OutsideSignature => "factor outside signature",
            ViolationKind::UndecidedOutcome => "outcome must be 1 or 0",
            ViolationKind::ReasonPolarityMismatch => "reason polarity mismatch",
            ViolationKind::ReasonNotInFacts => "reason not contained in facts",
            ViolationKind::DuplicateId => "duplicate case id",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub case_id: String,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case `{}`: {}", self.case_id, self.kind)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Legal but suspicious, e.g. empty reasons.
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A set of precedents over a shared signature.
///
/// Cases are kept in insertion order. Inserting a case with the same facts,
/// reason and outcome as an existing one is a no-op.
#[derive(Clone, Debug)]
pub struct CaseBase {
    signature: Signature,
    cases: Vec<Precedent>,
}

impl CaseBase {
    pub fn new(signature: Signature) -> Self {
        CaseBase {
            signature,
            cases: Vec::new(),
        }
    }

    pub fn with_cases(signature: Signature, cases: impl IntoIterator<Item = Precedent>) -> Self {
        let mut cb = CaseBase::new(signature);
        for c in cases {
            cb.insert(c);
        }
        cb
    }

    /// Returns false when an identical case was already present.
    pub fn insert(&mut self, case: Precedent) -> bool {
        if self.cases.iter().any(|c| c.key() == case.key()) {
            return false;
        }
        self.cases.push(case);
        true
    }

    /// A copy of this case base extended with `case`.
    pub fn extended(&self, case: Precedent) -> CaseBase {
        let mut cb = self.clone();
        cb.insert(case);
        cb
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn cases(&self) -> &[Precedent] {
        &self.cases
    }

    pub fn len(&self) -> usize {
        self.cases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cases.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Precedent> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (i, c) in self.cases.iter().enumerate() {
            for kind in c.violations(&self.signature) {
                report.violations.push(Violation {
                    case_id: c.id.clone(),
                    kind,
                });
            }
            if self.cases[..i].iter().any(|prev| prev.id == c.id) {
                report.violations.push(Violation {
                    case_id: c.id.clone(),
                    kind: ViolationKind::DuplicateId,
                });
            }
            if c.reason.is_empty() {
                report.warnings.push(format!(
                    "case `{}` has an empty reason and forces {} wherever its con-side allows",
                    c.id, c.outcome
                ));
            }
        }
        report
    }

    fn with_outcome(&self, outcome: Outcome) -> impl Iterator<Item = &Precedent> {
        self.cases.iter().filter(move |c| c.outcome == outcome)
    }

    /// `loser <_CB winner`: some precedent decided for the winner's side
    /// supports the preference.
    pub fn prefers(&self, winner: Reason, loser: Reason) -> Result<bool> {
        check_opposed(winner, loser)?;
        Ok(self
            .with_outcome(winner.polarity)
            .any(|c| prefers_unchecked(&self.signature, c, winner, loser)))
    }

    /// Pairwise criterion: inconsistent iff some 0-case's reason lies within
    /// a 1-case's defendant factors while that 1-case's reason lies within
    /// the 0-case's plaintiff factors.
    pub fn is_consistent(&self) -> bool {
        self.conflicting_pairs().next().is_none()
    }

    fn conflicting_pairs(&self) -> impl Iterator<Item = (&Precedent, &Precedent)> {
        let sig = &self.signature;
        self.with_outcome(Outcome::Defendant).flat_map(move |c0| {
            self.with_outcome(Outcome::Plaintiff)
                .filter(move |c1| {
                    c0.reason.is_subset(c1.facts.intersection(sig.defendant()))
                        && c1.reason.is_subset(c0.facts.intersection(sig.plaintiff()))
                })
                .map(move |c1| (c0, c1))
        })
    }

    /// The first conflicting pair in case order, if any.
    pub fn conflict_witness(&self) -> Option<ConflictWitness> {
        self.conflicting_pairs()
            .next()
            .map(|(c0, c1)| ConflictWitness {
                defendant_case: c0.clone(),
                plaintiff_case: c1.clone(),
                defendant_reason: c0.reason(),
                plaintiff_reason: c1.reason(),
            })
    }

    /// The state at which the conflict shows: the first case whose own facts
    /// are forced both ways, otherwise the least union of a conflicting
    /// pair's reasons (which is also the least double-forced state).
    pub fn conflict_state(&self) -> Option<AtomSet> {
        if let Some(c) = self
            .cases
            .iter()
            .find(|c| self.forced_outcome(c.facts) == Forced::Conflict)
        {
            return Some(c.facts);
        }
        self.conflicting_pairs()
            .map(|(c0, c1)| c0.reason.union(c1.reason))
            .min()
    }

    pub fn forced_outcome(&self, s: AtomSet) -> Forced {
        let for_1 = self.forcing(s, Outcome::Plaintiff).next().is_some();
        let for_0 = self.forcing(s, Outcome::Defendant).next().is_some();
        match (for_1, for_0) {
            (true, true) => Forced::Conflict,
            (true, false) => Forced::Outcome(Outcome::Plaintiff),
            (false, true) => Forced::Outcome(Outcome::Defendant),
            (false, false) => Forced::Outcome(Outcome::Undecided),
        }
    }

    /// The precedents that force `outcome` on `s`, in case order.
    pub fn forcing(&self, s: AtomSet, outcome: Outcome) -> impl Iterator<Item = &Precedent> {
        let sig = &self.signature;
        self.with_outcome(outcome).filter(move |c| c.forces(sig, s))
    }

    /// Whether adding `case` keeps the case base consistent.
    pub fn check_update(&self, case: &Precedent) -> Result<UpdateVerdict> {
        let problems = case.violations(&self.signature);
        if let Some(kind) = problems.first() {
            return Err(Error::Usage(format!(
                "new case `{}` is malformed: {kind}",
                case.id
            )));
        }
        let extended = self.extended(case.clone());
        Ok(match extended.conflict_witness() {
            None => UpdateVerdict::Accept,
            Some(witness) => UpdateVerdict::Reject {
                state: extended
                    .conflict_state()
                    .expect("a conflicting pair yields a conflict state"),
                witness,
            },
        })
    }
}

fn check_opposed(winner: Reason, loser: Reason) -> Result<()> {
    match winner.polarity.opposite() {
        Ok(other) if other == loser.polarity => Ok(()),
        _ => Err(Error::Usage(format!(
            "reasons must favour opposite outcomes (got {} and {})",
            winner.polarity, loser.polarity
        ))),
    }
}

fn prefers_unchecked(sig: &Signature, c: &Precedent, winner: Reason, loser: Reason) -> bool {
    loser.factors.is_subset(c.con_side(sig)) && c.reason.is_subset(winner.factors)
}

/// `loser <_c winner` for a single precedent.
pub fn case_prefers(sig: &Signature, c: &Precedent, winner: Reason, loser: Reason) -> Result<bool> {
    check_opposed(winner, loser)?;
    if winner.polarity != c.outcome {
        return Err(Error::Usage(format!(
            "winner favours {} but case `{}` was decided {}",
            winner.polarity, c.id, c.outcome
        )));
    }
    Ok(prefers_unchecked(sig, c, winner, loser))
}

/// Consistency decided by enumerating every pair of a plaintiff reason and a
/// defendant reason and testing both preference directions directly.
pub fn brute_force_consistent(cb: &CaseBase) -> Result<bool> {
    let sig = cb.signature();
    sig.ensure_at_most("reason-pair enumeration", BRUTE_FORCE_BOUND)?;
    for pro in sig.plaintiff().subsets() {
        let y1 = Reason::new(pro, Outcome::Plaintiff);
        for con in sig.defendant().subsets() {
            let y0 = Reason::new(con, Outcome::Defendant);
            if cb.prefers(y1, y0)? && cb.prefers(y0, y1)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result of applying the a fortiori constraint to a situation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Forced {
    Outcome(Outcome),
    Conflict,
}

impl fmt::Display for Forced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Forced::Outcome(x) => write!(f, "{x}"),
            Forced::Conflict => f.write_str("conflict"),
        }
    }
}

/// A 0-case and a 1-case whose reasons are each preferred over the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictWitness {
    pub defendant_case: Precedent,
    pub plaintiff_case: Precedent,
    pub defendant_reason: Reason,
    pub plaintiff_reason: Reason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UpdateVerdict {
    Accept,
    Reject {
        witness: ConflictWitness,
        /// A situation the extended case base forces both ways.
        state: AtomSet,
    },
}

impl UpdateVerdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, UpdateVerdict::Accept)
    }
}
