//! Formal explanations of a classifier's decisions: implicants, abductive
//! explanations (sufficient reasons) and contrastive explanations (minimal
//! changes that can flip the outcome).
//!
//! Enumeration goes through an [`ImplicantTable`] over all `3^n` cubes. The
//! single-term predicates are independent of it: implicants are checked by a
//! scan of the states, contrastive explanations by model-checking their
//! defining formulas.

mod checks;

pub use checks::{
    check_mhs_duality, check_prop2, check_prop3, check_prop4, check_prop5, check_prop6,
    minimal_hitting_sets, prop6_formula, DualityReport, PropReport, DUALITY_BOUND,
};

use std::fmt;

use crate::bcl::formula::Formula;
use crate::bcl::model::ClassifierModel;
use crate::bcl::search::{enumerate_models, ModelClass, TINY_BOUND};
use crate::bcl::term::Term;
use crate::bridge::tr2_cb;
use crate::casebase::{CaseBase, Precedent};
use crate::error::{Error, Result};
use crate::signature::{AtomSet, Outcome, Signature};

/// Largest signature the term-lattice enumerators accept.
pub const EXPLAIN_BOUND: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExplanationKind {
    PImp,
    AXp,
    WAXp,
    CXp,
    WCXp,
}

impl ExplanationKind {
    pub fn name(self) -> &'static str {
        match self {
            ExplanationKind::PImp => "pimp",
            ExplanationKind::AXp => "axp",
            ExplanationKind::WAXp => "waxp",
            ExplanationKind::CXp => "cxp",
            ExplanationKind::WCXp => "wcxp",
        }
    }

    pub fn needs_state(self) -> bool {
        self != ExplanationKind::PImp
    }
}

impl fmt::Display for ExplanationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplanationSet {
    pub kind: ExplanationKind,
    pub target: Outcome,
    pub state: Option<AtomSet>,
    /// Canonically ordered.
    pub terms: Vec<Term>,
    /// Diagnostics, e.g. contrastive explanations whose literal-by-literal
    /// flip alone keeps the outcome.
    pub notes: Vec<String>,
}

impl ExplanationSet {
    fn new(
        kind: ExplanationKind,
        target: Outcome,
        state: Option<AtomSet>,
        mut terms: Vec<Term>,
    ) -> Self {
        terms.sort_by(Term::canonical_cmp);
        terms.dedup();
        ExplanationSet {
            kind,
            target,
            state,
            terms,
            notes: Vec::new(),
        }
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.terms.contains(t)
    }

    pub fn atom_sets(&self) -> Vec<AtomSet> {
        self.terms.iter().map(Term::atoms).collect()
    }
}

/// For each cube (term) over the signature, whether every state satisfying
/// it is decided `target`. Cubes are numbered in base 3, one digit per atom:
/// 0 for a negative literal, 1 for a positive literal, 2 for no literal.
pub struct ImplicantTable {
    atoms: usize,
    target: Outcome,
    table: Vec<bool>,
}

impl ImplicantTable {
    pub fn build(model: &ClassifierModel, target: Outcome) -> Result<Self> {
        let sig = model.signature();
        sig.ensure_at_most("term enumeration", EXPLAIN_BOUND)?;
        let n = sig.len();
        let size = 3usize.pow(n as u32);
        let powers: Vec<usize> = (0..n).map(|i| 3usize.pow(i as u32)).collect();
        let mut table = vec![false; size];
        for idx in 0..size {
            let mut rest = idx;
            let mut state = 0u64;
            let mut free = None;
            for (i, _) in powers.iter().enumerate() {
                match rest % 3 {
                    1 => state |= 1 << i,
                    2 => {
                        free = Some(i);
                        break;
                    }
                    _ => {}
                }
                rest /= 3;
            }
            table[idx] = match free {
                // Fixing the free atom either way gives a smaller index.
                Some(i) => table[idx - 2 * powers[i]] && table[idx - powers[i]],
                None => model
                    .decision(AtomSet::from_bits(state))
                    .is_none_or(|d| d == target),
            };
        }
        Ok(ImplicantTable {
            atoms: n,
            target,
            table,
        })
    }

    pub fn target(&self) -> Outcome {
        self.target
    }

    fn index(&self, t: &Term) -> usize {
        (0..self.atoms).rev().fold(0, |acc, i| {
            let digit = if t.positive().contains(i) {
                1
            } else if t.negative().contains(i) {
                0
            } else {
                2
            };
            acc * 3 + digit
        })
    }

    fn term(&self, mut idx: usize) -> Term {
        let (mut pos, mut neg) = (AtomSet::EMPTY, AtomSet::EMPTY);
        for i in 0..self.atoms {
            match idx % 3 {
                0 => neg = neg.with(i),
                1 => pos = pos.with(i),
                _ => {}
            }
            idx /= 3;
        }
        Term::new(pos, neg).expect("digits give disjoint literals")
    }

    pub fn is_implicant(&self, t: &Term) -> bool {
        self.table[self.index(t)]
    }

    /// Implicant, and no single-literal deletion is one.
    pub fn is_prime(&self, t: &Term) -> bool {
        self.is_implicant(t) && t.atoms().iter().all(|p| !self.is_implicant(&t.without(p)))
    }

    pub fn prime_implicants(&self) -> Vec<Term> {
        (0..self.table.len())
            .filter(|&i| self.table[i])
            .map(|i| self.term(i))
            .filter(|t| self.is_prime(t))
            .collect()
    }
}

fn state_decision(model: &ClassifierModel, s: AtomSet) -> Result<Outcome> {
    model
        .decision(s)
        .ok_or_else(|| Error::StateNotInModel(model.signature().format_set(s)))
}

/// `Imp(λ, x) = [](λ -> t(x))`.
pub fn imp_formula(t: &Term, x: Outcome) -> Formula {
    Formula::everywhere(Formula::implies(t.to_formula(), Formula::t(x)))
}

/// `PImp(λ, x) = [](λ -> (t(x) ∧ AND_{p ∈ Atm(λ)} <Atm(λ) \ {p}>~t(x)))`.
pub fn pimp_formula(t: &Term, x: Outcome) -> Formula {
    let atoms = t.atoms();
    let minimal = atoms
        .iter()
        .map(|p| Formula::diamond(atoms.without(p), Formula::not(Formula::t(x))));
    Formula::everywhere(Formula::implies(
        t.to_formula(),
        Formula::conjunction(std::iter::once(Formula::t(x)).chain(minimal)),
    ))
}

pub fn waxp_formula(t: &Term, x: Outcome) -> Formula {
    Formula::and(t.to_formula(), imp_formula(t, x))
}

pub fn axp_formula(t: &Term, x: Outcome) -> Formula {
    Formula::and(t.to_formula(), pimp_formula(t, x))
}

/// `wCXp(λ, x) = λ ∧ t(x) ∧ <Atm \ Atm(λ)>~t(x)`.
pub fn wcxp_formula(sig: &Signature, t: &Term, x: Outcome) -> Formula {
    Formula::conjunction([
        t.to_formula(),
        Formula::t(x),
        Formula::diamond(sig.all().difference(t.atoms()), Formula::not(Formula::t(x))),
    ])
}

/// `CXp(λ, x) = λ ∧ <Atm \ Atm(λ)>~t(x) ∧ AND_{p ∈ Atm(λ)} [(Atm \ Atm(λ)) ∪ {p}]t(x)`.
pub fn cxp_formula(sig: &Signature, t: &Term, x: Outcome) -> Formula {
    let rest = sig.all().difference(t.atoms());
    let minimal = t
        .atoms()
        .iter()
        .map(|p| Formula::boxed(rest.with(p), Formula::t(x)));
    Formula::conjunction(
        [
            t.to_formula(),
            Formula::diamond(rest, Formula::not(Formula::t(x))),
        ]
        .into_iter()
        .chain(minimal),
    )
}

/// Every state satisfying `t` is decided `x` (vacuous if none does).
pub fn is_implicant(model: &ClassifierModel, t: &Term, x: Outcome) -> bool {
    model.entries().all(|(s, d)| d == x || !t.holds(s))
}

/// Prime implicant, read as its defining formula: at every state satisfying
/// `t` the outcome is `x` and dropping any one literal admits another
/// outcome. On models over every valuation this is subset-minimality among
/// implicants.
pub fn is_prime_implicant(model: &ClassifierModel, t: &Term, x: Outcome) -> bool {
    if !model.states().iter().any(|&s| t.holds(s)) {
        return true;
    }
    is_implicant(model, t, x)
        && t.atoms()
            .iter()
            .all(|p| !is_implicant(model, &t.without(p), x))
}

pub fn is_waxp(model: &ClassifierModel, s: AtomSet, t: &Term, x: Outcome) -> Result<bool> {
    state_decision(model, s)?;
    Ok(t.holds(s) && is_implicant(model, t, x))
}

pub fn is_axp(model: &ClassifierModel, s: AtomSet, t: &Term, x: Outcome) -> Result<bool> {
    state_decision(model, s)?;
    Ok(t.holds(s) && is_prime_implicant(model, t, x))
}

pub fn is_wcxp(model: &ClassifierModel, s: AtomSet, t: &Term, x: Outcome) -> Result<bool> {
    model.satisfies(s, &wcxp_formula(model.signature(), t, x))
}

pub fn is_cxp(model: &ClassifierModel, s: AtomSet, t: &Term, x: Outcome) -> Result<bool> {
    model.satisfies(s, &cxp_formula(model.signature(), t, x))
}

/// The weak abductive explanation a precedent `(s, X, x)` always yields:
/// its reason, plus the absence of every opposing factor not in `s`.
pub fn waxp_from_reason(sig: &Signature, c: &Precedent) -> Result<Term> {
    let con = sig.side(c.outcome.opposite()?);
    let span = c.reason.union(con).difference(c.facts.intersection(con));
    Term::conj(c.reason, span)
}

pub fn enumerate_prime_implicants(model: &ClassifierModel, x: Outcome) -> Result<ExplanationSet> {
    let table = ImplicantTable::build(model, x)?;
    Ok(ExplanationSet::new(
        ExplanationKind::PImp,
        x,
        None,
        table.prime_implicants(),
    ))
}

/// Explanations of `kind` at `s` for target `x`. Candidates are the terms
/// true at `s`, i.e. restrictions of `s` to a set of atoms.
pub fn explanations_for(
    model: &ClassifierModel,
    kind: ExplanationKind,
    s: AtomSet,
    x: Outcome,
) -> Result<ExplanationSet> {
    if kind == ExplanationKind::PImp {
        return enumerate_prime_implicants(model, x);
    }
    let decided = state_decision(model, s)?;
    let table = ImplicantTable::build(model, x)?;
    let all = model.signature().all();
    // wCXp on atoms A: fixing everything outside A to s still admits an outcome other than x.
    let weak_contrastive =
        |a: AtomSet| decided == x && !table.is_implicant(&Term::of_state(s, all.difference(a)));
    let mut terms = Vec::new();
    for a in all.subsets() {
        let t = Term::of_state(s, a);
        let keep = match kind {
            ExplanationKind::WAXp => table.is_implicant(&t),
            ExplanationKind::AXp => table.is_prime(&t),
            ExplanationKind::WCXp => weak_contrastive(a),
            ExplanationKind::CXp => {
                weak_contrastive(a) && a.iter().all(|p| !weak_contrastive(a.without(p)))
            }
            ExplanationKind::PImp => unreachable!(),
        };
        if keep {
            terms.push(t);
        }
    }
    let mut set = ExplanationSet::new(kind, x, Some(s), terms);
    if matches!(kind, ExplanationKind::CXp | ExplanationKind::WCXp) {
        let sig = model.signature();
        for t in &set.terms {
            let flipped = AtomSet::from_bits(s.bits() ^ t.atoms().bits());
            if model.decision(flipped) == Some(x) {
                set.notes.push(format!(
                    "flipping every literal of {} keeps outcome {x}; another variation of its atoms changes it",
                    t.display(sig)
                ));
            }
        }
    }
    Ok(set)
}

/// All abductive explanations of the state's own outcome.
pub fn enumerate_axp(model: &ClassifierModel, s: AtomSet) -> Result<ExplanationSet> {
    let x = state_decision(model, s)?;
    explanations_for(model, ExplanationKind::AXp, s, x)
}

/// All contrastive explanations of the state's own outcome.
pub fn enumerate_cxp(model: &ClassifierModel, s: AtomSet) -> Result<ExplanationSet> {
    let x = state_decision(model, s)?;
    explanations_for(model, ExplanationKind::CXp, s, x)
}

/// Explanations that hold in every model over all valuations which respects
/// precedent and satisfies the case base's translation.
pub fn explanations_in_all_models(
    cb: &CaseBase,
    kind: ExplanationKind,
    s: AtomSet,
    x: Outcome,
) -> Result<ExplanationSet> {
    let sig = cb.signature();
    sig.ensure_at_most("all-models explanation", TINY_BOUND)?;
    let translation = tr2_cb(cb);
    let mut common: Option<Vec<Term>> = None;
    for model in enumerate_models(sig, ModelClass::CmPrec)? {
        if !model.holds_everywhere(&translation)? {
            continue;
        }
        let found = explanations_for(&model, kind, s, x)?.terms;
        common = Some(match common {
            None => found,
            Some(prev) => prev.into_iter().filter(|t| found.contains(t)).collect(),
        });
    }
    let terms = common.ok_or(Error::Inconsistent)?;
    let state = kind.needs_state().then_some(s);
    Ok(ExplanationSet::new(kind, x, state, terms))
}
