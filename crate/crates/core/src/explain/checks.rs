//! Executable checks linking precedents to explanations in the canonical
//! model, plus the abductive/contrastive hitting-set duality.

use crate::bcl::formula::Formula;
use crate::bcl::model::ClassifierModel;
use crate::bcl::search::{is_valid_tiny, ModelClass, TINY_BOUND};
use crate::bcl::term::Term;
use crate::bridge::{canonical_model, tr2};
use crate::casebase::{CaseBase, Precedent, Reason};
use crate::error::{Error, Result};
use crate::signature::{AtomSet, Outcome, Signature};

use super::{
    enumerate_axp, enumerate_cxp, enumerate_prime_implicants, imp_formula, is_implicant, is_waxp,
    is_wcxp, waxp_from_reason,
};

/// Largest signature for the duality check.
pub const DUALITY_BOUND: usize = 4;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropReport {
    pub name: &'static str,
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl PropReport {
    fn new(name: &'static str) -> Self {
        PropReport {
            name,
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn consistent_model(cb: &CaseBase) -> Result<ClassifierModel> {
    canonical_model(cb)?.model().ok_or(Error::Inconsistent)
}

/// Every prime implicant for the opposite outcome is falsified at a
/// precedent's facts: it negates part of the reason, or needs an opposing
/// factor the facts lack.
pub fn check_prop2(cb: &CaseBase) -> Result<PropReport> {
    let model = consistent_model(cb)?;
    let sig = cb.signature();
    let mut report = PropReport::new("prop2");
    let pimps_for = |x: Outcome| enumerate_prime_implicants(&model, x).map(|s| s.terms);
    let (for_1, for_0) = (
        pimps_for(Outcome::Plaintiff)?,
        pimps_for(Outcome::Defendant)?,
    );
    for c in cb.cases() {
        let other = c.outcome.opposite()?;
        let pimps = if other == Outcome::Plaintiff {
            &for_1
        } else {
            &for_0
        };
        let con = c.facts.intersection(sig.side(other));
        for t in pimps {
            report.checked += 1;
            let blocked = !c.reason.is_disjoint(t.negative()) || !t.positive().is_subset(con);
            if !blocked {
                report.counterexamples.push(format!(
                    "case `{}`: prime implicant {} for {other} is compatible with the case",
                    c.id,
                    t.display(sig)
                ));
            }
        }
    }
    Ok(report)
}

/// Every precedent's reason is the positive part of some weak abductive
/// explanation at its facts.
pub fn check_prop3(cb: &CaseBase) -> Result<PropReport> {
    let model = consistent_model(cb)?;
    let sig = cb.signature();
    let mut report = PropReport::new("prop3");
    for c in cb.cases() {
        report.checked += 1;
        let absent = sig.all().difference(c.facts);
        let found = absent.subsets().any(|neg| {
            Term::new(c.reason, neg)
                .map(|t| t.holds(c.facts) && is_implicant(&model, &t, c.outcome))
                .unwrap_or(false)
        });
        if !found {
            report.counterexamples.push(format!(
                "case `{}`: no weak abductive explanation with positive part {}",
                c.id,
                sig.format_set(c.reason)
            ));
        }
    }
    Ok(report)
}

/// The constructive weak abductive explanation of each precedent holds.
pub fn check_prop4(cb: &CaseBase) -> Result<PropReport> {
    let model = consistent_model(cb)?;
    let sig = cb.signature();
    let mut report = PropReport::new("prop4");
    for c in cb.cases() {
        report.checked += 1;
        let t = waxp_from_reason(sig, c)?;
        if !is_waxp(&model, c.facts, &t, c.outcome)? {
            report.counterexamples.push(format!(
                "case `{}`: {} is not a weak abductive explanation",
                c.id,
                t.display(sig)
            ));
        }
    }
    Ok(report)
}

/// If the absence of opposing factors `Y` weakly contrastively explains a
/// precedent's outcome, then `Y` together with the precedent's opposing
/// factors is not weaker than its reason.
pub fn check_prop5(cb: &CaseBase) -> Result<PropReport> {
    let model = consistent_model(cb)?;
    let sig = cb.signature();
    let mut report = PropReport::new("prop5");
    for c in cb.cases() {
        let other = c.outcome.opposite()?;
        let con = c.facts.intersection(sig.side(other));
        for y in sig.side(other).difference(c.facts).subsets() {
            let absent = Term::conj(AtomSet::EMPTY, y)?;
            if !is_wcxp(&model, c.facts, &absent, c.outcome)? {
                continue;
            }
            report.checked += 1;
            let loser = Reason::new(y.union(con), other);
            if cb.prefers(c.reason(), loser)? {
                report.counterexamples.push(format!(
                    "case `{}`: absence of {} explains the outcome, yet {} is weaker than {}",
                    c.id,
                    sig.format_set(y),
                    sig.format_set(loser.factors),
                    sig.format_set(c.reason)
                ));
            }
        }
    }
    Ok(report)
}

/// `tr2(c) -> OR_λ (Imp(λ, x) ∧ (λ -> conj_X^X))` over every term λ.
pub fn prop6_formula(sig: &Signature, c: &Precedent) -> Formula {
    let reason = Term::conj(c.reason, c.reason)
        .expect("X within X")
        .to_formula();
    let disjuncts = all_terms(sig).map(|t| {
        Formula::and(
            imp_formula(&t, c.outcome),
            Formula::implies(t.to_formula(), reason.clone()),
        )
    });
    Formula::implies(tr2(sig, c), Formula::disjunction(disjuncts))
}

fn all_terms(sig: &Signature) -> impl Iterator<Item = Term> + '_ {
    sig.valuations().flat_map(move |atoms| {
        atoms
            .subsets()
            .map(move |pos| Term::new(pos, atoms.difference(pos)).expect("disjoint"))
    })
}

/// Validity over all models of the signature, for each given case.
pub fn check_prop6(sig: &Signature, cases: &[Precedent]) -> Result<PropReport> {
    sig.ensure_at_most("prop6 validity", TINY_BOUND)?;
    let mut report = PropReport::new("prop6");
    for c in cases {
        report.checked += 1;
        if let Some(counter) = is_valid_tiny(&prop6_formula(sig, c), sig, ModelClass::Cm)? {
            report.counterexamples.push(format!(
                "case `{}`: countermodel at state {}",
                c.id,
                sig.format_set(counter.state)
            ));
        }
    }
    Ok(report)
}

/// Subset-minimal sets meeting every member of `family`, by enumeration of
/// all subsets of `universe`.
pub fn minimal_hitting_sets(family: &[AtomSet], universe: AtomSet) -> Vec<AtomSet> {
    let hits = |h: AtomSet| family.iter().all(|f| !f.is_disjoint(h));
    universe
        .subsets()
        .filter(|&h| hits(h) && h.iter().all(|p| !hits(h.without(p))))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub axp_atoms: Vec<AtomSet>,
    pub cxp_atoms: Vec<AtomSet>,
    pub hitting_axp: Vec<AtomSet>,
    pub hitting_cxp: Vec<AtomSet>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.cxp_atoms == self.hitting_axp && self.axp_atoms == self.hitting_cxp
    }
}

/// Compares the atom sets of contrastive explanations with the minimal
/// hitting sets of the abductive ones, and vice versa.
pub fn check_mhs_duality(model: &ClassifierModel, s: AtomSet) -> Result<DualityReport> {
    let sig = model.signature();
    sig.ensure_at_most("hitting-set duality", DUALITY_BOUND)?;
    if !model.is_full() {
        return Err(Error::Usage(
            "duality check needs a model over every valuation".into(),
        ));
    }
    let sorted = |mut v: Vec<AtomSet>| {
        v.sort();
        v
    };
    let axp_atoms = sorted(enumerate_axp(model, s)?.atom_sets());
    let cxp_atoms = sorted(enumerate_cxp(model, s)?.atom_sets());
    let hitting_axp = minimal_hitting_sets(&axp_atoms, sig.all());
    let hitting_cxp = minimal_hitting_sets(&cxp_atoms, sig.all());
    Ok(DualityReport {
        axp_atoms,
        cxp_atoms,
        hitting_axp,
        hitting_cxp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::running_example;

    #[test]
    fn propositions_hold_on_running_example() {
        let cb = running_example();
        for report in [
            check_prop2(&cb).unwrap(),
            check_prop3(&cb).unwrap(),
            check_prop4(&cb).unwrap(),
            check_prop5(&cb).unwrap(),
        ] {
            assert!(report.passed(), "{report:?}");
            assert!(report.checked > 0, "{}", report.name);
        }
    }

    #[test]
    fn prop5_instance_from_running_example() {
        let cb = running_example();
        let sig = cb.signature();
        let model = consistent_model(&cb).unwrap();
        let c2 = &cb.cases()[1];
        let not_pi1 = Term::conj(AtomSet::EMPTY, sig.set_of(&["pi1"]).unwrap()).unwrap();
        assert!(is_wcxp(&model, c2.facts, &not_pi1, Outcome::Defendant).unwrap());
        let loser = Reason::new(sig.set_of(&["pi1", "pi2"]).unwrap(), Outcome::Plaintiff);
        assert!(!cb.prefers(c2.reason(), loser).unwrap());
    }

    #[test]
    fn empty_case_base_passes_vacuously() {
        let cb = CaseBase::new(running_example().signature().clone());
        assert_eq!(check_prop2(&cb).unwrap().checked, 0);
        assert!(check_prop5(&cb).unwrap().passed());
    }

    #[test]
    fn inconsistent_case_base_is_refused() {
        let cb = running_example();
        let sig = cb.signature().clone();
        let bad = cb.extended(
            Precedent::named(
                &sig,
                "c3",
                &["pi1", "pi2", "delta1"],
                &["delta1"],
                Outcome::Defendant,
            )
            .unwrap(),
        );
        assert!(matches!(check_prop2(&bad), Err(Error::Inconsistent)));
    }

    #[test]
    fn prop6_small_signatures() {
        let sig = Signature::new(["p"], ["d"]).unwrap();
        let cases = [
            Precedent::named(&sig, "a", &["p", "d"], &["p"], Outcome::Plaintiff).unwrap(),
            Precedent::new("empty", AtomSet::EMPTY, AtomSet::EMPTY, Outcome::Defendant),
        ];
        assert!(check_prop6(&sig, &cases).unwrap().passed());
        let sig1 = Signature::new(["p"], Vec::<String>::new()).unwrap();
        let single = [Precedent::named(&sig1, "b", &["p"], &["p"], Outcome::Plaintiff).unwrap()];
        assert!(check_prop6(&sig1, &single).unwrap().passed());
    }

    #[test]
    fn duality_examples() {
        let sig = Signature::new(["p"], Vec::<String>::new()).unwrap();
        let m = ClassifierModel::full(sig.clone(), |s| {
            if s.contains(0) {
                Outcome::Plaintiff
            } else {
                Outcome::Defendant
            }
        })
        .unwrap();
        let r = check_mhs_duality(&m, AtomSet::singleton(0)).unwrap();
        assert_eq!(r.axp_atoms, vec![AtomSet::singleton(0)]);
        assert_eq!(r.cxp_atoms, vec![AtomSet::singleton(0)]);
        assert!(r.holds());
        let constant =
            ClassifierModel::full(Signature::numbered(2, 1).unwrap(), |_| Outcome::Undecided)
                .unwrap();
        let r = check_mhs_duality(&constant, AtomSet::EMPTY).unwrap();
        assert_eq!(r.axp_atoms, vec![AtomSet::EMPTY]);
        assert!(r.cxp_atoms.is_empty());
        assert!(r.holds());
    }
}
