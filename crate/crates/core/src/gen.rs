//! Seeded random generators for signatures, case bases, formulas and models.
//! Used by the self-test suites and the property tests.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bcl::formula::Formula;
use crate::bcl::model::ClassifierModel;
use crate::casebase::{CaseBase, Precedent};
use crate::error::Result;
use crate::signature::{AtomSet, Outcome, Signature};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5EED_CA5E;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, of: AtomSet) -> AtomSet {
    of.iter().filter(|_| rng.gen_bool(0.5)).collect()
}

/// A signature of `atoms` factors, split randomly between the two sides.
pub fn random_signature<R: Rng + ?Sized>(rng: &mut R, atoms: usize) -> Signature {
    let plaintiff = rng.gen_range(0..=atoms);
    Signature::numbered(plaintiff, atoms - plaintiff).expect("small numbered signature")
}

/// A well-formed precedent: reason within the facts' pro-side.
pub fn random_case<R: Rng + ?Sized>(
    rng: &mut R,
    sig: &Signature,
    id: impl Into<String>,
) -> Precedent {
    let outcome = *Outcome::DECIDED.choose(rng).expect("non-empty");
    let facts = random_subset(rng, sig.all());
    let reason = random_subset(rng, facts.intersection(sig.side(outcome)));
    Precedent::new(id, facts, reason, outcome)
}

/// Every well-formed precedent over `sig`, named `c1`, `c2`, ...
pub fn all_cases(sig: &Signature) -> Vec<Precedent> {
    let mut out = Vec::new();
    for facts in sig.valuations() {
        for outcome in Outcome::DECIDED {
            for reason in facts.intersection(sig.side(outcome)).subsets() {
                out.push(Precedent::new(
                    format!("c{}", out.len() + 1),
                    facts,
                    reason,
                    outcome,
                ));
            }
        }
    }
    out
}

/// A random result-model case: the reason is all pro-factors.
pub fn random_result_case<R: Rng + ?Sized>(
    rng: &mut R,
    sig: &Signature,
    id: impl Into<String>,
) -> Precedent {
    let mut c = random_case(rng, sig, id);
    c.reason = c.pro_side(sig);
    c
}

pub fn random_case_base<R: Rng + ?Sized>(
    rng: &mut R,
    sig: &Signature,
    max_cases: usize,
) -> CaseBase {
    let n = rng.gen_range(0..=max_cases);
    let cases: Vec<_> = (0..n)
        .map(|i| random_case(rng, sig, format!("c{}", i + 1)))
        .collect();
    CaseBase::with_cases(sig.clone(), cases)
}

/// Adds random cases one at a time, keeping only those that preserve
/// consistency, so the result is always consistent.
pub fn random_consistent_case_base<R: Rng + ?Sized>(
    rng: &mut R,
    sig: &Signature,
    attempts: usize,
) -> CaseBase {
    let mut cb = CaseBase::new(sig.clone());
    for i in 0..attempts {
        let c = random_case(rng, sig, format!("c{}", i + 1));
        let next = cb.extended(c);
        if next.is_consistent() {
            cb = next;
        }
    }
    cb
}

pub fn random_outcome<R: Rng + ?Sized>(rng: &mut R) -> Outcome {
    *Outcome::ALL.choose(rng).expect("non-empty")
}

/// A random model over every valuation, with arbitrary decisions.
pub fn random_full_model<R: Rng + ?Sized>(rng: &mut R, sig: &Signature) -> Result<ClassifierModel> {
    let decisions: Vec<Outcome> = sig.valuations().map(|_| random_outcome(rng)).collect();
    ClassifierModel::full(sig.clone(), |s| decisions[s.bits() as usize])
}

/// A random model over a random non-empty subset of the valuations.
pub fn random_model<R: Rng + ?Sized>(rng: &mut R, sig: &Signature) -> Result<ClassifierModel> {
    let mut entries = Vec::new();
    for s in sig.valuations() {
        if rng.gen_bool(0.6) {
            entries.push((s, random_outcome(rng)));
        }
    }
    if entries.is_empty() {
        entries.push((random_subset(rng, sig.all()), random_outcome(rng)));
    }
    ClassifierModel::new(sig.clone(), entries)
}

/// A random formula in core form of at most `depth` nested constructors.
pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, sig: &Signature, depth: usize) -> Formula {
    let leaf = depth == 0 || rng.gen_bool(0.25);
    if leaf {
        return if !sig.is_empty() && rng.gen_bool(0.6) {
            Formula::atom(rng.gen_range(0..sig.len()))
        } else {
            Formula::t(random_outcome(rng))
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..7) {
        0 | 1 => Formula::not(random_formula(rng, sig, d)),
        2 => Formula::and(random_formula(rng, sig, d), random_formula(rng, sig, d)),
        3 => Formula::or(random_formula(rng, sig, d), random_formula(rng, sig, d)),
        4 => Formula::implies(random_formula(rng, sig, d), random_formula(rng, sig, d)),
        5 => Formula::boxed(random_subset(rng, sig.all()), random_formula(rng, sig, d)),
        _ => Formula::diamond(random_subset(rng, sig.all()), random_formula(rng, sig, d)),
    }
}
