//! Completeness and two-way monotonicity: the constraints that make a
//! classifier model respect precedent. Each is available as a direct
//! semantic check and as the literal formula.

use crate::bcl::formula::Formula;
use crate::bcl::model::ClassifierModel;
use crate::bcl::term::Term;
use crate::error::Result;
use crate::signature::{AtomSet, Outcome, Signature};

/// Default atom bound for building the (exponentially large) formulas.
pub const DEFAULT_FORMULA_BOUND: usize = 4;
/// Hard ceiling on the formula bound.
pub const MAX_FORMULA_BOUND: usize = 8;

/// Every valuation is a state.
pub fn check_compl(model: &ClassifierModel) -> bool {
    model.is_full()
}

/// Whether `s2` is at least as strong as `s1` for `x`: it keeps all of
/// `s1`'s pro-`x` factors and adds no con-`x` factor.
pub fn a_fortiori(sig: &Signature, x: Outcome, s1: AtomSet, s2: AtomSet) -> bool {
    let pro = sig.side(x);
    let con = match x.opposite() {
        Ok(other) => sig.side(other),
        Err(_) => return false,
    };
    s1.intersection(pro).is_subset(s2) && s2.intersection(con).is_subset(s1)
}

/// Every decided state passes its outcome on to every a fortiori stronger state.
pub fn check_2mon(model: &ClassifierModel) -> bool {
    let sig = model.signature();
    model.entries().all(|(s, x)| {
        !x.is_decided()
            || model
                .entries()
                .all(|(s2, y)| y == x || !a_fortiori(sig, x, s, s2))
    })
}

pub fn in_cm_prec(model: &ClassifierModel) -> bool {
    check_compl(model) && check_2mon(model)
}

fn description(sig: &Signature, s: AtomSet) -> Formula {
    Term::of_state(s, sig.all()).to_formula()
}

pub fn build_compl(sig: &Signature) -> Result<Formula> {
    build_compl_with_bound(sig, DEFAULT_FORMULA_BOUND)
}

pub fn build_compl_with_bound(sig: &Signature, bound: usize) -> Result<Formula> {
    sig.ensure_at_most("Compl formula", bound.min(MAX_FORMULA_BOUND))?;
    Ok(Formula::conjunction(
        sig.valuations()
            .map(|s| Formula::somewhere(description(sig, s))),
    ))
}

pub fn build_2mon(sig: &Signature) -> Result<Formula> {
    build_2mon_with_bound(sig, DEFAULT_FORMULA_BOUND)
}

/// For each decided `x`, pro set `X` and con set `Y`: if some state is
/// exactly `X ∪ Y` with outcome `x`, then every state `X' ∪ Y'` with
/// `X ⊆ X'` (pro) and `Y' ⊆ Y` has outcome `x`.
pub fn build_2mon_with_bound(sig: &Signature, bound: usize) -> Result<Formula> {
    sig.ensure_at_most("2Mon formula", bound.min(MAX_FORMULA_BOUND))?;
    let mut conjuncts = Vec::new();
    for x in [Outcome::Defendant, Outcome::Plaintiff] {
        let pro = sig.side(x);
        let con = sig.side(x.opposite()?);
        for big_x in pro.subsets() {
            for big_y in con.subsets() {
                let premise = Formula::somewhere(Formula::and(
                    description(sig, big_x.union(big_y)),
                    Formula::t(x),
                ));
                let consequences = big_x.supersets_within(pro).flat_map(|x2| {
                    big_y.subsets().map(move |y2| {
                        Formula::everywhere(Formula::implies(
                            description(sig, x2.union(y2)),
                            Formula::t(x),
                        ))
                    })
                });
                conjuncts.push(Formula::implies(
                    premise,
                    Formula::conjunction(consequences),
                ));
            }
        }
    }
    Ok(Formula::conjunction(conjuncts))
}
