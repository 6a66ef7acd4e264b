use std::cmp::Ordering;
use std::fmt;

use crate::bcl::formula::Formula;
use crate::error::{Error, Result};
use crate::signature::{AtomSet, Signature};

/// A consistent conjunction of input literals. The empty term is `true`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Term {
    positive: AtomSet,
    negative: AtomSet,
}

impl Term {
    pub const TOP: Term = Term {
        positive: AtomSet::EMPTY,
        negative: AtomSet::EMPTY,
    };

    pub fn new(positive: AtomSet, negative: AtomSet) -> Result<Term> {
        if !positive.is_disjoint(negative) {
            return Err(Error::Usage(format!(
                "term would contain complementary literals on atoms {:?}",
                positive.intersection(negative)
            )));
        }
        Ok(Term { positive, negative })
    }

    /// `conj_X^Y`: atoms of `x_set` positive, the rest of `y_set` negative.
    pub fn conj(x_set: AtomSet, y_set: AtomSet) -> Result<Term> {
        if !x_set.is_subset(y_set) {
            return Err(Error::Usage(format!(
                "conj needs X within Y, but {:?} is not within {:?}",
                x_set, y_set
            )));
        }
        Ok(Term {
            positive: x_set,
            negative: y_set.difference(x_set),
        })
    }

    /// The restriction of valuation `s` to `atoms`.
    pub fn of_state(s: AtomSet, atoms: AtomSet) -> Term {
        Term {
            positive: s.intersection(atoms),
            negative: atoms.difference(s),
        }
    }

    pub fn positive(&self) -> AtomSet {
        self.positive
    }

    pub fn negative(&self) -> AtomSet {
        self.negative
    }

    pub fn atoms(&self) -> AtomSet {
        self.positive.union(self.negative)
    }

    /// Number of literals.
    pub fn len(&self) -> usize {
        self.atoms().len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_top()
    }

    pub fn is_top(&self) -> bool {
        self.atoms().is_empty()
    }

    pub fn holds(&self, s: AtomSet) -> bool {
        self.positive.is_subset(s) && self.negative.is_disjoint(s)
    }

    /// Whether every literal of `self` occurs in `other`.
    pub fn is_part_of(&self, other: &Term) -> bool {
        self.positive.is_subset(other.positive) && self.negative.is_subset(other.negative)
    }

    /// The term with the literal on `atom` removed.
    pub fn without(&self, atom: usize) -> Term {
        Term {
            positive: self.positive.without(atom),
            negative: self.negative.without(atom),
        }
    }

    /// Positive literals first, then negative ones, each in canonical order.
    pub fn to_formula(&self) -> Formula {
        Formula::conjunction(
            self.positive
                .iter()
                .map(Formula::atom)
                .chain(self.negative.iter().map(|i| Formula::not(Formula::atom(i)))),
        )
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        TermDisplay { term: self, sig }
    }

    /// Reporting order: fewer literals first, then atom by atom in canonical
    /// order with a positive literal before a negative one before absence.
    pub fn canonical_cmp(&self, other: &Term) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.literal_cmp(other))
    }

    fn literal_cmp(&self, other: &Term) -> Ordering {
        let rank = |t: &Term, i: usize| {
            if t.positive.contains(i) {
                0u8
            } else if t.negative.contains(i) {
                1
            } else {
                2
            }
        };
        let span = self.atoms().union(other.atoms());
        span.iter()
            .map(|i| rank(self, i).cmp(&rank(other, i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

struct TermDisplay<'a> {
    term: &'a Term,
    sig: &'a Signature,
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.term.is_top() {
            return f.write_str("true");
        }
        let lits: Vec<String> = self
            .term
            .positive
            .iter()
            .map(|i| self.sig.name(i).to_string())
            .chain(
                self.term
                    .negative
                    .iter()
                    .map(|i| format!("~{}", self.sig.name(i))),
            )
            .collect();
        f.write_str(&lits.join(" & "))
    }
}
