use std::collections::HashMap;

use crate::bcl::formula::Formula;
use crate::error::{Error, Result};
use crate::signature::{AtomSet, Outcome, Signature};

/// Largest signature for which a model over every valuation may be built.
pub const FULL_MODEL_BOUND: usize = 20;

/// A finite set of states with a total decision function into `{1, 0, ?}`.
///
/// States are valuations, so no two states share an atom set. They are
/// stored in canonical (ascending) order.
#[derive(Clone, Debug)]
pub struct ClassifierModel {
    signature: Signature,
    states: Vec<AtomSet>,
    decisions: Vec<Outcome>,
    index: HashMap<AtomSet, usize>,
}

impl PartialEq for ClassifierModel {
    fn eq(&self, other: &Self) -> bool {
        self.signature == other.signature
            && self.states == other.states
            && self.decisions == other.decisions
    }
}

impl Eq for ClassifierModel {}

impl ClassifierModel {
    pub fn new(
        signature: Signature,
        entries: impl IntoIterator<Item = (AtomSet, Outcome)>,
    ) -> Result<Self> {
        let mut pairs: Vec<(AtomSet, Outcome)> = entries.into_iter().collect();
        if pairs.is_empty() {
            return Err(Error::InvalidModel(
                "a model needs at least one state".into(),
            ));
        }
        pairs.sort_by_key(|&(s, _)| s);
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidModel(format!(
                    "state {} listed twice",
                    signature.format_set(w[0].0)
                )));
            }
        }
        if let Some(&(s, _)) = pairs.iter().find(|(s, _)| !signature.contains_set(*s)) {
            return Err(Error::InvalidModel(format!(
                "state {s:?} mentions atoms outside the signature"
            )));
        }
        let (states, decisions): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let index = states.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        Ok(ClassifierModel {
            signature,
            states,
            decisions,
            index,
        })
    }

    /// The model whose states are all valuations, decided by `decide`.
    pub fn full(signature: Signature, decide: impl Fn(AtomSet) -> Outcome) -> Result<Self> {
        signature.ensure_at_most("full state space", FULL_MODEL_BOUND)?;
        let entries: Vec<_> = signature.valuations().map(|s| (s, decide(s))).collect();
        ClassifierModel::new(signature, entries)
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn states(&self) -> &[AtomSet] {
        &self.states
    }

    pub fn decisions(&self) -> &[Outcome] {
        &self.decisions
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (AtomSet, Outcome)> + '_ {
        self.states
            .iter()
            .copied()
            .zip(self.decisions.iter().copied())
    }

    pub fn decision(&self, s: AtomSet) -> Option<Outcome> {
        self.index.get(&s).map(|&i| self.decisions[i])
    }

    pub fn contains(&self, s: AtomSet) -> bool {
        self.index.contains_key(&s)
    }

    /// Whether every valuation of the signature is a state.
    pub fn is_full(&self) -> bool {
        self.signature.len() < 64 && self.states.len() as u64 == 1u64 << self.signature.len()
    }

    fn check_formula(&self, f: &Formula) -> Result<()> {
        if self.signature.contains_set(f.atoms()) {
            Ok(())
        } else {
            Err(Error::Usage(
                "formula mentions atoms outside the model's signature".into(),
            ))
        }
    }

    fn state_index(&self, s: AtomSet) -> Result<usize> {
        self.index
            .get(&s)
            .copied()
            .ok_or_else(|| Error::StateNotInModel(self.signature.format_set(s)))
    }

    /// `(C, s) |= f`.
    pub fn satisfies(&self, s: AtomSet, f: &Formula) -> Result<bool> {
        let i = self.state_index(s)?;
        self.check_formula(f)?;
        Ok(self.label(f)[i])
    }

    /// Truth value of `f` at every state, positionally aligned with [`Self::states`].
    pub fn truth_set(&self, f: &Formula) -> Result<Vec<bool>> {
        self.check_formula(f)?;
        Ok(self.label(f))
    }

    pub fn holds_everywhere(&self, f: &Formula) -> Result<bool> {
        Ok(self.truth_set(f)?.into_iter().all(|b| b))
    }

    /// First state (canonical order) satisfying `f`.
    pub fn first_satisfying(&self, f: &Formula) -> Result<Option<AtomSet>> {
        let truth = self.truth_set(f)?;
        Ok(truth.iter().position(|&b| b).map(|i| self.states[i]))
    }

    /// Bottom-up labelling: each subformula is evaluated once over all states.
    fn label(&self, f: &Formula) -> Vec<bool> {
        match f {
            Formula::Atom(p) => self.states.iter().map(|s| s.contains(*p)).collect(),
            Formula::Decision(x) => self.decisions.iter().map(|d| d == x).collect(),
            Formula::Not(g) => self.label(g).into_iter().map(|b| !b).collect(),
            Formula::And(a, b) => {
                let mut left = self.label(a);
                if left.iter().any(|&v| v) {
                    let right = self.label(b);
                    for (l, r) in left.iter_mut().zip(right) {
                        *l &= r;
                    }
                }
                left
            }
            Formula::Modal(w, g) => {
                let inner = self.label(g);
                self.necessitate(*w, &inner)
            }
        }
    }

    fn necessitate(&self, w: AtomSet, inner: &[bool]) -> Vec<bool> {
        let n = self.states.len();
        if w.is_empty() {
            return vec![inner.iter().all(|&b| b); n];
        }
        if self.signature.all().is_subset(w) {
            return inner.to_vec();
        }
        if n <= 16 {
            return (0..n)
                .map(|i| {
                    let key = self.states[i].intersection(w);
                    (0..n).all(|j| inner[j] || self.states[j].intersection(w) != key)
                })
                .collect();
        }
        let mut groups: HashMap<AtomSet, bool> = HashMap::new();
        for (s, &b) in self.states.iter().zip(inner) {
            *groups.entry(s.intersection(w)).or_insert(true) &= b;
        }
        self.states
            .iter()
            .map(|s| groups[&s.intersection(w)])
            .collect()
    }
}
