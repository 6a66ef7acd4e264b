use crate::signature::{AtomSet, Outcome};

/// Formulas of the classifier logic, in core form.
///
/// Disjunction, implication, equivalence, the diamond and the constants are
/// abbreviations and expand to these five constructors when built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    /// An input factor, by signature index.
    Atom(usize),
    /// `t(x)`: the classifier outputs `x`.
    Decision(Outcome),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    /// `[W]φ`: φ holds at every state agreeing with the current one on `W`.
    Modal(AtomSet, Box<Formula>),
}

impl Formula {
    pub fn atom(i: usize) -> Formula {
        Formula::Atom(i)
    }

    pub fn t(x: Outcome) -> Formula {
        Formula::Decision(x)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::not(Formula::and(Formula::not(a), Formula::not(b)))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::not(Formula::and(a, Formula::not(b)))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(
            Formula::implies(a.clone(), b.clone()),
            Formula::implies(b, a),
        )
    }

    pub fn boxed(w: AtomSet, f: Formula) -> Formula {
        Formula::Modal(w, Box::new(f))
    }

    /// `<W>φ = ~[W]~φ`.
    pub fn diamond(w: AtomSet, f: Formula) -> Formula {
        Formula::not(Formula::boxed(w, Formula::not(f)))
    }

    /// `[]φ`, the universal modality.
    pub fn everywhere(f: Formula) -> Formula {
        Formula::boxed(AtomSet::EMPTY, f)
    }

    /// `<>φ`.
    pub fn somewhere(f: Formula) -> Formula {
        Formula::diamond(AtomSet::EMPTY, f)
    }

    /// `true`, expanded as `t(1) -> t(1)`.
    pub fn top() -> Formula {
        Formula::implies(
            Formula::t(Outcome::Plaintiff),
            Formula::t(Outcome::Plaintiff),
        )
    }

    pub fn bottom() -> Formula {
        Formula::not(Formula::top())
    }

    /// Left-nested conjunction; the empty conjunction is `true`.
    pub fn conjunction(parts: impl IntoIterator<Item = Formula>) -> Formula {
        parts
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or_else(Formula::top)
    }

    /// Left-nested disjunction; the empty disjunction is `false`.
    pub fn disjunction(parts: impl IntoIterator<Item = Formula>) -> Formula {
        parts
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or_else(Formula::bottom)
    }

    pub fn is_top(&self) -> bool {
        *self == Formula::top()
    }

    /// Input atoms mentioned anywhere, including in modal index sets.
    pub fn atoms(&self) -> AtomSet {
        match self {
            Formula::Atom(i) => AtomSet::singleton(*i),
            Formula::Decision(_) => AtomSet::EMPTY,
            Formula::Not(f) => f.atoms(),
            Formula::And(a, b) => a.atoms().union(b.atoms()),
            Formula::Modal(w, f) => w.union(f.atoms()),
        }
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Decision(_) => 1,
            Formula::Not(f) | Formula::Modal(_, f) => 1 + f.size(),
            Formula::And(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Conjuncts of a left- or right-nested conjunction, flattened.
    pub fn conjuncts(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            match f {
                Formula::And(a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
                other => out.push(other),
            }
        }
        out
    }
}
