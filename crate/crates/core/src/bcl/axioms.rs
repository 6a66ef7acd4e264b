//! Semantic check of the axiom schemata of the classifier logic: random
//! instances are verified valid over every enumerated model.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bcl::formula::Formula;
use crate::bcl::search::{is_valid_tiny, ModelClass, PointedModel};
use crate::bcl::term::Term;
use crate::error::Result;
use crate::gen::{random_formula, random_subset};
use crate::signature::{AtomSet, Outcome, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schema {
    K,
    T,
    Four,
    B,
    Red,
    AtLeast,
    AtMost,
    Funct,
}

impl Schema {
    pub const ALL: [Schema; 8] = [
        Schema::K,
        Schema::T,
        Schema::Four,
        Schema::B,
        Schema::Red,
        Schema::AtLeast,
        Schema::AtMost,
        Schema::Funct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Schema::K => "K",
            Schema::T => "T",
            Schema::Four => "4",
            Schema::B => "B",
            Schema::Red => "Red",
            Schema::AtLeast => "AtLeast",
            Schema::AtMost => "AtMost",
            Schema::Funct => "Funct",
        }
    }

    /// A random instance over `sig`, with subformulas of depth `depth`.
    pub fn instance<R: Rng + ?Sized>(self, rng: &mut R, sig: &Signature, depth: usize) -> Formula {
        let phi = |rng: &mut R| random_formula(rng, sig, depth);
        match self {
            Schema::K => {
                let (a, b) = (phi(rng), phi(rng));
                Formula::implies(
                    Formula::and(
                        Formula::everywhere(a.clone()),
                        Formula::everywhere(Formula::implies(a, b.clone())),
                    ),
                    Formula::everywhere(b),
                )
            }
            Schema::T => {
                let a = phi(rng);
                Formula::implies(Formula::everywhere(a.clone()), a)
            }
            Schema::Four => {
                let a = phi(rng);
                Formula::implies(
                    Formula::everywhere(a.clone()),
                    Formula::everywhere(Formula::everywhere(a)),
                )
            }
            Schema::B => {
                let a = phi(rng);
                Formula::implies(a.clone(), Formula::everywhere(Formula::somewhere(a)))
            }
            Schema::Red => {
                let a = phi(rng);
                let w = random_subset(rng, sig.all());
                red_instance(w, a)
            }
            Schema::AtLeast => {
                let mut values = Outcome::ALL;
                values.shuffle(rng);
                Formula::disjunction(values.into_iter().map(Formula::t))
            }
            Schema::AtMost => {
                let x = *Outcome::ALL.choose(rng).expect("non-empty");
                let others: Vec<_> = Outcome::ALL.into_iter().filter(|&y| y != x).collect();
                let y = *others.choose(rng).expect("non-empty");
                Formula::implies(Formula::t(x), Formula::not(Formula::t(y)))
            }
            Schema::Funct => {
                let x = *Outcome::ALL.choose(rng).expect("non-empty");
                funct_instance(sig, x)
            }
        }
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `[W]φ <-> AND_{Y ⊆ W} (conj_Y^W -> [](conj_Y^W -> φ))`.
pub fn red_instance(w: AtomSet, phi: Formula) -> Formula {
    let rhs = Formula::conjunction(w.subsets().map(|y| {
        let d = Term::of_state(y, w).to_formula();
        Formula::implies(
            d.clone(),
            Formula::everywhere(Formula::implies(d, phi.clone())),
        )
    }));
    Formula::iff(Formula::boxed(w, phi), rhs)
}

/// `AND_Y ((conj_Y ∧ t(x)) -> [](conj_Y -> t(x)))` over all valuations `Y`.
pub fn funct_instance(sig: &Signature, x: Outcome) -> Formula {
    Formula::conjunction(sig.valuations().map(|y| {
        let d = Term::of_state(y, sig.all()).to_formula();
        Formula::implies(
            Formula::and(d.clone(), Formula::t(x)),
            Formula::everywhere(Formula::implies(d, Formula::t(x))),
        )
    }))
}

#[derive(Clone, Debug)]
pub struct SchemaResult {
    pub schema: Schema,
    pub instances: usize,
    pub failures: Vec<(Formula, PointedModel)>,
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub schemata: Vec<SchemaResult>,
    /// Valid formulas whose necessitation was checked.
    pub necessitation_checked: usize,
    pub necessitation_failures: Vec<(Formula, PointedModel)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.necessitation_failures.is_empty()
            && self.schemata.iter().all(|s| s.failures.is_empty())
    }
}

/// Checks `instances` random instances of every schema for validity over all
/// models of `sig`, then checks that necessitation of each valid instance is
/// again valid.
pub fn check_axiom_suite<R: Rng + ?Sized>(
    rng: &mut R,
    sig: &Signature,
    instances: usize,
) -> Result<AxiomReport> {
    let mut schemata = Vec::new();
    let mut valid = Vec::new();
    for schema in Schema::ALL {
        let mut failures = Vec::new();
        for _ in 0..instances {
            let f = schema.instance(rng, sig, 2);
            match is_valid_tiny(&f, sig, ModelClass::Cm)? {
                Some(counter) => failures.push((f, counter)),
                None => valid.push(f),
            }
        }
        schemata.push(SchemaResult {
            schema,
            instances,
            failures,
        });
    }
    let mut necessitation_failures = Vec::new();
    for f in &valid {
        let nec = Formula::everywhere(f.clone());
        if let Some(counter) = is_valid_tiny(&nec, sig, ModelClass::Cm)? {
            necessitation_failures.push((nec, counter));
        }
    }
    Ok(AxiomReport {
        schemata,
        necessitation_checked: valid.len(),
        necessitation_failures,
    })
}
