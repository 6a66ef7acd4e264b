//! Brute-force oracles written directly from the definitions, sharing no
//! code with the library's decision procedures. Everything works on raw
//! bitmasks: bit `i` is the `i`-th factor in signature order, plaintiff
//! factors first.

#![allow(dead_code)]

use precedent_logic::bcl::formula::Formula;
use precedent_logic::{AtomSet, Outcome, Signature};
use proptest::prelude::*;

pub const PLAINTIFF: u8 = 1;
pub const DEFENDANT: u8 = 0;
pub const UNDECIDED: u8 = 2;

#[derive(Clone, Copy, Debug)]
pub struct RawCase {
    pub facts: u64,
    pub reason: u64,
    pub outcome: u8,
}

#[derive(Clone, Copy, Debug)]
pub struct Sides {
    pub plt: u64,
    pub dfd: u64,
}

impl Sides {
    pub fn of(sig: &Signature) -> Self {
        Sides {
            plt: sig.plaintiff().bits(),
            dfd: sig.defendant().bits(),
        }
    }

    pub fn all(&self) -> u64 {
        self.plt | self.dfd
    }

    pub fn pro(&self, x: u8) -> u64 {
        if x == PLAINTIFF {
            self.plt
        } else {
            self.dfd
        }
    }

    pub fn con(&self, x: u8) -> u64 {
        if x == PLAINTIFF {
            self.dfd
        } else {
            self.plt
        }
    }
}

pub fn raw(c: &precedent_logic::Precedent) -> RawCase {
    RawCase {
        facts: c.facts.bits(),
        reason: c.reason.bits(),
        outcome: code(c.outcome),
    }
}

pub fn code(x: Outcome) -> u8 {
    match x {
        Outcome::Plaintiff => PLAINTIFF,
        Outcome::Defendant => DEFENDANT,
        Outcome::Undecided => UNDECIDED,
    }
}

pub fn subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// All subsets of `mask`.
pub fn subsets(mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut sub = 0u64;
    loop {
        out.push(sub);
        if sub == mask {
            break;
        }
        sub = (sub.wrapping_sub(mask)) & mask;
    }
    out
}

/// `loser <_c winner`, straight from the definition of a single
/// precedent's preference.
pub fn case_prefers(sides: Sides, c: &RawCase, winner: u64, winner_side: u8, loser: u64) -> bool {
    c.outcome == winner_side
        && subset(loser, c.facts & sides.con(c.outcome))
        && subset(c.reason, winner)
}

/// Consistency by enumerating every pair of opposed reasons and looking for
/// two that are each preferred to the other.
pub fn consistent_by_reason_pairs(sides: Sides, cases: &[RawCase]) -> bool {
    for y1 in subsets(sides.plt) {
        for y0 in subsets(sides.dfd) {
            let one_wins = cases
                .iter()
                .any(|c| case_prefers(sides, c, y1, PLAINTIFF, y0));
            let zero_wins = cases
                .iter()
                .any(|c| case_prefers(sides, c, y0, DEFENDANT, y1));
            if one_wins && zero_wins {
                return false;
            }
        }
    }
    true
}

/// The two-way monotonicity condition on a decision table indexed by
/// valuation bits.
pub fn two_way_monotone(sides: Sides, f: &[u8]) -> bool {
    let n = f.len() as u64;
    for s in 0..n {
        let x = f[s as usize];
        if x == UNDECIDED {
            continue;
        }
        for s2 in 0..n {
            let stronger = subset(s & sides.pro(x), s2) && subset(s2 & sides.con(x), s);
            if stronger && f[s2 as usize] != x {
                return false;
            }
        }
    }
    true
}

/// Every decision table over all valuations that is two-way monotone.
pub fn precedent_respecting_tables(sides: Sides) -> Vec<Vec<u8>> {
    let states = 1usize << sides.all().count_ones();
    let total = 3usize.pow(states as u32);
    (0..total)
        .map(|mut code| {
            (0..states)
                .map(|_| {
                    let d = (code % 3) as u8;
                    code /= 3;
                    d
                })
                .collect::<Vec<u8>>()
        })
        .filter(|f| two_way_monotone(sides, f))
        .collect()
}

/// Whether some table decides each case's translated valuation (reason plus
/// con-side facts) with the case's outcome.
pub fn translation_satisfiable(sides: Sides, cases: &[RawCase], tables: &[Vec<u8>]) -> bool {
    tables.iter().any(|f| {
        cases.iter().all(|c| {
            let state = c.reason | (c.facts & sides.con(c.outcome));
            f[state as usize] == c.outcome
        })
    })
}

/// A term as (positive, negative) bitmasks.
pub type RawTerm = (u64, u64);

pub fn term_holds(t: RawTerm, s: u64) -> bool {
    subset(t.0, s) && t.1 & s == 0
}

/// Every consistent term over `all`.
pub fn all_terms(all: u64) -> Vec<RawTerm> {
    let mut out = Vec::new();
    for atoms in subsets(all) {
        for pos in subsets(atoms) {
            out.push((pos, atoms & !pos));
        }
    }
    out
}

/// Implicant in a full table: every valuation satisfying the term is
/// decided `x`.
pub fn implicant(f: &[u8], t: RawTerm, x: u8) -> bool {
    (0..f.len() as u64).all(|s| !term_holds(t, s) || f[s as usize] == x)
}

/// Prime: an implicant none of whose one-literal weakenings is.
pub fn prime_implicant(f: &[u8], t: RawTerm, x: u8) -> bool {
    implicant(f, t, x)
        && (0..64)
            .filter(|i| (t.0 | t.1) & (1 << i) != 0)
            .all(|i| !implicant(f, (t.0 & !(1 << i), t.1 & !(1 << i)), x))
}

pub fn prime_implicants(f: &[u8], all: u64, x: u8) -> Vec<RawTerm> {
    all_terms(all)
        .into_iter()
        .filter(|&t| prime_implicant(f, t, x))
        .collect()
}

/// Restriction of `s` to `atoms` as a term.
pub fn restrict(s: u64, atoms: u64) -> RawTerm {
    (s & atoms, atoms & !s)
}

/// Atom sets of weak abductive explanations of `f(s)` at `s`.
pub fn weak_abductive(f: &[u8], all: u64, s: u64) -> Vec<u64> {
    let x = f[s as usize];
    subsets(all)
        .into_iter()
        .filter(|&a| implicant(f, restrict(s, a), x))
        .collect()
}

/// Atom sets of weak contrastive explanations: some valuation agreeing with
/// `s` outside them gets a different decision.
pub fn weak_contrastive(f: &[u8], all: u64, s: u64) -> Vec<u64> {
    let x = f[s as usize];
    subsets(all)
        .into_iter()
        .filter(|&a| {
            let fixed = all & !a;
            (0..f.len() as u64).any(|v| v & fixed == s & fixed && f[v as usize] != x)
        })
        .collect()
}

pub fn subset_minimal(family: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = family
        .iter()
        .copied()
        .filter(|&a| !family.iter().any(|&b| b != a && subset(b, a)))
        .collect();
    out.sort();
    out
}

pub fn minimal_hitting_sets(family: &[u64], all: u64) -> Vec<u64> {
    let hitting: Vec<u64> = subsets(all)
        .into_iter()
        .filter(|&h| family.iter().all(|&f| f & h != 0))
        .collect();
    subset_minimal(&hitting)
}

pub fn table(model: &precedent_logic::bcl::ClassifierModel) -> Vec<u8> {
    let mut f = vec![UNDECIDED; 1 << model.signature().len()];
    for (s, x) in model.entries() {
        f[s.bits() as usize] = code(x);
    }
    f
}

pub fn atom_bits(sets: &[AtomSet]) -> Vec<u64> {
    let mut v: Vec<u64> = sets.iter().map(|s| s.bits()).collect();
    v.sort();
    v
}

/// Formulas in core form over a signature with `atoms` factors.
pub fn formula_strategy(atoms: usize) -> impl Strategy<Value = Formula> {
    let outcome = prop_oneof![
        Just(Outcome::Plaintiff),
        Just(Outcome::Defendant),
        Just(Outcome::Undecided)
    ];
    let leaf = prop_oneof![
        (0..atoms).prop_map(Formula::atom),
        outcome.prop_map(Formula::t),
    ];
    let full = (1u64 << atoms) - 1;
    leaf.prop_recursive(6, 48, 2, move |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::iff(a, b)),
            (0..=full, inner.clone()).prop_map(|(w, f)| Formula::boxed(AtomSet::from_bits(w), f)),
            (0..=full, inner).prop_map(|(w, f)| Formula::diamond(AtomSet::from_bits(w), f)),
        ]
    })
}
