//! Factor vocabularies, atom sets and outcome values.
//!
//! Atoms are numbered in the signature's canonical order: plaintiff
//! factors first, then defendant factors, each in declaration order. An
//! [`AtomSet`] is a bit pattern over those indices, so the numeric order of
//! the underlying word is the canonical order used for enumeration.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Hard limit imposed by the `u64` representation of [`AtomSet`].
pub const MAX_ATOMS: usize = 64;

/// A subset of the signature's atoms, stored as a bit pattern.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomSet(u64);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        AtomSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn first(n: usize) -> Self {
        if n >= 64 {
            AtomSet(u64::MAX)
        } else {
            AtomSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(atom: usize) -> Self {
        AtomSet(1 << atom)
    }

    pub fn contains(self, atom: usize) -> bool {
        atom < 64 && self.0 & (1 << atom) != 0
    }

    pub fn with(self, atom: usize) -> Self {
        AtomSet(self.0 | (1 << atom))
    }

    pub fn without(self, atom: usize) -> Self {
        AtomSet(self.0 & !(1 << atom))
    }

    pub fn union(self, other: AtomSet) -> Self {
        AtomSet(self.0 | other.0)
    }

    pub fn intersection(self, other: AtomSet) -> Self {
        AtomSet(self.0 & other.0)
    }

    pub fn difference(self, other: AtomSet) -> Self {
        AtomSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: AtomSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Member indices in ascending (canonical) order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in ascending numeric order.
    pub fn subsets(self) -> impl Iterator<Item = AtomSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(AtomSet(cur))
        })
    }

    /// All supersets of `self` within `universe`.
    pub fn supersets_within(self, universe: AtomSet) -> impl Iterator<Item = AtomSet> {
        let base = self;
        universe
            .difference(self)
            .subsets()
            .map(move |extra| base.union(extra))
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for AtomSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(AtomSet::EMPTY, AtomSet::with)
    }
}

/// A value of the decision function: `1`, `0` or `?`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    /// `1`, the plaintiff wins.
    Plaintiff,
    /// `0`, the defendant wins.
    Defendant,
    /// `?`, no decision.
    Undecided,
}

impl Outcome {
    pub const ALL: [Outcome; 3] = [Outcome::Plaintiff, Outcome::Defendant, Outcome::Undecided];
    pub const DECIDED: [Outcome; 2] = [Outcome::Plaintiff, Outcome::Defendant];

    pub fn opposite(self) -> Result<Outcome> {
        match self {
            Outcome::Plaintiff => Ok(Outcome::Defendant),
            Outcome::Defendant => Ok(Outcome::Plaintiff),
            Outcome::Undecided => Err(Error::UndefinedOpposite),
        }
    }

    pub fn is_decided(self) -> bool {
        self != Outcome::Undecided
    }

    pub fn symbol(self) -> char {
        match self {
            Outcome::Plaintiff => '1',
            Outcome::Defendant => '0',
            Outcome::Undecided => '?',
        }
    }

    pub fn from_symbol(c: char) -> Option<Outcome> {
        match c {
            '1' => Some(Outcome::Plaintiff),
            '0' => Some(Outcome::Defendant),
            '?' => Some(Outcome::Undecided),
            _ => None,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// The disjoint plaintiff and defendant factor vocabularies.
#[derive(Clone, Debug)]
pub struct Signature {
    names: Vec<String>,
    plaintiff_len: usize,
    index: HashMap<String, usize>,
    aliases: HashMap<String, usize>,
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.plaintiff_len == other.plaintiff_len && self.names == other.names
    }
}

impl Eq for Signature {}

/// Maps a leading `π`/`δ` onto the ASCII spellings `pi`/`delta`.
fn ascii_alias(name: &str) -> Option<String> {
    if let Some(rest) = name.strip_prefix('π') {
        Some(format!("pi{rest}"))
    } else {
        name.strip_prefix('δ').map(|rest| format!("delta{rest}"))
    }
}

/// Whether `name` lexes as a single identifier of the formula grammar.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_') && !matches!(name, "t" | "true" | "false")
}

impl Signature {
    pub fn new<P, D>(plaintiff: P, defendant: D) -> Result<Self>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        D: IntoIterator,
        D::Item: Into<String>,
    {
        let mut names: Vec<String> = plaintiff.into_iter().map(Into::into).collect();
        let plaintiff_len = names.len();
        names.extend(defendant.into_iter().map(Into::into));
        if names.len() > MAX_ATOMS {
            return Err(Error::capacity("signature", MAX_ATOMS, names.len()));
        }
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidSignature(format!(
                    "factor name `{name}` is not an identifier"
                )));
            }
            if index.insert(name.clone(), i).is_some() {
                let side = if i < plaintiff_len {
                    "plaintiff"
                } else {
                    "defendant"
                };
                return Err(Error::InvalidSignature(format!(
                    "factor `{name}` declared twice (again on the {side} side)"
                )));
            }
        }
        let mut aliases = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if let Some(alias) = ascii_alias(name) {
                if !index.contains_key(&alias) {
                    aliases.insert(alias, i);
                }
            }
        }
        Ok(Signature {
            names,
            plaintiff_len,
            index,
            aliases,
        })
    }

    /// Signature with `p` plaintiff factors `pi1..` and `d` defendant factors `delta1..`.
    pub fn numbered(p: usize, d: usize) -> Result<Self> {
        Signature::new(
            (1..=p).map(|i| format!("pi{i}")),
            (1..=d).map(|i| format!("delta{i}")),
        )
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn plaintiff_len(&self) -> usize {
        self.plaintiff_len
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn plaintiff_names(&self) -> &[String] {
        &self.names[..self.plaintiff_len]
    }

    pub fn defendant_names(&self) -> &[String] {
        &self.names[self.plaintiff_len..]
    }

    pub fn name(&self, atom: usize) -> &str {
        &self.names[atom]
    }

    /// Every atom of the signature.
    pub fn all(&self) -> AtomSet {
        AtomSet::first(self.len())
    }

    pub fn plaintiff(&self) -> AtomSet {
        AtomSet::first(self.plaintiff_len)
    }

    pub fn defendant(&self) -> AtomSet {
        self.all().difference(self.plaintiff())
    }

    /// The factors favouring `outcome`; `?` has none.
    pub fn side(&self, outcome: Outcome) -> AtomSet {
        match outcome {
            Outcome::Plaintiff => self.plaintiff(),
            Outcome::Defendant => self.defendant(),
            Outcome::Undecided => AtomSet::EMPTY,
        }
    }

    /// Looks up a factor by name. `π`/`δ` prefixed spellings and their
    /// `pi`/`delta` counterparts are interchangeable; exact matches win.
    pub fn lookup(&self, name: &str) -> Option<usize> {
        if let Some(&i) = self.index.get(name) {
            return Some(i);
        }
        if let Some(alias) = ascii_alias(name) {
            if let Some(&i) = self.index.get(&alias) {
                return Some(i);
            }
        }
        self.aliases.get(name).copied()
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<AtomSet> {
        names.iter().try_fold(AtomSet::EMPTY, |acc, name| {
            self.lookup(name.as_ref())
                .map(|i| acc.with(i))
                .ok_or_else(|| Error::UnknownFactor(name.as_ref().to_string()))
        })
    }

    pub fn names_of(&self, set: AtomSet) -> Vec<&str> {
        set.iter().map(|i| self.name(i)).collect()
    }

    /// `{pi1, delta2}` style rendering.
    pub fn format_set(&self, set: AtomSet) -> String {
        format!("{{{}}}", self.names_of(set).join(", "))
    }

    pub fn contains_set(&self, set: AtomSet) -> bool {
        set.is_subset(self.all())
    }

    pub(crate) fn ensure_at_most(&self, what: &'static str, bound: usize) -> Result<()> {
        if self.len() > bound {
            Err(Error::capacity(what, bound, self.len()))
        } else {
            Ok(())
        }
    }

    /// Every subset of the atoms, in canonical order.
    pub fn valuations(&self) -> impl Iterator<Item = AtomSet> {
        self.all().subsets()
    }
}
