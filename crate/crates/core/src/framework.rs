//! Argumentation frameworks, labelings and the labeling spaces they induce.
//!
//! Arguments are addressed by their position in the framework's canonical
//! order (the order in which they were declared). Labelings store the `in` and
//! `out` sets as bit masks over those positions, so a framework holds at most
//! [`MAX_ARGUMENTS`] arguments.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub const MAX_ARGUMENTS: usize = 64;

/// Default argument cap for the `3^n` labeling scan.
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    In,
    Out,
    Undec,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::In, Label::Out, Label::Undec];

    /// `in` and `out` swapped; `undec` is its own mirror.
    pub fn mirror(self) -> Label {
        match self {
            Label::In => Label::Out,
            Label::Out => Label::In,
            Label::Undec => Label::Undec,
        }
    }

    pub fn is_decided(self) -> bool {
        self != Label::Undec
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::In => "in",
            Label::Out => "out",
            Label::Undec => "undec",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A total labeling of a framework's arguments.
///
/// Equality is extensional. The total order is lexicographic over the
/// argument order with `in < out < undec`, which is also the enumeration order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Labeling {
    len: u8,
    inn: BitSet,
    out: BitSet,
}

impl Labeling {
    pub fn all_undec(len: usize) -> Labeling {
        assert!(len <= MAX_ARGUMENTS);
        Labeling { len: len as u8, inn: BitSet::EMPTY, out: BitSet::EMPTY }
    }

    /// Builds a labeling from its `in` and `out` sets; everything else is `undec`.
    pub fn from_sets(len: usize, inn: BitSet, out: BitSet) -> Result<Labeling> {
        if len > MAX_ARGUMENTS {
            return Err(Error::Domain(format!("labelings support at most {MAX_ARGUMENTS} arguments")));
        }
        let domain = BitSet::full(len);
        if !inn.is_subset(domain) || !out.is_subset(domain) {
            return Err(Error::Domain("labeled argument outside the domain".into()));
        }
        if !inn.is_disjoint(out) {
            return Err(Error::Domain("argument labeled both in and out".into()));
        }
        Ok(Labeling { len: len as u8, inn, out })
    }

    pub fn from_labels(labels: &[Label]) -> Labeling {
        assert!(labels.len() <= MAX_ARGUMENTS);
        let mut l = Labeling::all_undec(labels.len());
        for (i, &label) in labels.iter().enumerate() {
            l.set(i, label);
        }
        l
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, arg: usize) -> Label {
        debug_assert!(arg < self.len());
        if self.inn.contains(arg) {
            Label::In
        } else if self.out.contains(arg) {
            Label::Out
        } else {
            Label::Undec
        }
    }

    pub fn set(&mut self, arg: usize, label: Label) {
        assert!(arg < self.len(), "argument {arg} outside labeling domain");
        self.inn.remove(arg);
        self.out.remove(arg);
        match label {
            Label::In => self.inn.insert(arg),
            Label::Out => self.out.insert(arg),
            Label::Undec => {}
        }
    }

    pub fn with(mut self, arg: usize, label: Label) -> Labeling {
        self.set(arg, label);
        self
    }

    pub fn in_set(&self) -> BitSet {
        self.inn
    }

    pub fn out_set(&self) -> BitSet {
        self.out
    }

    pub fn dec_set(&self) -> BitSet {
        self.inn.union(self.out)
    }

    pub fn undec_set(&self) -> BitSet {
        BitSet::full(self.len()).difference(self.dec_set())
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub(crate) fn same_domain(&self, other: &Labeling) -> Result<()> {
        if self.len == other.len {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "labelings over {} and {} arguments cannot be compared",
                self.len, other.len
            )))
        }
    }
}

impl Ord for Labeling {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for i in 0..self.len() {
                match self.get(i).cmp(&other.get(i)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Labeling {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?})", self.inn, self.out, self.undec_set())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SemanticsKind {
    All,
    Admissible,
    Complete,
}

impl SemanticsKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SemanticsKind::All => "all",
            SemanticsKind::Admissible => "admissible",
            SemanticsKind::Complete => "complete",
        }
    }
}

impl FromStr for SemanticsKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(SemanticsKind::All),
            "admissible" | "adm" => Ok(SemanticsKind::Admissible),
            "complete" | "com" => Ok(SemanticsKind::Complete),
            _ => Err(Error::Config(format!("unknown semantics `{s}` (expected all, admissible, complete)"))),
        }
    }
}

impl fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `⟨A, ⇀⟩`: a finite set of arguments and a defeat relation between them.
#[derive(Clone, PartialEq, Eq)]
pub struct ArgumentationFramework {
    names: Vec<String>,
    index: HashMap<String, usize>,
    attacks: BTreeSet<(usize, usize)>,
    attackers: Vec<BitSet>,
}

impl ArgumentationFramework {
    /// Builds a framework from argument names (in canonical order) and attacks
    /// given by name. Duplicate attacks collapse; duplicate names are rejected.
    pub fn new<S, T>(arguments: impl IntoIterator<Item = S>, attacks: impl IntoIterator<Item = (T, T)>) -> Result<Self>
    where
        S: Into<String>,
        T: AsRef<str>,
    {
        let mut af = ArgumentationFramework::empty();
        for name in arguments {
            let name = name.into();
            if af.index.contains_key(&name) {
                return Err(Error::Domain(format!("duplicate argument `{name}`")));
            }
            af.push_argument(name)?;
        }
        for (from, to) in attacks {
            let a = af.require(from.as_ref())?;
            let b = af.require(to.as_ref())?;
            af.add_attack(a, b);
        }
        Ok(af)
    }

    /// Builds a framework over `n` arguments from index pairs.
    pub fn from_indices(names: Vec<String>, attacks: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = names.len();
        let mut af = ArgumentationFramework::new(names, std::iter::empty::<(&str, &str)>())?;
        for (a, b) in attacks {
            if a >= n || b >= n {
                return Err(Error::Domain(format!("attack ({a},{b}) outside {n} arguments")));
            }
            af.add_attack(a, b);
        }
        Ok(af)
    }

    pub fn empty() -> Self {
        ArgumentationFramework { names: Vec::new(), index: HashMap::new(), attacks: BTreeSet::new(), attackers: Vec::new() }
    }

    pub(crate) fn push_argument(&mut self, name: String) -> Result<usize> {
        if let Some(&i) = self.index.get(&name) {
            return Ok(i);
        }
        if self.names.len() == MAX_ARGUMENTS {
            return Err(Error::Domain(format!("frameworks support at most {MAX_ARGUMENTS} arguments")));
        }
        let i = self.names.len();
        self.index.insert(name.clone(), i);
        self.names.push(name);
        self.attackers.push(BitSet::EMPTY);
        Ok(i)
    }

    pub(crate) fn add_attack(&mut self, from: usize, to: usize) {
        self.attacks.insert((from, to));
        self.attackers[to].insert(from);
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn arguments(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, arg: usize) -> &str {
        &self.names[arg]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::Domain(format!("unknown argument `{name}`")))
    }

    /// Attacks as index pairs, sorted.
    pub fn attacks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.attacks.iter().copied()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn attacks_on(&self, arg: usize) -> BitSet {
        self.attackers[arg]
    }

    pub fn attacks_between(&self, from: usize, to: usize) -> bool {
        self.attackers[to].contains(from)
    }

    pub fn all_undec(&self) -> Labeling {
        Labeling::all_undec(self.len())
    }

    /// Builds a labeling from named `in` and `out` sets; unnamed arguments are `undec`.
    pub fn labeling<'a>(
        &self,
        inn: impl IntoIterator<Item = &'a str>,
        out: impl IntoIterator<Item = &'a str>,
    ) -> Result<Labeling> {
        let inn = inn.into_iter().map(|n| self.require(n)).collect::<Result<BitSet>>()?;
        let out = out.into_iter().map(|n| self.require(n)).collect::<Result<BitSet>>()?;
        Labeling::from_sets(self.len(), inn, out)
    }

    pub(crate) fn check_domain(&self, l: &Labeling) -> Result<()> {
        if l.len() == self.len() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "labeling covers {} arguments but the framework has {}",
                l.len(),
                self.len()
            )))
        }
    }

    /// `in` arguments have only `out` attackers; `out` arguments have an `in` attacker.
    pub fn is_admissible(&self, l: &Labeling) -> Result<bool> {
        self.check_domain(l)?;
        Ok(self.admissible_unchecked(l))
    }

    /// Admissible, and every `undec` argument has no `in` attacker and some non-`out` attacker.
    pub fn is_complete(&self, l: &Labeling) -> Result<bool> {
        self.check_domain(l)?;
        Ok(self.complete_unchecked(l))
    }

    pub fn satisfies(&self, l: &Labeling, kind: SemanticsKind) -> Result<bool> {
        self.check_domain(l)?;
        Ok(self.satisfies_unchecked(l, kind))
    }

    pub(crate) fn satisfies_unchecked(&self, l: &Labeling, kind: SemanticsKind) -> bool {
        match kind {
            SemanticsKind::All => true,
            SemanticsKind::Admissible => self.admissible_unchecked(l),
            SemanticsKind::Complete => self.complete_unchecked(l),
        }
    }

    pub(crate) fn legally_in(&self, l: &Labeling, arg: usize) -> bool {
        self.attackers[arg].is_subset(l.out_set())
    }

    pub(crate) fn legally_out(&self, l: &Labeling, arg: usize) -> bool {
        !self.attackers[arg].is_disjoint(l.in_set())
    }

    pub(crate) fn admissible_unchecked(&self, l: &Labeling) -> bool {
        l.in_set().iter().all(|a| self.legally_in(l, a)) && l.out_set().iter().all(|a| self.legally_out(l, a))
    }

    pub(crate) fn complete_unchecked(&self, l: &Labeling) -> bool {
        self.admissible_unchecked(l)
            && l.undec_set().iter().all(|a| !self.legally_in(l, a) && !self.legally_out(l, a))
    }

    /// All labelings satisfying `kind`, in lexicographic order (`in < out < undec`).
    pub fn enumerate_labelings(&self, kind: SemanticsKind) -> Result<Vec<Labeling>> {
        self.enumerate_labelings_capped(kind, DEFAULT_ENUMERATION_CAP)
    }

    pub fn enumerate_labelings_capped(&self, kind: SemanticsKind, cap: usize) -> Result<Vec<Labeling>> {
        if self.len() > cap {
            return Err(Error::Size { arguments: self.len(), cap });
        }
        Ok(LabelingSpace::new(self.len()).filter(|l| self.satisfies_unchecked(l, kind)).collect())
    }

    pub fn complete_labelings(&self) -> Result<Vec<Labeling>> {
        self.enumerate_labelings(SemanticsKind::Complete)
    }
}

impl fmt::Debug for ArgumentationFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let attacks: Vec<_> = self.attacks().map(|(a, b)| format!("{}->{}", self.names[a], self.names[b])).collect();
        f.debug_struct("ArgumentationFramework").field("arguments", &self.names).field("attacks", &attacks).finish()
    }
}

/// Every total labeling over `n` arguments, in lexicographic order.
#[derive(Clone, Debug)]
pub struct LabelingSpace {
    digits: Vec<Label>,
    current: Option<Labeling>,
}

impl LabelingSpace {
    pub fn new(n: usize) -> LabelingSpace {
        assert!(n <= MAX_ARGUMENTS);
        let digits = vec![Label::In; n];
        let current = Some(Labeling::from_labels(&digits));
        LabelingSpace { digits, current }
    }
}

impl Iterator for LabelingSpace {
    type Item = Labeling;

    fn next(&mut self) -> Option<Labeling> {
        let out = self.current?;
        let mut l = out;
        let mut i = self.digits.len();
        self.current = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            let next = match self.digits[i] {
                Label::In => Some(Label::Out),
                Label::Out => Some(Label::Undec),
                Label::Undec => None,
            };
            match next {
                Some(label) => {
                    self.digits[i] = label;
                    l.set(i, label);
                    break Some(l);
                }
                None => {
                    self.digits[i] = Label::In;
                    l.set(i, Label::In);
                }
            }
        };
        Some(out)
    }
}
