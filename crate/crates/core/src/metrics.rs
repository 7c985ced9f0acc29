//! The eight disagreement measures between labelings and the subset order over pairs.
//!
//! Issue-granular measures take the issue partition as an explicit argument.
//! A block counts as disagreeing when some member disagrees; on complete
//! labelings that is the same as every member disagreeing. For the IUO pair,
//! a block with an `in`/`out` clash on some member goes to the io side only,
//! which keeps the two sides disjoint on labelings that are not uniform on
//! their issues.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::framework::Labeling;
use crate::issues::IssuePartition;

/// Default weight of an `in`/`out` clash relative to a decided/`undec` mismatch.
pub const DEFAULT_IUO_ALPHA: f64 = 2.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MeasureKind {
    #[serde(rename = "hs")]
    Hs,
    #[serde(rename = "hd")]
    Hd,
    #[serde(rename = "iws")]
    Iws,
    #[serde(rename = "iwd")]
    Iwd,
    #[serde(rename = "iuo-hs")]
    IuoHs,
    #[serde(rename = "iuo-hd")]
    IuoHd,
    #[serde(rename = "iuo-iws")]
    IuoIws,
    #[serde(rename = "iuo-iwd")]
    IuoIwd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Flavor {
    Set,
    Distance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Granularity {
    Argument,
    Issue,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 8] = [
        MeasureKind::Hs,
        MeasureKind::Hd,
        MeasureKind::Iws,
        MeasureKind::Iwd,
        MeasureKind::IuoHs,
        MeasureKind::IuoHd,
        MeasureKind::IuoIws,
        MeasureKind::IuoIwd,
    ];

    pub fn flavor(self) -> Flavor {
        match self {
            MeasureKind::Hs | MeasureKind::Iws | MeasureKind::IuoHs | MeasureKind::IuoIws => Flavor::Set,
            _ => Flavor::Distance,
        }
    }

    pub fn granularity(self) -> Granularity {
        match self {
            MeasureKind::Iws | MeasureKind::Iwd | MeasureKind::IuoIws | MeasureKind::IuoIwd => Granularity::Issue,
            _ => Granularity::Argument,
        }
    }

    pub fn is_iuo(self) -> bool {
        matches!(self, MeasureKind::IuoHs | MeasureKind::IuoHd | MeasureKind::IuoIws | MeasureKind::IuoIwd)
    }

    /// The measure with the same flavor and granularity, toggling the IUO split.
    pub fn iuo_counterpart(self) -> MeasureKind {
        match self {
            MeasureKind::Hs => MeasureKind::IuoHs,
            MeasureKind::Hd => MeasureKind::IuoHd,
            MeasureKind::Iws => MeasureKind::IuoIws,
            MeasureKind::Iwd => MeasureKind::IuoIwd,
            MeasureKind::IuoHs => MeasureKind::Hs,
            MeasureKind::IuoHd => MeasureKind::Hd,
            MeasureKind::IuoIws => MeasureKind::Iws,
            MeasureKind::IuoIwd => MeasureKind::Iwd,
        }
    }

    /// The distance built on this set measure, or the set measure under this distance.
    pub fn flavor_counterpart(self) -> MeasureKind {
        match self {
            MeasureKind::Hs => MeasureKind::Hd,
            MeasureKind::Hd => MeasureKind::Hs,
            MeasureKind::Iws => MeasureKind::Iwd,
            MeasureKind::Iwd => MeasureKind::Iws,
            MeasureKind::IuoHs => MeasureKind::IuoHd,
            MeasureKind::IuoHd => MeasureKind::IuoHs,
            MeasureKind::IuoIws => MeasureKind::IuoIwd,
            MeasureKind::IuoIwd => MeasureKind::IuoIws,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MeasureKind::Hs => "hs",
            MeasureKind::Hd => "hd",
            MeasureKind::Iws => "iws",
            MeasureKind::Iwd => "iwd",
            MeasureKind::IuoHs => "iuo-hs",
            MeasureKind::IuoHd => "iuo-hd",
            MeasureKind::IuoIws => "iuo-iws",
            MeasureKind::IuoIwd => "iuo-iwd",
        }
    }

    /// Upper-case label used in reports, e.g. `IUO_HD`.
    pub fn label(self) -> &'static str {
        match self {
            MeasureKind::Hs => "HS",
            MeasureKind::Hd => "HD",
            MeasureKind::Iws => "IWS",
            MeasureKind::Iwd => "IWD",
            MeasureKind::IuoHs => "IUO_HS",
            MeasureKind::IuoHd => "IUO_HD",
            MeasureKind::IuoIws => "IUO_IWS",
            MeasureKind::IuoIwd => "IUO_IWD",
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        MeasureKind::ALL
            .into_iter()
            .find(|m| m.as_str() == norm)
            .ok_or_else(|| Error::Config(format!("unknown measure `{s}` (expected hs, hd, iws, iwd, iuo-hs, iuo-hd, iuo-iws, iuo-iwd)")))
    }
}

/// The io/du split of a disagreement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct IuoSets {
    pub io: BitSet,
    pub du: BitSet,
}

impl IuoSets {
    pub fn is_empty(&self) -> bool {
        self.io.is_empty() && self.du.is_empty()
    }
}

/// The value of a set measure: plain, or split into io and du parts. Elements
/// are argument indices or block indices, depending on `granularity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DisagreementSet {
    Uniform { granularity: Granularity, set: BitSet },
    Iuo { granularity: Granularity, sets: IuoSets },
}

impl DisagreementSet {
    pub fn granularity(&self) -> Granularity {
        match *self {
            DisagreementSet::Uniform { granularity, .. } | DisagreementSet::Iuo { granularity, .. } => granularity,
        }
    }

    /// `⊆` for plain sets, componentwise `⊆` for pairs. Values of different
    /// shapes are never subsets of one another.
    pub fn is_subset(&self, other: &DisagreementSet) -> bool {
        match (self, other) {
            (DisagreementSet::Uniform { granularity: g1, set: a }, DisagreementSet::Uniform { granularity: g2, set: b }) => {
                g1 == g2 && a.is_subset(*b)
            }
            (DisagreementSet::Iuo { granularity: g1, sets: a }, DisagreementSet::Iuo { granularity: g2, sets: b }) => {
                g1 == g2 && pair_subset(a, b)
            }
            _ => false,
        }
    }
}

fn check(l1: &Labeling, l2: &Labeling) -> Result<()> {
    l1.same_domain(l2)
}

fn check_issues(l1: &Labeling, l2: &Labeling, p: &IssuePartition) -> Result<()> {
    check(l1, l2)?;
    p.check_domain(l1)
}

pub(crate) fn hamming_raw(l1: &Labeling, l2: &Labeling) -> BitSet {
    let a = l1.in_set().difference(l2.in_set());
    let b = l2.in_set().difference(l1.in_set());
    let c = l1.out_set().difference(l2.out_set());
    let d = l2.out_set().difference(l1.out_set());
    a.union(b).union(c).union(d)
}

pub(crate) fn iuo_raw(l1: &Labeling, l2: &Labeling) -> IuoSets {
    let io = l1.in_set().intersection(l2.out_set()).union(l1.out_set().intersection(l2.in_set()));
    let (d1, d2) = (l1.dec_set(), l2.dec_set());
    let du = d1.difference(d2).union(d2.difference(d1));
    IuoSets { io, du }
}

pub(crate) fn iuo_issue_raw(l1: &Labeling, l2: &Labeling, p: &IssuePartition) -> IuoSets {
    let args = iuo_raw(l1, l2);
    let io = p.touched(args.io);
    IuoSets { io, du: p.touched(args.du).difference(io) }
}

/// `l1 ⊖ l2`: the arguments labeled differently.
pub fn hamming_set(l1: &Labeling, l2: &Labeling) -> Result<BitSet> {
    check(l1, l2)?;
    Ok(hamming_raw(l1, l2))
}

pub fn hamming_distance(l1: &Labeling, l2: &Labeling) -> Result<usize> {
    Ok(hamming_set(l1, l2)?.len())
}

/// `l1 ⊖_W l2`: indices of the issues the labelings disagree on.
pub fn issue_set(l1: &Labeling, l2: &Labeling, partition: &IssuePartition) -> Result<BitSet> {
    check_issues(l1, l2, partition)?;
    Ok(partition.touched(hamming_raw(l1, l2)))
}

pub fn issue_distance(l1: &Labeling, l2: &Labeling, partition: &IssuePartition) -> Result<usize> {
    Ok(issue_set(l1, l2, partition)?.len())
}

/// `(⊖^io, ⊖^du)`: `in`/`out` clashes, and arguments decided on exactly one side.
pub fn iuo_hamming_sets(l1: &Labeling, l2: &Labeling) -> Result<IuoSets> {
    check(l1, l2)?;
    Ok(iuo_raw(l1, l2))
}

/// `2·|⊖^io| + |⊖^du|`.
pub fn iuo_hamming_distance(l1: &Labeling, l2: &Labeling) -> Result<usize> {
    let s = iuo_hamming_sets(l1, l2)?;
    Ok(2 * s.io.len() + s.du.len())
}

pub fn iuo_issue_sets(l1: &Labeling, l2: &Labeling, partition: &IssuePartition) -> Result<IuoSets> {
    check_issues(l1, l2, partition)?;
    Ok(iuo_issue_raw(l1, l2, partition))
}

pub fn iuo_issue_distance(l1: &Labeling, l2: &Labeling, partition: &IssuePartition) -> Result<usize> {
    let s = iuo_issue_sets(l1, l2, partition)?;
    Ok(2 * s.io.len() + s.du.len())
}

/// `α·|io| + |du|`, for a configured clash weight.
pub fn weighted(sets: &IuoSets, alpha: f64) -> f64 {
    alpha * sets.io.len() as f64 + sets.du.len() as f64
}

/// Componentwise subset over io/du pairs.
pub fn pair_subset(s1: &IuoSets, s2: &IuoSets) -> bool {
    s1.io.is_subset(s2.io) && s1.du.is_subset(s2.du)
}

/// The set measure `kind` (or, for a distance, the set it counts) between two labelings.
pub fn disagreement(
    kind: MeasureKind,
    l1: &Labeling,
    l2: &Labeling,
    partition: Option<&IssuePartition>,
) -> Result<DisagreementSet> {
    let granularity = kind.granularity();
    let p = match granularity {
        Granularity::Argument => None,
        Granularity::Issue => Some(require_partition(kind, partition)?),
    };
    Ok(match (kind.is_iuo(), p) {
        (false, None) => DisagreementSet::Uniform { granularity, set: hamming_set(l1, l2)? },
        (false, Some(p)) => DisagreementSet::Uniform { granularity, set: issue_set(l1, l2, p)? },
        (true, None) => DisagreementSet::Iuo { granularity, sets: iuo_hamming_sets(l1, l2)? },
        (true, Some(p)) => DisagreementSet::Iuo { granularity, sets: iuo_issue_sets(l1, l2, p)? },
    })
}

/// The distance measure under `kind` (a set kind is counted by its distance counterpart).
pub fn distance(
    kind: MeasureKind,
    l1: &Labeling,
    l2: &Labeling,
    partition: Option<&IssuePartition>,
    alpha: f64,
) -> Result<f64> {
    Ok(match disagreement(kind, l1, l2, partition)? {
        DisagreementSet::Uniform { set, .. } => set.len() as f64,
        DisagreementSet::Iuo { sets, .. } => weighted(&sets, alpha),
    })
}

pub(crate) fn require_partition(kind: MeasureKind, partition: Option<&IssuePartition>) -> Result<&IssuePartition> {
    partition.ok_or_else(|| Error::Config(format!("measure `{kind}` needs an issue partition")))
}
