//! The commitment order on labelings and the closures built on it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::framework::{ArgumentationFramework, Label, Labeling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CommitmentOrder {
    Leq,
    Geq,
    Equal,
    Incomparable,
}

/// `l1 ⊑ l2`: every `in` of `l1` is `in` in `l2`, every `out` of `l1` is `out` in `l2`.
pub fn leq_committed(l1: &Labeling, l2: &Labeling) -> Result<bool> {
    l1.same_domain(l2)?;
    Ok(leq_unchecked(l1, l2))
}

pub(crate) fn leq_unchecked(l1: &Labeling, l2: &Labeling) -> bool {
    l1.in_set().is_subset(l2.in_set()) && l1.out_set().is_subset(l2.out_set())
}

pub fn compare_commitment(l1: &Labeling, l2: &Labeling) -> Result<CommitmentOrder> {
    let leq = leq_committed(l1, l2)?;
    let geq = leq_unchecked(l2, l1);
    Ok(match (leq, geq) {
        (true, true) => CommitmentOrder::Equal,
        (true, false) => CommitmentOrder::Leq,
        (false, true) => CommitmentOrder::Geq,
        (false, false) => CommitmentOrder::Incomparable,
    })
}

/// `l1 ≈ l2`: no argument is `in` in one labeling and `out` in the other.
pub fn compatible(l1: &Labeling, l2: &Labeling) -> Result<bool> {
    l1.same_domain(l2)?;
    Ok(compatible_unchecked(l1, l2))
}

pub(crate) fn compatible_unchecked(l1: &Labeling, l2: &Labeling) -> bool {
    l1.in_set().is_disjoint(l2.out_set()) && l1.out_set().is_disjoint(l2.in_set())
}

fn check_profile(profile: &[Labeling]) -> Result<&Labeling> {
    let first = profile.first().ok_or_else(|| Error::Arity("initial operators need at least one labeling".into()))?;
    for l in &profile[1..] {
        first.same_domain(l)?;
    }
    Ok(first)
}

/// `⊓`: unanimous `in` and unanimous `out` survive, everything else is `undec`.
pub fn skeptical_initial(profile: &[Labeling]) -> Result<Labeling> {
    let first = check_profile(profile)?;
    let (inn, out) = profile[1..]
        .iter()
        .fold((first.in_set(), first.out_set()), |(i, o), l| (i.intersection(l.in_set()), o.intersection(l.out_set())));
    Labeling::from_sets(first.len(), inn, out)
}

/// `⊔`: a decision survives when some ballot makes it and no ballot makes the opposite one.
pub fn credulous_initial(profile: &[Labeling]) -> Result<Labeling> {
    let first = check_profile(profile)?;
    let (any_in, any_out) = profile
        .iter()
        .fold((first.in_set(), first.out_set()), |(i, o), l| (i.union(l.in_set()), o.union(l.out_set())));
    Labeling::from_sets(first.len(), any_in.difference(any_out), any_out.difference(any_in))
}

/// `l↓`: the greatest admissible labeling below `l`.
///
/// Illegally `in` or `out` arguments are relabeled `undec` until none remain.
pub fn down_admissible(af: &ArgumentationFramework, l: &Labeling) -> Result<Labeling> {
    af.check_domain(l)?;
    Ok(down_admissible_unchecked(af, l))
}

pub(crate) fn down_admissible_unchecked(af: &ArgumentationFramework, l: &Labeling) -> Labeling {
    let mut cur = *l;
    loop {
        let mut next = cur;
        for a in cur.in_set() {
            if !af.legally_in(&cur, a) {
                next.set(a, Label::Undec);
            }
        }
        for a in cur.out_set() {
            if !af.legally_out(&cur, a) {
                next.set(a, Label::Undec);
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// `l↑`: the least complete labeling above an admissible `l`.
///
/// `undec` arguments whose attackers are all `out` become `in`, those with an
/// `in` attacker become `out`, until nothing changes.
pub fn up_complete(af: &ArgumentationFramework, l: &Labeling) -> Result<Labeling> {
    af.check_domain(l)?;
    if !af.admissible_unchecked(l) {
        return Err(Error::Precondition("up-complete is only defined for admissible labelings".into()));
    }
    Ok(up_complete_unchecked(af, l))
}

pub(crate) fn up_complete_unchecked(af: &ArgumentationFramework, l: &Labeling) -> Labeling {
    let mut cur = *l;
    loop {
        let mut next = cur;
        for a in cur.undec_set() {
            if af.legally_in(&cur, a) {
                next.set(a, Label::In);
            } else if af.legally_out(&cur, a) {
                next.set(a, Label::Out);
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// The grounded labeling: the least complete labeling.
pub fn grounded(af: &ArgumentationFramework) -> Labeling {
    up_complete_unchecked(af, &af.all_undec())
}
