//! Preferences over labelings induced by an agent's top labeling and a measure.

use serde::Serialize;

use crate::aggregation::Profile;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::framework::Labeling;
use crate::issues::IssuePartition;
use crate::metrics::{self, Flavor, Granularity, MeasureKind, DEFAULT_IUO_ALPHA};

/// A preference class is named by the measure it is built on; its flavor
/// (set based or distance based) follows from the measure.
pub type PreferenceClass = MeasureKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Relation {
    /// The first labeling is strictly preferred.
    Strict1,
    /// The second labeling is strictly preferred.
    Strict2,
    Indifferent,
    Incomparable,
}

impl Relation {
    fn from_weak(forward: bool, backward: bool) -> Relation {
        match (forward, backward) {
            (true, true) => Relation::Indifferent,
            (true, false) => Relation::Strict1,
            (false, true) => Relation::Strict2,
            (false, false) => Relation::Incomparable,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgentPreference {
    pub agent: String,
    pub top: Labeling,
    pub class: PreferenceClass,
}

/// Per-agent preferences whose tops are the agents' ballots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreferenceProfile {
    agents: Vec<AgentPreference>,
}

impl PreferenceProfile {
    pub fn homogeneous(profile: &Profile, class: PreferenceClass) -> PreferenceProfile {
        PreferenceProfile::heterogeneous(profile, &vec![class; profile.len()]).expect("one class per agent")
    }

    /// One class per agent, in the profile's agent order.
    pub fn heterogeneous(profile: &Profile, classes: &[PreferenceClass]) -> Result<PreferenceProfile> {
        if classes.len() != profile.len() {
            return Err(Error::Arity(format!("{} classes for {} agents", classes.len(), profile.len())));
        }
        let agents = profile
            .agents()
            .iter()
            .zip(profile.ballots())
            .zip(classes)
            .map(|((agent, &top), &class)| AgentPreference { agent: agent.clone(), top, class })
            .collect();
        Ok(PreferenceProfile { agents })
    }

    pub fn agents(&self) -> &[AgentPreference] {
        &self.agents
    }

    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.agents.windows(2).all(|w| w[0].class == w[1].class)
    }

    pub fn needs_partition(&self) -> bool {
        self.agents.iter().any(|a| a.class.granularity() == Granularity::Issue)
    }
}

/// What a preference compares: the measure's set value, with the io part in
/// `a` and the du part in `b` for IUO measures (`b` is empty otherwise).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Key {
    pub a: BitSet,
    pub b: BitSet,
}

/// Evaluation context: the issue partition (needed by issue-granular classes)
/// and the IUO clash weight.
#[derive(Clone, Copy, Debug)]
pub struct Measures<'p> {
    partition: Option<&'p IssuePartition>,
    alpha: f64,
}

impl<'p> Measures<'p> {
    pub fn new(partition: Option<&'p IssuePartition>) -> Measures<'p> {
        Measures { partition, alpha: DEFAULT_IUO_ALPHA }
    }

    /// Sets the IUO clash weight; it must lie in `(1, 2]`.
    pub fn with_alpha(mut self, alpha: f64) -> Result<Measures<'p>> {
        if !(alpha > 1.0 && alpha <= 2.0) {
            return Err(Error::Config(format!("iuo alpha must be in (1, 2], got {alpha}")));
        }
        self.alpha = alpha;
        Ok(self)
    }

    pub fn partition(&self) -> Option<&'p IssuePartition> {
        self.partition
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub(crate) fn check(&self, class: PreferenceClass, l: &Labeling) -> Result<()> {
        if class.granularity() == Granularity::Issue {
            metrics::require_partition(class, self.partition)?.check_domain(l)?;
        }
        Ok(())
    }

    pub(crate) fn check_profile(&self, prefs: &PreferenceProfile) -> Result<()> {
        for a in prefs.agents() {
            self.check(a.class, &a.top)?;
        }
        Ok(())
    }

    /// Caller must have run [`Measures::check`] for `class`.
    pub(crate) fn key(&self, class: PreferenceClass, top: &Labeling, l: &Labeling) -> Key {
        match (class.is_iuo(), class.granularity()) {
            (false, Granularity::Argument) => Key { a: metrics::hamming_raw(top, l), b: BitSet::EMPTY },
            (false, Granularity::Issue) => {
                let p = self.partition.expect("checked partition");
                Key { a: p.touched(metrics::hamming_raw(top, l)), b: BitSet::EMPTY }
            }
            (true, Granularity::Argument) => {
                let s = metrics::iuo_raw(top, l);
                Key { a: s.io, b: s.du }
            }
            (true, Granularity::Issue) => {
                let s = metrics::iuo_issue_raw(top, l, self.partition.expect("checked partition"));
                Key { a: s.io, b: s.du }
            }
        }
    }

    /// Whether the labeling with key `k1` is weakly preferred to the one with key `k2`.
    pub(crate) fn weak(&self, class: PreferenceClass, k1: Key, k2: Key) -> bool {
        match class.flavor() {
            Flavor::Set => k1.a.is_subset(k2.a) && k1.b.is_subset(k2.b),
            Flavor::Distance if class.is_iuo() => {
                if self.alpha == DEFAULT_IUO_ALPHA {
                    2 * k1.a.len() + k1.b.len() <= 2 * k2.a.len() + k2.b.len()
                } else {
                    self.weighted(k1) <= self.weighted(k2)
                }
            }
            Flavor::Distance => k1.a.len() <= k2.a.len(),
        }
    }

    fn weighted(&self, k: Key) -> f64 {
        self.alpha * k.a.len() as f64 + k.b.len() as f64
    }

    pub(crate) fn relate_keys(&self, class: PreferenceClass, k1: Key, k2: Key) -> Relation {
        Relation::from_weak(self.weak(class, k1, k2), self.weak(class, k2, k1))
    }

    /// `l ⪰ l2` for the agent.
    pub fn weak_prefers(&self, agent: &AgentPreference, l: &Labeling, l2: &Labeling) -> Result<bool> {
        agent.top.same_domain(l)?;
        agent.top.same_domain(l2)?;
        self.check(agent.class, &agent.top)?;
        Ok(self.weak(agent.class, self.key(agent.class, &agent.top, l), self.key(agent.class, &agent.top, l2)))
    }

    pub fn relate(&self, agent: &AgentPreference, l: &Labeling, l2: &Labeling) -> Result<Relation> {
        let forward = self.weak_prefers(agent, l, l2)?;
        let backward = self.weak_prefers(agent, l2, l)?;
        Ok(Relation::from_weak(forward, backward))
    }
}

/// `l ⪰ l2` for the agent, with the default clash weight.
pub fn weak_prefers(agent: &AgentPreference, l: &Labeling, l2: &Labeling, partition: Option<&IssuePartition>) -> Result<bool> {
    Measures::new(partition).weak_prefers(agent, l, l2)
}

pub fn relate(agent: &AgentPreference, l: &Labeling, l2: &Labeling, partition: Option<&IssuePartition>) -> Result<Relation> {
    Measures::new(partition).relate(agent, l, l2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::ArgumentationFramework;

    fn agent(top: Labeling, class: PreferenceClass) -> AgentPreference {
        AgentPreference { agent: "1".into(), top, class }
    }

    #[test]
    fn top_is_weakly_best() {
        let af = ArgumentationFramework::new(["A", "B", "C"], [("B", "A"), ("B", "C"), ("C", "B")]).unwrap();
        let p = IssuePartition::compute(&af).unwrap();
        let top = af.labeling(["A", "C"], ["B"]).unwrap();
        for class in MeasureKind::ALL {
            for l in crate::framework::LabelingSpace::new(3) {
                assert!(weak_prefers(&agent(top, class), &top, &l, Some(&p)).unwrap());
                assert_eq!(relate(&agent(top, class), &l, &l, Some(&p)).unwrap(), Relation::Indifferent);
            }
        }
    }

    #[test]
    fn missing_partition_is_a_config_error() {
        let l = Labeling::all_undec(2);
        let r = weak_prefers(&agent(l, MeasureKind::IuoIwd), &l, &l, None);
        assert!(matches!(r, Err(Error::Config(_))));
    }

    #[test]
    fn alpha_range() {
        assert!(Measures::new(None).with_alpha(1.0).is_err());
        assert!(Measures::new(None).with_alpha(2.5).is_err());
        assert!(Measures::new(None).with_alpha(1.5).is_ok());
    }

    #[test]
    fn profiles_track_classes() {
        let l = Labeling::all_undec(1);
        let profile = Profile::anonymous([l, l]).unwrap();
        let homo = PreferenceProfile::homogeneous(&profile, MeasureKind::Hd);
        assert!(homo.is_homogeneous());
        assert!(!homo.needs_partition());
        let hetero = PreferenceProfile::heterogeneous(&profile, &[MeasureKind::Hd, MeasureKind::Iwd]).unwrap();
        assert!(!hetero.is_homogeneous());
        assert!(hetero.needs_partition());
        assert!(PreferenceProfile::heterogeneous(&profile, &[MeasureKind::Hd]).is_err());
    }
}
