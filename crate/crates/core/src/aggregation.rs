//! Profiles of ballots and the skeptical, credulous and super-credulous operators.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::framework::{ArgumentationFramework, Labeling, SemanticsKind};
use crate::lattice::{self, compatible_unchecked};

/// The ballots submitted by a group of agents over one framework.
///
/// Operators only see the deduplicated set of ballots; agent identities are
/// kept so that preferences and lies can be attributed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    agents: Vec<String>,
    ballots: Vec<Labeling>,
}

impl Profile {
    pub fn new<S: Into<String>>(entries: impl IntoIterator<Item = (S, Labeling)>) -> Result<Profile> {
        let mut agents = Vec::new();
        let mut ballots: Vec<Labeling> = Vec::new();
        for (agent, ballot) in entries {
            let agent = agent.into();
            if agents.contains(&agent) {
                return Err(Error::Domain(format!("duplicate agent `{agent}`")));
            }
            if let Some(first) = ballots.first() {
                first.same_domain(&ballot)?;
            }
            agents.push(agent);
            ballots.push(ballot);
        }
        if agents.is_empty() {
            return Err(Error::Arity("a profile needs at least one agent".into()));
        }
        Ok(Profile { agents, ballots })
    }

    /// Agents named `1`, `2`, ... in ballot order.
    pub fn anonymous(ballots: impl IntoIterator<Item = Labeling>) -> Result<Profile> {
        Profile::new(ballots.into_iter().enumerate().map(|(i, l)| ((i + 1).to_string(), l)))
    }

    pub fn agents(&self) -> &[String] {
        &self.agents
    }

    pub fn ballots(&self) -> &[Labeling] {
        &self.ballots
    }

    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }

    pub fn agent_index(&self, agent: &str) -> Result<usize> {
        self.agents.iter().position(|a| a == agent).ok_or_else(|| Error::Domain(format!("unknown agent `{agent}`")))
    }

    pub fn ballot_of(&self, agent: &str) -> Result<Labeling> {
        Ok(self.ballots[self.agent_index(agent)?])
    }

    /// The ballot set, sorted and without duplicates.
    pub fn distinct(&self) -> Vec<Labeling> {
        self.ballots.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    /// The same agents with agent `index` voting `ballot` instead.
    pub fn replaced(&self, index: usize, ballot: Labeling) -> Profile {
        let mut p = self.clone();
        p.ballots[index] = ballot;
        p
    }

    pub(crate) fn check_against(&self, af: &ArgumentationFramework, gate: SemanticsKind) -> Result<()> {
        for (agent, ballot) in self.agents.iter().zip(&self.ballots) {
            af.check_domain(ballot)?;
            if !af.satisfies_unchecked(ballot, gate) {
                return Err(Error::Ballot { agent: agent.clone(), semantics: gate.to_string() });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorKind {
    Skeptical,
    Credulous,
    SuperCredulous,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 3] = [OperatorKind::Skeptical, OperatorKind::Credulous, OperatorKind::SuperCredulous];

    pub fn as_str(self) -> &'static str {
        match self {
            OperatorKind::Skeptical => "skeptical",
            OperatorKind::Credulous => "credulous",
            OperatorKind::SuperCredulous => "super-credulous",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "skeptical" | "so" => Ok(OperatorKind::Skeptical),
            "credulous" | "co" => Ok(OperatorKind::Credulous),
            "super-credulous" | "supercredulous" | "sco" => Ok(OperatorKind::SuperCredulous),
            _ => Err(Error::Config(format!("unknown operator `{s}` (expected skeptical, credulous, super-credulous)"))),
        }
    }
}

/// Aggregates a profile whose ballots must be complete labelings.
pub fn aggregate(af: &ArgumentationFramework, profile: &Profile, op: OperatorKind) -> Result<Labeling> {
    aggregate_gated(af, profile, op, SemanticsKind::Complete)
}

/// Aggregates a profile, requiring every ballot to satisfy `gate`.
pub fn aggregate_gated(
    af: &ArgumentationFramework,
    profile: &Profile,
    op: OperatorKind,
    gate: SemanticsKind,
) -> Result<Labeling> {
    profile.check_against(af, gate)?;
    Ok(apply_operator(af, &profile.distinct(), op))
}

/// `so = (⊓P)↓`, `co = (⊔P)↓`, `sco = ((⊔P)↓)↑` over a non-empty ballot set of
/// the framework's domain. Duplicates in `ballots` do not matter.
pub fn apply_operator(af: &ArgumentationFramework, ballots: &[Labeling], op: OperatorKind) -> Labeling {
    match op {
        OperatorKind::Skeptical => {
            let initial = lattice::skeptical_initial(ballots).expect("non-empty ballot set");
            lattice::down_admissible_unchecked(af, &initial)
        }
        OperatorKind::Credulous => {
            let initial = lattice::credulous_initial(ballots).expect("non-empty ballot set");
            lattice::down_admissible_unchecked(af, &initial)
        }
        OperatorKind::SuperCredulous => {
            let co = apply_operator(af, ballots, OperatorKind::Credulous);
            lattice::up_complete_unchecked(af, &co)
        }
    }
}

/// Whether the operator's outcome on this profile is compatible with every ballot.
pub fn is_compatible_operator_witness(
    af: &ArgumentationFramework,
    profile: &Profile,
    op: OperatorKind,
) -> Result<bool> {
    let outcome = aggregate(af, profile, op)?;
    Ok(profile.ballots().iter().all(|b| compatible_unchecked(&outcome, b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn murder() -> (ArgumentationFramework, Labeling, Labeling, Labeling) {
        let af = ArgumentationFramework::new(["A", "B", "C"], [("B", "A"), ("B", "C"), ("C", "B")]).unwrap();
        let l1 = af.labeling(["A", "C"], ["B"]).unwrap();
        let l2 = af.labeling(["B"], ["A", "C"]).unwrap();
        (af.clone(), l1, l2, af.all_undec())
    }

    #[test]
    fn murder_outcomes() {
        let (af, l1, l2, l3) = murder();
        let p = Profile::anonymous([l1, l2]).unwrap();
        assert_eq!(aggregate(&af, &p, OperatorKind::Skeptical).unwrap(), l3);

        let p = Profile::anonymous([l1, l3]).unwrap();
        assert_eq!(aggregate(&af, &p, OperatorKind::Credulous).unwrap(), l1);
        assert_eq!(aggregate(&af, &p, OperatorKind::SuperCredulous).unwrap(), l1);
    }

    #[test]
    fn singleton_profile_returns_ballot() {
        let (af, l1, l2, l3) = murder();
        for l in [l1, l2, l3] {
            let p = Profile::anonymous([l]).unwrap();
            for op in OperatorKind::ALL {
                assert_eq!(aggregate(&af, &p, op).unwrap(), l);
                assert!(is_compatible_operator_witness(&af, &p, op).unwrap());
            }
        }
    }

    #[test]
    fn duplicates_collapse() {
        let (af, l1, l2, _) = murder();
        let p = Profile::anonymous([l1, l2, l1]).unwrap();
        assert_eq!(p.distinct(), vec![l1, l2]);
        let q = Profile::anonymous([l2, l1]).unwrap();
        for op in OperatorKind::ALL {
            assert_eq!(aggregate(&af, &p, op).unwrap(), aggregate(&af, &q, op).unwrap());
        }
    }

    #[test]
    fn ballot_gate_names_the_agent() {
        let (af, l1, _, _) = murder();
        let not_complete = af.labeling(["C"], ["B"]).unwrap();
        let p = Profile::new([("alice", l1), ("bob", not_complete)]).unwrap();
        match aggregate(&af, &p, OperatorKind::Skeptical) {
            Err(Error::Ballot { agent, .. }) => assert_eq!(agent, "bob"),
            other => panic!("expected ballot error, got {other:?}"),
        }
        assert!(aggregate_gated(&af, &p, OperatorKind::Skeptical, SemanticsKind::Admissible).is_ok());
    }

    #[test]
    fn profile_errors() {
        assert!(matches!(Profile::anonymous([]), Err(Error::Arity(_))));
        let mixed = Profile::anonymous([Labeling::all_undec(2), Labeling::all_undec(3)]);
        assert!(matches!(mixed, Err(Error::Domain(_))));
        let (af, ..) = murder();
        let p = Profile::anonymous([Labeling::all_undec(2)]).unwrap();
        assert!(matches!(aggregate(&af, &p, OperatorKind::Credulous), Err(Error::Domain(_))));
    }
}
