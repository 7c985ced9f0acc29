//! Run configuration shared by the command-line front end.

use std::path::PathBuf;

use crate::aggregation::{OperatorKind, Profile};
use crate::analysis::CandidateSetKind;
use crate::error::{Error, Result};
use crate::framework::{ArgumentationFramework, SemanticsKind, DEFAULT_ENUMERATION_CAP};
use crate::issues::IssuePartition;
use crate::metrics::DEFAULT_IUO_ALPHA;
use crate::preferences::{Measures, PreferenceClass, PreferenceProfile};

/// Preference classes: one for everybody, or one per agent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassSpec {
    Homogeneous(PreferenceClass),
    PerAgent(Vec<(String, PreferenceClass)>),
}

impl ClassSpec {
    /// Parses `hd`, or a per-agent map `alice=hd,bob=iuo-iwd`.
    pub fn parse(s: &str) -> Result<ClassSpec> {
        if !s.contains('=') {
            return Ok(ClassSpec::Homogeneous(s.trim().parse()?));
        }
        let mut out: Vec<(String, PreferenceClass)> = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (agent, class) =
                part.split_once('=').ok_or_else(|| Error::Config(format!("expected `agent=class`, found `{part}`")))?;
            let agent = agent.trim().to_string();
            if out.iter().any(|(a, _)| *a == agent) {
                return Err(Error::Config(format!("agent `{agent}` has two classes")));
            }
            out.push((agent, class.trim().parse()?));
        }
        Ok(ClassSpec::PerAgent(out))
    }

    /// Builds the preference profile for `profile`; a per-agent map must name
    /// exactly the profile's agents.
    pub fn preferences(&self, profile: &Profile) -> Result<PreferenceProfile> {
        match self {
            ClassSpec::Homogeneous(class) => Ok(PreferenceProfile::homogeneous(profile, *class)),
            ClassSpec::PerAgent(map) => {
                let classes = profile
                    .agents()
                    .iter()
                    .map(|agent| {
                        map.iter()
                            .find(|(a, _)| a == agent)
                            .map(|(_, c)| *c)
                            .ok_or_else(|| Error::Config(format!("no preference class for agent `{agent}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if let Some((extra, _)) = map.iter().find(|(a, _)| !profile.agents().contains(a)) {
                    return Err(Error::Domain(format!("class given for unknown agent `{extra}`")));
                }
                PreferenceProfile::heterogeneous(profile, &classes)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub framework_path: Option<PathBuf>,
    pub profile_path: Option<PathBuf>,
    pub operator: OperatorKind,
    pub classes: Option<ClassSpec>,
    /// Semantics every submitted ballot must satisfy.
    pub ballot_semantics: SemanticsKind,
    pub lie_space: SemanticsKind,
    /// Defaults to the operator's own candidate set.
    pub candidate_set: Option<CandidateSetKind>,
    pub iuo_alpha: f64,
    pub seed: u64,
    /// Largest framework whose labelings may be enumerated.
    pub max_arguments: usize,
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            framework_path: None,
            profile_path: None,
            operator: OperatorKind::Skeptical,
            classes: None,
            ballot_semantics: SemanticsKind::Complete,
            lie_space: SemanticsKind::Complete,
            candidate_set: None,
            iuo_alpha: DEFAULT_IUO_ALPHA,
            seed: 0,
            max_arguments: DEFAULT_ENUMERATION_CAP,
            output: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.iuo_alpha > 1.0 && self.iuo_alpha <= 2.0) {
            return Err(Error::Config(format!("iuo alpha must be in (1, 2], got {}", self.iuo_alpha)));
        }
        if self.max_arguments == 0 || self.max_arguments > DEFAULT_ENUMERATION_CAP {
            return Err(Error::Config(format!(
                "argument cap must be in 1..={DEFAULT_ENUMERATION_CAP}, got {}",
                self.max_arguments
            )));
        }
        Ok(())
    }

    /// Rejects frameworks larger than the configured cap.
    pub fn check_size(&self, af: &ArgumentationFramework) -> Result<()> {
        if af.len() > self.max_arguments {
            return Err(Error::Size { arguments: af.len(), cap: self.max_arguments });
        }
        Ok(())
    }

    pub fn candidate_kind(&self) -> CandidateSetKind {
        self.candidate_set.unwrap_or_else(|| CandidateSetKind::for_operator(self.operator))
    }

    pub fn measures<'p>(&self, partition: Option<&'p IssuePartition>) -> Result<Measures<'p>> {
        Measures::new(partition).with_alpha(self.iuo_alpha)
    }

    pub fn preferences(&self, profile: &Profile) -> Result<PreferenceProfile> {
        self.classes
            .as_ref()
            .ok_or_else(|| Error::Config("a preference class is required".into()))?
            .preferences(profile)
    }
}
