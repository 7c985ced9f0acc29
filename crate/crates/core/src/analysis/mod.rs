//! Pareto optimality, strategic lies, and the brute-force theorem suite.

mod generate;
mod suite;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::aggregation::{apply_operator, OperatorKind, Profile};
use crate::error::{Error, Result};
use crate::framework::{ArgumentationFramework, Labeling, SemanticsKind};
use crate::lattice::{compatible_unchecked, leq_unchecked};
use crate::preferences::{Key, Measures, PreferenceClass, PreferenceProfile, Relation};

pub use generate::{
    all_frameworks, canonical_frameworks, multisets, random_framework, CanonicalFrameworks, DEFAULT_EDGE_PROBABILITY,
};
pub use suite::{
    verify_theorem_suite, CheckReport, Expectation, Matrix, SuiteConfig, SuiteReport, Verdict, Witness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CandidateSetKind {
    /// Admissible labelings below every ballot.
    AdmLeq,
    /// Admissible labelings compatible with every ballot.
    AdmCompat,
    /// Complete labelings compatible with every ballot.
    CompCompat,
}

impl CandidateSetKind {
    pub const ALL: [CandidateSetKind; 3] = [CandidateSetKind::AdmLeq, CandidateSetKind::AdmCompat, CandidateSetKind::CompCompat];

    /// The candidate set an operator's outcome is judged against.
    pub fn for_operator(op: OperatorKind) -> CandidateSetKind {
        match op {
            OperatorKind::Skeptical => CandidateSetKind::AdmLeq,
            OperatorKind::Credulous => CandidateSetKind::AdmCompat,
            OperatorKind::SuperCredulous => CandidateSetKind::CompCompat,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CandidateSetKind::AdmLeq => "adm-leq",
            CandidateSetKind::AdmCompat => "adm-compat",
            CandidateSetKind::CompCompat => "comp-compat",
        }
    }

    pub(crate) fn admits(self, af: &ArgumentationFramework, ballots: &[Labeling], l: &Labeling) -> bool {
        match self {
            CandidateSetKind::AdmLeq => ballots.iter().all(|b| leq_unchecked(l, b)),
            CandidateSetKind::AdmCompat => ballots.iter().all(|b| compatible_unchecked(l, b)),
            CandidateSetKind::CompCompat => {
                af.complete_unchecked(l) && ballots.iter().all(|b| compatible_unchecked(l, b))
            }
        }
    }
}

impl fmt::Display for CandidateSetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CandidateSetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "adm-leq" => Ok(CandidateSetKind::AdmLeq),
            "adm-compat" => Ok(CandidateSetKind::AdmCompat),
            "comp-compat" => Ok(CandidateSetKind::CompCompat),
            _ => Err(Error::Config(format!("unknown candidate set `{s}` (expected adm-leq, adm-compat, comp-compat)"))),
        }
    }
}

/// The labelings of kind `kind` for the given ballots, in enumeration order.
pub fn candidate_set(af: &ArgumentationFramework, ballots: &[Labeling], kind: CandidateSetKind) -> Result<Vec<Labeling>> {
    for b in ballots {
        af.check_domain(b)?;
    }
    let admissible = af.enumerate_labelings(SemanticsKind::Admissible)?;
    Ok(filter_candidates(af, &admissible, ballots, kind))
}

pub(crate) fn filter_candidates(
    af: &ArgumentationFramework,
    admissible: &[Labeling],
    ballots: &[Labeling],
    kind: CandidateSetKind,
) -> Vec<Labeling> {
    admissible.iter().copied().filter(|l| kind.admits(af, ballots, l)).collect()
}

/// Every agent weakly prefers `l` to `l2` and some agent strictly prefers it.
pub fn pareto_dominates(l: &Labeling, l2: &Labeling, prefs: &PreferenceProfile, measures: &Measures) -> Result<bool> {
    measures.check_profile(prefs)?;
    for a in prefs.agents() {
        a.top.same_domain(l)?;
        a.top.same_domain(l2)?;
    }
    let keys2 = agent_keys(prefs, measures, l2);
    Ok(dominates_keys(prefs, measures, &agent_keys(prefs, measures, l), &keys2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParetoVerdict {
    Optimal,
    /// A candidate that Pareto dominates the labeling.
    Dominated(Labeling),
}

impl ParetoVerdict {
    pub fn is_optimal(&self) -> bool {
        matches!(self, ParetoVerdict::Optimal)
    }
}

/// Whether no candidate Pareto dominates `l`; otherwise the first dominating candidate.
pub fn is_pareto_optimal(
    l: &Labeling,
    candidates: &[Labeling],
    prefs: &PreferenceProfile,
    measures: &Measures,
) -> Result<ParetoVerdict> {
    measures.check_profile(prefs)?;
    for c in std::iter::once(l).chain(candidates) {
        for a in prefs.agents() {
            a.top.same_domain(c)?;
        }
    }
    Ok(match dominator(l, candidates, prefs, measures) {
        Some(d) => ParetoVerdict::Dominated(d),
        None => ParetoVerdict::Optimal,
    })
}

pub(crate) fn agent_keys(prefs: &PreferenceProfile, measures: &Measures, l: &Labeling) -> Vec<Key> {
    prefs.agents().iter().map(|a| measures.key(a.class, &a.top, l)).collect()
}

pub(crate) fn dominates_keys(prefs: &PreferenceProfile, measures: &Measures, k: &[Key], k2: &[Key]) -> bool {
    let mut strict = false;
    for (i, a) in prefs.agents().iter().enumerate() {
        match measures.relate_keys(a.class, k[i], k2[i]) {
            Relation::Strict1 => strict = true,
            Relation::Indifferent => {}
            Relation::Strict2 | Relation::Incomparable => return false,
        }
    }
    strict
}

pub(crate) fn dominator(
    l: &Labeling,
    candidates: &[Labeling],
    prefs: &PreferenceProfile,
    measures: &Measures,
) -> Option<Labeling> {
    let base = agent_keys(prefs, measures, l);
    candidates.iter().copied().find(|c| dominates_keys(prefs, measures, &agent_keys(prefs, measures, c), &base))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LieClass {
    /// Nobody is worse off and some other agent is strictly better off.
    Benevolent,
    /// Some other agent strictly preferred the honest outcome.
    Malicious,
    /// Neither of the above, e.g. the other agents are indifferent or find the
    /// outcomes incomparable.
    Neutral,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieReport {
    pub agent: String,
    pub true_ballot: Labeling,
    pub lie: Labeling,
    pub honest_outcome: Labeling,
    pub lie_outcome: Labeling,
    pub classification: LieClass,
}

/// Classifies the move from `honest` to `lied` for everyone but the liar.
/// The liar strictly prefers `lied`, so it satisfies the universal clause of
/// benevolence and can never be the victim of a malicious lie.
pub(crate) fn classify(
    prefs: &PreferenceProfile,
    measures: &Measures,
    liar: usize,
    honest: &Labeling,
    lied: &Labeling,
) -> LieClass {
    let mut all_weak = true;
    let mut some_strict = false;
    for (i, a) in prefs.agents().iter().enumerate() {
        if i == liar {
            continue;
        }
        let r = measures.relate_keys(a.class, measures.key(a.class, &a.top, lied), measures.key(a.class, &a.top, honest));
        match r {
            Relation::Strict2 => return LieClass::Malicious,
            Relation::Strict1 => some_strict = true,
            Relation::Indifferent => {}
            Relation::Incomparable => all_weak = false,
        }
    }
    if all_weak && some_strict {
        LieClass::Benevolent
    } else {
        LieClass::Neutral
    }
}

/// Lies by agent `liar` drawn from `lies`, as `(lie, lie_outcome, class)`.
/// `prefs` carries the truthful ballots as tops.
pub(crate) fn lies_raw(
    af: &ArgumentationFramework,
    prefs: &PreferenceProfile,
    op: OperatorKind,
    liar: usize,
    lies: &[Labeling],
    measures: &Measures,
    first_only: bool,
) -> (Labeling, Vec<(Labeling, Labeling, LieClass)>) {
    let mut ballots: Vec<Labeling> = prefs.agents().iter().map(|a| a.top).collect();
    let honest = apply_operator(af, &ballots, op);
    let me = &prefs.agents()[liar];
    let honest_key = measures.key(me.class, &me.top, &honest);
    let mut found = Vec::new();
    for &lie in lies {
        if lie == me.top {
            continue;
        }
        ballots[liar] = lie;
        let outcome = apply_operator(af, &ballots, op);
        if outcome == honest {
            continue;
        }
        let key = measures.key(me.class, &me.top, &outcome);
        if measures.relate_keys(me.class, key, honest_key) == Relation::Strict1 {
            found.push((lie, outcome, classify(prefs, measures, liar, &honest, &outcome)));
            if first_only {
                break;
            }
        }
    }
    (honest, found)
}

/// Every strategic lie available to `liar`, taken from the labelings of
/// `lie_space`. Truthful ballots must belong to `lie_space` as well.
pub fn find_strategic_lies(
    af: &ArgumentationFramework,
    profile: &Profile,
    op: OperatorKind,
    prefs: &PreferenceProfile,
    liar: &str,
    lie_space: SemanticsKind,
    measures: &Measures,
) -> Result<Vec<LieReport>> {
    let index = profile.agent_index(liar)?;
    profile.check_against(af, lie_space)?;
    check_prefs_match(profile, prefs)?;
    measures.check_profile(prefs)?;
    let lies = af.enumerate_labelings(lie_space)?;
    let (honest, found) = lies_raw(af, prefs, op, index, &lies, measures, false);
    Ok(found
        .into_iter()
        .map(|(lie, lie_outcome, classification)| LieReport {
            agent: liar.to_string(),
            true_ballot: profile.ballots()[index],
            lie,
            honest_outcome: honest,
            lie_outcome,
            classification,
        })
        .collect())
}

fn check_prefs_match(profile: &Profile, prefs: &PreferenceProfile) -> Result<()> {
    let same = profile.len() == prefs.len()
        && profile.agents().iter().zip(profile.ballots()).zip(prefs.agents()).all(|((id, b), p)| *id == p.agent && *b == p.top);
    if same {
        Ok(())
    } else {
        Err(Error::Domain("preference tops must be the submitted ballots".into()))
    }
}

/// Searches every profile of `n_agents` ballots from `lie_space` (as
/// multisets; agents are interchangeable) for a strategic lie under a
/// homogeneous `class`. Returns the first lie found, or `None` when the
/// operator is strategy proof on this framework.
pub fn check_strategy_proof(
    af: &ArgumentationFramework,
    op: OperatorKind,
    class: PreferenceClass,
    n_agents: usize,
    lie_space: SemanticsKind,
    measures: &Measures,
) -> Result<Option<LieReport>> {
    if n_agents == 0 {
        return Err(Error::Arity("strategy-proofness needs at least one agent".into()));
    }
    let space = af.enumerate_labelings(lie_space)?;
    for pick in multisets(space.len(), n_agents) {
        let profile = Profile::anonymous(pick.iter().map(|&i| space[i])).expect("non-empty");
        let prefs = PreferenceProfile::homogeneous(&profile, class);
        measures.check_profile(&prefs)?;
        for liar in 0..n_agents {
            if liar > 0 && pick[liar] == pick[liar - 1] {
                continue;
            }
            let (honest, found) = lies_raw(af, &prefs, op, liar, &space, measures, true);
            if let Some(&(lie, lie_outcome, classification)) = found.first() {
                return Ok(Some(LieReport {
                    agent: profile.agents()[liar].clone(),
                    true_ballot: profile.ballots()[liar],
                    lie,
                    honest_outcome: honest,
                    lie_outcome,
                    classification,
                }));
            }
        }
    }
    Ok(None)
}
