//! Brute-force verification of the operators' Pareto and strategy-proofness
//! properties over exhaustive small frameworks, random larger ones and a
//! corpus of pinned witnesses.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::generate::{canonical_frameworks, multisets, random_framework};
use super::{classify, CandidateSetKind, LieClass};
use crate::aggregation::{apply_operator, OperatorKind, Profile};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::framework::{ArgumentationFramework, Labeling, SemanticsKind, DEFAULT_ENUMERATION_CAP};
use crate::io::{framework_to_json, labeling_to_json, profile_to_json};
use crate::issues::IssuePartition;
use crate::lattice::{compatible_unchecked, leq_unchecked};
use crate::metrics::{hamming_raw, MeasureKind};
use crate::preferences::{Key, Measures, PreferenceProfile, Relation};

const CLASSES: [MeasureKind; 8] = MeasureKind::ALL;
const HS: usize = 0;
const HD: usize = 1;
const IWS: usize = 2;
const IWD: usize = 3;
const IUO_HS: usize = 4;
const IUO_HD: usize = 5;
const IUO_IWS: usize = 6;
const IUO_IWD: usize = 7;
const SET_CLASSES: [usize; 4] = [HS, IWS, IUO_HS, IUO_IWS];
const SKEPTICAL_LIARS: [usize; 6] = [HS, HD, IWS, IWD, IUO_HD, IUO_IWD];

/// Row and column groups of the report matrices; classes in one group share
/// every verdict.
const GROUPS: [(&str, &[usize]); 6] = [
    ("HS/IWS", &[HS, IWS]),
    ("HD", &[HD]),
    ("IWD", &[IWD]),
    ("IUO_HS/IUO_IWS", &[IUO_HS, IUO_IWS]),
    ("IUO_HD", &[IUO_HD]),
    ("IUO_IWD", &[IUO_IWD]),
];

const EXPECTED_CARRY_OVER: [[&str; 6]; 6] = [
    ["Y", "N", "N", "Y*", "N", "N"],
    ["Y", "Y", "N", "Y*", "Y*", "N"],
    ["Y", "N", "Y", "Y*", "N", "Y*"],
    ["Y*", "N", "N", "Y", "N", "N"],
    ["Y*", "Y*", "N", "Y", "Y", "N"],
    ["Y*", "N", "Y*", "Y", "N", "Y"],
];

/// Largest framework for which every labeling takes part in the carry-over
/// and mixed-preference searches.
const FULL_SPACE_ARGS: usize = 3;
/// Admissible labelings above which the per-framework lemma sweeps are skipped.
const LEMMA_SPACE_LIMIT: usize = 40;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Frameworks with up to this many arguments are covered exhaustively, up
    /// to isomorphism. At most 4.
    pub max_exhaustive_args: usize,
    pub random_frameworks: usize,
    /// Sizes of the random frameworks, used round robin.
    pub random_sizes: Vec<usize>,
    pub edge_probability: f64,
    pub agent_counts: Vec<usize>,
    /// A framework's profiles are enumerated when there are at most this many
    /// per agent count, and sampled otherwise.
    pub profile_limit: usize,
    pub profile_samples: usize,
    /// Heterogeneous assignments sampled per instance when the full
    /// assignment space is larger than this.
    pub hetero_samples: usize,
    /// Semantics of the ballots and of the lies. Anything but `complete` is
    /// experimental.
    pub ballots: SemanticsKind,
    pub alpha: f64,
    /// Also evaluate the pinned witness frameworks.
    pub pinned: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            max_exhaustive_args: 4,
            random_frameworks: 1000,
            random_sizes: vec![5, 6, 7],
            edge_probability: super::DEFAULT_EDGE_PROBABILITY,
            agent_counts: vec![2, 3],
            profile_limit: 220,
            profile_samples: 12,
            hetero_samples: 256,
            ballots: SemanticsKind::Complete,
            alpha: crate::metrics::DEFAULT_IUO_ALPHA,
            pinned: true,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_exhaustive_args > 4 {
            return Err(Error::Config(format!(
                "exhaustive sweeps are limited to 4 arguments, got {}",
                self.max_exhaustive_args
            )));
        }
        if let Some(&n) = self.random_sizes.iter().find(|&&n| n == 0 || n > DEFAULT_ENUMERATION_CAP) {
            return Err(Error::Config(format!("random framework sizes must be in 1..={DEFAULT_ENUMERATION_CAP}, got {n}")));
        }
        if self.random_frameworks > 0 && self.random_sizes.is_empty() {
            return Err(Error::Config("random frameworks requested without sizes".into()));
        }
        if !(0.0..=1.0).contains(&self.edge_probability) {
            return Err(Error::Config(format!("edge probability must be in [0, 1], got {}", self.edge_probability)));
        }
        if self.agent_counts.is_empty() || self.agent_counts.iter().any(|&k| k == 0 || k > 8) {
            return Err(Error::Config("agent counts must be non-empty and within 1..=8".into()));
        }
        if self.profile_limit == 0 || self.profile_samples == 0 || self.hetero_samples == 0 {
            return Err(Error::Config("profile and assignment sample sizes must be positive".into()));
        }
        Measures::new(None).with_alpha(self.alpha)?;
        Ok(())
    }

    pub fn is_experimental(&self) -> bool {
        self.ballots != SemanticsKind::Complete
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    /// The property must hold on every instance.
    ExpectedPass,
    /// The search must find at least one instance violating the property.
    ExpectedCounterexample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A serialized instance: framework, ballots, optional per-agent classes and
/// the check-specific labelings.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub framework: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<MeasureKind>>,
    pub details: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub description: String,
    pub expectation: Expectation,
    pub verdict: Verdict,
    pub instances_tested: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Matrix {
    pub name: String,
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub expected: Vec<Vec<String>>,
    pub computed: Vec<Vec<String>>,
    pub agrees: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct InstanceCounts {
    pub exhaustive_frameworks: u64,
    pub random_frameworks: u64,
    pub pinned_frameworks: u64,
    pub profiles: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub experimental: bool,
    pub instances: InstanceCounts,
    pub checks: Vec<CheckReport>,
    pub matrices: Vec<Matrix>,
    pub all_passed: bool,
}

impl SuiteReport {
    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn matrix(&self, name: &str) -> Option<&Matrix> {
        self.matrices.iter().find(|m| m.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }
}

struct CheckSpec {
    name: String,
    description: String,
    expectation: Expectation,
}

/// Indices of the checks in the registry.
struct Ids {
    greatest_lower_bound: usize,
    operator_outcomes: usize,
    pareto: [[usize; 8]; 3],
    distance_implies_set: usize,
    iuo_equivalence: usize,
    hetero_skeptical: usize,
    hetero_set: [usize; 3],
    hetero_iuo_mix: usize,
    hetero_mixed_distance: usize,
    skeptical_benevolent: [usize; 8],
    skeptical_manipulable: [usize; 8],
    skeptical_proof: [usize; 8],
    malicious: [[usize; 8]; 3],
    lie_carry_over: [usize; 2],
    hetero_strategy_proof: usize,
    lemma_formulas: usize,
    lemma_more_committed: usize,
    lemma_set_commitment: usize,
    lemma_uniform_sets: usize,
    lemma_iuo_compatible: usize,
}

const UNSET: usize = usize::MAX;

struct Registry {
    specs: Vec<CheckSpec>,
}

impl Registry {
    fn add(&mut self, name: String, description: String, expectation: Expectation) -> usize {
        self.specs.push(CheckSpec { name, description, expectation });
        self.specs.len() - 1
    }

    fn pass(&mut self, name: impl Into<String>, description: impl Into<String>) -> usize {
        self.add(name.into(), description.into(), Expectation::ExpectedPass)
    }

    fn search(&mut self, name: impl Into<String>, description: impl Into<String>) -> usize {
        self.add(name.into(), description.into(), Expectation::ExpectedCounterexample)
    }
}

fn candidate_description(op: OperatorKind) -> &'static str {
    match op {
        OperatorKind::Skeptical => "admissible labelings below every ballot",
        OperatorKind::Credulous => "admissible labelings compatible with every ballot",
        OperatorKind::SuperCredulous => "complete labelings compatible with every ballot",
    }
}

fn pareto_expected(op: OperatorKind, class: usize) -> bool {
    op == OperatorKind::Skeptical || SET_CLASSES.contains(&class)
}

fn build_registry() -> (Registry, Ids) {
    let mut r = Registry { specs: Vec::new() };
    let greatest_lower_bound = r.pass(
        "skeptical-outcome-is-greatest-admissible-lower-bound",
        "The skeptical outcome is admissible, below every ballot, and above every other such labeling.",
    );
    let operator_outcomes = r.pass(
        "operator-outcomes-compatible-and-ordered",
        "Every outcome is compatible with every ballot; skeptical and credulous outcomes are admissible, \
         the super-credulous outcome is complete, and the credulous outcome is below the super-credulous one.",
    );
    let mut pareto = [[UNSET; 8]; 3];
    for (o, op) in OperatorKind::ALL.into_iter().enumerate() {
        for (c, class) in CLASSES.into_iter().enumerate() {
            let name = format!("pareto/{}/{}", op.as_str(), class.label());
            pareto[o][c] = if pareto_expected(op, c) {
                r.pass(
                    name,
                    format!(
                        "The {} outcome is Pareto optimal among the {} under homogeneous {} preferences.",
                        op.as_str(),
                        candidate_description(op),
                        class.label()
                    ),
                )
            } else {
                r.search(
                    name,
                    format!(
                        "Some profile has a {} outcome that is Pareto dominated among the {} under homogeneous {} preferences.",
                        op.as_str(),
                        candidate_description(op),
                        class.label()
                    ),
                )
            };
        }
    }
    let distance_implies_set = r.pass(
        "distance-optimal-implies-set-optimal",
        "In every operator's candidate set, a labeling Pareto optimal under a distance class is Pareto optimal \
         under the set class it is built on.",
    );
    let iuo_equivalence = r.pass(
        "iuo-split-preserves-optimality-on-compatible-candidates",
        "In candidate sets of labelings compatible with every ballot, each class and its IUO counterpart select \
         the same Pareto optimal labelings.",
    );
    let hetero_skeptical = r.pass(
        "heterogeneous/skeptical-pareto-all-classes",
        "The skeptical outcome stays Pareto optimal when each agent holds any of the eight classes.",
    );
    let mut hetero_set = [UNSET; 3];
    for (o, op) in OperatorKind::ALL.into_iter().enumerate() {
        hetero_set[o] = r.pass(
            format!("heterogeneous/{}-pareto-set-classes", op.as_str()),
            format!("The {} outcome stays Pareto optimal when each agent holds any of the four set classes.", op.as_str()),
        );
    }
    let hetero_iuo_mix = r.pass(
        "heterogeneous/set-and-iuo-set-mix-preserves-optimality",
        "A labeling compatible with every ballot that is Pareto optimal under homogeneous HS and under homogeneous \
         IUO_HS preferences stays optimal under every mix of the two; likewise for IWS and IUO_IWS.",
    );
    let hetero_mixed_distance = r.search(
        "heterogeneous/mixed-distance-breaks-optimality",
        "Some pair of issue-uniform labelings L, L' has L undominated by L' under homogeneous HD and under \
         homogeneous IWD preferences, yet dominated when one agent uses HD and the other IWD.",
    );
    let mut skeptical_benevolent = [UNSET; 8];
    let mut skeptical_manipulable = [UNSET; 8];
    let mut skeptical_proof = [UNSET; 8];
    for (c, class) in CLASSES.into_iter().enumerate() {
        if SKEPTICAL_LIARS.contains(&c) {
            skeptical_benevolent[c] = r.pass(
                format!("strategy/skeptical/{}/lies-benevolent", class.label()),
                format!("Every strategic lie against the skeptical operator under {} preferences is benevolent.", class.label()),
            );
            skeptical_manipulable[c] = r.search(
                format!("strategy/skeptical/{}/manipulable", class.label()),
                format!("Some agent has a strategic lie against the skeptical operator under {} preferences.", class.label()),
            );
        } else {
            skeptical_proof[c] = r.pass(
                format!("strategy/skeptical/{}/strategy-proof", class.label()),
                format!("No agent has a strategic lie against the skeptical operator under {} preferences.", class.label()),
            );
        }
    }
    let mut malicious = [[UNSET; 8]; 3];
    for (o, op) in OperatorKind::ALL.into_iter().enumerate().skip(1) {
        for (c, class) in CLASSES.into_iter().enumerate() {
            malicious[o][c] = r.search(
                format!("strategy/{}/{}/malicious-lie", op.as_str(), class.label()),
                format!("Some agent has a malicious strategic lie against the {} operator under {} preferences.", op.as_str(), class.label()),
            );
        }
    }
    let lie_carry_over = [
        r.pass(
            "strategy/iuo-distance-lies-are-distance-lies/hamming",
            "For every operator, each strategic lie under IUO_HD preferences is also one under HD preferences.",
        ),
        r.pass(
            "strategy/iuo-distance-lies-are-distance-lies/issue-wise",
            "For every operator, each strategic lie under IUO_IWD preferences is also one under IWD preferences.",
        ),
    ];
    let hetero_strategy_proof = r.pass(
        "heterogeneous/skeptical-strategy-proof-iuo-sets",
        "No agent has a strategic lie against the skeptical operator when each agent holds IUO_HS or IUO_IWS preferences.",
    );
    let lemma_formulas = r.pass(
        "lemma/hamming-set-formulas",
        "The Hamming set is the union of the six label clashes; below a labeling it is undec ∩ dec, \
         and between compatible labelings it is (dec ∩ undec) ∪ (undec ∩ dec).",
    );
    let lemma_more_committed = r.pass(
        "lemma/more-committed-is-preferred",
        "If L ⊑ L' ⊑ Li then the Hamming set from Li to L' is contained in the one to L.",
    );
    let lemma_set_commitment = r.pass(
        "lemma/set-preference-implies-more-committed",
        "If L ⊑ Li and L' is weakly preferred to L under HS preferences with top Li, then L ⊑ L'.",
    );
    let lemma_uniform_sets = r.pass(
        "lemma/hamming-and-issue-sets-agree-on-uniform-labelings",
        "With a complete top, HS and IWS relate any two issue-uniform labelings the same way, as do IUO_HS and IUO_IWS.",
    );
    let lemma_iuo_compatible = r.pass(
        "lemma/iuo-split-agrees-on-compatible-labelings",
        "Each class and its IUO counterpart relate any two labelings compatible with the top the same way.",
    );
    let ids = Ids {
        greatest_lower_bound,
        operator_outcomes,
        pareto,
        distance_implies_set,
        iuo_equivalence,
        hetero_skeptical,
        hetero_set,
        hetero_iuo_mix,
        hetero_mixed_distance,
        skeptical_benevolent,
        skeptical_manipulable,
        skeptical_proof,
        malicious,
        lie_carry_over,
        hetero_strategy_proof,
        lemma_formulas,
        lemma_more_committed,
        lemma_set_commitment,
        lemma_uniform_sets,
        lemma_iuo_compatible,
    };
    (r, ids)
}

/// Instances seen and the first hit: a violation for expected-pass checks, a
/// witness for searches.
#[derive(Clone, Debug, Default)]
struct Tally {
    tested: u64,
    hit: Option<Witness>,
}

impl Tally {
    fn record(&mut self, hit: bool, witness: impl FnOnce() -> Witness) {
        self.tested += 1;
        if hit && self.hit.is_none() {
            self.hit = Some(witness());
        }
    }

    fn merge(&mut self, other: Tally) {
        self.tested += other.tested;
        if self.hit.is_none() {
            self.hit = other.hit;
        }
    }
}

const DOMAIN_ALL: usize = 0;
const DOMAIN_COMPAT: usize = 1;

struct Partial {
    checks: Vec<Tally>,
    /// `[domain][from][to]`: a pair where `to` dominates but `from` does not.
    carry: Vec<Tally>,
    /// `[op][class][LieClass]` lie counts.
    lies: [[[u64; 3]; 8]; 3],
    profiles: u64,
}

impl Partial {
    fn new(checks: usize) -> Partial {
        Partial { checks: vec![Tally::default(); checks], carry: vec![Tally::default(); 2 * 64], lies: [[[0; 3]; 8]; 3], profiles: 0 }
    }

    fn merge(&mut self, other: Partial) {
        for (a, b) in self.checks.iter_mut().zip(other.checks) {
            a.merge(b);
        }
        for (a, b) in self.carry.iter_mut().zip(other.carry) {
            a.merge(b);
        }
        for o in 0..3 {
            for c in 0..8 {
                for k in 0..3 {
                    self.lies[o][c][k] += other.lies[o][c][k];
                }
            }
        }
        self.profiles += other.profiles;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Phase {
    Exhaustive,
    Random,
    Pinned,
}

struct Job {
    phase: Phase,
    af: ArgumentationFramework,
    /// Fixed profiles, for pinned jobs; the framework's profile space otherwise.
    profiles: Option<Vec<Vec<Labeling>>>,
    seed: u64,
}

/// Per-agent keys for a list of labelings under every class.
struct KeyTable {
    agents: usize,
    items: usize,
    keys: Vec<Key>,
}

impl KeyTable {
    fn new(m: &Measures, tops: &[Labeling], items: &[Labeling]) -> KeyTable {
        let mut keys = Vec::with_capacity(8 * items.len() * tops.len());
        for class in CLASSES {
            for l in items {
                for t in tops {
                    keys.push(m.key(class, t, l));
                }
            }
        }
        KeyTable { agents: tops.len(), items: items.len(), keys }
    }

    fn key(&self, class: usize, item: usize, agent: usize) -> Key {
        self.keys[(class * self.items + item) * self.agents + agent]
    }

    /// Whether item `j` Pareto dominates item `i` when agent `a` holds `classes[a]`.
    fn dominates(&self, m: &Measures, classes: &[usize], j: usize, i: usize) -> bool {
        let mut strict = false;
        for (a, &c) in classes.iter().enumerate() {
            match m.relate_keys(CLASSES[c], self.key(c, j, a), self.key(c, i, a)) {
                Relation::Strict1 => strict = true,
                Relation::Indifferent => {}
                Relation::Strict2 | Relation::Incomparable => return false,
            }
        }
        strict
    }

    /// `[j * items + i]`: item `j` dominates item `i` under homogeneous `class`.
    fn dominance(&self, m: &Measures, class: usize) -> Vec<bool> {
        let classes = vec![class; self.agents];
        let n = self.items;
        let mut out = vec![false; n * n];
        for j in 0..n {
            for i in 0..n {
                out[j * n + i] = i != j && self.dominates(m, &classes, j, i);
            }
        }
        out
    }
}

struct Framework<'a> {
    af: &'a ArgumentationFramework,
    complete: Vec<Labeling>,
    admissible: Vec<Labeling>,
    ballot_space: Vec<Labeling>,
    partition: IssuePartition,
    /// Every issue-uniform labeling, for small frameworks.
    uniform_all: Option<Vec<Labeling>>,
}

struct Ctx<'a> {
    cfg: &'a SuiteConfig,
    ids: &'a Ids,
}

fn class_names(classes: &[usize]) -> Vec<MeasureKind> {
    classes.iter().map(|&c| CLASSES[c]).collect()
}

fn witness(fw: &Framework, ballots: &[Labeling], classes: Option<&[usize]>, details: Value) -> Witness {
    let profile = (!ballots.is_empty())
        .then(|| profile_to_json(fw.af, &Profile::anonymous(ballots.iter().copied()).expect("non-empty")));
    Witness { framework: framework_to_json(fw.af), profile, classes: classes.map(class_names), details }
}

fn lab(fw: &Framework, l: &Labeling) -> Value {
    labeling_to_json(fw.af, l)
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n + i) as u128 / (i + 1) as u128)
}

/// Ballot index multisets for one agent count: all of them when few enough,
/// otherwise distinct random samples.
fn profile_indices(space: usize, k: usize, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    if space == 0 {
        return Vec::new();
    }
    if binomial(space, k) <= cfg.profile_limit as u128 {
        return multisets(space, k).collect();
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut attempts = 0;
    while seen.len() < cfg.profile_samples && attempts < cfg.profile_samples * 20 {
        attempts += 1;
        let mut pick: Vec<usize> = (0..k).map(|_| rng.gen_range(0..space)).collect();
        pick.sort_unstable();
        seen.insert(pick);
    }
    seen.into_iter().collect()
}

/// Every class assignment over `pool` for `k` agents, or a random sample of
/// `cfg.hetero_samples` when there are more.
fn assignments(pool: &[usize], k: usize, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let total = (pool.len() as u128).pow(k as u32);
    if total <= cfg.hetero_samples as u128 {
        let mut out = vec![Vec::new()];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    pool.iter().map(move |&c| {
                        let mut next = prefix.clone();
                        next.push(c);
                        next
                    })
                })
                .collect();
        }
        out
    } else {
        (0..cfg.hetero_samples).map(|_| (0..k).map(|_| *pool.choose(rng).expect("non-empty pool")).collect()).collect()
    }
}

fn prepare<'a>(af: &'a ArgumentationFramework, cfg: &SuiteConfig) -> Result<Framework<'a>> {
    let complete = af.complete_labelings()?;
    let admissible = af.enumerate_labelings(SemanticsKind::Admissible)?;
    let ballot_space = match cfg.ballots {
        SemanticsKind::Complete => complete.clone(),
        SemanticsKind::Admissible => admissible.clone(),
        SemanticsKind::All => af.enumerate_labelings(SemanticsKind::All)?,
    };
    let partition = IssuePartition::from_complete(af.len(), &complete);
    let uniform_all = (af.len() <= FULL_SPACE_ARGS).then(|| {
        af.enumerate_labelings(SemanticsKind::All)
            .expect("small framework")
            .into_iter()
            .filter(|l| partition.is_uniform_on(l))
            .collect()
    });
    Ok(Framework { af, complete, admissible, ballot_space, partition, uniform_all })
}

fn run_job(job: &Job, ctx: &Ctx, checks: usize) -> Result<Partial> {
    let mut partial = Partial::new(checks);
    let fw = prepare(&job.af, ctx.cfg)?;
    let measures = Measures::new(Some(&fw.partition)).with_alpha(ctx.cfg.alpha)?;
    let mut rng = ChaCha8Rng::seed_from_u64(job.seed);
    if job.phase == Phase::Exhaustive || fw.admissible.len() <= LEMMA_SPACE_LIMIT {
        lemma_checks(&fw, &measures, ctx, &mut partial);
    }
    let profiles: Vec<Vec<Labeling>> = match &job.profiles {
        Some(fixed) => fixed.clone(),
        None => {
            let mut out = Vec::new();
            for &k in &ctx.cfg.agent_counts {
                for pick in profile_indices(fw.ballot_space.len(), k, ctx.cfg, &mut rng) {
                    out.push(pick.iter().map(|&i| fw.ballot_space[i]).collect());
                }
            }
            out
        }
    };
    for ballots in &profiles {
        partial.profiles += 1;
        instance_checks(&fw, &measures, ballots, ctx, &mut rng, &mut partial);
    }
    Ok(partial)
}

fn lemma_checks(fw: &Framework, m: &Measures, ctx: &Ctx, partial: &mut Partial) {
    let ids = ctx.ids;
    let space: Vec<Labeling> = match &fw.uniform_all {
        Some(_) => fw.af.enumerate_labelings(SemanticsKind::All).expect("small framework"),
        None => fw.admissible.clone(),
    };
    for l1 in &space {
        for l2 in &space {
            let ham = hamming_raw(l1, l2);
            let (i1, o1, u1, d1) = (l1.in_set(), l1.out_set(), l1.undec_set(), l1.dec_set());
            let (i2, o2, u2, d2) = (l2.in_set(), l2.out_set(), l2.undec_set(), l2.dec_set());
            let six = [(i1, o2), (i1, u2), (o1, i2), (o1, u2), (u1, i2), (u1, o2)]
                .into_iter()
                .fold(BitSet::EMPTY, |acc, (a, b)| acc.union(a.intersection(b)));
            let mut ok = ham == six;
            if leq_unchecked(l1, l2) {
                ok &= ham == u1.intersection(d2);
            }
            if compatible_unchecked(l1, l2) {
                ok &= ham == d1.intersection(u2).union(u1.intersection(d2));
            }
            partial.checks[ids.lemma_formulas].record(!ok, || {
                witness(fw, &[], None, json!({ "l1": lab(fw, l1), "l2": lab(fw, l2) }))
            });
        }
    }
    // Triples with `l ⊑ li`.
    for li in &space {
        for l in space.iter().filter(|l| leq_unchecked(l, li)) {
            let base = hamming_raw(l, li);
            for l2 in &space {
                let set = hamming_raw(l2, li);
                if leq_unchecked(l, l2) && leq_unchecked(l2, li) {
                    partial.checks[ids.lemma_more_committed].record(!set.is_subset(base), || {
                        witness(fw, &[], None, json!({ "l": lab(fw, l), "l_prime": lab(fw, l2), "top": lab(fw, li) }))
                    });
                }
                if set.is_subset(base) {
                    partial.checks[ids.lemma_set_commitment].record(!leq_unchecked(l, l2), || {
                        witness(fw, &[], None, json!({ "l": lab(fw, l), "l_prime": lab(fw, l2), "top": lab(fw, li) }))
                    });
                }
            }
        }
    }
    let uniform: Vec<Labeling> = space.iter().copied().filter(|l| fw.partition.is_uniform_on(l)).collect();
    let relate = |class: usize, top: &Labeling, a: &Labeling, b: &Labeling| {
        m.relate_keys(CLASSES[class], m.key(CLASSES[class], top, a), m.key(CLASSES[class], top, b))
    };
    for top in &fw.complete {
        for a in &uniform {
            for b in &uniform {
                let ok = relate(HS, top, a, b) == relate(IWS, top, a, b)
                    && relate(IUO_HS, top, a, b) == relate(IUO_IWS, top, a, b);
                partial.checks[ids.lemma_uniform_sets].record(!ok, || {
                    witness(fw, &[], None, json!({ "top": lab(fw, top), "l2": lab(fw, a), "l3": lab(fw, b) }))
                });
            }
        }
        let compat: Vec<&Labeling> = space.iter().filter(|l| compatible_unchecked(l, top)).collect();
        for a in &compat {
            for b in &compat {
                let ok = [HS, HD, IWS, IWD].iter().all(|&c| relate(c, top, a, b) == relate(c + 4, top, a, b));
                partial.checks[ids.lemma_iuo_compatible].record(!ok, || {
                    witness(fw, &[], None, json!({ "top": lab(fw, top), "l2": lab(fw, a), "l3": lab(fw, b) }))
                });
            }
        }
    }
}

fn instance_checks(fw: &Framework, m: &Measures, ballots: &[Labeling], ctx: &Ctx, rng: &mut ChaCha8Rng, partial: &mut Partial) {
    let ids = ctx.ids;
    let af = fw.af;
    let k = ballots.len();
    let outcomes: Vec<Labeling> = OperatorKind::ALL.iter().map(|&op| apply_operator(af, ballots, op)).collect();
    let [so, co, sco] = [outcomes[0], outcomes[1], outcomes[2]];

    let below: Vec<Labeling> =
        fw.admissible.iter().copied().filter(|l| CandidateSetKind::AdmLeq.admits(af, ballots, l)).collect();
    let is_greatest = below.contains(&so) && below.iter().all(|l| leq_unchecked(l, &so));
    partial.checks[ids.greatest_lower_bound].record(!is_greatest, || {
        witness(fw, ballots, None, json!({ "skeptical_outcome": lab(fw, &so) }))
    });
    let outcomes_ok = outcomes.iter().all(|o| ballots.iter().all(|b| compatible_unchecked(o, b)))
        && af.admissible_unchecked(&so)
        && af.admissible_unchecked(&co)
        && af.complete_unchecked(&sco)
        && leq_unchecked(&co, &sco);
    partial.checks[ids.operator_outcomes].record(!outcomes_ok, || {
        witness(
            fw,
            ballots,
            None,
            json!({ "skeptical": lab(fw, &so), "credulous": lab(fw, &co), "super_credulous": lab(fw, &sco) }),
        )
    });

    // Everything below is judged inside the admissible labelings compatible
    // with every ballot; each operator's candidate set is a subset.
    let compat: Vec<Labeling> =
        fw.admissible.iter().copied().filter(|l| CandidateSetKind::AdmCompat.admits(af, ballots, l)).collect();
    let table = KeyTable::new(m, ballots, &compat);
    let dominance: Vec<Vec<bool>> = (0..8).map(|c| table.dominance(m, c)).collect();
    let n = compat.len();
    let members: Vec<Vec<usize>> = OperatorKind::ALL
        .iter()
        .map(|&op| {
            let kind = CandidateSetKind::for_operator(op);
            (0..n).filter(|&i| kind.admits(af, ballots, &compat[i])).collect()
        })
        .collect();
    // optimal[op][class][i] for i a member of the operator's set.
    let optimal: Vec<Vec<Vec<bool>>> = members
        .iter()
        .map(|set| {
            (0..8)
                .map(|c| {
                    let mut opt = vec![false; n];
                    for &i in set {
                        opt[i] = !set.iter().any(|&j| dominance[c][j * n + i]);
                    }
                    opt
                })
                .collect()
        })
        .collect();
    let outcome_index: Vec<Option<usize>> = outcomes.iter().map(|o| compat.iter().position(|l| l == o)).collect();

    for (o, op) in OperatorKind::ALL.into_iter().enumerate() {
        for c in 0..8 {
            let in_set = outcome_index[o].filter(|i| members[o].contains(i));
            let dominator = in_set.and_then(|i| members[o].iter().copied().find(|&j| dominance[c][j * n + i]));
            // An outcome outside its own candidate set counts as a violation.
            let hit = if pareto_expected(op, c) { in_set.is_none() || dominator.is_some() } else { dominator.is_some() };
            partial.checks[ids.pareto[o][c]].record(hit, || {
                witness(
                    fw,
                    ballots,
                    None,
                    json!({
                        "operator": op,
                        "class": CLASSES[c],
                        "outcome": lab(fw, &outcomes[o]),
                        "dominated_by": dominator.map(|j| lab(fw, &compat[j])),
                    }),
                )
            });
        }
    }

    for (o, set) in members.iter().enumerate() {
        for &i in set {
            for (d, s) in [(HD, HS), (IWD, IWS), (IUO_HD, IUO_HS), (IUO_IWD, IUO_IWS)] {
                let hit = optimal[o][d][i] && !optimal[o][s][i];
                partial.checks[ids.distance_implies_set].record(hit, || {
                    witness(
                        fw,
                        ballots,
                        None,
                        json!({
                            "candidate_set": CandidateSetKind::for_operator(OperatorKind::ALL[o]),
                            "labeling": lab(fw, &compat[i]),
                            "distance_class": CLASSES[d],
                            "set_class": CLASSES[s],
                        }),
                    )
                });
            }
            for c in [HS, HD, IWS, IWD] {
                let hit = optimal[o][c][i] != optimal[o][c + 4][i];
                partial.checks[ids.iuo_equivalence].record(hit, || {
                    witness(
                        fw,
                        ballots,
                        None,
                        json!({
                            "candidate_set": CandidateSetKind::for_operator(OperatorKind::ALL[o]),
                            "labeling": lab(fw, &compat[i]),
                            "class": CLASSES[c],
                            "optimal": optimal[o][c][i],
                            "iuo_optimal": optimal[o][c + 4][i],
                        }),
                    )
                });
            }
        }
    }

    // Carry-over between classes, over pairs drawn from one domain: a pair
    // where `to` dominates and `from` does not refutes `from ⇒ to`.
    let uniform_compat: Vec<usize> = (0..n).filter(|&i| fw.partition.is_uniform_on(&compat[i])).collect();
    carry_over(fw, ballots, &compat, &uniform_compat, &dominance, DOMAIN_COMPAT, partial);
    if let Some(all) = &fw.uniform_all {
        let all_table = KeyTable::new(m, ballots, all);
        let all_dominance: Vec<Vec<bool>> = (0..8).map(|c| all_table.dominance(m, c)).collect();
        let every: Vec<usize> = (0..all.len()).collect();
        carry_over(fw, ballots, all, &every, &all_dominance, DOMAIN_ALL, partial);
        if k == 2 {
            mixed_distance(fw, m, ballots, all, &all_table, &all_dominance, ctx, partial);
        }
    }

    // Heterogeneous Pareto checks.
    let all_classes: Vec<usize> = (0..8).collect();
    for (o, pool, id) in [
        (0, &all_classes[..], ids.hetero_skeptical),
        (0, &SET_CLASSES[..], ids.hetero_set[0]),
        (1, &SET_CLASSES[..], ids.hetero_set[1]),
        (2, &SET_CLASSES[..], ids.hetero_set[2]),
    ] {
        let Some(i) = outcome_index[o].filter(|i| members[o].contains(i)) else { continue };
        for classes in assignments(pool, k, ctx.cfg, rng) {
            let dominator = members[o].iter().copied().find(|&j| j != i && table.dominates(m, &classes, j, i));
            partial.checks[id].record(dominator.is_some(), || {
                witness(
                    fw,
                    ballots,
                    Some(&classes),
                    json!({
                        "operator": OperatorKind::ALL[o],
                        "outcome": lab(fw, &outcomes[o]),
                        "dominated_by": dominator.map(|j| lab(fw, &compat[j])),
                    }),
                )
            });
        }
    }
    for (set_class, iuo_class) in [(HS, IUO_HS), (IWS, IUO_IWS)] {
        let pool = [set_class, iuo_class];
        let mixes = assignments(&pool, k, ctx.cfg, rng);
        for i in 0..n {
            let homogeneous_optimal =
                (0..n).all(|j| !dominance[set_class][j * n + i] && !dominance[iuo_class][j * n + i]);
            if !homogeneous_optimal {
                continue;
            }
            for classes in &mixes {
                let dominator = (0..n).find(|&j| j != i && table.dominates(m, classes, j, i));
                partial.checks[ids.hetero_iuo_mix].record(dominator.is_some(), || {
                    witness(
                        fw,
                        ballots,
                        Some(classes),
                        json!({ "labeling": lab(fw, &compat[i]), "dominated_by": dominator.map(|j| lab(fw, &compat[j])) }),
                    )
                });
            }
        }
    }

    lie_checks(fw, m, ballots, &outcomes, ctx, rng, partial);
}

fn carry_over(
    fw: &Framework,
    ballots: &[Labeling],
    items: &[Labeling],
    domain: &[usize],
    dominance: &[Vec<bool>],
    which: usize,
    partial: &mut Partial,
) {
    let n = items.len();
    for from in 0..8 {
        for to in 0..8 {
            let slot = &mut partial.carry[which * 64 + from * 8 + to];
            let mut found = None;
            'search: for &i in domain {
                for &j in domain {
                    if dominance[to][j * n + i] && !dominance[from][j * n + i] {
                        found = Some((i, j));
                        break 'search;
                    }
                }
            }
            slot.record(found.is_some(), || {
                let (i, j) = found.expect("hit");
                witness(
                    fw,
                    ballots,
                    None,
                    json!({
                        "from": CLASSES[from],
                        "to": CLASSES[to],
                        "optimal_under_from": lab(fw, &items[i]),
                        "dominator_under_to": lab(fw, &items[j]),
                    }),
                )
            });
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn mixed_distance(
    fw: &Framework,
    m: &Measures,
    ballots: &[Labeling],
    items: &[Labeling],
    table: &KeyTable,
    dominance: &[Vec<bool>],
    ctx: &Ctx,
    partial: &mut Partial,
) {
    let n = items.len();
    let mut found = None;
    'search: for mix in [[HD, IWD], [IWD, HD]] {
        for i in 0..n {
            for j in 0..n {
                if !dominance[HD][j * n + i] && !dominance[IWD][j * n + i] && table.dominates(m, &mix, j, i) {
                    found = Some((mix, i, j));
                    break 'search;
                }
            }
        }
    }
    partial.checks[ctx.ids.hetero_mixed_distance].record(found.is_some(), || {
        let (mix, i, j) = found.expect("hit");
        witness(
            fw,
            ballots,
            Some(&mix),
            json!({ "labeling": lab(fw, &items[i]), "dominated_by": lab(fw, &items[j]) }),
        )
    });
}

fn lie_index(class: LieClass) -> usize {
    match class {
        LieClass::Benevolent => 0,
        LieClass::Malicious => 1,
        LieClass::Neutral => 2,
    }
}

fn lie_checks(
    fw: &Framework,
    m: &Measures,
    ballots: &[Labeling],
    outcomes: &[Labeling],
    ctx: &Ctx,
    rng: &mut ChaCha8Rng,
    partial: &mut Partial,
) {
    let ids = ctx.ids;
    let k = ballots.len();
    let profile = Profile::anonymous(ballots.iter().copied()).expect("non-empty");
    let homogeneous: Vec<PreferenceProfile> = CLASSES.iter().map(|&c| PreferenceProfile::homogeneous(&profile, c)).collect();
    let iuo_set_mixes = assignments(&[IUO_HS, IUO_IWS], k, ctx.cfg, rng);
    let mut iuo_set_lie: Option<(Vec<usize>, usize, Labeling, Labeling)> = None;

    for (o, op) in OperatorKind::ALL.into_iter().enumerate() {
        let honest = outcomes[o];
        // found[class] = any lie under the class; first lie per lie class.
        let mut any = [false; 8];
        let mut first: [[Option<(usize, Labeling, Labeling)>; 3]; 8] = [[None; 3]; 8];
        let mut carry_hit: [Option<(usize, Labeling, Labeling)>; 2] = [None; 2];
        for liar in 0..k {
            if liar > 0 && ballots[liar] == ballots[liar - 1] {
                continue;
            }
            let top = ballots[liar];
            let mut changed = ballots.to_vec();
            let moves: Vec<(Labeling, Labeling)> = fw
                .ballot_space
                .iter()
                .filter(|&&lie| lie != top)
                .filter_map(|&lie| {
                    changed[liar] = lie;
                    let outcome = apply_operator(fw.af, &changed, op);
                    (outcome != honest).then_some((lie, outcome))
                })
                .collect();
            let improves = |class: usize, outcome: &Labeling| {
                let c = CLASSES[class];
                m.relate_keys(c, m.key(c, &top, outcome), m.key(c, &top, &honest)) == Relation::Strict1
            };
            for (lie, outcome) in &moves {
                let mut is_lie = [false; 8];
                for c in 0..8 {
                    if !improves(c, outcome) {
                        continue;
                    }
                    is_lie[c] = true;
                    any[c] = true;
                    let kind = classify(&homogeneous[c], m, liar, &honest, outcome);
                    partial.lies[o][c][lie_index(kind)] += 1;
                    first[c][lie_index(kind)].get_or_insert((liar, *lie, *outcome));
                    if o == 0 && SKEPTICAL_LIARS.contains(&c) {
                        partial.checks[ids.skeptical_benevolent[c]].tested += 1;
                        if kind != LieClass::Benevolent && partial.checks[ids.skeptical_benevolent[c]].hit.is_none() {
                            partial.checks[ids.skeptical_benevolent[c]].hit =
                                Some(lie_witness(fw, ballots, op, c, liar, lie, &honest, outcome, kind));
                        }
                    }
                }
                for (slot, (iuo, plain)) in [(IUO_HD, HD), (IUO_IWD, IWD)].into_iter().enumerate() {
                    if is_lie[iuo] && !is_lie[plain] {
                        carry_hit[slot].get_or_insert((liar, *lie, *outcome));
                    }
                }
                if o == 0 && iuo_set_lie.is_none() {
                    for classes in &iuo_set_mixes {
                        if improves(classes[liar], outcome) {
                            iuo_set_lie = Some((classes.clone(), liar, *lie, *outcome));
                            break;
                        }
                    }
                }
            }
        }
        for c in 0..8 {
            let witness_of = |kind: LieClass| {
                let (liar, lie, outcome) = first[c][lie_index(kind)].expect("recorded");
                lie_witness(fw, ballots, op, c, liar, &lie, &honest, &outcome, kind)
            };
            if o == 0 {
                if SKEPTICAL_LIARS.contains(&c) {
                    let kind = [LieClass::Benevolent, LieClass::Malicious, LieClass::Neutral]
                        .into_iter()
                        .find(|&kd| first[c][lie_index(kd)].is_some());
                    partial.checks[ids.skeptical_manipulable[c]].record(any[c], || witness_of(kind.expect("lie")));
                } else {
                    let kind = [LieClass::Benevolent, LieClass::Malicious, LieClass::Neutral]
                        .into_iter()
                        .find(|&kd| first[c][lie_index(kd)].is_some());
                    partial.checks[ids.skeptical_proof[c]].record(any[c], || witness_of(kind.expect("lie")));
                }
            } else {
                let malicious = first[c][lie_index(LieClass::Malicious)].is_some();
                partial.checks[ids.malicious[o][c]].record(malicious, || witness_of(LieClass::Malicious));
            }
        }
        for (slot, (iuo, plain)) in [(IUO_HD, HD), (IUO_IWD, IWD)].into_iter().enumerate() {
            partial.checks[ids.lie_carry_over[slot]].record(carry_hit[slot].is_some(), || {
                let (liar, lie, outcome) = carry_hit[slot].expect("hit");
                let mut w = lie_witness(fw, ballots, op, iuo, liar, &lie, &honest, &outcome, LieClass::Neutral);
                w.details["uniform_class"] = json!(CLASSES[plain]);
                w
            });
        }
    }
    partial.checks[ids.hetero_strategy_proof].tested += iuo_set_mixes.len() as u64;
    if let Some((classes, liar, lie, outcome)) = iuo_set_lie {
        let t = &mut partial.checks[ids.hetero_strategy_proof];
        if t.hit.is_none() {
            let mut w = lie_witness(fw, ballots, OperatorKind::Skeptical, classes[liar], liar, &lie, &outcomes[0], &outcome, LieClass::Neutral);
            w.classes = Some(class_names(&classes));
            t.hit = Some(w);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn lie_witness(
    fw: &Framework,
    ballots: &[Labeling],
    op: OperatorKind,
    class: usize,
    liar: usize,
    lie: &Labeling,
    honest: &Labeling,
    outcome: &Labeling,
    kind: LieClass,
) -> Witness {
    witness(
        fw,
        ballots,
        None,
        json!({
            "operator": op,
            "class": CLASSES[class],
            "liar": (liar + 1).to_string(),
            "lie": lab(fw, lie),
            "honest_outcome": lab(fw, honest),
            "lie_outcome": lab(fw, outcome),
            "classification": kind,
        }),
    )
}

/// Hand-checked frameworks whose witnesses need five arguments and are rare
/// among random frameworks.
fn pinned_jobs() -> Vec<Job> {
    let mut jobs = Vec::new();
    // A ⇄ B both defeat C, which starts a chain: the skeptical outcome
    // discards the whole chain, so adopting the other agent's ballot pays off
    // under IUO_HD.
    let af = ArgumentationFramework::new(
        ["A", "B", "C", "D", "E"],
        [("A", "B"), ("B", "A"), ("A", "C"), ("B", "C"), ("C", "D"), ("D", "E")],
    )
    .expect("valid framework");
    let l1 = af.labeling(["A", "D"], ["B", "C", "E"]).expect("valid labeling");
    let l2 = af.labeling(["B", "D"], ["A", "C", "E"]).expect("valid labeling");
    jobs.push(Job { phase: Phase::Pinned, af, profiles: Some(vec![vec![l1, l2]]), seed: 1 });
    // Found by seeded search over random 5-argument frameworks; three issues.
    let af = ArgumentationFramework::new(
        ["A", "B", "C", "D", "E"],
        [("A", "E"), ("B", "E"), ("C", "A"), ("C", "B"), ("C", "D"), ("D", "B"), ("D", "C"), ("E", "A")],
    )
    .expect("valid framework");
    let l1 = af.labeling(["C", "E"], ["A", "B", "D"]).expect("valid labeling");
    let l2 = af.labeling(["D", "E"], ["A", "B", "C"]).expect("valid labeling");
    jobs.push(Job { phase: Phase::Pinned, af, profiles: Some(vec![vec![l1, l2]]), seed: 2 });
    jobs
}

fn build_jobs(cfg: &SuiteConfig) -> Result<Vec<Job>> {
    let mut master = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut jobs = Vec::new();
    for n in 0..=cfg.max_exhaustive_args {
        for (_, af) in canonical_frameworks(n) {
            jobs.push(Job { phase: Phase::Exhaustive, af, profiles: None, seed: master.gen() });
        }
    }
    for i in 0..cfg.random_frameworks {
        let n = cfg.random_sizes[i % cfg.random_sizes.len()];
        let af = random_framework(master.gen(), n, cfg.edge_probability)?;
        jobs.push(Job { phase: Phase::Random, af, profiles: None, seed: master.gen() });
    }
    if cfg.pinned {
        let fixed = pinned_jobs();
        if cfg.ballots == SemanticsKind::Complete {
            jobs.extend(fixed);
        } else {
            // Pinned ballots are complete; under other ballot spaces the
            // frameworks are searched like the random ones.
            jobs.extend(fixed.into_iter().map(|j| Job { profiles: None, ..j }));
        }
    }
    Ok(jobs)
}

/// Name, expectation, passed, instances tested and witness of one carry-over check.
type CarryCheck = (String, Expectation, bool, u64, Option<Witness>);

fn carry_over_matrix(carry: &[Tally]) -> (Matrix, Vec<CarryCheck>) {
    let mut computed = vec![vec![String::new(); 6]; 6];
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let mut agrees = true;
    for (r, (row, from)) in GROUPS.iter().enumerate() {
        for (c, (col, to)) in GROUPS.iter().enumerate() {
            let pick = |domain: usize| {
                let mut tested = 0;
                let mut hit = None;
                for &x in *from {
                    for &y in *to {
                        let t = &carry[domain * 64 + x * 8 + y];
                        tested += t.tested;
                        if hit.is_none() {
                            hit = t.hit.clone();
                        }
                    }
                }
                (tested, hit)
            };
            let (all_tested, all_hit) = pick(DOMAIN_ALL);
            let (compat_tested, compat_hit) = pick(DOMAIN_COMPAT);
            let cell = if compat_hit.is_some() {
                "N"
            } else if all_hit.is_some() {
                "Y*"
            } else {
                "Y"
            };
            computed[r][c] = cell.to_string();
            let expected = EXPECTED_CARRY_OVER[r][c];
            let name = format!("carry-over/{row}->{col}");
            match expected {
                "Y" => {
                    let hit = compat_hit.or(all_hit);
                    checks.push((name, Expectation::ExpectedPass, hit.is_none(), all_tested + compat_tested, hit));
                }
                "Y*" => {
                    checks.push((name, Expectation::ExpectedPass, compat_hit.is_none(), compat_tested, compat_hit));
                    if cell == "Y" {
                        notes.push(format!(
                            "{row} -> {col}: expected Y*, but optimality carried over on every instance, \
                             including labelings that are not compatible with the ballots"
                        ));
                    }
                }
                _ => {
                    let found = compat_hit.is_some();
                    checks.push((name, Expectation::ExpectedCounterexample, found, compat_tested, compat_hit));
                }
            }
            agrees &= cell == expected || (expected == "Y*" && cell == "Y");
        }
    }
    notes.insert(
        0,
        "Cells are computed over issue-uniform labelings: every such labeling for frameworks of up to \
         three arguments, and the admissible ones compatible with every ballot for all frameworks. \
         N: refuted among compatible labelings; Y*: refuted only with incompatible labelings; Y: never refuted."
            .to_string(),
    );
    let matrix = Matrix {
        name: "pareto-carry-over".into(),
        rows: GROUPS.iter().map(|g| g.0.to_string()).collect(),
        columns: GROUPS.iter().map(|g| g.0.to_string()).collect(),
        expected: EXPECTED_CARRY_OVER.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
        computed,
        agrees,
        notes,
    };
    (matrix, checks)
}

fn pareto_matrix(checks: &[Tally], ids: &Ids) -> Matrix {
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    for (_, classes) in GROUPS {
        let mut erow = Vec::new();
        let mut crow = Vec::new();
        for (o, op) in OperatorKind::ALL.into_iter().enumerate() {
            let exp = classes.iter().all(|&c| pareto_expected(op, c));
            erow.push(if exp { "Yes" } else { "No" }.to_string());
            // A hit on a passing check is a violation, on a search a witness;
            // either way optimality failed somewhere.
            let failed = classes.iter().any(|&c| checks[ids.pareto[o][c]].hit.is_some());
            crow.push(if failed { "No" } else { "Yes" }.to_string());
        }
        expected.push(erow);
        computed.push(crow);
    }
    Matrix {
        name: "pareto-by-operator".into(),
        rows: GROUPS.iter().map(|g| g.0.to_string()).collect(),
        columns: OperatorKind::ALL.iter().map(|o| o.as_str().to_string()).collect(),
        agrees: expected == computed,
        expected,
        computed,
        notes: vec![OperatorKind::ALL
            .iter()
            .map(|&op| format!("{}: {}", op.as_str(), candidate_description(op)))
            .collect::<Vec<_>>()
            .join("; ")],
    }
}

fn strategy_matrix(lies: &[[[u64; 3]; 8]; 3]) -> Matrix {
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    for (g, (_, classes)) in GROUPS.iter().enumerate() {
        let mut erow = Vec::new();
        let mut crow = Vec::new();
        for (o, per_class) in lies.iter().enumerate() {
            let exp = match (o, g) {
                (0, 3) => "Yes",
                (0, _) => "No, but benevolent",
                _ => "No, and not benevolent",
            };
            erow.push(exp.to_string());
            let counts = classes.iter().fold([0u64; 3], |acc, &c| {
                [acc[0] + per_class[c][0], acc[1] + per_class[c][1], acc[2] + per_class[c][2]]
            });
            let cell = if counts.iter().all(|&x| x == 0) {
                "Yes"
            } else if counts[1] == 0 && counts[2] == 0 {
                "No, but benevolent"
            } else {
                "No, and not benevolent"
            };
            crow.push(cell.to_string());
        }
        expected.push(erow);
        computed.push(crow);
    }
    let mut notes = Vec::new();
    for (o, op) in OperatorKind::ALL.into_iter().enumerate() {
        for (c, class) in CLASSES.into_iter().enumerate() {
            let [b, mal, neu] = lies[o][c];
            notes.push(format!("{} {}: {b} benevolent, {mal} malicious, {neu} neutral lies", op.as_str(), class.label()));
        }
    }
    Matrix {
        name: "strategy-proofness".into(),
        rows: GROUPS.iter().map(|g| g.0.to_string()).collect(),
        columns: OperatorKind::ALL.iter().map(|o| o.as_str().to_string()).collect(),
        agrees: expected == computed,
        expected,
        computed,
        notes,
    }
}

/// Runs every check over exhaustive frameworks up to
/// `cfg.max_exhaustive_args` arguments, `cfg.random_frameworks` random ones
/// and the pinned witnesses. Instances run in parallel; results are merged in
/// instance order, so the report depends only on the configuration.
pub fn verify_theorem_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let (registry, ids) = build_registry();
    let jobs = build_jobs(cfg)?;
    let ctx = Ctx { cfg, ids: &ids };
    let partials: Vec<Partial> =
        jobs.par_iter().map(|job| run_job(job, &ctx, registry.specs.len())).collect::<Result<_>>()?;
    let mut total = Partial::new(registry.specs.len());
    let mut instances = InstanceCounts::default();
    for (job, p) in jobs.iter().zip(partials) {
        match job.phase {
            Phase::Exhaustive => instances.exhaustive_frameworks += 1,
            Phase::Random => instances.random_frameworks += 1,
            Phase::Pinned => instances.pinned_frameworks += 1,
        }
        total.merge(p);
    }
    instances.profiles = total.profiles;

    let mut checks: Vec<CheckReport> = registry
        .specs
        .iter()
        .zip(&total.checks)
        .map(|(def, tally)| {
            let passed = match def.expectation {
                Expectation::ExpectedPass => tally.hit.is_none(),
                Expectation::ExpectedCounterexample => tally.hit.is_some(),
            };
            CheckReport {
                name: def.name.clone(),
                description: def.description.clone(),
                expectation: def.expectation,
                verdict: if passed { Verdict::Pass } else { Verdict::Fail },
                instances_tested: tally.tested,
                witness: tally.hit.clone(),
            }
        })
        .collect();
    let (carry, carry_checks) = carry_over_matrix(&total.carry);
    for (name, expectation, passed, tested, witness) in carry_checks {
        let description = match expectation {
            Expectation::ExpectedPass => {
                "Pareto optimality under the row classes carries over to the column classes on the tested domain."
            }
            Expectation::ExpectedCounterexample => {
                "Some pair of compatible admissible labelings is optimal under a row class but not under a column class."
            }
        };
        checks.push(CheckReport {
            name,
            description: description.to_string(),
            expectation,
            verdict: if passed { Verdict::Pass } else { Verdict::Fail },
            instances_tested: tested,
            witness,
        });
    }
    let matrices = vec![carry, pareto_matrix(&total.checks, &ids), strategy_matrix(&total.lies)];
    let all_passed = checks.iter().all(|c| c.verdict == Verdict::Pass) && matrices.iter().all(|m| m.agrees);
    Ok(SuiteReport { config: cfg.clone(), experimental: cfg.is_experimental(), instances, checks, matrices, all_passed })
}
