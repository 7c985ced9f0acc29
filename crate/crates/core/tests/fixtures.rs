//! Every stored witness is re-checked through the public API alone.

use std::collections::BTreeMap;

use argagg::analysis::{
    candidate_set, find_strategic_lies, is_pareto_optimal, pareto_dominates, verify_theorem_suite, CandidateSetKind,
    ParetoVerdict, SuiteConfig,
};
use argagg::io;
use argagg::{
    aggregate, ArgumentationFramework, IssuePartition, Labeling, MeasureKind, Measures, OperatorKind,
    PreferenceProfile, Profile, SemanticsKind,
};
use serde_json::Value;

fn load(name: &str) -> BTreeMap<String, Value> {
    let path = format!("{}/tests/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

struct Case {
    af: ArgumentationFramework,
    profile: Profile,
    partition: IssuePartition,
    details: Value,
    classes: Option<Vec<MeasureKind>>,
}

impl Case {
    fn new(w: &Value) -> Case {
        let af = io::framework_from_json(&w["framework"]).unwrap();
        let profile = io::profile_from_json(&af, &w["profile"]).unwrap();
        for b in profile.ballots() {
            assert!(af.is_complete(b).unwrap(), "fixture ballots are complete labelings");
        }
        let partition = IssuePartition::compute(&af).unwrap();
        let classes = w["classes"]
            .as_array()
            .map(|cs| cs.iter().map(|c| c.as_str().unwrap().parse().unwrap()).collect());
        Case { af, profile, partition, details: w["details"].clone(), classes }
    }

    fn labeling(&self, key: &str) -> Labeling {
        io::labeling_from_json(&self.af, &self.details[key]).unwrap()
    }

    fn parsed<T: std::str::FromStr>(&self, key: &str) -> T
    where
        T::Err: std::fmt::Debug,
    {
        self.details[key].as_str().unwrap().parse().unwrap()
    }

    fn measures(&self) -> Measures<'_> {
        Measures::new(Some(&self.partition))
    }
}

#[test]
fn pareto_counterexamples_hold() {
    let fixtures = load("pareto_counterexamples");
    assert_eq!(fixtures.len(), 8);
    for (name, w) in &fixtures {
        let case = Case::new(w);
        let op: OperatorKind = case.parsed("operator");
        let class: MeasureKind = case.parsed("class");
        let outcome = aggregate(&case.af, &case.profile, op).unwrap();
        assert_eq!(outcome, case.labeling("outcome"), "{name}");
        let cands = candidate_set(&case.af, case.profile.ballots(), CandidateSetKind::for_operator(op)).unwrap();
        let dominator = case.labeling("dominated_by");
        assert!(cands.contains(&outcome) && cands.contains(&dominator), "{name}");
        let prefs = PreferenceProfile::homogeneous(&case.profile, class);
        assert!(pareto_dominates(&dominator, &outcome, &prefs, &case.measures()).unwrap(), "{name}");
        assert!(!is_pareto_optimal(&outcome, &cands, &prefs, &case.measures()).unwrap().is_optimal(), "{name}");
    }
}

#[test]
fn strategic_lies_hold() {
    let fixtures = load("strategic_lies");
    assert_eq!(fixtures.len(), 22);
    for (name, w) in &fixtures {
        let case = Case::new(w);
        let op: OperatorKind = case.parsed("operator");
        let class: MeasureKind = case.parsed("class");
        let liar = case.details["liar"].as_str().unwrap();
        let prefs = PreferenceProfile::homogeneous(&case.profile, class);
        let lies = find_strategic_lies(&case.af, &case.profile, op, &prefs, liar, SemanticsKind::Complete, &case.measures()).unwrap();
        let lie = case.labeling("lie");
        let report = lies.iter().find(|r| r.lie == lie).unwrap_or_else(|| panic!("{name}: lie not found"));
        assert_eq!(report.honest_outcome, case.labeling("honest_outcome"), "{name}");
        assert_eq!(report.lie_outcome, case.labeling("lie_outcome"), "{name}");
        let classification = serde_json::to_value(report.classification).unwrap();
        assert_eq!(classification, case.details["classification"], "{name}");
        if name.ends_with("malicious-lie") {
            assert_eq!(classification, "MALICIOUS", "{name}");
        }
    }
}

#[test]
fn carry_over_counterexamples_hold() {
    let fixtures = load("carry_over_counterexamples");
    assert_eq!(fixtures.len(), 16);
    for (name, w) in &fixtures {
        let case = Case::new(w);
        let from: MeasureKind = case.parsed("from");
        let to: MeasureKind = case.parsed("to");
        let l = case.labeling("optimal_under_from");
        let x = case.labeling("dominator_under_to");
        // Both labelings come from the compatible admissible domain, so these
        // refute the carry-over on the candidate set {l, x}.
        let cands = candidate_set(&case.af, case.profile.ballots(), CandidateSetKind::AdmCompat).unwrap();
        assert!(cands.contains(&l) && cands.contains(&x), "{name}");
        assert!(case.partition.is_uniform_on(&l) && case.partition.is_uniform_on(&x), "{name}");
        let pair = [l, x];
        let under = |class| {
            let prefs = PreferenceProfile::homogeneous(&case.profile, class);
            is_pareto_optimal(&l, &pair, &prefs, &case.measures()).unwrap()
        };
        assert!(under(from).is_optimal(), "{name}");
        assert_eq!(under(to), ParetoVerdict::Dominated(x), "{name}");
    }
}

#[test]
fn mixed_distance_counterexample_holds() {
    let fixtures = load("heterogeneous_counterexamples");
    let w = &fixtures["heterogeneous/mixed-distance-breaks-optimality"];
    let case = Case::new(w);
    let classes = case.classes.clone().unwrap();
    assert!(classes.contains(&MeasureKind::Hd) && classes.contains(&MeasureKind::Iwd));
    let l = case.labeling("labeling");
    let x = case.labeling("dominated_by");
    let pair = [l, x];
    for class in [MeasureKind::Hd, MeasureKind::Iwd] {
        let prefs = PreferenceProfile::homogeneous(&case.profile, class);
        assert!(is_pareto_optimal(&l, &pair, &prefs, &case.measures()).unwrap().is_optimal());
    }
    let mixed = PreferenceProfile::heterogeneous(&case.profile, &classes).unwrap();
    assert_eq!(is_pareto_optimal(&l, &pair, &mixed, &case.measures()).unwrap(), ParetoVerdict::Dominated(x));
}

#[test]
fn fixtures_are_the_default_suite_witnesses() {
    let report = verify_theorem_suite(&SuiteConfig::default()).unwrap();
    let mut stored = BTreeMap::new();
    for name in ["pareto_counterexamples", "strategic_lies", "carry_over_counterexamples", "heterogeneous_counterexamples"] {
        stored.extend(load(name));
    }
    for (name, w) in &stored {
        let check = report.check(name).unwrap_or_else(|| panic!("no check named {name}"));
        let witness = serde_json::to_value(check.witness.as_ref().expect("witness")).unwrap();
        assert_eq!(&witness, w, "{name}");
    }
}
