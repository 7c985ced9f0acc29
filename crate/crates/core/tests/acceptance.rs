//! Acceptance run: one line per criterion, nonzero exit on any failure.

mod common;

use std::time::Instant;

use argagg::analysis::{
    candidate_set, canonical_frameworks, check_strategy_proof, find_strategic_lies, is_pareto_optimal, multisets,
    pareto_dominates, random_framework, CandidateSetKind, Expectation, LieClass, SuiteConfig, Verdict,
};
use argagg::io;
use argagg::lattice::{down_admissible, up_complete};
use argagg::metrics::distance;
use argagg::{
    aggregate, ArgumentationFramework, IssuePartition, Labeling, MeasureKind, Measures, OperatorKind,
    PreferenceProfile, Profile, SemanticsKind,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    summary: String,
}

fn outcome(passed: bool, summary: String) -> Outcome {
    Outcome { passed, summary }
}

fn framework_from_mask(n: usize, mask: u64) -> ArgumentationFramework {
    let names = (1..=n).map(|i| format!("a{i}")).collect();
    ArgumentationFramework::from_indices(names, (0..n * n).filter(|b| mask >> b & 1 == 1).map(|b| (b / n, b % n))).unwrap()
}

/// Every framework on at most `max` arguments, as `(size, attack mask)`.
fn raw_space(max: usize) -> Vec<(usize, u64)> {
    (0..=max).flat_map(|n| (0..1u64 << (n * n)).map(move |m| (n, m))).collect()
}

fn murder_case() -> Outcome {
    let af = io::parse_framework("arg(A). arg(B). arg(C).\natt(B,A). att(B,C). att(C,B).\n").unwrap();
    let mut found = af.complete_labelings().unwrap();
    let mut expected = vec![
        af.labeling(["A", "C"], ["B"]).unwrap(),
        af.labeling(["B"], ["A", "C"]).unwrap(),
        af.all_undec(),
    ];
    found.sort();
    expected.sort();
    let ok = found == expected;
    outcome(ok, format!("murder case has {} complete labelings, expected set matched: {ok}", found.len()))
}

fn chain_graph() -> Outcome {
    let af = ArgumentationFramework::new(
        ["A1", "A2", "A3", "A4", "A5"],
        [("A2", "A1"), ("A4", "A1"), ("A3", "A2"), ("A5", "A4")],
    )
    .unwrap();
    let complete = af.complete_labelings().unwrap();
    let unique = complete == vec![af.labeling(["A1", "A3", "A5"], ["A2", "A4"]).unwrap()];
    let listed = [
        af.labeling(["A1", "A3", "A5"], ["A2", "A4"]).unwrap(),
        af.labeling(["A3", "A5"], ["A2", "A4"]).unwrap(),
        af.labeling(["A3"], ["A2"]).unwrap(),
        af.labeling(["A5"], []).unwrap(),
        af.all_undec(),
    ];
    let accepted = listed.iter().filter(|l| af.is_admissible(l).unwrap()).count();
    outcome(
        unique && accepted == 5,
        format!("{} complete labeling(s), unique match: {unique}; {accepted}/5 listed labelings admissible", complete.len()),
    )
}

fn metric_values() -> Outcome {
    let mut mismatches: Vec<String> = Vec::new();
    fn check(mismatches: &mut Vec<String>, what: &str, got: f64, want: f64) {
        if got != want {
            mismatches.push(format!("{what}: {got} != {want}"));
        }
    }

    // Four decided complete labelings on A⇄B, C⇄D, D⇀E.
    let af = ArgumentationFramework::new(["A", "B", "C", "D", "E"], [("A", "B"), ("B", "A"), ("C", "D"), ("D", "C"), ("D", "E")]).unwrap();
    let l1 = af.labeling(["A", "C", "E"], ["B", "D"]).unwrap();
    let l2 = af.labeling(["B", "C", "E"], ["A", "D"]).unwrap();
    let l3 = af.labeling(["A", "D"], ["B", "C", "E"]).unwrap();
    let l4 = af.labeling(["B", "D"], ["A", "C", "E"]).unwrap();
    for (name, l, want) in [("hamming L1,L2", l2, 2.0), ("hamming L1,L3", l3, 3.0), ("hamming L1,L4", l4, 5.0)] {
        check(&mut mismatches, name, distance(MeasureKind::Hd, &l1, &l, None, 2.0).unwrap(), want);
    }

    // A 4-cycle A→B→C→D→A and two mutual attacks E⇄F, G⇄H: issues {A,B,C,D}, {E,F}, {G,H}.
    let af = ArgumentationFramework::new(
        ["A", "B", "C", "D", "E", "F", "G", "H"],
        [("A", "B"), ("B", "C"), ("C", "D"), ("D", "A"), ("E", "F"), ("F", "E"), ("G", "H"), ("H", "G")],
    )
    .unwrap();
    let p = IssuePartition::compute(&af).unwrap();
    let stated = IssuePartition::from_named_blocks(&af, [vec!["A", "B", "C", "D"], vec!["E", "F"], vec!["G", "H"]]).unwrap();
    if p.blocks().iter().map(|b| b.members).collect::<Vec<_>>() != stated.blocks().iter().map(|b| b.members).collect::<Vec<_>>() {
        mismatches.push("computed issues differ from {A,B,C,D},{E,F},{G,H}".into());
    }
    let l1 = af.labeling(["A", "C", "E", "G"], ["B", "D", "F", "H"]).unwrap();
    let l2 = af.labeling(["A", "C", "F", "H"], ["B", "D", "E", "G"]).unwrap();
    let l3 = af.labeling(["B", "D", "E", "G"], ["A", "C", "F", "H"]).unwrap();
    check(&mut mismatches, "issue-wise L1,L2", distance(MeasureKind::Iwd, &l1, &l2, Some(&stated), 2.0).unwrap(), 2.0);
    check(&mut mismatches, "issue-wise L1,L3", distance(MeasureKind::Iwd, &l1, &l3, Some(&stated), 2.0).unwrap(), 1.0);
    check(&mut mismatches, "hamming L1,L2", distance(MeasureKind::Hd, &l1, &l2, None, 2.0).unwrap(), 4.0);
    check(&mut mismatches, "hamming L1,L3", distance(MeasureKind::Hd, &l1, &l3, None, 2.0).unwrap(), 4.0);

    // A⇄B: opposite positions against abstention.
    let af = ArgumentationFramework::new(["A", "B"], [("A", "B"), ("B", "A")]).unwrap();
    let p = IssuePartition::compute(&af).unwrap();
    let l1 = af.labeling(["A"], ["B"]).unwrap();
    let l2 = af.labeling(["B"], ["A"]).unwrap();
    let l3 = af.all_undec();
    check(&mut mismatches, "iuo hamming L1,L2", distance(MeasureKind::IuoHd, &l1, &l2, None, 2.0).unwrap(), 4.0);
    check(&mut mismatches, "iuo hamming L1,L3", distance(MeasureKind::IuoHd, &l1, &l3, None, 2.0).unwrap(), 2.0);
    check(&mut mismatches, "iuo issue-wise L1,L2", distance(MeasureKind::IuoIwd, &l1, &l2, Some(&p), 2.0).unwrap(), 2.0);
    check(&mut mismatches, "iuo issue-wise L1,L3", distance(MeasureKind::IuoIwd, &l1, &l3, Some(&p), 2.0).unwrap(), 1.0);
    let sets = |l: &Labeling| io::disagreement_to_json(&af, Some(&p), &argagg::metrics::disagreement(MeasureKind::IuoIws, &l1, l, Some(&p)).unwrap());
    if sets(&l2) != serde_json::json!({ "io": [["A", "B"]], "du": [] }) || sets(&l3) != serde_json::json!({ "io": [], "du": [["A", "B"]] }) {
        mismatches.push(format!("iuo issue-wise sets {} / {}", sets(&l2), sets(&l3)));
    }

    let ok = mismatches.is_empty();
    outcome(ok, if ok { "13 listed distances, the issue partition and the IUO issue-wise sets reproduced exactly".into() } else { mismatches.join("; ") })
}

fn lattice_oracle() -> Outcome {
    let space = raw_space(4);
    let results: Vec<(u64, u64, u64)> = space
        .par_iter()
        .map(|&(n, mask)| {
            let af = framework_from_mask(n, mask);
            let adm = common::admissible(&af);
            let comp = common::complete(&af);
            let (mut checked, mut down_bad, mut up_bad) = (0, 0, 0);
            for l in common::labelings(n) {
                checked += 1;
                if down_admissible(&af, &l).unwrap() != common::greatest_admissible_below(&af, &adm, &l) {
                    down_bad += 1;
                }
                if adm.contains(&l) && Some(up_complete(&af, &l).unwrap()) != common::least_complete_above(&comp, &l) {
                    up_bad += 1;
                }
            }
            (checked, down_bad, up_bad)
        })
        .collect();
    let checked: u64 = results.iter().map(|r| r.0).sum();
    let down_bad: u64 = results.iter().map(|r| r.1).sum();
    let up_bad: u64 = results.iter().map(|r| r.2).sum();
    outcome(
        down_bad == 0 && up_bad == 0,
        format!(
            "{} frameworks (all on <= 4 arguments), {checked} labelings; down-admissible mismatches {down_bad}, up-complete mismatches {up_bad}",
            space.len()
        ),
    )
}

fn theorem_suite() -> Outcome {
    let cfg = SuiteConfig::default();
    let report = argagg::analysis::verify_theorem_suite(&cfg).unwrap();
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("suite_report.json");
    std::fs::write(&path, serde_json::to_string_pretty(&report).unwrap()).unwrap();
    let expected_pass = report.checks.iter().filter(|c| c.expectation == Expectation::ExpectedPass).count();
    let searches = report.checks.len() - expected_pass;
    let failures: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
    let witnesses_found = report
        .checks
        .iter()
        .filter(|c| c.expectation == Expectation::ExpectedCounterexample && c.verdict == Verdict::Pass && c.witness.is_some())
        .count();
    let matrices: Vec<String> =
        report.matrices.iter().map(|m| format!("{} {}", m.name, if m.agrees { "agrees" } else { "differs" })).collect();
    let enough = report.instances.random_frameworks >= 1000 && cfg.max_exhaustive_args == 4;
    let ok = report.all_passed && failures.is_empty() && enough && report.matrices.iter().all(|m| m.agrees);
    let mut summary = format!(
        "{} exhaustive + {} random + {} pinned frameworks, {} profiles; {}/{} expected-pass checks hold, {}/{} searches found witnesses; {}; report at {}",
        report.instances.exhaustive_frameworks,
        report.instances.random_frameworks,
        report.instances.pinned_frameworks,
        report.instances.profiles,
        expected_pass - failures.iter().filter(|f| report.check(f).unwrap().expectation == Expectation::ExpectedPass).count(),
        expected_pass,
        witnesses_found,
        searches,
        matrices.join(", "),
        path.display()
    );
    if !failures.is_empty() {
        summary.push_str(&format!("; failing: {}", failures.join(", ")));
    }
    outcome(ok, summary)
}

fn strategy_proof_iuo_sets() -> Outcome {
    let space = raw_space(4);
    let lies: Vec<String> = space
        .par_iter()
        .filter_map(|&(n, mask)| {
            let af = framework_from_mask(n, mask);
            let m = Measures::new(None);
            check_strategy_proof(&af, OperatorKind::Skeptical, MeasureKind::IuoHs, 2, SemanticsKind::Complete, &m)
                .unwrap()
                .map(|r| format!("{af:?}: {} lies {:?}", r.agent, r.lie))
        })
        .collect();
    outcome(
        lies.is_empty(),
        format!("{} frameworks (all on <= 4 arguments), 2 agents, IUO_HS: {} with a strategic lie{}", space.len(), lies.len(), lies.first().map(|l| format!(", e.g. {l}")).unwrap_or_default()),
    )
}

const LIE_CLASSES: [MeasureKind; 6] =
    [MeasureKind::Hs, MeasureKind::Hd, MeasureKind::Iws, MeasureKind::Iwd, MeasureKind::IuoHd, MeasureKind::IuoIwd];

/// `[benevolent, malicious, neutral]` skeptical lies per class over all profiles of `k` agents.
fn skeptical_lie_counts(af: &ArgumentationFramework, k: usize) -> [[u64; 3]; 6] {
    let p = IssuePartition::compute(af).unwrap();
    let m = Measures::new(Some(&p));
    let comp = af.complete_labelings().unwrap();
    let mut counts = [[0u64; 3]; 6];
    for pick in multisets(comp.len(), k) {
        let profile = Profile::anonymous(pick.iter().map(|&i| comp[i])).unwrap();
        for (c, &class) in LIE_CLASSES.iter().enumerate() {
            let prefs = PreferenceProfile::homogeneous(&profile, class);
            for agent in profile.agents() {
                for r in find_strategic_lies(af, &profile, OperatorKind::Skeptical, &prefs, agent, SemanticsKind::Complete, &m).unwrap() {
                    let slot = match r.classification {
                        LieClass::Benevolent => 0,
                        LieClass::Malicious => 1,
                        LieClass::Neutral => 2,
                    };
                    counts[c][slot] += 1;
                }
            }
        }
    }
    counts
}

fn add(a: [[u64; 3]; 6], b: [[u64; 3]; 6]) -> [[u64; 3]; 6] {
    let mut out = a;
    for c in 0..6 {
        for s in 0..3 {
            out[c][s] += b[c][s];
        }
    }
    out
}

fn benevolence() -> Outcome {
    let two = raw_space(4)
        .par_iter()
        .map(|&(n, mask)| skeptical_lie_counts(&framework_from_mask(n, mask), 2))
        .reduce(|| [[0; 3]; 6], add);
    let canonical: Vec<ArgumentationFramework> = (0..=4).flat_map(|n| canonical_frameworks(n).map(|(_, af)| af)).collect();
    let three = canonical.par_iter().map(|af| skeptical_lie_counts(af, 3)).reduce(|| [[0; 3]; 6], add);
    let total = add(two, three);

    // Larger frameworks from the random and pinned phases of the suite.
    let report = argagg::analysis::verify_theorem_suite(&SuiteConfig::default()).unwrap();
    let suite_ok = LIE_CLASSES.iter().all(|c| {
        report.check(&format!("strategy/skeptical/{}/lies-benevolent", c.label())).is_some_and(|r| r.verdict == Verdict::Pass)
    });
    let bad: u64 = total.iter().map(|c| c[1] + c[2]).sum();
    let per_class: Vec<String> = LIE_CLASSES
        .iter()
        .zip(total)
        .map(|(c, [b, m, n])| format!("{} {b}/{m}/{n}", c.label()))
        .collect();
    outcome(
        bad == 0 && suite_ok,
        format!(
            "skeptical lies benevolent/malicious/neutral on <= 4 arguments (2 agents all frameworks, 3 agents up to renaming): {}; suite random and pinned lies all benevolent: {suite_ok}",
            per_class.join(", ")
        ),
    )
}

fn heterogeneous() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut batches = 0;
    let mut assignments = 0u64;
    let mut violations = Vec::new();
    for batch in 0..24u64 {
        let n = [5, 6, 7][batch as usize % 3];
        let af = random_framework(1000 + batch, n, 0.3).unwrap();
        let p = IssuePartition::compute(&af).unwrap();
        let m = Measures::new(Some(&p));
        let comp = af.complete_labelings().unwrap();
        let k = rng.gen_range(2..=3);
        let profile = Profile::anonymous((0..k).map(|_| *comp.choose(&mut rng).unwrap())).unwrap();
        let outcome = aggregate(&af, &profile, OperatorKind::Skeptical).unwrap();
        let cands = candidate_set(&af, profile.ballots(), CandidateSetKind::AdmLeq).unwrap();
        let mut in_batch = 0;
        for _ in 0..200 {
            let classes: Vec<MeasureKind> = (0..k).map(|_| *MeasureKind::ALL.choose(&mut rng).unwrap()).collect();
            let prefs = PreferenceProfile::heterogeneous(&profile, &classes).unwrap();
            if !is_pareto_optimal(&outcome, &cands, &prefs, &m).unwrap().is_optimal() {
                violations.push(format!("{af:?} {classes:?}"));
            }
            in_batch += 1;
        }
        assignments += in_batch;
        batches += 1;
    }

    let witness = mixed_witness();
    outcome(
        violations.is_empty() && witness.is_some(),
        format!(
            "{batches} batches of 200 random class assignments ({assignments} total), {} skeptical outcomes dominated; mixed HD/IWD witness: {}",
            violations.len(),
            witness.unwrap_or_else(|| "not found".into())
        ),
    )
}

/// A pair `l`, `x` of issue-uniform labelings where `x` dominates `l` for an
/// HD agent paired with an IWD agent, but under neither class alone.
fn mixed_witness() -> Option<String> {
    for n in 1..=3 {
        for (_, af) in canonical_frameworks(n) {
            let p = IssuePartition::compute(&af).unwrap();
            let m = Measures::new(Some(&p));
            let comp = af.complete_labelings().unwrap();
            let uniform: Vec<Labeling> = common::labelings(n).into_iter().filter(|l| p.is_uniform_on(l)).collect();
            for pick in multisets(comp.len(), 2) {
                let profile = Profile::anonymous(pick.iter().map(|&i| comp[i])).unwrap();
                let hd = PreferenceProfile::homogeneous(&profile, MeasureKind::Hd);
                let iwd = PreferenceProfile::homogeneous(&profile, MeasureKind::Iwd);
                for classes in [[MeasureKind::Hd, MeasureKind::Iwd], [MeasureKind::Iwd, MeasureKind::Hd]] {
                    let mixed = PreferenceProfile::heterogeneous(&profile, &classes).unwrap();
                    for l in &uniform {
                        for x in &uniform {
                            if pareto_dominates(x, l, &mixed, &m).unwrap()
                                && !pareto_dominates(x, l, &hd, &m).unwrap()
                                && !pareto_dominates(x, l, &iwd, &m).unwrap()
                            {
                                return Some(format!(
                                    "{af:?}, ballots {} / {}, classes {}/{}, {} dominated by {}",
                                    io::labeling_to_text(&af, &profile.ballots()[0]),
                                    io::labeling_to_text(&af, &profile.ballots()[1]),
                                    classes[0].label(),
                                    classes[1].label(),
                                    io::labeling_to_text(&af, l),
                                    io::labeling_to_text(&af, x)
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

fn metric_axioms() -> Outcome {
    let space = raw_space(3);
    let kinds = [MeasureKind::Hd, MeasureKind::Iwd, MeasureKind::IuoHd, MeasureKind::IuoIwd];
    let results: Vec<(u64, Vec<String>)> = space
        .par_iter()
        .map(|&(n, mask)| {
            let af = framework_from_mask(n, mask);
            let p = IssuePartition::compute(&af).unwrap();
            let all = common::labelings(n);
            let mut triples = 0;
            let mut bad = Vec::new();
            for kind in kinds {
                let d: Vec<Vec<f64>> =
                    all.iter().map(|a| all.iter().map(|b| distance(kind, a, b, Some(&p), 2.0).unwrap()).collect()).collect();
                for i in 0..all.len() {
                    for j in 0..all.len() {
                        if (d[i][j] == 0.0) != (i == j) || d[i][j] != d[j][i] {
                            bad.push(format!("{kind} {af:?} {:?} {:?}", all[i], all[j]));
                        }
                        for k in 0..all.len() {
                            triples += 1;
                            if d[i][k] > d[i][j] + d[j][k] {
                                bad.push(format!("{kind} triangle {af:?} {:?} {:?} {:?}", all[i], all[j], all[k]));
                            }
                        }
                    }
                }
            }
            (triples, bad)
        })
        .collect();
    let triples: u64 = results.iter().map(|r| r.0).sum();
    let bad: Vec<&String> = results.iter().flat_map(|r| &r.1).collect();
    outcome(
        bad.is_empty(),
        format!(
            "{} frameworks (all on <= 3 arguments), {triples} labeling triples across HD, IWD, IUO_HD, IUO_IWD: {} violations{}",
            space.len(),
            bad.len(),
            bad.first().map(|b| format!(", e.g. {b}")).unwrap_or_default()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("murder-case labelings", murder_case),
        ("chain-graph labelings", chain_graph),
        ("listed metric values", metric_values),
        ("lattice oracle equivalence", lattice_oracle),
        ("theorem suite and verdict matrices", theorem_suite),
        ("skeptical IUO_HS strategy-proofness", strategy_proof_iuo_sets),
        ("skeptical lies are benevolent", benevolence),
        ("heterogeneous preferences", heterogeneous),
        ("metric axioms", metric_axioms),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        failed += usize::from(!o.passed);
        println!(
            "criterion {} {} {name}: {} ({:.1}s)",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" },
            o.summary,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
