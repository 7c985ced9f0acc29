use std::fs;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use argagg::analysis::{
    candidate_set, find_strategic_lies, is_pareto_optimal, verify_theorem_suite, CandidateSetKind, Expectation,
    ParetoVerdict, SuiteConfig, SuiteReport,
};
use argagg::config::{ClassSpec, RunConfig};
use argagg::io;
use argagg::metrics::{disagreement, distance};
use argagg::{
    aggregate_gated, ArgumentationFramework, Error, IssuePartition, Labeling, MeasureKind, OperatorKind, Profile,
    SemanticsKind,
};
use clap::Parser;
use serde_json::{json, Value};

mod args;

use args::{Cli, Command, FrameworkArg, GenFormat, ProfileArg, VerifyArgs};

/// An error as reported on stderr.
struct Failure {
    kind: &'static str,
    message: String,
    location: Option<Value>,
}

impl Failure {
    fn at(path: &Path, e: Error) -> Failure {
        let location = e.line().map(|line| json!({ "file": path.display().to_string(), "line": line }));
        Failure { kind: e.kind(), message: e.to_string(), location }
    }

    fn envelope(&self) -> Value {
        let mut v = json!({ "kind": self.kind, "message": self.message });
        if let Some(loc) = &self.location {
            v["location"] = loc.clone();
        }
        v
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure { kind: e.kind(), message: e.to_string(), location: None }
    }
}

/// Command output and whether the run counts as a success.
struct Output {
    text: String,
    success: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, success: true }
    }
}

type CliResult<T> = Result<T, Failure>;

fn read_source(path: &Path) -> CliResult<String> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure {
        kind: "io-error",
        message: format!("cannot read {}: {e}", path.display()),
        location: Some(json!({ "file": path.display().to_string() })),
    })?;
    Ok(text)
}

fn load_framework(arg: &FrameworkArg, cfg: &RunConfig) -> CliResult<ArgumentationFramework> {
    let text = read_source(&arg.framework)?;
    let af = if arg.framework.extension().is_some_and(|e| e == "json") {
        io::parse_json(&text).and_then(|v| io::framework_from_json(&v))
    } else {
        io::parse_framework(&text)
    }
    .map_err(|e| Failure::at(&arg.framework, e))?;
    cfg.check_size(&af)?;
    Ok(af)
}

fn load_profile(af: &ArgumentationFramework, arg: &ProfileArg) -> CliResult<(Profile, SemanticsKind)> {
    let gate: SemanticsKind = arg.ballots.parse()?;
    let text = read_source(&arg.profile)?;
    let profile = io::parse_profile(af, &text).map_err(|e| Failure::at(&arg.profile, e))?;
    Ok((profile, gate))
}

/// Inline JSON, or `@path` to read it from a file.
fn load_labeling(af: &ArgumentationFramework, source: &str) -> CliResult<Labeling> {
    match source.strip_prefix('@') {
        Some(path) => {
            let path = Path::new(path);
            io::parse_labeling(af, &read_source(path)?).map_err(|e| Failure::at(path, e))
        }
        None => Ok(io::parse_labeling(af, source)?),
    }
}

fn partition_for(af: &ArgumentationFramework, classes: &[MeasureKind]) -> CliResult<Option<IssuePartition>> {
    if classes.iter().any(|c| c.granularity() == argagg::metrics::Granularity::Issue) {
        Ok(Some(IssuePartition::compute(af)?))
    } else {
        Ok(None)
    }
}

fn number(x: f64) -> Value {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        json!(x as i64)
    } else {
        json!(x)
    }
}

fn render(value: &Value) -> String {
    serde_json::to_string(value).expect("serializable") + "\n"
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().enumerate().map(|(c, s)| format!("{s:<w$}", w = widths[c])).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn run(cli: &Cli) -> CliResult<Output> {
    let mut cfg = RunConfig { max_arguments: cli.arg_cap, ..RunConfig::default() };
    cfg.validate()?;
    match &cli.command {
        Command::Labelings { framework, semantics } => {
            let af = load_framework(framework, &cfg)?;
            let kind: SemanticsKind = semantics.parse()?;
            let labelings = af.enumerate_labelings_capped(kind, cfg.max_arguments)?;
            if cli.pretty {
                let mut text = format!("{} {} labeling(s)\n", labelings.len(), kind);
                for l in &labelings {
                    text.push_str(&io::labeling_to_text(&af, l));
                    text.push('\n');
                }
                return Ok(Output::ok(text));
            }
            let list: Vec<Value> = labelings.iter().map(|l| io::labeling_to_json(&af, l)).collect();
            Ok(Output::ok(render(&json!({ "semantics": kind, "count": list.len(), "labelings": list }))))
        }
        Command::Aggregate { framework, profile, op } => {
            let af = load_framework(framework, &cfg)?;
            let (profile, gate) = load_profile(&af, profile)?;
            let op: OperatorKind = op.parse()?;
            let outcome = aggregate_gated(&af, &profile, op, gate)?;
            if cli.pretty {
                return Ok(Output::ok(format!("{}: {}\n", op, io::labeling_to_text(&af, &outcome))));
            }
            Ok(Output::ok(render(&json!({ "operator": op, "outcome": io::labeling_to_json(&af, &outcome) }))))
        }
        Command::Issues { framework } => {
            let af = load_framework(framework, &cfg)?;
            let partition = IssuePartition::compute(&af)?;
            if cli.pretty {
                let mut rows = vec![vec!["issue".to_string(), "members".to_string()]];
                for (i, view) in partition.describe(&af).iter().enumerate() {
                    let members: Vec<String> = view
                        .members
                        .iter()
                        .map(|m| format!("{}{}", m.argument, serde_json::to_value(m.sign).expect("sign").as_str().unwrap_or("")))
                        .collect();
                    rows.push(vec![(i + 1).to_string(), members.join(" ")]);
                }
                return Ok(Output::ok(table(&rows)));
            }
            Ok(Output::ok(render(&json!({ "issues": io::partition_to_json(&af, &partition) }))))
        }
        Command::Distance { framework, measure, l1, l2, alpha } => {
            cfg.iuo_alpha = *alpha;
            cfg.validate()?;
            let af = load_framework(framework, &cfg)?;
            let kind: MeasureKind = measure.parse()?;
            let (l1, l2) = (load_labeling(&af, l1)?, load_labeling(&af, l2)?);
            let partition = partition_for(&af, &[kind])?;
            let set = disagreement(kind, &l1, &l2, partition.as_ref())?;
            let d = distance(kind, &l1, &l2, partition.as_ref(), cfg.iuo_alpha)?;
            let rendered = io::disagreement_to_json(&af, partition.as_ref(), &set);
            if cli.pretty {
                return Ok(Output::ok(format!("{} distance {}\ndisagreement {}\n", kind.label(), number(d), rendered)));
            }
            Ok(Output::ok(render(&json!({ "measure": kind, "distance": number(d), "disagreement": rendered }))))
        }
        Command::Prefer { framework, top, class, l1, l2, alpha } => {
            cfg.iuo_alpha = *alpha;
            cfg.validate()?;
            let af = load_framework(framework, &cfg)?;
            let class: MeasureKind = class.parse()?;
            let top = load_labeling(&af, top)?;
            let (l1, l2) = (load_labeling(&af, l1)?, load_labeling(&af, l2)?);
            let partition = partition_for(&af, &[class])?;
            let measures = cfg.measures(partition.as_ref())?;
            let agent = argagg::AgentPreference { agent: "agent".into(), top, class };
            let relation = measures.relate(&agent, &l1, &l2)?;
            let relation = serde_json::to_value(relation).expect("relation");
            if cli.pretty {
                return Ok(Output::ok(format!("{} relation {}\n", class.label(), relation.as_str().unwrap_or(""))));
            }
            Ok(Output::ok(render(&json!({ "class": class, "relation": relation }))))
        }
        Command::Pareto { framework, profile, op, class, candidates, labeling, alpha } => {
            cfg.iuo_alpha = *alpha;
            cfg.operator = op.parse()?;
            cfg.classes = Some(ClassSpec::parse(class)?);
            cfg.candidate_set = candidates.as_deref().map(str::parse::<CandidateSetKind>).transpose()?;
            cfg.validate()?;
            let af = load_framework(framework, &cfg)?;
            let (profile, gate) = load_profile(&af, profile)?;
            cfg.ballot_semantics = gate;
            let prefs = cfg.preferences(&profile)?;
            let classes: Vec<MeasureKind> = prefs.agents().iter().map(|a| a.class).collect();
            let partition = partition_for(&af, &classes)?;
            let measures = cfg.measures(partition.as_ref())?;
            let target = match labeling {
                Some(source) => load_labeling(&af, source)?,
                None => aggregate_gated(&af, &profile, cfg.operator, gate)?,
            };
            let kind = cfg.candidate_kind();
            let cands = candidate_set(&af, profile.ballots(), kind)?;
            let verdict = is_pareto_optimal(&target, &cands, &prefs, &measures)?;
            let dominator = match verdict {
                ParetoVerdict::Optimal => None,
                ParetoVerdict::Dominated(d) => Some(d),
            };
            if cli.pretty {
                let mut text = format!("labeling   {}\ncandidates {} ({})\n", io::labeling_to_text(&af, &target), cands.len(), kind);
                match dominator {
                    None => text.push_str("verdict    Pareto optimal\n"),
                    Some(d) => text.push_str(&format!("verdict    dominated by {}\n", io::labeling_to_text(&af, &d))),
                }
                return Ok(Output::ok(text));
            }
            Ok(Output::ok(render(&json!({
                "labeling": io::labeling_to_json(&af, &target),
                "candidate_set": kind,
                "candidates": cands.len(),
                "in_candidate_set": cands.contains(&target),
                "optimal": dominator.is_none(),
                "dominated_by": dominator.map(|d| io::labeling_to_json(&af, &d)),
            }))))
        }
        Command::Manipulate { framework, profile, op, class, liar, lie_space, alpha } => {
            cfg.iuo_alpha = *alpha;
            cfg.operator = op.parse()?;
            cfg.classes = Some(ClassSpec::parse(class)?);
            cfg.lie_space = lie_space.parse()?;
            cfg.validate()?;
            let af = load_framework(framework, &cfg)?;
            let (profile, gate) = load_profile(&af, profile)?;
            profile.ballots().iter().try_for_each(|b| {
                if af.satisfies(b, gate)? {
                    Ok(())
                } else {
                    Err(Error::Ballot { agent: "?".into(), semantics: gate.to_string() })
                }
            })?;
            let prefs = cfg.preferences(&profile)?;
            let classes: Vec<MeasureKind> = prefs.agents().iter().map(|a| a.class).collect();
            let partition = partition_for(&af, &classes)?;
            let measures = cfg.measures(partition.as_ref())?;
            let lies = find_strategic_lies(&af, &profile, cfg.operator, &prefs, liar, cfg.lie_space, &measures)?;
            if cli.pretty {
                let mut rows = vec![vec!["lie".to_string(), "outcome".to_string(), "class".to_string()]];
                for r in &lies {
                    rows.push(vec![
                        io::labeling_to_text(&af, &r.lie),
                        io::labeling_to_text(&af, &r.lie_outcome),
                        serde_json::to_value(r.classification).expect("class").as_str().unwrap_or("").to_string(),
                    ]);
                }
                return Ok(Output::ok(format!("{} strategic lie(s) for agent {liar}\n{}", lies.len(), table(&rows))));
            }
            let list: Vec<Value> = lies.iter().map(|r| io::lie_report_to_json(&af, r)).collect();
            Ok(Output::ok(render(&json!({
                "operator": cfg.operator,
                "liar": liar,
                "lie_space": cfg.lie_space,
                "strategy_proof_for_agent": list.is_empty(),
                "lies": list,
            }))))
        }
        Command::Verify(args) => verify(cli, args),
        Command::Gen { n_args, edge_prob, seed, format } => {
            let af = argagg::analysis::random_framework(*seed, *n_args, *edge_prob)?;
            let text = match format {
                GenFormat::Json if !cli.pretty => render(&io::framework_to_json(&af)),
                GenFormat::Json | GenFormat::Apx => io::serialize_framework(&af),
                GenFormat::Dot => io::framework_to_dot(&af, None),
            };
            Ok(Output::ok(text))
        }
    }
}

fn verify(cli: &Cli, args: &VerifyArgs) -> CliResult<Output> {
    let cfg = SuiteConfig {
        seed: args.seed,
        max_exhaustive_args: args.max_args,
        random_frameworks: args.random,
        random_sizes: args.sizes.clone(),
        edge_probability: args.edge_prob,
        agent_counts: args.agents.clone(),
        ballots: args.ballots.parse()?,
        alpha: args.alpha,
        pinned: !args.no_pinned,
        ..SuiteConfig::default()
    };
    let report = verify_theorem_suite(&cfg)?;
    let json_text = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
    if let Some(path) = &args.output {
        fs::write(path, &json_text).map_err(|e| Failure {
            kind: "io-error",
            message: format!("cannot write {}: {e}", path.display()),
            location: Some(json!({ "file": path.display().to_string() })),
        })?;
    }
    let text = if cli.pretty { pretty_report(&report) } else { json_text };
    Ok(Output { text, success: report.all_passed })
}

fn pretty_report(report: &SuiteReport) -> String {
    let i = &report.instances;
    let mut out = format!(
        "frameworks: {} exhaustive, {} random, {} pinned; profiles: {}{}\n\n",
        i.exhaustive_frameworks,
        i.random_frameworks,
        i.pinned_frameworks,
        i.profiles,
        if report.experimental { " (experimental ballot space)" } else { "" }
    );
    let mut rows = vec![vec!["check".to_string(), "expects".to_string(), "verdict".to_string(), "instances".to_string()]];
    for c in &report.checks {
        let expects = match c.expectation {
            Expectation::ExpectedPass => "pass",
            Expectation::ExpectedCounterexample => "witness",
        };
        let verdict = serde_json::to_value(c.verdict).expect("verdict").as_str().unwrap_or("").to_string();
        rows.push(vec![c.name.clone(), expects.to_string(), verdict, c.instances_tested.to_string()]);
    }
    out.push_str(&table(&rows));
    for m in &report.matrices {
        out.push_str(&format!("\n{} ({})\n", m.name, if m.agrees { "agrees" } else { "DISAGREES" }));
        let mut rows = vec![std::iter::once(String::new()).chain(m.columns.iter().cloned()).collect::<Vec<_>>()];
        for (r, name) in m.rows.iter().enumerate() {
            let mut row = vec![name.clone()];
            for c in 0..m.columns.len() {
                let (e, g) = (&m.expected[r][c], &m.computed[r][c]);
                row.push(if e == g { g.clone() } else { format!("{g} (expected {e})") });
            }
            rows.push(row);
        }
        out.push_str(&table(&rows));
    }
    out.push_str(&format!("\n{}\n", if report.all_passed { "all checks passed" } else { "SOME CHECKS FAILED" }));
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            print!("{}", output.text);
            if output.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            eprintln!("{}", failure.envelope());
            ExitCode::from(2)
        }
    }
}
