//! Text and JSON formats: apx-style framework files, labelings, profiles and
//! rendered results.

use serde_json::{json, Map, Value};

use crate::aggregation::Profile;
use crate::analysis::LieReport;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::framework::{ArgumentationFramework, Label, Labeling};
use crate::issues::IssuePartition;
use crate::metrics::DisagreementSet;

enum Statement {
    Arg(String),
    Att(String, String),
}

fn parse_ident(s: &str, line: usize) -> Result<String> {
    let s = s.trim();
    let ok = !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '\''));
    if ok {
        Ok(s.to_string())
    } else {
        Err(Error::Parse { line, message: format!("invalid argument identifier `{s}`") })
    }
}

fn parse_statement(s: &str, line: usize) -> Result<Statement> {
    let bad = || Error::Parse { line, message: format!("expected `arg(<id>).` or `att(<id>,<id>).`, found `{s}.`") };
    let open = s.find('(').ok_or_else(bad)?;
    let body = s[open + 1..].trim_end().strip_suffix(')').ok_or_else(bad)?;
    match s[..open].trim() {
        "arg" => Ok(Statement::Arg(parse_ident(body, line)?)),
        "att" => {
            let (a, b) = body.split_once(',').ok_or_else(bad)?;
            Ok(Statement::Att(parse_ident(a, line)?, parse_ident(b, line)?))
        }
        _ => Err(bad()),
    }
}

/// Parses the apx-style format: `arg(a).` and `att(a,b).` statements, any
/// number per line, `#` comments. Repeated statements are idempotent; an
/// attack may mention an argument declared further down the file.
pub fn parse_framework(text: &str) -> Result<ArgumentationFramework> {
    let mut statements = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (body, rest) = content.rsplit_once('.').ok_or_else(|| Error::Parse {
            line,
            message: format!("statement without terminating `.`: `{content}`"),
        })?;
        if !rest.trim().is_empty() {
            return Err(Error::Parse { line, message: format!("statement without terminating `.`: `{}`", rest.trim()) });
        }
        for s in body.split('.') {
            statements.push((line, parse_statement(s.trim(), line)?));
        }
    }
    let mut af = ArgumentationFramework::empty();
    for (line, s) in &statements {
        if let Statement::Arg(name) = s {
            if af.index_of(name).is_none() {
                af.push_argument(name.clone()).map_err(|e| Error::Parse { line: *line, message: e.to_string() })?;
            }
        }
    }
    for (line, s) in &statements {
        if let Statement::Att(a, b) = s {
            let index = |name: &str| {
                af.index_of(name)
                    .ok_or_else(|| Error::Parse { line: *line, message: format!("attack mentions undeclared argument `{name}`") })
            };
            let (a, b) = (index(a)?, index(b)?);
            af.add_attack(a, b);
        }
    }
    Ok(af)
}

/// apx text: one `arg` line per argument, then one `att` line per attack.
pub fn serialize_framework(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for name in af.arguments() {
        out.push_str(&format!("arg({name}).\n"));
    }
    for (a, b) in af.attacks() {
        out.push_str(&format!("att({},{}).\n", af.name(a), af.name(b)));
    }
    out
}

/// Graphviz rendering; labeled arguments are filled when `labeling` is given.
pub fn framework_to_dot(af: &ArgumentationFramework, labeling: Option<&Labeling>) -> String {
    let mut out = String::from("digraph af {\n");
    for (i, name) in af.arguments().iter().enumerate() {
        let style = match labeling.map(|l| l.get(i)) {
            Some(Label::In) => ", style=filled, fillcolor=\"#b8e0b8\"",
            Some(Label::Out) => ", style=filled, fillcolor=\"#f0b8b8\"",
            Some(Label::Undec) => ", style=filled, fillcolor=\"#e0e0e0\"",
            None => "",
        };
        out.push_str(&format!("  \"{name}\" [label=\"{name}\"{style}];\n"));
    }
    for (a, b) in af.attacks() {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", af.name(a), af.name(b)));
    }
    out.push_str("}\n");
    out
}

pub fn framework_to_json(af: &ArgumentationFramework) -> Value {
    let attacks: Vec<Value> = af.attacks().map(|(a, b)| json!([af.name(a), af.name(b)])).collect();
    json!({ "arguments": af.arguments(), "attacks": attacks })
}

fn as_str_list<'v>(v: &'v Value, what: &str) -> Result<Vec<&'v str>> {
    let items = v.as_array().ok_or_else(|| Error::Format(format!("`{what}` must be an array of strings")))?;
    items
        .iter()
        .map(|s| s.as_str().ok_or_else(|| Error::Format(format!("`{what}` must be an array of strings"))))
        .collect()
}

pub fn framework_from_json(v: &Value) -> Result<ArgumentationFramework> {
    let obj = v.as_object().ok_or_else(|| Error::Format("framework must be a JSON object".into()))?;
    let args = as_str_list(obj.get("arguments").ok_or_else(|| Error::Format("framework lacks `arguments`".into()))?, "arguments")?;
    let mut attacks = Vec::new();
    if let Some(list) = obj.get("attacks") {
        let list = list.as_array().ok_or_else(|| Error::Format("`attacks` must be an array of pairs".into()))?;
        for pair in list {
            match as_str_list(pair, "attacks")?.as_slice() {
                [a, b] => attacks.push((*a, *b)),
                _ => return Err(Error::Format("each attack must be a pair `[from, to]`".into())),
            }
        }
    }
    ArgumentationFramework::new(args, attacks)
}

pub fn labeling_to_json(af: &ArgumentationFramework, l: &Labeling) -> Value {
    let names = |s: BitSet| s.iter().map(|i| af.name(i)).collect::<Vec<_>>();
    json!({ "in": names(l.in_set()), "out": names(l.out_set()), "undec": names(l.undec_set()) })
}

/// Reads `{"in": [...], "out": [...], "undec": [...]}`. Every argument must
/// be labeled exactly once; a missing key stands for an empty list.
pub fn labeling_from_json(af: &ArgumentationFramework, v: &Value) -> Result<Labeling> {
    let obj = v.as_object().ok_or_else(|| Error::Format("labeling must be a JSON object".into()))?;
    if let Some(key) = obj.keys().find(|k| !matches!(k.as_str(), "in" | "out" | "undec")) {
        return Err(Error::Format(format!("unexpected labeling key `{key}`")));
    }
    let mut labels: Vec<Option<Label>> = vec![None; af.len()];
    for (key, label) in [("in", Label::In), ("out", Label::Out), ("undec", Label::Undec)] {
        let Some(list) = obj.get(key) else { continue };
        for name in as_str_list(list, key)? {
            let i = af.require(name)?;
            if labels[i].is_some() {
                return Err(Error::Domain(format!("argument `{name}` is labeled more than once")));
            }
            labels[i] = Some(label);
        }
    }
    let labels: Vec<Label> = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or_else(|| Error::Domain(format!("argument `{}` is not labeled", af.name(i)))))
        .collect::<Result<_>>()?;
    Ok(Labeling::from_labels(&labels))
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Format(format!("invalid JSON at line {}: {e}", e.line())))
}

pub fn parse_labeling(af: &ArgumentationFramework, text: &str) -> Result<Labeling> {
    labeling_from_json(af, &parse_json(text)?)
}

pub fn profile_to_json(af: &ArgumentationFramework, profile: &Profile) -> Value {
    let agents: Map<String, Value> = profile
        .agents()
        .iter()
        .zip(profile.ballots())
        .map(|(id, b)| (id.clone(), labeling_to_json(af, b)))
        .collect();
    json!({ "agents": agents })
}

/// Reads `{"agents": {"<id>": <labeling>, ...}}`, keeping the file's agent order.
pub fn profile_from_json(af: &ArgumentationFramework, v: &Value) -> Result<Profile> {
    let agents = v
        .get("agents")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Format("profile must be an object with an `agents` map".into()))?;
    let entries = agents
        .iter()
        .map(|(id, l)| Ok((id.clone(), labeling_from_json(af, l)?)))
        .collect::<Result<Vec<_>>>()?;
    Profile::new(entries)
}

pub fn parse_profile(af: &ArgumentationFramework, text: &str) -> Result<Profile> {
    profile_from_json(af, &parse_json(text)?)
}

/// The partition as a list of blocks, each with its members' signs.
pub fn partition_to_json(af: &ArgumentationFramework, partition: &IssuePartition) -> Value {
    serde_json::to_value(partition.describe(af)).expect("plain data")
}

fn issues_to_json(af: &ArgumentationFramework, partition: &IssuePartition, blocks: BitSet) -> Value {
    blocks.iter().map(|b| json!(partition.block_names(af, b))).collect()
}

/// Argument-granular sets render as argument names, issue-granular ones as
/// lists of member names.
pub fn disagreement_to_json(af: &ArgumentationFramework, partition: Option<&IssuePartition>, set: &DisagreementSet) -> Value {
    let render = |s: BitSet| match partition {
        Some(p) if set.granularity() == crate::metrics::Granularity::Issue => issues_to_json(af, p, s),
        _ => json!(s.iter().map(|i| af.name(i)).collect::<Vec<_>>()),
    };
    match set {
        DisagreementSet::Uniform { set, .. } => render(*set),
        DisagreementSet::Iuo { sets, .. } => json!({ "io": render(sets.io), "du": render(sets.du) }),
    }
}

pub fn lie_report_to_json(af: &ArgumentationFramework, r: &LieReport) -> Value {
    json!({
        "agent": r.agent,
        "true_ballot": labeling_to_json(af, &r.true_ballot),
        "lie": labeling_to_json(af, &r.lie),
        "honest_outcome": labeling_to_json(af, &r.honest_outcome),
        "lie_outcome": labeling_to_json(af, &r.lie_outcome),
        "classification": r.classification,
    })
}

/// One-line text form, e.g. `in {A, C} out {B} undec {}`.
pub fn labeling_to_text(af: &ArgumentationFramework, l: &Labeling) -> String {
    let names = |s: BitSet| s.iter().map(|i| af.name(i)).collect::<Vec<_>>().join(", ");
    format!("in {{{}}} out {{{}}} undec {{{}}}", names(l.in_set()), names(l.out_set()), names(l.undec_set()))
}
