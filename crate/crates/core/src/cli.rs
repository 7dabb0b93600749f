//! The `revnets` command line.
//!
//! Exit codes: 0 success, 1 validation failure, 2 parse or usage error,
//! 3 a step that is not enabled, 4 a failed theorem check.

use std::collections::BTreeSet;
use std::fs;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{self, check_theorem, Theorem, TheoremVerdict};
use crate::classes::{configurations_net, recognize, ClauseOptions, NetClass, NetClassReport};
use crate::encode::{on_to_cn, pcn_to_on, pcn_to_ppes, ppes_to_pcn, rcn_to_rpes, rpes_to_rcn};
use crate::es::{Configuration, ConfigurationSet, ReversiblePes, ValidationReport};
use crate::format::{parse_document, Document, EsDocument, EsKind, NetDocument};
use crate::net::{net_equiv, to_dot, EquivVerdict, InhibitorNet, Marking, NetError, StateBound, Step};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_ENABLED: i32 = 3;
pub const EXIT_THEOREM: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "revnets", version, about = "Reversible event structures and causal nets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a structure's axioms or a net against its declared kind.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Translate between kinds: ppes->pcn, pcn->ppes, rpes->rcn, rcn->rpes,
    /// on->cn, pcn->on, pcn->cn (saturation).
    Convert {
        file: PathBuf,
        #[arg(long)]
        to: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the configurations.
    Configs {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List the states (multisets of fired transitions).
    States {
        file: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List the reachable markings.
    Reach {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Fire steps given as `a;{b c};~b`, or interactively from stdin.
    Fire {
        file: PathBuf,
        #[arg(long)]
        script: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Compare two nets by their states, or two structures by their
    /// configurations.
    Equiv {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run the correspondence checks on the bundled fixtures and random
    /// instances, or on the given files.
    CheckTheorems {
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long)]
        theorem: Option<Theorem>,
        #[arg(long)]
        json: bool,
    },
    /// Render a net in Graphviz DOT.
    Dot {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

/// A failed command: message for stderr and exit code.
struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

type Outcome = Result<i32, Failure>;

struct Io<'a> {
    input: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn line(&mut self, text: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", text.as_ref());
    }

    fn json(&mut self, value: &impl Serialize) {
        let text = serde_json::to_string_pretty(value).expect("plain data serializes");
        self.line(text);
    }
}

/// Parse `args` (program name first) and run the command.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    let mut io = Io { input, out };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, io: &mut Io) -> Outcome {
    match command {
        Command::Validate { file, json } => validate(&load(&file)?, json, io),
        Command::Convert { file, to, output } => convert(&load(&file)?, &to, output.as_deref(), io),
        Command::Configs { file, json } => configs(&load(&file)?, json, io),
        Command::States { file, depth, json } => states(&load_net(&file)?, depth, json, io),
        Command::Reach { file, json } => reach(&load_net(&file)?, json, io),
        Command::Fire { file, script, json } => fire(&load(&file)?, script.as_deref(), json, io),
        Command::Equiv {
            left,
            right,
            depth,
            json,
        } => equiv(&load(&left)?, &load(&right)?, depth, json, io),
        Command::CheckTheorems {
            files,
            seed,
            count,
            theorem,
            json,
        } => {
            let docs = files
                .iter()
                .map(|f| Ok((f.display().to_string(), load(f)?)))
                .collect::<Result<Vec<_>, Failure>>()?;
            check_theorems(&docs, seed, count, theorem, json, io)
        }
        Command::Dot { file, output, json } => dot(&load_net(&file)?, output.as_deref(), json, io),
    }
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| fail(EXIT_PARSE, format!("{}:{e}", path.display())))
}

fn load_net(path: &Path) -> Result<NetDocument, Failure> {
    match load(path)? {
        Document::Net(doc) => Ok(doc),
        Document::Structure(doc) => Err(fail(
            EXIT_PARSE,
            format!("{}: expected a net, found a {} structure", path.display(), doc.kind),
        )),
    }
}

fn write_output(path: Option<&Path>, text: &str, io: &mut Io) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", p.display()))),
        None => {
            let _ = write!(io.out, "{text}");
            Ok(())
        }
    }
}

// validate ----------------------------------------------------------------

/// `a # b < c` without `a # c`, as a message.
fn heredity_failures(doc: &EsDocument) -> Vec<String> {
    let core = doc.core();
    let causality = core.transitive_causality();
    let mut out = Vec::new();
    for (a, b) in core.conflict() {
        for (_, c) in causality.iter().filter(|(x, c)| x == b && c != b) {
            if !core.in_conflict(a, c) {
                out.push(format!(
                    "conflict not inherited along causality: {a} # {b} < {c} but not {a} # {c}"
                ));
            }
        }
    }
    out
}

fn net_report(doc: &NetDocument) -> Result<NetClassReport, Failure> {
    let partition = match doc.kind {
        NetClass::Rcn => Some(doc.partition().map_err(|e| fail(EXIT_INVALID, e.to_string()))?),
        _ => None,
    };
    Ok(recognize(&doc.net, doc.kind, partition.as_ref(), &ClauseOptions::all()))
}

fn validate(doc: &Document, json: bool, io: &mut Io) -> Outcome {
    let valid = match doc {
        Document::Structure(es) => {
            let report: ValidationReport = match es.kind {
                EsKind::Rpes => es.structure.validate(),
                _ => es.core().validate(),
            };
            let heredity = if es.kind == EsKind::Pes {
                heredity_failures(es)
            } else {
                Vec::new()
            };
            let valid = report.is_valid() && heredity.is_empty();
            if json {
                io.json(&json!({
                    "kind": es.kind,
                    "valid": valid,
                    "violations": report.violations,
                    "heredity": heredity,
                }));
            } else {
                io.line(format!(
                    "{} structure is {}",
                    es.kind,
                    if valid { "valid" } else { "invalid" }
                ));
                for v in &report.violations {
                    io.line(format!("  {v}"));
                }
                for h in &heredity {
                    io.line(format!("  {h}"));
                }
            }
            valid
        }
        Document::Net(net) => {
            let report = net_report(net)?;
            if json {
                io.json(&json!({ "valid": report.is_member(), "report": report }));
            } else {
                io.line(report.to_string());
            }
            report.is_member()
        }
    };
    Ok(if valid { EXIT_OK } else { EXIT_INVALID })
}

// convert -----------------------------------------------------------------

fn require_member(doc: &NetDocument) -> Result<(), Failure> {
    let report = net_report(doc)?;
    if report.is_member() {
        Ok(())
    } else {
        Err(fail(EXIT_INVALID, report.to_string()))
    }
}

fn convert(doc: &Document, to: &str, output: Option<&Path>, io: &mut Io) -> Outcome {
    let unsupported = || fail(EXIT_PARSE, format!("cannot convert {} to {to}", doc.kind()));
    let converted = match doc {
        Document::Structure(es) => match (es.kind, to) {
            (EsKind::Ppes | EsKind::Pes, "pcn" | "cn") => {
                let kind = if es.core().is_pes() {
                    NetClass::Cn
                } else {
                    NetClass::Pcn
                };
                Document::Net(NetDocument::new(kind, ppes_to_pcn(es.core())))
            }
            (_, "rcn") => {
                let (net, partition) = rpes_to_rcn(&es.structure);
                Document::Net(NetDocument::with_partition(net, &partition))
            }
            _ => return Err(unsupported()),
        },
        Document::Net(net) => {
            require_member(net)?;
            match (net.kind, to) {
                (NetClass::Pcn | NetClass::Cn, "ppes" | "pes") => {
                    let core = pcn_to_ppes(&net.net).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
                    let kind = if core.is_pes() { EsKind::Pes } else { EsKind::Ppes };
                    Document::Structure(EsDocument::new(kind, ReversiblePes::new(core)))
                }
                (NetClass::Pcn | NetClass::Cn, "on") => {
                    Document::Net(NetDocument::new(NetClass::On, pcn_to_on(&net.net)))
                }
                (NetClass::Pcn, "cn") => {
                    Document::Net(NetDocument::new(NetClass::Cn, crate::classes::saturate(&net.net)))
                }
                (NetClass::On, "cn") => {
                    let cn = on_to_cn(&net.net).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
                    Document::Net(NetDocument::new(NetClass::Cn, cn))
                }
                (NetClass::Rcn, "rpes") => {
                    let partition = net.partition().map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
                    let rp = rcn_to_rpes(&net.net, &partition).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
                    Document::Structure(EsDocument::new(EsKind::Rpes, rp))
                }
                _ => return Err(unsupported()),
            }
        }
    };
    write_output(output, &converted.to_text(), io)?;
    Ok(EXIT_OK)
}

// enumeration -------------------------------------------------------------

fn configurations(doc: &Document) -> Result<ConfigurationSet, Failure> {
    match doc {
        Document::Structure(es) => Ok(match es.kind {
            EsKind::Rpes => es.structure.configurations(),
            _ => es.core().configurations(),
        }),
        Document::Net(net) => {
            let partition = match net.backward {
                Some(_) => Some(net.partition().map_err(|e| fail(EXIT_INVALID, e.to_string()))?),
                None => None,
            };
            configurations_net(&net.net, net.kind, partition.as_ref()).map_err(|e| fail(EXIT_INVALID, e.to_string()))
        }
    }
}

fn configs(doc: &Document, json: bool, io: &mut Io) -> Outcome {
    let set = configurations(doc)?;
    if json {
        io.json(&set);
    } else {
        for c in set.iter() {
            io.line(crate::es::show_set(c));
        }
    }
    Ok(EXIT_OK)
}

fn net_failure(e: NetError) -> Failure {
    match e {
        NetError::NotEnabled(_) => fail(EXIT_NOT_ENABLED, e.to_string()),
        _ => fail(EXIT_INVALID, e.to_string()),
    }
}

fn states(doc: &NetDocument, depth: Option<usize>, json: bool, io: &mut Io) -> Outcome {
    let net = &doc.net;
    let bound = match depth {
        Some(d) => StateBound::Depth(d),
        None if net.is_single_execution() => StateBound::Exhaustive,
        None => StateBound::Depth(net.default_depth()),
    };
    let states = net.states(bound).map_err(net_failure)?;
    if json {
        io.json(&states);
    } else {
        for s in &states {
            io.line(s.to_string());
        }
    }
    Ok(EXIT_OK)
}

fn reach(doc: &NetDocument, json: bool, io: &mut Io) -> Outcome {
    let markings = doc.net.reachable_markings().map_err(net_failure)?;
    if json {
        io.json(&markings);
    } else {
        for m in &markings {
            io.line(m.to_string());
        }
    }
    Ok(EXIT_OK)
}

// fire --------------------------------------------------------------------

/// The current state of a `fire` session.
enum Session<'a> {
    Net(&'a InhibitorNet, Marking),
    Structure(&'a ReversiblePes, Configuration),
}

impl Session<'_> {
    fn show(&self) -> String {
        match self {
            Session::Net(_, m) => m.to_string(),
            Session::Structure(_, x) => crate::es::show_set(x),
        }
    }

    fn names(&self) -> Vec<String> {
        match self {
            Session::Net(_, m) => m.to_names(),
            Session::Structure(_, x) => x.iter().cloned().collect(),
        }
    }

    fn apply(&mut self, step: &Step) -> Result<(), Failure> {
        match self {
            Session::Net(net, m) => {
                *m = net.fire(m, step).map_err(net_failure)?;
            }
            Session::Structure(rp, x) => {
                let (back, fwd): (BTreeSet<&String>, BTreeSet<&String>) =
                    step.transitions().iter().partition(|t| t.starts_with('~'));
                let forward: Configuration = fwd.into_iter().cloned().collect();
                let backward: Configuration = back.iter().map(|t| t[1..].to_string()).collect();
                *x = rp.step(x, &forward, &backward).map_err(|e| match e {
                    crate::es::EsError::NotEnabled(_) => fail(EXIT_NOT_ENABLED, e.to_string()),
                    _ => fail(EXIT_INVALID, e.to_string()),
                })?;
            }
        }
        Ok(())
    }

    fn enabled(&self) -> Result<Vec<String>, Failure> {
        match self {
            Session::Net(net, m) => Ok(net
                .enabled_steps(m, net.transitions().len())
                .map_err(net_failure)?
                .iter()
                .map(step_text)
                .collect()),
            Session::Structure(rp, x) => {
                let mut out = Vec::new();
                let empty = Configuration::new();
                for e in rp.events() {
                    let one: Configuration = [e.clone()].into();
                    if !x.contains(e) && rp.enabled(x, &one, &empty).unwrap_or(false) {
                        out.push(e.clone());
                    }
                    if x.contains(e) && rp.undoable().contains(e) && rp.enabled(x, &empty, &one).unwrap_or(false) {
                        out.push(crate::es::reverser_name(e));
                    }
                }
                Ok(out)
            }
        }
    }
}

fn step_text(step: &Step) -> String {
    if step.len() == 1 {
        step.transitions().iter().next().cloned().unwrap_or_default()
    } else {
        let names: Vec<&str> = step.transitions().iter().map(String::as_str).collect();
        format!("{{{}}}", names.join(" "))
    }
}

fn parse_step(text: &str) -> Result<Step, Failure> {
    Step::parse(text).ok_or_else(|| fail(EXIT_PARSE, format!("cannot read step `{text}`")))
}

fn fire(doc: &Document, script: Option<&str>, json: bool, io: &mut Io) -> Outcome {
    let mut session = match doc {
        Document::Net(net) => {
            if net.kind != NetClass::Ipt {
                require_member(net)?;
            }
            Session::Net(&net.net, net.net.initial_marking())
        }
        Document::Structure(es) => Session::Structure(&es.structure, Configuration::new()),
    };
    let Some(script) = script else {
        return interactive(&mut session, io);
    };
    let steps = script
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_step)
        .collect::<Result<Vec<_>, _>>()?;
    let mut transcript = vec![json!({ "step": null, "state": session.names() })];
    if !json {
        io.line(format!("initial: {}", session.show()));
    }
    for step in &steps {
        if let Err(f) = session.apply(step) {
            if json {
                transcript.push(json!({ "step": step_text(step), "error": f.message }));
                io.json(&transcript);
            }
            return Err(f);
        }
        transcript.push(json!({ "step": step_text(step), "state": session.names() }));
        if !json {
            io.line(format!("{}: {}", step_text(step), session.show()));
        }
    }
    if json {
        io.json(&transcript);
    }
    Ok(EXIT_OK)
}

fn interactive(session: &mut Session, io: &mut Io) -> Outcome {
    loop {
        io.line(format!("state: {}", session.show()));
        let enabled = session.enabled()?;
        if enabled.is_empty() {
            io.line("no step is enabled");
            return Ok(EXIT_OK);
        }
        io.line(format!("enabled: {}", enabled.join(", ")));
        let _ = write!(io.out, "> ");
        let _ = io.out.flush();
        let mut line = String::new();
        if io.input.read_line(&mut line).unwrap_or(0) == 0 {
            return Ok(EXIT_OK);
        }
        let choice = line.trim();
        match choice {
            "" => continue,
            "quit" | "q" => return Ok(EXIT_OK),
            _ => {}
        }
        match parse_step(choice).and_then(|s| session.apply(&s)) {
            Ok(()) => {}
            Err(f) => io.line(format!("error: {}", f.message)),
        }
    }
}

// equiv -------------------------------------------------------------------

fn equiv(left: &Document, right: &Document, depth: Option<usize>, json: bool, io: &mut Io) -> Outcome {
    match (left, right) {
        (Document::Net(l), Document::Net(r)) => {
            let depth = depth.unwrap_or_else(|| l.net.default_depth().max(r.net.default_depth()));
            let verdict = net_equiv(&l.net, &r.net, depth).map_err(net_failure)?;
            if json {
                io.json(&verdict);
            } else {
                io.line(verdict.to_string());
            }
            Ok(if verdict.is_different() { EXIT_INVALID } else { EXIT_OK })
        }
        (Document::Structure(_), Document::Structure(_)) => {
            let (l, r) = (configurations(left)?, configurations(right)?);
            let diff = l.first_difference(&r);
            let verdict = match &diff {
                None => EquivVerdict::Equal.to_string(),
                Some(x) => format!(
                    "different: {} is a configuration of the {} structure only",
                    crate::es::show_set(x),
                    if l.contains(x) { "left" } else { "right" }
                ),
            };
            if json {
                io.json(&json!({ "equal": diff.is_none(), "witness": diff }));
            } else {
                io.line(verdict);
            }
            Ok(if diff.is_some() { EXIT_INVALID } else { EXIT_OK })
        }
        _ => Err(fail(EXIT_PARSE, "equiv compares two nets or two structures")),
    }
}

// check-theorems ----------------------------------------------------------

fn report_verdicts(verdicts: &[TheoremVerdict], json_value: Option<serde_json::Value>, io: &mut Io) -> i32 {
    match json_value {
        Some(v) => io.json(&v),
        None => {
            for v in verdicts {
                io.line(v.to_string());
            }
            let failed = verdicts.iter().filter(|v| !v.passed()).count();
            io.line(format!("{} passed, {failed} failed", verdicts.len() - failed));
        }
    }
    if verdicts.iter().all(TheoremVerdict::passed) {
        EXIT_OK
    } else {
        EXIT_THEOREM
    }
}

fn check_theorems(
    docs: &[(String, Document)],
    seed: u64,
    count: usize,
    theorem: Option<Theorem>,
    json: bool,
    io: &mut Io,
) -> Outcome {
    if !docs.is_empty() {
        let mut verdicts = Vec::new();
        for (label, doc) in docs {
            match theorem {
                Some(t) => verdicts.push(check_theorem(t, doc, label).map_err(|e| fail(EXIT_PARSE, e.to_string()))?),
                None => verdicts.extend(
                    Theorem::ALL
                        .into_iter()
                        .filter_map(|t| check_theorem(t, doc, label).ok()),
                ),
            }
        }
        let value = json.then(|| json!({ "verdicts": verdicts }));
        return Ok(report_verdicts(&verdicts, value, io));
    }
    let report = match theorem {
        None => analysis::run_suite(seed, count),
        Some(t) => analysis::run_theorem(t, seed, count),
    }
    .map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
    let value = json.then(|| serde_json::to_value(&report).expect("report serializes"));
    Ok(report_verdicts(&report.verdicts, value, io))
}

// dot ---------------------------------------------------------------------

fn dot(doc: &NetDocument, output: Option<&Path>, json: bool, io: &mut Io) -> Outcome {
    let backward = match doc.kind {
        NetClass::Rcn => doc
            .partition()
            .map_err(|e| fail(EXIT_INVALID, e.to_string()))?
            .backward()
            .clone(),
        _ => BTreeSet::new(),
    };
    let text = to_dot(&doc.net, &backward);
    if json {
        io.json(&json!({ "dot": text }));
        return Ok(EXIT_OK);
    }
    write_output(output, &text, io)?;
    Ok(EXIT_OK)
}
