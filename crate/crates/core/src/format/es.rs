use std::collections::BTreeSet;
use std::fmt::{self, Write};
use std::str::FromStr;

use serde::Serialize;

use super::{end_of_input, expect_arity, lines, ParseError, ParseErrorKind, Token};
use crate::es::{EventStructureCore, ReversiblePes};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EsKind {
    Ppes,
    Pes,
    Rpes,
}

impl fmt::Display for EsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EsKind::Ppes => "ppes",
            EsKind::Pes => "pes",
            EsKind::Rpes => "rpes",
        })
    }
}

impl FromStr for EsKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ppes" => Ok(EsKind::Ppes),
            "pes" => Ok(EsKind::Pes),
            "rpes" => Ok(EsKind::Rpes),
            other => Err(format!("unknown structure kind `{other}`")),
        }
    }
}

/// A parsed `.es` file. Non-reversible kinds have no undoable events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsDocument {
    pub kind: EsKind,
    pub structure: ReversiblePes,
}

impl EsDocument {
    pub fn new(kind: EsKind, structure: ReversiblePes) -> Self {
        EsDocument { kind, structure }
    }

    pub fn core(&self) -> &EventStructureCore {
        self.structure.core()
    }
}

fn check_name(tok: &Token) -> Result<(), ParseError> {
    if crate::es::is_event_name(tok.text) {
        Ok(())
    } else {
        Err(tok.error(ParseErrorKind::Syntax, "event names are letters, digits and `_`"))
    }
}

fn declared(events: &BTreeSet<String>, tok: &Token) -> Result<(), ParseError> {
    check_name(tok)?;
    if events.contains(tok.text) {
        Ok(())
    } else {
        Err(tok.error(
            ParseErrorKind::Undeclared,
            format!("event `{}` is not declared", tok.text),
        ))
    }
}

pub fn parse_es(text: &str) -> Result<EsDocument, ParseError> {
    let mut kind: Option<EsKind> = None;
    let mut core = EventStructureCore::new();
    let mut undoable: Vec<String> = Vec::new();
    let mut rev: Vec<(String, String)> = Vec::new();
    let mut prevent: Vec<(String, String)> = Vec::new();
    let mut seen_pairs: BTreeSet<(&str, String, String)> = BTreeSet::new();

    for line in lines(text)? {
        let section = line.section;
        if section.text == "kind" {
            if kind.is_some() {
                return Err(section.error(ParseErrorKind::Duplicate, "`kind:` given twice"));
            }
            expect_arity(&line, 1)?;
            let value = line.values[0];
            kind = Some(
                value
                    .text
                    .parse()
                    .map_err(|m: String| value.error(ParseErrorKind::Syntax, m))?,
            );
            continue;
        }
        let Some(k) = kind else {
            return Err(section.error(ParseErrorKind::Syntax, "`kind:` must come first"));
        };
        let rpes_only = matches!(section.text, "undoable" | "revcause" | "prevent");
        if rpes_only && k != EsKind::Rpes {
            return Err(section.error(
                ParseErrorKind::KindMismatch,
                format!("`{}:` is only allowed in rpes files", section.text),
            ));
        }
        match section.text {
            "events" => {
                for tok in &line.values {
                    check_name(tok)?;
                    if core.events().contains(tok.text) {
                        return Err(tok.error(
                            ParseErrorKind::Duplicate,
                            format!("event `{}` declared twice", tok.text),
                        ));
                    }
                    core.add_event(tok.text)
                        .map_err(|e| tok.error(ParseErrorKind::Syntax, e.to_string()))?;
                }
            }
            "undoable" => {
                for tok in &line.values {
                    declared(core.events(), tok)?;
                    if undoable.iter().any(|u| u == tok.text) {
                        return Err(tok.error(
                            ParseErrorKind::Duplicate,
                            format!("`{}` declared undoable twice", tok.text),
                        ));
                    }
                    undoable.push(tok.text.to_string());
                }
            }
            "cause" | "conflict" | "revcause" | "prevent" => {
                expect_arity(&line, 2)?;
                let (a, b) = (line.values[0], line.values[1]);
                declared(core.events(), &a)?;
                declared(core.events(), &b)?;
                if matches!(section.text, "revcause" | "prevent") && !undoable.iter().any(|u| u == b.text) {
                    return Err(b.error(
                        ParseErrorKind::Undeclared,
                        format!("`{}` is not declared undoable", b.text),
                    ));
                }
                let key = if section.text == "conflict" && b.text < a.text {
                    (b.text.to_string(), a.text.to_string())
                } else {
                    (a.text.to_string(), b.text.to_string())
                };
                if !seen_pairs.insert((section.text, key.0.clone(), key.1.clone())) {
                    return Err(a.error(
                        ParseErrorKind::Duplicate,
                        format!("`{}: {} {}` given twice", section.text, a.text, b.text),
                    ));
                }
                match section.text {
                    "cause" => {
                        core.add_cause(a.text, b.text).expect("declared");
                    }
                    "conflict" => {
                        core.add_conflict(a.text, b.text).expect("declared");
                    }
                    "revcause" => rev.push(key),
                    _ => prevent.push(key),
                }
            }
            other => {
                return Err(section.error(ParseErrorKind::Syntax, format!("unknown section `{other}:`")));
            }
        }
    }
    let Some(kind) = kind else {
        return Err(end_of_input(text).error(ParseErrorKind::Syntax, "missing `kind:`"));
    };
    let mut rp = ReversiblePes::new(core);
    for u in &undoable {
        rp.add_undoable(u).expect("declared");
    }
    for (e, u) in &rev {
        rp.add_rev_cause(e, u).expect("declared");
    }
    for (e, u) in &prevent {
        rp.add_prevention(e, u).expect("declared");
    }
    Ok(EsDocument { kind, structure: rp })
}

fn names_line(out: &mut String, section: &str, names: impl IntoIterator<Item = impl AsRef<str>>) {
    out.push_str(section);
    out.push(':');
    for n in names {
        out.push(' ');
        out.push_str(n.as_ref());
    }
    out.push('\n');
}

/// Canonical text: sections in grammar order, entries sorted.
pub fn serialize_es(doc: &EsDocument) -> String {
    let rp = &doc.structure;
    let mut out = String::new();
    let _ = writeln!(out, "kind: {}", doc.kind);
    names_line(&mut out, "events", rp.events());
    if doc.kind == EsKind::Rpes {
        names_line(&mut out, "undoable", rp.undoable());
    }
    for (a, b) in rp.core().causality() {
        let _ = writeln!(out, "cause: {a} {b}");
    }
    for (a, b) in rp.core().conflict() {
        let _ = writeln!(out, "conflict: {a} {b}");
    }
    if doc.kind == EsKind::Rpes {
        for (e, u) in rp.rev_causality() {
            let _ = writeln!(out, "revcause: {e} {u}");
        }
        for (e, u) in rp.prevention() {
            let _ = writeln!(out, "prevent: {e} {u}");
        }
    }
    out
}
