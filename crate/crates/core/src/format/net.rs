use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use super::{end_of_input, expect_arity, lines, ParseError, ParseErrorKind, Token};
use crate::classes::{infer_backward_partition, BackwardPartition, ClassError, NetClass};
use crate::net::{is_node_name, InhibitorNet, NetBuilder};

/// A parsed `.net` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetDocument {
    pub kind: NetClass,
    pub net: InhibitorNet,
    /// The `backward:` section, when present (rcn files only).
    pub backward: Option<BTreeSet<String>>,
}

impl NetDocument {
    pub fn new(kind: NetClass, net: InhibitorNet) -> Self {
        NetDocument {
            kind,
            net,
            backward: None,
        }
    }

    pub fn with_partition(net: InhibitorNet, partition: &BackwardPartition) -> Self {
        NetDocument {
            kind: NetClass::Rcn,
            net,
            backward: Some(partition.backward().clone()),
        }
    }

    /// The declared backward transitions, else the inferred ones for rcn
    /// files, else all transitions forward.
    pub fn partition(&self) -> Result<BackwardPartition, ClassError> {
        match (&self.backward, self.kind) {
            (Some(b), _) => Ok(BackwardPartition::from_backward(&self.net, b)),
            (None, NetClass::Rcn) => infer_backward_partition(&self.net),
            (None, _) => Ok(BackwardPartition::forward_only(&self.net)),
        }
    }
}

fn check_name(tok: &Token) -> Result<(), ParseError> {
    if is_node_name(tok.text) {
        Ok(())
    } else {
        Err(tok.error(ParseErrorKind::Syntax, "invalid name"))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Node {
    Place,
    Transition,
}

pub fn parse_net(text: &str) -> Result<NetDocument, ParseError> {
    let mut kind: Option<NetClass> = None;
    let mut nodes: BTreeMap<String, Node> = BTreeMap::new();
    let mut declared_at: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let mut builder = NetBuilder::new();
    let mut backward: Option<BTreeSet<String>> = None;
    let mut arcs: BTreeSet<(String, String)> = BTreeSet::new();
    let mut inhibit: BTreeSet<(String, String)> = BTreeSet::new();

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
        let node_of = |tok: &Token, nodes: &BTreeMap<String, Node>| -> Result<Node, ParseError> {
            check_name(tok)?;
            nodes
                .get(tok.text)
                .copied()
                .ok_or_else(|| tok.error(ParseErrorKind::Undeclared, format!("`{}` is not declared", tok.text)))
        };
        match section.text {
            "places" | "transitions" => {
                let node = if section.text == "places" {
                    Node::Place
                } else {
                    Node::Transition
                };
                for tok in &line.values {
                    check_name(tok)?;
                    if nodes.contains_key(tok.text) {
                        return Err(tok.error(ParseErrorKind::Duplicate, format!("`{}` declared twice", tok.text)));
                    }
                    nodes.insert(tok.text.to_string(), node);
                    declared_at.insert(tok.text.to_string(), (tok.line, tok.column));
                    match node {
                        Node::Place => builder.place(tok.text),
                        Node::Transition => builder.transition(tok.text),
                    };
                }
            }
            "backward" => {
                if k != NetClass::Rcn {
                    return Err(section.error(ParseErrorKind::KindMismatch, "`backward:` is only allowed in rcn files"));
                }
                let set = backward.get_or_insert_with(BTreeSet::new);
                for tok in &line.values {
                    if node_of(tok, &nodes)? != Node::Transition {
                        return Err(tok.error(
                            ParseErrorKind::KindMismatch,
                            format!("`{}` is not a transition", tok.text),
                        ));
                    }
                    if !set.insert(tok.text.to_string()) {
                        return Err(tok.error(ParseErrorKind::Duplicate, format!("`{}` listed twice", tok.text)));
                    }
                }
            }
            "arc" => {
                expect_arity(&line, 2)?;
                let (x, y) = (line.values[0], line.values[1]);
                let (nx, ny) = (node_of(&x, &nodes)?, node_of(&y, &nodes)?);
                if nx == ny {
                    return Err(y.error(ParseErrorKind::Syntax, "an arc joins a place and a transition"));
                }
                if !arcs.insert((x.text.to_string(), y.text.to_string())) {
                    return Err(x.error(
                        ParseErrorKind::Duplicate,
                        format!("arc {} {} given twice", x.text, y.text),
                    ));
                }
                if nx == Node::Place {
                    builder.consume(x.text, y.text);
                } else {
                    builder.produce(x.text, y.text);
                }
            }
            "inhibit" => {
                expect_arity(&line, 2)?;
                let (p, t) = (line.values[0], line.values[1]);
                if node_of(&p, &nodes)? != Node::Place {
                    return Err(p.error(ParseErrorKind::Syntax, "inhibitor arcs start at a place"));
                }
                if node_of(&t, &nodes)? != Node::Transition {
                    return Err(t.error(ParseErrorKind::Syntax, "inhibitor arcs end at a transition"));
                }
                if !inhibit.insert((p.text.to_string(), t.text.to_string())) {
                    return Err(p.error(
                        ParseErrorKind::Duplicate,
                        format!("inhibitor arc {} {} given twice", p.text, t.text),
                    ));
                }
                builder.inhibit(p.text, t.text);
            }
            "marking" => {
                for tok in &line.values {
                    if node_of(tok, &nodes)? != Node::Place {
                        return Err(tok.error(ParseErrorKind::Syntax, format!("`{}` is not a place", tok.text)));
                    }
                    builder.mark(tok.text);
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
    let net = builder.build().map_err(|e| {
        let at = match &e {
            crate::net::NetError::EmptyPreset(t) => declared_at.get(t).copied(),
            _ => None,
        };
        let (line, column) = at.unwrap_or((end_of_input(text).line, 1));
        ParseError {
            line,
            column,
            token: String::new(),
            kind: ParseErrorKind::Syntax,
            message: e.to_string(),
        }
    })?;
    Ok(NetDocument { kind, net, backward })
}

fn names_line<'a>(out: &mut String, section: &str, names: impl IntoIterator<Item = &'a String>) {
    out.push_str(section);
    out.push(':');
    for n in names {
        out.push(' ');
        out.push_str(n);
    }
    out.push('\n');
}

/// Canonical text: sections in grammar order, entries sorted.
pub fn serialize_net(doc: &NetDocument) -> String {
    let net = &doc.net;
    let mut out = String::new();
    let _ = writeln!(out, "kind: {}", doc.kind);
    names_line(&mut out, "places", net.places());
    names_line(&mut out, "transitions", net.transitions());
    if let Some(b) = &doc.backward {
        names_line(&mut out, "backward", b);
    }
    for (x, y) in net.flow() {
        let _ = writeln!(out, "arc: {x} {y}");
    }
    for (p, t) in net.inhibitor_arcs() {
        let _ = writeln!(out, "inhibit: {p} {t}");
    }
    names_line(&mut out, "marking", &net.initial_marking().to_names());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const N: &str = "kind: ipt\nplaces: p q\ntransitions: t\narc: p t\narc: t q\ninhibit: q t\nmarking: p\n";

    #[test]
    fn round_trip() {
        let doc = parse_net(N).unwrap();
        assert_eq!(serialize_net(&doc), N);
    }

    #[test]
    fn canonical_names_are_tokens() {
        let text = "kind: pcn\nplaces: (*,a) (a,*) ({a,b},#)\ntransitions: a\narc: (*,a) a\narc: a (a,*)\nmarking: (*,a) ({a,b},#)\n";
        let doc = parse_net(text).unwrap();
        assert!(doc.net.is_place("({a,b},#)"));
    }

    #[test]
    fn hash_inside_a_name_is_not_a_comment() {
        let doc = parse_net("kind: ipt\nplaces: ({a,b},#) p # trailing\ntransitions: t\narc: p t\n").unwrap();
        assert_eq!(doc.net.places().len(), 2);
    }

    #[test]
    fn backward_needs_rcn() {
        let err = parse_net("kind: pcn\nplaces: p\ntransitions: t\nbackward: t\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::KindMismatch);
    }

    #[test]
    fn arc_between_places_is_rejected() {
        let err = parse_net("kind: ipt\nplaces: p q\narc: p q\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Syntax);
        assert_eq!((err.line, err.column, err.token.as_str()), (3, 8, "q"));
    }

    #[test]
    fn empty_preset_is_located() {
        let err = parse_net("kind: ipt\nplaces: p\ntransitions: t\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 14));
    }
}
