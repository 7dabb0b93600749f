//! The line-oriented `.es` and `.net` text formats.
//!
//! Each line is `section: tokens`. Serialization writes sections in a fixed
//! order with sorted entries, so canonical files round-trip byte for byte.

mod es;
mod net;

pub use es::{parse_es, serialize_es, EsDocument, EsKind};
pub use net::{parse_net, serialize_net, NetDocument};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Either kind of file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Structure(EsDocument),
    Net(NetDocument),
}

impl Document {
    /// The declared `kind:` value.
    pub fn kind(&self) -> String {
        match self {
            Document::Structure(doc) => doc.kind.to_string(),
            Document::Net(doc) => doc.kind.to_string(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Document::Structure(doc) => serialize_es(doc),
            Document::Net(doc) => serialize_net(doc),
        }
    }
}

/// Parse either format, chosen by the first `kind:` value.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let kind = lines(text)?
        .into_iter()
        .find(|l| l.section.text == "kind")
        .and_then(|l| l.values.first().map(|v| v.text));
    match kind {
        Some(k) if k.parse::<EsKind>().is_ok() => parse_es(text).map(Document::Structure),
        _ => parse_net(text).map(Document::Net),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParseErrorKind {
    Syntax,
    Duplicate,
    Undeclared,
    /// A section or value not allowed for the declared `kind:`.
    KindMismatch,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::Duplicate => "duplicate declaration",
            ParseErrorKind::Undeclared => "undeclared name",
            ParseErrorKind::KindMismatch => "kind mismatch",
        })
    }
}

/// A parse failure located at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[error("{line}:{column}: {kind}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub token: String,
    pub kind: ParseErrorKind,
    pub message: String,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub line: usize,
    pub column: usize,
}

impl Token<'_> {
    pub fn error(&self, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            token: self.text.to_string(),
            kind,
            message: message.into(),
        }
    }
}

/// One `section: values` line.
pub(crate) struct Line<'a> {
    pub section: Token<'a>,
    pub values: Vec<Token<'a>>,
}

/// Split `text` into section lines. A `#` starts a comment at the start of
/// a line or after whitespace.
pub(crate) fn lines(text: &str) -> Result<Vec<Line<'_>>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in raw.char_indices().chain(std::iter::once((raw.len(), ' '))) {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    tokens.push(Token {
                        text: &raw[s..pos],
                        line: line_no,
                        column: raw[..s].chars().count() + 1,
                    });
                }
            } else if start.is_none() {
                if ch == '#' {
                    break;
                }
                start = Some(pos);
            }
        }
        let Some(first) = tokens.first().copied() else { continue };
        let (section, values) = match first.text.find(':') {
            Some(idx) if idx + 1 == first.text.len() => (
                Token {
                    text: &first.text[..idx],
                    ..first
                },
                tokens[1..].to_vec(),
            ),
            Some(idx) => {
                let rest = &first.text[idx + 1..];
                let rest_col = first.column + first.text[..=idx].chars().count();
                let mut values = vec![Token {
                    text: rest,
                    line: line_no,
                    column: rest_col,
                }];
                values.extend_from_slice(&tokens[1..]);
                (
                    Token {
                        text: &first.text[..idx],
                        ..first
                    },
                    values,
                )
            }
            None => return Err(first.error(ParseErrorKind::Syntax, "expected `section:`")),
        };
        out.push(Line { section, values });
    }
    Ok(out)
}

pub(crate) fn end_of_input(text: &str) -> Token<'_> {
    Token {
        text: "",
        line: text.lines().count().max(1),
        column: 1,
    }
}

/// Exactly `n` values or a syntax error at the section token.
pub(crate) fn expect_arity<'a>(line: &Line<'a>, n: usize) -> Result<(), ParseError> {
    if line.values.len() == n {
        Ok(())
    } else {
        let at = line.values.get(n).copied().unwrap_or(line.section);
        Err(at.error(
            ParseErrorKind::Syntax,
            format!("`{}:` takes {n} names, found {}", line.section.text, line.values.len()),
        ))
    }
}
