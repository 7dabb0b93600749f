//! Prime event structures (with and without conflict heredity) and their
//! reversible extension.
//!
//! Structures are finite and hold at most 64 events: every enumeration works
//! on a bitmask view of the carrier.

mod configuration;
mod reversible;
mod structure;

pub use configuration::{show_set, Configuration, ConfigurationSet};
pub use reversible::{reverser_name, ReversiblePes};
pub(crate) use structure::is_event_name;
pub use structure::EventStructureCore;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest carrier a structure may have.
pub const MAX_ENUMERABLE_EVENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EsError {
    #[error("unknown event `{0}`")]
    UnknownEvent(String),
    #[error("event `{0}` is not undoable")]
    NotUndoable(String),
    #[error("set {{{}}} is not conflict-free", .0.join(", "))]
    NotConflictFree(Vec<String>),
    #[error("step is not enabled: {0}")]
    NotEnabled(String),
    #[error("{events} events exceed the enumeration limit of {limit}")]
    TooLarge { events: usize, limit: usize },
}

/// One violated axiom of a (reversible) prime event structure.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "clause", rename_all = "kebab-case")]
pub enum Violation {
    CyclicCausality {
        event: String,
    },
    ReflexiveConflict {
        event: String,
    },
    /// Two members of the history of `event` are in conflict.
    ConflictingHistory {
        event: String,
        first: String,
        second: String,
    },
    MissingSelfReverseCause {
        undoable: String,
    },
    ConflictingReverseCauses {
        undoable: String,
        first: String,
        second: String,
    },
    CausesAndPrevents {
        event: String,
        undoable: String,
    },
    SustainedNotTransitive {
        first: String,
        middle: String,
        last: String,
    },
    ConflictNotInherited {
        conflicting: String,
        via: String,
        inheritor: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CyclicCausality { event } => {
                write!(f, "causality is cyclic through `{event}`")
            }
            Violation::ReflexiveConflict { event } => {
                write!(f, "`{event}` is in conflict with itself")
            }
            Violation::ConflictingHistory { event, first, second } => write!(
                f,
                "history of `{event}` is not conflict-free: `{first}` # `{second}`"
            ),
            Violation::MissingSelfReverseCause { undoable } => {
                write!(f, "undoable `{undoable}` does not reverse-cause its own undo")
            }
            Violation::ConflictingReverseCauses { undoable, first, second } => write!(
                f,
                "reverse causes of ~{undoable} are in conflict: `{first}` # `{second}`"
            ),
            Violation::CausesAndPrevents { event, undoable } => write!(
                f,
                "`{event}` both reverse-causes and prevents ~{undoable}"
            ),
            Violation::SustainedNotTransitive { first, middle, last } => write!(
                f,
                "sustained causation is not transitive: {first} << {middle} << {last} but not {first} << {last}"
            ),
            Violation::ConflictNotInherited { conflicting, via, inheritor } => write!(
                f,
                "conflict not inherited along sustained causation: {conflicting} # {via} << {inheritor} but not {conflicting} # {inheritor}"
            ),
        }
    }
}

/// Outcome of validating a structure: empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Iterate over all submasks of `mask`, including 0 and `mask` itself.
pub(crate) fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 { None } else { Some((current - 1) & mask) };
        Some(current)
    })
}

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(i)
    })
}
