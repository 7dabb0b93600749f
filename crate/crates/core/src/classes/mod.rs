//! Net subclasses: occurrence nets, pre-causal and causal nets, reversible
//! causal nets. Recognizers report every clause with a witness.

mod config;
mod partition;
mod recognize;
mod relations;
mod saturate;

pub(crate) use saturate::fresh_name;

pub use config::{configurations_net, marking_of_configuration, marking_projection, occurrence_configurations};
pub use partition::{infer_backward_partition, BackwardPartition};
pub use recognize::{
    is_cn, is_occurrence_net, is_pcn, is_rcn, recognize, ClauseOptions, CN_CLAUSES, ON_CLAUSES, PCN_CLAUSES,
    RCN_CLAUSES,
};
pub use relations::{
    causal_relations, direct_conflict, lessdot, occurrence_causality, occurrence_conflict, sustained, CausalRelations,
};
pub use saturate::saturate;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::net::NetError;

/// The kinds of net the library distinguishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NetClass {
    Ipt,
    Pcn,
    Cn,
    On,
    Rcn,
}

impl NetClass {
    pub fn as_str(self) -> &'static str {
        match self {
            NetClass::Ipt => "ipt",
            NetClass::Pcn => "pcn",
            NetClass::Cn => "cn",
            NetClass::On => "on",
            NetClass::Rcn => "rcn",
        }
    }
}

impl fmt::Display for NetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NetClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ipt" => Ok(NetClass::Ipt),
            "pcn" => Ok(NetClass::Pcn),
            "cn" => Ok(NetClass::Cn),
            "on" => Ok(NetClass::On),
            "rcn" => Ok(NetClass::Rcn),
            other => Err(format!("unknown net kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("ambiguous reverser `{backward}`: it could reverse any of {}", .candidates.join(", "))]
    AmbiguousReverser { backward: String, candidates: Vec<String> },
    #[error("`{0}` is both a reverser and reversed")]
    ReverserReversed(String),
    #[error("net is not in class {class}: clause `{clause}` fails")]
    NotInClass { class: NetClass, clause: String },
    #[error("no configurations are defined for plain {0} nets")]
    NoConfigurations(NetClass),
    #[error("{0} is not a configuration of the net")]
    NotAConfiguration(String),
    #[error(transparent)]
    Net(#[from] NetError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClauseStatus {
    Pass,
    Fail,
    /// Turned off through [`ClauseOptions`].
    Skipped,
}

/// Outcome of one recognizer clause.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseResult {
    pub clause: &'static str,
    pub status: ClauseStatus,
    /// Offending places or transitions; empty on success.
    pub witness: Vec<String>,
    pub detail: String,
}

impl ClauseResult {
    pub fn passed(&self) -> bool {
        self.status != ClauseStatus::Fail
    }
}

/// Ordered clause results of a recognizer run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NetClassReport {
    pub class: NetClass,
    pub clauses: Vec<ClauseResult>,
}

impl NetClassReport {
    pub fn is_member(&self) -> bool {
        self.clauses.iter().all(ClauseResult::passed)
    }

    pub fn first_failure(&self) -> Option<&ClauseResult> {
        self.clauses.iter().find(|c| !c.passed())
    }

    pub fn clause(&self, id: &str) -> Option<&ClauseResult> {
        self.clauses.iter().find(|c| c.clause == id)
    }
}

impl fmt::Display for NetClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.is_member() { "is" } else { "is not" };
        write!(f, "net {verdict} in class {}", self.class)?;
        for c in &self.clauses {
            let status = match c.status {
                ClauseStatus::Pass => "pass",
                ClauseStatus::Fail => "FAIL",
                ClauseStatus::Skipped => "skip",
            };
            write!(f, "\n  {status} {}", c.clause)?;
            if c.status == ClauseStatus::Fail {
                write!(f, ": {}", c.detail)?;
                if !c.witness.is_empty() {
                    write!(f, " [{}]", c.witness.join(", "))?;
                }
            }
        }
        Ok(())
    }
}
