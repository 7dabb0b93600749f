use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{InhibitorNet, NetError, StateBound, TransitionBag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
}

/// Outcome of comparing two nets by their sets of states.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum EquivVerdict {
    Equal,
    /// `state` is a state of the net on `side` only.
    Different {
        state: TransitionBag,
        side: Side,
    },
    /// All states of size up to `depth` agree, but the state sets are
    /// unbounded.
    Inconclusive {
        depth: usize,
    },
}

impl EquivVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, EquivVerdict::Equal)
    }

    pub fn is_different(&self) -> bool {
        matches!(self, EquivVerdict::Different { .. })
    }
}

impl fmt::Display for EquivVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivVerdict::Equal => write!(f, "equal"),
            EquivVerdict::Different { state, side } => {
                let which = match side {
                    Side::Left => "first",
                    Side::Right => "second",
                };
                write!(f, "different: state {state} only in the {which} net")
            }
            EquivVerdict::Inconclusive { depth } => {
                write!(f, "inconclusive: states agree up to size {depth}")
            }
        }
    }
}

fn exact_states(net: &InhibitorNet) -> Result<Option<BTreeSet<TransitionBag>>, NetError> {
    match net.states(StateBound::Exhaustive) {
        Ok(states) => Ok(Some(states)),
        Err(NetError::NotSingleExecution(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn small_states(net: &InhibitorNet, depth: usize) -> Result<BTreeSet<TransitionBag>, NetError> {
    Ok(net
        .states(StateBound::Depth(depth))?
        .into_iter()
        .filter(|s| s.size() as usize <= depth)
        .collect())
}

fn first_difference(left: &BTreeSet<TransitionBag>, right: &BTreeSet<TransitionBag>) -> Option<EquivVerdict> {
    let l = left.difference(right).next();
    let r = right.difference(left).next();
    match (l, r) {
        (Some(a), Some(b)) if b < a => Some(EquivVerdict::Different {
            state: b.clone(),
            side: Side::Right,
        }),
        (Some(a), _) => Some(EquivVerdict::Different {
            state: a.clone(),
            side: Side::Left,
        }),
        (None, Some(b)) => Some(EquivVerdict::Different {
            state: b.clone(),
            side: Side::Right,
        }),
        (None, None) => None,
    }
}

/// Compare two nets by their sets of states.
///
/// When neither net can fire a transition twice the comparison is exact.
/// Otherwise the states of size at most `depth` (every one of which is
/// reached within `depth` firings) are compared: a difference is
/// conclusive, agreement is reported as inconclusive.
pub fn net_equiv(left: &InhibitorNet, right: &InhibitorNet, depth: usize) -> Result<EquivVerdict, NetError> {
    if let (Some(l), Some(r)) = (exact_states(left)?, exact_states(right)?) {
        return Ok(first_difference(&l, &r).unwrap_or(EquivVerdict::Equal));
    }
    let l = small_states(left, depth)?;
    let r = small_states(right, depth)?;
    Ok(first_difference(&l, &r).unwrap_or(EquivVerdict::Inconclusive { depth }))
}
