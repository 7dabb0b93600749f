use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::relations::meets;
use super::ClassError;
use crate::net::InhibitorNet;

/// A split of the transitions into forward and backward ones, with the
/// forward transition each backward one undoes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BackwardPartition {
    forward: BTreeSet<String>,
    backward: BTreeSet<String>,
    /// backward ↦ forward
    reverses: BTreeMap<String, String>,
}

/// `S_t`: preset places of `t` consumed by no other transition.
pub(crate) fn private_places(net: &InhibitorNet, consumers: &[Vec<usize>], t: usize) -> Vec<usize> {
    net.pre_ix(t).iter().copied().filter(|&s| consumers[s] == [t]).collect()
}

/// Forward transitions `t` that `r` exactly inverts and that `r` depends on.
fn reverse_candidates(net: &InhibitorNet, consumers: &[Vec<usize>], r: usize) -> Vec<usize> {
    (0..net.transitions().len())
        .filter(|&t| {
            t != r
                && net.post_ix(t) == net.pre_ix(r)
                && net.pre_ix(t) == net.post_ix(r)
                && meets(&private_places(net, consumers, t), net.inhib_ix(r))
        })
        .collect()
}

impl BackwardPartition {
    /// Every transition forward.
    pub fn forward_only(net: &InhibitorNet) -> Self {
        BackwardPartition {
            forward: net.transitions().iter().cloned().collect(),
            ..Default::default()
        }
    }

    /// Declare `backward` explicitly. Each backward transition is paired
    /// with the first forward transition it inverts, if any.
    pub fn from_backward(net: &InhibitorNet, backward: &BTreeSet<String>) -> Self {
        let forward: BTreeSet<String> = net
            .transitions()
            .iter()
            .filter(|t| !backward.contains(*t))
            .cloned()
            .collect();
        let mut reverses = BTreeMap::new();
        for r in backward {
            let Some(ri) = net.transition_index(r) else { continue };
            let inverse = (0..net.transitions().len()).find(|&t| {
                forward.contains(&net.transitions()[t])
                    && net.post_ix(t) == net.pre_ix(ri)
                    && net.pre_ix(t) == net.post_ix(ri)
            });
            if let Some(t) = inverse {
                reverses.insert(r.clone(), net.transitions()[t].clone());
            }
        }
        BackwardPartition {
            forward,
            backward: backward.clone(),
            reverses,
        }
    }

    pub fn forward(&self) -> &BTreeSet<String> {
        &self.forward
    }

    pub fn backward(&self) -> &BTreeSet<String> {
        &self.backward
    }

    pub fn is_backward(&self, t: &str) -> bool {
        self.backward.contains(t)
    }

    /// backward ↦ forward transition it undoes.
    pub fn reverses(&self) -> &BTreeMap<String, String> {
        &self.reverses
    }

    /// The backward transition undoing `forward`, if any.
    pub fn reverser_of(&self, forward: &str) -> Option<&String> {
        self.reverses.iter().find(|(_, f)| *f == forward).map(|(b, _)| b)
    }
}

/// Find the backward transitions of a net from its shape: `r` is backward
/// when exactly one transition `t` has `post t = pre r`, `pre t = post r`
/// and a private preset place inhibiting `r`.
pub fn infer_backward_partition(net: &InhibitorNet) -> Result<BackwardPartition, ClassError> {
    let consumers = net.consumers_ix();
    let names = net.transitions();
    let mut reverses = BTreeMap::new();
    for r in 0..names.len() {
        let candidates = reverse_candidates(net, &consumers, r);
        match candidates.len() {
            0 => {}
            1 => {
                reverses.insert(names[r].clone(), names[candidates[0]].clone());
            }
            _ => {
                return Err(ClassError::AmbiguousReverser {
                    backward: names[r].clone(),
                    candidates: candidates.iter().map(|&t| names[t].clone()).collect(),
                })
            }
        }
    }
    if let Some(t) = reverses.values().find(|t| reverses.contains_key(*t)) {
        return Err(ClassError::ReverserReversed(t.clone()));
    }
    let backward: BTreeSet<String> = reverses.keys().cloned().collect();
    Ok(BackwardPartition {
        forward: names.iter().filter(|t| !backward.contains(*t)).cloned().collect(),
        backward,
        reverses,
    })
}
