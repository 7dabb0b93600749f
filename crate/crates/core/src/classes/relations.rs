use std::collections::BTreeSet;

use serde::Serialize;

use super::BackwardPartition;
use crate::net::InhibitorNet;

/// The relations a net induces on its forward transitions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CausalRelations {
    /// `t ⋖ t'`: a preset place of `t` inhibits `t'`.
    pub lessdot: BTreeSet<(String, String)>,
    /// `t ♮ t'`: distinct transitions sharing a preset place; stored once,
    /// ordered.
    pub direct_conflict: BTreeSet<(String, String)>,
    /// `t ⋘ t'`: causality that survives reversal.
    pub sustained: BTreeSet<(String, String)>,
}

pub(crate) fn meets(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Square boolean relation over transition indices.
pub(crate) type Matrix = Vec<Vec<bool>>;

pub(crate) fn forward_mask(net: &InhibitorNet, partition: Option<&BackwardPartition>) -> Vec<bool> {
    net.transitions()
        .iter()
        .map(|t| partition.is_none_or(|p| !p.is_backward(t)))
        .collect()
}

pub(crate) fn lessdot_ix(net: &InhibitorNet, forward: &[bool]) -> Matrix {
    let n = net.transitions().len();
    let mut m = vec![vec![false; n]; n];
    for t in (0..n).filter(|&t| forward[t]) {
        for u in (0..n).filter(|&u| forward[u]) {
            m[t][u] = meets(net.pre_ix(t), net.inhib_ix(u));
        }
    }
    m
}

pub(crate) fn conflict_ix(net: &InhibitorNet, forward: &[bool]) -> Matrix {
    let n = net.transitions().len();
    let mut m = vec![vec![false; n]; n];
    for t in (0..n).filter(|&t| forward[t]) {
        for u in (0..n).filter(|&u| forward[u] && u != t) {
            m[t][u] = meets(net.pre_ix(t), net.pre_ix(u));
        }
    }
    m
}

/// `t ⋘ t'` iff `t ⋖ t'` and every backward `r` with `pre r = post t` is
/// inhibited by some place of `post t'`.
pub(crate) fn sustained_ix(net: &InhibitorNet, forward: &[bool], lessdot: &Matrix) -> Matrix {
    let n = net.transitions().len();
    let reversers: Vec<Vec<usize>> = (0..n)
        .map(|t| {
            (0..n)
                .filter(|&r| !forward[r] && net.pre_ix(r) == net.post_ix(t))
                .collect()
        })
        .collect();
    let mut m = vec![vec![false; n]; n];
    for t in 0..n {
        for u in 0..n {
            m[t][u] = lessdot[t][u] && reversers[t].iter().all(|&r| meets(net.inhib_ix(r), net.post_ix(u)));
        }
    }
    m
}

fn pairs(net: &InhibitorNet, m: &Matrix, ordered_once: bool) -> BTreeSet<(String, String)> {
    let names = net.transitions();
    let mut out = BTreeSet::new();
    for (i, row) in m.iter().enumerate() {
        for (j, &on) in row.iter().enumerate() {
            if on && (!ordered_once || i < j) {
                out.insert((names[i].clone(), names[j].clone()));
            }
        }
    }
    out
}

/// `{(t, t') | pre t ∩ inhib t' ≠ ∅}` over forward transitions.
pub fn lessdot(net: &InhibitorNet, partition: Option<&BackwardPartition>) -> BTreeSet<(String, String)> {
    pairs(net, &lessdot_ix(net, &forward_mask(net, partition)), false)
}

/// Forward transitions sharing a preset place, each pair once.
pub fn direct_conflict(net: &InhibitorNet, partition: Option<&BackwardPartition>) -> BTreeSet<(String, String)> {
    pairs(net, &conflict_ix(net, &forward_mask(net, partition)), true)
}

pub fn sustained(net: &InhibitorNet, partition: &BackwardPartition) -> BTreeSet<(String, String)> {
    let forward = forward_mask(net, Some(partition));
    let ld = lessdot_ix(net, &forward);
    pairs(net, &sustained_ix(net, &forward, &ld), false)
}

pub fn causal_relations(net: &InhibitorNet, partition: Option<&BackwardPartition>) -> CausalRelations {
    let forward = forward_mask(net, partition);
    let ld = lessdot_ix(net, &forward);
    CausalRelations {
        lessdot: pairs(net, &ld, false),
        direct_conflict: pairs(net, &conflict_ix(net, &forward), true),
        sustained: pairs(net, &sustained_ix(net, &forward, &ld), false),
    }
}

/// Strict causes of each event in an occurrence net: `e' <_O e` through
/// the flow relation. Entry `[e][e']` is true when `e'` precedes `e`.
pub(crate) fn occurrence_causes_ix(net: &InhibitorNet) -> Matrix {
    let n = net.transitions().len();
    let mut direct = vec![vec![false; n]; n];
    for e in 0..n {
        for f in 0..n {
            direct[f][e] = meets(net.post_ix(e), net.pre_ix(f));
        }
    }
    // Transitive closure: causes[f] ⊇ causes[e] whenever e directly precedes f.
    let mut causes = direct.clone();
    loop {
        let mut changed = false;
        for f in 0..n {
            for e in 0..n {
                if causes[f][e] {
                    for g in 0..n {
                        if causes[e][g] && !causes[f][g] {
                            causes[f][g] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            return causes;
        }
    }
}

/// `#` of an occurrence net: `#0` (distinct events sharing a preset
/// condition) inherited along `≤_O` on both sides. May contain `e # e`
/// when the net is not an occurrence net.
pub(crate) fn occurrence_conflict_ix(net: &InhibitorNet) -> Matrix {
    let n = net.transitions().len();
    let causes = occurrence_causes_ix(net);
    let below = |x: usize| -> Vec<usize> { (0..n).filter(|&y| y == x || causes[x][y]).collect() };
    let zero = conflict_ix(net, &vec![true; n]);
    let mut m = vec![vec![false; n]; n];
    for x in 0..n {
        let bx = below(x);
        for x2 in 0..n {
            let bx2 = below(x2);
            m[x][x2] = bx.iter().any(|&y| bx2.iter().any(|&y2| zero[y][y2]));
        }
    }
    m
}

/// The strict event order `<_O` of an occurrence net as `(before, after)`.
pub fn occurrence_causality(net: &InhibitorNet) -> BTreeSet<(String, String)> {
    let causes = occurrence_causes_ix(net);
    let names = net.transitions();
    let mut out = BTreeSet::new();
    for (e, row) in causes.iter().enumerate() {
        for (c, &on) in row.iter().enumerate() {
            if on {
                out.insert((names[c].clone(), names[e].clone()));
            }
        }
    }
    out
}

/// The conflict of an occurrence net, each unordered pair once (a reflexive
/// pair appears as `(e, e)`).
pub fn occurrence_conflict(net: &InhibitorNet) -> BTreeSet<(String, String)> {
    let m = occurrence_conflict_ix(net);
    let names = net.transitions();
    let mut out = BTreeSet::new();
    for (i, row) in m.iter().enumerate() {
        for (j, &on) in row.iter().enumerate() {
            if on && i <= j {
                out.insert((names[i].clone(), names[j].clone()));
            }
        }
    }
    out
}
