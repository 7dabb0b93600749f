use std::collections::{BTreeSet, VecDeque};

use super::relations::{forward_mask, occurrence_causes_ix, occurrence_conflict_ix};
use super::{infer_backward_partition, recognize, BackwardPartition, ClassError, ClauseOptions, NetClass};
use crate::es::{show_set, Configuration, ConfigurationSet};
use crate::net::{InhibitorNet, Marking};

/// `{flt(pre m) ∩ T̄ | m reachable}`: the forward transitions that produced
/// some token of each reachable marking. No class check is made.
pub fn marking_projection(net: &InhibitorNet, partition: &BackwardPartition) -> Result<ConfigurationSet, ClassError> {
    let forward = forward_mask(net, Some(partition));
    let producers = net.producers_ix();
    let mut out = ConfigurationSet::new();
    for m in net.reachable_markings()? {
        let mut x = Configuration::new();
        for p in m.support() {
            let s = net.place_index(p).expect("own place");
            for &t in &producers[s] {
                if forward[t] {
                    x.insert(net.transitions()[t].clone());
                }
            }
        }
        out.insert(x);
    }
    Ok(out)
}

/// Conflict-free, left-closed event sets of an occurrence net. No class
/// check is made.
pub fn occurrence_configurations(net: &InhibitorNet) -> ConfigurationSet {
    let n = net.transitions().len();
    let causes = occurrence_causes_ix(net);
    let conflict = occurrence_conflict_ix(net);
    let start: Vec<bool> = vec![false; n];
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for e in 0..n {
            let addable = !x[e]
                && !conflict[e][e]
                && (0..n).all(|c| !causes[e][c] || x[c])
                && (0..n).all(|y| !x[y] || !conflict[e][y]);
            if addable {
                let mut next = x.clone();
                next[e] = true;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen.into_iter()
        .map(|x| (0..n).filter(|&e| x[e]).map(|e| net.transitions()[e].clone()).collect())
        .collect()
}

fn require(net: &InhibitorNet, class: NetClass, partition: Option<&BackwardPartition>) -> Result<(), ClassError> {
    let report = recognize(net, class, partition, &ClauseOptions::all());
    match report.first_failure() {
        None => Ok(()),
        Some(f) => Err(ClassError::NotInClass {
            class,
            clause: f.clause.to_string(),
        }),
    }
}

/// Configurations of a net of the given class. The net must pass the
/// class recognizer. Reversible causal nets without an explicit partition
/// have it inferred.
pub fn configurations_net(
    net: &InhibitorNet,
    class: NetClass,
    partition: Option<&BackwardPartition>,
) -> Result<ConfigurationSet, ClassError> {
    match class {
        NetClass::Ipt => Err(ClassError::NoConfigurations(class)),
        NetClass::Pcn | NetClass::Cn => {
            require(net, class, None)?;
            marking_projection(net, &BackwardPartition::forward_only(net))
        }
        NetClass::Rcn => {
            let inferred;
            let p = match partition {
                Some(p) => p,
                None => {
                    inferred = infer_backward_partition(net)?;
                    &inferred
                }
            };
            require(net, class, Some(p))?;
            marking_projection(net, p)
        }
        NetClass::On => {
            require(net, class, None)?;
            Ok(occurrence_configurations(net))
        }
    }
}

/// `m_X = m − flt(pre X) + flt(post X)` for a configuration `X`.
pub fn marking_of_configuration(
    net: &InhibitorNet,
    class: NetClass,
    partition: Option<&BackwardPartition>,
    x: &Configuration,
) -> Result<Marking, ClassError> {
    if !configurations_net(net, class, partition)?.contains(x) {
        return Err(ClassError::NotAConfiguration(show_set(x)));
    }
    let mut counts: Vec<i64> = net.initial_ix().iter().map(|&c| i64::from(c)).collect();
    for t in x {
        let i = net.transition_index(t).expect("configuration of this net");
        for &s in net.pre_ix(i) {
            counts[s] -= 1;
        }
        for &s in net.post_ix(i) {
            counts[s] += 1;
        }
    }
    let mut m = Marking::new();
    for (s, c) in counts.into_iter().enumerate() {
        if c > 0 {
            m.add(&net.places()[s], c as u32);
        }
    }
    Ok(m)
}
