use std::collections::BTreeSet;

use super::partition::private_places;
use super::relations::{conflict_ix, forward_mask, lessdot_ix, meets, occurrence_conflict_ix, sustained_ix, Matrix};
use super::{infer_backward_partition, BackwardPartition, ClauseResult, ClauseStatus, NetClass, NetClassReport};
use crate::net::{InhibitorNet, Safety};

pub const PCN_CLAUSES: &[&str] = &[
    "safe",
    "preset-initial",
    "single-output",
    "inhibitor-source",
    "private-precondition",
    "causality-order",
    "causes-consistent",
];

pub const CN_CLAUSES: &[&str] = &[
    "safe",
    "preset-initial",
    "single-output",
    "inhibitor-source",
    "private-precondition",
    "causality-order",
    "causes-consistent",
    "conflict-saturated",
];

pub const ON_CLAUSES: &[&str] = &[
    "no-inhibitors",
    "acyclic",
    "safe",
    "single-producer",
    "initial-unproduced",
    "rooted",
    "finite-past",
    "conflict-irreflexive",
];

pub const RCN_CLAUSES: &[&str] = &[
    "partition",
    "forward-pcn",
    "reverser-shape",
    "reverse-causes-consistent",
    "no-self-prevention",
    "sustained-transitive",
    "sustained-heredity",
];

/// Distinct markings explored before a safety check gives up.
const SAFETY_BOUND: usize = 1 << 16;

/// Which recognizer clauses to evaluate. All are on by default.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClauseOptions {
    disabled: BTreeSet<String>,
}

impl ClauseOptions {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn disable(mut self, clause: &str) -> Self {
        self.disabled.insert(clause.to_string());
        self
    }

    pub fn is_enabled(&self, clause: &str) -> bool {
        !self.disabled.contains(clause)
    }
}

type Failure = Option<(Vec<String>, String)>;

struct Collector<'a> {
    options: &'a ClauseOptions,
    out: Vec<ClauseResult>,
}

impl Collector<'_> {
    fn check(&mut self, clause: &'static str, run: impl FnOnce() -> Failure) {
        let (status, witness, detail) = if !self.options.is_enabled(clause) {
            (ClauseStatus::Skipped, Vec::new(), String::new())
        } else {
            match run() {
                None => (ClauseStatus::Pass, Vec::new(), String::new()),
                Some((w, d)) => (ClauseStatus::Fail, w, d),
            }
        };
        self.out.push(ClauseResult {
            clause,
            status,
            witness,
            detail,
        });
    }
}

fn names(net: &InhibitorNet, ts: &[usize]) -> Vec<String> {
    ts.iter().map(|&t| net.transitions()[t].clone()).collect()
}

fn place(net: &InhibitorNet, s: usize) -> String {
    net.places()[s].clone()
}

fn tr(net: &InhibitorNet, t: usize) -> String {
    net.transitions()[t].clone()
}

fn safe_clause(net: &InhibitorNet) -> Failure {
    match net.is_safe(SAFETY_BOUND) {
        Safety::Safe => None,
        Safety::Unsafe { marking } => Some((
            marking.iter().filter(|(_, c)| *c > 1).map(|(p, _)| p.clone()).collect(),
            format!("reachable marking {marking} is not a set"),
        )),
        Safety::Inconclusive { explored } => Some((Vec::new(), format!("safety undecided after {explored} markings"))),
    }
}

/// Cases of `t ♮ t' ⋖ t''` (or `⋘`) without `t ♮ t''`.
fn heredity_failure(net: &InhibitorNet, conflict: &Matrix, along: &Matrix, what: &str) -> Failure {
    let n = conflict.len();
    for t in 0..n {
        for t1 in 0..n {
            if !conflict[t][t1] {
                continue;
            }
            for t2 in 0..n {
                if along[t1][t2] && t2 != t && !conflict[t][t2] {
                    return Some((
                        names(net, &[t, t1, t2]),
                        format!(
                            "{} ♮ {} {what} {} but not {} ♮ {}",
                            tr(net, t),
                            tr(net, t1),
                            tr(net, t2),
                            tr(net, t),
                            tr(net, t2)
                        ),
                    ));
                }
            }
        }
    }
    None
}

fn pcn_clauses(net: &InhibitorNet, options: &ClauseOptions, saturated: bool) -> Vec<ClauseResult> {
    let n = net.transitions().len();
    let producers = net.producers_ix();
    let consumers = net.consumers_ix();
    let initial = net.initial_ix();
    let all = vec![true; n];
    let ld = lessdot_ix(net, &all);
    let conflict = conflict_ix(net, &all);
    let mut c = Collector {
        options,
        out: Vec::new(),
    };

    c.check("safe", || safe_clause(net));
    c.check("preset-initial", || {
        for t in 0..n {
            for &s in net.pre_ix(t) {
                if initial[s] == 0 {
                    return Some((
                        vec![place(net, s), tr(net, t)],
                        format!("preset place {} is not initially marked", place(net, s)),
                    ));
                }
                if !producers[s].is_empty() {
                    return Some((
                        vec![place(net, s), tr(net, t)],
                        format!(
                            "preset place {} is produced by {}",
                            place(net, s),
                            names(net, &producers[s]).join(", ")
                        ),
                    ));
                }
            }
        }
        None
    });
    c.check("single-output", || {
        for t in 0..n {
            let post = net.post_ix(t);
            if post.len() != 1 {
                return Some((
                    vec![tr(net, t)],
                    format!("{} has {} output places", tr(net, t), post.len()),
                ));
            }
            let s = post[0];
            if initial[s] > 0 {
                return Some((
                    vec![place(net, s)],
                    format!("output place {} is initially marked", place(net, s)),
                ));
            }
            if producers[s] != [t] {
                return Some((
                    vec![place(net, s)],
                    format!("output place {} has several producers", place(net, s)),
                ));
            }
            if !consumers[s].is_empty() {
                return Some((
                    vec![place(net, s)],
                    format!(
                        "output place {} is consumed by {}",
                        place(net, s),
                        names(net, &consumers[s]).join(", ")
                    ),
                ));
            }
        }
        None
    });
    c.check("inhibitor-source", || {
        for t in 0..n {
            for &s in net.inhib_ix(t) {
                if !consumers[s].iter().any(|&u| u != t) {
                    return Some((
                        vec![place(net, s), tr(net, t)],
                        format!(
                            "inhibitor place {} of {} is in no other transition's preset",
                            place(net, s),
                            tr(net, t)
                        ),
                    ));
                }
            }
        }
        None
    });
    c.check("private-precondition", || {
        (0..n)
            .find(|&t| private_places(net, &consumers, t).is_empty())
            .map(|t| {
                (
                    vec![tr(net, t)],
                    format!("every preset place of {} is shared", tr(net, t)),
                )
            })
    });
    c.check("causality-order", || {
        for t in 0..n {
            if ld[t][t] {
                return Some((vec![tr(net, t)], format!("{} ⋖ {}", tr(net, t), tr(net, t))));
            }
        }
        for t in 0..n {
            for u in 0..n {
                if t != u && ld[t][u] && ld[u][t] {
                    return Some((
                        names(net, &[t, u]),
                        format!("{} ⋖ {} ⋖ {} is a cycle", tr(net, t), tr(net, u), tr(net, t)),
                    ));
                }
            }
        }
        for t in 0..n {
            for u in 0..n {
                if !ld[t][u] {
                    continue;
                }
                for v in 0..n {
                    if ld[u][v] && !ld[t][v] {
                        return Some((
                            names(net, &[t, u, v]),
                            format!(
                                "{} ⋖ {} ⋖ {} but not {} ⋖ {}",
                                tr(net, t),
                                tr(net, u),
                                tr(net, v),
                                tr(net, t),
                                tr(net, v)
                            ),
                        ));
                    }
                }
            }
        }
        None
    });
    c.check("causes-consistent", || {
        for t in 0..n {
            let causes: Vec<usize> = (0..n).filter(|&u| ld[u][t]).collect();
            for &u in &causes {
                if conflict[u][t] {
                    return Some((
                        names(net, &[t, u]),
                        format!("{} shares a preset place with its cause {}", tr(net, t), tr(net, u)),
                    ));
                }
                for &v in &causes {
                    if conflict[u][v] {
                        return Some((
                            names(net, &[t, u, v]),
                            format!(
                                "causes {} and {} of {} are in conflict",
                                tr(net, u),
                                tr(net, v),
                                tr(net, t)
                            ),
                        ));
                    }
                }
            }
        }
        None
    });
    if saturated {
        c.check("conflict-saturated", || heredity_failure(net, &conflict, &ld, "⋖"));
    }
    c.out
}

pub fn is_pcn(net: &InhibitorNet) -> NetClassReport {
    recognize(net, NetClass::Pcn, None, &ClauseOptions::all())
}

pub fn is_cn(net: &InhibitorNet) -> NetClassReport {
    recognize(net, NetClass::Cn, None, &ClauseOptions::all())
}

pub fn is_occurrence_net(net: &InhibitorNet) -> NetClassReport {
    recognize(net, NetClass::On, None, &ClauseOptions::all())
}

pub fn is_rcn(net: &InhibitorNet, partition: &BackwardPartition) -> NetClassReport {
    recognize(net, NetClass::Rcn, Some(partition), &ClauseOptions::all())
}

/// Run the recognizer for `class`. For reversible causal nets the
/// partition is inferred when not given.
pub fn recognize(
    net: &InhibitorNet,
    class: NetClass,
    partition: Option<&BackwardPartition>,
    options: &ClauseOptions,
) -> NetClassReport {
    let clauses = match class {
        NetClass::Ipt => Vec::new(),
        NetClass::Pcn => pcn_clauses(net, options, false),
        NetClass::Cn => pcn_clauses(net, options, true),
        NetClass::On => on_clauses(net, options),
        NetClass::Rcn => rcn_clauses(net, partition, options),
    };
    NetClassReport { class, clauses }
}

fn on_clauses(net: &InhibitorNet, options: &ClauseOptions) -> Vec<ClauseResult> {
    let producers = net.producers_ix();
    let initial = net.initial_ix();
    let mut c = Collector {
        options,
        out: Vec::new(),
    };
    c.check("no-inhibitors", || {
        net.inhibitor_arcs()
            .into_iter()
            .next()
            .map(|(s, t)| (vec![s.clone(), t.clone()], format!("inhibitor arc {s} -o {t}")))
    });
    c.check("acyclic", || {
        let cycle = net.flow_cycle_nodes();
        (!cycle.is_empty()).then(|| {
            let detail = format!("the flow relation has a cycle through {}", cycle.join(", "));
            (cycle, detail)
        })
    });
    c.check("safe", || safe_clause(net));
    c.check("single-producer", || {
        (0..net.places().len()).find(|&s| producers[s].len() > 1).map(|s| {
            (
                vec![place(net, s)],
                format!(
                    "{} has producers {}",
                    place(net, s),
                    names(net, &producers[s]).join(", ")
                ),
            )
        })
    });
    c.check("initial-unproduced", || {
        (0..net.places().len())
            .find(|&s| initial[s] > 0 && !producers[s].is_empty())
            .map(|s| {
                (
                    vec![place(net, s)],
                    format!("initial condition {} has a producer", place(net, s)),
                )
            })
    });
    c.check("rooted", || {
        // Conditions reachable along the flow from the initial ones.
        let mut reached: Vec<bool> = initial.iter().map(|&c| c > 0).collect();
        loop {
            let mut changed = false;
            for t in 0..net.transitions().len() {
                if net.pre_ix(t).iter().any(|&s| reached[s]) {
                    for &s in net.post_ix(t) {
                        if !reached[s] {
                            reached[s] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        (0..net.places().len()).find(|&s| !reached[s]).map(|s| {
            (
                vec![place(net, s)],
                format!("{} lies above no initial condition", place(net, s)),
            )
        })
    });
    c.check("finite-past", || None);
    c.check("conflict-irreflexive", || {
        let conflict = occurrence_conflict_ix(net);
        (0..net.transitions().len())
            .find(|&e| conflict[e][e])
            .map(|e| (vec![tr(net, e)], format!("{} is in conflict with itself", tr(net, e))))
    });
    c.out
}

fn rcn_clauses(
    net: &InhibitorNet,
    partition: Option<&BackwardPartition>,
    options: &ClauseOptions,
) -> Vec<ClauseResult> {
    let mut c = Collector {
        options,
        out: Vec::new(),
    };
    let inferred;
    let partition = match partition {
        Some(p) => Ok(p),
        None => match infer_backward_partition(net) {
            Ok(p) => {
                inferred = p;
                Ok(&inferred)
            }
            Err(e) => Err(e),
        },
    };
    let partition = match partition {
        Ok(p) => p,
        Err(e) => {
            c.check("partition", || Some((Vec::new(), e.to_string())));
            for &clause in &RCN_CLAUSES[1..] {
                c.check(clause, || Some((Vec::new(), "no backward partition".to_string())));
            }
            return c.out;
        }
    };
    let n = net.transitions().len();
    let forward = forward_mask(net, Some(partition));
    let backward: Vec<usize> = (0..n).filter(|&t| !forward[t]).collect();
    let fwd: Vec<usize> = (0..n).filter(|&t| forward[t]).collect();
    let consumers = net.consumers_ix();

    c.check("partition", || {
        let unknown: Vec<String> = partition
            .backward()
            .iter()
            .filter(|b| !net.is_transition(b))
            .cloned()
            .collect();
        (!unknown.is_empty()).then(|| (unknown, "backward transitions not in the net".to_string()))
    });
    c.check("forward-pcn", || {
        let keep: BTreeSet<String> = fwd.iter().map(|&t| tr(net, t)).collect();
        let sub = net.restrict_transitions(&keep);
        let report = NetClassReport {
            class: NetClass::Pcn,
            clauses: pcn_clauses(&sub, options, false),
        };
        report.first_failure().map(|f| {
            let mut witness = vec![f.clause.to_string()];
            witness.extend(f.witness.iter().cloned());
            (witness, format!("forward subnet fails `{}`: {}", f.clause, f.detail))
        })
    });
    c.check("reverser-shape", || {
        for (i, &r1) in backward.iter().enumerate() {
            for &r2 in &backward[i + 1..] {
                if meets(net.pre_ix(r1), net.pre_ix(r2)) {
                    return Some((
                        names(net, &[r1, r2]),
                        format!("{} and {} share a preset place", tr(net, r1), tr(net, r2)),
                    ));
                }
            }
        }
        for &r in &backward {
            let matches: Vec<usize> = fwd
                .iter()
                .copied()
                .filter(|&t| {
                    net.post_ix(t) == net.pre_ix(r)
                        && net.pre_ix(t) == net.post_ix(r)
                        && meets(&private_places(net, &consumers, t), net.inhib_ix(r))
                })
                .collect();
            if matches.len() != 1 {
                let mut witness = vec![tr(net, r)];
                witness.extend(names(net, &matches));
                return Some((
                    witness,
                    format!("{} reverses {} forward transitions", tr(net, r), matches.len()),
                ));
            }
        }
        None
    });
    c.check("reverse-causes-consistent", || {
        for &r in &backward {
            let k: Vec<usize> = fwd
                .iter()
                .copied()
                .filter(|&t| meets(net.inhib_ix(r), net.pre_ix(t)))
                .collect();
            for (i, &t1) in k.iter().enumerate() {
                for &t2 in &k[i + 1..] {
                    if meets(net.pre_ix(t1), net.pre_ix(t2)) {
                        return Some((
                            names(net, &[r, t1, t2]),
                            format!(
                                "reverse causes {} and {} of {} share a preset place",
                                tr(net, t1),
                                tr(net, t2),
                                tr(net, r)
                            ),
                        ));
                    }
                }
            }
        }
        None
    });
    c.check("no-self-prevention", || {
        for &r in &backward {
            for &t in &fwd {
                if meets(net.pre_ix(t), net.inhib_ix(r)) && meets(net.post_ix(t), net.inhib_ix(r)) {
                    return Some((
                        names(net, &[t, r]),
                        format!("{} both causes and prevents {}", tr(net, t), tr(net, r)),
                    ));
                }
            }
        }
        None
    });
    let ld = lessdot_ix(net, &forward);
    let sus = sustained_ix(net, &forward, &ld);
    c.check("sustained-transitive", || {
        for t in 0..n {
            for u in 0..n {
                if !sus[t][u] {
                    continue;
                }
                for v in 0..n {
                    if sus[u][v] && !sus[t][v] {
                        return Some((
                            names(net, &[t, u, v]),
                            format!(
                                "{} ⋘ {} ⋘ {} but not {} ⋘ {}",
                                tr(net, t),
                                tr(net, u),
                                tr(net, v),
                                tr(net, t),
                                tr(net, v)
                            ),
                        ));
                    }
                }
            }
        }
        None
    });
    c.check("sustained-heredity", || {
        let conflict = conflict_ix(net, &forward);
        heredity_failure(net, &conflict, &sus, "⋘")
    });
    c.out
}
