//! Brute-force oracles written straight from the definitions, used to check
//! the library's optimised enumerations.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use revnets::es::{ConfigurationSet, EventStructureCore, ReversiblePes};
use revnets::net::InhibitorNet;

pub type Set = BTreeSet<String>;
pub type Rel = BTreeSet<(String, String)>;

pub fn set(names: &[&str]) -> Set {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn rel(pairs: &[(&str, &str)]) -> Rel {
    pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

pub fn confs(sets: &[&[&str]]) -> ConfigurationSet {
    sets.iter().map(|s| set(s)).collect()
}

pub fn subsets(items: &Set) -> Vec<Set> {
    let v: Vec<&String> = items.iter().collect();
    (0u64..1 << v.len())
        .map(|mask| {
            (0..v.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| v[i].clone())
                .collect()
        })
        .collect()
}

pub fn closure(r: &Rel) -> Rel {
    let mut out = r.clone();
    loop {
        let mut added = Vec::new();
        for (a, b) in &out {
            for (c, d) in &out {
                if b == c && !out.contains(&(a.clone(), d.clone())) {
                    added.push((a.clone(), d.clone()));
                }
            }
        }
        if added.is_empty() {
            return out;
        }
        out.extend(added);
    }
}

pub fn conflicting(core: &EventStructureCore, a: &str, b: &str) -> bool {
    core.conflict()
        .iter()
        .any(|(x, y)| (x == a && y == b) || (x == b && y == a))
}

pub fn conflict_free(core: &EventStructureCore, x: &Set) -> bool {
    x.iter().all(|a| x.iter().all(|b| !conflicting(core, a, b)))
}

/// Conflict-free, causally left-closed subsets.
pub fn ppes_configurations(core: &EventStructureCore) -> ConfigurationSet {
    let lt = closure(core.causality());
    subsets(core.events())
        .into_iter()
        .filter(|x| conflict_free(core, x))
        .filter(|x| lt.iter().all(|(a, b)| !x.contains(b) || x.contains(a)))
        .collect()
}

/// The four enabling clauses of a reversible step `A ∪ ~B` at `X`.
pub fn rpes_enabled(rp: &ReversiblePes, x: &Set, a: &Set, b: &Set) -> bool {
    let core = rp.core();
    let lt = closure(core.causality());
    let xa: Set = x.union(a).cloned().collect();
    let x_minus_b: Set = x.difference(b).cloned().collect();
    if !a.is_disjoint(x) || !b.is_subset(x) || !b.is_subset(rp.undoable()) || !conflict_free(core, &xa) {
        return false;
    }
    let causes_ok = a
        .iter()
        .all(|e| lt.iter().filter(|(_, t)| t == e).all(|(c, _)| x_minus_b.contains(c)));
    let rev_ok = b.iter().all(|u| {
        let keep: Set = x.iter().filter(|e| !b.contains(*e) || *e == u).cloned().collect();
        rp.rev_causality()
            .iter()
            .filter(|(_, v)| v == u)
            .all(|(e, _)| keep.contains(e))
    });
    let prevent_ok = b.iter().all(|u| {
        rp.prevention()
            .iter()
            .filter(|(_, v)| v == u)
            .all(|(e, _)| !xa.contains(e))
    });
    causes_ok && rev_ok && prevent_ok
}

pub fn rpes_configurations(rp: &ReversiblePes) -> ConfigurationSet {
    let mut seen: BTreeSet<Set> = BTreeSet::new();
    let mut queue = VecDeque::from([Set::new()]);
    seen.insert(Set::new());
    while let Some(x) = queue.pop_front() {
        let outside: Set = rp.events().difference(&x).cloned().collect();
        let undo: Set = x.intersection(rp.undoable()).cloned().collect();
        for a in subsets(&outside) {
            for b in subsets(&undo) {
                if (a.is_empty() && b.is_empty()) || !rpes_enabled(rp, &x, &a, &b) {
                    continue;
                }
                let y: Set = x.difference(&b).chain(a.iter()).cloned().collect();
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Least symmetric conflict containing `#` and inherited along `<`.
pub fn hereditary_conflict(core: &EventStructureCore) -> Rel {
    let lt = closure(core.causality());
    let mut out: Rel = core
        .conflict()
        .iter()
        .flat_map(|(a, b)| [(a.clone(), b.clone()), (b.clone(), a.clone())])
        .collect();
    loop {
        let mut added = Vec::new();
        for (a, b) in &out {
            for (c, d) in &lt {
                if b == c && !out.contains(&(a.clone(), d.clone())) {
                    added.push((a.clone(), d.clone()));
                    added.push((d.clone(), a.clone()));
                }
            }
        }
        if added.is_empty() {
            return out;
        }
        out.extend(added);
    }
}

pub fn sustained(rp: &ReversiblePes) -> Rel {
    closure(rp.core().causality())
        .into_iter()
        .filter(|(e, f)| !rp.undoable().contains(e) || rp.prevention().contains(&(f.clone(), e.clone())))
        .collect()
}

pub type Tokens = BTreeMap<String, u32>;

pub fn initial(net: &InhibitorNet) -> Tokens {
    net.initial_marking().iter().map(|(p, n)| (p.clone(), n)).collect()
}

/// Enabling of a step: presets covered, inhibitor places empty and not
/// refilled by another member of the step.
pub fn step_enabled(net: &InhibitorNet, m: &Tokens, step: &[&str]) -> bool {
    let mut need: Tokens = BTreeMap::new();
    for t in step {
        for p in net.preset(t).unwrap() {
            *need.entry(p).or_default() += 1;
        }
    }
    if need.iter().any(|(p, n)| m.get(p).copied().unwrap_or(0) < *n) {
        return false;
    }
    step.iter().all(|t| {
        net.inhibset(t).unwrap().iter().all(|s| {
            m.get(s).copied().unwrap_or(0) == 0
                && step
                    .iter()
                    .filter(|u| *u != t)
                    .all(|u| !net.postset(u).unwrap().contains(s))
        })
    })
}

pub fn fire(net: &InhibitorNet, m: &Tokens, step: &[&str]) -> Tokens {
    let mut next = m.clone();
    for t in step {
        for p in net.preset(t).unwrap() {
            *next.get_mut(&p).unwrap() -= 1;
        }
    }
    for t in step {
        for p in net.postset(t).unwrap() {
            *next.entry(p).or_default() += 1;
        }
    }
    next.retain(|_, n| *n > 0);
    next
}

pub fn reachable(net: &InhibitorNet) -> BTreeSet<Tokens> {
    let mut seen = BTreeSet::from([initial(net)]);
    let mut queue = VecDeque::from([initial(net)]);
    while let Some(m) = queue.pop_front() {
        for t in net.transitions() {
            if step_enabled(net, &m, &[t]) {
                let next = fire(net, &m, &[t]);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// Multisets of transitions fired along executions of at most `depth`
/// steps.
pub fn states(net: &InhibitorNet, depth: usize) -> BTreeSet<Tokens> {
    let mut out = BTreeSet::new();
    let mut frontier: BTreeSet<(Tokens, Tokens)> = BTreeSet::from([(initial(net), Tokens::new())]);
    for round in 0..=depth {
        let mut next = BTreeSet::new();
        for (m, bag) in &frontier {
            out.insert(bag.clone());
            if round == depth {
                continue;
            }
            for step in subsets(&transitions(net)).into_iter().filter(|s| !s.is_empty()) {
                let step: Vec<&str> = step.iter().map(String::as_str).collect();
                if step_enabled(net, m, &step) {
                    let mut b = bag.clone();
                    for t in &step {
                        *b.entry(t.to_string()).or_default() += 1;
                    }
                    next.insert((fire(net, m, &step), b));
                }
            }
        }
        frontier = next;
    }
    out
}

pub fn lessdot(net: &InhibitorNet, forward: &Set) -> Rel {
    let mut out = Rel::new();
    for t in forward {
        for u in forward {
            if !net.preset(t).unwrap().is_disjoint(&net.inhibset(u).unwrap()) {
                out.insert((t.clone(), u.clone()));
            }
        }
    }
    out
}

pub fn direct_conflict(net: &InhibitorNet, forward: &Set) -> Rel {
    let mut out = Rel::new();
    for t in forward {
        for u in forward {
            if t != u && !net.preset(t).unwrap().is_disjoint(&net.preset(u).unwrap()) {
                out.insert((t.clone(), u.clone()));
            }
        }
    }
    out
}

pub fn transitions(net: &InhibitorNet) -> Set {
    net.transitions().iter().cloned().collect()
}

/// `{ t ∈ forward | pre t ∩ m ≠ ∅ }` is the not-yet-fired part; a
/// configuration is the forward transitions whose preset is empty in `m`.
pub fn marking_configurations(net: &InhibitorNet, forward: &Set) -> ConfigurationSet {
    reachable(net)
        .into_iter()
        .map(|m| {
            forward
                .iter()
                .filter(|t| net.postset(t).unwrap().iter().any(|p| m.contains_key(p)))
                .cloned()
                .collect::<Set>()
        })
        .collect()
}
