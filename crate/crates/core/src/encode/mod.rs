//! Translations between event structures and nets.
//!
//! Generated places use the names `(*,e)` (not yet fired), `(e,*)` (fired),
//! `({e,e'},#)` (conflict, names ordered) and `(t,t')` (causal dependency in
//! an occurrence net). Reversers are named `~u`.

use std::collections::BTreeSet;

use crate::classes::{direct_conflict, lessdot, occurrence_causality, occurrence_conflict, BackwardPartition};
use crate::es::{reverser_name, EsError, EventStructureCore, ReversiblePes};
use crate::net::{InhibitorNet, NetBuilder};

pub fn pending_place(e: &str) -> String {
    format!("(*,{e})")
}

pub fn done_place(e: &str) -> String {
    format!("({e},*)")
}

pub fn conflict_place(a: &str, b: &str) -> String {
    let (x, y) = if a <= b { (a, b) } else { (b, a) };
    format!("({{{x},{y}}},#)")
}

fn core_builder(core: &EventStructureCore) -> NetBuilder {
    let mut b = NetBuilder::new();
    for e in core.events() {
        let pending = pending_place(e);
        let done = done_place(e);
        b.place(pending.clone()).place(done.clone()).transition(e.clone());
        b.consume(pending.clone(), e.clone())
            .produce(e.clone(), done)
            .mark(pending);
    }
    for (x, y) in core.conflict() {
        if x == y {
            continue;
        }
        let place = conflict_place(x, y);
        b.place(place.clone()).mark(place.clone());
        b.consume(place.clone(), x.clone()).consume(place, y.clone());
    }
    for (before, after) in core.transitive_causality() {
        b.inhibit(pending_place(&before), after);
    }
    b
}

/// The pre-causal net of a pre-prime event structure.
pub fn ppes_to_pcn(core: &EventStructureCore) -> InhibitorNet {
    core_builder(core).build().expect("encoding yields a well-formed net")
}

fn structure_from_relations(
    events: &[String],
    causality: &BTreeSet<(String, String)>,
    conflict: &BTreeSet<(String, String)>,
) -> Result<EventStructureCore, EsError> {
    let mut core = EventStructureCore::new();
    for e in events {
        core.add_event(e)?;
    }
    for (a, b) in causality {
        core.add_cause(a, b)?;
    }
    for (a, b) in conflict {
        core.add_conflict(a, b)?;
    }
    Ok(core)
}

/// `(T, ⋖, ♮)`. Fails only when a transition name is not a valid event
/// name.
pub fn pcn_to_ppes(net: &InhibitorNet) -> Result<EventStructureCore, EsError> {
    structure_from_relations(net.transitions(), &lessdot(net, None), &direct_conflict(net, None))
}

/// The reversible causal net of a reversible structure, with its backward
/// transitions.
pub fn rpes_to_rcn(rp: &ReversiblePes) -> (InhibitorNet, BackwardPartition) {
    let mut b = core_builder(rp.core());
    let core = rp.core();
    let conflicts_of = |u: &str| -> Vec<String> {
        core.conflict()
            .iter()
            .filter(|(x, y)| x != y && (x == u || y == u))
            .map(|(x, y)| conflict_place(x, y))
            .collect()
    };
    for u in rp.undoable() {
        let r = reverser_name(u);
        b.transition(r.clone());
        b.consume(done_place(u), r.clone());
        b.produce(r.clone(), pending_place(u));
        for place in conflicts_of(u) {
            b.produce(r.clone(), place);
        }
    }
    for (e, u) in rp.rev_causality() {
        b.inhibit(pending_place(e), reverser_name(u));
    }
    for (e, u) in rp.prevention() {
        b.inhibit(done_place(e), reverser_name(u));
    }
    let net = b.build().expect("encoding yields a well-formed net");
    let backward: BTreeSet<String> = rp.undoable().iter().map(|u| reverser_name(u)).collect();
    let partition = BackwardPartition::from_backward(&net, &backward);
    (net, partition)
}

/// The reversible structure of a reversible causal net.
pub fn rcn_to_rpes(net: &InhibitorNet, partition: &BackwardPartition) -> Result<ReversiblePes, EsError> {
    let forward: Vec<String> = partition
        .forward()
        .iter()
        .filter(|t| net.is_transition(t))
        .cloned()
        .collect();
    let core = structure_from_relations(
        &forward,
        &lessdot(net, Some(partition)),
        &direct_conflict(net, Some(partition)),
    )?;
    let mut rp = ReversiblePes::new(core);
    for r in partition.backward() {
        let (Ok(post_r), Ok(inhib_r)) = (net.postset(r), net.inhibset(r)) else {
            continue;
        };
        for u in forward.iter().filter(|t| net.preset(t).ok().as_ref() == Some(&post_r)) {
            rp.add_undoable(u)?;
            for t in &forward {
                let pre_t = net.preset(t).expect("own transition");
                let post_t = net.postset(t).expect("own transition");
                if !pre_t.is_disjoint(&inhib_r) {
                    rp.add_rev_cause(t, u)?;
                }
                if !post_t.is_disjoint(&inhib_r) {
                    rp.add_prevention(t, u)?;
                }
            }
        }
    }
    Ok(rp)
}

/// The causal net of an occurrence net: the pre-causal encoding of its
/// events under the transitive flow order and inherited conflict.
pub fn on_to_cn(net: &InhibitorNet) -> Result<InhibitorNet, EsError> {
    let conflict: BTreeSet<(String, String)> = occurrence_conflict(net).into_iter().filter(|(a, b)| a != b).collect();
    let core = structure_from_relations(net.transitions(), &occurrence_causality(net), &conflict)?;
    Ok(ppes_to_pcn(&core))
}

/// The occurrence net of a pre-causal net: each `t ⋖ t'` becomes a place
/// `(t,t')` produced by `t` and consumed by `t'`; inhibitor arcs are
/// dropped.
pub fn pcn_to_on(net: &InhibitorNet) -> InhibitorNet {
    let mut b = net.to_builder();
    for (s, t) in net.inhibitor_arcs() {
        b.remove_inhibit(&s, &t);
    }
    let mut added = Vec::new();
    for (t, u) in lessdot(net, None) {
        let place = crate::classes::fresh_name(net, &added, format!("({t},{u})"));
        b.place(place.clone());
        b.produce(t, place.clone()).consume(place.clone(), u);
        added.push(place);
    }
    b.build().expect("encoding yields a well-formed net")
}
