//! Structures and nets from the literature, bundled as text.
//!
//! Nets keep their `s1, s2, ...` place names where the original drawing
//! named places; the others use the canonical encoding names.

use crate::format::{parse_es, parse_net, EsDocument, NetDocument};

macro_rules! fixture {
    ($name:literal) => {
        ($name, include_str!(concat!("../fixtures/", $name)))
    };
}

/// Every bundled `.es` file as `(file name, text)`.
pub const EVENT_STRUCTURES: &[(&str, &str)] = &[
    fixture!("ppes.es"),
    fixture!("ppes2pcn.es"),
    fixture!("p1.es"),
    fixture!("p2.es"),
    fixture!("p3.es"),
    fixture!("saga.es"),
    fixture!("saga-closed.es"),
    fixture!("pv.es"),
];

/// Every bundled `.net` file as `(file name, text)`.
pub const NETS: &[(&str, &str)] = &[
    fixture!("n1.net"),
    fixture!("c1.net"),
    fixture!("c2.net"),
    fixture!("on-simple.net"),
    fixture!("rcn-simple.net"),
    fixture!("rcn-p1.net"),
    fixture!("rcn-p3.net"),
    fixture!("saga-rcn.net"),
    fixture!("nv.net"),
    fixture!("nv-prevent.net"),
    fixture!("nv-prevent-rev.net"),
];

/// Nets breaking one recognizer clause each. The file name is
/// `<class>-<clause>.net`.
pub const MUTATIONS: &[(&str, &str)] = &[
    fixture!("mutations/pcn-safe.net"),
    fixture!("mutations/pcn-preset-initial.net"),
    fixture!("mutations/pcn-single-output.net"),
    fixture!("mutations/pcn-inhibitor-source.net"),
    fixture!("mutations/pcn-private-precondition.net"),
    fixture!("mutations/pcn-causality-order.net"),
    fixture!("mutations/pcn-causes-consistent.net"),
    fixture!("mutations/cn-conflict-saturated.net"),
    fixture!("mutations/on-no-inhibitors.net"),
    fixture!("mutations/on-acyclic.net"),
    fixture!("mutations/on-safe.net"),
    fixture!("mutations/on-single-producer.net"),
    fixture!("mutations/on-initial-unproduced.net"),
    fixture!("mutations/on-rooted.net"),
    fixture!("mutations/on-conflict-irreflexive.net"),
    fixture!("mutations/rcn-forward-pcn.net"),
    fixture!("mutations/rcn-reverser-shape.net"),
    fixture!("mutations/rcn-reverse-causes-consistent.net"),
    fixture!("mutations/rcn-no-self-prevention.net"),
    fixture!("mutations/rcn-sustained-transitive.net"),
    fixture!("mutations/rcn-sustained-heredity.net"),
];

fn find(set: &[(&'static str, &'static str)], name: &str) -> &'static str {
    set.iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .unwrap_or_else(|| panic!("no bundled fixture `{name}`"))
}

/// Parse a bundled `.es` file by name, e.g. `"p1.es"`.
pub fn structure(name: &str) -> EsDocument {
    parse_es(find(EVENT_STRUCTURES, name)).expect("bundled fixtures parse")
}

/// Parse a bundled `.net` file by name, e.g. `"n1.net"`.
pub fn net(name: &str) -> NetDocument {
    parse_net(find(NETS, name)).expect("bundled fixtures parse")
}

/// Parse a bundled mutation, e.g. `"mutations/pcn-safe.net"`.
pub fn mutation(name: &str) -> NetDocument {
    parse_net(find(MUTATIONS, name)).expect("bundled fixtures parse")
}

/// The pre-prime structure with `b < c` and `a # b`.
pub fn ppes() -> EsDocument {
    structure("ppes.es")
}

/// Its hereditary closure, the input of the pre-causal net example.
pub fn ppes_to_pcn_example() -> EsDocument {
    structure("ppes2pcn.es")
}

/// Causal reversibility: `c` prevents undoing `b`.
pub fn p1() -> EsDocument {
    structure("p1.es")
}

/// `p1` where undoing `c` also needs `d`.
pub fn p2() -> EsDocument {
    structure("p2.es")
}

/// Out-of-causal-order reversibility: `b` can be undone after `c`.
pub fn p3() -> EsDocument {
    structure("p3.es")
}

/// The order/payment saga, verbatim. Its conflict is not inherited along
/// sustained causation, so it does not validate.
pub fn saga() -> EsDocument {
    structure("saga.es")
}

/// The saga with `f # r` added, which validates.
pub fn saga_closed() -> EsDocument {
    structure("saga-closed.es")
}

/// Reads and writes of a shared variable.
pub fn pv() -> EsDocument {
    structure("pv.es")
}

pub fn n1() -> NetDocument {
    net("n1.net")
}
