//! Step semantics of a net with inhibitor arcs.

use revnets::fixtures;
use revnets::net::{StateBound, Step};

fn main() {
    let net = fixtures::n1().net;
    let m0 = net.initial_marking();
    println!("initial marking {m0}");
    for step in net.enabled_steps(&m0, 3).unwrap() {
        println!("  enabled step {:?}", step.transitions());
    }

    match net.fire(&m0, &Step::single("b")) {
        Ok(m) => println!("b fired: {m}"),
        Err(e) => println!("b: {e}"),
    }
    let m1 = net.fire(&m0, &Step::single("a")).unwrap();
    let m2 = net.fire(&m1, &Step::single("b")).unwrap();
    println!("a then b: {m1} -> {m2}");

    println!("reachable markings:");
    for m in net.reachable_markings().unwrap() {
        println!("  {m}");
    }
    println!("states:");
    for s in net.states(StateBound::Exhaustive).unwrap() {
        println!("  {s}");
    }
    println!("safe: {:?}, acyclic: {}", net.is_safe(16), net.is_acyclic());
}
