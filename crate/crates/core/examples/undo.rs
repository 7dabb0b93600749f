//! Out-of-causal-order undo in a reversible causal net, and why an
//! occurrence-net reverser cannot do the same.

use revnets::analysis::reversible_on_counterexample;
use revnets::fixtures;
use revnets::net::Step;

fn main() {
    let doc = fixtures::net("rcn-p3.net");
    let net = &doc.net;
    let mut m = net.initial_marking();
    for t in ["b", "c", "~b", "a"] {
        m = net.fire(&m, &Step::single(t)).expect("enabled");
        println!("{t:>2}: {m}");
    }
    let v = reversible_on_counterexample();
    println!("{v}");
    for note in &v.notes {
        println!("  {note}");
    }
}
