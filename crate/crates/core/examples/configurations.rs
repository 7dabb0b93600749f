//! Configurations of a reversible event structure, and an undo that happens
//! out of causal order.

use revnets::es::Configuration;
use revnets::fixtures;

fn set(names: &[&str]) -> Configuration {
    names.iter().map(|s| s.to_string()).collect()
}

fn main() {
    let p1 = fixtures::p1().structure;
    println!("configurations of p1:");
    for x in p1.configurations().iter() {
        println!("  {}", revnets::es::show_set(x));
    }

    // In p3, d reverse-causes c and b can be undone while c stays.
    let p3 = fixtures::p3().structure;
    let mut x = Configuration::new();
    for (forward, backward) in [(&["b"][..], &[][..]), (&["c"], &[]), (&[], &["b"]), (&["a"], &[])] {
        x = p3.step(&x, &set(forward), &set(backward)).expect("step is enabled");
        println!("p3 after +{forward:?} -{backward:?}: {}", revnets::es::show_set(&x));
    }

    let at = set(&["b", "c"]);
    for (name, rp) in [("p1", &p1), ("p2", &fixtures::p2().structure)] {
        let ok = rp.enabled(&at, &set(&["d"]), &set(&["c"])).unwrap();
        println!("{name}: {{d, ~c}} enabled at {{b, c}}: {ok}");
    }

    let saga = fixtures::saga().structure;
    println!("saga validation:\n{}", saga.validate());
}
