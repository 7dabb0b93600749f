//! Recognizing net classes, with the witness of the first failing clause.

use revnets::classes::{is_cn, is_pcn, lessdot, recognize, saturate, ClauseOptions};
use revnets::fixtures;
use revnets::net::find_isomorphism;

fn main() {
    let c1 = fixtures::net("c1.net").net;
    println!("{}", is_pcn(&c1));
    println!("{}", is_cn(&c1));
    println!("c1 causality via inhibitors: {:?}", lessdot(&c1, None));

    let sat = saturate(&c1);
    println!("saturated c1 is a causal net: {}", is_cn(&sat).is_member());
    println!(
        "isomorphic to c2: {}",
        find_isomorphism(&sat, &fixtures::net("c2.net").net).is_some()
    );

    let n1 = fixtures::n1().net;
    if let Some(f) = is_pcn(&n1).first_failure() {
        println!("n1 is not pre-causal: {} {:?}", f.clause, f.witness);
    }

    for (path, _) in fixtures::MUTATIONS.iter().take(4) {
        let doc = fixtures::mutation(path);
        let partition = doc.partition().unwrap();
        let report = recognize(&doc.net, doc.kind, Some(&partition), &ClauseOptions::all());
        let first = report.first_failure().unwrap();
        println!("{path}: fails {} at {:?}", first.clause, first.witness);
    }
}
