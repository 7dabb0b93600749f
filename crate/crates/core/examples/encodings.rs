//! Translating between event structures and nets, and back.

use revnets::classes::is_occurrence_net;
use revnets::classes::NetClass;
use revnets::encode::{on_to_cn, pcn_to_on, pcn_to_ppes, ppes_to_pcn, rcn_to_rpes, rpes_to_rcn};
use revnets::fixtures;
use revnets::format::{serialize_es, serialize_net, EsDocument, EsKind, NetDocument};

fn main() {
    let pes = fixtures::ppes_to_pcn_example();
    let net = ppes_to_pcn(pes.core());
    print!("{}", serialize_net(&NetDocument::new(NetClass::Cn, net.clone())));
    let back = pcn_to_ppes(&net).unwrap();
    println!(
        "same configurations: {}",
        back.configurations() == pes.core().configurations()
    );

    let (rcn, partition) = rpes_to_rcn(&fixtures::p1().structure);
    print!(
        "{}",
        serialize_net(&NetDocument::with_partition(rcn.clone(), &partition))
    );
    let rp = rcn_to_rpes(&rcn, &partition).unwrap();
    print!("{}", serialize_es(&EsDocument::new(EsKind::Rpes, rp)));

    let c1 = fixtures::net("c1.net").net;
    let on = pcn_to_on(&c1);
    println!(
        "occurrence net of c1 is an occurrence net: {}",
        is_occurrence_net(&on).is_member()
    );
    let cn = on_to_cn(&on).unwrap();
    println!(
        "and back: {} places, {} transitions",
        cn.places().len(),
        cn.transitions().len()
    );
}
