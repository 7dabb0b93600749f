mod common;

use common::{rel, set};
use revnets::classes::{is_cn, is_occurrence_net, is_pcn, is_rcn, BackwardPartition};
use revnets::encode::{
    conflict_place, done_place, on_to_cn, pcn_to_on, pcn_to_ppes, pending_place, ppes_to_pcn, rcn_to_rpes, rpes_to_rcn,
};
use revnets::es::{EventStructureCore, ReversiblePes};
use revnets::fixtures;
use revnets::net::{find_isomorphism, InhibitorNet, Marking};

fn inhibitors(net: &InhibitorNet) -> common::Rel {
    net.inhibitor_arcs()
}

#[test]
fn place_names() {
    assert_eq!(pending_place("e"), "(*,e)");
    assert_eq!(done_place("e"), "(e,*)");
    assert_eq!(conflict_place("b", "a"), "({a,b},#)");
}

#[test]
fn ppes_encoding_shape() {
    let net = ppes_to_pcn(fixtures::ppes_to_pcn_example().core());
    assert_eq!(net.places().len(), 10);
    assert_eq!(net.transitions().len(), 4);
    assert_eq!(inhibitors(&net), rel(&[("(*,b)", "c")]));
    assert_eq!(
        net.initial_marking(),
        Marking::from_places(["(*,a)", "(*,b)", "(*,c)", "(*,d)", "({a,b},#)", "({a,c},#)"])
    );
    assert_eq!(net.preset("a").unwrap(), set(&["(*,a)", "({a,b},#)", "({a,c},#)"]));
    assert_eq!(net.postset("a").unwrap(), set(&["(a,*)"]));
    assert!(is_pcn(&net).is_member());
    assert!(is_cn(&net).is_member());
}

#[test]
fn encoding_uses_transitive_causality() {
    let mut core = EventStructureCore::new();
    for e in ["a", "b", "c"] {
        core.add_event(e).unwrap();
    }
    core.add_cause("a", "b").unwrap();
    core.add_cause("b", "c").unwrap();
    let net = ppes_to_pcn(&core);
    assert_eq!(inhibitors(&net), rel(&[("(*,a)", "b"), ("(*,a)", "c"), ("(*,b)", "c")]));
}

#[test]
fn empty_structure_gives_empty_net() {
    let net = ppes_to_pcn(&EventStructureCore::new());
    assert!(net.places().is_empty() && net.transitions().is_empty());
    assert!(pcn_to_ppes(&net).unwrap().events().is_empty());
}

#[test]
fn pcn_back_to_structure() {
    let c1 = pcn_to_ppes(&fixtures::net("c1.net").net).unwrap();
    assert_eq!(c1.causality(), &rel(&[("b", "c")]));
    assert_eq!(c1.conflict(), &rel(&[("a", "b")]));
    let c2 = pcn_to_ppes(&fixtures::net("c2.net").net).unwrap();
    assert_eq!(c2.conflict(), &rel(&[("a", "b"), ("a", "c")]));
    assert!(c2.is_pes());
}

#[test]
fn ppes_round_trip_is_identity_up_to_transitivity() {
    for doc in [fixtures::ppes(), fixtures::ppes_to_pcn_example(), fixtures::pv()] {
        let core = doc.core();
        let back = pcn_to_ppes(&ppes_to_pcn(core)).unwrap();
        assert_eq!(back.events(), core.events());
        assert_eq!(back.causality(), &core.transitive_causality());
        assert_eq!(back.conflict(), core.conflict());
    }
}

#[test]
fn rpes_encoding_of_p1() {
    let (net, p) = rpes_to_rcn(&fixtures::p1().structure);
    assert_eq!(p.backward(), &set(&["~b", "~c"]));
    assert_eq!(net.preset("~b").unwrap(), set(&["(b,*)"]));
    assert_eq!(net.postset("~b").unwrap(), set(&["(*,b)", "({a,b},#)"]));
    assert_eq!(net.postset("~c").unwrap(), set(&["(*,c)", "({a,c},#)"]));
    assert_eq!(net.inhibset("~b").unwrap(), set(&["(*,b)", "(c,*)"]));
    assert_eq!(net.inhibset("~c").unwrap(), set(&["(*,c)"]));
    assert_eq!(net, fixtures::net("rcn-p1.net").net);
}

#[test]
fn rpes_encoding_of_p3() {
    let (net, _) = rpes_to_rcn(&fixtures::p3().structure);
    assert!(!net.is_place("({a,c},#)"));
    assert!(net.inhibitor_arcs().contains(&("(*,d)".to_string(), "~c".to_string())));
    assert_eq!(net, fixtures::net("rcn-p3.net").net);
}

#[test]
fn rpes_without_undoable_events_matches_ppes_encoding() {
    for doc in [fixtures::ppes(), fixtures::ppes_to_pcn_example(), fixtures::pv()] {
        let (net, p) = rpes_to_rcn(&doc.structure);
        assert!(p.backward().is_empty());
        assert_eq!(net, ppes_to_pcn(doc.core()));
    }
}

#[test]
fn rcn_back_to_structure() {
    let doc = fixtures::net("rcn-simple.net");
    let rp = rcn_to_rpes(&doc.net, &doc.partition().unwrap()).unwrap();
    let p2 = fixtures::p2().structure;
    assert_eq!(rp.events(), p2.events());
    assert_eq!(rp.undoable(), p2.undoable());
    assert_eq!(rp.core().transitive_causality(), p2.core().transitive_causality());
    assert_eq!(rp.core().conflict(), p2.core().conflict());
    assert_eq!(rp.rev_causality(), p2.rev_causality());
    assert_eq!(rp.prevention(), p2.prevention());
}

fn same_rpes(a: &ReversiblePes, b: &ReversiblePes) {
    assert_eq!(a.events(), b.events());
    assert_eq!(a.undoable(), b.undoable());
    assert_eq!(a.core().transitive_causality(), b.core().transitive_causality());
    assert_eq!(a.core().conflict(), b.core().conflict());
    assert_eq!(a.rev_causality(), b.rev_causality());
    assert_eq!(a.prevention(), b.prevention());
}

#[test]
fn rpes_round_trip() {
    for doc in [
        fixtures::p1(),
        fixtures::p2(),
        fixtures::p3(),
        fixtures::saga(),
        fixtures::saga_closed(),
    ] {
        let (net, p) = rpes_to_rcn(&doc.structure);
        let back = rcn_to_rpes(&net, &p).unwrap();
        same_rpes(&back, &doc.structure);
        let (again, _) = rpes_to_rcn(&back);
        assert!(find_isomorphism(&net, &again).is_some());
    }
}

#[test]
fn rcn_round_trip_on_fixtures() {
    for name in ["rcn-simple.net", "rcn-p1.net", "rcn-p3.net"] {
        let doc = fixtures::net(name);
        let p = doc.partition().unwrap();
        assert!(is_rcn(&doc.net, &p).is_member());
        let (again, _) = rpes_to_rcn(&rcn_to_rpes(&doc.net, &p).unwrap());
        let again_p = BackwardPartition::from_backward(&again, p.backward());
        assert_eq!(
            revnets::classes::configurations_net(&again, revnets::classes::NetClass::Rcn, Some(&again_p)).unwrap(),
            revnets::classes::configurations_net(&doc.net, revnets::classes::NetClass::Rcn, Some(&p)).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn saga_encoding_matches_fixture_up_to_renaming() {
    let (net, _) = rpes_to_rcn(&fixtures::saga().structure);
    assert!(find_isomorphism(&net, &fixtures::net("saga-rcn.net").net).is_some());
}

#[test]
fn occurrence_net_to_causal_net() {
    let cn = on_to_cn(&fixtures::net("on-simple.net").net).unwrap();
    assert!(is_cn(&cn).is_member());
    assert!(find_isomorphism(&cn, &fixtures::net("c2.net").net).is_some());
}

#[test]
fn pcn_to_occurrence_net() {
    let c1 = fixtures::net("c1.net").net;
    let on = pcn_to_on(&c1);
    assert!(on.is_place("(b,c)"));
    assert_eq!(on.preset("c").unwrap(), set(&["s5", "(b,c)"]));
    assert_eq!(on.postset("b").unwrap(), set(&["s4", "(b,c)"]));
    assert!(!on.has_inhibitors());
    assert!(is_occurrence_net(&on).is_member());
    let cn = on_to_cn(&on).unwrap();
    assert!(find_isomorphism(&cn, &fixtures::net("c2.net").net).is_some());
}

#[test]
fn occurrence_place_names_avoid_clashes() {
    let mut b = InhibitorNet::builder();
    b.place("p").place("q").place("(t,u)");
    b.transition("t").consume("p", "t").produce("t", "(t,u)");
    b.transition("u").consume("q", "u").inhibit("p", "u");
    b.mark("p").mark("q");
    let on = pcn_to_on(&b.build().unwrap());
    assert_eq!(on.places().len(), 4);
    assert!(on.postset("t").unwrap().len() == 2);
}
