mod common;

use std::collections::BTreeSet;

use common::set;
use revnets::fixtures;
use revnets::net::{net_equiv, EquivVerdict, InhibitorNet, Marking, NetError, Safety, StateBound, Step, TransitionBag};

fn n1() -> InhibitorNet {
    fixtures::n1().net
}

fn marking(places: &[&str]) -> Marking {
    Marking::from_places(places.iter().copied())
}

fn bag(names: &[&str]) -> TransitionBag {
    TransitionBag::from_names(names.iter().copied())
}

fn single_transition() -> InhibitorNet {
    let mut b = InhibitorNet::builder();
    b.place("p")
        .place("q")
        .transition("t")
        .consume("p", "t")
        .produce("t", "q")
        .mark("p");
    b.build().unwrap()
}

#[test]
fn pre_post_inhib_sets() {
    let net = n1();
    assert_eq!(net.preset("b").unwrap(), set(&["s2", "s3"]));
    assert_eq!(net.postset("b").unwrap(), set(&["s5"]));
    assert_eq!(net.inhibset("b").unwrap(), set(&["s1"]));
    assert!(net.inhibset("a").unwrap().is_empty());
    assert_eq!(single_transition().preset("t").unwrap(), set(&["p"]));
    assert!(matches!(net.preset("zz"), Err(NetError::UnknownNode(_))));
}

#[test]
fn empty_preset_is_rejected() {
    let mut b = InhibitorNet::builder();
    b.place("p").transition("t").produce("t", "p");
    assert!(matches!(b.build(), Err(NetError::EmptyPreset(t)) if t == "t"));
}

#[test]
fn enabling_in_n1() {
    let net = n1();
    let m0 = net.initial_marking();
    assert!(net.step_enabled(&m0, &Step::single("a")).unwrap());
    assert!(net.step_enabled(&m0, &Step::single("c")).unwrap());
    assert!(!net.step_enabled(&m0, &Step::single("b")).unwrap());
    assert!(net.step_enabled(&m0, &Step::new(Vec::<String>::new())).unwrap());
    assert!(net
        .step_enabled(&marking(&["s2", "s3", "s4"]), &Step::single("b"))
        .unwrap());
}

#[test]
fn firing_in_n1() {
    let net = n1();
    let m1 = net.fire(&net.initial_marking(), &Step::single("a")).unwrap();
    assert_eq!(m1, marking(&["s2", "s3", "s4"]));
    assert_eq!(net.fire(&m1, &Step::single("c")).unwrap(), marking(&["s2", "s4", "s6"]));
    assert_eq!(net.fire(&m1, &Step::new(Vec::<String>::new())).unwrap(), m1);
    match net.fire(&net.initial_marking(), &Step::single("b")) {
        Err(NetError::NotEnabled(d)) => {
            assert_eq!(d.inhibited_by, vec!["s1".to_string()]);
            assert!(d.missing_tokens.is_empty());
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn firing_matches_oracle_on_every_step() {
    for (name, _) in fixtures::NETS {
        let net = fixtures::net(name).net;
        for m in common::reachable(&net) {
            let marking = Marking::from_places(m.keys().map(String::as_str));
            let names: Vec<String> = net.transitions().to_vec();
            for mask in 1u32..(1 << names.len().min(6)) {
                let step: Vec<&str> = (0..names.len().min(6))
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| names[i].as_str())
                    .collect();
                let expected = common::step_enabled(&net, &m, &step);
                let s = Step::new(step.iter().copied());
                assert_eq!(
                    net.step_enabled(&marking, &s).unwrap(),
                    expected,
                    "{name} {m:?} {step:?}"
                );
                if expected {
                    let next = net.fire(&marking, &s).unwrap();
                    let want = common::fire(&net, &m, &step);
                    assert_eq!(next, Marking::from_places(want.keys().map(String::as_str)));
                }
            }
        }
    }
}

#[test]
fn enabled_steps_in_n1() {
    let net = n1();
    let m0 = net.initial_marking();
    let steps = net.enabled_steps(&m0, 2).unwrap();
    assert_eq!(steps, vec![Step::single("a"), Step::single("c"), Step::new(["a", "c"])]);
    assert_eq!(
        net.enabled_steps(&m0, 1).unwrap(),
        vec![Step::single("a"), Step::single("c")]
    );
    assert!(net.enabled_steps(&marking(&["s4", "s5"]), 3).unwrap().is_empty());
}

#[test]
fn reachable_markings_of_n1() {
    let expected: BTreeSet<Marking> = [
        &["s1", "s2", "s3"][..],
        &["s2", "s3", "s4"],
        &["s1", "s2", "s6"],
        &["s4", "s5"],
        &["s2", "s4", "s6"],
    ]
    .iter()
    .map(|m| marking(m))
    .collect();
    let net = n1();
    assert_eq!(net.reachable_markings().unwrap(), expected);
    assert_eq!(net.reachable_markings_by_steps().unwrap(), expected);
}

#[test]
fn reachability_matches_oracle_and_steps_interleave() {
    for (name, _) in fixtures::NETS {
        let net = fixtures::net(name).net;
        let by_single = net.reachable_markings().unwrap();
        let oracle: BTreeSet<Marking> = common::reachable(&net)
            .iter()
            .map(|m| Marking::from_places(m.keys().map(String::as_str)))
            .collect();
        assert_eq!(by_single, oracle, "{name}");
        assert_eq!(by_single, net.reachable_markings_by_steps().unwrap(), "{name}");
    }
}

#[test]
fn dead_net_reaches_only_its_initial_marking() {
    let mut b = InhibitorNet::builder();
    b.place("p")
        .place("q")
        .transition("t")
        .consume("p", "t")
        .produce("t", "q");
    let net = b.build().unwrap();
    assert_eq!(net.reachable_markings().unwrap(), BTreeSet::from([Marking::new()]));
}

#[test]
fn reverser_restores_the_initial_marking() {
    let net = fixtures::net("rcn-simple.net").net;
    let after = net.fire_sequence(&[Step::single("b"), Step::single("~b")]).unwrap();
    assert_eq!(after.last().unwrap(), &net.initial_marking());
}

#[test]
fn states_of_n1() {
    let expected: BTreeSet<TransitionBag> = [&[][..], &["a"], &["c"], &["a", "b"], &["a", "c"]]
        .iter()
        .map(|b| bag(b))
        .collect();
    let net = n1();
    assert_eq!(net.states(StateBound::Exhaustive).unwrap(), expected);
    assert_eq!(
        net.states(StateBound::Depth(0)).unwrap(),
        BTreeSet::from([TransitionBag::new()])
    );
}

#[test]
fn states_of_a_reversible_net_count_repeats() {
    let net = fixtures::net("rcn-simple.net").net;
    assert!(!net.is_single_execution());
    assert!(matches!(
        net.states(StateBound::Exhaustive),
        Err(NetError::NotSingleExecution(_))
    ));
    let states = net.states(StateBound::Depth(3)).unwrap();
    let redo = states.iter().find(|s| s.count("b") == 2 && s.count("~b") == 1);
    assert!(redo.is_some());
}

#[test]
fn states_match_oracle_and_grow_with_depth() {
    for name in ["n1.net", "c1.net", "rcn-simple.net", "rcn-p3.net"] {
        let net = fixtures::net(name).net;
        let mut previous = BTreeSet::new();
        for depth in 0..5 {
            let states = net.states(StateBound::Depth(depth)).unwrap();
            let oracle: BTreeSet<TransitionBag> = common::states(&net, depth)
                .iter()
                .map(|b| {
                    TransitionBag::from_names(b.iter().flat_map(|(t, n)| std::iter::repeat_n(t.as_str(), *n as usize)))
                })
                .collect();
            assert_eq!(states, oracle, "{name} depth {depth}");
            assert!(previous.is_subset(&states));
            previous = states;
        }
    }
}

#[test]
fn safety() {
    assert_eq!(n1().is_safe(1000), Safety::Safe);
    assert_eq!(InhibitorNet::builder().build().unwrap().is_safe(10), Safety::Safe);
    let mut b = InhibitorNet::builder();
    b.place("p").place("q").place("r");
    b.transition("t").consume("q", "t").produce("t", "p");
    b.transition("u").consume("r", "u").produce("u", "p");
    b.mark("p").mark("q").mark("r");
    assert!(matches!(b.build().unwrap().is_safe(100), Safety::Unsafe { .. }));
}

#[test]
fn acyclicity() {
    assert!(fixtures::net("c1.net").net.is_acyclic());
    assert!(single_transition().is_acyclic());
    assert!(!fixtures::net("rcn-simple.net").net.is_acyclic());
}

#[test]
fn equivalence() {
    assert_eq!(net_equiv(&n1(), &n1(), 10).unwrap(), EquivVerdict::Equal);
    let c1 = fixtures::net("c1.net").net;
    let on = revnets::encode::pcn_to_on(&c1);
    assert_eq!(net_equiv(&c1, &on, 10).unwrap(), EquivVerdict::Equal);
    let o = fixtures::net("on-simple.net").net;
    let cn = revnets::encode::on_to_cn(&o).unwrap();
    assert_eq!(net_equiv(&o, &cn, 10).unwrap(), EquivVerdict::Equal);
    match net_equiv(&c1, &n1(), 10).unwrap() {
        EquivVerdict::Different { .. } => {}
        other => panic!("unexpected {other:?}"),
    }
    let rcn = fixtures::net("rcn-simple.net").net;
    assert!(matches!(
        net_equiv(&rcn, &rcn, 4).unwrap(),
        EquivVerdict::Inconclusive { depth: 4 }
    ));
}

#[test]
fn step_syntax() {
    assert_eq!(Step::parse("a"), Some(Step::single("a")));
    assert_eq!(Step::parse("~b"), Some(Step::single("~b")));
    assert_eq!(Step::parse("{a c}"), Some(Step::new(["a", "c"])));
    assert_eq!(Step::parse("{a, c}"), Some(Step::new(["a", "c"])));
    assert_eq!(Step::parse("a;b"), None);
}

#[test]
fn dot_export() {
    let dot = revnets::net::to_dot(&n1(), &BTreeSet::new());
    assert_eq!(dot.matches("shape=circle").count(), 6);
    assert_eq!(dot.matches("shape=box").count(), 3);
    assert_eq!(dot.matches("arrowhead=odot").count(), 1);
    let empty = revnets::net::to_dot(&InhibitorNet::builder().build().unwrap(), &BTreeSet::new());
    assert_eq!(empty, "digraph net {\n}\n");
    let doc = fixtures::net("rcn-simple.net");
    let rcn = revnets::net::to_dot(&doc.net, doc.backward.as_ref().unwrap());
    assert_eq!(rcn.matches("style=dashed").count(), 2);
}
