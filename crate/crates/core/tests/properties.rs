mod common;

use proptest::prelude::*;

use revnets::analysis::{generate_pes, generate_ppes, generate_rpes, RandomInstanceSpec};
use revnets::classes::{
    configurations_net, direct_conflict, is_cn, is_occurrence_net, is_pcn, is_rcn, lessdot, saturate, NetClass,
};
use revnets::encode::{pcn_to_on, pcn_to_ppes, ppes_to_pcn, rcn_to_rpes, rpes_to_rcn};
use revnets::format::{parse_es, serialize_es, EsDocument, EsKind};
use revnets::net::{find_isomorphism, Marking, Step};

fn tokens(m: &Marking) -> common::Tokens {
    m.iter().filter(|(_, n)| *n > 0).map(|(p, n)| (p.clone(), n)).collect()
}

fn spec() -> impl Strategy<Value = RandomInstanceSpec> {
    (
        any::<u64>(),
        0usize..=6,
        0.0..=1.0f64,
        0.0..=0.6f64,
        0.0..=1.0f64,
        0.0..=1.0f64,
        0.0..=1.0f64,
    )
        .prop_map(
            |(seed, max_events, cause, conflict, undoable, rev_cause, prevent)| RandomInstanceSpec {
                seed,
                max_events,
                cause,
                conflict,
                undoable,
                rev_cause,
                prevent,
            },
        )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ppes_and_its_net_share_configurations(spec in spec()) {
        let p = generate_ppes(&spec).unwrap();
        let net = ppes_to_pcn(&p);
        prop_assert!(is_pcn(&net).is_member());
        prop_assert_eq!(configurations_net(&net, NetClass::Pcn, None).unwrap(), p.configurations());
        prop_assert_eq!(p.configurations(), common::ppes_configurations(&p));
    }

    #[test]
    fn encoded_relations_are_the_structure(spec in spec()) {
        let p = generate_ppes(&spec).unwrap();
        let net = ppes_to_pcn(&p);
        prop_assert_eq!(lessdot(&net, None), p.transitive_causality());
        prop_assert_eq!(&direct_conflict(&net, None), p.conflict());
        let back = pcn_to_ppes(&net).unwrap();
        prop_assert_eq!(back.configurations(), p.configurations());
    }

    #[test]
    fn hereditary_closure_is_idempotent_and_keeps_configurations(spec in spec()) {
        let p = generate_ppes(&spec).unwrap();
        let hc = p.hereditary_closure();
        prop_assert!(hc.is_pes());
        prop_assert_eq!(hc.hereditary_closure(), hc.clone());
        prop_assert_eq!(hc.configurations(), p.configurations());
        let oracle: common::Rel = common::hereditary_conflict(&p);
        let closed: common::Rel = hc.conflict().iter().flat_map(|(a, b)| [(a.clone(), b.clone()), (b.clone(), a.clone())]).collect();
        prop_assert_eq!(closed, oracle);
    }

    #[test]
    fn saturation_matches_hereditary_closure(spec in spec()) {
        let p = generate_ppes(&spec).unwrap();
        let sat = saturate(&ppes_to_pcn(&p));
        prop_assert!(is_cn(&sat).is_member());
        prop_assert!(find_isomorphism(&sat, &ppes_to_pcn(&p.hereditary_closure())).is_some());
    }

    #[test]
    fn occurrence_net_of_a_pes(spec in spec()) {
        let p = generate_pes(&spec).unwrap();
        let on = pcn_to_on(&ppes_to_pcn(&p));
        prop_assert!(is_occurrence_net(&on).is_member());
        prop_assert_eq!(configurations_net(&on, NetClass::On, None).unwrap(), p.configurations());
    }

    #[test]
    fn rpes_configurations_match_oracle(spec in spec()) {
        let rp = generate_rpes(&spec).unwrap();
        let confs = rp.configurations();
        prop_assert_eq!(&confs, &common::rpes_configurations(&rp));
        for x in confs.iter() {
            prop_assert!(rp.core().is_conflict_free(x));
        }
        prop_assert_eq!(rp.sustained_causation(), common::sustained(&rp));
    }

    #[test]
    fn rcn_encoding_round_trips(spec in spec()) {
        let rp = generate_rpes(&spec).unwrap();
        let (net, partition) = rpes_to_rcn(&rp);
        prop_assert!(is_rcn(&net, &partition).is_member());
        prop_assert_eq!(configurations_net(&net, NetClass::Rcn, Some(&partition)).unwrap(), rp.configurations());
        let back = rcn_to_rpes(&net, &partition).unwrap();
        prop_assert_eq!(back.undoable(), rp.undoable());
        prop_assert_eq!(back.rev_causality(), rp.rev_causality());
        prop_assert_eq!(back.prevention(), rp.prevention());
        prop_assert_eq!(back.configurations(), rp.configurations());
    }

    #[test]
    fn firing_moves_tokens_along_arcs(spec in spec()) {
        let rp = generate_rpes(&spec).unwrap();
        let (net, _) = rpes_to_rcn(&rp);
        for m in net.reachable_markings().unwrap() {
            for step in net.enabled_steps(&m, net.transitions().len()).unwrap() {
                let next = net.fire(&m, &step).unwrap();
                let names: Vec<&str> = step.transitions().iter().map(String::as_str).collect();
                prop_assert!(common::step_enabled(&net, &tokens(&m), &names));
                prop_assert_eq!(tokens(&next), common::fire(&net, &tokens(&m), &names));
                for t in step.transitions() {
                    prop_assert!(net.step_enabled(&m, &Step::single(t)).unwrap());
                }
            }
        }
    }

    #[test]
    fn generated_structures_round_trip_through_text(spec in spec()) {
        let rp = generate_rpes(&spec).unwrap();
        let doc = EsDocument::new(EsKind::Rpes, rp);
        let text = serialize_es(&doc);
        let parsed = parse_es(&text).unwrap();
        prop_assert_eq!(serialize_es(&parsed), text);
        prop_assert_eq!(parsed, doc);
    }
}
