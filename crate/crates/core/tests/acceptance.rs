//! The acceptance criteria, one line each. Runs without the test harness so
//! every criterion reports even when an earlier one fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use revnets::analysis::{
    check_fixtures, check_random, check_theorem, generate_pes, generate_ppes, generate_rpes,
    reversible_on_counterexample, run_suite, Instance, RandomInstanceSpec, Theorem,
};
use revnets::classes::{is_cn, is_occurrence_net, is_pcn, is_rcn, recognize, ClauseOptions};
use revnets::encode::{pcn_to_on, ppes_to_pcn, rpes_to_rcn};
use revnets::es::{Configuration, ConfigurationSet};
use revnets::fixtures;
use revnets::net::{Marking, StateBound, TransitionBag};

const RANDOM: u64 = 200;

type Check = Result<(), String>;

type Criterion = (&'static str, Option<Duration>, fn() -> Check);

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn conf(names: &[&str]) -> Configuration {
    names.iter().map(|s| s.to_string()).collect()
}

fn confs(sets: &[&[&str]]) -> ConfigurationSet {
    let mut out = ConfigurationSet::new();
    for s in sets {
        out.insert(conf(s));
    }
    out
}

fn n1_semantics() -> Check {
    let net = fixtures::n1().net;
    let reach = net.reachable_markings().map_err(|e| e.to_string())?;
    let expected: BTreeSet<Marking> = [
        &["s1", "s2", "s3"][..],
        &["s2", "s3", "s4"],
        &["s1", "s2", "s6"],
        &["s2", "s4", "s6"],
        &["s4", "s5"],
    ]
    .into_iter()
    .map(|m| Marking::from_places(m.iter().copied()))
    .collect();
    ensure(reach == expected, || format!("reachable markings {reach:?}"))?;
    let states = net.states(StateBound::Exhaustive).map_err(|e| e.to_string())?;
    let expected: BTreeSet<TransitionBag> = [&[][..], &["a"], &["c"], &["a", "b"], &["a", "c"]]
        .into_iter()
        .map(|x| TransitionBag::from_names(x.iter().copied()))
        .collect();
    ensure(states == expected, || format!("states {states:?}"))
}

fn p1_configurations() -> Check {
    let got = fixtures::p1().structure.configurations();
    let expected = confs(&[
        &[],
        &["a"],
        &["b"],
        &["d"],
        &["a", "d"],
        &["b", "d"],
        &["b", "c"],
        &["b", "c", "d"],
    ]);
    ensure(got == expected, || format!("Conf(P1) = {got:?}"))
}

fn p3_out_of_order() -> Check {
    let p3 = fixtures::p3().structure;
    let trace: [(&[&str], &[&str], &[&str]); 4] = [
        (&["b"], &[], &["b"]),
        (&["c"], &[], &["b", "c"]),
        (&[], &["b"], &["c"]),
        (&["a"], &[], &["a", "c"]),
    ];
    let mut x = Configuration::new();
    for (forward, backward, after) in trace {
        x = p3
            .step(&x, &conf(forward), &conf(backward))
            .map_err(|e| e.to_string())?;
        ensure(x == conf(after), || format!("reached {x:?}, expected {after:?}"))?;
    }
    ensure(p3.configurations().contains(&conf(&["a", "c"])), || {
        "{a, c} is not a configuration".into()
    })
}

fn p2_negative_enabling() -> Check {
    let at = conf(&["b", "c"]);
    let (a, b) = (conf(&["d"]), conf(&["c"]));
    let p2 = fixtures::p2()
        .structure
        .enabled(&at, &a, &b)
        .map_err(|e| e.to_string())?;
    let p1 = fixtures::p1()
        .structure
        .enabled(&at, &a, &b)
        .map_err(|e| e.to_string())?;
    ensure(!p2 && p1, || format!("enabled in P2: {p2}, in P1: {p1}"))
}

fn all_pass(verdicts: &[revnets::analysis::TheoremVerdict]) -> Check {
    match verdicts.iter().find(|v| !v.passed()) {
        Some(v) => Err(v.to_string()),
        None => Ok(()),
    }
}

fn encoding_correspondences() -> Check {
    let structures = ["p1.es", "p2.es", "p3.es", "saga.es", "saga-closed.es"];
    for t in [Theorem::RpesRcnConfigurations, Theorem::RcnRpesConfigurations] {
        for name in structures {
            let v =
                check_theorem(t, &Instance::Structure(fixtures::structure(name)), name).map_err(|e| e.to_string())?;
            all_pass(&[v])?;
        }
        let random = check_random(t, 0, RANDOM as usize).map_err(|e| e.to_string())?;
        ensure(random.len() == RANDOM as usize, || {
            format!("{} random instances", random.len())
        })?;
        all_pass(&random)?;
    }
    Ok(())
}

fn round_trips() -> Check {
    for t in [
        Theorem::RpesRcnRoundTrip,
        Theorem::PesCnCorrespondence,
        Theorem::OnCnRoundTrip,
        Theorem::PesOnViaCn,
    ] {
        let fixtures = check_fixtures(t);
        ensure(!fixtures.is_empty(), || format!("no fixture applies to {t}"))?;
        all_pass(&fixtures)?;
        all_pass(&check_random(t, 0, RANDOM as usize).map_err(|e| e.to_string())?)?;
    }
    Ok(())
}

fn recognizers() -> Check {
    for seed in 0..RANDOM {
        let spec = RandomInstanceSpec::new(seed);
        let ppes = generate_ppes(&spec).map_err(|e| e.to_string())?;
        let pes = generate_pes(&spec).map_err(|e| e.to_string())?;
        let rp = generate_rpes(&spec).map_err(|e| e.to_string())?;
        ensure(is_pcn(&ppes_to_pcn(&ppes)).is_member(), || {
            format!("pcn rejects A(P), seed {seed}")
        })?;
        ensure(is_cn(&ppes_to_pcn(&pes)).is_member(), || {
            format!("cn rejects A(P), seed {seed}")
        })?;
        ensure(is_occurrence_net(&pcn_to_on(&ppes_to_pcn(&pes))).is_member(), || {
            format!("on rejects the occurrence net, seed {seed}")
        })?;
        let (net, partition) = rpes_to_rcn(&rp);
        ensure(is_rcn(&net, &partition).is_member(), || {
            format!("rcn rejects the encoding, seed {seed}")
        })?;
    }
    for (path, _) in fixtures::MUTATIONS {
        let clause = path
            .trim_start_matches("mutations/")
            .trim_end_matches(".net")
            .split_once('-')
            .unwrap()
            .1;
        let doc = fixtures::mutation(path);
        let partition = doc.partition().map_err(|e| e.to_string())?;
        let report = recognize(&doc.net, doc.kind, Some(&partition), &ClauseOptions::all());
        let first = report.first_failure();
        ensure(
            first.is_some_and(|f| f.clause == clause && !f.witness.is_empty()),
            || format!("{path}: {report}"),
        )?;
    }
    Ok(())
}

fn hereditary_closure() -> Check {
    let hc = fixtures::ppes().core().hereditary_closure();
    let expected: BTreeSet<(String, String)> = [("a", "b"), ("a", "c")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    ensure(hc.conflict() == &expected, || {
        format!("hc conflict {:?}", hc.conflict())
    })?;
    ensure(hc.in_conflict("c", "a"), || "conflict is not symmetric".into())?;
    for seed in 0..500 {
        let p = generate_ppes(&RandomInstanceSpec::new(seed)).map_err(|e| e.to_string())?;
        let hc = p.hereditary_closure();
        ensure(hc.hereditary_closure() == hc, || {
            format!("hc not idempotent, seed {seed}")
        })?;
        ensure(hc.configurations() == p.configurations(), || {
            format!("Conf changed, seed {seed}")
        })?;
    }
    Ok(())
}

fn motivation() -> Check {
    all_pass(&[reversible_on_counterexample()])
}

fn determinism() -> Check {
    let a = run_suite(0, RANDOM as usize).map_err(|e| e.to_string())?.to_json();
    let b = run_suite(0, RANDOM as usize).map_err(|e| e.to_string())?.to_json();
    ensure(a == b, || "suite reports differ".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "N1 reachable markings and states",
            Some(Duration::from_millis(100)),
            n1_semantics,
        ),
        (
            "configurations of P1",
            Some(Duration::from_millis(100)),
            p1_configurations,
        ),
        (
            "P3 out-of-order trace",
            Some(Duration::from_millis(100)),
            p3_out_of_order,
        ),
        ("P2 negative enablement", None, p2_negative_enabling),
        (
            "rPES and rCN configuration correspondence",
            Some(Duration::from_secs(10)),
            encoding_correspondences,
        ),
        ("round trips", Some(Duration::from_secs(30)), round_trips),
        ("recognizer soundness", Some(Duration::from_secs(10)), recognizers),
        ("hereditary closure", Some(Duration::from_secs(5)), hereditary_closure),
        ("occurrence-net reverser counterexample", None, motivation),
        ("deterministic suite report", None, determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(()), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
            (other, _) => other,
        };
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({:.3} s)", i + 1, elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({:.3} s): {why}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
