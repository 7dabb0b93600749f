use std::fmt;

use serde::Serialize;

use super::{
    check_theorem, generate_pes, generate_ppes, generate_rpes, net_instance, reversible_on_counterexample,
    structure_instance, AnalysisError, Instance, RandomInstanceSpec, Theorem, TheoremVerdict,
};
use crate::es::ReversiblePes;
use crate::fixtures;
use crate::format::EsKind;

/// Kind of random structure a theorem is checked on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Ppes,
    Pes,
    Rpes,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Ppes => "ppes",
            Family::Pes => "pes",
            Family::Rpes => "rpes",
        })
    }
}

impl Family {
    pub fn of(theorem: Theorem) -> Family {
        match theorem {
            Theorem::PpesToPcn
            | Theorem::PcnToPpes
            | Theorem::HereditaryClosure
            | Theorem::PcnToOn
            | Theorem::Saturation => Family::Ppes,
            Theorem::PesCnCorrespondence | Theorem::OnCnRoundTrip | Theorem::PesOnViaCn | Theorem::OnToCn => {
                Family::Pes
            }
            Theorem::RpesRcnConfigurations | Theorem::RcnRpesConfigurations | Theorem::RpesRcnRoundTrip => Family::Rpes,
        }
    }

    /// The random instance for `seed`.
    pub fn instance(self, seed: u64) -> Result<Instance, AnalysisError> {
        let spec = RandomInstanceSpec::new(seed);
        Ok(match self {
            Family::Ppes => structure_instance(EsKind::Ppes, ReversiblePes::new(generate_ppes(&spec)?)),
            Family::Pes => structure_instance(EsKind::Pes, ReversiblePes::new(generate_pes(&spec)?)),
            Family::Rpes => structure_instance(EsKind::Rpes, generate_rpes(&spec)?),
        })
    }
}

/// Outcome of a suite run. Contains no timings, so equal inputs give
/// byte-identical JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub count: usize,
    pub passed: usize,
    pub failed: usize,
    pub verdicts: Vec<TheoremVerdict>,
}

impl SuiteReport {
    fn new(seed: u64, count: usize, verdicts: Vec<TheoremVerdict>) -> Self {
        let passed = verdicts.iter().filter(|v| v.passed()).count();
        SuiteReport {
            seed,
            count,
            passed,
            failed: verdicts.len() - passed,
            verdicts,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `theorem` on every bundled fixture it applies to.
pub fn check_fixtures(theorem: Theorem) -> Vec<TheoremVerdict> {
    let structures = fixtures::EVENT_STRUCTURES
        .iter()
        .map(|(name, _)| (*name, structure_instance_of(name)));
    let nets = fixtures::NETS
        .iter()
        .map(|(name, _)| (*name, net_instance(fixtures::net(name))));
    structures
        .chain(nets)
        .filter_map(|(name, instance)| check_theorem(theorem, &instance, name).ok())
        .collect()
}

fn structure_instance_of(name: &str) -> Instance {
    let doc = fixtures::structure(name);
    structure_instance(doc.kind, doc.structure)
}

/// `theorem` on `count` random instances; instance `i` uses seed
/// `seed + i`.
pub fn check_random(theorem: Theorem, seed: u64, count: usize) -> Result<Vec<TheoremVerdict>, AnalysisError> {
    let family = Family::of(theorem);
    (0..count as u64)
        .map(|i| {
            let s = seed.wrapping_add(i);
            let instance = family.instance(s)?;
            check_theorem(theorem, &instance, &format!("random {family} seed={s}"))
        })
        .collect()
}

/// Every theorem on the fixtures and on `count` random instances each,
/// followed by the reversible occurrence net counterexample.
pub fn run_suite(seed: u64, count: usize) -> Result<SuiteReport, AnalysisError> {
    let mut verdicts = Vec::new();
    for theorem in Theorem::ALL {
        verdicts.extend(check_fixtures(theorem));
        verdicts.extend(check_random(theorem, seed, count)?);
    }
    verdicts.push(reversible_on_counterexample());
    Ok(SuiteReport::new(seed, count, verdicts))
}

/// One theorem on the fixtures and on `count` random instances.
pub fn run_theorem(theorem: Theorem, seed: u64, count: usize) -> Result<SuiteReport, AnalysisError> {
    let mut verdicts = check_fixtures(theorem);
    verdicts.extend(check_random(theorem, seed, count)?);
    Ok(SuiteReport::new(seed, count, verdicts))
}
