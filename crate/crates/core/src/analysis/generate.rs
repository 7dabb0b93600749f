use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::AnalysisError;
use crate::es::{EventStructureCore, ReversiblePes};

/// Largest carrier the generator produces.
pub const MAX_GENERATED_EVENTS: usize = 8;

const SAMPLING_BUDGET: usize = 1000;
const NAMES: [&str; MAX_GENERATED_EVENTS] = ["a", "b", "c", "d", "e", "f", "g", "h"];

/// Parameters of a random reversible structure. Densities are
/// probabilities per candidate pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RandomInstanceSpec {
    pub seed: u64,
    pub max_events: usize,
    pub cause: f64,
    pub conflict: f64,
    pub undoable: f64,
    pub rev_cause: f64,
    pub prevent: f64,
}

impl RandomInstanceSpec {
    pub fn new(seed: u64) -> Self {
        RandomInstanceSpec {
            seed,
            max_events: 5,
            cause: 0.3,
            conflict: 0.2,
            undoable: 0.5,
            rev_cause: 0.2,
            prevent: 0.3,
        }
    }

    fn check(&self) -> Result<(), AnalysisError> {
        if self.max_events > MAX_GENERATED_EVENTS {
            return Err(AnalysisError::InvalidSpec(format!(
                "max_events {} exceeds {MAX_GENERATED_EVENTS}",
                self.max_events
            )));
        }
        let densities = [
            ("cause", self.cause),
            ("conflict", self.conflict),
            ("undoable", self.undoable),
            ("rev_cause", self.rev_cause),
            ("prevent", self.prevent),
        ];
        for (name, p) in densities {
            if !(0.0..=1.0).contains(&p) {
                return Err(AnalysisError::InvalidSpec(format!("{name} = {p} is not a probability")));
            }
        }
        Ok(())
    }
}

fn sample(rng: &mut ChaCha8Rng, spec: &RandomInstanceSpec, reversible: bool) -> ReversiblePes {
    let n = rng.gen_range(0..=spec.max_events);
    let events = &NAMES[..n];
    let mut core = EventStructureCore::new();
    for e in events {
        core.add_event(e).expect("valid name");
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(spec.cause) {
                core.add_cause(events[i], events[j]).expect("declared");
            }
            if rng.gen_bool(spec.conflict) {
                core.add_conflict(events[i], events[j]).expect("declared");
            }
        }
    }
    let mut rp = ReversiblePes::new(core);
    if !reversible {
        return rp;
    }
    for u in events {
        if !rng.gen_bool(spec.undoable) {
            continue;
        }
        rp.add_undoable(u).expect("declared");
        rp.add_rev_cause(u, u).expect("declared");
        for e in events.iter().filter(|e| *e != u) {
            if rng.gen_bool(spec.rev_cause) {
                rp.add_rev_cause(e, u).expect("declared");
            } else if rng.gen_bool(spec.prevent) {
                rp.add_prevention(e, u).expect("declared");
            }
        }
    }
    rp
}

fn generate(spec: &RandomInstanceSpec, reversible: bool) -> Result<ReversiblePes, AnalysisError> {
    spec.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..SAMPLING_BUDGET {
        let rp = sample(&mut rng, spec, reversible);
        if rp.validate().is_valid() {
            return Ok(rp);
        }
    }
    Err(AnalysisError::SamplingBudget {
        seed: spec.seed,
        attempts: SAMPLING_BUDGET,
    })
}

/// A valid reversible structure; the same spec always yields the same
/// structure.
pub fn generate_rpes(spec: &RandomInstanceSpec) -> Result<ReversiblePes, AnalysisError> {
    generate(spec, true)
}

/// A valid pre-prime structure (no undoable events).
pub fn generate_ppes(spec: &RandomInstanceSpec) -> Result<EventStructureCore, AnalysisError> {
    Ok(generate(spec, false)?.core().clone())
}

/// The hereditary closure of [`generate_ppes`].
pub fn generate_pes(spec: &RandomInstanceSpec) -> Result<EventStructureCore, AnalysisError> {
    Ok(generate_ppes(spec)?.hereditary_closure())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_structure() {
        let spec = RandomInstanceSpec::new(7);
        assert_eq!(generate_rpes(&spec).unwrap(), generate_rpes(&spec).unwrap());
    }

    #[test]
    fn undoable_events_reverse_cause_themselves() {
        for seed in 0..50 {
            let rp = generate_rpes(&RandomInstanceSpec::new(seed)).unwrap();
            for u in rp.undoable() {
                assert!(rp.rev_causality().contains(&(u.clone(), u.clone())));
            }
        }
    }

    #[test]
    fn rejects_bad_densities() {
        let spec = RandomInstanceSpec {
            cause: 1.5,
            ..RandomInstanceSpec::new(0)
        };
        assert!(matches!(generate_rpes(&spec), Err(AnalysisError::InvalidSpec(_))));
        let spec = RandomInstanceSpec {
            max_events: 9,
            ..RandomInstanceSpec::new(0)
        };
        assert!(matches!(generate_rpes(&spec), Err(AnalysisError::InvalidSpec(_))));
    }
}
