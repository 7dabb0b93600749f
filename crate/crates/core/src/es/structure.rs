use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::{
    bits, submasks, Configuration, ConfigurationSet, EsError, ValidationReport, Violation, MAX_ENUMERABLE_EVENTS,
};

/// Largest carrier for which the declarative (subset-based) configuration
/// enumeration is attempted.
const MAX_DECLARATIVE_EVENTS: usize = 24;

/// A finite event structure `(E, <, #)`.
///
/// Causality is stored as the declared pairs; every semantic operation uses
/// its transitive closure. Conflict pairs are stored once, ordered.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EventStructureCore {
    events: BTreeSet<String>,
    causality: BTreeSet<(String, String)>,
    conflict: BTreeSet<(String, String)>,
}

pub(crate) fn is_event_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

fn ordered(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

impl EventStructureCore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build a structure from string slices; every referenced name must be
    /// among `events`.
    pub fn from_parts(events: &[&str], causality: &[(&str, &str)], conflict: &[(&str, &str)]) -> Result<Self, EsError> {
        let mut core = Self::new();
        for e in events {
            core.add_event(e)?;
        }
        for (a, b) in causality {
            core.add_cause(a, b)?;
        }
        for (a, b) in conflict {
            core.add_conflict(a, b)?;
        }
        Ok(core)
    }

    pub fn add_event(&mut self, name: &str) -> Result<bool, EsError> {
        if !is_event_name(name) {
            return Err(EsError::UnknownEvent(name.to_string()));
        }
        if !self.events.contains(name) && self.events.len() == MAX_ENUMERABLE_EVENTS {
            return Err(EsError::TooLarge {
                events: self.events.len() + 1,
                limit: MAX_ENUMERABLE_EVENTS,
            });
        }
        Ok(self.events.insert(name.to_string()))
    }

    /// Record `before < after`.
    pub fn add_cause(&mut self, before: &str, after: &str) -> Result<bool, EsError> {
        self.require(before)?;
        self.require(after)?;
        Ok(self.causality.insert((before.to_string(), after.to_string())))
    }

    pub fn add_conflict(&mut self, a: &str, b: &str) -> Result<bool, EsError> {
        self.require(a)?;
        self.require(b)?;
        Ok(self.conflict.insert(ordered(a, b)))
    }

    pub(crate) fn require(&self, name: &str) -> Result<(), EsError> {
        if self.events.contains(name) {
            Ok(())
        } else {
            Err(EsError::UnknownEvent(name.to_string()))
        }
    }

    pub fn events(&self) -> &BTreeSet<String> {
        &self.events
    }

    /// Declared causality pairs `(e, e')` meaning `e < e'`.
    pub fn causality(&self) -> &BTreeSet<(String, String)> {
        &self.causality
    }

    /// Conflict pairs, each stored once with the smaller name first.
    pub fn conflict(&self) -> &BTreeSet<(String, String)> {
        &self.conflict
    }

    pub fn in_conflict(&self, a: &str, b: &str) -> bool {
        self.conflict.contains(&ordered(a, b))
    }

    /// The transitive closure of the declared causality.
    pub fn transitive_causality(&self) -> BTreeSet<(String, String)> {
        let ix = self.indexed();
        let mut out = BTreeSet::new();
        for (j, causes) in ix.causes.iter().enumerate() {
            for i in bits(*causes) {
                out.insert((ix.names[i].clone(), ix.names[j].clone()));
            }
        }
        out
    }

    /// Strict (transitive) causes of `event`.
    pub fn causes_of(&self, event: &str) -> Result<BTreeSet<String>, EsError> {
        let ix = self.indexed();
        let i = ix.index(event)?;
        Ok(ix.names_of(ix.causes[i] & !(1 << i)))
    }

    pub fn is_conflict_free<'a>(&self, set: impl IntoIterator<Item = &'a String>) -> bool {
        let items: Vec<&String> = set.into_iter().collect();
        items
            .iter()
            .enumerate()
            .all(|(i, a)| items[i + 1..].iter().all(|b| !self.in_conflict(a, b)))
    }

    /// Check the pre-prime event structure axioms.
    pub fn validate(&self) -> ValidationReport {
        let ix = self.indexed();
        let mut violations = Vec::new();
        for (i, name) in ix.names.iter().enumerate() {
            if ix.causes[i] & (1 << i) != 0 {
                violations.push(Violation::CyclicCausality { event: name.clone() });
            }
            if ix.conflict[i] & (1 << i) != 0 {
                violations.push(Violation::ReflexiveConflict { event: name.clone() });
            }
        }
        for (e, name) in ix.names.iter().enumerate() {
            let history = ix.causes[e] | (1 << e);
            for a in bits(history) {
                for b in bits(ix.conflict[a] & history) {
                    if a < b {
                        violations.push(Violation::ConflictingHistory {
                            event: name.clone(),
                            first: ix.names[a].clone(),
                            second: ix.names[b].clone(),
                        });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// True iff conflict is inherited along (transitive) causality.
    pub fn is_pes(&self) -> bool {
        let ix = self.indexed();
        (0..ix.len()).all(|k| {
            // e # e' < k  =>  e # k
            bits(ix.causes[k] & !(1 << k)).all(|j| ix.conflict[j] & !ix.conflict[k] == 0)
        })
    }

    /// The least symmetric conflict containing `#` and inherited along `<`.
    pub fn hereditary_closure(&self) -> EventStructureCore {
        let ix = self.indexed();
        let mut conflict = ix.conflict.clone();
        loop {
            let mut changed = false;
            for k in 0..ix.len() {
                let mut inherited = 0;
                for j in bits(ix.causes[k] & !(1 << k)) {
                    inherited |= conflict[j];
                }
                if inherited & !conflict[k] != 0 {
                    conflict[k] |= inherited;
                    for e in bits(inherited) {
                        conflict[e] |= 1 << k;
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let mut out = EventStructureCore {
            events: self.events.clone(),
            causality: self.causality.clone(),
            conflict: BTreeSet::new(),
        };
        for (a, mask) in conflict.iter().enumerate() {
            for b in bits(*mask) {
                if a <= b {
                    out.conflict.insert((ix.names[a].clone(), ix.names[b].clone()));
                }
            }
        }
        out
    }

    /// Whether the set `step` is enabled at the conflict-free set `at`.
    pub fn enabled_forward(&self, at: &Configuration, step: &Configuration) -> Result<bool, EsError> {
        let ix = self.indexed();
        let x = ix.mask_of(at)?;
        let a = ix.mask_of(step)?;
        if !ix.conflict_free(x) {
            return Err(EsError::NotConflictFree(at.iter().cloned().collect()));
        }
        Ok(ix.forward_enabled(x, a))
    }

    /// Fire `step` at `at`, returning `at ∪ step`.
    pub fn step_forward(&self, at: &Configuration, step: &Configuration) -> Result<Configuration, EsError> {
        if !self.enabled_forward(at, step)? {
            return Err(EsError::NotEnabled(format!(
                "{} at {}",
                super::configuration::show_set(step),
                super::configuration::show_set(at)
            )));
        }
        Ok(at.union(step).cloned().collect())
    }

    /// Configurations reachable from the empty set by enabled steps.
    pub fn configurations(&self) -> ConfigurationSet {
        let ix = self.indexed();
        let mut seen = BTreeSet::from([0u64]);
        let mut queue = VecDeque::from([0u64]);
        while let Some(x) = queue.pop_front() {
            let candidates = (0..ix.len())
                .filter(|&e| x & (1 << e) == 0 && ix.causes[e] & !x == 0 && ix.conflict[e] & x == 0)
                .fold(0u64, |m, e| m | 1 << e);
            for a in submasks(candidates) {
                if a != 0 && ix.conflict_free(a) && seen.insert(x | a) {
                    queue.push_back(x | a);
                }
            }
        }
        seen.into_iter().map(|m| ix.names_of(m)).collect()
    }

    /// Conflict-free, left-closed subsets, computed by brute force over all
    /// subsets.
    pub fn configurations_declarative(&self) -> Result<ConfigurationSet, EsError> {
        let ix = self.indexed();
        if ix.len() > MAX_DECLARATIVE_EVENTS {
            return Err(EsError::TooLarge {
                events: ix.len(),
                limit: MAX_DECLARATIVE_EVENTS,
            });
        }
        Ok((0u64..1 << ix.len())
            .filter(|&x| ix.conflict_free(x) && bits(x).all(|e| ix.causes[e] & !x == 0))
            .map(|x| ix.names_of(x))
            .collect())
    }

    pub(crate) fn indexed(&self) -> Indexed {
        Indexed::new(self)
    }
}

/// Bitmask view of a structure, events numbered in name order.
#[derive(Debug, Clone)]
pub(crate) struct Indexed {
    pub names: Vec<String>,
    /// Transitive causes; contains the event itself iff causality is cyclic.
    pub causes: Vec<u64>,
    pub conflict: Vec<u64>,
}

impl Indexed {
    fn new(core: &EventStructureCore) -> Self {
        let names: Vec<String> = core.events.iter().cloned().collect();
        let pos = |n: &str| names.binary_search_by(|x| x.as_str().cmp(n)).expect("declared event");
        let mut causes = vec![0u64; names.len()];
        for (a, b) in &core.causality {
            causes[pos(b)] |= 1 << pos(a);
        }
        loop {
            let mut changed = false;
            for j in 0..names.len() {
                let mut extended = causes[j];
                for i in bits(causes[j]) {
                    extended |= causes[i];
                }
                if extended != causes[j] {
                    causes[j] = extended;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let mut conflict = vec![0u64; names.len()];
        for (a, b) in &core.conflict {
            let (i, j) = (pos(a), pos(b));
            conflict[i] |= 1 << j;
            conflict[j] |= 1 << i;
        }
        Indexed {
            names,
            causes,
            conflict,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn index(&self, name: &str) -> Result<usize, EsError> {
        self.names
            .binary_search_by(|x| x.as_str().cmp(name))
            .map_err(|_| EsError::UnknownEvent(name.to_string()))
    }

    pub fn mask_of<'a>(&self, set: impl IntoIterator<Item = &'a String>) -> Result<u64, EsError> {
        set.into_iter().try_fold(0u64, |m, e| Ok(m | 1 << self.index(e)?))
    }

    pub fn names_of(&self, mask: u64) -> Configuration {
        bits(mask).map(|i| self.names[i].clone()).collect()
    }

    pub fn conflict_free(&self, x: u64) -> bool {
        bits(x).all(|e| self.conflict[e] & x == 0)
    }

    pub fn forward_enabled(&self, x: u64, a: u64) -> bool {
        a & x == 0 && self.conflict_free(x | a) && bits(a).all(|e| self.causes[e] & !x == 0)
    }
}
