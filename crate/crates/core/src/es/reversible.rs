use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::structure::Indexed;
use super::{
    bits, submasks, Configuration, ConfigurationSet, EsError, EventStructureCore, ValidationReport, Violation,
};

/// Name of the event that undoes `u`. Never a member of the carrier.
pub fn reverser_name(u: &str) -> String {
    format!("~{u}")
}

/// A reversible prime event structure `(E, U, <, #, ≺, ▷)`.
///
/// `rev_causality` holds `(e, u)` for `e ≺ ~u`; `prevention` holds `(e, u)`
/// for `e ▷ ~u`. Sustained causation is not stored: it is induced from
/// causality and prevention.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReversiblePes {
    core: EventStructureCore,
    undoable: BTreeSet<String>,
    rev_causality: BTreeSet<(String, String)>,
    prevention: BTreeSet<(String, String)>,
}

struct Rix {
    base: Indexed,
    undoable: u64,
    /// Per event u: mask of e with e ≺ ~u.
    rev_causes: Vec<u64>,
    /// Per event u: mask of e with e ▷ ~u.
    preventers: Vec<u64>,
}

impl Rix {
    fn enabled(&self, x: u64, a: u64, b: u64) -> bool {
        let ix = &self.base;
        if a & x != 0 || b & !x != 0 || !ix.conflict_free(x | a) {
            return false;
        }
        let present = x & !b;
        bits(a).all(|e| ix.causes[e] & !present == 0)
            && bits(b).all(|u| {
                let kept = x & !(b & !(1 << u));
                self.rev_causes[u] & !kept == 0 && self.preventers[u] & (x | a) == 0
            })
    }
}

impl ReversiblePes {
    /// A reversible structure with no undoable events.
    pub fn new(core: EventStructureCore) -> Self {
        ReversiblePes {
            core,
            ..Default::default()
        }
    }

    pub fn from_parts(
        core: EventStructureCore,
        undoable: &[&str],
        rev_causality: &[(&str, &str)],
        prevention: &[(&str, &str)],
    ) -> Result<Self, EsError> {
        let mut rp = Self::new(core);
        for u in undoable {
            rp.add_undoable(u)?;
        }
        for (e, u) in rev_causality {
            rp.add_rev_cause(e, u)?;
        }
        for (e, u) in prevention {
            rp.add_prevention(e, u)?;
        }
        Ok(rp)
    }

    pub fn add_undoable(&mut self, u: &str) -> Result<bool, EsError> {
        self.core.require(u)?;
        Ok(self.undoable.insert(u.to_string()))
    }

    /// Record `e ≺ ~u`.
    pub fn add_rev_cause(&mut self, e: &str, u: &str) -> Result<bool, EsError> {
        self.require_pair(e, u)?;
        Ok(self.rev_causality.insert((e.to_string(), u.to_string())))
    }

    /// Record `e ▷ ~u`.
    pub fn add_prevention(&mut self, e: &str, u: &str) -> Result<bool, EsError> {
        self.require_pair(e, u)?;
        Ok(self.prevention.insert((e.to_string(), u.to_string())))
    }

    fn require_pair(&self, e: &str, u: &str) -> Result<(), EsError> {
        self.core.require(e)?;
        self.core.require(u)?;
        if !self.undoable.contains(u) {
            return Err(EsError::NotUndoable(u.to_string()));
        }
        Ok(())
    }

    pub fn core(&self) -> &EventStructureCore {
        &self.core
    }

    pub fn core_mut(&mut self) -> &mut EventStructureCore {
        &mut self.core
    }

    pub fn events(&self) -> &BTreeSet<String> {
        self.core.events()
    }

    pub fn undoable(&self) -> &BTreeSet<String> {
        &self.undoable
    }

    pub fn rev_causality(&self) -> &BTreeSet<(String, String)> {
        &self.rev_causality
    }

    pub fn prevention(&self) -> &BTreeSet<(String, String)> {
        &self.prevention
    }

    fn rix(&self) -> Rix {
        let base = self.core.indexed();
        let n = base.len();
        let pos = |e: &str| base.index(e).expect("declared event");
        let undoable = self.undoable.iter().fold(0u64, |m, u| m | 1 << pos(u));
        let mut rev_causes = vec![0u64; n];
        for (e, u) in &self.rev_causality {
            rev_causes[pos(u)] |= 1 << pos(e);
        }
        let mut preventers = vec![0u64; n];
        for (e, u) in &self.prevention {
            preventers[pos(u)] |= 1 << pos(e);
        }
        Rix {
            base,
            undoable,
            rev_causes,
            preventers,
        }
    }

    /// Successor masks of the induced sustained causation:
    /// `e << e'` iff `e < e'` and, when `e` is undoable, `e' ▷ ~e`.
    fn sustained_masks(rix: &Rix) -> Vec<u64> {
        let n = rix.base.len();
        let mut succ = vec![0u64; n];
        for (later, causes) in rix.base.causes.iter().enumerate() {
            for e in bits(*causes) {
                if e == later {
                    continue;
                }
                let undoable = rix.undoable & (1 << e) != 0;
                if !undoable || rix.preventers[e] & (1 << later) != 0 {
                    succ[e] |= 1 << later;
                }
            }
        }
        succ
    }

    /// The induced sustained causation as name pairs.
    pub fn sustained_causation(&self) -> BTreeSet<(String, String)> {
        let rix = self.rix();
        let succ = Self::sustained_masks(&rix);
        let mut out = BTreeSet::new();
        for (e, mask) in succ.iter().enumerate() {
            for f in bits(*mask) {
                out.insert((rix.base.names[e].clone(), rix.base.names[f].clone()));
            }
        }
        out
    }

    /// Check every axiom of a reversible prime event structure.
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.core.validate();
        let rix = self.rix();
        let names = &rix.base.names;
        let v = &mut report.violations;
        for u in bits(rix.undoable) {
            if rix.rev_causes[u] & (1 << u) == 0 {
                v.push(Violation::MissingSelfReverseCause {
                    undoable: names[u].clone(),
                });
            }
            let causes = rix.rev_causes[u];
            for a in bits(causes) {
                for b in bits(rix.base.conflict[a] & causes) {
                    if a < b {
                        v.push(Violation::ConflictingReverseCauses {
                            undoable: names[u].clone(),
                            first: names[a].clone(),
                            second: names[b].clone(),
                        });
                    }
                }
            }
            for e in bits(causes & rix.preventers[u]) {
                v.push(Violation::CausesAndPrevents {
                    event: names[e].clone(),
                    undoable: names[u].clone(),
                });
            }
        }
        let succ = Self::sustained_masks(&rix);
        for e in 0..names.len() {
            for mid in bits(succ[e]) {
                for last in bits(succ[mid] & !succ[e]) {
                    v.push(Violation::SustainedNotTransitive {
                        first: names[e].clone(),
                        middle: names[mid].clone(),
                        last: names[last].clone(),
                    });
                }
            }
        }
        for via in 0..names.len() {
            for conflicting in bits(rix.base.conflict[via]) {
                for inheritor in bits(succ[via] & !rix.base.conflict[conflicting]) {
                    v.push(Violation::ConflictNotInherited {
                        conflicting: names[conflicting].clone(),
                        via: names[via].clone(),
                        inheritor: names[inheritor].clone(),
                    });
                }
            }
        }
        report
    }

    /// Whether `A ∪ ~B` is enabled at the conflict-free set `at`, where
    /// `forward` is `A` and `backward` names the undoable events in `B`.
    pub fn enabled(
        &self,
        at: &Configuration,
        forward: &Configuration,
        backward: &Configuration,
    ) -> Result<bool, EsError> {
        let rix = self.rix();
        let x = rix.base.mask_of(at)?;
        let a = rix.base.mask_of(forward)?;
        let b = rix.base.mask_of(backward)?;
        if let Some(u) = bits(b & !rix.undoable).next() {
            return Err(EsError::NotUndoable(rix.base.names[u].clone()));
        }
        if !rix.base.conflict_free(x) {
            return Err(EsError::NotConflictFree(at.iter().cloned().collect()));
        }
        Ok(rix.enabled(x, a, b))
    }

    /// Perform `A ∪ ~B` at `at`, yielding `(at \ B) ∪ A`.
    pub fn step(
        &self,
        at: &Configuration,
        forward: &Configuration,
        backward: &Configuration,
    ) -> Result<Configuration, EsError> {
        if !self.enabled(at, forward, backward)? {
            let undo: Vec<String> = backward.iter().map(|u| reverser_name(u)).collect();
            let step: BTreeSet<&String> = forward.iter().chain(undo.iter()).collect();
            return Err(EsError::NotEnabled(format!(
                "{} at {}",
                super::configuration::show_set(step),
                super::configuration::show_set(at)
            )));
        }
        Ok(at.difference(backward).chain(forward.iter()).cloned().collect())
    }

    /// All configurations reachable from the empty set by forward and
    /// backward steps.
    pub fn configurations(&self) -> ConfigurationSet {
        let rix = self.rix();
        let ix = &rix.base;
        let mut seen = BTreeSet::from([0u64]);
        let mut queue = VecDeque::from([0u64]);
        while let Some(x) = queue.pop_front() {
            let mut forward = 0u64;
            let mut backward = 0u64;
            for e in 0..ix.len() {
                let bit = 1u64 << e;
                if x & bit == 0 {
                    if ix.causes[e] & !x == 0 && ix.conflict[e] & x == 0 {
                        forward |= bit;
                    }
                } else if rix.undoable & bit != 0 && rix.rev_causes[e] & !x == 0 && rix.preventers[e] & x == 0 {
                    backward |= bit;
                }
            }
            for a in submasks(forward) {
                for b in submasks(backward) {
                    if a | b == 0 || !rix.enabled(x, a, b) {
                        continue;
                    }
                    let next = (x & !b) | a;
                    if seen.insert(next) {
                        queue.push_back(next);
                    }
                }
            }
        }
        seen.into_iter().map(|m| ix.names_of(m)).collect()
    }

    /// Same configurations.
    pub fn equivalent(&self, other: &ReversiblePes) -> bool {
        self.configurations() == other.configurations()
    }
}
