//! Checks of the correspondences between structures and nets, on given
//! instances and on seeded random ones.
//!
//! A verdict names the theorem, the instance and the outcome. Failing
//! verdicts carry the instance in its text format plus the distinguishing
//! configuration or state, so they can be replayed from the command line.

mod generate;
mod motivation;
mod suite;

pub use generate::{generate_pes, generate_ppes, generate_rpes, RandomInstanceSpec, MAX_GENERATED_EVENTS};
pub use motivation::reversible_on_counterexample;
pub use suite::{check_fixtures, check_random, run_suite, run_theorem, Family, SuiteReport};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::classes::{
    is_cn, is_occurrence_net, is_pcn, is_rcn, marking_projection, occurrence_configurations, recognize, saturate,
    BackwardPartition, ClassError, ClauseOptions, NetClass, NetClassReport,
};
use crate::encode::{on_to_cn, pcn_to_on, pcn_to_ppes, ppes_to_pcn, rcn_to_rpes, rpes_to_rcn};
use crate::es::{show_set, ConfigurationSet, EsError, EventStructureCore, ReversiblePes};
use crate::format::{EsDocument, EsKind, NetDocument};
use crate::net::{find_isomorphism, net_equiv, EquivVerdict, InhibitorNet, NetError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// `Conf(P) = Conf(A(P))` and `A(P)` is a pre-causal net.
    PpesToPcn,
    /// `Conf(C) = Conf(Q(C))` and `Q(C)` is a valid pre-prime structure.
    PcnToPpes,
    /// `C ≡ A(Q(C))` and `P ≡ Q(A(P))`.
    PesCnCorrespondence,
    /// Configurations of an rPES and of its reversible causal net agree.
    RpesRcnConfigurations,
    /// Configurations of a reversible causal net and of its rPES agree.
    RcnRpesConfigurations,
    /// Both round trips between rPESes and reversible causal nets.
    RpesRcnRoundTrip,
    /// `C ≅ ontocn(pcntoocc(C))` and `O ≡ pcntoocc(ontocn(O))`.
    OnCnRoundTrip,
    /// `pcntoocc(A(P))` is an occurrence net with the configurations of `P`.
    PesOnViaCn,
    /// The hereditary closure is a PES, idempotent, and keeps configurations.
    HereditaryClosure,
    /// `ontocn(O)` is a causal net equivalent to `O`.
    OnToCn,
    /// `pcntoocc(C)` is an occurrence net equivalent to `C`.
    PcnToOn,
    /// Saturation yields an equivalent causal net.
    Saturation,
}

impl Theorem {
    pub const ALL: [Theorem; 12] = [
        Theorem::PpesToPcn,
        Theorem::PcnToPpes,
        Theorem::PesCnCorrespondence,
        Theorem::RpesRcnConfigurations,
        Theorem::RcnRpesConfigurations,
        Theorem::RpesRcnRoundTrip,
        Theorem::OnCnRoundTrip,
        Theorem::PesOnViaCn,
        Theorem::HereditaryClosure,
        Theorem::OnToCn,
        Theorem::PcnToOn,
        Theorem::Saturation,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::PpesToPcn => "ppes-to-pcn",
            Theorem::PcnToPpes => "pcn-to-ppes",
            Theorem::PesCnCorrespondence => "pes-cn-correspondence",
            Theorem::RpesRcnConfigurations => "rpes-rcn-configurations",
            Theorem::RcnRpesConfigurations => "rcn-rpes-configurations",
            Theorem::RpesRcnRoundTrip => "rpes-rcn-round-trip",
            Theorem::OnCnRoundTrip => "on-cn-round-trip",
            Theorem::PesOnViaCn => "pes-on-via-cn",
            Theorem::HereditaryClosure => "hereditary-closure",
            Theorem::OnToCn => "on-to-cn",
            Theorem::PcnToOn => "pcn-to-on",
            Theorem::Saturation => "saturation",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| format!("unknown theorem `{s}`"))
    }
}

/// Input of a theorem check.
pub use crate::format::Document as Instance;

impl Instance {
    fn format(&self) -> &'static str {
        match self {
            Instance::Structure(_) => "es",
            Instance::Net(_) => "net",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("{theorem} does not apply to a {kind} instance")]
    Mismatch { theorem: Theorem, kind: String },
    #[error("{theorem} does not apply: {reason}")]
    Precondition { theorem: Theorem, reason: String },
    #[error("no valid structure after {attempts} samples (seed {seed})")]
    SamplingBudget { seed: u64, attempts: usize },
    #[error("invalid random instance spec: {0}")]
    InvalidSpec(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Replayable evidence of a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// `es` or `net`.
    pub format: String,
    /// The instance in that format.
    pub input: String,
    pub reason: String,
    /// The distinguishing configuration or state, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: String,
    pub instance: String,
    pub verdict: Verdict,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl TheoremVerdict {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for TheoremVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} {}", self.theorem, self.instance)?;
        if let Some(c) = &self.counterexample {
            write!(f, ": {}", c.reason)?;
            if let Some(w) = &c.witness {
                write!(f, " [{w}]")?;
            }
        }
        Ok(())
    }
}

/// Why a check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Failure {
    reason: String,
    witness: Option<String>,
}

impl Failure {
    pub(crate) fn new(reason: impl Into<String>) -> Self {
        Failure {
            reason: reason.into(),
            witness: None,
        }
    }

    pub(crate) fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }
}

impl From<NetError> for Failure {
    fn from(e: NetError) -> Self {
        Failure::new(e.to_string())
    }
}

impl From<ClassError> for Failure {
    fn from(e: ClassError) -> Self {
        Failure::new(e.to_string())
    }
}

impl From<EsError> for Failure {
    fn from(e: EsError) -> Self {
        Failure::new(e.to_string())
    }
}

type Check = Result<(), Failure>;

pub(crate) fn verdict(
    theorem: &str,
    label: &str,
    input: Option<&Instance>,
    notes: Vec<String>,
    outcome: Check,
) -> TheoremVerdict {
    let counterexample = outcome.err().map(|f| Counterexample {
        format: input.map_or("none", Instance::format).to_string(),
        input: input.map(Instance::to_text).unwrap_or_default(),
        reason: f.reason,
        witness: f.witness,
    });
    TheoremVerdict {
        theorem: theorem.to_string(),
        instance: label.to_string(),
        verdict: if counterexample.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        notes,
        counterexample,
    }
}

pub(crate) fn require(ok: bool, reason: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(Failure::new(reason()))
    }
}

fn same(left_name: &str, left: &ConfigurationSet, right_name: &str, right: &ConfigurationSet) -> Check {
    match left.first_difference(right) {
        None => Ok(()),
        Some(x) => {
            let only = if left.contains(&x) { left_name } else { right_name };
            Err(Failure::new(format!(
                "configurations of {left_name} ({}) and {right_name} ({}) differ",
                left.len(),
                right.len()
            ))
            .with_witness(format!("{} only in {only}", show_set(&x))))
        }
    }
}

fn member(what: &str, report: &NetClassReport) -> Check {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => {
            let f = Failure::new(format!(
                "{what} is not in class {}: clause `{}` fails: {}",
                report.class, c.clause, c.detail
            ));
            Err(if c.witness.is_empty() {
                f
            } else {
                f.with_witness(c.witness.join(", "))
            })
        }
    }
}

pub(crate) fn equivalent(
    left_name: &str,
    left: &InhibitorNet,
    right_name: &str,
    right: &InhibitorNet,
    notes: &mut Vec<String>,
) -> Check {
    let depth = left.default_depth().max(right.default_depth());
    match net_equiv(left, right, depth)? {
        EquivVerdict::Equal => Ok(()),
        EquivVerdict::Different { state, side } => {
            let only = match side {
                crate::net::Side::Left => left_name,
                crate::net::Side::Right => right_name,
            };
            Err(
                Failure::new(format!("{left_name} and {right_name} have different states"))
                    .with_witness(format!("{state} only in {only}")),
            )
        }
        v @ EquivVerdict::Inconclusive { .. } => {
            notes.push(format!("{left_name} vs {right_name}: {v}"));
            Ok(())
        }
    }
}

fn isomorphism_note(
    left_name: &str,
    left: &InhibitorNet,
    right_name: &str,
    right: &InhibitorNet,
    notes: &mut Vec<String>,
) -> bool {
    match find_isomorphism(left, right) {
        Some(iso) if iso.is_identity() => {
            notes.push(format!("{left_name} and {right_name} are identical"));
            true
        }
        Some(_) => {
            notes.push(format!("{left_name} and {right_name} are isomorphic"));
            true
        }
        None => {
            notes.push(format!("{left_name} and {right_name} are not isomorphic"));
            false
        }
    }
}

fn structure_note(
    left_name: &str,
    left: &EventStructureCore,
    right_name: &str,
    right: &EventStructureCore,
    notes: &mut Vec<String>,
) {
    let same = left.events() == right.events()
        && left.transitive_causality() == right.transitive_causality()
        && left.conflict() == right.conflict();
    let verb = if same { "coincide" } else { "differ" };
    notes.push(format!(
        "{left_name} and {right_name} {verb} up to transitive causality"
    ));
}

fn conf_note(name: &str, set: &ConfigurationSet, notes: &mut Vec<String>) {
    notes.push(format!("{name} has {} configurations", set.len()));
}

fn forward_configurations(net: &InhibitorNet) -> Result<ConfigurationSet, Failure> {
    Ok(marking_projection(net, &BackwardPartition::forward_only(net))?)
}

// Inputs ------------------------------------------------------------------

fn mismatch(theorem: Theorem, instance: &Instance) -> AnalysisError {
    AnalysisError::Mismatch {
        theorem,
        kind: instance.kind(),
    }
}

fn precondition(theorem: Theorem, reason: impl Into<String>) -> AnalysisError {
    AnalysisError::Precondition {
        theorem,
        reason: reason.into(),
    }
}

/// A valid pre-prime structure (`ppes` or `pes` file).
fn ppes_input(theorem: Theorem, instance: &Instance) -> Result<&EventStructureCore, AnalysisError> {
    match instance {
        Instance::Structure(doc) if doc.kind != EsKind::Rpes => {
            let report = doc.core().validate();
            if report.is_valid() {
                Ok(doc.core())
            } else {
                Err(precondition(theorem, format!("invalid structure: {report}")))
            }
        }
        _ => Err(mismatch(theorem, instance)),
    }
}

fn pes_input(theorem: Theorem, instance: &Instance) -> Result<&EventStructureCore, AnalysisError> {
    let core = ppes_input(theorem, instance)?;
    if core.is_pes() {
        Ok(core)
    } else {
        Err(precondition(theorem, "conflict is not inherited along causality"))
    }
}

/// A net of one of `kinds` passing the recognizer of `class`. Structures
/// are first encoded with `lift`; the recognizer then becomes part of the
/// check instead of a precondition.
#[allow(clippy::large_enum_variant)]
enum NetInput<'a> {
    Given(&'a NetDocument),
    Lifted(EventStructureCore, NetDocument),
}

impl NetInput<'_> {
    fn doc(&self) -> &NetDocument {
        match self {
            NetInput::Given(doc) => doc,
            NetInput::Lifted(_, doc) => doc,
        }
    }

    fn net(&self) -> &InhibitorNet {
        &self.doc().net
    }
}

fn net_input<'a>(
    theorem: Theorem,
    instance: &'a Instance,
    kinds: &[NetClass],
    class: NetClass,
    lift: impl FnOnce(&EventStructureCore) -> Option<NetDocument>,
) -> Result<NetInput<'a>, AnalysisError> {
    match instance {
        Instance::Net(doc) if kinds.contains(&doc.kind) => {
            let report = recognize(&doc.net, class, None, &ClauseOptions::all());
            match report.first_failure() {
                None => Ok(NetInput::Given(doc)),
                Some(c) => Err(precondition(
                    theorem,
                    format!("not in class {class}: clause `{}` fails", c.clause),
                )),
            }
        }
        Instance::Structure(_) => {
            let core = ppes_input(theorem, instance)?;
            match lift(core) {
                Some(doc) => Ok(NetInput::Lifted(core.clone(), doc)),
                None => Err(precondition(theorem, "conflict is not inherited along causality")),
            }
        }
        _ => Err(mismatch(theorem, instance)),
    }
}

fn lift_pcn(core: &EventStructureCore) -> Option<NetDocument> {
    let kind = if core.is_pes() { NetClass::Cn } else { NetClass::Pcn };
    Some(NetDocument::new(kind, ppes_to_pcn(core)))
}

fn lift_cn(core: &EventStructureCore) -> Option<NetDocument> {
    core.is_pes().then(|| NetDocument::new(NetClass::Cn, ppes_to_pcn(core)))
}

fn lift_on(core: &EventStructureCore) -> Option<NetDocument> {
    Some(NetDocument::new(NetClass::On, pcn_to_on(&ppes_to_pcn(core))))
}

/// A reversible causal net with its partition, or the encoding of a
/// structure. Returns whether the recognizer claim applies.
fn rcn_input(theorem: Theorem, instance: &Instance) -> Result<(InhibitorNet, BackwardPartition, bool), AnalysisError> {
    match instance {
        Instance::Net(doc) if doc.kind == NetClass::Rcn => {
            let partition = doc.partition().map_err(|e| precondition(theorem, e.to_string()))?;
            let report = is_rcn(&doc.net, &partition);
            match report.first_failure() {
                None => Ok((doc.net.clone(), partition, true)),
                Some(c) => Err(precondition(
                    theorem,
                    format!("not in class rcn: clause `{}` fails", c.clause),
                )),
            }
        }
        Instance::Structure(doc) => {
            let (net, partition) = rpes_to_rcn(&doc.structure);
            Ok((net, partition, doc.structure.validate().is_valid()))
        }
        _ => Err(mismatch(theorem, instance)),
    }
}

// Checks ------------------------------------------------------------------

/// Run one theorem on one instance. `label` describes the instance in the
/// verdict.
pub fn check_theorem(theorem: Theorem, instance: &Instance, label: &str) -> Result<TheoremVerdict, AnalysisError> {
    let mut notes = Vec::new();
    let outcome = match theorem {
        Theorem::PpesToPcn => ppes_to_pcn_check(instance, &mut notes)?,
        Theorem::PcnToPpes => pcn_to_ppes_check(instance, &mut notes)?,
        Theorem::PesCnCorrespondence => pes_cn_check(instance, &mut notes)?,
        Theorem::RpesRcnConfigurations => rpes_rcn_conf_check(instance, &mut notes)?,
        Theorem::RcnRpesConfigurations => rcn_rpes_conf_check(instance, &mut notes)?,
        Theorem::RpesRcnRoundTrip => rpes_rcn_round_trip_check(instance, &mut notes)?,
        Theorem::OnCnRoundTrip => on_cn_round_trip_check(instance, &mut notes)?,
        Theorem::PesOnViaCn => pes_on_check(instance, &mut notes)?,
        Theorem::HereditaryClosure => hereditary_closure_check(instance, &mut notes)?,
        Theorem::OnToCn => on_to_cn_check(instance, &mut notes)?,
        Theorem::PcnToOn => pcn_to_on_check(instance, &mut notes)?,
        Theorem::Saturation => saturation_check(instance, &mut notes)?,
    };
    Ok(verdict(theorem.id(), label, Some(instance), notes, outcome))
}

fn ppes_to_pcn_check(instance: &Instance, notes: &mut Vec<String>) -> Result<Check, AnalysisError> {
    let core = ppes_input(Theorem::PpesToPcn, instance)?;
    Ok((|| {
        let net = ppes_to_pcn(core);
        member("A(P)", &is_pcn(&net))?;
        let conf = core.configurations();
        conf_note("P", &conf, notes);
        same("P", &conf, "A(P)", &forward_configurations(&net)?)?;
        let cn = is_cn(&net).is_member();
        require(cn == core.is_pes(), || {
            format!(
                "A(P) is {}in class cn while P is {}a pes",
                if cn { "" } else { "not " },
                if cn { "not " } else { "" }
            )
        })
    })())
}

fn pcn_to_ppes_check(instance: &Instance, notes: &mut Vec<String>) -> Result<Check, AnalysisError> {
    let input = net_input(
        Theorem::PcnToPpes,
        instance,
        &[NetClass::Pcn, NetClass::Cn],
        NetClass::Pcn,
        lift_pcn,
    )?;
    Ok((|| {
        let net = input.net();
        if matches!(input, NetInput::Lifted(..)) {
            member("A(P)", &is_pcn(net))?;
        }
        let q = pcn_to_ppes(net)?;
        let report = q.validate();
        require(report.is_valid(), || format!("Q(C) is not a valid ppes: {report}"))?;
        let conf = forward_configurations(net)?;
        conf_note("C", &conf, notes);
        same("C", &conf, "Q(C)", &q.configurations())?;
        if is_cn(net).is_member() {
            require(q.is_pes(), || "Q(C) of a cn is not a pes".to_string())?;
        }
        Ok(())
    })())
}

fn pes_cn_check(instance: &Instance, notes: &mut Vec<String>) -> Result<Check, AnalysisError> {
    let theorem = Theorem::PesCnCorrespondence;
    if let Instance::Structure(_) = instance {
        let core = pes_input(theorem, instance)?;
        return Ok((|| {
            let net = ppes_to_pcn(core);
            member("A(P)", &is_cn(&net))?;
            let q = pcn_to_ppes(&net)?;
            let conf = core.configurations();
            conf_note("P", &conf, notes);
            same("P", &conf, "Q(A(P))", &q.configurations())?;
            same("P", &conf, "A(P)", &forward_configurations(&net)?)?;
            structure_note("P", core, "Q(A(P))", &q, notes);
            Ok(())
        })());
    }
    let input = net_input(theorem, instance, &[NetClass::Cn], NetClass::Cn, lift_cn)?;
    Ok((|| {
        let net = input.net();
        let back = ppes_to_pcn(&pcn_to_ppes(net)?);
        let conf = forward_configurations(net)?;
        conf_note("C", &conf, notes);
        same("C", &conf, "A(Q(C))", &forward_configurations(&back)?)?;
        equivalent("C", net, "A(Q(C))", &back, notes)?;
        isomorphism_note("C", net, "A(Q(C))", &back, notes);
        Ok(())
    })())
}

fn rpes_rcn_conf_check(instance: &Instance, notes: &mut Vec<String>) -> Result<Check, AnalysisError> {
    let Instance::Structure(doc) = instance else {
        return Err(mismatch(Theorem::RpesRcnConfigurations, instance));
    };
    Ok((|| {
        let rp = &doc.structure;
        let (net, partition) = rpes_to_rcn(rp);
        if rp.validate().is_valid() {
            member("rpestorcn(P)", &is_rcn(&net, &partition))?;
        } else {
            notes.push("P is not a valid rpes; the net is not required to be a rcn".to_string());
        }
        let conf = rp.configurations();
        conf_note("P", &conf, notes);
        same("P", &conf, "rpestorcn(P)", &marking_projection(&net, &partition)?)
    })())
}

fn rcn_rpes_conf_check(instance: &Instance, notes: &mut Vec<String>) -> Result<Check, AnalysisError> {
    let (net, partition, member_claim) = rcn_input(Theorem::RcnRpesConfigurations, instance)?;
    Ok((|| {
        if member_claim {
            member("V", &is_rcn(&net, &partition))?;
        }
        let rp = rcn_to_rpes(&net, &partition)?;
        if member_claim {
            let report = rp.validate();
            require(report.is_valid(), || {
                format!("rcntorpes(V) is not a valid rpes: {report}")
            })?;
        }
        let conf = marking_projection(&net, &partition)?;
        conf_note("V", &conf, notes);
        same("V", &conf, "rcntorpes(V)", &rp.configurations())
    })())
}

fn rpes_round_trip(rp: &ReversiblePes, notes: &mut Vec<String>) -> Check {
    let (net, partition) = rpes_to_rcn(rp);
    let back = rcn_to_rpes(&net, &partition)?;
    let conf = rp.configurations();
    conf_note("P", &conf, notes);
    same("P", &conf, "rcntorpes(rpestorcn(P))", &back.configurations())?;
    structure_note("P", rp.core(), "rcntorpes(rpestorcn(P))", back.core(), notes);
    Ok(())
}

fn rcn_round_trip(net: &InhibitorNet, partition: &BackwardPartition, notes: &mut Vec<String>) -> Check {
    let rp = rcn_to_rpes(net, partition)?;
    let (back, back_partition) = rpes_to_rcn(&rp);
    same(
        "V",
        &marking_projection(net, partition)?,
        "rpestorcn(rcntorpes(V))",
        &marking_projection(&back, &back_partition)?,
    )?;
    isomorphism_note("V", net, "rpestorcn(rcntorpes(V))", &back, notes);
    Ok(())
}

fn rpes_rcn_round_trip_check(instance: &Instance, notes: &mut Vec<String>) -> Result<Check, AnalysisError> {
    match instance {
        Instance::Structure(doc) => Ok((|| {
            rpes_round_trip(&doc.structure, notes)?;
            let (net, partition) = rpes_to_rcn(&doc.structure);
            rcn_round_trip(&net, &partition, notes)
        })()),
        Instance::Net(_) => {
            let (net, partition, _) = rcn_input(Theorem::RpesRcnRoundTrip, instance)?;
            Ok((|| {
                rcn_round_trip(&net, &partition, notes)?;
                rpes_round_trip(&rcn_to_rpes(&net, &partition)?, notes)
            })())
        }
    }
}

fn cn_round_trip(net: &InhibitorNet, notes: &mut Vec<String>) -> Check {
    let back = on_to_cn(&pcn_to_on(net))?;
    let name = "ontocn(pcntoocc(C))";
    if !isomorphism_note("C", net, name, &back, notes) {
        return Err(Failure::new(format!("C and {name} are not isomorphic")));
    }
    equivalent("C", net, name, &back, notes)
}

fn on_round_trip(net: &InhibitorNet, notes: &mut Vec<String>) -> Check {
    let back = pcn_to_on(&on_to_cn(net)?);
    let name = "pcntoocc(ontocn(O))";
    equivalent("O", net, name, &back, notes)?;
    same(
        "O",
        &occurrence_configurations(net),
        name,
        &occurrence_configurations(&back),
    )
}

fn on_cn_round_trip_check(instance: &Instance, notes: &mut Vec<String>) -> Result<Check, AnalysisError> {
    let theorem = Theorem::OnCnRoundTrip;
    match instance {
        Instance::Net(doc) if doc.kind == NetClass::On => {
            let input = net_input(theorem, instance, &[NetClass::On], NetClass::On, lift_on)?;
            Ok(on_round_trip(input.net(), notes))
        }
        _ => {
            let input = net_input(theorem, instance, &[NetClass::Cn], NetClass::Cn, lift_cn)?;
            Ok((|| {
                let net = input.net();
                if matches!(input, NetInput::Lifted(..)) {
                    member("A(P)", &is_cn(net))?;
                }
                cn_round_trip(net, notes)?;
                let on = pcn_to_on(net);
                member("pcntoocc(C)", &is_occurrence_net(&on))?;
                on_round_trip(&on, notes)
            })())
        }
    }
}

fn pes_on_check(instance: &Instance, notes: &mut Vec<String>) -> Result<Check, AnalysisError> {
    let theorem = Theorem::PesOnViaCn;
    if let Instance::Net(_) = instance {
        let input = net_input(theorem, instance, &[NetClass::On], NetClass::On, lift_on)?;
        return Ok((|| {
            let net = input.net();
            let p = pcn_to_ppes(&on_to_cn(net)?)?;
            require(p.is_pes(), || "Q(ontocn(O)) is not a pes".to_string())?;
            let conf = occurrence_configurations(net);
            conf_note("O", &conf, notes);
            same("O", &conf, "Q(ontocn(O))", &p.configurations())
        })());
    }
    let core = pes_input(theorem, instance)?;
    Ok((|| {
        let on = pcn_to_on(&ppes_to_pcn(core));
        member("pcntoocc(A(P))", &is_occurrence_net(&on))?;
        let conf = core.configurations();
        conf_note("P", &conf, notes);
        same("P", &conf, "pcntoocc(A(P))", &occurrence_configurations(&on))
    })())
}

fn hereditary_closure_check(instance: &Instance, notes: &mut Vec<String>) -> Result<Check, AnalysisError> {
    let core = ppes_input(Theorem::HereditaryClosure, instance)?;
    Ok((|| {
        let hc = core.hereditary_closure();
        require(hc.is_pes(), || "hc(P) is not a pes".to_string())?;
        require(hc.hereditary_closure() == hc, || {
            "hc(hc(P)) differs from hc(P)".to_string()
        })?;
        if core.is_pes() {
            require(hc.conflict() == core.conflict(), || "hc(P) changes a pes".to_string())?;
        }
        let conf = core.configurations();
        conf_note("P", &conf, notes);
        same("P", &conf, "hc(P)", &hc.configurations())?;
        let pairs: Vec<String> = hc.conflict().iter().map(|(a, b)| format!("{a}#{b}")).collect();
        notes.push(format!("hc(P) conflict: {{{}}}", pairs.join(", ")));
        Ok(())
    })())
}

fn on_to_cn_check(instance: &Instance, notes: &mut Vec<String>) -> Result<Check, AnalysisError> {
    let input = net_input(Theorem::OnToCn, instance, &[NetClass::On], NetClass::On, lift_on)?;
    Ok((|| {
        let net = input.net();
        if matches!(input, NetInput::Lifted(..)) {
            member("pcntoocc(A(P))", &is_occurrence_net(net))?;
        }
        let cn = on_to_cn(net)?;
        member("ontocn(O)", &is_cn(&cn))?;
        equivalent("O", net, "ontocn(O)", &cn, notes)?;
        let conf = occurrence_configurations(net);
        conf_note("O", &conf, notes);
        same("O", &conf, "ontocn(O)", &forward_configurations(&cn)?)
    })())
}

fn pcn_to_on_check(instance: &Instance, notes: &mut Vec<String>) -> Result<Check, AnalysisError> {
    let input = net_input(
        Theorem::PcnToOn,
        instance,
        &[NetClass::Pcn, NetClass::Cn],
        NetClass::Pcn,
        lift_pcn,
    )?;
    Ok((|| {
        let net = input.net();
        if matches!(input, NetInput::Lifted(..)) {
            member("A(P)", &is_pcn(net))?;
        }
        let on = pcn_to_on(net);
        member("pcntoocc(C)", &is_occurrence_net(&on))?;
        equivalent("C", net, "pcntoocc(C)", &on, notes)?;
        let conf = forward_configurations(net)?;
        conf_note("C", &conf, notes);
        same("C", &conf, "pcntoocc(C)", &occurrence_configurations(&on))
    })())
}

fn saturation_check(instance: &Instance, notes: &mut Vec<String>) -> Result<Check, AnalysisError> {
    let input = net_input(
        Theorem::Saturation,
        instance,
        &[NetClass::Pcn, NetClass::Cn],
        NetClass::Pcn,
        lift_pcn,
    )?;
    Ok((|| {
        let net = input.net();
        if matches!(input, NetInput::Lifted(..)) {
            member("A(P)", &is_pcn(net))?;
        }
        let sat = saturate(net);
        member("sat(C)", &is_cn(&sat))?;
        equivalent("C", net, "sat(C)", &sat, notes)?;
        let conf = forward_configurations(net)?;
        conf_note("C", &conf, notes);
        same("C", &conf, "sat(C)", &forward_configurations(&sat)?)?;
        if let NetInput::Lifted(core, _) = &input {
            let closed = ppes_to_pcn(&core.hereditary_closure());
            if !isomorphism_note("sat(A(P))", &sat, "A(hc(P))", &closed, notes) {
                return Err(Failure::new("sat(A(P)) and A(hc(P)) are not isomorphic"));
            }
        }
        Ok(())
    })())
}

/// Used by the suite to give each structure kind its natural instance.
pub(crate) fn structure_instance(kind: EsKind, structure: ReversiblePes) -> Instance {
    Instance::Structure(EsDocument::new(kind, structure))
}

pub(crate) fn net_instance(doc: NetDocument) -> Instance {
    Instance::Net(doc)
}
