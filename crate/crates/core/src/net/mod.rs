//! Petri nets with inhibitor arcs: representation, step semantics,
//! reachability, states and state-based equivalence.

mod dot;
mod equiv;
mod iso;
mod semantics;

pub use dot::to_dot;
pub use equiv::{net_equiv, EquivVerdict, Side};
pub use iso::{find_isomorphism, Isomorphism};
pub use semantics::{NotEnabled, Safety, StateBound};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetError {
    #[error("invalid name `{0}`")]
    InvalidName(String),
    #[error("`{0}` is declared both as a place and as a transition")]
    NameClash(String),
    #[error("unknown place `{0}`")]
    UnknownPlace(String),
    #[error("unknown transition `{0}`")]
    UnknownTransition(String),
    #[error("unknown place or transition `{0}`")]
    UnknownNode(String),
    #[error("transition `{0}` has an empty preset")]
    EmptyPreset(String),
    #[error("{0}")]
    NotEnabled(NotEnabled),
    #[error("net is not safe: place `{place}` holds more than one token in {marking}")]
    Unsafe { place: String, marking: Marking },
    #[error("transition `{0}` can fire more than once; a depth bound is required")]
    NotSingleExecution(String),
}

/// Names may be any whitespace-free token that does not start with `#`.
pub(crate) fn is_node_name(name: &str) -> bool {
    !name.is_empty() && !name.starts_with('#') && !name.chars().any(char::is_whitespace)
}

/// A multiset of places with positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Marking(BTreeMap<String, u32>);

impl Marking {
    pub fn new() -> Self {
        Self::default()
    }

    /// A set-valued marking.
    pub fn from_places<I, S>(places: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut m = Marking::new();
        for p in places {
            m.add(&p.into(), 1);
        }
        m
    }

    pub fn add(&mut self, place: &str, count: u32) {
        if count > 0 {
            *self.0.entry(place.to_string()).or_insert(0) += count;
        }
    }

    pub fn count(&self, place: &str) -> u32 {
        self.0.get(place).copied().unwrap_or(0)
    }

    pub fn is_set(&self) -> bool {
        self.0.values().all(|&c| c <= 1)
    }

    /// Marked places, without multiplicity.
    pub fn support(&self) -> impl Iterator<Item = &String> {
        self.0.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, u32)> {
        self.0.iter().map(|(p, c)| (p, *c))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Place names repeated by multiplicity, in order.
    pub fn to_names(&self) -> Vec<String> {
        self.0
            .iter()
            .flat_map(|(p, c)| std::iter::repeat_n(p.clone(), *c as usize))
            .collect()
    }
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_names().join(", "))
    }
}

impl Serialize for Marking {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_names().serialize(s)
    }
}

/// A set of transitions fired together.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Step(BTreeSet<String>);

impl Step {
    pub fn new<I, S>(transitions: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Step(transitions.into_iter().map(Into::into).collect())
    }

    pub fn single(t: &str) -> Self {
        Step::new([t])
    }

    pub fn transitions(&self) -> &BTreeSet<String> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parse `a`, `~b` or `{a c}`.
    pub fn parse(text: &str) -> Option<Step> {
        let text = text.trim();
        if let Some(inner) = text.strip_prefix('{') {
            let inner = inner.strip_suffix('}')?;
            let names: Vec<&str> = inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .collect();
            if names.iter().any(|n| !is_node_name(n)) {
                return None;
            }
            Some(Step::new(names))
        } else if is_node_name(text) && !text.contains(['{', '}', ';']) {
            Some(Step::single(text))
        } else {
            None
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::es::show_set(&self.0).fmt(f)
    }
}

/// A multiset of transitions: a state of a net.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TransitionBag(BTreeMap<String, u32>);

impl TransitionBag {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_names<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut bag = Self::new();
        for n in names {
            *bag.0.entry(n.into()).or_insert(0) += 1;
        }
        bag
    }

    pub fn count(&self, t: &str) -> u32 {
        self.0.get(t).copied().unwrap_or(0)
    }

    /// Total number of firings.
    pub fn size(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_set(&self) -> bool {
        self.0.values().all(|&c| c <= 1)
    }

    /// The support, which is the configuration for single-execution nets.
    pub fn support(&self) -> BTreeSet<String> {
        self.0.keys().cloned().collect()
    }

    pub fn to_names(&self) -> Vec<String> {
        self.0
            .iter()
            .flat_map(|(t, c)| std::iter::repeat_n(t.clone(), *c as usize))
            .collect()
    }
}

impl fmt::Display for TransitionBag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_names().join(", "))
    }
}

impl Serialize for TransitionBag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_names().serialize(s)
    }
}

/// A Petri net with inhibitor arcs `<S, T, F, I, m>`.
///
/// Places and transitions are kept in name order; arcs are stored per
/// transition as sorted place indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InhibitorNet {
    places: Vec<String>,
    transitions: Vec<String>,
    pre: Vec<Vec<usize>>,
    post: Vec<Vec<usize>>,
    inhib: Vec<Vec<usize>>,
    initial: Vec<u32>,
}

/// Incremental construction of an [`InhibitorNet`].
#[derive(Debug, Clone, Default)]
pub struct NetBuilder {
    places: BTreeSet<String>,
    transitions: BTreeSet<String>,
    consume: BTreeSet<(String, String)>,
    produce: BTreeSet<(String, String)>,
    inhibit: BTreeSet<(String, String)>,
    marking: BTreeMap<String, u32>,
}

impl NetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn place(&mut self, name: impl Into<String>) -> &mut Self {
        self.places.insert(name.into());
        self
    }

    pub fn transition(&mut self, name: impl Into<String>) -> &mut Self {
        self.transitions.insert(name.into());
        self
    }

    /// Flow arc from `place` to `transition`.
    pub fn consume(&mut self, place: impl Into<String>, transition: impl Into<String>) -> &mut Self {
        self.consume.insert((place.into(), transition.into()));
        self
    }

    /// Flow arc from `transition` to `place`.
    pub fn produce(&mut self, transition: impl Into<String>, place: impl Into<String>) -> &mut Self {
        self.produce.insert((transition.into(), place.into()));
        self
    }

    pub fn inhibit(&mut self, place: impl Into<String>, transition: impl Into<String>) -> &mut Self {
        self.inhibit.insert((place.into(), transition.into()));
        self
    }

    /// Add one token to `place` in the initial marking.
    pub fn mark(&mut self, place: impl Into<String>) -> &mut Self {
        *self.marking.entry(place.into()).or_insert(0) += 1;
        self
    }

    pub fn unmark(&mut self, place: &str) -> &mut Self {
        self.marking.remove(place);
        self
    }

    pub fn remove_inhibit(&mut self, place: &str, transition: &str) -> &mut Self {
        self.inhibit.remove(&(place.to_string(), transition.to_string()));
        self
    }

    pub fn remove_consume(&mut self, place: &str, transition: &str) -> &mut Self {
        self.consume.remove(&(place.to_string(), transition.to_string()));
        self
    }

    pub fn remove_produce(&mut self, transition: &str, place: &str) -> &mut Self {
        self.produce.remove(&(transition.to_string(), place.to_string()));
        self
    }

    pub fn build(&self) -> Result<InhibitorNet, NetError> {
        for name in self.places.iter().chain(&self.transitions) {
            if !is_node_name(name) {
                return Err(NetError::InvalidName(name.clone()));
            }
        }
        if let Some(clash) = self.places.intersection(&self.transitions).next() {
            return Err(NetError::NameClash(clash.clone()));
        }
        let places: Vec<String> = self.places.iter().cloned().collect();
        let transitions: Vec<String> = self.transitions.iter().cloned().collect();
        let p = |n: &str| {
            places
                .binary_search_by(|x| x.as_str().cmp(n))
                .map_err(|_| NetError::UnknownPlace(n.to_string()))
        };
        let t = |n: &str| {
            transitions
                .binary_search_by(|x| x.as_str().cmp(n))
                .map_err(|_| NetError::UnknownTransition(n.to_string()))
        };
        let mut pre = vec![Vec::new(); transitions.len()];
        let mut post = vec![Vec::new(); transitions.len()];
        let mut inhib = vec![Vec::new(); transitions.len()];
        for (s, tr) in &self.consume {
            pre[t(tr)?].push(p(s)?);
        }
        for (tr, s) in &self.produce {
            post[t(tr)?].push(p(s)?);
        }
        for (s, tr) in &self.inhibit {
            inhib[t(tr)?].push(p(s)?);
        }
        for list in pre.iter_mut().chain(post.iter_mut()).chain(inhib.iter_mut()) {
            list.sort_unstable();
        }
        let mut initial = vec![0u32; places.len()];
        for (s, c) in &self.marking {
            initial[p(s)?] += c;
        }
        if let Some(i) = pre.iter().position(Vec::is_empty) {
            return Err(NetError::EmptyPreset(transitions[i].clone()));
        }
        Ok(InhibitorNet {
            places,
            transitions,
            pre,
            post,
            inhib,
            initial,
        })
    }
}

impl InhibitorNet {
    pub fn builder() -> NetBuilder {
        NetBuilder::new()
    }

    /// A builder pre-loaded with this net, for derived nets and mutations.
    pub fn to_builder(&self) -> NetBuilder {
        let mut b = NetBuilder::new();
        for p in &self.places {
            b.place(p.clone());
        }
        for (ti, t) in self.transitions.iter().enumerate() {
            b.transition(t.clone());
            for &s in &self.pre[ti] {
                b.consume(self.places[s].clone(), t.clone());
            }
            for &s in &self.post[ti] {
                b.produce(t.clone(), self.places[s].clone());
            }
            for &s in &self.inhib[ti] {
                b.inhibit(self.places[s].clone(), t.clone());
            }
        }
        for (i, &c) in self.initial.iter().enumerate() {
            for _ in 0..c {
                b.mark(self.places[i].clone());
            }
        }
        b
    }

    pub fn places(&self) -> &[String] {
        &self.places
    }

    pub fn transitions(&self) -> &[String] {
        &self.transitions
    }

    pub fn is_place(&self, name: &str) -> bool {
        self.place_index(name).is_some()
    }

    pub fn is_transition(&self, name: &str) -> bool {
        self.transition_index(name).is_some()
    }

    pub(crate) fn place_index(&self, name: &str) -> Option<usize> {
        self.places.binary_search_by(|x| x.as_str().cmp(name)).ok()
    }

    pub(crate) fn transition_index(&self, name: &str) -> Option<usize> {
        self.transitions.binary_search_by(|x| x.as_str().cmp(name)).ok()
    }

    pub(crate) fn pre_ix(&self, t: usize) -> &[usize] {
        &self.pre[t]
    }

    pub(crate) fn post_ix(&self, t: usize) -> &[usize] {
        &self.post[t]
    }

    pub(crate) fn inhib_ix(&self, t: usize) -> &[usize] {
        &self.inhib[t]
    }

    pub(crate) fn initial_ix(&self) -> &[u32] {
        &self.initial
    }

    /// Transitions producing into each place.
    pub(crate) fn producers_ix(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.places.len()];
        for (t, post) in self.post.iter().enumerate() {
            for &s in post {
                out[s].push(t);
            }
        }
        out
    }

    /// Transitions consuming from each place.
    pub(crate) fn consumers_ix(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.places.len()];
        for (t, pre) in self.pre.iter().enumerate() {
            for &s in pre {
                out[s].push(t);
            }
        }
        out
    }

    fn place_names(&self, ix: &[usize]) -> BTreeSet<String> {
        ix.iter().map(|&i| self.places[i].clone()).collect()
    }

    fn transition_names(&self, ix: &[usize]) -> BTreeSet<String> {
        ix.iter().map(|&i| self.transitions[i].clone()).collect()
    }

    /// `{y | (y, x) ∈ F}` for a place or transition `x`.
    pub fn preset(&self, x: &str) -> Result<BTreeSet<String>, NetError> {
        if let Some(t) = self.transition_index(x) {
            Ok(self.place_names(&self.pre[t]))
        } else if let Some(s) = self.place_index(x) {
            Ok(self.transition_names(&self.producers_ix()[s]))
        } else {
            Err(NetError::UnknownNode(x.to_string()))
        }
    }

    /// `{y | (x, y) ∈ F}` for a place or transition `x`.
    pub fn postset(&self, x: &str) -> Result<BTreeSet<String>, NetError> {
        if let Some(t) = self.transition_index(x) {
            Ok(self.place_names(&self.post[t]))
        } else if let Some(s) = self.place_index(x) {
            Ok(self.transition_names(&self.consumers_ix()[s]))
        } else {
            Err(NetError::UnknownNode(x.to_string()))
        }
    }

    /// `{s | (s, x) ∈ I}`; empty for places.
    pub fn inhibset(&self, x: &str) -> Result<BTreeSet<String>, NetError> {
        if let Some(t) = self.transition_index(x) {
            Ok(self.place_names(&self.inhib[t]))
        } else if self.place_index(x).is_some() {
            Ok(BTreeSet::new())
        } else {
            Err(NetError::UnknownNode(x.to_string()))
        }
    }

    /// Flow arcs as `(source, target)` name pairs.
    pub fn flow(&self) -> BTreeSet<(String, String)> {
        let mut out = BTreeSet::new();
        for (t, name) in self.transitions.iter().enumerate() {
            for &s in &self.pre[t] {
                out.insert((self.places[s].clone(), name.clone()));
            }
            for &s in &self.post[t] {
                out.insert((name.clone(), self.places[s].clone()));
            }
        }
        out
    }

    /// Inhibitor arcs as `(place, transition)` pairs.
    pub fn inhibitor_arcs(&self) -> BTreeSet<(String, String)> {
        let mut out = BTreeSet::new();
        for (t, name) in self.transitions.iter().enumerate() {
            for &s in &self.inhib[t] {
                out.insert((self.places[s].clone(), name.clone()));
            }
        }
        out
    }

    pub fn has_inhibitors(&self) -> bool {
        self.inhib.iter().any(|i| !i.is_empty())
    }

    pub fn initial_marking(&self) -> Marking {
        self.marking_from_ix(&self.initial)
    }

    pub(crate) fn marking_from_ix(&self, counts: &[u32]) -> Marking {
        let mut m = Marking::new();
        for (i, &c) in counts.iter().enumerate() {
            m.add(&self.places[i], c);
        }
        m
    }

    pub(crate) fn marking_to_ix(&self, m: &Marking) -> Result<Vec<u32>, NetError> {
        let mut out = vec![0u32; self.places.len()];
        for (p, c) in m.iter() {
            let i = self.place_index(p).ok_or_else(|| NetError::UnknownPlace(p.clone()))?;
            out[i] = c;
        }
        Ok(out)
    }

    pub(crate) fn step_to_ix(&self, step: &Step) -> Result<Vec<usize>, NetError> {
        step.transitions()
            .iter()
            .map(|t| {
                self.transition_index(t)
                    .ok_or_else(|| NetError::UnknownTransition(t.clone()))
            })
            .collect()
    }

    pub(crate) fn bag_from_ix(&self, counts: &[u32]) -> TransitionBag {
        let mut bag = TransitionBag::new();
        for (i, &c) in counts.iter().enumerate() {
            if c > 0 {
                bag.0.insert(self.transitions[i].clone(), c);
            }
        }
        bag
    }

    /// The subnet on a subset of transitions, keeping every place, the flow
    /// and inhibitor arcs incident to kept transitions, and the marking.
    pub fn restrict_transitions(&self, keep: &BTreeSet<String>) -> InhibitorNet {
        let mut b = self.to_builder();
        b.transitions.retain(|t| keep.contains(t));
        b.consume.retain(|(_, t)| keep.contains(t));
        b.produce.retain(|(t, _)| keep.contains(t));
        b.inhibit.retain(|(_, t)| keep.contains(t));
        b.build().expect("restriction of a valid net")
    }
}
