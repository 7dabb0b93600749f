use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use super::{InhibitorNet, Marking, NetError, Step, TransitionBag};
use crate::es::show_set;

/// Why a step cannot fire at a marking.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NotEnabled {
    pub step: Step,
    pub marking: Marking,
    /// Places holding fewer tokens than the step consumes.
    pub missing_tokens: Vec<String>,
    /// Inhibitor places of the step that are marked.
    pub inhibited_by: Vec<String>,
    /// Inhibitor places of one member that another member would fill.
    pub refilled: Vec<String>,
}

impl fmt::Display for NotEnabled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {} is not enabled at {}", self.step, self.marking)?;
        if !self.missing_tokens.is_empty() {
            write!(f, "; missing tokens in {}", show_set(&self.missing_tokens))?;
        }
        if !self.inhibited_by.is_empty() {
            write!(f, "; inhibited by marked {}", show_set(&self.inhibited_by))?;
        }
        if !self.refilled.is_empty() {
            write!(
                f,
                "; inhibitor places {} are refilled by another transition of the step",
                show_set(&self.refilled)
            )?;
        }
        Ok(())
    }
}

/// How far [`InhibitorNet::states`] explores.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateBound {
    /// Closure until no new state appears. Only valid for nets in which no
    /// transition can fire twice in one execution.
    Exhaustive,
    /// Executions of at most this many steps.
    Depth(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Safety {
    Safe,
    Unsafe {
        marking: Marking,
    },
    /// The bound on distinct markings was hit first.
    Inconclusive {
        explored: usize,
    },
}

type Counts = Vec<u32>;

impl InhibitorNet {
    /// The default exploration depth for states and equivalence: `2|T| + 2`.
    pub fn default_depth(&self) -> usize {
        2 * self.transitions.len() + 2
    }

    fn ix_enabled(&self, m: &[u32], step: &[usize]) -> bool {
        let mut need = vec![0u32; m.len()];
        let mut fill = vec![0u32; m.len()];
        for &t in step {
            for &s in &self.pre[t] {
                need[s] += 1;
            }
            for &s in &self.post[t] {
                fill[s] += 1;
            }
        }
        need.iter().zip(m).all(|(n, have)| n <= have)
            && step.iter().all(|&t| {
                self.inhib[t]
                    .iter()
                    .all(|&s| m[s] == 0 && fill[s] == self.own_fill(t, s))
            })
    }

    fn own_fill(&self, t: usize, s: usize) -> u32 {
        u32::from(self.post[t].contains(&s))
    }

    /// Enabledness of a single transition, the common case.
    fn ix_enabled_one(&self, m: &[u32], t: usize) -> bool {
        self.pre[t].iter().all(|&s| m[s] > 0) && self.inhib[t].iter().all(|&s| m[s] == 0)
    }

    fn ix_fire(&self, m: &[u32], step: &[usize]) -> Counts {
        let mut next = m.to_vec();
        for &t in step {
            for &s in &self.pre[t] {
                next[s] -= 1;
            }
        }
        for &t in step {
            for &s in &self.post[t] {
                next[s] += 1;
            }
        }
        next
    }

    fn diagnose(&self, m: &[u32], step: &Step, ix: &[usize]) -> NotEnabled {
        let mut need = vec![0u32; m.len()];
        let mut fill = vec![0u32; m.len()];
        for &t in ix {
            for &s in &self.pre[t] {
                need[s] += 1;
            }
            for &s in &self.post[t] {
                fill[s] += 1;
            }
        }
        let inhib: BTreeSet<usize> = ix.iter().flat_map(|&t| self.inhib[t].iter().copied()).collect();
        let fill = &fill;
        let refilled: BTreeSet<usize> = ix
            .iter()
            .flat_map(|&t| {
                self.inhib[t]
                    .iter()
                    .filter(move |&&s| fill[s] > self.own_fill(t, s))
                    .copied()
            })
            .collect();
        NotEnabled {
            step: step.clone(),
            marking: self.marking_from_ix(m),
            missing_tokens: (0..m.len())
                .filter(|&s| need[s] > m[s])
                .map(|s| self.places[s].clone())
                .collect(),
            inhibited_by: inhib
                .iter()
                .filter(|&&s| m[s] > 0)
                .map(|&s| self.places[s].clone())
                .collect(),
            refilled: refilled.iter().map(|&s| self.places[s].clone()).collect(),
        }
    }

    /// `pre A ⊆ m` and every inhibitor place of `t ∈ A` is empty in `m` and
    /// not filled by another member of `A`. A transition may produce into
    /// its own inhibitor places.
    pub fn step_enabled(&self, m: &Marking, step: &Step) -> Result<bool, NetError> {
        let counts = self.marking_to_ix(m)?;
        let ix = self.step_to_ix(step)?;
        Ok(self.ix_enabled(&counts, &ix))
    }

    /// `m − pre A + post A`.
    pub fn fire(&self, m: &Marking, step: &Step) -> Result<Marking, NetError> {
        let counts = self.marking_to_ix(m)?;
        let ix = self.step_to_ix(step)?;
        if !self.ix_enabled(&counts, &ix) {
            return Err(NetError::NotEnabled(self.diagnose(&counts, step, &ix)));
        }
        Ok(self.marking_from_ix(&self.ix_fire(&counts, &ix)))
    }

    /// Fire a sequence of steps from the initial marking, returning every
    /// marking after the first (so `steps.len()` entries).
    pub fn fire_sequence(&self, steps: &[Step]) -> Result<Vec<Marking>, NetError> {
        let mut m = self.initial_marking();
        let mut out = Vec::with_capacity(steps.len());
        for step in steps {
            m = self.fire(&m, step)?;
            out.push(m.clone());
        }
        Ok(out)
    }

    /// Enabled steps as index sets, built by extending enabled steps one
    /// transition at a time (enabledness is closed under subsets).
    fn ix_enabled_steps(&self, m: &[u32], max_size: usize) -> Vec<Vec<usize>> {
        let singles: Vec<usize> = (0..self.transitions.len())
            .filter(|&t| self.ix_enabled_one(m, t))
            .collect();
        let mut out = Vec::new();
        let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
        while let Some((step, from)) = stack.pop() {
            if step.len() == max_size {
                continue;
            }
            for (k, &t) in singles.iter().enumerate().skip(from) {
                let mut next = step.clone();
                next.push(t);
                if self.ix_enabled(m, &next) {
                    out.push(next.clone());
                    stack.push((next, k + 1));
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| self.names_cmp(a, b)));
        out
    }

    fn names_cmp(&self, a: &[usize], b: &[usize]) -> std::cmp::Ordering {
        let na: Vec<&String> = a.iter().map(|&t| &self.transitions[t]).collect();
        let nb: Vec<&String> = b.iter().map(|&t| &self.transitions[t]).collect();
        na.cmp(&nb)
    }

    /// Nonempty enabled steps with at most `max_size` transitions, ordered
    /// by size and then by name.
    pub fn enabled_steps(&self, m: &Marking, max_size: usize) -> Result<Vec<Step>, NetError> {
        let counts = self.marking_to_ix(m)?;
        Ok(self
            .ix_enabled_steps(&counts, max_size)
            .into_iter()
            .map(|ix| Step::new(ix.into_iter().map(|t| self.transitions[t].clone())))
            .collect())
    }

    fn unsafe_error(&self, m: &[u32]) -> Option<NetError> {
        m.iter().position(|&c| c > 1).map(|s| NetError::Unsafe {
            place: self.places[s].clone(),
            marking: self.marking_from_ix(m),
        })
    }

    fn explore(&self, use_steps: bool) -> Result<BTreeSet<Marking>, NetError> {
        let start = self.initial.clone();
        if let Some(e) = self.unsafe_error(&start) {
            return Err(e);
        }
        let mut seen: HashSet<Counts> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(m) = queue.pop_front() {
            let steps: Vec<Vec<usize>> = if use_steps {
                self.ix_enabled_steps(&m, self.transitions.len())
            } else {
                (0..self.transitions.len())
                    .filter(|&t| self.ix_enabled_one(&m, t))
                    .map(|t| vec![t])
                    .collect()
            };
            for step in steps {
                let next = self.ix_fire(&m, &step);
                if let Some(e) = self.unsafe_error(&next) {
                    return Err(e);
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.iter().map(|m| self.marking_from_ix(m)).collect())
    }

    /// Markings reachable from the initial one. Aborts with
    /// [`NetError::Unsafe`] as soon as a place would hold two tokens.
    pub fn reachable_markings(&self) -> Result<BTreeSet<Marking>, NetError> {
        self.explore(false)
    }

    /// As [`reachable_markings`](Self::reachable_markings) but firing every
    /// enabled step rather than single transitions.
    pub fn reachable_markings_by_steps(&self) -> Result<BTreeSet<Marking>, NetError> {
        self.explore(true)
    }

    /// The states of the net: transition multisets accumulated along
    /// executions.
    pub fn states(&self, bound: StateBound) -> Result<BTreeSet<TransitionBag>, NetError> {
        let start = (self.initial.clone(), vec![0u32; self.transitions.len()]);
        let mut seen: HashSet<(Counts, Counts)> = HashSet::from([start.clone()]);
        let mut frontier = vec![start];
        let mut depth = 0usize;
        while !frontier.is_empty() {
            if let StateBound::Depth(d) = bound {
                if depth == d {
                    break;
                }
            }
            depth += 1;
            let mut next_frontier = Vec::new();
            for (m, bag) in frontier {
                let steps: Vec<Vec<usize>> = match bound {
                    StateBound::Exhaustive => (0..self.transitions.len())
                        .filter(|&t| self.ix_enabled_one(&m, t))
                        .map(|t| vec![t])
                        .collect(),
                    StateBound::Depth(_) => self.ix_enabled_steps(&m, self.transitions.len()),
                };
                for step in steps {
                    let mut next_bag = bag.clone();
                    for &t in &step {
                        next_bag[t] += 1;
                        if bound == StateBound::Exhaustive && next_bag[t] > 1 {
                            return Err(NetError::NotSingleExecution(self.transitions[t].clone()));
                        }
                    }
                    let pair = (self.ix_fire(&m, &step), next_bag);
                    if seen.insert(pair.clone()) {
                        next_frontier.push(pair);
                    }
                }
            }
            frontier = next_frontier;
        }
        Ok(seen.iter().map(|(_, bag)| self.bag_from_ix(bag)).collect())
    }

    /// Whether no transition can occur twice in any execution.
    pub fn is_single_execution(&self) -> bool {
        !matches!(
            self.states(StateBound::Exhaustive),
            Err(NetError::NotSingleExecution(_))
        )
    }

    /// Explore at most `bound` distinct markings looking for a place with
    /// two tokens.
    pub fn is_safe(&self, bound: usize) -> Safety {
        let start = self.initial.clone();
        if start.iter().any(|&c| c > 1) {
            return Safety::Unsafe {
                marking: self.marking_from_ix(&start),
            };
        }
        let mut seen: HashSet<Counts> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(m) = queue.pop_front() {
            for t in 0..self.transitions.len() {
                if !self.ix_enabled_one(&m, t) {
                    continue;
                }
                let next = self.ix_fire(&m, &[t]);
                if next.iter().any(|&c| c > 1) {
                    return Safety::Unsafe {
                        marking: self.marking_from_ix(&next),
                    };
                }
                if seen.insert(next.clone()) {
                    if seen.len() > bound {
                        return Safety::Inconclusive { explored: bound };
                    }
                    queue.push_back(next);
                }
            }
        }
        Safety::Safe
    }

    /// True iff the flow relation has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        self.flow_cycle_nodes().is_empty()
    }

    /// Nodes lying on or between directed cycles of the flow relation,
    /// sorted by name. Empty iff the net is acyclic.
    pub fn flow_cycle_nodes(&self) -> Vec<String> {
        // Nodes: places 0..P, transitions P..P+T.
        let np = self.places.len();
        let n = np + self.transitions.len();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for t in 0..self.transitions.len() {
            for &s in &self.pre[t] {
                succ[s].push(np + t);
                pred[np + t].push(s);
            }
            for &s in &self.post[t] {
                succ[np + t].push(s);
                pred[s].push(np + t);
            }
        }
        let mut alive = vec![true; n];
        // Peel sources, then sinks; what remains cannot be peeled either way.
        for (edges, other) in [(&pred, &succ), (&succ, &pred)] {
            let mut deg: Vec<usize> = (0..n).map(|v| edges[v].iter().filter(|&&w| alive[w]).count()).collect();
            let mut queue: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] == 0).collect();
            while let Some(v) = queue.pop() {
                alive[v] = false;
                for &w in &other[v] {
                    if alive[w] {
                        deg[w] -= 1;
                        if deg[w] == 0 {
                            queue.push(w);
                        }
                    }
                }
            }
        }
        let mut out: Vec<String> = (0..n)
            .filter(|&v| alive[v])
            .map(|v| {
                if v < np {
                    self.places[v].clone()
                } else {
                    self.transitions[v - np].clone()
                }
            })
            .collect();
        out.sort();
        out
    }
}
