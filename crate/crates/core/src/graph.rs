//! Evolving graph model: a fixed vertex set and an ordered sequence of
//! directed arc sets, one per time step.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Dense, zero-based vertex index in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A directed arc `tail -> head`. Ordering is lexicographic on `(tail, head)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    pub fn new(tail: impl Into<VertexId>, head: impl Into<VertexId>) -> Self {
        Arc {
            tail: tail.into(),
            head: head.into(),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    pub fn reversed(&self) -> Self {
        Arc {
            tail: self.head,
            head: self.tail,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be at least 1")]
    NoVertices,
    #[error("vertex count {0} exceeds the supported maximum")]
    TooManyVertices(usize),
    #[error("arc {tail} -> {head} in step {step} has an endpoint outside [0, {n})")]
    VertexOutOfRange {
        step: usize,
        tail: u32,
        head: u32,
        n: usize,
    },
}

/// Largest supported vertex count; ids must fit in a `u32`.
pub const MAX_VERTICES: usize = u32::MAX as usize;

/// A fixed vertex set `0..n` plus steps `E_1..E_k`.
///
/// Each step is kept sorted in `(tail, head)` order, without duplicates and
/// without self-loops, so structural equality is plain `==`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvolvingGraph {
    n: usize,
    steps: Vec<Vec<Arc>>,
}

impl EvolvingGraph {
    /// Builds a graph from raw steps, normalizing each one.
    ///
    /// Self-loops are dropped and duplicate arcs within a step are merged.
    pub fn new(n: usize, steps: Vec<Vec<Arc>>) -> Result<Self, GraphError> {
        Self::with_dropped_loops(n, steps).map(|(g, _)| g)
    }

    /// Like [`EvolvingGraph::new`], also returning how many self-loops were dropped.
    pub fn with_dropped_loops(
        n: usize,
        steps: Vec<Vec<Arc>>,
    ) -> Result<(Self, usize), GraphError> {
        check_vertex_count(n)?;
        let mut dropped = 0;
        let mut normalized = Vec::with_capacity(steps.len());
        for (i, step) in steps.into_iter().enumerate() {
            let (step, d) = normalize_step(n, i + 1, step)?;
            dropped += d;
            normalized.push(step);
        }
        Ok((EvolvingGraph { n, steps: normalized }, dropped))
    }

    /// Builds a graph from `(tail, head)` pairs.
    pub fn from_pairs(n: usize, steps: &[&[(u32, u32)]]) -> Result<Self, GraphError> {
        let steps = steps
            .iter()
            .map(|s| s.iter().map(|&(u, v)| Arc::new(u, v)).collect())
            .collect();
        Self::new(n, steps)
    }

    pub fn empty(n: usize, k: usize) -> Result<Self, GraphError> {
        Self::new(n, vec![Vec::new(); k])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of steps `k`.
    pub fn k(&self) -> usize {
        self.steps.len()
    }

    pub fn steps(&self) -> &[Vec<Arc>] {
        &self.steps
    }

    /// Arc set of step `i`, 1-based.
    pub fn step(&self, i: usize) -> Option<&[Arc]> {
        i.checked_sub(1)
            .and_then(|i| self.steps.get(i))
            .map(Vec::as_slice)
    }

    /// The graph restricted to its first `t` steps.
    pub fn prefix(&self, t: usize) -> EvolvingGraph {
        EvolvingGraph {
            n: self.n,
            steps: self.steps[..t.min(self.k())].to_vec(),
        }
    }

    /// Appends `extra` empty steps.
    pub fn padded(&self, extra: usize) -> EvolvingGraph {
        let mut steps = self.steps.clone();
        steps.extend(std::iter::repeat_with(Vec::new).take(extra));
        EvolvingGraph { n: self.n, steps }
    }

    /// Adds the reverse of every arc, step by step.
    pub fn symmetrized(&self) -> EvolvingGraph {
        let steps = self
            .steps
            .iter()
            .map(|s| {
                let mut out: Vec<Arc> = s.iter().flat_map(|a| [*a, a.reversed()]).collect();
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();
        EvolvingGraph { n: self.n, steps }
    }

    pub fn into_steps(self) -> Vec<Vec<Arc>> {
        self.steps
    }
}

pub(crate) fn check_vertex_count(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    Ok(())
}

/// Sorts, dedups and drops loops. `step` is 1-based and only used in errors.
pub(crate) fn normalize_step(
    n: usize,
    step: usize,
    mut arcs: Vec<Arc>,
) -> Result<(Vec<Arc>, usize), GraphError> {
    if let Some(bad) = arcs
        .iter()
        .find(|a| a.tail.index() >= n || a.head.index() >= n)
    {
        return Err(GraphError::VertexOutOfRange {
            step,
            tail: bad.tail.0,
            head: bad.head.0,
            n,
        });
    }
    let before = arcs.len();
    arcs.retain(|a| !a.is_loop());
    let dropped = before - arcs.len();
    arcs.sort_unstable();
    arcs.dedup();
    Ok((arcs, dropped))
}

/// Density metrics of an evolving graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DensityProfile {
    /// Instant density: `max_i |E_i|`, 0 when `k = 0`.
    pub mu: usize,
    /// Cumulated density: `|E_1 ∪ ... ∪ E_k|`.
    pub m: usize,
    pub k: usize,
    pub n: usize,
}

pub fn density_profile(g: &EvolvingGraph) -> DensityProfile {
    let mu = g.steps.iter().map(Vec::len).max().unwrap_or(0);
    let union: HashSet<Arc> = g.steps.iter().flatten().copied().collect();
    DensityProfile {
        mu,
        m: union.len(),
        k: g.k(),
        n: g.n,
    }
}
