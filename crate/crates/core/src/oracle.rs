//! Reference reachability used to check the closure engine.
//!
//! Two constructions that share nothing with the engine or with each other:
//! breadth-first search over an explicit time-expanded graph, and an
//! exhaustive search over labeled arc sequences. Neither cares about speed.

use std::collections::VecDeque;

use thiserror::Error;

use crate::closure::{ClosureGraph, JourneySemantics};
use crate::graph::{Arc, EvolvingGraph, VertexId};

/// Default limit on `n · (k + 1)` expanded nodes.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;
/// Default limit on the arc-sequence length explored by [`enumerate_journeys`].
pub const DEFAULT_SEQUENCE_CAP: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("time-expanded graph would have {nodes} nodes, above the cap of {cap}")]
    TooLarge { nodes: usize, cap: usize },
    #[error("simple journeys over {n} vertices can use {needed} arcs, above the cap of {cap}")]
    SequenceCapExceeded { n: usize, needed: usize, cap: usize },
    #[error("vertex {vertex} outside [0, {n})")]
    UnknownVertex { vertex: VertexId, n: usize },
}

/// Layered static digraph with one copy of `V` per time index `0..=k`.
///
/// Node `(v, t)` means "at `v` after step `t`". Wait arcs `(v, t) -> (v, t+1)`
/// let a journey pause; travel arcs `(u, t-1) -> (v, t)` cross `(u, v) ∈ E_t`.
/// The non-strict variant also has `(u, t) -> (v, t)` for `(u, v) ∈ E_t`,
/// allowing several crossings within step `t`.
#[derive(Clone, Debug)]
pub struct TimeExpandedGraph {
    n: usize,
    k: usize,
    semantics: JourneySemantics,
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl TimeExpandedGraph {
    pub fn build(g: &EvolvingGraph, semantics: JourneySemantics) -> Self {
        let (n, k) = (g.n(), g.k());
        let node = |v: VertexId, t: usize| t * n + v.index();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for t in 0..k {
            for v in 0..n as u32 {
                edges.push((node(VertexId(v), t), node(VertexId(v), t + 1)));
            }
        }
        for (i, step) in g.steps().iter().enumerate() {
            let t = i + 1;
            for a in step {
                edges.push((node(a.tail, t - 1), node(a.head, t)));
                if semantics == JourneySemantics::NonStrict {
                    edges.push((node(a.tail, t), node(a.head, t)));
                }
            }
        }
        let nodes = n * (k + 1);
        let mut offsets = vec![0usize; nodes + 1];
        for &(from, _) in &edges {
            offsets[from + 1] += 1;
        }
        for i in 0..nodes {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut targets = vec![0usize; edges.len()];
        for (from, to) in edges {
            targets[cursor[from]] = to;
            cursor[from] += 1;
        }
        TimeExpandedGraph {
            n,
            k,
            semantics,
            offsets,
            targets,
        }
    }

    pub fn node_count(&self) -> usize {
        self.n * (self.k + 1)
    }

    pub fn arc_count(&self) -> usize {
        self.targets.len()
    }

    pub fn semantics(&self) -> JourneySemantics {
        self.semantics
    }

    /// Whether any arc stays inside one layer.
    pub fn has_within_layer_arcs(&self) -> bool {
        (0..self.node_count()).any(|x| {
            self.targets[self.offsets[x]..self.offsets[x + 1]]
                .iter()
                .any(|&y| y / self.n == x / self.n)
        })
    }

    /// Vertices `v` such that some `(v, t)` is reachable from `(source, 0)`.
    pub fn reachable_from(&self, source: VertexId) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        let mut queue = VecDeque::from([source.index()]);
        seen[source.index()] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &self.targets[self.offsets[x]..self.offsets[x + 1]] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let mut reached = vec![false; self.n];
        for (x, _) in seen.iter().enumerate().filter(|(_, &s)| s) {
            reached[x % self.n] = true;
        }
        reached
    }
}

pub fn oracle_closure(
    g: &EvolvingGraph,
    semantics: JourneySemantics,
) -> Result<ClosureGraph, OracleError> {
    oracle_closure_with_cap(g, semantics, DEFAULT_NODE_CAP)
}

pub fn oracle_closure_with_cap(
    g: &EvolvingGraph,
    semantics: JourneySemantics,
    cap: usize,
) -> Result<ClosureGraph, OracleError> {
    let nodes = g.n().saturating_mul(g.k() + 1);
    if nodes > cap {
        return Err(OracleError::TooLarge { nodes, cap });
    }
    let teg = TimeExpandedGraph::build(g, semantics);
    let mut arcs = Vec::new();
    for u in 0..g.n() as u32 {
        let reached = teg.reachable_from(VertexId(u));
        for (v, _) in reached.iter().enumerate().filter(|(_, &r)| r) {
            if v as u32 != u {
                arcs.push(Arc::new(u, v as u32));
            }
        }
    }
    Ok(ClosureGraph::from_arcs(g.n(), arcs))
}

/// Connectivity verdict by scanning prefixes: the smallest `t` whose
/// length-`t` prefix has a complete oracle closure.
pub fn oracle_connectivity(
    g: &EvolvingGraph,
    semantics: JourneySemantics,
) -> Result<(bool, Option<usize>), OracleError> {
    for t in 0..=g.k() {
        if oracle_closure(&g.prefix(t), semantics)?.is_complete() {
            return Ok((true, Some(t)));
        }
    }
    Ok((false, None))
}

/// Exhaustive search for a journey `u ⇝ v`: a chain of arcs
/// `e_1 .. e_p` with `e_j ∈ E_{t_j}` and labels non-decreasing (strictly
/// increasing for strict journeys). `u = v` holds via the empty journey.
///
/// Only vertex-simple sequences are explored, which loses nothing since any
/// journey can be shortcut at a repeated vertex. The search refuses graphs
/// whose simple journeys could exceed `DEFAULT_SEQUENCE_CAP` arcs.
pub fn enumerate_journeys(
    g: &EvolvingGraph,
    semantics: JourneySemantics,
    u: VertexId,
    v: VertexId,
) -> Result<bool, OracleError> {
    enumerate_journeys_with_cap(g, semantics, u, v, DEFAULT_SEQUENCE_CAP)
}

pub fn enumerate_journeys_with_cap(
    g: &EvolvingGraph,
    semantics: JourneySemantics,
    u: VertexId,
    v: VertexId,
    cap: usize,
) -> Result<bool, OracleError> {
    let n = g.n();
    for vertex in [u, v] {
        if vertex.index() >= n {
            return Err(OracleError::UnknownVertex { vertex, n });
        }
    }
    let needed = n - 1;
    if needed > cap {
        return Err(OracleError::SequenceCapExceeded { n, needed, cap });
    }
    if u == v {
        return Ok(true);
    }
    let mut on_path = vec![false; n];
    on_path[u.index()] = true;
    Ok(extend(g, semantics, v, u, 0, &mut on_path))
}

/// Tries every arc leaving `at` whose label may follow `last_label`.
fn extend(
    g: &EvolvingGraph,
    semantics: JourneySemantics,
    target: VertexId,
    at: VertexId,
    last_label: usize,
    on_path: &mut [bool],
) -> bool {
    let first = match semantics {
        JourneySemantics::Strict => last_label + 1,
        JourneySemantics::NonStrict => last_label.max(1),
    };
    for label in first..=g.k() {
        for arc in g.step(label).unwrap() {
            if arc.tail != at {
                continue;
            }
            if arc.head == target {
                return true;
            }
            let h = arc.head.index();
            if on_path[h] {
                continue;
            }
            on_path[h] = true;
            let found = extend(g, semantics, target, arc.head, label, on_path);
            on_path[h] = false;
            if found {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use JourneySemantics::{NonStrict, Strict};

    fn graph(n: usize, steps: &[&[(u32, u32)]]) -> EvolvingGraph {
        EvolvingGraph::from_pairs(n, steps).unwrap()
    }

    fn pairs(c: &ClosureGraph) -> Vec<(u32, u32)> {
        c.arcs().map(|a| (a.tail.0, a.head.0)).collect()
    }

    #[test]
    fn expanded_graph_shape() {
        let g = graph(3, &[&[(0, 1), (1, 2)], &[(2, 0)]]);
        let st = TimeExpandedGraph::build(&g, Strict);
        assert_eq!(st.node_count(), 9);
        // 6 wait arcs + 3 travel arcs.
        assert_eq!(st.arc_count(), 9);
        assert!(!st.has_within_layer_arcs());
        let ns = TimeExpandedGraph::build(&g, NonStrict);
        assert_eq!(ns.arc_count(), 12);
        assert!(ns.has_within_layer_arcs());
    }

    #[test]
    fn closures_match_hand_traces() {
        let g = graph(3, &[&[(0, 1)], &[(1, 2)]]);
        assert_eq!(
            pairs(&oracle_closure(&g, Strict).unwrap()),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        let g = graph(3, &[&[(0, 1), (1, 2)]]);
        assert_eq!(pairs(&oracle_closure(&g, Strict).unwrap()), vec![(0, 1), (1, 2)]);
        assert_eq!(
            pairs(&oracle_closure(&g, NonStrict).unwrap()),
            vec![(0, 1), (0, 2), (1, 2)]
        );
    }

    #[test]
    fn node_cap() {
        let g = EvolvingGraph::empty(10, 9).unwrap();
        assert_eq!(
            oracle_closure_with_cap(&g, Strict, 99).unwrap_err(),
            OracleError::TooLarge { nodes: 100, cap: 99 }
        );
        assert!(oracle_closure_with_cap(&g, Strict, 100).is_ok());
    }

    #[test]
    fn enumeration_examples() {
        let g = graph(3, &[&[(1, 2)], &[(0, 1)]]);
        assert!(!enumerate_journeys(&g, Strict, VertexId(0), VertexId(2)).unwrap());
        assert!(!enumerate_journeys(&g, NonStrict, VertexId(0), VertexId(2)).unwrap());

        let g = graph(4, &[&[(0, 1)], &[(1, 2), (2, 3)]]);
        assert!(enumerate_journeys(&g, NonStrict, VertexId(0), VertexId(3)).unwrap());
        assert!(!enumerate_journeys(&g, Strict, VertexId(0), VertexId(3)).unwrap());
        assert!(enumerate_journeys(&g, Strict, VertexId(3), VertexId(3)).unwrap());
    }

    #[test]
    fn enumeration_caps() {
        let g = EvolvingGraph::empty(10, 1).unwrap();
        assert_eq!(
            enumerate_journeys(&g, Strict, VertexId(0), VertexId(1)).unwrap_err(),
            OracleError::SequenceCapExceeded {
                n: 10,
                needed: 9,
                cap: 8
            }
        );
        assert!(enumerate_journeys_with_cap(&g, Strict, VertexId(0), VertexId(1), 9).is_ok());
        assert!(matches!(
            enumerate_journeys(&graph(2, &[]), Strict, VertexId(0), VertexId(2)),
            Err(OracleError::UnknownVertex { .. })
        ));
    }

    #[test]
    fn prefix_scan() {
        let g = graph(2, &[&[], &[(0, 1)], &[(1, 0)], &[]]);
        assert_eq!(oracle_connectivity(&g, Strict).unwrap(), (true, Some(3)));
        assert_eq!(
            oracle_connectivity(&EvolvingGraph::empty(1, 2).unwrap(), Strict).unwrap(),
            (true, Some(0))
        );
        assert_eq!(
            oracle_connectivity(&graph(2, &[&[(0, 1)]]), NonStrict).unwrap(),
            (false, None)
        );
    }
}
