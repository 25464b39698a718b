//! Journey transitive closure by streaming predecessor propagation.
//!
//! Strict journeys cross at most one arc per step; non-strict journeys may
//! follow any path inside a single step. The non-strict closure is obtained
//! by closing each incoming step statically before feeding it to the same
//! strict engine.

mod format;
mod graph;
mod state;
mod static_closure;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use self::format::{parse_closure, write_closure, ClosureFile, ClosureFormatError};
pub use self::graph::ClosureGraph;
pub use self::state::PredecessorState;
pub use self::static_closure::static_closure_step;

use crate::graph::{Arc, EvolvingGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosureError {
    #[error("vertex count must be at least 1")]
    NoVertices,
    #[error("arc {tail} -> {head} has an endpoint outside [0, {n})")]
    VertexOutOfRange {
        tail: VertexId,
        head: VertexId,
        n: usize,
    },
    #[error("vertex {vertex} outside [0, {n})")]
    UnknownVertex { vertex: VertexId, n: usize },
    #[error("predecessor state already finalized")]
    Finalized,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum JourneySemantics {
    /// At most one arc per step.
    #[default]
    Strict,
    /// Any number of arcs per step.
    NonStrict,
}

impl JourneySemantics {
    pub const ALL: [JourneySemantics; 2] = [JourneySemantics::Strict, JourneySemantics::NonStrict];

    pub fn as_str(self) -> &'static str {
        match self {
            JourneySemantics::Strict => "strict",
            JourneySemantics::NonStrict => "non_strict",
        }
    }
}

impl fmt::Display for JourneySemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for JourneySemantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(JourneySemantics::Strict),
            "non_strict" | "non-strict" => Ok(JourneySemantics::NonStrict),
            other => Err(format!("unknown journey semantics `{other}`")),
        }
    }
}

/// Closure plus the temporal connectivity verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub closure: ClosureGraph,
    pub connected: bool,
    /// First step (1-based) after which the closure was complete; `Some(0)`
    /// for a single vertex. `None` iff not connected.
    pub completed_at_step: Option<usize>,
    /// Steps read before stopping. Equals `completed_at_step` when
    /// connected, `k` otherwise.
    pub steps_consumed: usize,
}

/// Streaming closure computation for either journey semantics.
#[derive(Clone, Debug)]
pub struct ClosureEngine {
    semantics: JourneySemantics,
    state: PredecessorState,
}

impl ClosureEngine {
    pub fn new(n: usize, semantics: JourneySemantics) -> Result<Self, ClosureError> {
        Ok(ClosureEngine {
            semantics,
            state: PredecessorState::new(n)?,
        })
    }

    pub fn semantics(&self) -> JourneySemantics {
        self.semantics
    }

    pub fn state(&self) -> &PredecessorState {
        &self.state
    }

    pub fn is_complete(&self) -> bool {
        self.state.is_complete()
    }

    /// Feeds one step and returns whether the closure is now complete.
    pub fn push_step(&mut self, arcs: &[Arc]) -> Result<bool, ClosureError> {
        match self.semantics {
            JourneySemantics::Strict => self.state.process_step(arcs)?,
            JourneySemantics::NonStrict => {
                let n = self.state.n();
                if let Some(a) = arcs
                    .iter()
                    .find(|a| a.tail.index() >= n || a.head.index() >= n)
                {
                    return Err(ClosureError::VertexOutOfRange {
                        tail: a.tail,
                        head: a.head,
                        n,
                    });
                }
                let closed = static_closure_step(arcs, n);
                self.state.process_step(&closed)?
            }
        }
        Ok(self.state.is_complete())
    }

    /// Closure of the steps pushed so far.
    pub fn snapshot(&self) -> ClosureGraph {
        self.state.snapshot()
    }

    pub fn finish(mut self) -> ConnectivityReport {
        let closure = self.state.finalize();
        let completed_at_step = self.state.completed_at_step();
        ConnectivityReport {
            connected: closure.is_complete(),
            closure,
            completed_at_step,
            steps_consumed: self.state.steps_consumed(),
        }
    }
}

/// Runs the engine over a fallible step stream, stopping as soon as the
/// closure is complete. Steps after completion are never pulled.
pub fn closure_from_steps<I, S, E>(
    n: usize,
    semantics: JourneySemantics,
    steps: I,
) -> Result<ConnectivityReport, E>
where
    I: IntoIterator<Item = Result<S, E>>,
    S: AsRef<[Arc]>,
    E: From<ClosureError>,
{
    let mut engine = ClosureEngine::new(n, semantics)?;
    let mut steps = steps.into_iter();
    while !engine.is_complete() {
        match steps.next() {
            None => break,
            Some(step) => {
                engine.push_step(step?.as_ref())?;
            }
        }
    }
    Ok(engine.finish())
}

pub fn closure(g: &EvolvingGraph, semantics: JourneySemantics) -> ConnectivityReport {
    let steps = g.steps().iter().map(Ok::<_, ClosureError>);
    closure_from_steps(g.n(), semantics, steps).expect("evolving graphs are validated on construction")
}

pub fn strict_closure(g: &EvolvingGraph) -> ConnectivityReport {
    closure(g, JourneySemantics::Strict)
}

pub fn nonstrict_closure(g: &EvolvingGraph) -> ConnectivityReport {
    closure(g, JourneySemantics::NonStrict)
}

/// Connectivity verdict and completion step.
pub fn is_temporally_connected(
    g: &EvolvingGraph,
    semantics: JourneySemantics,
) -> (bool, Option<usize>) {
    let report = closure(g, semantics);
    (report.connected, report.completed_at_step)
}

pub fn journey_exists(c: &ClosureGraph, u: VertexId, v: VertexId) -> Result<bool, ClosureError> {
    c.journey_exists(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arcs(pairs: &[(u32, u32)]) -> Vec<Arc> {
        pairs.iter().map(|&(u, v)| Arc::new(u, v)).collect()
    }

    fn graph(n: usize, steps: &[&[(u32, u32)]]) -> EvolvingGraph {
        EvolvingGraph::from_pairs(n, steps).unwrap()
    }

    #[test]
    fn strict_two_step_path() {
        let r = strict_closure(&graph(3, &[&[(0, 1)], &[(1, 2)]]));
        assert_eq!(r.closure.arcs().collect::<Vec<_>>(), arcs(&[(0, 1), (0, 2), (1, 2)]));
        assert!(!r.connected);
        assert_eq!(r.completed_at_step, None);
        assert_eq!(r.steps_consumed, 2);
    }

    #[test]
    fn strict_early_termination() {
        let r = strict_closure(&graph(2, &[&[(0, 1)], &[(1, 0)], &[], &[]]));
        assert!(r.connected);
        assert!(r.closure.is_complete());
        assert_eq!(r.completed_at_step, Some(2));
        assert_eq!(r.steps_consumed, 2);
    }

    #[test]
    fn nonstrict_chains_within_step() {
        let g = graph(3, &[&[(0, 1), (1, 2)]]);
        assert_eq!(
            nonstrict_closure(&g).closure.arcs().collect::<Vec<_>>(),
            arcs(&[(0, 1), (0, 2), (1, 2)])
        );
        assert_eq!(
            strict_closure(&g).closure.arcs().collect::<Vec<_>>(),
            arcs(&[(0, 1), (1, 2)])
        );
    }

    #[test]
    fn nonstrict_vs_strict_four_vertices() {
        let g = graph(4, &[&[(0, 1)], &[(1, 2), (2, 3)]]);
        let ns = nonstrict_closure(&g).closure;
        let st = strict_closure(&g).closure;
        let (v0, v2, v3) = (VertexId(0), VertexId(2), VertexId(3));
        assert!(ns.contains(v0, v3) && ns.contains(v0, v2));
        assert!(st.contains(v0, v2) && !st.contains(v0, v3));
    }

    #[test]
    fn connectivity_projection() {
        assert_eq!(
            is_temporally_connected(&EvolvingGraph::empty(1, 0).unwrap(), JourneySemantics::Strict),
            (true, Some(0))
        );
        assert_eq!(
            is_temporally_connected(&graph(2, &[&[(0, 1)]]), JourneySemantics::Strict),
            (false, None)
        );
        let r = strict_closure(&EvolvingGraph::empty(1, 3).unwrap());
        assert_eq!(r.steps_consumed, 0);
    }

    #[test]
    fn empty_sequence_has_empty_closure() {
        for s in JourneySemantics::ALL {
            let r = closure(&EvolvingGraph::empty(3, 0).unwrap(), s);
            assert_eq!(r.closure.arc_count(), 0);
            assert!(!r.connected);
        }
    }

    #[test]
    fn single_step_closures() {
        let g = graph(4, &[&[(0, 1), (1, 2), (2, 0), (3, 2)]]);
        let step = &g.steps()[0];
        assert_eq!(
            strict_closure(&g).closure,
            ClosureGraph::from_arcs(4, step.iter().copied())
        );
        assert_eq!(
            nonstrict_closure(&g).closure,
            ClosureGraph::from_arcs(4, static_closure_step(step, 4))
        );
    }

    #[test]
    fn streaming_stops_pulling_after_completion() {
        let steps: Vec<Result<Vec<Arc>, ClosureError>> = vec![
            Ok(arcs(&[(0, 1), (1, 0)])),
            Err(ClosureError::Finalized),
        ];
        let r = closure_from_steps(2, JourneySemantics::Strict, steps).unwrap();
        assert_eq!(r.completed_at_step, Some(1));
    }

    #[test]
    fn engine_rejects_bad_arcs_for_both_semantics() {
        for s in JourneySemantics::ALL {
            let mut e = ClosureEngine::new(2, s).unwrap();
            assert!(matches!(
                e.push_step(&arcs(&[(0, 5)])),
                Err(ClosureError::VertexOutOfRange { .. })
            ));
        }
    }

    #[test]
    fn semantics_parse() {
        assert_eq!("strict".parse(), Ok(JourneySemantics::Strict));
        assert_eq!("non-strict".parse(), Ok(JourneySemantics::NonStrict));
        assert!("loose".parse::<JourneySemantics>().is_err());
    }
}
