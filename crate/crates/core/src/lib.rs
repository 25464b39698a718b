//! Journey transitive closure and temporal connectivity for evolving graphs.
//!
//! An evolving graph is a fixed vertex set with a sequence of directed arc
//! sets `E_1..E_k`. A journey crosses arcs in non-decreasing step order;
//! a strict journey crosses at most one arc per step. The closure engine
//! streams the steps once, maintaining for every vertex the set of vertices
//! that can reach it, and stops as soon as every vertex reaches every other.
//!
//! ```
//! use tcheck_core::{strict_closure, EvolvingGraph, VertexId};
//!
//! let g = EvolvingGraph::from_pairs(3, &[&[(0, 1)], &[(1, 2)]]).unwrap();
//! let report = strict_closure(&g);
//! assert!(report.closure.journey_exists(VertexId(0), VertexId(2)).unwrap());
//! assert!(!report.connected);
//! ```

mod bitset;
pub mod closure;
pub mod graph;
pub mod oracle;
pub mod teg;
pub mod workload;

pub use closure::{
    closure, closure_from_steps, is_temporally_connected, journey_exists, nonstrict_closure,
    static_closure_step, strict_closure, ClosureEngine, ClosureError, ClosureGraph,
    ConnectivityReport, JourneySemantics, PredecessorState,
};
pub use graph::{density_profile, Arc, DensityProfile, EvolvingGraph, GraphError, VertexId};
pub use oracle::{enumerate_journeys, oracle_closure, OracleError, TimeExpandedGraph};
pub use teg::{parse, serialize, TegError, TegReader};
pub use workload::{
    bench_grid, generate, scaling_report, BenchRecord, GeneratorSpec, ScalingReport, WorkloadError,
};
