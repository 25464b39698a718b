use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Arc, EvolvingGraph, VertexId};
use crate::workload::WorkloadError;

/// How the arcs of each step are drawn.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ArcModel {
    /// Each ordered pair `(u, v)`, `u != v`, is present in each step
    /// independently with probability `p`.
    PerStepBernoulli { p: f64 },
    /// Each step is a uniform sample of exactly `mu` distinct arcs.
    FixedMu { mu: usize },
}

/// Parameters of a random evolving graph. Identical specs give identical graphs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub n: usize,
    pub k: usize,
    pub model: ArcModel,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn bernoulli(n: usize, k: usize, p: f64, seed: u64) -> Self {
        GeneratorSpec {
            n,
            k,
            model: ArcModel::PerStepBernoulli { p },
            seed,
        }
    }

    pub fn fixed_mu(n: usize, k: usize, mu: usize, seed: u64) -> Self {
        GeneratorSpec {
            n,
            k,
            model: ArcModel::FixedMu { mu },
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), WorkloadError> {
        let invalid = |msg: String| Err(WorkloadError::InvalidSpec(msg));
        if self.n == 0 || self.n > u32::MAX as usize {
            return invalid(format!("n = {} must be in [1, 2^32)", self.n));
        }
        match self.model {
            ArcModel::PerStepBernoulli { p } if !(0.0..=1.0).contains(&p) => {
                invalid(format!("p = {p} must be in [0, 1]"))
            }
            ArcModel::FixedMu { mu } if mu > self.n * (self.n - 1) => invalid(format!(
                "mu = {mu} exceeds the {} possible arcs on {} vertices",
                self.n * (self.n - 1),
                self.n
            )),
            _ => Ok(()),
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<EvolvingGraph, WorkloadError> {
    spec.validate()?;
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let steps = (0..spec.k)
        .map(|_| match spec.model {
            ArcModel::PerStepBernoulli { p } => bernoulli_step(&mut rng, n, p),
            ArcModel::FixedMu { mu } => fixed_mu_step(&mut rng, n, mu),
        })
        .collect();
    Ok(EvolvingGraph::new(n, steps)?)
}

fn bernoulli_step(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<Arc> {
    let mut arcs = Vec::new();
    for u in 0..n as u32 {
        for v in 0..n as u32 {
            if u != v && rng.gen_bool(p) {
                arcs.push(Arc::new(u, v));
            }
        }
    }
    arcs
}

/// Decodes `i ∈ [0, n(n-1))` as the `i`-th off-diagonal ordered pair.
fn fixed_mu_step(rng: &mut ChaCha8Rng, n: usize, mu: usize) -> Vec<Arc> {
    if mu == 0 {
        return Vec::new();
    }
    let row = n - 1;
    index::sample(rng, n * row, mu)
        .into_iter()
        .map(|i| {
            let tail = i / row;
            let r = i % row;
            let head = if r < tail { r } else { r + 1 };
            Arc {
                tail: VertexId(tail as u32),
                head: VertexId(head as u32),
            }
        })
        .collect()
}
