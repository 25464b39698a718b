//! Workload grids shared by the benchmarks.

use tcheck_core::GeneratorSpec;

pub const SEED: u64 = 0x5eed;

/// Doubling `k` at `n = 2000`, `mu = 8`.
pub fn k_axis() -> Vec<GeneratorSpec> {
    [64, 128, 256, 512]
        .map(|k| GeneratorSpec::fixed_mu(2000, k, 8, SEED))
        .to_vec()
}

/// Doubling `n` at `k = 128`, `mu = 8`.
pub fn n_axis() -> Vec<GeneratorSpec> {
    [500, 1000, 2000, 4000]
        .map(|n| GeneratorSpec::fixed_mu(n, 128, 8, SEED))
        .to_vec()
}

/// Doubling `mu` at `n = 2000`, `k = 128`.
pub fn mu_axis() -> Vec<GeneratorSpec> {
    [4, 8, 16, 32]
        .map(|mu| GeneratorSpec::fixed_mu(2000, 128, mu, SEED))
        .to_vec()
}
