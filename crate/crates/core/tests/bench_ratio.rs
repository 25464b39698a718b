//! Doubling the step count of a disconnected fixed-mu workload roughly
//! doubles the closure time. The instance is wide and sparse so that union
//! work dominates; at smaller k the share of tails with a materialized set
//! is still growing and the ratio overshoots.

use std::time::Duration;

use tcheck_core::workload::{bench_grid_with, BenchOptions};
use tcheck_core::{GeneratorSpec, JourneySemantics};

#[test]
fn doubling_k_doubles_wall_time() {
    let specs = [
        GeneratorSpec::fixed_mu(40_000, 2000, 4, 21),
        GeneratorSpec::fixed_mu(40_000, 4000, 4, 21),
    ];
    let options = BenchOptions {
        repetitions: 7,
        min_sample_time: Duration::ZERO,
    };
    let records = bench_grid_with(&specs, JourneySemantics::Strict, &options).unwrap();
    let (base, doubled) = (&records[0], &records[1]);
    assert!(!base.connected && !doubled.connected);
    assert_eq!((base.n, base.mu, doubled.k), (doubled.n, doubled.mu, 2 * base.k));
    assert!(base.wall_time >= Duration::from_millis(10), "{:?}", base.wall_time);
    let ratio = doubled.wall_time.as_secs_f64() / base.wall_time.as_secs_f64();
    eprintln!("base {:?}, ratio {ratio:.2}", base.wall_time);
    assert!((1.5..=3.0).contains(&ratio), "ratio {ratio:.2}");
}
