use std::hint::black_box;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use crate::closure::{closure, ConnectivityReport, JourneySemantics};
use crate::graph::{density_profile, EvolvingGraph};
use crate::workload::{generate, GeneratorSpec, WorkloadError};

/// One measured grid point.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub k: usize,
    pub mu: usize,
    pub m: usize,
    pub semantics: JourneySemantics,
    /// Median time of one closure computation.
    pub wall_time: Duration,
    pub connected: bool,
    pub completed_at_step: Option<usize>,
}

pub const CSV_HEADER: &str = "n,k,mu,m,semantics,connected,completed_at_step,wall_time_ns";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchOptions {
    /// Timed samples per grid point; the reported time is their median.
    pub repetitions: usize,
    /// Each sample repeats the computation until at least this much time has
    /// passed and reports the mean, which keeps sub-millisecond runs above
    /// timer resolution. Zero means one run per sample.
    pub min_sample_time: Duration,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            repetitions: 5,
            min_sample_time: Duration::from_millis(10),
        }
    }
}

/// Generates and times each spec in order with default sampling.
pub fn bench_grid(
    specs: &[GeneratorSpec],
    semantics: JourneySemantics,
    repetitions: usize,
) -> Result<Vec<BenchRecord>, WorkloadError> {
    let options = BenchOptions {
        repetitions,
        ..BenchOptions::default()
    };
    bench_grid_with(specs, semantics, &options)
}

pub fn bench_grid_with(
    specs: &[GeneratorSpec],
    semantics: JourneySemantics,
    options: &BenchOptions,
) -> Result<Vec<BenchRecord>, WorkloadError> {
    if options.repetitions == 0 {
        return Err(WorkloadError::InvalidSpec(
            "repetitions must be at least 1".into(),
        ));
    }
    let graphs = specs.iter().map(generate).collect::<Result<Vec<_>, _>>()?;
    let reports: Vec<_> = graphs.iter().map(|g| closure(g, semantics)).collect();
    // Repetitions go round-robin over the grid, so a burst of outside load
    // spoils one sample of several points instead of every sample of one.
    let mut samples = vec![Vec::with_capacity(options.repetitions); graphs.len()];
    for _ in 0..options.repetitions {
        for (g, out) in graphs.iter().zip(&mut samples) {
            out.push(sample(g, semantics, options.min_sample_time));
        }
    }
    Ok(graphs
        .iter()
        .zip(reports)
        .zip(samples)
        .map(|((g, report), samples)| record(g, semantics, &report, samples))
        .collect())
}

/// Times the closure of an existing graph. A warm-up run is discarded.
pub fn bench_graph(g: &EvolvingGraph, semantics: JourneySemantics, options: &BenchOptions) -> BenchRecord {
    let report = closure(g, semantics);
    let samples = (0..options.repetitions.max(1))
        .map(|_| sample(g, semantics, options.min_sample_time))
        .collect();
    record(g, semantics, &report, samples)
}

/// Mean time of one closure over a loop lasting at least `min_time`.
fn sample(g: &EvolvingGraph, semantics: JourneySemantics, min_time: Duration) -> Duration {
    let start = Instant::now();
    let mut runs = 0u32;
    loop {
        black_box(closure(black_box(g), semantics));
        runs += 1;
        if start.elapsed() >= min_time {
            break;
        }
    }
    start.elapsed() / runs
}

fn record(
    g: &EvolvingGraph,
    semantics: JourneySemantics,
    report: &ConnectivityReport,
    mut samples: Vec<Duration>,
) -> BenchRecord {
    let profile = density_profile(g);
    samples.sort_unstable();
    BenchRecord {
        n: profile.n,
        k: profile.k,
        mu: profile.mu,
        m: profile.m,
        semantics,
        wall_time: samples[samples.len() / 2],
        connected: report.connected,
        completed_at_step: report.completed_at_step,
    }
}

/// Writes records as CSV under [`CSV_HEADER`]; a missing completion step is
/// an empty field.
pub fn write_csv<W: Write>(records: &[BenchRecord], mut w: W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        let step = r.completed_at_step.map(|t| t.to_string()).unwrap_or_default();
        writeln!(
            w,
            "{},{},{},{},{},{},{},{}",
            r.n,
            r.k,
            r.mu,
            r.m,
            r.semantics,
            r.connected,
            step,
            r.wall_time.as_nanos()
        )?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> BenchOptions {
        BenchOptions {
            repetitions: 3,
            min_sample_time: Duration::ZERO,
        }
    }

    #[test]
    fn bookkeeping() {
        let specs = [
            GeneratorSpec::fixed_mu(500, 50, 8, 1),
            GeneratorSpec::fixed_mu(500, 100, 8, 1),
        ];
        let records = bench_grid_with(&specs, JourneySemantics::Strict, &quick()).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!((records[0].n, records[1].n), (500, 500));
        assert_eq!((records[0].mu, records[1].mu), (8, 8));
        assert_eq!((records[0].k, records[1].k), (50, 100));
        assert!(records.iter().all(|r| !r.connected));
    }

    #[test]
    fn empty_grid() {
        assert!(bench_grid(&[], JourneySemantics::Strict, 5).unwrap().is_empty());
    }

    #[test]
    fn zero_repetitions_rejected() {
        assert!(bench_grid(&[], JourneySemantics::Strict, 0).is_err());
    }

    #[test]
    fn reruns_agree_except_for_time() {
        let specs = [
            GeneratorSpec::bernoulli(6, 8, 0.4, 5),
            GeneratorSpec::fixed_mu(30, 10, 3, 6),
        ];
        let strip = |mut r: BenchRecord| {
            r.wall_time = Duration::ZERO;
            r
        };
        let a: Vec<_> = bench_grid_with(&specs, JourneySemantics::NonStrict, &quick())
            .unwrap()
            .into_iter()
            .map(strip)
            .collect();
        let b: Vec<_> = bench_grid_with(&specs, JourneySemantics::NonStrict, &quick())
            .unwrap()
            .into_iter()
            .map(strip)
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn csv_layout() {
        let records = [BenchRecord {
            n: 3,
            k: 2,
            mu: 1,
            m: 2,
            semantics: JourneySemantics::NonStrict,
            wall_time: Duration::from_nanos(1234),
            connected: false,
            completed_at_step: None,
        }];
        let mut out = Vec::new();
        write_csv(&records, &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "n,k,mu,m,semantics,connected,completed_at_step,wall_time_ns\n3,2,1,2,non_strict,false,,1234\n"
        );
    }
}
