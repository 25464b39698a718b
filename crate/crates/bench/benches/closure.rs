use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use tcheck_bench::{k_axis, mu_axis, n_axis};
use tcheck_core::{closure, generate, oracle_closure, GeneratorSpec, JourneySemantics};

fn axis(c: &mut Criterion, name: &str, specs: &[GeneratorSpec], label: fn(&GeneratorSpec) -> usize) {
    let mut group = c.benchmark_group(name);
    for spec in specs {
        let g = generate(spec).unwrap();
        for s in JourneySemantics::ALL {
            group.bench_with_input(BenchmarkId::new(s.as_str(), label(spec)), &g, |b, g| {
                b.iter(|| closure(black_box(g), s));
            });
        }
    }
    group.finish();
}

fn scaling(c: &mut Criterion) {
    axis(c, "closure/k", &k_axis(), |s| s.k);
    axis(c, "closure/n", &n_axis(), |s| s.n);
    axis(c, "closure/mu", &mu_axis(), |s| match s.model {
        tcheck_core::workload::ArcModel::FixedMu { mu } => mu,
        _ => unreachable!(),
    });
}

// The time-expanded reference grows with n·k; keep it small.
fn engine_vs_oracle(c: &mut Criterion) {
    let g = generate(&GeneratorSpec::fixed_mu(100, 64, 8, 7)).unwrap();
    let mut group = c.benchmark_group("engine_vs_oracle");
    group.bench_function("engine", |b| b.iter(|| closure(black_box(&g), JourneySemantics::Strict)));
    group.bench_function("oracle", |b| {
        b.iter(|| oracle_closure(black_box(&g), JourneySemantics::Strict).unwrap())
    });
    group.finish();
}

criterion_group!(benches, scaling, engine_vs_oracle);
criterion_main!(benches);
