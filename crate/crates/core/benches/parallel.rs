//! Sequential vs parallel execution of the batch workloads.
//!
//! Build with `--no-default-features` to confirm the fallback: both modes
//! then run sequentially and should time the same.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use maslov_core::exact_half::solve_exact_levels;
use maslov_core::exec::{self, Execution};
use maslov_core::oracle::solve_power_law_levels;
use maslov_core::semiclassic::{maslov_index, PowerLawPotential};
use maslov_core::spectrum::spectrum_table;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn exact_levels(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_half_40_levels");
    for (name, mode) in MODES {
        group.bench_function(name, |b| b.iter(|| solve_exact_levels(black_box(40), mode)));
    }
    group.finish();
}

fn oracle_levels(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_levels");
    group.sample_size(10);
    let levels: Vec<usize> = (1..=8).collect();
    for s in [0.5, 1.5] {
        let pot = PowerLawPotential::new(s).unwrap();
        for (name, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(name, s), &pot, |b, pot| {
                b.iter(|| solve_power_law_levels(pot, &levels, mode))
            });
        }
    }
    group.finish();
}

fn spectrum_with_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectrum_table_oracle_10");
    group.sample_size(10);
    let pot = PowerLawPotential::new(0.5).unwrap().into();
    for (name, mode) in MODES {
        group.bench_function(name, |b| b.iter(|| spectrum_table(&pot, 10, true, mode)));
    }
    group.finish();
}

fn maslov_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("maslov_sweep_100k");
    let grid: Vec<(f64, u32)> = (1..100_000)
        .map(|i| (i as f64 * 2e-5, (i % 4) as u32))
        .collect();
    for (name, mode) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| exec::map(&grid, mode, |&(s, l)| maslov_index(s, l).map(|m| m.gamma)))
        });
    }
    group.finish();
}

criterion_group!(benches, exact_levels, oracle_levels, spectrum_with_oracle, maslov_sweep);
criterion_main!(benches);
