use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fockcap::lie::{check_bracket_table, GlImages};
use fockcap::relations::{grid, verify_specs};
use fockcap::thermo::sweep;
use fockcap::{AlgebraSpec, Backend, Execution, FockSpace, Generators, Kind};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn relation_grid(c: &mut Criterion) {
    let specs = grid(&[Kind::Fermi, Kind::Bose], 3, 3);
    let mut group = c.benchmark_group("verify_grid_3x3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new("exact", name), &exec, |b, &exec| {
            b.iter(|| verify_specs(black_box(&specs), Backend::Exact, exec))
        });
    }
    group.finish();
}

fn bracket_table(c: &mut Criterion) {
    let space = FockSpace::new(AlgebraSpec::bose(3, 4).unwrap());
    let images = GlImages::new(&Generators::exact(&space));
    let mut group = c.benchmark_group("gl_bracket_table_bose_3_4");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| check_bracket_table(black_box(&images), exec))
        });
    }
    group.finish();
}

fn thermo_sweep(c: &mut Criterion) {
    let spec = AlgebraSpec::bose(4, 6).unwrap();
    let betas: Vec<f64> = (1..=40).map(|k| k as f64 * 0.1).collect();
    let mus: Vec<f64> = (0..40).map(|k| -2.0 + k as f64 * 0.1).collect();
    let energies = [0.5, 1.0, 1.5, 2.0];
    let mut group = c.benchmark_group("thermo_sweep_bose_4_6");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| sweep(spec, black_box(&betas), black_box(&mus), &energies, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, relation_grid, bracket_table, thermo_sweep);
criterion_main!(benches);
