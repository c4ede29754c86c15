use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use semifree::hypercube::{injectivity_rank_check, ModelData};
use semifree::localization::{search_candidates_with, SearchOptions, SearchParams};
use semifree::reduced::{graded_quotient, kernel_generators};
use semifree::Execution;

const STRATEGIES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    let params = SearchParams {
        n: 3,
        num_points: 3,
        weight_bound: 2,
        max_degree: 3,
    };
    for (name, execution) in STRATEGIES {
        let opts = SearchOptions {
            execution,
            ..Default::default()
        };
        group.bench_with_input(BenchmarkId::new(name, "n3-p3-b2"), &params, |b, p| {
            b.iter(|| search_candidates_with(black_box(*p), opts).unwrap())
        });
    }
    group.finish();
}

fn quotient(c: &mut Criterion) {
    let mut group = c.benchmark_group("graded_quotient");
    group.sample_size(10);
    for n in [4usize, 5] {
        let pres = kernel_generators(&ModelData::balanced(n)).unwrap();
        for (name, execution) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), &pres, |b, p| {
                b.iter(|| graded_quotient(black_box(p), n, execution))
            });
        }
    }
    group.finish();
}

fn injectivity(c: &mut Criterion) {
    let mut group = c.benchmark_group("injectivity");
    group.sample_size(10);
    for n in [5usize, 6] {
        for (name, execution) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| injectivity_rank_check(black_box(n), execution).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, search, quotient, injectivity);
criterion_main!(benches);
