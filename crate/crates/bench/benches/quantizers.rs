use std::hint::black_box;

use criterion::{BenchmarkId, Criterion, criterion_group, criterion_main};

use cantor_quant::oracle::{DEFAULT_MAX_DEPTH, lloyd_iterate};
use cantor_quant::{canonical_split_set, distortion_closed_form, dp_optimal, exact_distortion, optimal_error};
use cantor_quant_bench::{SIZES, canonical_alpha, shifted_alpha};

fn closed_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("closed_form");
    for n in SIZES {
        let split = canonical_split_set(n);
        group.bench_with_input(BenchmarkId::new("direct_sum", n), &n, |b, &n| {
            b.iter(|| distortion_closed_form(black_box(n), &split).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("collapsed", n), &n, |b, &n| {
            b.iter(|| optimal_error(black_box(n)))
        });
    }
    group.finish();
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracles");
    for n in SIZES {
        let alpha = canonical_alpha(n);
        group.bench_with_input(BenchmarkId::new("exact_distortion", n), &alpha, |b, alpha| {
            b.iter(|| exact_distortion(black_box(alpha), DEFAULT_MAX_DEPTH).unwrap())
        });
        let start = shifted_alpha(n);
        group.bench_with_input(BenchmarkId::new("lloyd", n), &start, |b, start| {
            b.iter(|| lloyd_iterate(black_box(start), 100, DEFAULT_MAX_DEPTH).unwrap())
        });
    }
    group.sample_size(10);
    for n in [2u64, 8, 16] {
        group.bench_with_input(BenchmarkId::new("dp_level_8", n), &n, |b, &n| {
            b.iter(|| dp_optimal(black_box(n), 8).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, closed_form, oracles);
criterion_main!(benches);
