use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cwfkit_bench::bases;
use cwfkit_core::catalog::{self, enumerate_cwf, skeletonize};
use cwfkit_core::relu::{cwf_to_relu, relu_to_cwf, skeleton_square, transfer_universe_split};
use cwfkit_core::structures::{cwf_to_split_typecat, split_typecat_to_cwf};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_cwf");
    for (name, base) in bases() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &base, |b, base| {
            b.iter(|| enumerate_cwf(black_box(base), 1).len())
        });
    }
    g.finish();
}

fn conversions(c: &mut Criterion) {
    let mut g = c.benchmark_group("conversions");
    for (name, base) in bases() {
        let cwfs = enumerate_cwf(&base, 1);
        g.bench_with_input(BenchmarkId::new("cwf_to_sty_and_back", name), &cwfs, |b, cwfs| {
            b.iter(|| {
                for w in cwfs {
                    black_box(split_typecat_to_cwf(&cwf_to_split_typecat(w).unwrap()).unwrap());
                }
            })
        });
        g.bench_with_input(BenchmarkId::new("cwf_to_relu_and_back", name), &cwfs, |b, cwfs| {
            b.iter(|| {
                for w in cwfs {
                    black_box(relu_to_cwf(&cwf_to_relu(w).unwrap()).unwrap());
                }
            })
        });
    }
    g.finish();
}

fn skeletons(c: &mut Criterion) {
    let base = Arc::new(catalog::three_with_iso_pair());
    c.bench_function("skeletonize/three-iso", |b| b.iter(|| skeletonize(black_box(&base))));

    let sq = skeleton_square(&skeletonize(&base));
    let universes: Vec<_> = enumerate_cwf(&base, 1).iter().map(|w| cwf_to_relu(w).unwrap()).collect();
    c.bench_function("transfer/three-iso-to-skeleton", |b| {
        b.iter(|| {
            for u in &universes {
                black_box(transfer_universe_split(&sq, u).unwrap());
            }
        })
    });
}

criterion_group!(benches, enumeration, conversions, skeletons);
criterion_main!(benches);
