use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use carlitz_core::algebra::enumerate::monic_from_index;
use carlitz_core::carlitz::u_carlitz_factorial;
use carlitz_core::harmonic::{finite_mzv, Harmonic, IdentityBracket, Index, ZetaEngine};
use carlitz_core::shuffle::{ShuffleAlgebra, ShuffleElem, Word};
use carlitz_core::uexp::UExpansion;
use carlitz_core::{enumerate_monic, FiniteField, PolyA, Ring};

fn arithmetic(c: &mut Criterion) {
    let mut g = c.benchmark_group("arithmetic");
    for r in [2u64, 3, 9] {
        let f = FiniteField::of_order(r).unwrap();
        let a: Vec<PolyA> = (1..=8u64)
            .map(|k| monic_from_index(&f, 12, k * 7919))
            .collect();
        g.bench_with_input(BenchmarkId::new("polya_mul_deg12", r), &a, |b, a| {
            b.iter(|| {
                a.iter()
                    .fold(PolyA::one(&f), |acc, x| acc.mul(black_box(x)))
            })
        });
        g.bench_with_input(BenchmarkId::new("enumerate_monic_deg5", r), &f, |b, f| {
            b.iter(|| enumerate_monic(f, black_box(5)).len())
        });
    }
    g.finish();
}

fn sums(c: &mut Criterion) {
    let mut g = c.benchmark_group("harmonic");
    g.sample_size(20);
    for r in [2u64, 3] {
        let f = FiniteField::of_order(r).unwrap();
        let s = Index::new([2, 1]);
        g.bench_function(BenchmarkId::new("h_lt_deg5_(2,1)", r), |b| {
            b.iter(|| {
                Harmonic::new(IdentityBracket::new(&f))
                    .h_lt(5, black_box(&s))
                    .unwrap()
            })
        });
        g.bench_function(BenchmarkId::new("zeta_prec40_(2,1)", r), |b| {
            b.iter(|| ZetaEngine::new(&f).zeta_thakur(black_box(&s), 40).unwrap())
        });
        g.bench_function(BenchmarkId::new("finite_mzv_D3_(1)", r), |b| {
            b.iter(|| finite_mzv(&ZetaEngine::new(&f), &Index::new([1]), 3).unwrap())
        });
        g.bench_function(BenchmarkId::new("u_factorial_n27", r), |b| {
            b.iter(|| u_carlitz_factorial(&f, black_box(27)))
        });
    }
    g.finish();
}

fn shuffle(c: &mut Criterion) {
    let mut g = c.benchmark_group("shuffle");
    for r in [2u64, 3] {
        let p = FiniteField::of_order(r).unwrap().p();
        let x = ShuffleElem::word(p, Word::new(vec![2, 1]).unwrap());
        let y = ShuffleElem::word(p, Word::new(vec![1, 2]).unwrap());
        g.bench_function(BenchmarkId::new("product_(2,1)*(1,2)", r), |b| {
            b.iter(|| ShuffleAlgebra::new(r, p).product(black_box(&x), black_box(&y)))
        });
    }
    g.finish();
}

fn u_expansion(c: &mut Criterion) {
    let mut g = c.benchmark_group("u_expansion");
    g.sample_size(10);
    for r in [2u64, 3] {
        let f = FiniteField::of_order(r).unwrap();
        let s = Index::new([2, 1]);
        g.bench_function(BenchmarkId::new("zeta_u_series_N2_prec25", r), |b| {
            b.iter(|| {
                UExpansion::new(Arc::new(ZetaEngine::new(&f)))
                    .zeta_u_series(black_box(&s), 2, 25)
                    .unwrap()
            })
        });
    }
    g.finish();
}

criterion_group!(benches, arithmetic, sums, shuffle, u_expansion);
criterion_main!(benches);
