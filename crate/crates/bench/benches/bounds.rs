use criterion::{black_box, criterion_group, criterion_main, Criterion};

use eur_core::bounds::proposition_bound;
use eur_core::entropy::{EntropySpec, Index};
use eur_core::maxprob::h_min;
use eur_core::quantum::{overlap_triplet, permutation_power, Sampler};
use eur_core::OverlapTriplet;

fn bench_proposition_bound(c: &mut Criterion) {
    let shannon = EntropySpec::shannon();
    let renyi_inf = EntropySpec::renyi(Index::Infinite).unwrap();
    let renyi_half = EntropySpec::renyi(Index::Finite(0.5)).unwrap();
    let tsallis_two = EntropySpec::tsallis(Index::Finite(2.0)).unwrap();

    let mut group = c.benchmark_group("proposition_bound");
    let near = OverlapTriplet::nondegenerate(0.9).unwrap();
    let far = OverlapTriplet::nondegenerate(0.45).unwrap();
    let povm_like = OverlapTriplet::new(0.95, 0.9, 0.5).unwrap();
    group.bench_function("shannon/c=0.9", |b| {
        b.iter(|| proposition_bound(black_box(&shannon), &shannon, &near))
    });
    group.bench_function("renyi-inf/c=0.9", |b| {
        b.iter(|| proposition_bound(black_box(&renyi_inf), &renyi_inf, &near))
    });
    group.bench_function("mixed-pair/c=0.45", |b| {
        b.iter(|| proposition_bound(black_box(&renyi_half), &tsallis_two, &far))
    });
    group.bench_function("general-triplet", |b| {
        b.iter(|| proposition_bound(black_box(&shannon), &shannon, &povm_like))
    });
    group.finish();
}

fn bench_min_entropy(c: &mut Criterion) {
    let specs = [
        EntropySpec::shannon(),
        EntropySpec::renyi(Index::Finite(2.0)).unwrap(),
        EntropySpec::renyi(Index::Infinite).unwrap(),
    ];
    c.bench_function("h_min/battery-sweep", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            for spec in &specs {
                for k in 1..=64 {
                    acc += h_min(spec, black_box(k as f64 / 64.0)).unwrap();
                }
            }
            acc
        })
    });
}

fn bench_quantum_layer(c: &mut Criterion) {
    c.bench_function("haar_unitary/n=8", |b| {
        let mut sampler = Sampler::new(0);
        b.iter(|| sampler.haar_unitary(black_box(8)).unwrap())
    });
    c.bench_function("permutation_power/n=8", |b| {
        b.iter(|| permutation_power(black_box(8), 0.37).unwrap())
    });
    c.bench_function("overlap_triplet/rank-one-n=4", |b| {
        let mut sampler = Sampler::new(1);
        let a = sampler.rank_one_povm(4, 5).unwrap();
        let bb = sampler.rank_one_povm(4, 6).unwrap();
        b.iter(|| overlap_triplet(black_box(&a), &bb).unwrap())
    });
}

criterion_group!(
    benches,
    bench_proposition_bound,
    bench_min_entropy,
    bench_quantum_layer
);
criterion_main!(benches);
