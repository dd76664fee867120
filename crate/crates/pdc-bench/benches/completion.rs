#![allow(clippy::needless_range_loop)]

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pdc_core::analytics::markov_inverse;
use pdc_core::completion::{complete_in_p, complete_in_pd};
use pdc_core::graph::{Dag, UGraph};
use pdc_core::partial::PartialMatrix;
use pdc_core::symlin::SymMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn random_dag(rng: &mut ChaCha8Rng, p: usize, edge_prob: f64) -> Dag {
    let mut edges = Vec::new();
    for i in 2..=p {
        for j in 1..i {
            if rng.random_range(0.0..1.0) < edge_prob {
                edges.push((i, j));
            }
        }
    }
    Dag::new(p, &edges).unwrap()
}

/// Σ drawn from the model space so the completion always succeeds, then
/// restricted back to the pattern.
fn completable_instance(rng: &mut ChaCha8Rng, p: usize, edge_prob: f64) -> (Dag, PartialMatrix) {
    let dag = random_dag(rng, p, edge_prob);
    let mut l = vec![vec![0.0; p + 1]; p + 1];
    for i in 1..=p {
        l[i][i] = 1.0;
    }
    for (i, j) in dag.edges() {
        l[i][j] = rng.random_range(-0.9..0.9);
    }
    let lambda: Vec<f64> = (0..p).map(|_| rng.random_range(0.5..2.0)).collect();
    let mut omega = SymMatrix::zeros(p);
    for i in 1..=p {
        for j in i..=p {
            let mut s = 0.0;
            for k in 1..=i.min(j) {
                s += lambda[k - 1] * l[i][k] * l[j][k];
            }
            omega.set(i, j, s);
        }
    }
    let sigma = omega.inverse().unwrap();
    let skeleton = dag.undirected_version();
    let rows: Vec<Vec<Option<f64>>> = (1..=p)
        .map(|i| {
            (1..=p)
                .map(|j| {
                    if i == j || skeleton.has_edge(i, j) {
                        Some(sigma.get(i, j))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    (dag, PartialMatrix::from_rows(&rows).unwrap())
}

fn random_spd(rng: &mut ChaCha8Rng, p: usize) -> SymMatrix {
    let a: Vec<Vec<f64>> = (0..p)
        .map(|_| (0..p).map(|_| rng.random_range(-1.0..1.0)).collect())
        .collect();
    let mut m = SymMatrix::zeros(p);
    for i in 1..=p {
        for j in i..=p {
            let mut s = 0.0;
            for k in 0..p {
                s += a[k][i - 1] * a[k][j - 1];
            }
            m.set(i, j, s / p as f64 + if i == j { 1.0 } else { 0.0 });
        }
    }
    m
}

fn bench_modified_cholesky(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut group = c.benchmark_group("modified_cholesky");
    for p in [16, 64, 128] {
        let m = random_spd(&mut rng, p);
        group.bench_with_input(BenchmarkId::from_parameter(p), &m, |b, m| {
            b.iter(|| black_box(m.modified_cholesky().unwrap()))
        });
    }
    group.finish();
}

fn bench_complete_in_pd(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut group = c.benchmark_group("complete_in_pd");
    for p in [10, 30, 60] {
        let (dag, gamma) = completable_instance(&mut rng, p, 0.3);
        group.bench_with_input(
            BenchmarkId::from_parameter(p),
            &(dag, gamma),
            |b, (d, g)| b.iter(|| black_box(complete_in_pd(g, d, 1e-10).unwrap())),
        );
    }
    group.finish();
}

fn bench_complete_in_p(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut group = c.benchmark_group("complete_in_p");
    for p in [10, 30, 60] {
        let (dag, gamma) = completable_instance(&mut rng, p, 0.3);
        group.bench_with_input(
            BenchmarkId::from_parameter(p),
            &(dag, gamma),
            |b, (d, g)| b.iter(|| black_box(complete_in_p(g, d).unwrap())),
        );
    }
    group.finish();
}

fn bench_markov_inverse(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut group = c.benchmark_group("markov_inverse");
    for p in [10, 30] {
        let (dag, gamma) = completable_instance(&mut rng, p, 0.3);
        group.bench_with_input(
            BenchmarkId::from_parameter(p),
            &(dag, gamma),
            |b, (d, g)| b.iter(|| black_box(markov_inverse(g, d, 1e-10).unwrap())),
        );
    }
    group.finish();
}

fn bench_maximal_cliques(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let p = 40;
    let mut edges = Vec::new();
    for u in 1..=p {
        for w in (u + 1)..=p {
            if rng.random_range(0.0..1.0) < 0.25 {
                edges.push((u, w));
            }
        }
    }
    let g = UGraph::new(p, &edges).unwrap();
    c.bench_function("maximal_cliques/40", |b| {
        b.iter(|| black_box(g.maximal_cliques()))
    });
}

criterion_group!(
    benches,
    bench_modified_cholesky,
    bench_complete_in_pd,
    bench_complete_in_p,
    bench_markov_inverse,
    bench_maximal_cliques
);
criterion_main!(benches);
