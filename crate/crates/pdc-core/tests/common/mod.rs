//! Shared test support: seeded random generators for graphs and matrices,
//! plus independent oracles (eigenvalues by Jacobi rotation, determinants by
//! cofactor expansion, acyclic-orientation counts by the chromatic
//! polynomial). The oracles deliberately share no code with the library
//! paths they check.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use pdc_core::graph::{Dag, UGraph};
use pdc_core::partial::PartialMatrix;
use pdc_core::symlin::SymMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ── Random matrices ─────────────────────────────────────────────────

pub fn random_symmetric(rng: &mut ChaCha8Rng, p: usize, scale: f64) -> SymMatrix {
    let mut m = SymMatrix::zeros(p);
    for i in 1..=p {
        for j in i..=p {
            m.set(i, j, rng.random_range(-scale..scale));
        }
    }
    m
}

/// Well-conditioned SPD matrix AᵀA/p + I.
pub fn random_spd(rng: &mut ChaCha8Rng, p: usize) -> SymMatrix {
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

// ── Random graphs ───────────────────────────────────────────────────

/// Random DAG under the numbering convention: each candidate edge (i, j)
/// with i > j is present independently.
pub fn random_dag(rng: &mut ChaCha8Rng, p: usize, edge_prob: f64) -> Dag {
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

/// Random perfect DAG under the convention. Processing vertices from p−1
/// down, each parent set is drawn inside an existing family, which keeps
/// every parent set complete.
pub fn random_perfect_dag(rng: &mut ChaCha8Rng, p: usize) -> Dag {
    let mut parents: Vec<Vec<usize>> = vec![Vec::new(); p + 1];
    let mut edges = Vec::new();
    for j in (1..p).rev() {
        if rng.random_range(0.0..1.0) < 0.25 {
            continue; // source vertex
        }
        let u = rng.random_range((j + 1)..=p);
        let mut pa = vec![u];
        for &w in &parents[u] {
            if rng.random_range(0.0..1.0) < 0.5 {
                pa.push(w);
            }
        }
        pa.sort_unstable();
        for &w in &pa {
            edges.push((w, j));
        }
        parents[j] = pa;
    }
    let dag = Dag::new(p, &edges).unwrap();
    assert!(dag.is_perfect(), "construction must yield a perfect DAG");
    dag
}

/// Random non-perfect DAG under the convention (resamples until an
/// immorality exists).
pub fn random_non_perfect_dag(rng: &mut ChaCha8Rng, p: usize) -> Dag {
    assert!(p >= 3);
    loop {
        let d = random_dag(rng, p, 0.45);
        if !d.is_perfect() {
            return d;
        }
    }
}

pub fn random_decomposable_graph(rng: &mut ChaCha8Rng, p: usize) -> UGraph {
    let g = random_perfect_dag(rng, p).undirected_version();
    assert!(g.is_decomposable());
    g
}

// ── Random members of the model spaces ──────────────────────────────

/// Draws Ω = LΛLᵀ with L unit lower triangular supported on the DAG's
/// edges and Λ positive, i.e. a random member of P_D; returns (Ω, Σ = Ω⁻¹).
pub fn random_pd_d_member(rng: &mut ChaCha8Rng, dag: &Dag) -> (SymMatrix, SymMatrix) {
    let p = dag.vertex_count();
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
            for k in 1..=j.min(i) {
                s += lambda[k - 1] * l[i][k] * l[j][k];
            }
            omega.set(i, j, s);
        }
    }
    let sigma = omega.inverse().expect("member of P_D is invertible");
    (omega, sigma)
}

/// Restricts a full matrix to the DAG's skeleton pattern plus diagonal.
pub fn restrict_to_pattern(full: &SymMatrix, dag: &Dag) -> PartialMatrix {
    let p = full.dim();
    let skeleton = dag.undirected_version();
    let rows: Vec<Vec<Option<f64>>> = (1..=p)
        .map(|i| {
            (1..=p)
                .map(|j| {
                    if i == j || skeleton.has_edge(i, j) {
                        Some(full.get(i, j))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    PartialMatrix::from_rows(&rows).unwrap()
}

// ── Oracles ─────────────────────────────────────────────────────────

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_eigenvalues(m: &SymMatrix) -> Vec<f64> {
    let p = m.dim();
    let mut a: Vec<Vec<f64>> = (1..=p)
        .map(|i| (1..=p).map(|j| m.get(i, j)).collect())
        .collect();
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..p {
            for j in (i + 1)..p {
                off += a[i][j] * a[i][j];
            }
        }
        if off.sqrt() < 1e-14 {
            break;
        }
        for i in 0..p {
            for j in (i + 1)..p {
                if a[i][j].abs() < 1e-300 {
                    continue;
                }
                let theta = 0.5 * (2.0 * a[i][j]).atan2(a[i][i] - a[j][j]);
                let (s, c) = theta.sin_cos();
                for k in 0..p {
                    let (aik, ajk) = (a[i][k], a[j][k]);
                    a[i][k] = c * aik + s * ajk;
                    a[j][k] = -s * aik + c * ajk;
                }
                for k in 0..p {
                    let (aki, akj) = (a[k][i], a[k][j]);
                    a[k][i] = c * aki + s * akj;
                    a[k][j] = -s * aki + c * akj;
                }
            }
        }
    }
    (0..p).map(|i| a[i][i]).collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_determinant(m: &SymMatrix) -> f64 {
    let p = m.dim();
    let rows: Vec<Vec<f64>> = (1..=p)
        .map(|i| (1..=p).map(|j| m.get(i, j)).collect())
        .collect();
    det_rec(&rows)
}

fn det_rec(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    if n == 0 {
        return 1.0;
    }
    if n == 1 {
        return a[0][0];
    }
    let mut det = 0.0;
    let mut sign = 1.0;
    for col in 0..n {
        let minor: Vec<Vec<f64>> = (1..n)
            .map(|r| (0..n).filter(|&c| c != col).map(|c| a[r][c]).collect())
            .collect();
        det += sign * a[0][col] * det_rec(&minor);
        sign = -sign;
    }
    det
}

/// Chromatic polynomial evaluated at −1 by deletion–contraction; its
/// absolute value counts the acyclic orientations.
pub fn chromatic_at_minus_one(g: &UGraph) -> i64 {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, w)| (u - 1, w - 1)).collect();
    chromatic_rec(n, &edges)
}

fn chromatic_rec(n: usize, edges: &[(usize, usize)]) -> i64 {
    match edges.split_first() {
        None => {
            // P(empty graph, x) = x^n at x = −1
            if n % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Some((&(u, w), rest)) => {
            let deleted = rest.to_vec();
            // contract w into u, dropping loops and parallel edges
            let mut contracted: Vec<(usize, usize)> = Vec::new();
            for &(a, b) in rest {
                let a2 = if a == w { u } else { a };
                let b2 = if b == w { u } else { b };
                if a2 == b2 {
                    continue;
                }
                let key = if a2 < b2 { (a2, b2) } else { (b2, a2) };
                // relabel the last vertex into w's slot to keep labels dense
                let fix = |v: usize| if v == n - 1 { w } else { v };
                let key = if w == n - 1 {
                    key
                } else {
                    (fix(key.0), fix(key.1))
                };
                let key = if key.0 < key.1 { key } else { (key.1, key.0) };
                if !contracted.contains(&key) {
                    contracted.push(key);
                }
            }
            chromatic_rec(n, &deleted) - chromatic_rec(n - 1, &contracted)
        }
    }
}
