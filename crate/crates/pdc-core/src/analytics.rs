//! Closed-form inverse and determinant of a completion from the partial
//! entries alone, separation-based inverse splitting, the constructive
//! witness that non-perfect DAGs admit non-completable partial positive
//! definite matrices, and the four-cycle completability inequalities.

use crate::completion::{closure_fill, verify_in_pd, CompletionError};
use crate::graph::{Dag, UGraph};
use crate::partial::{zero_fill_in, PartialMatrix};
use crate::symlin::SymMatrix;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticsError {
    #[error("graph is perfect; always completable")]
    PerfectDag,
    #[error("epsilon must lie in the open interval (\u{221a}2/2, 1)")]
    BadEpsilon,
    #[error("S does not separate A from B in the moral graph")]
    NotSeparating,
    #[error("matrix is not a member of PD_D")]
    NotInPdD,
    #[error("A, B, S must partition the vertex set")]
    NotPartition,
    #[error("parameters must lie strictly inside (-1, 1)")]
    OutOfRange,
    #[error(transparent)]
    Completion(#[from] CompletionError),
}

impl From<crate::symlin::SymlinError> for AnalyticsError {
    fn from(e: crate::symlin::SymlinError) -> Self {
        AnalyticsError::Completion(e.into())
    }
}

impl From<crate::partial::PartialError> for AnalyticsError {
    fn from(e: crate::partial::PartialError) -> Self {
        AnalyticsError::Completion(e.into())
    }
}

impl From<crate::graph::GraphError> for AnalyticsError {
    fn from(e: crate::graph::GraphError) -> Self {
        AnalyticsError::Completion(e.into())
    }
}

// ── Family-sum inverse and determinant ──────────────────────────────

/// Audit record of one family term in the inverse sum.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyTerm {
    pub vertex: usize,
    pub family: Vec<usize>,
    pub parents: Vec<usize>,
}

/// Inverse of the completion assembled without running the completion:
/// Σ⁻¹ = Σᵢ ([Σ_fa(i)⁻¹]^V − [Σ_pa(i)⁻¹]^V). `filled_cells` lists the cells
/// outside the pattern that had to be materialized (the immorality-closure
/// edges); empty for perfect DAGs.
#[derive(Debug, Clone)]
pub struct InverseReport {
    pub omega: SymMatrix,
    pub log_det_omega: f64,
    pub per_family_terms: Vec<FamilyTerm>,
    pub filled_cells: Vec<(usize, usize)>,
}

struct FamilyView {
    filled: PartialMatrix,
    filled_cells: Vec<(usize, usize)>,
}

/// Materializes every family block: closure fill of the added-edge cells,
/// plus the lazy positive-definiteness checks the assembly relies on.
fn family_view(gamma: &PartialMatrix, dag: &Dag, tol: f64) -> Result<FamilyView, AnalyticsError> {
    let fill = closure_fill(gamma, dag, tol)?;
    Ok(FamilyView {
        filled: fill.filled,
        filled_cells: fill.cells,
    })
}

fn family_block(
    view: &FamilyView,
    dag: &Dag,
    i: usize,
    tol: f64,
) -> Result<SymMatrix, AnalyticsError> {
    let fa = dag.family(i);
    let block = view.filled.restrict(&fa)?;
    if !block.is_positive_definite(tol) {
        return Err(CompletionError::NotCompletable(i).into());
    }
    Ok(block)
}

/// Conditional variance of vertex i given its parents, as the 1×1 Schur
/// complement of the parent block inside the family block.
fn schur_scalar(fa_block: &SymMatrix, fa: &[usize], i: usize) -> Result<f64, AnalyticsError> {
    let pos = fa
        .iter()
        .position(|&v| v == i)
        .expect("vertex lies in its own family")
        + 1;
    let pa_local: Vec<usize> = (1..=fa.len()).filter(|&k| k != pos).collect();
    let s = fa_block.schur_complement(&pa_local, &[pos])?;
    Ok(s.get(1, 1))
}

/// Computes Σ⁻¹ of the completion directly from the partial entries as the
/// signed sum of zero-filled family and parent block inverses. Cells outside
/// the pattern that the family blocks need are filled over the immorality
/// closure only; the full completion is never run.
pub fn markov_inverse(
    gamma: &PartialMatrix,
    dag: &Dag,
    tol: f64,
) -> Result<InverseReport, AnalyticsError> {
    let view = family_view(gamma, dag, tol)?;
    let p = gamma.dim();
    let mut omega = SymMatrix::zeros(p);
    let mut log_det = 0.0;
    let mut terms = Vec::with_capacity(p);
    for i in 1..=p {
        let fa = dag.family(i);
        let pa = dag.parents(i).to_vec();
        let fa_block = family_block(&view, dag, i, tol)?;
        omega.add_scaled(&zero_fill_in(&fa_block.inverse()?, &fa, p), 1.0);
        if !pa.is_empty() {
            let pa_block = view.filled.restrict(&pa)?;
            omega.add_scaled(&zero_fill_in(&pa_block.inverse()?, &pa, p), -1.0);
        }
        log_det -= schur_scalar(&fa_block, &fa, i)?.ln();
        terms.push(FamilyTerm {
            vertex: i,
            family: fa,
            parents: pa,
        });
    }
    Ok(InverseReport {
        omega,
        log_det_omega: log_det,
        per_family_terms: terms,
        filled_cells: view.filled_cells,
    })
}

/// det(Σ⁻¹) of the completion as the product of reciprocal conditional
/// variances ∏ᵢ Σ_{ii|pa(i)}⁻¹, each computed as a Schur complement of the
/// family block.
pub fn markov_determinant(
    gamma: &PartialMatrix,
    dag: &Dag,
    tol: f64,
) -> Result<f64, AnalyticsError> {
    let view = family_view(gamma, dag, tol)?;
    let mut det = 1.0;
    for i in 1..=gamma.dim() {
        let fa = dag.family(i);
        let fa_block = family_block(&view, dag, i, tol)?;
        det /= schur_scalar(&fa_block, &fa, i)?;
    }
    Ok(det)
}

/// det(Σ⁻¹) by the alternative route ∏ᵢ det(Σ_pa(i)) / ∏ᵢ det(Σ_fa(i));
/// agrees with [`markov_determinant`] up to rounding.
pub fn markov_determinant_ratio(
    gamma: &PartialMatrix,
    dag: &Dag,
    tol: f64,
) -> Result<f64, AnalyticsError> {
    let view = family_view(gamma, dag, tol)?;
    let mut num = 1.0;
    let mut den = 1.0;
    for i in 1..=gamma.dim() {
        let fa_block = family_block(&view, dag, i, tol)?;
        den *= fa_block.determinant()?;
        let pa = dag.parents(i);
        if !pa.is_empty() {
            num *= view.filled.restrict(pa)?.determinant()?;
        }
    }
    Ok(num / den)
}

// ── Separation split ────────────────────────────────────────────────

#[derive(Debug, Clone)]
pub struct SplitInverse {
    pub omega: SymMatrix,
    pub det_omega: f64,
}

/// For Σ in PD_D and a partition (A, B, S) with S separating A from B in
/// the moral graph:
/// Σ⁻¹ = [Σ_{A∪S}⁻¹]^V + [Σ_{B∪S}⁻¹]^V − [Σ_S⁻¹]^V and
/// det(Σ⁻¹) = det(Σ_S) / (det(Σ_{A∪S})·det(Σ_{B∪S})).
pub fn separation_split_inverse(
    sigma: &SymMatrix,
    dag: &Dag,
    a: &[usize],
    b: &[usize],
    s: &[usize],
    tol: f64,
) -> Result<SplitInverse, AnalyticsError> {
    let p = sigma.dim();
    let mut seen = vec![false; p + 1];
    for &v in a.iter().chain(b).chain(s) {
        if v < 1 || v > p || seen[v] {
            return Err(AnalyticsError::NotPartition);
        }
        seen[v] = true;
    }
    if seen[1..].iter().any(|&x| !x) {
        return Err(AnalyticsError::NotPartition);
    }
    if !verify_in_pd(sigma, dag, tol)? {
        return Err(AnalyticsError::NotInPdD);
    }
    if !dag.moral_graph().separates(a, b, s)? {
        return Err(AnalyticsError::NotSeparating);
    }
    let mut a_s: Vec<usize> = a.iter().chain(s).copied().collect();
    a_s.sort_unstable();
    let mut b_s: Vec<usize> = b.iter().chain(s).copied().collect();
    b_s.sort_unstable();
    let mut s_sorted = s.to_vec();
    s_sorted.sort_unstable();

    let mut omega = SymMatrix::zeros(p);
    let mut det_num = 1.0;
    let mut det_den = 1.0;
    for (idx, sign) in [(&a_s, 1.0), (&b_s, 1.0), (&s_sorted, -1.0)] {
        if idx.is_empty() {
            continue;
        }
        let block = sigma.principal(idx);
        omega.add_scaled(&zero_fill_in(&block.inverse()?, idx, p), sign);
        let det = block.determinant()?;
        if sign > 0.0 {
            det_den *= det;
        } else {
            det_num *= det;
        }
    }
    Ok(SplitInverse {
        omega,
        det_omega: det_num / det_den,
    })
}

// ── Non-completable witness ─────────────────────────────────────────

/// Builds, for a non-perfect DAG, a partial positive definite matrix with
/// no completion in PD_D: unit diagonal, ε on the two collider edges of the
/// chosen immorality i₁ → v ← j₁, zero on the rest of the pattern. The
/// membership equation forces Σ_{i₁ j₁} = 0, so the block over {v, i₁, j₁}
/// has determinant 1 − 2ε², negative for ε > √2/2. The immorality with the
/// lowest collider (then smallest parent pair) is chosen.
pub fn counterexample_partial_matrix(
    dag: &Dag,
    epsilon: f64,
) -> Result<PartialMatrix, AnalyticsError> {
    if let Some((i, j)) = dag.edges().into_iter().find(|&(i, j)| i <= j) {
        return Err(CompletionError::ConventionViolated(i, j).into());
    }
    let lo = std::f64::consts::SQRT_2 / 2.0;
    if !(epsilon > lo && epsilon < 1.0) {
        return Err(AnalyticsError::BadEpsilon);
    }
    let immoralities = dag.immoralities();
    let (i1, v, j1) = *immoralities.first().ok_or(AnalyticsError::PerfectDag)?;
    let p = dag.vertex_count();
    let mut entries: Vec<(usize, usize, f64)> = (1..=p).map(|i| (i, i, 1.0)).collect();
    for (u, w) in dag.undirected_version().edges() {
        let val = if (u, w) == (ord(v, j1)) || (u, w) == (ord(v, i1)) {
            epsilon
        } else {
            0.0
        };
        entries.push((u, w, val));
    }
    Ok(PartialMatrix::from_dag_pattern(dag, &entries)?)
}

fn ord(u: usize, w: usize) -> (usize, usize) {
    if u < w {
        (u, w)
    } else {
        (w, u)
    }
}

// ── Four-cycle inequalities ─────────────────────────────────────────

/// Completability report for the four-cycle pattern with edge labels
/// Γ₁₂ = a, Γ₂₄ = b, Γ₃₄ = c, Γ₁₃ = d and unit diagonal. `f` decides
/// completability to some positive definite matrix; f₁…f₆ decide
/// completability in the covariance space of each orientation class,
/// with f₅ and f₆ taken as the minimum of their two branch conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct C4Report {
    pub f: f64,
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    pub f4: f64,
    pub f5: f64,
    pub f6: f64,
    pub f5_branches: (f64, f64),
    pub f6_branches: (f64, f64),
    pub pd_completable: bool,
    pub dag_completable_any: bool,
}

pub fn c4_inequalities(a: f64, b: f64, c: f64, d: f64) -> Result<C4Report, AnalyticsError> {
    for v in [a, b, c, d] {
        if !(v.is_finite() && v.abs() < 1.0) {
            return Err(AnalyticsError::OutOfRange);
        }
    }
    let (qa, qb, qc, qd) = (1.0 - a * a, 1.0 - b * b, 1.0 - c * c, 1.0 - d * d);
    let f = (qa * qb).sqrt() + (qc * qd).sqrt() - (a * b - c * d).abs();
    let f1 = qc * qd - (a * b - c * d) * (a * b - c * d);
    let f2 = qa * qd - (b * c - a * d) * (b * c - a * d);
    let f3 = qa * qb - (c * d - a * b) * (c * d - a * b);
    let f4 = qb * qc - (a * d - b * c) * (a * d - b * c);
    let f5_branches = (qb * qc - (b * c) * (b * c), qa * qd - (a * d) * (a * d));
    let f6_branches = (qa * qb - (a * b) * (a * b), qc * qd - (c * d) * (c * d));
    let f5 = f5_branches.0.min(f5_branches.1);
    let f6 = f6_branches.0.min(f6_branches.1);
    let dag_completable_any = [f1, f2, f3, f4, f5, f6]
        .into_iter()
        .fold(f64::MIN, f64::max)
        > 0.0;
    Ok(C4Report {
        f,
        f1,
        f2,
        f3,
        f4,
        f5,
        f6,
        f5_branches,
        f6_branches,
        pd_completable: f > 0.0,
        dag_completable_any,
    })
}

/// The four-cycle pattern behind [`c4_inequalities`]: the graph on four
/// vertices with edges {1,2}, {1,3}, {2,4}, {3,4} and the partial matrix
/// with those labels and unit diagonal.
pub fn c4_partial_matrix(
    a: f64,
    b: f64,
    c: f64,
    d: f64,
) -> Result<(UGraph, PartialMatrix), AnalyticsError> {
    for v in [a, b, c, d] {
        if !(v.is_finite() && v.abs() < 1.0) {
            return Err(AnalyticsError::OutOfRange);
        }
    }
    let g = UGraph::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)])?;
    let rows = vec![
        vec![Some(1.0), Some(a), Some(d), None],
        vec![Some(a), Some(1.0), None, Some(b)],
        vec![Some(d), None, Some(1.0), Some(c)],
        vec![None, Some(b), Some(c), Some(1.0)],
    ];
    Ok((g, PartialMatrix::from_rows(&rows)?))
}
