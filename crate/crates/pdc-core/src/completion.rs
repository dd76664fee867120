//! Completion procedures over a DAG pattern: the column recursion that
//! completes in the inverse-covariance space P_D, the layer recursion that
//! completes in the covariance space PD_D, the perfect-DAG fast path, the
//! immorality-closure route, and membership verifiers for both spaces.
//!
//! All procedures require the numbering convention (every edge i → j has
//! i > j); relabel first via [`crate::graph::topological_relabel`] when it
//! does not hold.

use crate::graph::{Dag, GraphError};
use crate::partial::{PartialError, PartialMatrix};
use crate::symlin::{LdlFactor, Matrix, SymMatrix, SymlinError, ZERO_PIVOT_REL};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CompletionError {
    /// A diagonal pivot vanished at the given column while parent entries of
    /// that column still had to be computed; no completion of the required
    /// factored form exists.
    #[error("zero pivot at column {0}: no completion exists")]
    ZeroPivot(usize),
    #[error(
        "DAG violates the numbering convention i \u{2192} j \u{21d2} i > j at edge ({0}, {1})"
    )]
    ConventionViolated(usize, usize),
    #[error("DAG is not perfect")]
    NotPerfect,
    #[error("matrix is not partial positive definite over the pattern")]
    NotPartialPd,
    #[error("not completable: a required block fails positive definiteness at vertex {0}")]
    NotCompletable(usize),
    #[error(transparent)]
    Pattern(#[from] PartialError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] SymlinError),
}

fn require_convention(dag: &Dag) -> Result<(), CompletionError> {
    match dag.edges().into_iter().find(|&(i, j)| i <= j) {
        Some((i, j)) => Err(CompletionError::ConventionViolated(i, j)),
        None => Ok(()),
    }
}

fn diag_scale(gamma: &PartialMatrix) -> f64 {
    let maxd = (1..=gamma.dim())
        .map(|i| gamma.get(i, i).expect("diagonal is always specified").abs())
        .fold(0.0_f64, f64::max);
    ZERO_PIVOT_REL * 1.0_f64.max(maxd)
}

// ── Completion in P_D ───────────────────────────────────────────────

/// Result of the column recursion: the factor with L supported on the DAG's
/// edges, the completed matrix Γ̂ = LΛLᵀ, and whether Γ̂ lies in P_D (all
/// pivots strictly positive).
#[derive(Debug, Clone)]
pub struct PCompletionResult {
    pub factor: LdlFactor,
    pub completed: SymMatrix,
    pub in_p_d: bool,
}

/// Completes a partial matrix in the factored form Γ̂ = LΛLᵀ with L unit
/// lower triangular supported on the DAG's edges. Proceeds column by
/// column: Λ_jj = Γ_jj − Σ_{k<j} Λ_kk L_jk², then L_ij for i ∈ pa(j).
/// The result is the unique completion of that form; it lies in P_D iff
/// every Λ_jj is strictly positive.
pub fn complete_in_p(
    gamma: &PartialMatrix,
    dag: &Dag,
) -> Result<PCompletionResult, CompletionError> {
    require_convention(dag)?;
    gamma.check_dag_pattern(dag)?;
    let p = gamma.dim();
    let zscale = diag_scale(gamma);
    let mut l = Matrix::identity(p);
    let mut d = vec![0.0; p];
    for j in 1..=p {
        let mut djj = gamma.get(j, j).unwrap();
        for k in 1..j {
            djj -= d[k - 1] * l.get(j, k) * l.get(j, k);
        }
        d[j - 1] = djj;
        let pa = dag.parents(j);
        if !pa.is_empty() && djj.abs() <= zscale {
            return Err(CompletionError::ZeroPivot(j));
        }
        for &i in pa {
            let mut s = gamma.get(i, j).unwrap();
            for k in 1..j {
                s -= d[k - 1] * l.get(i, k) * l.get(j, k);
            }
            l.set(i, j, s / djj);
        }
    }
    let in_p_d = d.iter().all(|&v| v > zscale);
    let factor = LdlFactor::from_parts(l, d);
    let completed = factor.reconstruct();
    Ok(PCompletionResult {
        factor,
        completed,
        in_p_d,
    })
}

/// Verdict-only variant of [`complete_in_p`]: stops at the first
/// non-positive pivot, which already settles that no completion in P_D
/// exists.
pub fn completable_in_p(gamma: &PartialMatrix, dag: &Dag) -> Result<bool, CompletionError> {
    require_convention(dag)?;
    gamma.check_dag_pattern(dag)?;
    let p = gamma.dim();
    let zscale = diag_scale(gamma);
    let mut l = Matrix::identity(p);
    let mut d = vec![0.0; p];
    for j in 1..=p {
        let mut djj = gamma.get(j, j).unwrap();
        for k in 1..j {
            djj -= d[k - 1] * l.get(j, k) * l.get(j, k);
        }
        if djj <= zscale {
            return Ok(false);
        }
        d[j - 1] = djj;
        for &i in dag.parents(j) {
            let mut s = gamma.get(i, j).unwrap();
            for k in 1..j {
                s -= d[k - 1] * l.get(i, k) * l.get(j, k);
            }
            l.set(i, j, s / djj);
        }
    }
    Ok(true)
}

// ── Completion in PD_D ──────────────────────────────────────────────

#[derive(Debug, Clone, PartialEq)]
pub enum PdStatus {
    Completed,
    /// The family block Σ_fa(j) of this vertex failed positive definiteness;
    /// no completion in PD_D exists.
    FamilyNotPd(usize),
}

/// Result of the layer recursion. On `Completed`, `sigma` is the unique
/// completion in PD_D. On `FamilyNotPd`, `sigma` holds the state at the
/// point of failure: pattern entries plus the rows filled in layers above
/// the failing vertex (diagnosis mode may fill further layers);
/// `failing_vertices` lists every family check that failed, first entry
/// matching the status.
#[derive(Debug, Clone)]
pub struct PdCompletionResult {
    pub sigma: SymMatrix,
    pub status: PdStatus,
    pub failing_vertices: Vec<usize>,
}

impl PdCompletionResult {
    pub fn is_completed(&self) -> bool {
        self.status == PdStatus::Completed
    }
}

/// Fills Σ_{pr(j), j} per the membership equation, factoring Σ_pa(j) once
/// per layer. Empty parent set forces zeros.
fn fill_layer(sigma: &mut SymMatrix, dag: &Dag, j: usize) -> Result<(), SymlinError> {
    let pr = dag.predecessors(j);
    if pr.is_empty() {
        return Ok(());
    }
    let pa = dag.parents(j);
    if pa.is_empty() {
        for &i in &pr {
            sigma.set(i, j, 0.0);
        }
        return Ok(());
    }
    let pa_block = sigma.principal(pa);
    let factor = pa_block
        .modified_cholesky()
        .map_err(|_| SymlinError::SingularBlock)?;
    if factor.min_abs_pivot() <= pa_block.zero_pivot_scale() {
        return Err(SymlinError::SingularBlock);
    }
    let rhs: Vec<f64> = pa.iter().map(|&k| sigma.get(k, j)).collect();
    let x = factor.solve(&rhs);
    for &i in &pr {
        let v = pa.iter().zip(&x).map(|(&k, xv)| sigma.get(i, k) * xv).sum();
        sigma.set(i, j, v);
    }
    Ok(())
}

fn complete_in_pd_impl(
    gamma: &PartialMatrix,
    dag: &Dag,
    tol: f64,
    diagnose: bool,
) -> Result<PdCompletionResult, CompletionError> {
    require_convention(dag)?;
    gamma.check_dag_pattern(dag)?;
    let p = gamma.dim();
    let mut sigma = SymMatrix::zeros(p);
    for i in 1..=p {
        for j in i..=p {
            if let Some(v) = gamma.get(i, j) {
                sigma.set(i, j, v);
            }
        }
    }
    let mut failing = Vec::new();
    for j in (1..=p).rev() {
        let fa = dag.family(j);
        if !sigma.principal(&fa).is_positive_definite(tol) {
            failing.push(j);
            if !diagnose {
                return Ok(PdCompletionResult {
                    sigma,
                    status: PdStatus::FamilyNotPd(j),
                    failing_vertices: failing,
                });
            }
        }
        if fill_layer(&mut sigma, dag, j).is_err() {
            // only reachable in diagnosis mode once a family check failed;
            // the parent block is too degenerate to keep filling
            break;
        }
    }
    let status = match failing.first() {
        None => PdStatus::Completed,
        Some(&j) => PdStatus::FamilyNotPd(j),
    };
    Ok(PdCompletionResult {
        sigma,
        status,
        failing_vertices: failing,
    })
}

/// Completes a partial matrix in the covariance space PD_D by the layer
/// recursion j = p, …, 1: check Σ_fa(j) ≻ 0, then fill Σ_{pr(j), j} from
/// the parent block. Stops at the first failing family; when it completes,
/// the result is the unique member of PD_D extending the input.
pub fn complete_in_pd(
    gamma: &PartialMatrix,
    dag: &Dag,
    tol: f64,
) -> Result<PdCompletionResult, CompletionError> {
    complete_in_pd_impl(gamma, dag, tol, false)
}

/// Diagnosis variant of [`complete_in_pd`]: keeps running layers after a
/// family check fails and records every failing vertex.
pub fn complete_in_pd_diagnose(
    gamma: &PartialMatrix,
    dag: &Dag,
    tol: f64,
) -> Result<PdCompletionResult, CompletionError> {
    complete_in_pd_impl(gamma, dag, tol, true)
}

/// Fast path for perfect DAGs: membership in Q_D is necessary and
/// sufficient, so the per-layer positive definiteness checks are skipped
/// and the fill runs j = p−1, …, 1 directly. Same arithmetic as
/// [`complete_in_pd`] on the layers it shares.
pub fn complete_in_pd_perfect(
    gamma: &PartialMatrix,
    dag: &Dag,
    tol: f64,
) -> Result<SymMatrix, CompletionError> {
    require_convention(dag)?;
    if !dag.is_perfect() {
        return Err(CompletionError::NotPerfect);
    }
    gamma.check_dag_pattern(dag)?;
    if !gamma.is_partial_positive_definite(dag, tol)? {
        return Err(CompletionError::NotPartialPd);
    }
    let p = gamma.dim();
    let mut sigma = SymMatrix::zeros(p);
    for i in 1..=p {
        for j in i..=p {
            if let Some(v) = gamma.get(i, j) {
                sigma.set(i, j, v);
            }
        }
    }
    for j in (1..p).rev() {
        fill_layer(&mut sigma, dag, j)?;
    }
    Ok(sigma)
}

// ── Immorality-closure route ────────────────────────────────────────

/// Outcome of the closure route: the DAG sequence D⁽⁰⁾, …, D⁽ⁿ⁾, the
/// partial matrix over the perfect D⁽ⁿ⁾ with the added-edge cells filled,
/// those cells in fill order, and the final completion.
#[derive(Debug, Clone)]
pub struct ClosureCompletion {
    pub closure: Vec<Dag>,
    pub filled: PartialMatrix,
    pub filled_cells: Vec<(usize, usize)>,
    pub sigma: SymMatrix,
}

/// Closure sequence plus the partial matrix with added-edge cells filled.
pub(crate) struct ClosureFill {
    pub closure: Vec<Dag>,
    pub filled: PartialMatrix,
    pub cells: Vec<(usize, usize)>,
}

/// Computes the immorality closure of the DAG and fills the cells of the
/// added edges, target vertex descending, from the original parent sets:
/// Σ_{i,j} = Σ_{i,pa(j)} (Σ_pa(j))⁻¹ Σ_{pa(j),j}. Every entry the fill
/// reads is either on the original pattern or a cell filled at a higher
/// target, because parent sets of the perfect closure are complete.
pub(crate) fn closure_fill(
    gamma: &PartialMatrix,
    dag: &Dag,
    tol: f64,
) -> Result<ClosureFill, CompletionError> {
    require_convention(dag)?;
    gamma.check_dag_pattern(dag)?;
    let closure = dag.immorality_closure()?;
    let last = closure.last().expect("closure is never empty");
    let mut filled = gamma.clone();
    let mut cells = Vec::new();
    for j in (1..=gamma.dim()).rev() {
        let added: Vec<usize> = last
            .parents(j)
            .iter()
            .copied()
            .filter(|&i| !dag.has_edge(i, j))
            .collect();
        if added.is_empty() {
            continue;
        }
        let pa = dag.parents(j);
        if pa.is_empty() {
            for &i in &added {
                filled.set(i, j, 0.0);
                cells.push((i, j));
            }
            continue;
        }
        let pa_block = filled.restrict(pa)?;
        if !pa_block.is_positive_definite(tol) {
            return Err(CompletionError::NotCompletable(j));
        }
        let factor = pa_block.modified_cholesky()?;
        let rhs: Vec<f64> = pa
            .iter()
            .map(|&k| filled.get(k, j).expect("parent entries are on the pattern"))
            .collect();
        let x = factor.solve(&rhs);
        for &i in &added {
            let v = pa
                .iter()
                .zip(&x)
                .map(|(&k, xv)| {
                    filled
                        .get(i, k)
                        .expect("closure parents are pairwise adjacent")
                        * xv
                })
                .sum();
            filled.set(i, j, v);
            cells.push((i, j));
        }
    }
    Ok(ClosureFill {
        closure,
        filled,
        cells,
    })
}

/// Alternative completion route: build the immorality closure, fill the
/// added-edge entries from the membership equation, check partial positive
/// definiteness over the perfect closure, and complete by the fast path.
/// Agrees with [`complete_in_pd`] whenever both succeed.
pub fn complete_via_immorality_closure(
    gamma: &PartialMatrix,
    dag: &Dag,
    tol: f64,
) -> Result<ClosureCompletion, CompletionError> {
    let fill = closure_fill(gamma, dag, tol)?;
    let last = fill.closure.last().unwrap();
    if !fill.filled.is_partial_positive_definite(last, tol)? {
        return Err(CompletionError::NotPartialPd);
    }
    let sigma = complete_in_pd_perfect(&fill.filled, last, tol)?;
    Ok(ClosureCompletion {
        closure: fill.closure,
        filled: fill.filled,
        filled_cells: fill.cells,
        sigma,
    })
}

// ── Verifiers ───────────────────────────────────────────────────────

/// Largest membership-equation residual over all vertices:
/// max_j ‖Σ_{pr(j),j} − Σ_{pr(j),pa(j)} (Σ_pa(j))⁻¹ Σ_{pa(j),j}‖_∞.
pub fn eq_residual_max(sigma: &SymMatrix, dag: &Dag) -> Result<f64, CompletionError> {
    require_convention(dag)?;
    let p = sigma.dim();
    if dag.vertex_count() != p {
        return Err(PartialError::DimensionMismatch {
            expected: dag.vertex_count(),
            got: p,
        }
        .into());
    }
    let mut worst: f64 = 0.0;
    for j in 1..=p {
        let pr = dag.predecessors(j);
        if pr.is_empty() {
            continue;
        }
        let pa = dag.parents(j);
        let expected: Vec<f64> = if pa.is_empty() {
            vec![0.0; pr.len()]
        } else {
            let pa_block = sigma.principal(pa);
            let factor = pa_block
                .modified_cholesky()
                .map_err(|_| SymlinError::SingularBlock)?;
            if factor.min_abs_pivot() <= pa_block.zero_pivot_scale() {
                return Err(SymlinError::SingularBlock.into());
            }
            let rhs: Vec<f64> = pa.iter().map(|&k| sigma.get(k, j)).collect();
            let x = factor.solve(&rhs);
            pr.iter()
                .map(|&i| pa.iter().zip(&x).map(|(&k, xv)| sigma.get(i, k) * xv).sum())
                .collect()
        };
        for (&i, e) in pr.iter().zip(&expected) {
            worst = worst.max((sigma.get(i, j) - e).abs());
        }
    }
    Ok(worst)
}

/// Membership test for PD_D: Σ ≻ 0 and every membership-equation residual
/// within tol · ‖Σ‖_∞.
pub fn verify_in_pd(sigma: &SymMatrix, dag: &Dag, tol: f64) -> Result<bool, CompletionError> {
    require_convention(dag)?;
    if !sigma.is_positive_definite(tol) {
        return Ok(false);
    }
    let resid = eq_residual_max(sigma, dag)?;
    Ok(resid <= tol * 1.0_f64.max(sigma.max_abs()))
}

/// Membership test for P_D: the modified Cholesky factorization exists with
/// strictly positive pivots and L vanishes (|L_ij| ≤ tol) off the DAG's
/// edges.
pub fn verify_in_p(omega: &SymMatrix, dag: &Dag, tol: f64) -> Result<bool, CompletionError> {
    require_convention(dag)?;
    if dag.vertex_count() != omega.dim() {
        return Err(PartialError::DimensionMismatch {
            expected: dag.vertex_count(),
            got: omega.dim(),
        }
        .into());
    }
    let factor = match omega.modified_cholesky() {
        Ok(f) => f,
        Err(_) => return Ok(false),
    };
    let zscale = omega.zero_pivot_scale();
    if factor.d().iter().any(|&v| v <= zscale) {
        return Ok(false);
    }
    for i in 2..=omega.dim() {
        for j in 1..i {
            if !dag.has_edge(i, j) && factor.l().get(i, j).abs() > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Dag;
    use crate::partial::PartialMatrix;

    /// 6×6 factorization demo: completes as LΛLᵀ but not in P_D.
    fn ldl_demo() -> (Dag, PartialMatrix) {
        let dag = Dag::new(6, &[(3, 2), (4, 1), (4, 3), (5, 2), (5, 4), (6, 1), (6, 2)]).unwrap();
        let gamma = PartialMatrix::parse(
            "1 * * -3 * 4\n\
             * -1 -2 * -5 2\n\
             * -2 -2 -10 * *\n\
             -3 * -10 56 3 *\n\
             * -5 * 3 -30 *\n\
             4 2 * * * 13\n",
        )
        .unwrap();
        (dag, gamma)
    }

    /// 5×5 covariance completion demo.
    fn cov_demo() -> (Dag, PartialMatrix) {
        let dag = Dag::new(5, &[(2, 1), (4, 1), (5, 1), (3, 2), (4, 3), (5, 3)]).unwrap();
        let gamma = PartialMatrix::parse(
            "1 0.3 * 0.4 0.6\n\
             0.3 1 0.4 * *\n\
             * 0.4 1 -0.3 0.5\n\
             0.4 * -0.3 1 *\n\
             0.6 * 0.5 * 1\n",
        )
        .unwrap();
        (dag, gamma)
    }

    /// 4×4 demo that is partial positive definite yet not completable.
    fn blocked_demo() -> (Dag, PartialMatrix) {
        let dag = Dag::new(4, &[(2, 1), (3, 1), (4, 1), (3, 2), (4, 3)]).unwrap();
        let gamma = PartialMatrix::parse(
            "7 12 12 16\n\
             12 30 28 *\n\
             12 28 37 32\n\
             16 * 32 38\n",
        )
        .unwrap();
        (dag, gamma)
    }

    #[test]
    fn factored_completion_of_the_six_by_six_demo() {
        let (dag, gamma) = ldl_demo();
        let res = complete_in_p(&gamma, &dag).unwrap();
        assert_eq!(res.factor.d(), &[1.0, -1.0, 2.0, -3.0, -2.0, 1.0]);
        let expected_l = [
            (3, 2, 2.0),
            (4, 1, -3.0),
            (4, 3, -5.0),
            (5, 2, 5.0),
            (5, 4, -1.0),
            (6, 1, 4.0),
            (6, 2, -2.0),
        ];
        for &(i, j, v) in &expected_l {
            assert_eq!(res.factor.l().get(i, j), v);
        }
        // all other strictly-lower entries vanish (L stays on the edge set)
        for i in 2..=6 {
            for j in 1..i {
                if !dag.has_edge(i, j) {
                    assert_eq!(res.factor.l().get(i, j), 0.0);
                }
            }
        }
        assert!(!res.in_p_d);
        assert!(!completable_in_p(&gamma, &dag).unwrap());
        // completed matrix agrees with the pattern
        for (i, j) in gamma.specified_pattern() {
            assert_eq!(res.completed.get(i, j), gamma.get(i, j).unwrap());
        }
        assert_eq!(res.completed.get(3, 5), -10.0);
        assert_eq!(res.completed.get(4, 6), -12.0);
    }

    #[test]
    fn diagonal_only_input_is_immediate() {
        let dag = Dag::new(3, &[]).unwrap();
        let gamma = PartialMatrix::parse("2 * *\n* 3 *\n* * 4\n").unwrap();
        let res = complete_in_p(&gamma, &dag).unwrap();
        assert!(res.in_p_d);
        assert_eq!(res.factor.d(), &[2.0, 3.0, 4.0]);

        let pd = complete_in_pd(&gamma, &dag, 1e-10).unwrap();
        assert!(pd.is_completed());
        for i in 1..=3 {
            for j in 1..=3 {
                let expect = if i == j {
                    gamma.get(i, i).unwrap()
                } else {
                    0.0
                };
                assert_eq!(pd.sigma.get(i, j), expect);
            }
        }
    }

    #[test]
    fn zero_pivot_is_detected() {
        let dag = Dag::new(2, &[(2, 1)]).unwrap();
        let gamma = PartialMatrix::parse("0 1\n1 1\n").unwrap();
        assert_eq!(
            complete_in_p(&gamma, &dag).unwrap_err(),
            CompletionError::ZeroPivot(1)
        );
    }

    #[test]
    fn covariance_completion_of_the_five_by_five_demo() {
        let (dag, gamma) = cov_demo();
        let res = complete_in_pd(&gamma, &dag, 1e-10).unwrap();
        assert!(res.is_completed());
        let s = &res.sigma;
        assert!((s.get(4, 5)).abs() < 1e-12);
        assert!((s.get(4, 2) + 0.12).abs() < 1e-12);
        assert!((s.get(5, 2) - 0.2).abs() < 1e-12);
        assert!((s.get(3, 1) - 0.2437).abs() < 5e-5);
        assert!(verify_in_pd(s, &dag, 1e-8).unwrap());
        // pattern preserved
        for (i, j) in gamma.specified_pattern() {
            assert_eq!(s.get(i, j), gamma.get(i, j).unwrap());
        }
    }

    #[test]
    fn blocked_demo_fails_only_in_the_covariance_space() {
        let (dag, gamma) = blocked_demo();
        assert!(gamma.is_partial_positive_definite(&dag, 1e-10).unwrap());
        let res = complete_in_pd(&gamma, &dag, 1e-10).unwrap();
        assert_eq!(res.status, PdStatus::FamilyNotPd(1));
        // the forced entry was filled before the failing layer
        assert!((res.sigma.get(4, 2) - 896.0 / 37.0).abs() < 1e-9);

        let diag = complete_in_pd_diagnose(&gamma, &dag, 1e-10).unwrap();
        assert_eq!(diag.failing_vertices, vec![1]);

        assert!(matches!(
            complete_via_immorality_closure(&gamma, &dag, 1e-10).unwrap_err(),
            CompletionError::NotPartialPd | CompletionError::NotCompletable(_)
        ));
    }

    #[test]
    fn closure_route_matches_layer_recursion() {
        let (dag, gamma) = cov_demo();
        let direct = complete_in_pd(&gamma, &dag, 1e-10).unwrap();
        let via = complete_via_immorality_closure(&gamma, &dag, 1e-10).unwrap();
        assert!(direct.sigma.rel_frobenius_dist(&via.sigma) < 1e-9);
        assert!(via.closure.last().unwrap().is_perfect());
    }

    #[test]
    fn closure_fill_chains_through_the_original_parent_sets() {
        // oriented five-cycle: closure adds 5→2 then 5→3; the fills are
        // Γ53 = Γ54 Γ44⁻¹ Γ43 and Γ52 = Γ53 Γ33⁻¹ Γ32
        let dag = Dag::new(5, &[(2, 1), (5, 1), (3, 2), (4, 3), (5, 4)]).unwrap();
        let gamma = PartialMatrix::parse(
            "1 0.3 * * 0.2\n\
             0.3 1 0.25 * *\n\
             * 0.25 1 -0.4 *\n\
             * * -0.4 1 0.5\n\
             0.2 * * 0.5 1\n",
        )
        .unwrap();
        let via = complete_via_immorality_closure(&gamma, &dag, 1e-10).unwrap();
        assert_eq!(via.closure.len(), 3);
        assert_eq!(via.filled_cells, vec![(5, 3), (5, 2)]);
        let g53 = 0.5 * (-0.4);
        let g52 = g53 * 0.25;
        assert!((via.filled.get(5, 3).unwrap() - g53).abs() < 1e-15);
        assert!((via.filled.get(5, 2).unwrap() - g52).abs() < 1e-15);

        let direct = complete_in_pd(&gamma, &dag, 1e-10).unwrap();
        assert!(direct.is_completed());
        assert!(direct.sigma.rel_frobenius_dist(&via.sigma) < 1e-9);
    }

    #[test]
    fn closure_route_on_perfect_dag_reduces_to_fast_path() {
        let dag = Dag::new(3, &[(3, 2), (3, 1), (2, 1)]).unwrap();
        let gamma = PartialMatrix::parse("1 0.5 0.3\n0.5 1 0.2\n0.3 0.2 1\n").unwrap();
        let via = complete_via_immorality_closure(&gamma, &dag, 1e-10).unwrap();
        assert_eq!(via.closure.len(), 1);
        assert!(via.filled_cells.is_empty());
        assert_eq!(via.filled, gamma);
        let fast = complete_in_pd_perfect(&gamma, &dag, 1e-10).unwrap();
        assert_eq!(via.sigma, fast);
    }

    #[test]
    fn fast_path_rejects_imperfect_dags_and_non_q_input() {
        let (dag, gamma) = blocked_demo();
        assert_eq!(
            complete_in_pd_perfect(&gamma, &dag, 1e-10).unwrap_err(),
            CompletionError::NotPerfect
        );

        let perfect = Dag::new(2, &[(2, 1)]).unwrap();
        let bad = PartialMatrix::parse("1 2\n2 1\n").unwrap();
        assert_eq!(
            complete_in_pd_perfect(&bad, &perfect, 1e-10).unwrap_err(),
            CompletionError::NotPartialPd
        );
    }

    #[test]
    fn fast_path_matches_layer_recursion_exactly() {
        let dag = Dag::new(4, &[(4, 3), (3, 2), (2, 1)]).unwrap();
        let gamma =
            PartialMatrix::parse("1 0.4 * *\n0.4 1 -0.3 *\n* -0.3 1 0.6\n* * 0.6 1\n").unwrap();
        let fast = complete_in_pd_perfect(&gamma, &dag, 1e-10).unwrap();
        let layered = complete_in_pd(&gamma, &dag, 1e-10).unwrap();
        assert!(layered.is_completed());
        assert_eq!(fast, layered.sigma);
    }

    #[test]
    fn verify_in_pd_basics() {
        let dag = Dag::new(3, &[(2, 1)]).unwrap();
        assert!(verify_in_pd(&SymMatrix::identity(3), &dag, 1e-10).unwrap());

        let (dag4, gamma4) = blocked_demo();
        let diag = complete_in_pd_diagnose(&gamma4, &dag4, 1e-10).unwrap();
        assert!(!verify_in_pd(&diag.sigma, &dag4, 1e-8).unwrap());
    }

    #[test]
    fn verify_in_p_checks_pivots_and_sparsity() {
        let dag = Dag::new(3, &[(2, 1)]).unwrap();
        assert!(verify_in_p(&SymMatrix::identity(3), &dag, 1e-8).unwrap());

        // dense factor off the edge set fails
        let dense = SymMatrix::from_rows(&[
            vec![2.0, 0.9, 0.8],
            vec![0.9, 2.0, 0.7],
            vec![0.8, 0.7, 2.0],
        ])
        .unwrap();
        assert!(!verify_in_p(&dense, &dag, 1e-8).unwrap());

        // indefinite matrix fails the pivot sign requirement
        let indef = SymMatrix::from_rows(&[
            vec![1.0, 2.0, 0.0],
            vec![2.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ])
        .unwrap();
        assert!(!verify_in_p(&indef, &dag, 1e-8).unwrap());
    }

    #[test]
    fn convention_is_required() {
        let dag = Dag::new(2, &[(1, 2)]).unwrap();
        let gamma = PartialMatrix::parse("1 0.5\n0.5 1\n").unwrap();
        assert!(matches!(
            complete_in_pd(&gamma, &dag, 1e-10).unwrap_err(),
            CompletionError::ConventionViolated(1, 2)
        ));
    }

    #[test]
    fn one_by_one_inputs_are_trivial() {
        let dag = Dag::new(1, &[]).unwrap();
        let gamma = PartialMatrix::parse("2\n").unwrap();
        let pd = complete_in_pd(&gamma, &dag, 1e-10).unwrap();
        assert!(pd.is_completed());
        assert_eq!(pd.sigma.get(1, 1), 2.0);
        let p = complete_in_p(&gamma, &dag).unwrap();
        assert!(p.in_p_d);

        let neg = PartialMatrix::parse("-2\n").unwrap();
        let pd = complete_in_pd(&neg, &dag, 1e-10).unwrap();
        assert_eq!(pd.status, PdStatus::FamilyNotPd(1));
    }
}
