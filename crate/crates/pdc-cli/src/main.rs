//! `pdc` — positive definite completion of partial matrices over DAG
//! patterns.
//!
//! Exit codes: 0 for success or a true verdict, 2 for a domain-level
//! negative verdict (not completable, check answered "no"), 1 for usage or
//! input errors.

mod render;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use pdc_core::analytics::{
    c4_inequalities, counterexample_partial_matrix, markov_determinant, markov_inverse,
    AnalyticsError,
};
use pdc_core::completion::{
    complete_in_p, complete_in_pd, complete_in_pd_diagnose, eq_residual_max, verify_in_p,
    verify_in_pd, CompletionError, PdStatus,
};
use pdc_core::graph::{
    parse_graph_edges, topological_relabel, Dag, GraphKind, RawGraph, Relabeling, UGraph,
};
use pdc_core::partial::PartialMatrix;
use pdc_core::symlin::SymMatrix;
use render::{fmt_sig, render_matrix, render_sym, render_vec};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_VERDICT_NO: u8 = 2;

#[derive(Parser)]
#[command(
    name = "pdc",
    version,
    about = "Positive definite completion of partial matrices over DAG patterns",
    long_about = "Decides whether a partial symmetric matrix specified on a DAG's edge \
pattern can be completed in the covariance space (pd) or the factored \
inverse-covariance space (p) of the Gaussian model over that DAG, constructs \
the completion, and computes inverses and determinants in closed form."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Complete a partial matrix in the chosen space
    Complete(CompleteArgs),
    /// Structural and membership checks with witnesses
    Check(CheckArgs),
    /// Closed-form inverse of the completion from the partial entries
    Inverse(InverseArgs),
    /// Closed-form determinant of the completion's inverse
    Det(DetArgs),
    /// Build a partial positive definite matrix that no completion extends
    Counterexample(CounterexampleArgs),
    /// Completability inequalities for the four-cycle pattern
    C4(C4Args),
    /// Enumerate the acyclic orientations of an undirected graph
    Orientations(OrientationsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Space {
    /// covariance space
    Pd,
    /// factored inverse-covariance space
    P,
}

#[derive(Args)]
struct CompleteArgs {
    #[arg(long, value_enum)]
    space: Space,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Emit a machine-readable report
    #[arg(long)]
    json: bool,
    /// Keep running layers after a failed family check and report all failures
    #[arg(long)]
    diagnose: bool,
    /// Renumber vertices to satisfy the ordering convention, reporting the permutation
    #[arg(long)]
    relabel: bool,
    /// Significant digits in text output
    #[arg(long, default_value_t = 6)]
    precision: usize,
}

#[derive(Args)]
#[command(group(
    ArgGroup::new("what").required(true).args(["perfect", "decomposable", "qd", "in_pd", "in_p"])
))]
struct CheckArgs {
    /// Is the DAG perfect (no immoralities)?
    #[arg(long)]
    perfect: bool,
    /// Is the (undirected version of the) graph decomposable?
    #[arg(long)]
    decomposable: bool,
    /// Is the matrix partial positive definite over the pattern?
    #[arg(long)]
    qd: bool,
    /// Is the (fully specified) matrix a member of the covariance space?
    #[arg(long = "in-pd")]
    in_pd: bool,
    /// Is the (fully specified) matrix a member of the inverse-covariance space?
    #[arg(long = "in-p")]
    in_p: bool,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    relabel: bool,
}

#[derive(Args)]
struct InverseArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    relabel: bool,
    /// Also print the per-family audit trail
    #[arg(long)]
    verbose: bool,
    #[arg(long, default_value_t = 6)]
    precision: usize,
}

#[derive(Args)]
struct DetArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    relabel: bool,
}

#[derive(Args)]
struct CounterexampleArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    epsilon: f64,
    /// Write the generated matrix file here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct C4Args {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OrientationsArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    json: bool,
}

// ── Input loading ───────────────────────────────────────────────────

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))
}

fn load_any_graph(path: &Path) -> Result<RawGraph, InputError> {
    let text = read(path)?;
    Ok(parse_graph_edges(&text)?)
}

fn load_ugraph(path: &Path) -> Result<UGraph, InputError> {
    let raw = load_any_graph(path)?;
    match raw.kind {
        GraphKind::UGraph => Ok(UGraph::new(raw.p, &raw.edges)?),
        GraphKind::Dag => Err(InputError(format!(
            "{}: expected an undirected graph file (`ugraph <p>`)",
            path.display()
        ))),
    }
}

/// Loads a DAG for procedures that need the ordering convention. Without
/// `--relabel`, a convention violation is an input error; with it, the DAG
/// is renumbered and the permutation returned.
fn load_conventional_dag(path: &Path, relabel: bool) -> Result<(Dag, Relabeling), InputError> {
    let raw = load_any_graph(path)?;
    if raw.kind != GraphKind::Dag {
        return Err(InputError(format!(
            "{}: expected a DAG file (`dag <p>`)",
            path.display()
        )));
    }
    if relabel {
        Ok(topological_relabel(raw.p, &raw.edges)?)
    } else {
        let dag = Dag::new(raw.p, &raw.edges)?;
        if !dag.satisfies_convention() {
            return Err(InputError(format!(
                "{}: DAG violates the ordering convention i \u{2192} j \u{21d2} i > j; \
                 rerun with --relabel to renumber",
                path.display()
            )));
        }
        Ok((dag, Relabeling::identity(raw.p)))
    }
}

fn load_matrix(path: &Path, relab: &Relabeling) -> Result<PartialMatrix, InputError> {
    let gamma = PartialMatrix::parse(&read(path)?)?;
    if gamma.dim() != relab.dim() {
        return Err(InputError(format!(
            "{}: matrix is {}x{} but the graph has {} vertices",
            path.display(),
            gamma.dim(),
            gamma.dim(),
            relab.dim()
        )));
    }
    Ok(if relab.is_identity() {
        gamma
    } else {
        gamma.permuted(relab)
    })
}

fn permute_back(m: &SymMatrix, relab: &Relabeling) -> SymMatrix {
    // results are reported in the user's original labels
    let inv = relab.inverse();
    let p = m.dim();
    let mut out = SymMatrix::zeros(p);
    for i in 1..=p {
        for j in i..=p {
            out.set(inv.map(i), inv.map(j), m.get(i, j));
        }
    }
    out
}

fn report_relabeling(relab: &Relabeling, json: bool) {
    if relab.is_identity() || json {
        return;
    }
    let pairs: Vec<String> = relab
        .pairs()
        .iter()
        .map(|(o, n)| format!("{o}->{n}"))
        .collect();
    println!("relabeled vertices (old->new): {}", pairs.join(" "));
}

fn relab_json(relab: &Relabeling) -> serde_json::Value {
    if relab.is_identity() {
        serde_json::Value::Null
    } else {
        json!(relab.pairs())
    }
}

// ── Subcommands ─────────────────────────────────────────────────────

fn cmd_complete(args: &CompleteArgs) -> Result<u8, InputError> {
    let (dag, relab) = load_conventional_dag(&args.graph, args.relabel)?;
    let gamma = load_matrix(&args.matrix, &relab)?;
    match args.space {
        Space::Pd => {
            let result = if args.diagnose {
                complete_in_pd_diagnose(&gamma, &dag, args.tol)
            } else {
                complete_in_pd(&gamma, &dag, args.tol)
            };
            let result = result.map_err(input_error)?;
            match result.status {
                PdStatus::Completed => {
                    let sigma = permute_back(&result.sigma, &relab);
                    let resid = eq_residual_max(&result.sigma, &dag).map_err(input_error)?;
                    if args.json {
                        print_json(json!({
                            "status": "completed",
                            "sigma": sigma.rows_vec(),
                            "failing_vertex": null,
                            "residual_max": resid,
                            "relabeling": relab_json(&relab),
                        }));
                    } else {
                        report_relabeling(&relab, false);
                        println!("completable in the covariance space: yes");
                        println!("sigma =");
                        println!("{}", render_sym(&sigma, args.precision));
                        println!("max membership residual = {:.3e}", resid);
                    }
                    Ok(EXIT_OK)
                }
                PdStatus::FamilyNotPd(j) => {
                    let orig = relab.inverse().map(j);
                    if args.json {
                        let failing: Vec<usize> = result
                            .failing_vertices
                            .iter()
                            .map(|&v| relab.inverse().map(v))
                            .collect();
                        print_json(json!({
                            "status": "family_not_pd",
                            "sigma": null,
                            "failing_vertex": orig,
                            "failing_vertices": failing,
                            "relabeling": relab_json(&relab),
                        }));
                    } else {
                        report_relabeling(&relab, false);
                        println!(
                            "completable in the covariance space: no (family of vertex {orig} is not positive definite)"
                        );
                        if args.diagnose && result.failing_vertices.len() > 1 {
                            let all: Vec<String> = result
                                .failing_vertices
                                .iter()
                                .map(|&v| relab.inverse().map(v).to_string())
                                .collect();
                            println!("failing vertices: {}", all.join(" "));
                        }
                    }
                    Ok(EXIT_VERDICT_NO)
                }
            }
        }
        Space::P => match complete_in_p(&gamma, &dag) {
            Ok(res) => {
                let completed = permute_back(&res.completed, &relab);
                let mut resid: f64 = 0.0;
                for (i, j) in gamma.specified_pattern() {
                    resid = resid.max((res.completed.get(i, j) - gamma.get(i, j).unwrap()).abs());
                }
                if args.json {
                    print_json(json!({
                        "status": if res.in_p_d { "in_p" } else { "not_in_p" },
                        "gamma_hat": completed.rows_vec(),
                        "L": res.factor.l().rows_vec(),
                        "lambda": res.factor.d(),
                        "failing_vertex": null,
                        "residual_max": resid,
                        "relabeling": relab_json(&relab),
                    }));
                } else {
                    report_relabeling(&relab, false);
                    println!(
                        "completable in the inverse-covariance space: {}",
                        if res.in_p_d {
                            "yes"
                        } else {
                            "no (some pivots are not positive)"
                        }
                    );
                    if !relab.is_identity() {
                        println!("factor is triangular in the relabeled order:");
                    }
                    println!("lambda = {}", render_vec(res.factor.d(), args.precision));
                    println!("L =");
                    println!("{}", render_matrix(res.factor.l(), args.precision));
                    println!("completed matrix =");
                    println!("{}", render_sym(&completed, args.precision));
                }
                Ok(if res.in_p_d { EXIT_OK } else { EXIT_VERDICT_NO })
            }
            Err(CompletionError::ZeroPivot(j)) => {
                let orig = relab.inverse().map(j);
                if args.json {
                    print_json(json!({
                        "status": "zero_pivot",
                        "gamma_hat": null,
                        "failing_vertex": orig,
                        "relabeling": relab_json(&relab),
                    }));
                } else {
                    report_relabeling(&relab, false);
                    println!("no completion exists: zero pivot at vertex {orig}");
                }
                Ok(EXIT_VERDICT_NO)
            }
            Err(e) => Err(input_error(e)),
        },
    }
}

fn cmd_check(args: &CheckArgs) -> Result<u8, InputError> {
    let need_matrix = || {
        args.matrix
            .as_deref()
            .ok_or_else(|| InputError("this check needs --matrix".into()))
    };
    let (verdict, label, witness_text, witness_json);
    if args.perfect {
        let (dag, relab) = load_conventional_dag(&args.graph, args.relabel)?;
        let inv = relab.inverse();
        let immoralities: Vec<(usize, usize, usize)> = dag
            .immoralities()
            .iter()
            .map(|&(i, k, j)| (inv.map(i), inv.map(k), inv.map(j)))
            .collect();
        verdict = immoralities.is_empty();
        label = "perfect";
        witness_text = if verdict {
            String::new()
        } else {
            let list: Vec<String> = immoralities
                .iter()
                .map(|(i, k, j)| format!("{i} -> {k} <- {j}"))
                .collect();
            format!("immoralities: {}", list.join(", "))
        };
        witness_json = json!({ "immoralities": immoralities });
    } else if args.decomposable {
        let raw = load_any_graph(&args.graph)?;
        let g = match raw.kind {
            GraphKind::UGraph => UGraph::new(raw.p, &raw.edges)?,
            GraphKind::Dag => Dag::new(raw.p, &raw.edges)?.undirected_version(),
        };
        let peo = g.perfect_elimination_ordering();
        verdict = peo.is_some();
        label = "decomposable";
        witness_text = match &peo {
            Some(order) => format!(
                "perfect elimination ordering: {}",
                order
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            None => String::new(),
        };
        witness_json = json!({ "perfect_elimination_ordering": peo });
    } else if args.qd {
        let (dag, relab) = load_conventional_dag(&args.graph, args.relabel)?;
        let gamma = load_matrix(need_matrix()?, &relab)?;
        let skeleton = dag.undirected_version();
        let failing = gamma
            .failing_clique(&skeleton, args.tol)
            .map_err(input_error)?;
        verdict = failing.is_none();
        label = "partial positive definite";
        let failing_orig: Option<Vec<usize>> =
            failing.map(|c| c.into_iter().map(|v| relab.inverse().map(v)).collect());
        witness_text = match &failing_orig {
            Some(c) => format!(
                "failing clique: {}",
                c.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            None => String::new(),
        };
        witness_json = json!({ "failing_clique": failing_orig });
    } else if args.in_pd {
        let (dag, relab) = load_conventional_dag(&args.graph, args.relabel)?;
        let sigma = load_matrix(need_matrix()?, &relab)?
            .to_sym()
            .map_err(input_error)?;
        verdict = verify_in_pd(&sigma, &dag, args.tol).map_err(input_error)?;
        label = "member of the covariance space";
        let resid = eq_residual_max(&sigma, &dag).ok();
        witness_text = match resid {
            Some(r) => format!("max membership residual: {r:.3e}"),
            None => "a parent block is singular".into(),
        };
        witness_json = json!({ "residual_max": resid });
    } else {
        let (dag, relab) = load_conventional_dag(&args.graph, args.relabel)?;
        let omega = load_matrix(need_matrix()?, &relab)?
            .to_sym()
            .map_err(input_error)?;
        verdict = verify_in_p(&omega, &dag, args.tol).map_err(input_error)?;
        label = "member of the inverse-covariance space";
        witness_text = String::new();
        witness_json = serde_json::Value::Null;
    }
    if args.json {
        print_json(json!({
            "check": label,
            "verdict": verdict,
            "witness": witness_json,
        }));
    } else {
        println!("{label}: {}", if verdict { "yes" } else { "no" });
        if !witness_text.is_empty() {
            println!("{witness_text}");
        }
    }
    Ok(if verdict { EXIT_OK } else { EXIT_VERDICT_NO })
}

fn cmd_inverse(args: &InverseArgs) -> Result<u8, InputError> {
    let (dag, relab) = load_conventional_dag(&args.graph, args.relabel)?;
    let gamma = load_matrix(&args.matrix, &relab)?;
    let report = match markov_inverse(&gamma, &dag, args.tol) {
        Ok(r) => r,
        Err(e) => return not_completable(e, args.json),
    };
    let det = markov_determinant(&gamma, &dag, args.tol).map_err(input_error)?;
    let omega = permute_back(&report.omega, &relab);
    let inv = relab.inverse();
    let families: Vec<serde_json::Value> = report
        .per_family_terms
        .iter()
        .map(|t| {
            json!({
                "vertex": inv.map(t.vertex),
                "family": t.family.iter().map(|&v| inv.map(v)).collect::<Vec<_>>(),
                "parents": t.parents.iter().map(|&v| inv.map(v)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let filled: Vec<(usize, usize)> = report
        .filled_cells
        .iter()
        .map(|&(i, j)| (inv.map(i), inv.map(j)))
        .collect();
    if args.json {
        print_json(json!({
            "status": "ok",
            "omega": omega.rows_vec(),
            "det_omega": det,
            "log_det_omega": report.log_det_omega,
            "families": families,
            "filled_cells": filled,
            "relabeling": relab_json(&relab),
        }));
    } else {
        report_relabeling(&relab, false);
        println!("inverse of the completion =");
        println!("{}", render_sym(&omega, args.precision));
        println!("det of the inverse = {}", fmt_sig(det, args.precision));
        if args.verbose {
            for t in &report.per_family_terms {
                let fam: Vec<String> = t.family.iter().map(|&v| inv.map(v).to_string()).collect();
                let pa: Vec<String> = t.parents.iter().map(|&v| inv.map(v).to_string()).collect();
                println!(
                    "vertex {}: family {{{}}} parents {{{}}}",
                    inv.map(t.vertex),
                    fam.join(" "),
                    pa.join(" ")
                );
            }
            if filled.is_empty() {
                println!("no cells outside the pattern were materialized");
            } else {
                let cells: Vec<String> =
                    filled.iter().map(|(i, j)| format!("({i}, {j})")).collect();
                println!("materialized closure cells: {}", cells.join(" "));
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_det(args: &DetArgs) -> Result<u8, InputError> {
    let (dag, relab) = load_conventional_dag(&args.graph, args.relabel)?;
    let gamma = load_matrix(&args.matrix, &relab)?;
    let det = match markov_determinant(&gamma, &dag, args.tol) {
        Ok(d) => d,
        Err(e) => return not_completable(e, args.json),
    };
    if args.json {
        print_json(json!({ "status": "ok", "det_omega": det, "det_sigma": 1.0 / det }));
    } else {
        println!("det of the completion's inverse = {}", fmt_sig(det, 6));
        println!("det of the completion = {}", fmt_sig(1.0 / det, 6));
    }
    Ok(EXIT_OK)
}

/// Domain failures of the closed-form commands map to exit 2.
fn not_completable(e: AnalyticsError, json_mode: bool) -> Result<u8, InputError> {
    match &e {
        AnalyticsError::Completion(CompletionError::NotCompletable(j)) => {
            if json_mode {
                print_json(json!({ "status": "not_completable", "failing_vertex": j }));
            } else {
                println!(
                    "not completable: a required block fails positive definiteness at vertex {j}"
                );
            }
            Ok(EXIT_VERDICT_NO)
        }
        _ => Err(input_error(e)),
    }
}

fn cmd_counterexample(args: &CounterexampleArgs) -> Result<u8, InputError> {
    let (dag, _) = load_conventional_dag(&args.graph, false)?;
    let gamma = match counterexample_partial_matrix(&dag, args.epsilon) {
        Ok(g) => g,
        Err(AnalyticsError::PerfectDag) => {
            if args.json {
                print_json(json!({ "status": "perfect_dag" }));
            } else {
                println!("graph is perfect; always completable");
            }
            return Ok(EXIT_VERDICT_NO);
        }
        Err(e) => return Err(input_error(e)),
    };
    let (i1, k, j1) = dag.immoralities()[0];
    let in_q = gamma
        .is_partial_positive_definite(&dag, args.tol)
        .map_err(input_error)?;
    let result = complete_in_pd(&gamma, &dag, args.tol).map_err(input_error)?;
    let fails_at = match result.status {
        PdStatus::FamilyNotPd(j) => Some(j),
        PdStatus::Completed => None,
    };
    if let Some(path) = &args.out {
        std::fs::write(path, gamma.serialize())
            .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
    }
    if args.json {
        let rows: Vec<Vec<Option<f64>>> = (1..=gamma.dim())
            .map(|i| (1..=gamma.dim()).map(|j| gamma.get(i, j)).collect())
            .collect();
        print_json(json!({
            "status": "ok",
            "matrix": rows,
            "epsilon": args.epsilon,
            "collider": k,
            "parents": [i1, j1],
            "partial_positive_definite": in_q,
            "completion_fails_at": fails_at,
        }));
    } else {
        if args.out.is_none() {
            print!("{}", gamma.serialize());
        }
        println!("witness immorality: {i1} -> {k} <- {j1}");
        println!(
            "partial positive definite: {}",
            if in_q { "yes" } else { "no" }
        );
        match fails_at {
            Some(j) => println!("covariance-space completion fails at vertex {j}"),
            None => println!("covariance-space completion unexpectedly succeeded"),
        }
    }
    Ok(EXIT_OK)
}

fn cmd_c4(args: &C4Args) -> Result<u8, InputError> {
    let r = c4_inequalities(args.a, args.b, args.c, args.d).map_err(input_error)?;
    if args.json {
        print_json(json!({
            "f": r.f,
            "f1": r.f1, "f2": r.f2, "f3": r.f3, "f4": r.f4,
            "f5": r.f5, "f6": r.f6,
            "f5_branches": [r.f5_branches.0, r.f5_branches.1],
            "f6_branches": [r.f6_branches.0, r.f6_branches.1],
            "pd_completable": r.pd_completable,
            "dag_completable_any": r.dag_completable_any,
        }));
    } else {
        println!("f  = {}", fmt_sig(r.f, 6));
        for (name, v) in [
            ("f1", r.f1),
            ("f2", r.f2),
            ("f3", r.f3),
            ("f4", r.f4),
            ("f5", r.f5),
            ("f6", r.f6),
        ] {
            println!("{name} = {}", fmt_sig(v, 6));
        }
        println!(
            "completable to some positive definite matrix: {}",
            if r.pd_completable { "yes" } else { "no" }
        );
        println!(
            "completable in the covariance space of some orientation: {}",
            if r.dag_completable_any { "yes" } else { "no" }
        );
    }
    Ok(EXIT_OK)
}

fn cmd_orientations(args: &OrientationsArgs) -> Result<u8, InputError> {
    let g = load_ugraph(&args.graph)?;
    if g.edge_count() > 20 {
        return Err(InputError(format!(
            "{} edges would enumerate 2^{} orientations; refusing above 20 edges",
            g.edge_count(),
            g.edge_count()
        )));
    }
    let orientations = g.enumerate_acyclic_orientations();
    if args.json {
        let list: Vec<Vec<(usize, usize)>> = orientations.iter().map(|d| d.edges()).collect();
        print_json(json!({ "count": orientations.len(), "orientations": list }));
    } else {
        println!("# {} acyclic orientations", orientations.len());
        for (k, d) in orientations.iter().enumerate() {
            println!("# orientation {}/{}", k + 1, orientations.len());
            print!("{}", d.to_graph_file());
        }
    }
    Ok(EXIT_OK)
}

// ── Entry point ─────────────────────────────────────────────────────

fn input_error<E: std::fmt::Display>(e: E) -> InputError {
    InputError(e.to_string())
}

fn print_json(v: serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(&v).expect("report serializes")
    );
}

fn main() -> ExitCode {
    // die quietly when the read end of a pipe goes away
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match &cli.command {
        Command::Complete(args) => cmd_complete(args),
        Command::Check(args) => cmd_check(args),
        Command::Inverse(args) => cmd_inverse(args),
        Command::Det(args) => cmd_det(args),
        Command::Counterexample(args) => cmd_counterexample(args),
        Command::C4(args) => cmd_c4(args),
        Command::Orientations(args) => cmd_orientations(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
