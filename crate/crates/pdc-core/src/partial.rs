//! Partial symmetric matrices tied to a graph pattern: symmetric storage of
//! specified/unspecified cells, partial positive definiteness, zero-fill-in,
//! and the text file format.
//!
//! File format: p lines of p whitespace-separated tokens; a token is either a
//! decimal real or `*` / `?` for an unspecified cell. Symmetry and a fully
//! specified diagonal are enforced on load.

#![allow(clippy::needless_range_loop)]

use crate::graph::{Dag, Relabeling, UGraph};
use crate::symlin::SymMatrix;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PartialError {
    #[error(
        "specified pattern does not match the graph skeleton: missing {missing:?}, extra {extra:?}"
    )]
    PatternMismatch {
        missing: Vec<(usize, usize)>,
        extra: Vec<(usize, usize)>,
    },
    #[error("asymmetric specification at ({0}, {1})")]
    AsymmetricValue(usize, usize),
    #[error("diagonal cell ({0}, {0}) must be specified")]
    UnspecifiedDiagonal(usize),
    #[error("cell ({0}, {1}) is unspecified")]
    UnspecifiedCell(usize, usize),
    #[error("entries must be finite")]
    NonFinite,
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Symmetric p×p matrix whose cells are each specified or unspecified.
/// The diagonal is always specified; the off-diagonal specified positions
/// form the pattern.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialMatrix {
    p: usize,
    cells: Vec<Option<f64>>,
}

impl PartialMatrix {
    /// Builds from full rows of optional entries; requires a symmetric
    /// specification with exactly mirrored values and a specified diagonal.
    pub fn from_rows(rows: &[Vec<Option<f64>>]) -> Result<Self, PartialError> {
        let p = rows.len();
        for row in rows {
            if row.len() != p {
                return Err(PartialError::DimensionMismatch {
                    expected: p,
                    got: row.len(),
                });
            }
        }
        for i in 0..p {
            match rows[i][i] {
                None => return Err(PartialError::UnspecifiedDiagonal(i + 1)),
                Some(v) if !v.is_finite() => return Err(PartialError::NonFinite),
                _ => {}
            }
            for j in (i + 1)..p {
                match (rows[i][j], rows[j][i]) {
                    (None, None) => {}
                    (Some(a), Some(b)) if a == b => {
                        if !a.is_finite() {
                            return Err(PartialError::NonFinite);
                        }
                    }
                    _ => return Err(PartialError::AsymmetricValue(i + 1, j + 1)),
                }
            }
        }
        let mut cells = vec![None; p * p];
        for i in 0..p {
            for j in 0..p {
                cells[i * p + j] = rows[i][j];
            }
        }
        Ok(PartialMatrix { p, cells })
    }

    /// Builds a partial matrix whose pattern is exactly the skeleton of `dag`
    /// plus the diagonal. `entries` lists (i, j, value) cells; a mirrored
    /// pair may be given once or twice (equal values).
    pub fn from_dag_pattern(
        dag: &Dag,
        entries: &[(usize, usize, f64)],
    ) -> Result<Self, PartialError> {
        let p = dag.vertex_count();
        let mut cells: Vec<Option<f64>> = vec![None; p * p];
        for &(i, j, v) in entries {
            if i < 1 || i > p || j < 1 || j > p {
                return Err(PartialError::PatternMismatch {
                    missing: vec![],
                    extra: vec![(i, j)],
                });
            }
            if !v.is_finite() {
                return Err(PartialError::NonFinite);
            }
            let idx = (i - 1) * p + (j - 1);
            let mirror = (j - 1) * p + (i - 1);
            if let Some(old) = cells[idx] {
                if old != v {
                    return Err(PartialError::AsymmetricValue(i, j));
                }
            }
            cells[idx] = Some(v);
            cells[mirror] = Some(v);
        }
        let pm = PartialMatrix { p, cells };
        pm.check_pattern(&dag.undirected_version())?;
        for i in 1..=p {
            if pm.get(i, i).is_none() {
                return Err(PartialError::UnspecifiedDiagonal(i));
            }
        }
        Ok(pm)
    }

    pub fn dim(&self) -> usize {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        assert!(
            i >= 1 && i <= self.p && j >= 1 && j <= self.p,
            "index out of range"
        );
        self.cells[(i - 1) * self.p + (j - 1)]
    }

    pub fn is_specified(&self, i: usize, j: usize) -> bool {
        self.get(i, j).is_some()
    }

    /// Sets cell (i, j) and its mirror.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        assert!(
            i >= 1 && i <= self.p && j >= 1 && j <= self.p,
            "index out of range"
        );
        self.cells[(i - 1) * self.p + (j - 1)] = Some(v);
        self.cells[(j - 1) * self.p + (i - 1)] = Some(v);
    }

    /// Specified off-diagonal positions (i, j) with i < j.
    pub fn specified_pattern(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.p {
            for j in (i + 1)..=self.p {
                if self.is_specified(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Unspecified positions (i, j) with i < j.
    pub fn unspecified_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.p {
            for j in (i + 1)..=self.p {
                if !self.is_specified(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Checks that the off-diagonal pattern equals the skeleton edge set.
    pub fn check_pattern(&self, skeleton: &UGraph) -> Result<(), PartialError> {
        if skeleton.vertex_count() != self.p {
            return Err(PartialError::DimensionMismatch {
                expected: skeleton.vertex_count(),
                got: self.p,
            });
        }
        let mut missing = Vec::new();
        let mut extra = Vec::new();
        for i in 1..=self.p {
            for j in (i + 1)..=self.p {
                let on_pattern = self.is_specified(i, j);
                let on_graph = skeleton.has_edge(i, j);
                if on_graph && !on_pattern {
                    missing.push((i, j));
                }
                if !on_graph && on_pattern {
                    extra.push((i, j));
                }
            }
        }
        if missing.is_empty() && extra.is_empty() {
            Ok(())
        } else {
            Err(PartialError::PatternMismatch { missing, extra })
        }
    }

    /// Checks the pattern against a DAG's skeleton.
    pub fn check_dag_pattern(&self, dag: &Dag) -> Result<(), PartialError> {
        self.check_pattern(&dag.undirected_version())
    }

    /// Converts a fully specified partial matrix to a dense one; fails on
    /// the first unspecified cell.
    pub fn to_sym(&self) -> Result<SymMatrix, PartialError> {
        let all: Vec<usize> = (1..=self.p).collect();
        self.restrict(&all)
    }

    /// Restriction to a fully specified vertex subset: the |C|×|C| dense
    /// matrix (Γ_ij) for i, j in C, in the given order.
    pub fn restrict(&self, c: &[usize]) -> Result<SymMatrix, PartialError> {
        let mut out = SymMatrix::zeros(c.len());
        for (a, &i) in c.iter().enumerate() {
            for (b, &j) in c.iter().enumerate().skip(a) {
                match self.get(i, j) {
                    Some(v) => out.set(a + 1, b + 1, v),
                    None => return Err(PartialError::UnspecifiedCell(i, j)),
                }
            }
        }
        Ok(out)
    }

    /// Membership in Q over an undirected pattern graph: every maximal clique
    /// restriction is positive definite.
    pub fn is_partial_positive_definite_over(
        &self,
        g: &UGraph,
        tol: f64,
    ) -> Result<bool, PartialError> {
        self.check_pattern(g)?;
        for clique in g.maximal_cliques() {
            let block = self.restrict(&clique)?;
            if !block.is_positive_definite(tol) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership in Q_D: every maximal clique restriction of the DAG's
    /// skeleton is positive definite.
    pub fn is_partial_positive_definite(&self, dag: &Dag, tol: f64) -> Result<bool, PartialError> {
        self.is_partial_positive_definite_over(&dag.undirected_version(), tol)
    }

    /// First maximal clique whose restriction fails positive definiteness,
    /// if any. Witness companion to the Q membership check.
    pub fn failing_clique(&self, g: &UGraph, tol: f64) -> Result<Option<Vec<usize>>, PartialError> {
        self.check_pattern(g)?;
        for clique in g.maximal_cliques() {
            let block = self.restrict(&clique)?;
            if !block.is_positive_definite(tol) {
                return Ok(Some(clique));
            }
        }
        Ok(None)
    }

    /// Relabels rows/columns; cell (i, j) moves to (map(i), map(j)).
    pub fn permuted(&self, relab: &Relabeling) -> PartialMatrix {
        assert_eq!(relab.dim(), self.p, "relabeling dimension mismatch");
        let mut out = PartialMatrix {
            p: self.p,
            cells: vec![None; self.p * self.p],
        };
        for i in 1..=self.p {
            for j in 1..=self.p {
                if let Some(v) = self.get(i, j) {
                    let (ni, nj) = (relab.map(i), relab.map(j));
                    out.cells[(ni - 1) * self.p + (nj - 1)] = Some(v);
                }
            }
        }
        out
    }

    /// Parses the matrix file format. Tokens are decimal reals or `*` / `?`
    /// for unspecified cells; lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, PartialError> {
        let mut rows: Vec<Vec<Option<f64>>> = Vec::new();
        let mut row_lines: Vec<usize> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            for (colno, tok) in trimmed.split_whitespace().enumerate() {
                if tok == "*" || tok == "?" {
                    row.push(None);
                } else {
                    let v: f64 = tok.parse().map_err(|_| PartialError::Parse {
                        line: lineno + 1,
                        col: colno + 1,
                        msg: format!("invalid token `{tok}`"),
                    })?;
                    if !v.is_finite() {
                        return Err(PartialError::Parse {
                            line: lineno + 1,
                            col: colno + 1,
                            msg: "entries must be finite".into(),
                        });
                    }
                    row.push(Some(v));
                }
            }
            rows.push(row);
            row_lines.push(lineno + 1);
        }
        if rows.is_empty() {
            return Err(PartialError::Parse {
                line: 1,
                col: 1,
                msg: "empty matrix file".into(),
            });
        }
        let p = rows.len();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != p {
                return Err(PartialError::Parse {
                    line: row_lines[k],
                    col: row.len() + 1,
                    msg: format!("expected {p} tokens per row, got {}", row.len()),
                });
            }
        }
        PartialMatrix::from_rows(&rows)
    }

    /// Renders the matrix file format; `parse(serialize(Γ)) == Γ` bit-exact.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.p {
            let row: Vec<String> = (1..=self.p)
                .map(|j| match self.get(i, j) {
                    Some(v) => format!("{v}"),
                    None => "*".into(),
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Zero-fill-in: embeds the |W|×|W| matrix `m` into a p×p matrix supported
/// on the index set `support` (1-based, matching `m`'s row order), zero
/// elsewhere.
pub fn zero_fill_in(m: &SymMatrix, support: &[usize], p: usize) -> SymMatrix {
    assert_eq!(
        m.dim(),
        support.len(),
        "support size must match matrix dimension"
    );
    let mut out = SymMatrix::zeros(p);
    for (a, &i) in support.iter().enumerate() {
        assert!(i >= 1 && i <= p, "support index out of range");
        for (b, &j) in support.iter().enumerate().skip(a) {
            out.set(i, j, m.get(a + 1, b + 1));
        }
    }
    out
}
