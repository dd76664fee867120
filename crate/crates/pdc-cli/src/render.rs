//! Text rendering for matrices and scalars.

use pdc_core::symlin::{Matrix, SymMatrix};

/// Formats with the given number of significant digits; falls back to
/// scientific notation far from unit scale.
pub fn fmt_sig(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let digits = digits.max(1);
    let mut mag = v.abs().log10().floor() as i32;
    // rounding may carry into the next decade (0.99999… -> 1.0)
    if v.abs() / 10f64.powi(mag) >= 10.0 - 0.5 * 10f64.powi(1 - digits as i32) {
        mag += 1;
    }
    if mag < -4 || mag >= digits as i32 + 4 {
        format!("{:.*e}", digits - 1, v)
    } else {
        let dec = (digits as i32 - 1 - mag).max(0) as usize;
        format!("{:.*}", dec, v)
    }
}

fn render_rows(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(|s| s.len()).max().unwrap_or(0);
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|s| format!("{s:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn render_sym(m: &SymMatrix, digits: usize) -> String {
    let rows: Vec<Vec<String>> = (1..=m.dim())
        .map(|i| {
            (1..=m.dim())
                .map(|j| fmt_sig(m.get(i, j), digits))
                .collect()
        })
        .collect();
    render_rows(&rows)
}

pub fn render_matrix(m: &Matrix, digits: usize) -> String {
    let rows: Vec<Vec<String>> = (1..=m.nrows())
        .map(|i| {
            (1..=m.ncols())
                .map(|j| fmt_sig(m.get(i, j), digits))
                .collect()
        })
        .collect();
    render_rows(&rows)
}

pub fn render_vec(v: &[f64], digits: usize) -> String {
    v.iter()
        .map(|&x| fmt_sig(x, digits))
        .collect::<Vec<_>>()
        .join(" ")
}
