//! Exact left-linear solving over the scalar ring.
//!
//! Unknown vector-field components are expanded in the chart's odd
//! monomial basis (`1, th, thb, th*thb` on `r1n2`) with scalar unknowns
//! `u_j` standing to the left. Scalars are everything that is not an odd
//! coordinate or a differential: `t`, function symbols, parameters and odd
//! constants. Every equation is then split along frame monomials, giving
//! a system `sum_j u_j M[j][n] = r[n]` that is eliminated with pivots of
//! constant nonzero body only.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::calculus::{Chart, VectorField};
use crate::error::ContactError;
use crate::expr::{SuperExpr, Term};

struct Step {
    row: usize,
    pivot_inv: SuperExpr,
    rhs: SuperExpr,
    column: Vec<(usize, SuperExpr)>,
}

/// Solve `sum_j u_j * m[j][n] = r[n]` for the row vector `u`. The solution
/// must be unique; otherwise an error says why not.
pub fn solve_left(
    mut m: Vec<Vec<SuperExpr>>,
    mut r: Vec<SuperExpr>,
) -> Result<Vec<SuperExpr>, ContactError> {
    let rows = m.len();
    let cols = r.len();
    let mut row_active = vec![true; rows];
    let mut col_active = vec![true; cols];
    let mut steps: Vec<Step> = Vec::new();

    loop {
        let mut found = None;
        'search: for n in (0..cols).filter(|&n| col_active[n]) {
            for j in (0..rows).filter(|&j| row_active[j]) {
                if m[j][n].is_zero() {
                    continue;
                }
                if let Ok(inv) = m[j][n].invert() {
                    found = Some((j, n, inv));
                    break 'search;
                }
            }
        }
        let Some((j, n, inv)) = found else { break };

        let column: Vec<(usize, SuperExpr)> = (0..rows)
            .filter(|&k| row_active[k] && k != j && !m[k][n].is_zero())
            .map(|k| (k, m[k][n].clone()))
            .collect();
        for n2 in (0..cols).filter(|&c| col_active[c] && c != n) {
            if m[j][n2].is_zero() {
                continue;
            }
            let factor = &inv * &m[j][n2];
            for (k, mkn) in &column {
                m[*k][n2] = &m[*k][n2] - &(mkn * &factor);
            }
            r[n2] = &r[n2] - &(&r[n] * &factor);
        }
        steps.push(Step {
            row: j,
            pivot_inv: inv,
            rhs: r[n].clone(),
            column,
        });
        row_active[j] = false;
        col_active[n] = false;
    }

    for n in (0..cols).filter(|&n| col_active[n]) {
        if (0..rows).any(|j| row_active[j] && !m[j][n].is_zero()) {
            return Err(ContactError::NoConstantPivot);
        }
    }
    if (0..cols).any(|n| col_active[n] && !r[n].is_zero()) {
        return Err(ContactError::NoSolution);
    }
    if row_active.iter().any(|&a| a) {
        return Err(ContactError::NotUnique);
    }

    let mut u = vec![SuperExpr::zero(); rows];
    for step in steps.iter().rev() {
        let mut acc = step.rhs.clone();
        for (k, mkn) in &step.column {
            acc = &acc - &(&u[*k] * mkn);
        }
        u[step.row] = &acc * &step.pivot_inv;
    }
    Ok(u)
}

/// `sum_c Y_c d/d(dc)` without the parity sign of `i_Y`; this is left-linear
/// in `Y` and agrees with `i_Y` on even fields.
pub(crate) fn raw_contraction(
    chart: &Chart,
    component: usize,
    coefficient: &SuperExpr,
    omega: &SuperExpr,
) -> SuperExpr {
    coefficient * &omega.left_partial(&chart.differential(component))
}

/// Find the unique even vector field `X` with `raw_contraction(X, forms[k]) = targets[k]`
/// for every `k`.
pub(crate) fn solve_even_field(
    chart: &Arc<Chart>,
    forms: &[SuperExpr],
    targets: &[SuperExpr],
) -> Result<VectorField, ContactError> {
    let monomials = chart.odd_monomials();
    let mut unknowns: Vec<(usize, SuperExpr)> = Vec::new();
    for c in 0..chart.dim() {
        for mono in &monomials {
            unknowns.push((c, mono.clone()));
        }
    }
    let is_frame = |g: &crate::Generator| chart.is_frame(g);

    let mut columns: BTreeMap<(usize, Term), usize> = BTreeMap::new();
    let mut row_parts: Vec<Vec<((usize, Term), SuperExpr)>> = Vec::new();
    for (c, mono) in &unknowns {
        let mut parts = Vec::new();
        for (k, form) in forms.iter().enumerate() {
            for (frame, scalar) in raw_contraction(chart, *c, mono, form).split_frame(is_frame) {
                let next = columns.len();
                columns.entry((k, frame.clone())).or_insert(next);
                parts.push(((k, frame), scalar));
            }
        }
        row_parts.push(parts);
    }
    let mut target_parts = Vec::new();
    for (k, target) in targets.iter().enumerate() {
        for (frame, scalar) in target.split_frame(is_frame) {
            let next = columns.len();
            columns.entry((k, frame.clone())).or_insert(next);
            target_parts.push(((k, frame), scalar));
        }
    }

    let ncols = columns.len();
    let mut m = vec![vec![SuperExpr::zero(); ncols]; unknowns.len()];
    for (j, parts) in row_parts.into_iter().enumerate() {
        for (key, scalar) in parts {
            let n = columns[&key];
            m[j][n] = &m[j][n] + &scalar;
        }
    }
    let mut r = vec![SuperExpr::zero(); ncols];
    for (key, scalar) in target_parts {
        let n = columns[&key];
        r[n] = &r[n] + &scalar;
    }

    let u = solve_left(m, r)?;
    let mut components = vec![SuperExpr::zero(); chart.dim()];
    for ((c, mono), uj) in unknowns.iter().zip(&u) {
        if !uj.is_zero() {
            components[*c] = &components[*c] + &(uj * mono);
        }
    }
    Ok(VectorField::new(chart.clone(), components))
}

/// Solve `f * base = target` for a function `f` (no differentials).
pub(crate) fn solve_multiplier(
    chart: &Arc<Chart>,
    base: &SuperExpr,
    target: &SuperExpr,
) -> Result<SuperExpr, ContactError> {
    let monomials = chart.odd_monomials();
    let is_frame = |g: &crate::Generator| chart.is_frame(g);
    let mut columns: BTreeMap<Term, usize> = BTreeMap::new();
    let mut row_parts = Vec::new();
    for mono in &monomials {
        let parts = (mono * base).split_frame(is_frame);
        for frame in parts.keys() {
            let next = columns.len();
            columns.entry(frame.clone()).or_insert(next);
        }
        row_parts.push(parts);
    }
    let target_parts = target.split_frame(is_frame);
    for frame in target_parts.keys() {
        let next = columns.len();
        columns.entry(frame.clone()).or_insert(next);
    }
    let mut m = vec![vec![SuperExpr::zero(); columns.len()]; monomials.len()];
    for (j, parts) in row_parts.into_iter().enumerate() {
        for (frame, scalar) in parts {
            m[j][columns[&frame]] = scalar;
        }
    }
    let mut r = vec![SuperExpr::zero(); columns.len()];
    for (frame, scalar) in target_parts {
        r[columns[&frame]] = scalar;
    }
    let u = solve_left(m, r)?;
    Ok(u.iter()
        .zip(&monomials)
        .fold(SuperExpr::zero(), |acc, (uj, mono)| acc + uj * mono))
}
