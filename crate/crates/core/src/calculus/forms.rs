//! Cartan calculus on the antitangent bundle of a chart.
//!
//! Differential forms are plain [`SuperExpr`]s in which the differentials
//! `dt, dth, ...` are generators of flipped parity.

use crate::calculus::chart::Chart;
use crate::calculus::vector_field::VectorField;
use crate::expr::SuperExpr;
use crate::generator::{GenKind, Parity};

/// `d = sum_c dc * d/dc`, an odd derivation. Function-of-t symbols pick
/// up `dt` times their time derivative.
pub fn exterior_derivative(chart: &Chart, omega: &SuperExpr) -> SuperExpr {
    let time = chart.time_index();
    omega.derivation(Parity::Odd, |g| match g.kind() {
        GenKind::Coordinate(_) => chart.index_of(g.name()).map(|i| chart.differential_expr(i)),
        GenKind::Function { .. } => time
            .map(|t| &chart.differential_expr(t) * &SuperExpr::gen(g.time_derivative().unwrap())),
        _ => None,
    })
}

/// `i_X = (-1)^{|X|} sum_c X_c d/d(dc)`, extended to inhomogeneous `X`
/// by linearity.
pub fn interior_product(x: &VectorField, omega: &SuperExpr) -> SuperExpr {
    let chart = x.chart();
    let mut out = SuperExpr::zero();
    for (p, part) in x.homogeneous_parts() {
        let mut acc = SuperExpr::zero();
        for i in 0..chart.dim() {
            let comp = part.component(i);
            if comp.is_zero() {
                continue;
            }
            acc += &(comp * &omega.left_partial(&chart.differential(i)));
        }
        out += &if p.is_odd() { -acc } else { acc };
    }
    out
}

/// `L_X = [d, i_X] = d i_X + (-1)^{|X|} i_X d`.
pub fn lie_derivative(x: &VectorField, omega: &SuperExpr) -> SuperExpr {
    let chart = x.chart();
    let d_omega = exterior_derivative(chart, omega);
    let mut out = SuperExpr::zero();
    for (p, part) in x.homogeneous_parts() {
        out += &exterior_derivative(chart, &interior_product(&part, omega));
        let second = interior_product(&part, &d_omega);
        out += &if p.is_odd() { -second } else { second };
    }
    out
}
