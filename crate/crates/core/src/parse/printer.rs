use std::fmt;

use crate::calculus::VectorField;
use crate::coeff::{unsigned_parts, Coeff};
use crate::expr::{SuperExpr, Term};

fn monomial_text(term: &Term, c: &Coeff, suffix: Option<&str>) -> (bool, String) {
    let (neg, mag) = unsigned_parts(c);
    let mut parts: Vec<String> = mag.into_iter().collect();
    for (g, e) in term.even_factors() {
        for _ in 0..*e {
            parts.push(g.to_string());
        }
    }
    parts.extend(term.odd_factors().iter().map(ToString::to_string));
    parts.extend(suffix.map(String::from));
    if parts.is_empty() {
        parts.push("1".into());
    }
    (neg, parts.join("*"))
}

fn join(pieces: impl Iterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (neg, text) in pieces {
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Deterministic text of a canonical expression: terms in canonical
/// order, each as `coefficient*even factors*odd factors`.
pub fn print_canonical(e: &SuperExpr) -> String {
    join(e.terms().map(|(t, c)| monomial_text(t, c, None)))
}

/// `X_c*@c` terms in chart order.
pub fn print_vf(x: &VectorField) -> String {
    let chart = x.chart();
    let mut pieces = Vec::new();
    for i in 0..chart.dim() {
        let marker = format!("@{}", chart.coordinates()[i].name);
        for (t, c) in x.component(i).terms() {
            pieces.push(monomial_text(t, c, Some(&marker)));
        }
    }
    join(pieces.into_iter())
}

impl fmt::Display for SuperExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_canonical(self))
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_vf(self))
    }
}
