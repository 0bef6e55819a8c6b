//! Built-in supersymmetry generators, contact forms and SUSY maps on
//! `r1n1` and `r1n2`.

use std::sync::Arc;

use crate::calculus::chart::Chart;
use crate::calculus::map::CoordinateMap;
use crate::calculus::vector_field::VectorField;
use crate::error::CalculusError;
use crate::expr::SuperExpr;
use crate::generator::Generator;

/// Supercharges, covariant derivatives, time translation and R-symmetry.
/// On `r1n1` only `q`, `p` and `d` exist.
#[derive(Clone, Debug)]
pub struct SusyFields {
    pub q: VectorField,
    pub qb: Option<VectorField>,
    pub p: VectorField,
    pub r: Option<VectorField>,
    pub d: VectorField,
    pub db: Option<VectorField>,
}

impl SusyFields {
    pub fn for_chart(chart: &Arc<Chart>) -> Result<Self, CalculusError> {
        let i = SuperExpr::i;
        let is = |c: &Arc<Chart>, names: &[&str]| {
            c.dim() == names.len()
                && names
                    .iter()
                    .enumerate()
                    .all(|(k, n)| c.index_of(n) == Some(k))
        };
        match chart.name() {
            "r1n2" if is(chart, &["t", "th", "thb"]) => {
                let th = chart.coord_expr(1);
                let thb = chart.coord_expr(2);
                let vf =
                    |pairs: &[(&str, SuperExpr)]| VectorField::from_pairs(chart.clone(), pairs);
                Ok(SusyFields {
                    q: vf(&[("th", SuperExpr::one()), ("t", &i() * &thb)])?,
                    qb: Some(vf(&[("thb", SuperExpr::one()), ("t", &i() * &th)])?),
                    p: VectorField::partial(chart.clone(), 0),
                    r: Some(vf(&[("th", -(&i() * &th)), ("thb", &i() * &thb)])?),
                    d: vf(&[("th", SuperExpr::one()), ("t", -(&i() * &thb))])?,
                    db: Some(vf(&[("thb", SuperExpr::one()), ("t", -(&i() * &th))])?),
                })
            }
            "r1n1" if is(chart, &["t", "th"]) => {
                let th = chart.coord_expr(1);
                let vf =
                    |pairs: &[(&str, SuperExpr)]| VectorField::from_pairs(chart.clone(), pairs);
                Ok(SusyFields {
                    q: vf(&[("th", SuperExpr::one()), ("t", &i() * &th)])?,
                    qb: None,
                    p: VectorField::partial(chart.clone(), 0),
                    r: None,
                    d: vf(&[("th", SuperExpr::one()), ("t", -(&i() * &th))])?,
                    db: None,
                })
            }
            other => Err(CalculusError::UnknownChart(other.to_string())),
        }
    }
}

/// `dt + i(th dthb + thb dth)` on `r1n2`.
pub fn alpha_std() -> SuperExpr {
    let c = Chart::r1n2();
    let i = SuperExpr::i();
    c.differential_expr(0)
        + &i * &(&c.coord_expr(1) * &c.differential_expr(2)
            + &c.coord_expr(2) * &c.differential_expr(1))
}

/// `dt + i th dth` on `r1n1`.
pub fn alpha_n1() -> SuperExpr {
    let c = Chart::r1n1();
    c.differential_expr(0) + &SuperExpr::i() * &(&c.coord_expr(1) * &c.differential_expr(1))
}

pub fn eps() -> SuperExpr {
    SuperExpr::gen(Generator::odd_constant("eps"))
}

pub fn epsb() -> SuperExpr {
    SuperExpr::gen(Generator::odd_constant("epsb"))
}

/// Finite SUSY map `t -> t + i(eps thb - th epsb)`, `th -> th + eps`,
/// `thb -> thb + epsb` with odd parameters `eps`, `epsb`.
pub fn susy_map_n2(eps: &SuperExpr, epsb: &SuperExpr) -> CoordinateMap {
    let c = Chart::r1n2();
    let (t, th, thb) = (c.coord_expr(0), c.coord_expr(1), c.coord_expr(2));
    let shift = &SuperExpr::i() * &(eps * &thb - &th * epsb);
    CoordinateMap::new(c, vec![t + shift, th + eps.clone(), thb + epsb.clone()])
        .expect("parity-preserving")
}

/// Finite `N=1` SUSY map `t -> t + i eps th`, `th -> th + eps`.
pub fn susy_map_n1(eps: &SuperExpr) -> CoordinateMap {
    let c = Chart::r1n1();
    let (t, th) = (c.coord_expr(0), c.coord_expr(1));
    let shift = &SuperExpr::i() * &(eps * &th);
    CoordinateMap::new(c, vec![t + shift, th + eps.clone()]).expect("parity-preserving")
}

/// `eps Q + epsb Qb` on `r1n2`.
pub fn susy_vector_field(eps: &SuperExpr, epsb: &SuperExpr) -> VectorField {
    let f = SusyFields::for_chart(&Chart::r1n2()).expect("built-in chart");
    &f.q.scale_left(eps) + &f.qb.expect("r1n2 has Qb").scale_left(epsb)
}
