//! Contact-geometric queries for odd one-forms: nonvanishing, kernel
//! distribution, nondegeneracy, Reeb and Hamiltonian vector fields, and
//! classification of contact vector fields.

mod hamiltonian;
pub mod solver;

use std::sync::Arc;

use serde::Serialize;

use crate::calculus::{exterior_derivative, interior_product, lie_derivative, Chart, VectorField};
use crate::error::ContactError;
use crate::expr::SuperExpr;
use crate::generator::Parity;

pub use hamiltonian::{hamiltonian_vf, hamiltonian_vf_closed_form};

/// A one-form `sum_c dc * a_c` on a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm {
    chart: Arc<Chart>,
    expr: SuperExpr,
}

impl OneForm {
    pub fn new(chart: Arc<Chart>, expr: SuperExpr) -> Result<Self, ContactError> {
        for (term, _) in expr.terms() {
            let mut count = 0u32;
            for (g, e) in term.even_factors() {
                if g.is_differential() {
                    count += e;
                }
            }
            count += term
                .odd_factors()
                .iter()
                .filter(|g| g.is_differential())
                .count() as u32;
            if count != 1
                || term
                    .generators()
                    .any(|g| g.is_differential() && !chart.owns(g))
            {
                return Err(ContactError::NotOneForm);
            }
        }
        Ok(OneForm { chart, expr })
    }

    /// The standard `r1n2` contact form `dt + i(th dthb + thb dth)`.
    pub fn standard_n2() -> Self {
        OneForm::new(Chart::r1n2(), crate::calculus::susy::alpha_std()).expect("one-form")
    }

    /// The `r1n1` contact form `dt + i th dth`.
    pub fn standard_n1() -> Self {
        OneForm::new(Chart::r1n1(), crate::calculus::susy::alpha_n1()).expect("one-form")
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn expr(&self) -> &SuperExpr {
        &self.expr
    }

    /// Coefficient `a_c = d/d(dc) alpha` so that `alpha = sum_c dc * a_c`.
    pub fn coefficient(&self, i: usize) -> SuperExpr {
        self.expr.left_partial(&self.chart.differential(i))
    }

    pub fn coefficients(&self) -> Vec<SuperExpr> {
        (0..self.chart.dim()).map(|i| self.coefficient(i)).collect()
    }

    pub fn d(&self) -> SuperExpr {
        exterior_derivative(&self.chart, &self.expr)
    }

    fn time_index(&self) -> Result<usize, ContactError> {
        self.chart
            .time_index()
            .ok_or(ContactError::NoTimeCoordinate)
    }
}

/// A distribution given by a basis of vector fields, with its corank as
/// `(even, odd)` relative to the chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    pub basis: Vec<VectorField>,
    pub corank: (usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContactKind {
    Strict,
    Contact,
    None,
}

/// What can be said about the body of a multiplier `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MultiplierBody {
    /// The body is a nonzero constant.
    NowhereVanishing,
    /// The body is nonzero but involves `t`, functions or parameters;
    /// nonvanishing holds if those never vanish.
    AssumedNonvanishing,
    /// The body is zero.
    Vanishing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactClassification {
    pub kind: ContactKind,
    pub multiplier: Option<SuperExpr>,
    pub body: Option<MultiplierBody>,
}

/// True iff some coefficient of `alpha` has a nonzero body.
pub fn is_nonvanishing(alpha: &OneForm) -> bool {
    alpha.coefficients().iter().any(|a| !a.body().is_zero())
}

/// Basis `d/dc - (a_c a_t^{-1}) d/dt` of `ker(alpha)`, one vector per
/// non-time coordinate.
pub fn kernel_basis(alpha: &OneForm) -> Result<Distribution, ContactError> {
    if !alpha.expr.has_parity(Parity::Odd) {
        return Err(ContactError::NotOdd);
    }
    let ti = alpha.time_index()?;
    let chart = alpha.chart.clone();
    let a_t_inv = alpha
        .coefficient(ti)
        .invert()
        .map_err(|_| ContactError::DtCoefficientNotInvertible)?;
    let mut basis = Vec::new();
    for c in (0..chart.dim()).filter(|&c| c != ti) {
        let shift = -(&alpha.coefficient(c) * &a_t_inv);
        let x = &VectorField::partial(chart.clone(), c)
            + &VectorField::partial(chart.clone(), ti).scale_left(&shift);
        if !interior_product(&x, &alpha.expr).is_zero() {
            return Err(ContactError::Internal(
                "kernel vector does not annihilate the form".into(),
            ));
        }
        basis.push(x);
    }
    let corank = match chart.parity(ti) {
        Parity::Even => (1, 0),
        Parity::Odd => (0, 1),
    };
    Ok(Distribution { basis, corank })
}

/// `M[j][k] = i_{X_j} i_{X_k} d(alpha)` over the basis of `dist`.
pub fn pairing_matrix(
    alpha: &OneForm,
    dist: &Distribution,
) -> Result<Vec<Vec<SuperExpr>>, ContactError> {
    let omega = alpha.d();
    let mut m = Vec::new();
    for xj in &dist.basis {
        let mut row = Vec::new();
        for xk in &dist.basis {
            let entry = interior_product(xj, &interior_product(xk, &omega));
            if !entry.has_parity(Parity::Even) {
                return Err(ContactError::PairingNotEven);
            }
            row.push(entry);
        }
        m.push(row);
    }
    Ok(m)
}

/// Determinant of a square matrix with pairwise commuting entries.
pub fn determinant(m: &[Vec<SuperExpr>]) -> SuperExpr {
    match m.len() {
        0 => SuperExpr::one(),
        1 => m[0][0].clone(),
        n => {
            let mut out = SuperExpr::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<SuperExpr>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != col)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &determinant(&minor);
                out = if col % 2 == 0 { out + term } else { out - term };
            }
            out
        }
    }
}

/// Nondegeneracy of `d(alpha)` on `dist`: the body of the pairing
/// determinant is nonzero.
pub fn nondegenerate_on(alpha: &OneForm, dist: &Distribution) -> Result<bool, ContactError> {
    let m = pairing_matrix(alpha, dist)?;
    Ok(!determinant(&m).body().is_zero())
}

/// The unique even `P` with `i_P alpha = 1` and `i_P d(alpha) = 0`.
pub fn reeb(alpha: &OneForm) -> Result<VectorField, ContactError> {
    let p = solver::solve_even_field(
        &alpha.chart,
        &[alpha.expr.clone(), alpha.d()],
        &[SuperExpr::one(), SuperExpr::zero()],
    )?;
    if interior_product(&p, &alpha.expr) != SuperExpr::one()
        || !interior_product(&p, &alpha.d()).is_zero()
    {
        return Err(ContactError::Internal("Reeb conditions not met".into()));
    }
    Ok(p)
}

/// Classify `X` by `L_X alpha`: zero, a multiple `f alpha`, or neither.
pub fn classify_contact_vf(x: &VectorField, alpha: &OneForm) -> ContactClassification {
    let lie = lie_derivative(x, &alpha.expr);
    if lie.is_zero() {
        return ContactClassification {
            kind: ContactKind::Strict,
            multiplier: None,
            body: None,
        };
    }
    match solver::solve_multiplier(&alpha.chart, &alpha.expr, &lie) {
        Ok(f) => {
            let body = f.body();
            let status = if body.is_zero() {
                MultiplierBody::Vanishing
            } else if body.as_constant().is_some() {
                MultiplierBody::NowhereVanishing
            } else {
                MultiplierBody::AssumedNonvanishing
            };
            ContactClassification {
                kind: ContactKind::Contact,
                multiplier: Some(f),
                body: Some(status),
            }
        }
        Err(_) => ContactClassification {
            kind: ContactKind::None,
            multiplier: None,
            body: None,
        },
    }
}

/// The increments `delta c = X[c]` for every coordinate.
pub fn infinitesimal_transformations(x: &VectorField) -> Vec<(String, SuperExpr)> {
    let chart = x.chart();
    (0..chart.dim())
        .map(|i| {
            (
                chart.coordinates()[i].name.clone(),
                x.apply(&chart.coord_expr(i)),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::SusyFields;
    use crate::Coeff;

    #[test]
    fn nonvanishing() {
        assert!(is_nonvanishing(&OneForm::standard_n2()));
        assert!(is_nonvanishing(&OneForm::standard_n1()));
        let c = Chart::r1n2();
        let f = OneForm::new(c.clone(), &c.coord_expr(2) * &c.differential_expr(1)).unwrap();
        assert!(!is_nonvanishing(&f));
    }

    #[test]
    fn rejects_non_one_forms() {
        let c = Chart::r1n2();
        let two = &c.differential_expr(1) * &c.differential_expr(2);
        assert_eq!(OneForm::new(c.clone(), two), Err(ContactError::NotOneForm));
        assert_eq!(
            OneForm::new(c.clone(), c.coord_expr(0)),
            Err(ContactError::NotOneForm)
        );
    }

    #[test]
    fn kernel_examples() {
        let c = Chart::r1n2();
        let f = SusyFields::for_chart(&c).unwrap();
        let k = kernel_basis(&OneForm::standard_n2()).unwrap();
        assert_eq!(k.basis, vec![f.d.clone(), f.db.clone().unwrap()]);
        assert_eq!(k.corank, (1, 0));

        let f1 = SusyFields::for_chart(&Chart::r1n1()).unwrap();
        assert_eq!(
            kernel_basis(&OneForm::standard_n1()).unwrap().basis,
            vec![f1.d]
        );

        let dt = OneForm::new(c.clone(), c.differential_expr(0)).unwrap();
        assert_eq!(
            kernel_basis(&dt).unwrap().basis,
            vec![
                VectorField::partial(c.clone(), 1),
                VectorField::partial(c.clone(), 2)
            ]
        );
        let bad = OneForm::new(c.clone(), &c.coord_expr(1) * &c.differential_expr(1)).unwrap();
        assert_eq!(
            kernel_basis(&bad),
            Err(ContactError::DtCoefficientNotInvertible)
        );
    }

    #[test]
    fn nondegeneracy_examples() {
        for alpha in [OneForm::standard_n2(), OneForm::standard_n1()] {
            let k = kernel_basis(&alpha).unwrap();
            assert!(nondegenerate_on(&alpha, &k).unwrap());
        }
        let c = Chart::r1n2();
        let dt = OneForm::new(c.clone(), c.differential_expr(0)).unwrap();
        let k = kernel_basis(&dt).unwrap();
        assert!(!nondegenerate_on(&dt, &k).unwrap());
    }

    #[test]
    fn n1_intermediate_contraction() {
        let alpha = OneForm::standard_n1();
        let c = alpha.chart().clone();
        let da = alpha.d();
        assert_eq!(
            da,
            SuperExpr::i() * (&c.differential_expr(1) * &c.differential_expr(1))
        );
        let k = kernel_basis(&alpha).unwrap();
        let m2i = SuperExpr::constant(Coeff::gaussian(0, -2));
        assert_eq!(
            interior_product(&k.basis[0], &da),
            &m2i * &c.differential_expr(1)
        );
    }

    #[test]
    fn reeb_examples() {
        let p2 = reeb(&OneForm::standard_n2()).unwrap();
        assert_eq!(p2, VectorField::partial(Chart::r1n2(), 0));
        assert_eq!(
            reeb(&OneForm::standard_n1()).unwrap(),
            VectorField::partial(Chart::r1n1(), 0)
        );
        let doubled = OneForm::new(
            Chart::r1n2(),
            crate::calculus::susy::alpha_std().scale(&Coeff::int(2)),
        )
        .unwrap();
        let p = reeb(&doubled).unwrap();
        assert_eq!(
            p,
            VectorField::partial(Chart::r1n2(), 0)
                .scale_left(&SuperExpr::constant(Coeff::ratio(1, 2)))
        );
    }

    #[test]
    fn reeb_needs_contact_form() {
        let c = Chart::r1n2();
        let dt = OneForm::new(c.clone(), c.differential_expr(0)).unwrap();
        assert_eq!(reeb(&dt), Err(ContactError::NotUnique));
    }

    #[test]
    fn classification() {
        let c = Chart::r1n2();
        let f = SusyFields::for_chart(&c).unwrap();
        let alpha = OneForm::standard_n2();
        assert_eq!(classify_contact_vf(&f.q, &alpha).kind, ContactKind::Strict);
        assert_eq!(
            classify_contact_vf(&VectorField::partial(c.clone(), 1), &alpha).kind,
            ContactKind::None
        );
        // t d/dt: L alpha = dt, which is not a multiple of alpha
        let scaling = VectorField::partial(c.clone(), 0).scale_left(&c.coord_expr(0));
        assert_eq!(
            classify_contact_vf(&scaling, &alpha).kind,
            ContactKind::None
        );
    }
}
