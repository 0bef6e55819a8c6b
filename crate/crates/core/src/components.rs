//! Superfields on `r1n2` and their time-component functions.
//!
//! Components are read off against the shape
//! `f0 + th*f1 + f2*thb + th*thb*f3`, with every `f` free of `th`, `thb`.

use crate::calculus::{Chart, VectorField};
use crate::error::ComponentsError;
use crate::expr::{SuperExpr, Term};
use crate::generator::{Generator, Parity};

/// Coefficients of `1, th, thb, th*thb` in the shape above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub f0: SuperExpr,
    pub f1: SuperExpr,
    pub f2: SuperExpr,
    pub f3: SuperExpr,
}

impl Components {
    pub fn assemble(&self) -> SuperExpr {
        let c = Chart::r1n2();
        let (th, thb) = (c.coord_expr(1), c.coord_expr(2));
        &self.f0 + &(&th * &self.f1) + &self.f2 * &thb + &(&th * &thb) * &self.f3
    }
}

/// The (1,2,1) multiplet `q + i th psi + i psib thb + i th thb b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Supermultiplet121 {
    pub q: SuperExpr,
    pub psi: SuperExpr,
    pub psib: SuperExpr,
    pub b: SuperExpr,
}

/// Variations of the four multiplet fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipletVariation {
    pub dq: SuperExpr,
    pub dpsi: SuperExpr,
    pub dpsib: SuperExpr,
    pub db: SuperExpr,
}

impl Supermultiplet121 {
    /// Function-of-t symbols with the given names; `q`, `b` even and
    /// `psi`, `psib` odd.
    pub fn from_symbols(q: &str, psi: &str, psib: &str, b: &str) -> Self {
        let f = |n: &str, p| SuperExpr::gen(Generator::function(n, p, 0));
        Supermultiplet121 {
            q: f(q, Parity::Even),
            psi: f(psi, Parity::Odd),
            psib: f(psib, Parity::Odd),
            b: f(b, Parity::Even),
        }
    }

    pub fn standard() -> Self {
        Self::from_symbols("q", "psi", "psib", "b")
    }
}

pub fn expand_superfield(m: &Supermultiplet121) -> SuperExpr {
    let i = SuperExpr::i();
    Components {
        f0: m.q.clone(),
        f1: &i * &m.psi,
        f2: &i * &m.psib,
        f3: &i * &m.b,
    }
    .assemble()
}

/// Inverse of [`Components::assemble`].
pub fn collect_components(phi: &SuperExpr) -> Result<Components, ComponentsError> {
    if phi.contains_differentials() {
        return Err(ComponentsError::ContainsDifferentials);
    }
    let chart = Chart::r1n2();
    let (th, thb) = (chart.coordinate(1), chart.coordinate(2));
    let parts = phi.split_frame(|g| chart.is_frame(g));
    let get = |odd: Vec<Generator>| {
        parts
            .iter()
            .find(|(t, _)| t.odd_factors() == odd.as_slice() && t.even_factors().is_empty())
            .map(|(_, s)| s.clone())
            .unwrap_or_default()
    };
    if parts.keys().any(|t: &Term| !t.even_factors().is_empty()) {
        return Err(ComponentsError::NotMultipletShape(
            "unexpected frame term".into(),
        ));
    }
    Ok(Components {
        f0: get(vec![]),
        // g th = th twist(g)
        f1: get(vec![th.clone()]).parity_twist(),
        f2: get(vec![thb.clone()]),
        f3: get(vec![th, thb]),
    })
}

/// Component variations under an even vector field `x`, stripped of the
/// `i` factors of [`expand_superfield`].
pub fn delta_components(
    x: &VectorField,
    m: &Supermultiplet121,
) -> Result<MultipletVariation, ComponentsError> {
    if !x.parity().homogeneous().is_some_and(|p| p == Parity::Even) {
        return Err(ComponentsError::NotMultipletShape(
            "vector field is not even".into(),
        ));
    }
    let c = collect_components(&x.apply(&expand_superfield(m)))?;
    let minus_i = -SuperExpr::i();
    let out = MultipletVariation {
        dq: c.f0,
        dpsi: &minus_i * &c.f1,
        dpsib: &minus_i * &c.f2,
        db: &minus_i * &c.f3,
    };
    let shape = [
        ("q", &out.dq, Parity::Even),
        ("psi", &out.dpsi, Parity::Odd),
        ("psib", &out.dpsib, Parity::Odd),
        ("b", &out.db, Parity::Even),
    ];
    for (name, e, p) in shape {
        if !e.has_parity(p) {
            return Err(ComponentsError::NotMultipletShape(format!(
                "variation of {name} has wrong parity"
            )));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::susy::{eps, epsb, susy_vector_field};
    use crate::calculus::SusyFields;

    fn fun(n: &str, p: Parity, k: u32) -> SuperExpr {
        SuperExpr::gen(Generator::function(n, p, k))
    }

    #[test]
    fn roundtrip() {
        let m = Supermultiplet121::standard();
        let c = collect_components(&expand_superfield(&m)).unwrap();
        let i = SuperExpr::i();
        assert_eq!(c.f0, m.q);
        assert_eq!(c.f1, &i * &m.psi);
        assert_eq!(c.f2, &i * &m.psib);
        assert_eq!(c.f3, &i * &m.b);
    }

    #[test]
    fn th_thb() {
        let ch = Chart::r1n2();
        let c = collect_components(&(&ch.coord_expr(1) * &ch.coord_expr(2))).unwrap();
        assert!(c.f0.is_zero() && c.f1.is_zero() && c.f2.is_zero());
        assert_eq!(c.f3, SuperExpr::one());
        assert_eq!(
            collect_components(&ch.differential_expr(0)),
            Err(ComponentsError::ContainsDifferentials)
        );
    }

    #[test]
    fn susy_table() {
        let m = Supermultiplet121::standard();
        let v = delta_components(&susy_vector_field(&eps(), &epsb()), &m).unwrap();
        let i = SuperExpr::i();
        let qd = fun("q", Parity::Even, 1);
        assert_eq!(v.dq, &i * &(&eps() * &m.psi) + &i * &(&m.psib * &epsb()));
        assert_eq!(v.dpsi, &(&m.b - &qd) * &epsb());
        assert_eq!(v.dpsib, &eps() * &(&m.b + &qd));
        let psid = fun("psi", Parity::Odd, 1);
        let psibd = fun("psib", Parity::Odd, 1);
        assert_eq!(v.db, &i * &(&psibd * &epsb()) - &i * &(&eps() * &psid));
    }

    #[test]
    fn time_translation() {
        let ch = Chart::r1n2();
        let f = SusyFields::for_chart(&ch).unwrap();
        let v = delta_components(&f.p, &Supermultiplet121::standard()).unwrap();
        assert_eq!(v.dq, fun("q", Parity::Even, 1));
        assert_eq!(v.dpsi, fun("psi", Parity::Odd, 1));
        assert_eq!(v.db, fun("b", Parity::Even, 1));
    }

    #[test]
    fn odd_field_rejected() {
        let f = SusyFields::for_chart(&Chart::r1n2()).unwrap();
        assert!(matches!(
            delta_components(&f.q, &Supermultiplet121::standard()),
            Err(ComponentsError::NotMultipletShape(_))
        ));
    }
}
