use std::collections::BTreeMap;
use std::sync::Arc;

use crate::calculus::chart::Chart;
use crate::calculus::forms::exterior_derivative;
use crate::error::{CalculusError, KernelError};
use crate::expr::SuperExpr;
use crate::generator::{GenKind, Generator};

/// A coordinate change `c -> c'(t, th, ...)`. Only coordinate images are
/// stored; images of differentials are always derived as `d(c')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateMap {
    chart: Arc<Chart>,
    images: Vec<SuperExpr>,
}

impl CoordinateMap {
    pub fn new(chart: Arc<Chart>, images: Vec<SuperExpr>) -> Result<Self, CalculusError> {
        assert_eq!(chart.dim(), images.len(), "one image per coordinate");
        for (i, img) in images.iter().enumerate() {
            if !img.has_parity(chart.parity(i)) {
                return Err(KernelError::ParityMismatch {
                    generator: chart.coordinate(i).to_string(),
                    expected: chart.parity(i),
                }
                .into());
            }
        }
        Ok(CoordinateMap { chart, images })
    }

    pub fn identity(chart: Arc<Chart>) -> Self {
        let images = (0..chart.dim()).map(|i| chart.coord_expr(i)).collect();
        CoordinateMap { chart, images }
    }

    /// Images for the named coordinates; the rest are left fixed.
    pub fn from_pairs(
        chart: Arc<Chart>,
        pairs: &[(&str, SuperExpr)],
    ) -> Result<Self, CalculusError> {
        let mut images: Vec<SuperExpr> = (0..chart.dim()).map(|i| chart.coord_expr(i)).collect();
        for (name, img) in pairs {
            let i = chart
                .index_of(name)
                .ok_or_else(|| CalculusError::UnknownCoordinate(name.to_string()))?;
            images[i] = img.clone();
        }
        CoordinateMap::new(chart, images)
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn images(&self) -> &[SuperExpr] {
        &self.images
    }

    /// Image of the differential of coordinate `i`:
    /// `dc' = sum_k dk * d c'/d k`.
    pub fn differential_image(&self, i: usize) -> SuperExpr {
        exterior_derivative(&self.chart, &self.images[i])
    }

    /// The map `self ∘ other`: first `other`, then `self`, so that
    /// `pullback(self ∘ other, w) = pullback(other, pullback(self, w))`.
    pub fn compose(&self, other: &CoordinateMap) -> Result<CoordinateMap, CalculusError> {
        let images = self
            .images
            .iter()
            .map(|img| other.pullback(img))
            .collect::<Result<Vec<_>, _>>()?;
        CoordinateMap::new(self.chart.clone(), images)
    }

    /// Pull back a form: coordinates go to their images and differentials
    /// to the differentials of the images. Function-of-t symbols are
    /// transported by their (terminating) Taylor series when `t` moves by a
    /// nilpotent shift.
    pub fn pullback(&self, omega: &SuperExpr) -> Result<SuperExpr, CalculusError> {
        let mut sigma: BTreeMap<Generator, SuperExpr> = BTreeMap::new();
        for i in 0..self.chart.dim() {
            sigma.insert(self.chart.coordinate(i), self.images[i].clone());
            sigma.insert(self.chart.differential(i), self.differential_image(i));
        }
        if let Some(ti) = self.chart.time_index() {
            let shift = &self.images[ti] - &self.chart.coord_expr(ti);
            let functions: Vec<Generator> = omega
                .generators()
                .into_iter()
                .filter(|g| matches!(g.kind(), GenKind::Function { .. }))
                .collect();
            if !shift.is_zero() && !functions.is_empty() {
                if !shift.body().is_zero() {
                    return Err(CalculusError::NonNilpotentTimeShift);
                }
                for f in functions {
                    sigma.insert(f.clone(), taylor(&f, &shift));
                }
            }
        }
        Ok(omega.substitute(&sigma)?)
    }
}

/// `f(t + n) = sum_j f^{(j)}(t) n^j / j!` for nilpotent `n`.
fn taylor(f: &Generator, shift: &SuperExpr) -> SuperExpr {
    let mut out = SuperExpr::zero();
    let mut power = SuperExpr::one();
    let mut derivative = f.clone();
    let mut factorial: i64 = 1;
    let mut j: i64 = 0;
    while !power.is_zero() {
        let term = &SuperExpr::gen(derivative.clone()) * &power;
        out += &term.scale(&crate::Coeff::ratio(1, factorial));
        j += 1;
        factorial *= j;
        power = &power * shift;
        derivative = derivative.time_derivative().expect("function symbol");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::susy::{alpha_std, susy_map_n2};
    use crate::generator::Parity;
    use crate::Coeff;

    #[test]
    fn susy_map_dt_image() {
        let c = Chart::r1n2();
        let eps = SuperExpr::gen(Generator::odd_constant("eps"));
        let epsb = SuperExpr::gen(Generator::odd_constant("epsb"));
        let m = susy_map_n2(&eps, &epsb);
        let i = SuperExpr::i();
        let expected = c.differential_expr(0)
            - &i * &epsb * c.differential_expr(1)
            - &i * &eps * c.differential_expr(2);
        assert_eq!(m.differential_image(0), expected);
        assert_eq!(m.pullback(&alpha_std()).unwrap(), alpha_std());
    }

    #[test]
    fn identity_pullback() {
        let c = Chart::r1n2();
        let id = CoordinateMap::identity(c);
        assert_eq!(id.pullback(&alpha_std()).unwrap(), alpha_std());
    }

    #[test]
    fn rejects_parity_mismatch() {
        let c = Chart::r1n2();
        let r = CoordinateMap::from_pairs(c, &[("th", SuperExpr::one())]);
        assert!(matches!(
            r,
            Err(CalculusError::Kernel(KernelError::ParityMismatch { .. }))
        ));
    }

    #[test]
    fn transports_functions_along_nilpotent_shift() {
        let c = Chart::r1n2();
        let eps = SuperExpr::gen(Generator::odd_constant("eps"));
        let th = c.coord_expr(1);
        let shift = &eps * &th;
        let m = CoordinateMap::from_pairs(c.clone(), &[("t", c.coord_expr(0) + shift.clone())])
            .unwrap();
        let q = Generator::function("q", Parity::Even, 0);
        let out = m.pullback(&SuperExpr::gen(q.clone())).unwrap();
        assert_eq!(
            out,
            SuperExpr::gen(q.clone()) + &SuperExpr::gen(q.time_derivative().unwrap()) * &shift
        );

        let dilation =
            CoordinateMap::from_pairs(c.clone(), &[("t", c.coord_expr(0).scale(&Coeff::int(2)))])
                .unwrap();
        assert_eq!(
            dilation.pullback(&SuperExpr::gen(q)),
            Err(CalculusError::NonNilpotentTimeShift)
        );
    }
}
