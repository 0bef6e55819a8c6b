use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::calculus::chart::Chart;
use crate::error::CalculusError;
use crate::expr::{ExprParity, SuperExpr};
use crate::generator::Parity;

/// `X = sum_c X_c d/dc`, coefficients to the left of the derivative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    chart: Arc<Chart>,
    components: Vec<SuperExpr>,
}

impl VectorField {
    pub fn new(chart: Arc<Chart>, components: Vec<SuperExpr>) -> Self {
        assert_eq!(
            chart.dim(),
            components.len(),
            "one component per coordinate"
        );
        VectorField { chart, components }
    }

    pub fn zero(chart: Arc<Chart>) -> Self {
        let n = chart.dim();
        VectorField::new(chart, vec![SuperExpr::zero(); n])
    }

    /// The coordinate vector field `d/dc_i`.
    pub fn partial(chart: Arc<Chart>, i: usize) -> Self {
        let mut v = VectorField::zero(chart);
        v.components[i] = SuperExpr::one();
        v
    }

    /// Build from `(coordinate name, component)` pairs; missing ones are zero.
    pub fn from_pairs(
        chart: Arc<Chart>,
        pairs: &[(&str, SuperExpr)],
    ) -> Result<Self, CalculusError> {
        let mut v = VectorField::zero(chart);
        for (name, comp) in pairs {
            let i = v
                .chart
                .index_of(name)
                .ok_or_else(|| CalculusError::UnknownCoordinate(name.to_string()))?;
            v.components[i] = &v.components[i] + comp;
        }
        Ok(v)
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn components(&self) -> &[SuperExpr] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &SuperExpr {
        &self.components[i]
    }

    pub fn component_named(&self, name: &str) -> Option<&SuperExpr> {
        self.chart.index_of(name).map(|i| &self.components[i])
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(SuperExpr::is_zero)
    }

    /// Parity of the field: component parity plus coordinate parity must
    /// agree across all nonzero terms. The zero field reports even.
    pub fn parity(&self) -> ExprParity {
        let mut seen: Option<Parity> = None;
        for (i, comp) in self.components.iter().enumerate() {
            for (t, _) in comp.terms() {
                let p = t.parity() + self.chart.parity(i);
                match seen {
                    None => seen = Some(p),
                    Some(q) if q != p => return ExprParity::Mixed,
                    _ => {}
                }
            }
        }
        match seen.unwrap_or(Parity::Even) {
            Parity::Even => ExprParity::Even,
            Parity::Odd => ExprParity::Odd,
        }
    }

    pub fn homogeneous_parity(&self) -> Result<Parity, CalculusError> {
        self.parity()
            .homogeneous()
            .ok_or(CalculusError::Inhomogeneous)
    }

    /// The part of the field of total parity `p`.
    pub fn part(&self, p: Parity) -> VectorField {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| c.part(p + self.chart.parity(i)))
            .collect();
        VectorField::new(self.chart.clone(), components)
    }

    /// Even and odd parts, skipping zero ones.
    pub fn homogeneous_parts(&self) -> Vec<(Parity, VectorField)> {
        [Parity::Even, Parity::Odd]
            .into_iter()
            .map(|p| (p, self.part(p)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// `s * X`, scaling every component from the left.
    pub fn scale_left(&self, s: &SuperExpr) -> VectorField {
        VectorField::new(
            self.chart.clone(),
            self.components.iter().map(|c| s * c).collect(),
        )
    }

    /// `X[f] = sum_c X_c * (d f / d c)`.
    pub fn apply(&self, f: &SuperExpr) -> SuperExpr {
        let mut out = SuperExpr::zero();
        for (i, comp) in self.components.iter().enumerate() {
            if comp.is_zero() {
                continue;
            }
            let df = self.chart.partial(i, f);
            if !df.is_zero() {
                out += &(comp * &df);
            }
        }
        out
    }

    /// Graded commutator `[X,Y] = X∘Y - (-1)^{|X||Y|} Y∘X`, read off on
    /// the coordinates.
    pub fn graded_commutator(&self, other: &VectorField) -> Result<VectorField, CalculusError> {
        if self.chart != other.chart {
            return Err(CalculusError::ChartMismatch(
                self.chart.name().into(),
                other.chart.name().into(),
            ));
        }
        let px = self.homogeneous_parity()?;
        let py = other.homogeneous_parity()?;
        let components = (0..self.chart.dim())
            .map(|i| {
                let xy = self.apply(other.component(i));
                let yx = other.apply(self.component(i));
                if px.koszul(py) {
                    xy + yx
                } else {
                    xy - yx
                }
            })
            .collect();
        Ok(VectorField::new(self.chart.clone(), components))
    }

    fn zip(
        &self,
        other: &VectorField,
        f: impl Fn(&SuperExpr, &SuperExpr) -> SuperExpr,
    ) -> VectorField {
        assert_eq!(self.chart, other.chart, "vector fields on different charts");
        VectorField::new(
            self.chart.clone(),
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| f(a, b))
                .collect(),
        )
    }
}

impl Add for &VectorField {
    type Output = VectorField;
    fn add(self, rhs: &VectorField) -> VectorField {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &VectorField {
    type Output = VectorField;
    fn sub(self, rhs: &VectorField) -> VectorField {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for &VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        VectorField::new(
            self.chart.clone(),
            self.components.iter().map(|c| -c).collect(),
        )
    }
}
