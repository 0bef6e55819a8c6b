use std::sync::Arc;

use serde::Serialize;

use crate::error::CalculusError;
use crate::expr::{SuperExpr, TIME};
use crate::generator::{GenKind, Generator, Parity};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Coordinate {
    pub name: String,
    pub parity: Parity,
}

/// A coordinate patch of a superspace together with the induced fibre
/// coordinates of its antitangent bundle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Chart {
    name: String,
    coordinates: Vec<Coordinate>,
}

impl Chart {
    pub fn new(name: &str, coordinates: Vec<Coordinate>) -> Result<Arc<Chart>, CalculusError> {
        for (i, c) in coordinates.iter().enumerate() {
            if coordinates[..i].iter().any(|d| d.name == c.name) {
                return Err(CalculusError::UnknownCoordinate(format!(
                    "duplicate coordinate {}",
                    c.name
                )));
            }
        }
        Ok(Arc::new(Chart {
            name: name.to_string(),
            coordinates,
        }))
    }

    /// `R^{1|1}` with coordinates `(t, th)`.
    pub fn r1n1() -> Arc<Chart> {
        Arc::new(Chart {
            name: "r1n1".into(),
            coordinates: vec![
                Coordinate {
                    name: "t".into(),
                    parity: Parity::Even,
                },
                Coordinate {
                    name: "th".into(),
                    parity: Parity::Odd,
                },
            ],
        })
    }

    /// `R^{1|2}` with coordinates `(t, th, thb)`.
    pub fn r1n2() -> Arc<Chart> {
        Arc::new(Chart {
            name: "r1n2".into(),
            coordinates: vec![
                Coordinate {
                    name: "t".into(),
                    parity: Parity::Even,
                },
                Coordinate {
                    name: "th".into(),
                    parity: Parity::Odd,
                },
                Coordinate {
                    name: "thb".into(),
                    parity: Parity::Odd,
                },
            ],
        })
    }

    pub fn builtin(name: &str) -> Result<Arc<Chart>, CalculusError> {
        match name {
            "r1n1" => Ok(Chart::r1n1()),
            "r1n2" => Ok(Chart::r1n2()),
            other => Err(CalculusError::UnknownChart(other.to_string())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coordinates(&self) -> &[Coordinate] {
        &self.coordinates
    }

    pub fn dim(&self) -> usize {
        self.coordinates.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.coordinates.iter().position(|c| c.name == name)
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.coordinates[i].parity
    }

    pub fn coordinate(&self, i: usize) -> Generator {
        let c = &self.coordinates[i];
        Generator::coordinate(&c.name, c.parity)
    }

    pub fn coord_expr(&self, i: usize) -> SuperExpr {
        SuperExpr::gen(self.coordinate(i))
    }

    pub fn differential(&self, i: usize) -> Generator {
        let c = &self.coordinates[i];
        Generator::differential(&c.name, c.parity)
    }

    pub fn differential_expr(&self, i: usize) -> SuperExpr {
        SuperExpr::gen(self.differential(i))
    }

    /// Formal `@c` symbol used when reading and printing vector fields.
    pub fn partial_marker(&self, i: usize) -> Generator {
        let c = &self.coordinates[i];
        Generator::marker(&format!("@{}", c.name), c.parity)
    }

    /// Index of the even coordinate `t`, if the chart has one.
    pub fn time_index(&self) -> Option<usize> {
        self.coordinates
            .iter()
            .position(|c| c.name == TIME && c.parity == Parity::Even)
    }

    /// Partial derivative along coordinate `i`. Along `t` this is the total
    /// time derivative, so function-of-t symbols are differentiated too.
    pub fn partial(&self, i: usize, f: &SuperExpr) -> SuperExpr {
        if Some(i) == self.time_index() {
            f.time_derivative()
        } else {
            f.left_partial(&self.coordinate(i))
        }
    }

    pub fn owns(&self, g: &Generator) -> bool {
        match g.kind() {
            GenKind::Coordinate(_) | GenKind::Differential(_) => self.index_of(g.name()).is_some(),
            _ => false,
        }
    }

    /// Generators that span the "frame" over the scalar ring: odd
    /// coordinates and all differentials of this chart.
    pub fn is_frame(&self, g: &Generator) -> bool {
        match g.kind() {
            GenKind::Coordinate(Parity::Odd) | GenKind::Differential(_) => {
                self.index_of(g.name()).is_some()
            }
            _ => false,
        }
    }

    pub fn odd_coordinates(&self) -> Vec<Generator> {
        (0..self.dim())
            .filter(|&i| self.parity(i).is_odd())
            .map(|i| self.coordinate(i))
            .collect()
    }

    /// All products of distinct odd coordinates, in canonical order,
    /// starting with `1`: `1, th, thb, th*thb` on `r1n2`.
    pub fn odd_monomials(&self) -> Vec<SuperExpr> {
        let odd = self.odd_coordinates();
        let n = odd.len();
        let mut subsets: Vec<Vec<Generator>> = (0..1usize << n)
            .map(|mask| {
                (0..n)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| odd[b].clone())
                    .collect()
            })
            .collect();
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        subsets.iter().map(|s| SuperExpr::product(s)).collect()
    }
}
