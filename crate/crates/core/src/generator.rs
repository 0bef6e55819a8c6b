//! Generators of the graded commutative algebra and their fixed total order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

/// Grassmann parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(n: usize) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^(self * other)` as a boolean "negate".
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// What a generator stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    /// A chart coordinate of the given parity.
    Coordinate(Parity),
    /// `d` of a coordinate; the payload is the coordinate's parity, the
    /// generator itself has the opposite one.
    Differential(Parity),
    /// An odd constant such as a supersymmetry parameter.
    OddConstant,
    /// An even constant parameter.
    Parameter,
    /// A formal function of `t` and its `order`-th time derivative.
    Function { parity: Parity, order: u32 },
    /// A formal symbol used only while reading or building linear
    /// objects: `@t`-style partials and Lie algebra basis elements.
    Marker(Parity),
}

/// A named generator. Ordering is the canonical one used for storing
/// odd factors:
///
/// 1. even coordinates
/// 2. even function-of-t symbols, by (name, derivative order)
/// 3. even differentials (of odd coordinates)
/// 4. even parameters
/// 5. odd coordinates
/// 6. odd differentials (of even coordinates, e.g. `dt`)
/// 7. odd constants
/// 8. odd function-of-t symbols, by (name, derivative order)
/// 9. markers
///
/// Ties inside a class are broken by name.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    name: Arc<str>,
    kind: GenKind,
}

impl Generator {
    pub fn new(name: &str, kind: GenKind) -> Self {
        Generator {
            name: Arc::from(name),
            kind,
        }
    }

    pub fn coordinate(name: &str, parity: Parity) -> Self {
        Generator::new(name, GenKind::Coordinate(parity))
    }

    pub fn differential(coordinate: &str, coordinate_parity: Parity) -> Self {
        Generator::new(coordinate, GenKind::Differential(coordinate_parity))
    }

    pub fn odd_constant(name: &str) -> Self {
        Generator::new(name, GenKind::OddConstant)
    }

    pub fn parameter(name: &str) -> Self {
        Generator::new(name, GenKind::Parameter)
    }

    pub fn function(name: &str, parity: Parity, order: u32) -> Self {
        Generator::new(name, GenKind::Function { parity, order })
    }

    pub fn marker(name: &str, parity: Parity) -> Self {
        Generator::new(name, GenKind::Marker(parity))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> GenKind {
        self.kind
    }

    pub fn parity(&self) -> Parity {
        match self.kind {
            GenKind::Coordinate(p) => p,
            GenKind::Differential(p) => p.flip(),
            GenKind::OddConstant => Parity::Odd,
            GenKind::Parameter => Parity::Even,
            GenKind::Function { parity, .. } => parity,
            GenKind::Marker(p) => p,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.parity().is_odd()
    }

    pub fn is_differential(&self) -> bool {
        matches!(self.kind, GenKind::Differential(_))
    }

    pub fn is_coordinate(&self) -> bool {
        matches!(self.kind, GenKind::Coordinate(_))
    }

    pub fn is_marker(&self) -> bool {
        matches!(self.kind, GenKind::Marker(_))
    }

    /// The same function symbol one time-derivative higher.
    pub fn time_derivative(&self) -> Option<Generator> {
        match self.kind {
            GenKind::Function { parity, order } => {
                Some(Generator::function(&self.name, parity, order + 1))
            }
            _ => None,
        }
    }

    fn class_rank(&self) -> u8 {
        match self.kind {
            GenKind::Coordinate(Parity::Even) => 0,
            GenKind::Function {
                parity: Parity::Even,
                ..
            } => 1,
            GenKind::Differential(Parity::Odd) => 2,
            GenKind::Parameter => 3,
            GenKind::Coordinate(Parity::Odd) => 4,
            GenKind::Differential(Parity::Even) => 5,
            GenKind::OddConstant => 6,
            GenKind::Function {
                parity: Parity::Odd,
                ..
            } => 7,
            GenKind::Marker(_) => 8,
        }
    }

    fn order(&self) -> u32 {
        match self.kind {
            GenKind::Function { order, .. } => order,
            _ => 0,
        }
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.class_rank()
            .cmp(&other.class_rank())
            .then_with(|| self.name.cmp(&other.name))
            .then_with(|| self.order().cmp(&other.order()))
            .then_with(|| self.parity().cmp(&other.parity()))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::Differential(_) => write!(f, "d{}", self.name),
            GenKind::Function { order, .. } => {
                write!(f, "{}", self.name)?;
                for _ in 0..order {
                    write!(f, "'")?;
                }
                write!(f, "(t)")
            }
            _ => write!(f, "{}", self.name),
        }
    }
}
