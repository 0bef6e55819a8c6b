use thiserror::Error;

use crate::generator::Parity;

/// Errors from the graded algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("body not a nonzero constant")]
    BodyNotInvertible,
    #[error("parity mismatch in substitution for {generator}: expected {expected}")]
    ParityMismatch { generator: String, expected: Parity },
}

/// Errors from vector fields and Cartan calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalculusError {
    #[error("inhomogeneous argument")]
    Inhomogeneous,
    #[error("unknown chart: {0}")]
    UnknownChart(String),
    #[error("chart mismatch: {0} vs {1}")]
    ChartMismatch(String, String),
    #[error("unknown coordinate: {0}")]
    UnknownCoordinate(String),
    #[error(
        "time coordinate moved by a non-nilpotent shift; cannot transport function-of-t symbols"
    )]
    NonNilpotentTimeShift,
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// Errors from contact-geometric queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContactError {
    #[error("not a one-form: every term must contain exactly one differential")]
    NotOneForm,
    #[error("one-form is not odd")]
    NotOdd,
    #[error("chart has no time coordinate t")]
    NoTimeCoordinate,
    #[error("dt-coefficient not invertible")]
    DtCoefficientNotInvertible,
    #[error("pairing matrix not even")]
    PairingNotEven,
    #[error("no solution")]
    NoSolution,
    #[error("solution not unique")]
    NotUnique,
    #[error("no pivot with constant nonzero body; system undecided")]
    NoConstantPivot,
    #[error("odd superfield rejected: odd superfields cannot generate contact Hamiltonian vector fields")]
    OddSuperfield,
    #[error("form is not contact: {0}")]
    NotContact(String),
    #[error("not in component form: {0}")]
    NotComponentForm(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
}

impl From<KernelError> for ContactError {
    fn from(e: KernelError) -> Self {
        ContactError::Calculus(CalculusError::Kernel(e))
    }
}

/// Errors from Lie presentations and the Maurer-Cartan series.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("unknown basis symbol: {0}")]
    UnknownBasis(String),
    #[error("duplicate basis symbol: {0}")]
    DuplicateBasis(String),
    #[error("bracket [{0},{1}] violates parity")]
    BracketParity(String, String),
    #[error("graded antisymmetry violated for [{0},{1}]")]
    Antisymmetry(String, String),
    #[error("graded Jacobi identity violated for ({0},{1},{2})")]
    Jacobi(String, String, String),
    #[error("exponent is not even")]
    ExponentNotEven,
    #[error("series did not terminate by order cap {0}")]
    NoTermination(usize),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
}

/// Errors from superfield component handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComponentsError {
    #[error("contains differentials")]
    ContainsDifferentials,
    #[error("variation not expressible in multiplet shape: {0}")]
    NotMultipletShape(String),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
}

/// Parse errors carry a 1-based line/column and the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {line}:{col} near '{token}': {message}")]
    Syntax {
        line: usize,
        col: usize,
        token: String,
        message: String,
    },
    #[error("unknown identifier '{name}' at {line}:{col}")]
    UnknownIdentifier {
        name: String,
        line: usize,
        col: usize,
    },
    #[error("cannot infer parity of '{name}' at {line}:{col}; declare it with fn even/odd")]
    ParityInference {
        name: String,
        line: usize,
        col: usize,
    },
    #[error("{0}")]
    Semantic(String),
}

/// Umbrella error for front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error(transparent)]
    Contact(#[from] ContactError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Components(#[from] ComponentsError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
