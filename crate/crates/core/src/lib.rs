//! Exact symbolic engine for Grassmann-graded differential geometry on
//! the superspaces `R^{1|1}` and `R^{1|2}`.
//!
//! The layers, bottom up:
//!
//! * [`expr`]: canonical expressions in a free graded commutative algebra
//!   with exact Gaussian-rational coefficients.
//! * [`calculus`]: charts, vector fields, `d`, `i_X`, `L_X` and pullbacks.
//! * [`contact`]: kernels, nondegeneracy, Reeb and Hamiltonian vector
//!   fields of odd one-forms.
//! * [`lie`]: graded Lie presentations and Maurer-Cartan forms through the
//!   Hadamard series.
//! * [`components`]: superfield component expansions.
//! * [`parse`]: ASCII surface syntax and the canonical printer.
//! * [`verify`]: the fixed list of identity checks behind `verify paper`.

pub mod calculus;
pub mod coeff;
pub mod components;
pub mod contact;
pub mod error;
pub mod expr;
pub mod generator;
pub mod lie;
pub mod parse;
pub mod verify;

pub use calculus::{Chart, CoordinateMap, SusyFields, VectorField};
pub use coeff::Coeff;
pub use error::Error;
pub use expr::{canonicalize, ExprParity, RawExpr, SuperExpr, Term};
pub use generator::{GenKind, Generator, Parity};
