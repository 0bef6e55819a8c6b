//! Vector fields, graded commutators and the Cartan calculus
//! (`d`, `i_X`, `L_X`, pullback) on the antitangent bundle of a chart.

mod chart;
mod forms;
mod map;
pub mod susy;
mod vector_field;

pub use chart::{Chart, Coordinate};
pub use forms::{exterior_derivative, interior_product, lie_derivative};
pub use map::CoordinateMap;
pub use susy::SusyFields;
pub use vector_field::VectorField;
