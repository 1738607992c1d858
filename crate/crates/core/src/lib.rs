//! Finite orthomodular lattices and their type decompositions.

pub mod central;
pub mod classes;
pub mod decomposition;
pub mod equivalence;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod td;

pub use error::{Error, Result};
pub use lattice::{Elem, Oml, ProjectionSet};

/// Exact scalar of the matrix model.
pub type Rational = num_rational::BigRational;
pub type ExactElement = matrix::SaElement<Rational>;
pub type FloatElement = matrix::SaElement<f64>;
