//! Exact finite-dimensional realization of algebra extensions with
//! additional module structure.
//!
//! An extension is represented by its operator algebra `B' ⊆ End(A)`. On top
//! of that the crate computes stable ideals, socles, nilpotent cores, Hopf
//! smash products and factorization structures, extended centroids, central
//! closures and the Martindale-type quotient evaluated at the socle.

pub mod algebra;
pub mod closure;
pub mod enumerate;
pub mod error;
pub mod extension;
pub mod field;
pub mod group;
pub mod hopf;
pub mod matrix;
pub mod ideals;
pub mod idempotents;
pub mod operators;
pub mod poly;
pub mod radical;
pub mod report;
pub mod smash;

pub use error::{Error, Result};
pub use extension::{Action, Extension, GeneratorMode};
pub use field::{Field, Scalar};
pub use algebra::Algebra;
pub use group::Group;
pub use hopf::HopfAlgebra;
pub use matrix::{Matrix, Subspace};
pub use operators::OperatorAlgebra;
pub use radical::{RadicalSolver, RadicalStrategy};
