//! Evaluation of terms in finite-dimensional linear models.

mod linear;
mod matrix;
mod report;
mod scalar;

pub use linear::{generator_two_cells, swap_matrix, LinearModel, Witness};
pub use matrix::Matrix;
pub use report::{verify_all, verify_catalog, verify_model, Report, ReportEntry, Summary};
pub use scalar::Scalar;

/// Model over exact rationals.
pub type ExactModel = LinearModel<num::BigRational>;
/// Model over floating point numbers, compared with a tolerance.
pub type FloatModel = LinearModel<f64>;
