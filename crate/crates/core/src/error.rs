//! Error type for constraint violations and out-of-catalog points.

use thiserror::Error;

use crate::classifier::OutOfCatalogReason;

/// Failures surfaced by frame construction, constraint validation, and the
/// normal-form pipeline. Matrix indices in diagnostics are 1-based.
#[derive(Clone, Debug, PartialEq, Error)]
pub enum Error {
    #[error("momentum is not timelike: gamma(P,P) = {gamma:.6e}")]
    NotTimelike { gamma: f64 },

    #[error("momentum is not lightlike: gamma(P,P) = {gamma:.6e}")]
    NotLightlike { gamma: f64 },

    #[error(
        "matrix is not a Lorentz transformation: |(S^T G S - G)| at row {row}, col {col} \
         is {residual:.3e}, above tolerance"
    )]
    NotLorentz {
        row: usize,
        col: usize,
        residual: f64,
    },

    #[error(
        "matrix is not in the Lorentz algebra: |(M^T G + G M)| at row {row}, col {col} \
         is {residual:.3e}, above tolerance"
    )]
    NotSkewAdjoint {
        row: usize,
        col: usize,
        residual: f64,
    },

    #[error("point is outside the three-case catalog: {reason}")]
    OutOfCatalog { reason: OutOfCatalogReason },
}
