//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum CoreError {
    /// An argument is outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Sample vector and grid do not match, or two grids are incompatible.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// The grid is not exact for the requested band limit.
    #[error("grid exact up to band {have}, requested band {requested}")]
    BandExceeded { have: u32, requested: u32 },

    /// The operation is not implemented for this geometry.
    #[error("unsupported geometry: {0}")]
    UnsupportedGeometry(String),

    /// An `S³` input that must be a central function is not.
    #[error("input is not central: max fiber deviation {deviation:.3e} exceeds {tol:.3e}")]
    NotCentral { deviation: f64, tol: f64 },

    /// A certified series-truncation bound would be violated.
    #[error("truncation bound violated: {0}")]
    Truncation(String),

    /// A wavelet family does not match the object it is applied to.
    #[error("family mismatch: {0}")]
    FamilyMismatch(String),

    /// Serialization or file-format problem.
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;

impl CoreError {
    pub fn domain(msg: impl Into<String>) -> Self {
        CoreError::Domain(msg.into())
    }
}
