//! Central-function Fourier analysis on the group S³.
//!
//! Central functions depend on the scalar part only and expand in the
//! characters χ_n(x) = C_n^1(Sc x); the Fourier coefficient at t_n is the
//! scalar matrix c_n·I with c_n = (1/d_n) ∫ φ χ_n dμ. The transform of
//! non-central functions (full Wigner-matrix coefficients on S³) is out of
//! scope.

use super::coeffs::SpectralCoefficients;
use super::rep::Geometry;
use crate::error::{CoreError, Result};
use crate::grids::{QuadratureGrid, Sphere3Grid};
use crate::specfun::gegenbauer;
use crate::Complex64;
use nalgebra::DMatrix;

/// Maximum fiber deviation tolerated by the centrality check: conjugation
/// acts transitively on each x₀ slice of the product grid, so a central
/// function must be constant along every slice.
pub const CENTRALITY_TOL: f64 = 1e-8;

/// Forward transform of a central function sampled on the product grid.
pub fn s3_central_forward(
    grid: &Sphere3Grid,
    samples: &[Complex64],
    bandlimit: u32,
) -> Result<SpectralCoefficients> {
    if samples.len() != grid.len() {
        return Err(CoreError::GridMismatch(format!(
            "{} samples on a {}-point grid",
            samples.len(),
            grid.len()
        )));
    }
    if grid.exact_band() < 2 * bandlimit {
        return Err(CoreError::BandExceeded {
            have: grid.exact_band(),
            requested: 2 * bandlimit,
        });
    }
    // Centrality: constant on each x₀ slice.
    let fiber = grid.fiber_len();
    let mut deviation: f64 = 0.0;
    for slice in samples.chunks(fiber) {
        let first = slice[0];
        for v in slice {
            deviation = deviation.max((v - first).norm());
        }
    }
    if deviation > CENTRALITY_TOL {
        return Err(CoreError::NotCentral { deviation, tol: CENTRALITY_TOL });
    }

    let mut out = SpectralCoefficients::new(Geometry::S3Group, bandlimit);
    for n in 0..=bandlimit {
        let d = n as usize + 1;
        let mut acc = Complex64::default();
        for ((q, &w), f) in grid.nodes().iter().zip(grid.weights()).zip(samples) {
            acc += w * f * gegenbauer(1.0, n, q.scalar_part())?;
        }
        let c = acc / Complex64::new(d as f64, 0.0);
        out.set(n as i64, DMatrix::from_diagonal_element(d, d, c))?;
    }
    Ok(out)
}

/// Synthesis of a central coefficient set on the grid.
pub fn s3_central_backward(
    coeffs: &SpectralCoefficients,
    grid: &Sphere3Grid,
) -> Result<Vec<Complex64>> {
    grid.nodes()
        .iter()
        .map(|q| s3_central_eval(coeffs, q.scalar_part()))
        .collect()
}

/// Pointwise synthesis at scalar part x₀:
/// φ(x) = Σ_n d_n c_n C_n^1(x₀). Requires every stored coefficient to be a
/// scalar multiple of the identity.
pub fn s3_central_eval(coeffs: &SpectralCoefficients, x0: f64) -> Result<Complex64> {
    if coeffs.geometry() != Geometry::S3Group {
        return Err(CoreError::UnsupportedGeometry(format!(
            "s3_central_eval on {} coefficients",
            coeffs.geometry()
        )));
    }
    let mut acc = Complex64::default();
    for (n, _) in coeffs.iter() {
        let rep = coeffs.rep(*n);
        let c = coeffs.scalar_entry(*n, 1e-10)?;
        acc += c * rep.dim as f64 * gegenbauer(1.0, *n as u32, x0)?;
    }
    Ok(acc)
}
