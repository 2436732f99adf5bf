//! Fourier analysis on the torus.

use super::coeffs::SpectralCoefficients;
use super::rep::Geometry;
use crate::error::{CoreError, Result};
use crate::grids::{QuadratureGrid, TorusGrid};
use crate::Complex64;
use nalgebra::DMatrix;
use std::f64::consts::PI;

/// Forward transform φ̂(k) = ∫ φ(θ) e^{-2πikθ} dθ for |k| ≤ bandlimit.
pub fn torus_forward(
    grid: &TorusGrid,
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
    let mut out = SpectralCoefficients::new(Geometry::Torus, bandlimit);
    for k in -(bandlimit as i64)..=bandlimit as i64 {
        let mut acc = Complex64::default();
        for ((p, &w), f) in grid.nodes().iter().zip(grid.weights()).zip(samples) {
            acc += w * f * Complex64::from_polar(1.0, -2.0 * PI * k as f64 * p.theta());
        }
        out.set(k, DMatrix::from_element(1, 1, acc))?;
    }
    Ok(out)
}

/// Synthesis on the grid: φ(θ) = Σ_k φ̂(k) e^{2πikθ}.
pub fn torus_backward(coeffs: &SpectralCoefficients, grid: &TorusGrid) -> Result<Vec<Complex64>> {
    if coeffs.geometry() != Geometry::Torus {
        return Err(CoreError::UnsupportedGeometry(format!(
            "torus_backward on {} coefficients",
            coeffs.geometry()
        )));
    }
    Ok(grid
        .nodes()
        .iter()
        .map(|p| torus_eval(coeffs, p.theta()))
        .collect())
}

/// Pointwise synthesis at an arbitrary θ.
pub fn torus_eval(coeffs: &SpectralCoefficients, theta: f64) -> Complex64 {
    coeffs
        .iter()
        .map(|(k, m)| m[(0, 0)] * Complex64::from_polar(1.0, 2.0 * PI * *k as f64 * theta))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::torus_lambda_sq;
    use crate::grids::torus_grid;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn exp_samples(grid: &TorusGrid, k: i64) -> Vec<Complex64> {
        grid.nodes()
            .iter()
            .map(|p| Complex64::from_polar(1.0, 2.0 * PI * k as f64 * p.theta()))
            .collect()
    }

    #[test]
    fn unit_frequency() {
        let grid = torus_grid(16).unwrap();
        let coeffs = torus_forward(&grid, &exp_samples(&grid, 1), 4).unwrap();
        for k in -4i64..=4 {
            let want = if k == 1 { 1.0 } else { 0.0 };
            assert!((coeffs.entry_or_zero(k)[(0, 0)].re - want).abs() < 1e-13, "k={k}");
            assert!(coeffs.entry_or_zero(k)[(0, 0)].im.abs() < 1e-13);
        }
    }

    #[test]
    fn band_guard() {
        let grid = torus_grid(8).unwrap();
        assert!(torus_forward(&grid, &exp_samples(&grid, 0), 4).is_err());
        assert!(torus_forward(&grid, &exp_samples(&grid, 0), 3).is_ok());
    }

    #[test]
    fn heat_kernel_coefficients() {
        // p_t has coefficients e^{-4π²k²t}
        use crate::specfun::theta3;
        let t = 0.02;
        let band = 8u32;
        let grid = torus_grid(64).unwrap();
        let q = (-4.0 * PI * PI * t).exp();
        let samples: Vec<Complex64> = grid
            .nodes()
            .iter()
            .map(|p| Complex64::new(theta3(PI * p.theta(), q, 1e-15).unwrap(), 0.0))
            .collect();
        let coeffs = torus_forward(&grid, &samples, band).unwrap();
        for k in -(band as i64)..=band as i64 {
            let want = (-torus_lambda_sq(k) * t).exp();
            let got = coeffs.entry_or_zero(k)[(0, 0)];
            assert!((got.re - want).abs() < 1e-12, "k={k}: {got} vs {want}");
            assert!(got.im.abs() < 1e-12);
        }
    }

    #[test]
    fn roundtrip_and_parseval() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let band = 16u32;
        let grid = torus_grid(2 * band as usize + 1).unwrap();
        let mut reference = SpectralCoefficients::new(Geometry::Torus, band);
        for k in -(band as i64)..=band as i64 {
            let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            reference.set(k, DMatrix::from_element(1, 1, c)).unwrap();
        }
        let samples = torus_backward(&reference, &grid).unwrap();
        let coeffs = torus_forward(&grid, &samples, band).unwrap();
        assert!(coeffs.max_deviation(&reference) < 1e-10);

        // Parseval: grid norm equals Σ d ‖φ̂‖²
        let grid_norm: f64 = grid
            .weights()
            .iter()
            .zip(&samples)
            .map(|(w, f)| w * f.norm_sqr())
            .sum();
        assert!((grid_norm - reference.parseval_norm_sq()).abs() < 1e-9 * grid_norm);
    }

    #[test]
    fn involution_on_samples_matches_adjoint_coefficients() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let band = 6u32;
        let grid = torus_grid(2 * band as usize + 1).unwrap();
        let mut reference = SpectralCoefficients::new(Geometry::Torus, band);
        for k in -(band as i64)..=band as i64 {
            let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            reference.set(k, DMatrix::from_element(1, 1, c)).unwrap();
        }
        // φ̌(θ) = conj(φ(-θ)) sampled on the grid
        let checked: Vec<Complex64> = grid
            .nodes()
            .iter()
            .map(|p| torus_eval(&reference, -p.theta()).conj())
            .collect();
        let got = torus_forward(&grid, &checked, band).unwrap();
        assert!(got.max_deviation(&reference.involution()) < 1e-12);
    }
}
