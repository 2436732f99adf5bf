//! Functions on S² as first-row spectral coefficients over SO(3).
//!
//! With the base point ξ₀ fixed, φ on S² lifts to the right-SO(2)-invariant
//! function φ̃(A) = φ(A ξ₀); its Fourier coefficients satisfy
//! Ĥ(k) φ̂(k) = φ̂(k), i.e. only the first adapted-basis row is populated:
//!
//! ```text
//! φ̂(k)_{0,b} = (d_k |S²|)^{-1/2} ∫_{S²} φ(ξ) 𝒴^{(b)}(ξ) dξ.
//! ```

use super::coeffs::SpectralCoefficients;
use super::rep::{adapted_order, Geometry};
use crate::constants::AREA_S2;
use crate::error::{CoreError, Result};
use crate::grids::{QuadratureGrid, Rotation3, So3Grid, Sphere2Grid, SpherePoint};
use crate::specfun::SphericalHarmonics;
use crate::Complex64;
use nalgebra::DMatrix;

/// Forward transform of samples on an S² grid into first-row SO(3)
/// coefficients.
pub fn s2_forward(
    grid: &Sphere2Grid,
    samples: &[Complex64],
    bandlimit: u32,
) -> Result<SpectralCoefficients> {
    if samples.len() != grid.len() {
        return Err(CoreError::GridMismatch(format!(
            "{} samples on a {}-node grid",
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
    let table = SphericalHarmonics::new(bandlimit);
    let mut rows: Vec<Vec<Complex64>> = (0..=bandlimit as usize)
        .map(|k| vec![Complex64::default(); 2 * k + 1])
        .collect();
    for ((p, &w), f) in grid.nodes().iter().zip(grid.weights()).zip(samples) {
        let all = table.eval_all(p.latitude_sine(), p.longitude());
        for (k, row) in rows.iter_mut().enumerate() {
            for (b, acc) in row.iter_mut().enumerate() {
                // not conjugated: π*(g) pairs the lift with 𝒴 itself
                *acc += w * f * all[k][(k as i32 + adapted_order(b)) as usize];
            }
        }
    }
    let mut out = SpectralCoefficients::new(Geometry::SO3, bandlimit);
    for (k, row) in rows.into_iter().enumerate() {
        let d = 2 * k + 1;
        let scale = 1.0 / (d as f64 * AREA_S2).sqrt();
        let mut m = DMatrix::<Complex64>::zeros(d, d);
        for (b, v) in row.into_iter().enumerate() {
            m[(0, b)] = v * scale;
        }
        out.set(k as i64, m)?;
    }
    Ok(out)
}

/// Synthesis of first-row coefficients on an S² grid.
pub fn s2_backward(coeffs: &SpectralCoefficients, grid: &Sphere2Grid) -> Result<Vec<Complex64>> {
    validate_first_row(coeffs)?;
    let table = SphericalHarmonics::new(coeffs.bandlimit());
    grid.nodes()
        .iter()
        .map(|p| Ok(eval_with_table(coeffs, &table, p)))
        .collect()
}

/// Pointwise synthesis at an arbitrary point of S². For many points build
/// an [`S2Synth`] once instead.
pub fn s2_eval(coeffs: &SpectralCoefficients, p: &SpherePoint) -> Result<Complex64> {
    validate_first_row(coeffs)?;
    let table = SphericalHarmonics::new(coeffs.bandlimit());
    Ok(eval_with_table(coeffs, &table, p))
}

/// Reusable pointwise synthesizer for a fixed coefficient set.
#[derive(Debug, Clone)]
pub struct S2Synth {
    coeffs: SpectralCoefficients,
    table: SphericalHarmonics,
}

impl S2Synth {
    pub fn new(coeffs: SpectralCoefficients) -> Result<Self> {
        validate_first_row(&coeffs)?;
        let table = SphericalHarmonics::new(coeffs.bandlimit());
        Ok(Self { coeffs, table })
    }

    pub fn eval(&self, p: &SpherePoint) -> Complex64 {
        eval_with_table(&self.coeffs, &self.table, p)
    }
}

fn eval_with_table(
    coeffs: &SpectralCoefficients,
    table: &SphericalHarmonics,
    p: &SpherePoint,
) -> Complex64 {
    let all = table.eval_all(p.latitude_sine(), p.longitude());
    let mut acc = Complex64::default();
    for (k, m) in coeffs.iter() {
        let k = *k as usize;
        let d = 2 * k + 1;
        let scale = (d as f64 * AREA_S2).sqrt();
        for b in 0..d {
            let y = all[k][(k as i32 + adapted_order(b)) as usize];
            acc += scale * m[(0, b)] * y.conj();
        }
    }
    acc
}

/// Lift φ on S² to samples of φ̃(A) = φ(A ξ₀) on an SO(3) grid.
pub fn lift_to_so3(coeffs: &SpectralCoefficients, grid: &So3Grid) -> Result<Vec<Complex64>> {
    validate_first_row(coeffs)?;
    let table = SphericalHarmonics::new(coeffs.bandlimit());
    let pole = SpherePoint::north_pole();
    Ok(grid
        .nodes()
        .iter()
        .map(|a: &Rotation3| eval_with_table(coeffs, &table, &a.apply(&pole)))
        .collect())
}

/// Coefficients of a function on X = S² must vanish outside the range of
/// Ĥ(k), i.e. below the first adapted row.
fn validate_first_row(coeffs: &SpectralCoefficients) -> Result<()> {
    if coeffs.geometry() != Geometry::SO3 {
        return Err(CoreError::UnsupportedGeometry(format!(
            "S² synthesis on {} coefficients",
            coeffs.geometry()
        )));
    }
    for (k, m) in coeffs.iter() {
        for i in 1..m.nrows() {
            for j in 0..m.ncols() {
                if m[(i, j)].norm() > 1e-10 {
                    return Err(CoreError::domain(format!(
                        "coefficient at k={k} has entries outside the first row; \
                         not a function on S²"
                    )));
                }
            }
        }
    }
    Ok(())
}
