//! Convolution products: the group convolution and the two
//! homogeneous-space pairings (•-product and zonal product).
//!
//! Production code runs on the spectral side, where the products are plain
//! matrix multiplications:
//!
//! ```text
//! (φ ∗ ψ)^(π) = ψ̂(π) φ̂(π)
//! (φ • ψ)^(π) = ψ̂*(π) φ̂(π)
//! (φ ∘̂ ψ)^(π) = ψ̂(π) φ̂*(π)
//! ```
//!
//! The quadrature versions evaluate the defining integrals literally and
//! exist as brute-force oracles for the verification suites.

use crate::constants::AREA_S2;
use crate::error::{CoreError, Result};
use crate::grids::{
    quaternion_mul, QuadratureGrid, So3Grid, Sphere2Grid, Sphere3Grid, SpherePoint, TorusGrid,
};
use crate::harmonic::{
    s3_central_eval, s3_central_forward, torus_eval, S2Synth, SpectralCoefficients,
};
use crate::Complex64;

fn check_compatible(a: &SpectralCoefficients, b: &SpectralCoefficients) -> Result<()> {
    if a.geometry() != b.geometry() || a.bandlimit() != b.bandlimit() {
        return Err(CoreError::GridMismatch(format!(
            "coefficient sets disagree: {}/{} vs {}/{}",
            a.geometry(),
            a.bandlimit(),
            b.geometry(),
            b.bandlimit()
        )));
    }
    Ok(())
}

/// Spectral group convolution: (φ∗ψ)^ = ψ̂ φ̂.
pub fn conv_group_spectral(
    phi: &SpectralCoefficients,
    psi: &SpectralCoefficients,
) -> Result<SpectralCoefficients> {
    check_compatible(phi, psi)?;
    let mut out = SpectralCoefficients::new(phi.geometry(), phi.bandlimit());
    for id in phi.band_reps().iter().map(|r| r.id) {
        out.set(id, psi.entry_or_zero(id) * phi.entry_or_zero(id))?;
    }
    Ok(out)
}

/// Spectral •-product: (φ•ψ)^ = ψ̂* φ̂.
pub fn conv_bullet_spectral(
    phi: &SpectralCoefficients,
    psi: &SpectralCoefficients,
) -> Result<SpectralCoefficients> {
    check_compatible(phi, psi)?;
    let mut out = SpectralCoefficients::new(phi.geometry(), phi.bandlimit());
    for id in phi.band_reps().iter().map(|r| r.id) {
        out.set(id, psi.entry_or_zero(id).adjoint() * phi.entry_or_zero(id))?;
    }
    Ok(out)
}

/// Spectral zonal product: (φ∘̂ψ)^ = ψ̂ φ̂*.
pub fn conv_zonal_hat_spectral(
    phi: &SpectralCoefficients,
    psi: &SpectralCoefficients,
) -> Result<SpectralCoefficients> {
    check_compatible(phi, psi)?;
    let mut out = SpectralCoefficients::new(phi.geometry(), phi.bandlimit());
    for id in phi.band_reps().iter().map(|r| r.id) {
        out.set(id, psi.entry_or_zero(id) * phi.entry_or_zero(id).adjoint())?;
    }
    Ok(out)
}

/// Whether a coefficient set is zonal: entries confined to the (0,0) slot.
pub fn is_zonal(coeffs: &SpectralCoefficients, tol: f64) -> bool {
    coeffs.iter().all(|(_, m)| {
        (0..m.nrows())
            .flat_map(|i| (0..m.ncols()).map(move |j| (i, j)))
            .all(|(i, j)| (i == 0 && j == 0) || m[(i, j)].norm() <= tol)
    })
}

/// Group convolution on the torus by direct quadrature:
/// (φ∗ψ)(θ) = Σ_h w φ(θ_h) ψ(θ - θ_h).
pub fn conv_group_torus_quadrature(
    grid: &TorusGrid,
    phi: &[Complex64],
    psi: &[Complex64],
) -> Result<Vec<Complex64>> {
    let n = grid.len();
    if phi.len() != n || psi.len() != n {
        return Err(CoreError::GridMismatch("convolution sample lengths".into()));
    }
    // node differences land on nodes of the equispaced grid
    Ok((0..n)
        .map(|m| {
            (0..n)
                .map(|h| phi[h] * psi[(m + n - h) % n] / n as f64)
                .sum()
        })
        .collect())
}

/// Central group convolution on S³ by direct quadrature, with ψ
/// resynthesized at the translated points h⁻¹x.
///
/// The convolution of central functions is central, so the defining
/// integral is evaluated once per x₀ slice (at its first fiber node) and
/// the value is shared across the slice.
pub fn conv_group_s3_quadrature(
    grid: &Sphere3Grid,
    phi: &[Complex64],
    psi: &[Complex64],
    bandlimit: u32,
) -> Result<Vec<Complex64>> {
    let psi_hat = s3_central_forward(grid, psi, bandlimit)?;
    let fiber = grid.fiber_len();
    let mut out = vec![Complex64::default(); grid.len()];
    for slice_idx in 0..grid.x0_nodes().len() {
        let x = &grid.nodes()[slice_idx * fiber];
        let mut acc = Complex64::default();
        for ((h, &w), f) in grid.nodes().iter().zip(grid.weights()).zip(phi) {
            let translated = quaternion_mul(&h.conjugate(), x);
            acc += w * f * s3_central_eval(&psi_hat, translated.scalar_part())?;
        }
        for v in &mut out[slice_idx * fiber..(slice_idx + 1) * fiber] {
            *v = acc;
        }
    }
    Ok(out)
}

/// Group convolution of two functions on S² by direct quadrature over
/// SO(3): (φ∗ψ)(x) = Σ_A w_A φ(Aξ₀) ψ(A⁻¹x).
pub fn conv_group_s2_quadrature(
    s2: &Sphere2Grid,
    so3: &So3Grid,
    phi: &SpectralCoefficients,
    psi: &SpectralCoefficients,
) -> Result<Vec<Complex64>> {
    let pole = SpherePoint::north_pole();
    let phi_synth = S2Synth::new(phi.clone())?;
    let psi_synth = S2Synth::new(psi.clone())?;
    let mut out = vec![Complex64::default(); s2.len()];
    let phi_at_pole: Vec<Complex64> = so3
        .nodes()
        .iter()
        .map(|a| phi_synth.eval(&a.apply(&pole)))
        .collect();
    for (target, x) in s2.nodes().iter().enumerate() {
        let mut acc = Complex64::default();
        for ((a, &w), f) in so3.nodes().iter().zip(so3.weights()).zip(&phi_at_pole) {
            acc += w * f * psi_synth.eval(&a.inverse().apply(x));
        }
        out[target] = acc;
    }
    Ok(out)
}

/// •-product by direct quadrature: (φ•ψ)(g) = ∫_X φ(x) conj(ψ(g⁻¹x)) dx
/// with dx the normalized invariant measure, sampled on the SO(3) grid.
pub fn conv_bullet_quadrature(
    s2: &Sphere2Grid,
    so3: &So3Grid,
    phi_samples: &[Complex64],
    psi: &SpectralCoefficients,
) -> Result<Vec<Complex64>> {
    if phi_samples.len() != s2.len() {
        return Err(CoreError::GridMismatch("bullet product sample length".into()));
    }
    let psi_synth = S2Synth::new(psi.clone())?;
    let mut out = vec![Complex64::default(); so3.len()];
    for (gi, g) in so3.nodes().iter().enumerate() {
        let g_inv = g.inverse();
        let mut acc = Complex64::default();
        for ((x, &w), f) in s2.nodes().iter().zip(s2.weights()).zip(phi_samples) {
            acc += w / AREA_S2 * f * psi_synth.eval(&g_inv.apply(x)).conj();
        }
        out[gi] = acc;
    }
    Ok(out)
}

/// Zonal product by direct quadrature:
/// (φ∘̂ψ)(x) = ∫_G conj(φ(g·ξ₀)) ψ(g·x) dμ(g), output on the S² grid.
pub fn conv_zonal_hat_quadrature(
    s2: &Sphere2Grid,
    so3: &So3Grid,
    phi: &SpectralCoefficients,
    psi: &SpectralCoefficients,
) -> Result<Vec<Complex64>> {
    let pole = SpherePoint::north_pole();
    let phi_synth = S2Synth::new(phi.clone())?;
    let psi_synth = S2Synth::new(psi.clone())?;
    let phi_at_pole: Vec<Complex64> = so3
        .nodes()
        .iter()
        .map(|a| phi_synth.eval(&a.apply(&pole)))
        .collect();
    let mut out = vec![Complex64::default(); s2.len()];
    for (target, x) in s2.nodes().iter().enumerate() {
        let mut acc = Complex64::default();
        for ((a, &w), f) in so3.nodes().iter().zip(so3.weights()).zip(&phi_at_pole) {
            acc += w * f.conj() * psi_synth.eval(&a.apply(x));
        }
        out[target] = acc;
    }
    Ok(out)
}

/// Torus group convolution on the spectral side checked against the
/// quadrature oracle lives in the tests; this helper evaluates a
/// coefficient set at the grid nodes for them.
pub fn torus_samples(coeffs: &SpectralCoefficients, grid: &TorusGrid) -> Vec<Complex64> {
    grid.nodes().iter().map(|p| torus_eval(coeffs, p.theta())).collect()
}
