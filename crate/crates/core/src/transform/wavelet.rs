//! Forward and inverse diffusive wavelet transforms.
//!
//! Everything runs spectrally: the forward transform multiplies
//! coefficients, 𝒲̂φ(ρ, π) = ψ̂_ρ*(π) φ̂(π), and synthesizes slices on the
//! sample grid; the inverse integrates ψ̂_ρ 𝒲̂φ α(ρ) dρ over the scale
//! grid. For heat families the scale dependence factors out exactly, so
//! the analytic head/tail corrections of the scale grid enter as the
//! scalar rescaling (head + q + tail)/q with q the numeric heat-profile
//! integral; reconstructions are then limited by scale-quadrature error
//! only. Grid-side convolution exists separately as the brute-force
//! oracle.

use super::field::{FieldDomain, WaveletCoefficientField};
use super::scale_grid::{ScaleGrid, TailMode};
use crate::constants::AREA_S2;
use crate::error::{CoreError, Result};
use crate::diffusive::{FamilyKind, WaveletFamily};
use crate::grids::{QuadratureGrid, So3Grid, Sphere2Grid, Sphere3Grid, TorusGrid};
use crate::harmonic::{
    adapted_order, s2_backward, s2_forward, s3_central_backward, s3_central_forward, so3_forward,
    torus_backward, torus_forward, Geometry, SpectralCoefficients, WignerTables,
};
use crate::specfun::SphericalHarmonics;
use crate::Complex64;
use nalgebra::DMatrix;

/// Result of an inverse transform.
#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub coeffs: SpectralCoefficients,
    pub samples: Vec<Complex64>,
    /// Mass outside [ρ_min, ρ_max] that was dropped (Truncate mode only;
    /// zero with analytic corrections).
    pub truncation_bias: f64,
}

fn forward_slices(
    phi_hat: &SpectralCoefficients,
    family: &WaveletFamily,
    scale_grid: &ScaleGrid,
) -> Result<(Vec<SpectralCoefficients>, bool)> {
    if family.quotient().is_some() {
        return Err(CoreError::FamilyMismatch(
            "quotient families are sample-side objects; spectral transforms are not defined".into(),
        ));
    }
    if phi_hat.geometry() != family.geometry() {
        return Err(CoreError::FamilyMismatch(format!(
            "family on {} applied to {} coefficients",
            family.geometry(),
            phi_hat.geometry()
        )));
    }
    if phi_hat.bandlimit() > family.bandlimit() {
        return Err(CoreError::BandExceeded {
            have: family.bandlimit(),
            requested: phi_hat.bandlimit(),
        });
    }
    // mean-zero enforcement: coefficients at λ = 0 do not survive
    let mean_projected = phi_hat
        .get(0)
        .map(|m| m.iter().any(|c| c.norm() > 1e-14))
        .unwrap_or(false);
    let projected = phi_hat.project_plus();
    let mut slices = Vec::with_capacity(scale_grid.nodes().len());
    for &rho in scale_grid.nodes() {
        let mut slice = SpectralCoefficients::new(phi_hat.geometry(), phi_hat.bandlimit());
        for (id, m) in projected.iter() {
            let psi = family.coefficient(rho, *id)?;
            slice.set(*id, psi.adjoint() * m)?;
        }
        slices.push(slice);
    }
    Ok((slices, mean_projected))
}

/// Inverse integral φ̂ = ∫ ψ̂_ρ 𝒲̂(ρ) α(ρ) dρ from cached spectral slices.
fn inverse_from_slices(
    slices: &[SpectralCoefficients],
    geometry: Geometry,
    bandlimit: u32,
    family: &WaveletFamily,
    scale_grid: &ScaleGrid,
) -> Result<(SpectralCoefficients, f64)> {
    if slices.len() != scale_grid.nodes().len() {
        return Err(CoreError::GridMismatch(format!(
            "{} field slices for {} scale nodes",
            slices.len(),
            scale_grid.nodes().len()
        )));
    }
    let mut out = SpectralCoefficients::new(geometry, bandlimit);
    let mut bias: f64 = 0.0;
    for rep in RepIndex_list(geometry, bandlimit) {
        let id = rep.0;
        let dim = rep.1;
        let mut acc = DMatrix::<Complex64>::zeros(dim, dim);
        for ((&rho, &w), slice) in scale_grid
            .nodes()
            .iter()
            .zip(scale_grid.weights())
            .zip(slices)
        {
            let alpha = family.alpha().eval(rho)?;
            let psi = family.coefficient(rho, id)?;
            acc += psi * slice.entry_or_zero(id) * Complex64::new(w * alpha, 0.0);
        }
        let l2 = family.lambda_sq(id);
        if l2 > 0.0 {
            let q = scale_grid.heat_profile_integral(l2);
            let head = scale_grid.heat_head(l2);
            let tail = scale_grid.heat_tail(l2);
            if scale_grid.tail_mode() == TailMode::AnalyticHeatTail {
                acc *= Complex64::new((head + q + tail) / q, 0.0);
            } else {
                bias = bias
                    .max(-(-l2 * scale_grid.rho_min()).exp_m1() + (-l2 * scale_grid.rho_max()).exp());
            }
        }
        out.set(id, acc)?;
    }
    Ok((out, bias))
}

// (id, dim) pairs of the band; avoids juggling full RepIndex values here.
#[allow(non_snake_case)]
fn RepIndex_list(geometry: Geometry, bandlimit: u32) -> Vec<(i64, usize)> {
    crate::harmonic::RepIndex::all_up_to(geometry, bandlimit)
        .into_iter()
        .map(|r| (r.id, r.dim))
        .collect()
}

/// Wavelet transform on a group geometry (torus or S³-central):
/// 𝒲φ(ρ, g) = (φ ∗ ψ̌_ρ)(g), computed spectrally and synthesized per
/// scale node.
pub fn wavelet_forward_group_torus(
    grid: &TorusGrid,
    samples: &[Complex64],
    family: &WaveletFamily,
    scale_grid: &ScaleGrid,
) -> Result<WaveletCoefficientField> {
    if family.kind() != FamilyKind::GroupCentral || family.geometry() != Geometry::Torus {
        return Err(CoreError::FamilyMismatch("expected a torus group family".into()));
    }
    let phi_hat = torus_forward(grid, samples, family.bandlimit())?;
    let (slices, mean_projected) = forward_slices(&phi_hat, family, scale_grid)?;
    let values = slices
        .iter()
        .map(|slice| torus_backward(slice, grid))
        .collect::<Result<Vec<_>>>()?;
    Ok(WaveletCoefficientField {
        domain: FieldDomain::ScaleByGroup,
        geometry: Geometry::Torus,
        bandlimit: family.bandlimit(),
        scale_nodes: scale_grid.nodes().to_vec(),
        scale_weights: scale_grid.weights().to_vec(),
        values,
        spectral: slices,
        mean_projected,
    })
}

/// Inverse of the torus transform.
pub fn wavelet_inverse_group_torus(
    field: &WaveletCoefficientField,
    grid: &TorusGrid,
    family: &WaveletFamily,
    scale_grid: &ScaleGrid,
) -> Result<Reconstruction> {
    let (coeffs, truncation_bias) = inverse_from_slices(
        &field.spectral,
        Geometry::Torus,
        field.bandlimit,
        family,
        scale_grid,
    )?;
    let samples = torus_backward(&coeffs, grid)?;
    Ok(Reconstruction { coeffs, samples, truncation_bias })
}

/// Group transform for central functions on S³.
pub fn wavelet_forward_group_s3(
    grid: &Sphere3Grid,
    samples: &[Complex64],
    family: &WaveletFamily,
    scale_grid: &ScaleGrid,
) -> Result<WaveletCoefficientField> {
    if family.kind() != FamilyKind::GroupCentral || family.geometry() != Geometry::S3Group {
        return Err(CoreError::FamilyMismatch("expected an S3 group family".into()));
    }
    let phi_hat = s3_central_forward(grid, samples, family.bandlimit())?;
    let (slices, mean_projected) = forward_slices(&phi_hat, family, scale_grid)?;
    let values = slices
        .iter()
        .map(|slice| s3_central_backward(slice, grid))
        .collect::<Result<Vec<_>>>()?;
    Ok(WaveletCoefficientField {
        domain: FieldDomain::ScaleByGroup,
        geometry: Geometry::S3Group,
        bandlimit: family.bandlimit(),
        scale_nodes: scale_grid.nodes().to_vec(),
        scale_weights: scale_grid.weights().to_vec(),
        values,
        spectral: slices,
        mean_projected,
    })
}

/// Inverse of the S³ transform.
pub fn wavelet_inverse_group_s3(
    field: &WaveletCoefficientField,
    grid: &Sphere3Grid,
    family: &WaveletFamily,
    scale_grid: &ScaleGrid,
) -> Result<Reconstruction> {
    let (coeffs, truncation_bias) = inverse_from_slices(
        &field.spectral,
        Geometry::S3Group,
        field.bandlimit,
        family,
        scale_grid,
    )?;
    let samples = s3_central_backward(&coeffs, grid)?;
    Ok(Reconstruction { coeffs, samples, truncation_bias })
}

/// Zonal wavelet transform on S²: 𝒲φ(ρ, x) = (φ • ψ_ρ)(x), a field on
/// ℝ₊ × S² (ScaleBySpace).
pub fn wavelet_forward_zonal(
    grid: &Sphere2Grid,
    samples: &[Complex64],
    family: &WaveletFamily,
    scale_grid: &ScaleGrid,
) -> Result<WaveletCoefficientField> {
    if family.kind() != FamilyKind::ZonalOnX {
        return Err(CoreError::FamilyMismatch(
            "zonal transform needs a zonal family (non-zonal families use the group-side op)"
                .into(),
        ));
    }
    if family.sphere_dim() != 2 {
        return Err(CoreError::UnsupportedGeometry(
            "grids exist for S² only; higher spheres are formula-level".into(),
        ));
    }
    let phi_hat = s2_forward(grid, samples, family.bandlimit())?;
    let (slices, mean_projected) = forward_slices(&phi_hat, family, scale_grid)?;
    let values = slices
        .iter()
        .map(|slice| s2_backward(slice, grid))
        .collect::<Result<Vec<_>>>()?;
    Ok(WaveletCoefficientField {
        domain: FieldDomain::ScaleBySpace,
        geometry: Geometry::SO3,
        bandlimit: family.bandlimit(),
        scale_nodes: scale_grid.nodes().to_vec(),
        scale_weights: scale_grid.weights().to_vec(),
        values,
        spectral: slices,
        mean_projected,
    })
}

/// Inverse of the zonal transform, back to samples on the S² grid.
pub fn wavelet_inverse_zonal(
    field: &WaveletCoefficientField,
    grid: &Sphere2Grid,
    family: &WaveletFamily,
    scale_grid: &ScaleGrid,
) -> Result<Reconstruction> {
    let (coeffs, truncation_bias) = inverse_from_slices(
        &field.spectral,
        Geometry::SO3,
        field.bandlimit,
        family,
        scale_grid,
    )?;
    let samples = s2_backward(&coeffs, grid)?;
    Ok(Reconstruction { coeffs, samples, truncation_bias })
}

/// Non-zonal wavelet transform on S²: 𝒲φ(ρ, g) = (φ • ψ_ρ)(g), a field on
/// ℝ₊ × SO(3) (ScaleByGroup). Slices are synthesized on the Euler grid.
pub fn wavelet_forward_nonzonal(
    s2grid: &Sphere2Grid,
    samples: &[Complex64],
    family: &WaveletFamily,
    scale_grid: &ScaleGrid,
    so3grid: &So3Grid,
    tables: &WignerTables,
) -> Result<WaveletCoefficientField> {
    if family.kind() != FamilyKind::NonZonal {
        return Err(CoreError::FamilyMismatch("expected a non-zonal family".into()));
    }
    let phi_hat = s2_forward(s2grid, samples, family.bandlimit())?;
    let (slices, mean_projected) = forward_slices(&phi_hat, family, scale_grid)?;

    // W(ρ, A) = Σ_k d_k conj(c_k(ρ)) s_k(A) with the ρ-independent
    // geometry factor s_k(A) = Σ_{a,b} M_k(A)_{ab} conj(w_b) φ̂(k)_{0a};
    // this keeps the per-(ρ, node) work at one fused multiply per degree.
    let band = family.bandlimit();
    let w = family.weight_vectors().expect("non-zonal family carries w");
    let projected = phi_hat.project_plus();
    let n_ang = so3grid.alpha_nodes().len();
    let mut s_factors = vec![vec![Complex64::default(); band as usize + 1]; so3grid.len()];
    for (idx, &(alpha, _beta, gamma)) in so3grid.euler_nodes().iter().enumerate() {
        let ib = idx / (n_ang * n_ang);
        for k in 1..=band {
            let m = tables.rep_matrix(k, alpha, ib, gamma);
            let d = 2 * k as usize + 1;
            let phi_k = projected.entry_or_zero(k as i64);
            let mut s = Complex64::default();
            for a in 0..d {
                let u_a = phi_k[(0, a)];
                if u_a == Complex64::default() {
                    continue;
                }
                let mut inner = Complex64::default();
                for b in 0..d {
                    inner += m[(a, b)] * w[k as usize][b].conj();
                }
                s += u_a * inner;
            }
            s_factors[idx][k as usize] = s * d as f64;
        }
    }
    let mut values = Vec::with_capacity(scale_grid.nodes().len());
    for &rho in scale_grid.nodes() {
        let mut amps = vec![Complex64::default(); band as usize + 1];
        for k in 1..=band {
            amps[k as usize] = Complex64::new(family.scalar_amplitude(rho, k as i64)?, 0.0).conj();
        }
        let slice_values: Vec<Complex64> = s_factors
            .iter()
            .map(|sk| {
                sk.iter()
                    .zip(&amps)
                    .map(|(s, c)| s * c)
                    .sum()
            })
            .collect();
        values.push(slice_values);
    }
    Ok(WaveletCoefficientField {
        domain: FieldDomain::ScaleByGroup,
        geometry: Geometry::SO3,
        bandlimit: band,
        scale_nodes: scale_grid.nodes().to_vec(),
        scale_weights: scale_grid.weights().to_vec(),
        values,
        spectral: slices,
        mean_projected,
    })
}

/// Inverse of the non-zonal transform, back to samples on the S² grid.
pub fn wavelet_inverse_nonzonal(
    field: &WaveletCoefficientField,
    s2grid: &Sphere2Grid,
    family: &WaveletFamily,
    scale_grid: &ScaleGrid,
) -> Result<Reconstruction> {
    let (coeffs, truncation_bias) = inverse_from_slices(
        &field.spectral,
        Geometry::SO3,
        field.bandlimit,
        family,
        scale_grid,
    )?;
    let samples = s2_backward(&coeffs, s2grid)?;
    Ok(Reconstruction { coeffs, samples, truncation_bias })
}

/// Recompute the spectral slices of a ScaleByGroup SO(3) field from its
/// sample values (the sample-side route; production uses the cache).
pub fn so3_slices_from_samples(
    field: &WaveletCoefficientField,
    so3grid: &So3Grid,
    tables: &WignerTables,
) -> Result<Vec<SpectralCoefficients>> {
    if field.geometry != Geometry::SO3 || field.domain != FieldDomain::ScaleByGroup {
        return Err(CoreError::GridMismatch(
            "sample-side slice recovery expects an SO(3) group field".into(),
        ));
    }
    field
        .values
        .iter()
        .map(|slice| so3_forward(so3grid, tables, slice, field.bandlimit))
        .collect()
}

/// Numeric part of the field energy Σ_i wρ_i α(ρ_i) ‖W(ρ_i, ·)‖²; the L²
/// norm per slice uses the geometry's invariant measure (w/|S²| on S²).
pub fn field_energy_numeric<G: QuadratureGrid>(
    field: &WaveletCoefficientField,
    grid: &G,
    family: &WaveletFamily,
) -> Result<f64> {
    let measure_scale = match field.domain {
        FieldDomain::ScaleBySpace => 1.0 / AREA_S2,
        FieldDomain::ScaleByGroup => 1.0,
    };
    let mut acc = 0.0;
    for ((&rho, &w_rho), slice) in field
        .scale_nodes
        .iter()
        .zip(&field.scale_weights)
        .zip(&field.values)
    {
        if slice.len() != grid.len() {
            return Err(CoreError::GridMismatch("field slice vs grid".into()));
        }
        let norm_sq: f64 = grid
            .weights()
            .iter()
            .zip(slice)
            .map(|(w, v)| w * measure_scale * v.norm_sqr())
            .sum();
        acc += w_rho * family.alpha().eval(rho)? * norm_sq;
    }
    Ok(acc)
}

/// Analytic head+tail energy corrections Σ_π d_π (head(λ)+tail(λ)) ‖φ̂(π)‖²
/// for the energy identity; zero in Truncate mode.
pub fn energy_tail_correction(
    phi_hat: &SpectralCoefficients,
    family: &WaveletFamily,
    scale_grid: &ScaleGrid,
) -> f64 {
    phi_hat
        .iter()
        .map(|(id, m)| {
            let l2 = family.lambda_sq(*id);
            if l2 <= 0.0 {
                return 0.0;
            }
            let rep_dim = m.nrows() as f64;
            (scale_grid.heat_head(l2) + scale_grid.heat_tail(l2)) * rep_dim * m.norm_squared()
        })
        .sum()
}

/// Synthesize a zonal field slice pointwise: used to compare the zonal and
/// non-zonal pipelines on the same input.
pub fn zonal_slice_at_points(
    slice: &SpectralCoefficients,
    table: &SphericalHarmonics,
    points: &[(f64, f64)],
) -> Vec<Complex64> {
    points
        .iter()
        .map(|&(t, theta)| {
            let all = table.eval_all(t, theta);
            let mut acc = Complex64::default();
            for (k, m) in slice.iter() {
                let k = *k as usize;
                let d = 2 * k + 1;
                let scale = (d as f64 * AREA_S2).sqrt();
                for b in 0..d {
                    let y = all[k][(k as i32 + adapted_order(b)) as usize];
                    acc += scale * m[(0, b)] * y.conj();
                }
            }
            acc
        })
        .collect()
}
