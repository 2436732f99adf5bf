//! Characters, spectral translations, the stabilizer projector and zonal
//! projection.

use super::coeffs::SpectralCoefficients;
use super::rep::{adapted_order, Geometry};
use super::wigner::wigner_matrices;
use crate::error::{CoreError, Result};
use crate::grids::{Rotation3, TorusPoint, UnitQuaternion};
use crate::specfun::gegenbauer;
use crate::Complex64;
use nalgebra::DMatrix;
use std::f64::consts::PI;

/// A group element of one of the supported geometries.
#[derive(Debug, Clone, Copy)]
pub enum GroupElement {
    Torus(TorusPoint),
    S3(UnitQuaternion),
    Rotation(Rotation3),
}

/// Character χ_k(z) = z^k on the torus.
pub fn character_torus(k: i64, p: &TorusPoint) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 * p.theta())
}

/// Character of t_n on S³: trace t_n(x) = C_n^1(Sc x).
pub fn character_s3(n: u32, q: &UnitQuaternion) -> Result<f64> {
    gegenbauer(1.0, n, q.scalar_part())
}

/// Character of the class-1 representation of SO(3): a rotation by angle ω
/// has χ_k = Σ_{m=-k}^{k} e^{imω} = C_{2k}^1(cos(ω/2)).
pub fn character_so3(k: u32, a: &Rotation3) -> Result<f64> {
    let m = a.matrix();
    let tr = m[0][0] + m[1][1] + m[2][2];
    let half_cos = ((tr + 1.0).max(0.0) / 4.0).sqrt();
    gegenbauer(1.0, 2 * k, half_cos.min(1.0))
}

/// Left translation T_g φ = φ(g·) on the spectral side: φ̂(π) π(g).
pub fn translate_left(
    g: &GroupElement,
    coeffs: &SpectralCoefficients,
) -> Result<SpectralCoefficients> {
    apply_translation(g, coeffs, true)
}

/// Right translation T^g φ = φ(· g⁻¹) on the spectral side: π*(g) φ̂(π).
pub fn translate_right(
    g: &GroupElement,
    coeffs: &SpectralCoefficients,
) -> Result<SpectralCoefficients> {
    apply_translation(g, coeffs, false)
}

fn apply_translation(
    g: &GroupElement,
    coeffs: &SpectralCoefficients,
    left: bool,
) -> Result<SpectralCoefficients> {
    let mut out = SpectralCoefficients::new(coeffs.geometry(), coeffs.bandlimit());
    match (g, coeffs.geometry()) {
        (GroupElement::Torus(p), Geometry::Torus) => {
            for (k, m) in coeffs.iter() {
                let phase = character_torus(*k, p);
                let factor = if left { phase } else { phase.conj() };
                out.set(*k, m * factor)?;
            }
        }
        (GroupElement::Rotation(a), Geometry::SO3) => {
            let mats = wigner_matrices(coeffs.bandlimit(), a);
            for (k, m) in coeffs.iter() {
                let rep = &mats[*k as usize];
                let translated = if left { m * rep } else { rep.adjoint() * m };
                out.set(*k, translated)?;
            }
        }
        (GroupElement::S3(_), Geometry::S3Group) => {
            // Translates of central functions are not central; the full
            // matrix coefficients of t_n are outside the implemented
            // (central-only) S³ transform.
            return Err(CoreError::UnsupportedGeometry(
                "spectral translation on S3 requires non-central coefficients".into(),
            ));
        }
        (_, geom) => {
            return Err(CoreError::UnsupportedGeometry(format!(
                "group element does not act on {geom} coefficients"
            )));
        }
    }
    Ok(out)
}

/// Orthogonal projector family Ĥ(π) = ∫_H π(h) dμ_H for the stabilizer of
/// the base point; implemented for the massive subgroup SO(2) < SO(3).
#[derive(Debug, Clone, Copy)]
pub struct StabilizerProjector {
    geometry: Geometry,
}

/// Construct the projector family for the geometry; only SO(3)/SO(2) is a
/// homogeneous-space geometry here.
pub fn stabilizer_projector(geometry: Geometry) -> Result<StabilizerProjector> {
    if geometry != Geometry::SO3 {
        return Err(CoreError::UnsupportedGeometry(format!(
            "no stabilizer projector for {geometry}"
        )));
    }
    Ok(StabilizerProjector { geometry })
}

impl StabilizerProjector {
    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    /// rank Ĥ(k) = 1 for every k: SO(2) is massive in SO(3).
    pub fn rank(&self, _k: u32) -> usize {
        1
    }

    /// Ĥ(k) = diag(1, 0, …, 0) in the adapted basis.
    pub fn matrix(&self, k: u32) -> DMatrix<Complex64> {
        let d = 2 * k as usize + 1;
        let mut m = DMatrix::<Complex64>::zeros(d, d);
        m[(0, 0)] = Complex64::new(1.0, 0.0);
        m
    }

    /// Permutation from the adapted index i to the conventional slot k+j
    /// used by `sph_harm_all`: the unitary relating the two orderings.
    pub fn basis_adaptation(&self, k: u32) -> Vec<usize> {
        (0..2 * k as usize + 1)
            .map(|i| (k as i32 + adapted_order(i)) as usize)
            .collect()
    }
}

/// Zonal projection on the spectral side: φ̂(π) ↦ Ĥ(π) φ̂(π), which keeps
/// the first adapted row.
pub fn zonal_project(
    coeffs: &SpectralCoefficients,
    projector: &StabilizerProjector,
) -> Result<SpectralCoefficients> {
    if coeffs.geometry() != projector.geometry() {
        return Err(CoreError::UnsupportedGeometry(format!(
            "projector for {} applied to {} coefficients",
            projector.geometry(),
            coeffs.geometry()
        )));
    }
    let mut out = SpectralCoefficients::new(coeffs.geometry(), coeffs.bandlimit());
    for (k, m) in coeffs.iter() {
        let mut projected = DMatrix::<Complex64>::zeros(m.nrows(), m.ncols());
        for j in 0..m.ncols() {
            projected[(0, j)] = m[(0, j)];
        }
        out.set(*k, projected)?;
    }
    Ok(out)
}
