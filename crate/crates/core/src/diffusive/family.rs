//! Spectral wavelet families.
//!
//! All families here are heat-shaped: the outer product satisfies
//! ψ̂_ρ(π) ψ̂_ρ*(π) α(ρ) = -∂_ρ p̂_ρ(π), so for every π in Ĝ₊
//!
//! ```text
//! ∫_t^∞ ψ̂_ρ(π) ψ̂_ρ*(π) α(ρ) dρ = e^{-λ_π² t} · P(π)
//! ```
//!
//! with P the identity on the group side and the stabilizer projector
//! Ĥ(π) on homogeneous spaces.

use super::alpha::WeightFunction;
use super::identity::DiffusiveIdentity;
use crate::constants::{gegenbauer_at_one, harmonic_dim, AREA_S2};
use crate::error::{CoreError, Result};
use crate::grids::{SpherePoint, UnitQuaternion};
use crate::harmonic::{adapted_order, Geometry, RepIndex};
use crate::quotient::QuotientSpec;
use crate::specfun::{gegenbauer, SphericalHarmonics};
use crate::Complex64;
use nalgebra::{DMatrix, DVector};
use std::collections::BTreeMap;
use std::f64::consts::PI;

/// Which spectral shape the family carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// Central functions on a group (torus or S³): ψ̂_ρ(π) = c(ρ,π) η_π.
    GroupCentral,
    /// Zonal family on Sⁿ: entry (0,0) of each class-1 block.
    ZonalOnX,
    /// Weight-vector family on S²: first row c(ρ,k)·w(k)ᵀ.
    NonZonal,
}

/// The unitary freedom η_π(ρ): identity, or scalar phases per torus
/// frequency.
#[derive(Debug, Clone, PartialEq)]
pub enum Eta {
    Identity,
    /// Unimodular phase per torus frequency k.
    TorusPhases(BTreeMap<i64, Complex64>),
}

impl Eta {
    /// η_k = -i sign k, the choice that turns the torus family into the
    /// θ₃ derivative.
    pub fn minus_i_sign(bandlimit: u32) -> Eta {
        let mut phases = BTreeMap::new();
        for k in -(bandlimit as i64)..=bandlimit as i64 {
            let s = match k.cmp(&0) {
                std::cmp::Ordering::Greater => Complex64::new(0.0, -1.0),
                std::cmp::Ordering::Less => Complex64::new(0.0, 1.0),
                std::cmp::Ordering::Equal => Complex64::new(1.0, 0.0),
            };
            phases.insert(k, s);
        }
        Eta::TorusPhases(phases)
    }

    fn phase(&self, id: i64) -> Complex64 {
        match self {
            Eta::Identity => Complex64::new(1.0, 0.0),
            Eta::TorusPhases(map) => map.get(&id).copied().unwrap_or(Complex64::new(1.0, 0.0)),
        }
    }
}

/// A diffusive wavelet family on the spectral side.
#[derive(Debug, Clone)]
pub struct WaveletFamily {
    geometry: Geometry,
    kind: FamilyKind,
    bandlimit: u32,
    alpha: WeightFunction,
    eta: Eta,
    /// Per-degree weight vectors (adapted ordering), non-zonal only.
    w: Option<Vec<DVector<Complex64>>>,
    /// Sphere dimension for zonal families on Sⁿ (n = 2 is the grid-backed
    /// case).
    sphere_dim: u32,
    /// Override of the eigenvalue sequence λ_k², indexed by k.
    lambda_override: Option<Vec<f64>>,
    /// Γ-averaging for families on S³/Γ.
    quotient: Option<QuotientSpec>,
}

impl WaveletFamily {
    pub fn geometry(&self) -> Geometry {
        self.geometry
    }
    pub fn kind(&self) -> FamilyKind {
        self.kind
    }
    pub fn bandlimit(&self) -> u32 {
        self.bandlimit
    }
    pub fn alpha(&self) -> &WeightFunction {
        &self.alpha
    }
    pub fn sphere_dim(&self) -> u32 {
        self.sphere_dim
    }
    pub fn quotient(&self) -> Option<&QuotientSpec> {
        self.quotient.as_ref()
    }
    pub fn weight_vectors(&self) -> Option<&[DVector<Complex64>]> {
        self.w.as_deref()
    }

    pub(crate) fn set_quotient(&mut self, spec: QuotientSpec) {
        self.quotient = Some(spec);
    }

    /// λ_π² used by the family (override-aware).
    pub fn lambda_sq(&self, id: i64) -> f64 {
        if let Some(seq) = &self.lambda_override {
            let idx = id.unsigned_abs() as usize;
            if idx < seq.len() {
                return seq[idx];
            }
        }
        RepIndex::new(self.geometry, id)
            .map(|r| r.lambda_sq)
            .unwrap_or(0.0)
    }

    /// Scalar amplitude c(ρ, π) = α(ρ)^{-1/2} λ_π e^{-ρλ_π²/2}; the full
    /// coefficient is this scalar times the kind's matrix structure.
    pub fn scalar_amplitude(&self, rho: f64, id: i64) -> Result<f64> {
        let l2 = self.lambda_sq(id);
        if l2 <= 0.0 {
            return Ok(0.0);
        }
        Ok(l2.sqrt() * (-rho * l2 / 2.0).exp() / self.alpha.eval(rho)?.sqrt())
    }

    /// Materialize ψ̂_ρ(π) as a matrix. Quotient families have projector-
    /// valued coefficients that are not materialized here; they evaluate
    /// sample-side only.
    pub fn coefficient(&self, rho: f64, id: i64) -> Result<DMatrix<Complex64>> {
        if self.quotient.is_some() {
            return Err(CoreError::FamilyMismatch(
                "quotient family coefficients are projector-valued; use sample evaluation".into(),
            ));
        }
        let rep = RepIndex::new(self.geometry, id)?;
        let c = self.scalar_amplitude(rho, id)?;
        let d = rep.dim;
        Ok(match self.kind {
            FamilyKind::GroupCentral => {
                DMatrix::from_diagonal_element(d, d, self.eta.phase(id) * c)
            }
            FamilyKind::ZonalOnX => {
                let mut m = DMatrix::zeros(d, d);
                m[(0, 0)] = Complex64::new(c, 0.0);
                m
            }
            FamilyKind::NonZonal => {
                let w = &self.w.as_ref().expect("non-zonal family carries w")[id as usize];
                let mut m = DMatrix::zeros(d, d);
                for b in 0..d {
                    m[(0, b)] = w[b] * c;
                }
                m
            }
        })
    }

    /// Sample-side value on the torus:
    /// ψ_ρ(θ) = Σ_k c(ρ,k) η_k e^{2πikθ}.
    pub fn eval_torus(&self, rho: f64, theta: f64) -> Result<Complex64> {
        if self.geometry != Geometry::Torus {
            return Err(CoreError::FamilyMismatch("not a torus family".into()));
        }
        let mut acc = Complex64::default();
        for k in -(self.bandlimit as i64)..=self.bandlimit as i64 {
            let c = self.scalar_amplitude(rho, k)?;
            acc += self.eta.phase(k) * c * Complex64::from_polar(1.0, 2.0 * PI * k as f64 * theta);
        }
        Ok(acc)
    }

    /// Sample-side value on S³ (Γ-averaged when a quotient is attached):
    /// ψ_ρ(x) = α^{-1/2} Σ_n (n+1) λ_n e^{-λ_n²ρ/2} ⟨C_n^1(Sc xγ)⟩_Γ.
    pub fn eval_s3(&self, rho: f64, x: &UnitQuaternion) -> Result<f64> {
        if self.geometry != Geometry::S3Group {
            return Err(CoreError::FamilyMismatch("not an S3 family".into()));
        }
        let mut acc = 0.0;
        for n in 1..=self.bandlimit {
            let c = self.scalar_amplitude(rho, n as i64)?;
            let character = match &self.quotient {
                None => gegenbauer(1.0, n, x.scalar_part())?,
                Some(spec) => spec.averaged_character(n, x)?,
            };
            acc += (n as f64 + 1.0) * c * character;
        }
        Ok(acc)
    }

    /// Sample-side value of a zonal family on Sⁿ at latitude-sine t:
    /// ψ_ρ = α^{-1/2} Σ_{k≥1} (d_k/C_k(1)) λ_k e^{-λ_k²ρ/2} C_k^{(n-1)/2}(t).
    pub fn eval_zonal(&self, rho: f64, t: f64) -> Result<f64> {
        if self.kind != FamilyKind::ZonalOnX {
            return Err(CoreError::FamilyMismatch("not a zonal family".into()));
        }
        let n = self.sphere_dim;
        let nu = (n as f64 - 1.0) / 2.0;
        let mut acc = 0.0;
        for k in 1..=self.bandlimit {
            let c = self.scalar_amplitude(rho, k as i64)?;
            let ratio = harmonic_dim(k, n) as f64 / gegenbauer_at_one(k, n) as f64;
            acc += ratio * c * gegenbauer(nu, k, t)?;
        }
        Ok(acc)
    }

    /// Sample-side value of a non-zonal family on S²:
    /// ψ_ρ(ξ) = α^{-1/2} Σ_k √(|S²| d_k) λ_k e^{-λ_k²ρ/2} Σ_b w_b conj(𝒴^{(b)}(ξ)).
    pub fn eval_nonzonal(&self, rho: f64, p: &SpherePoint) -> Result<Complex64> {
        if self.kind != FamilyKind::NonZonal {
            return Err(CoreError::FamilyMismatch("not a non-zonal family".into()));
        }
        let table = SphericalHarmonics::new(self.bandlimit);
        let all = table.eval_all(p.latitude_sine(), p.longitude());
        let w = self.w.as_ref().expect("non-zonal family carries w");
        let mut acc = Complex64::default();
        for k in 1..=self.bandlimit as usize {
            let d = 2 * k + 1;
            let c = self.scalar_amplitude(rho, k as i64)?;
            let scale = (AREA_S2 * d as f64).sqrt() * c;
            for b in 0..d {
                let y = all[k][(k as i32 + adapted_order(b)) as usize];
                acc += scale * w[k][b] * y.conj();
            }
        }
        Ok(acc)
    }
}

/// Wavelet family of a scalar diffusive identity:
/// ψ̂_ρ(π) = α(ρ)^{-1/2} √(-∂_ρ p̂_ρ(π)) η_π(ρ), vanishing outside Ĝ₊.
///
/// For the heat identity this is α^{-1/2} λ_π e^{-ρλ_π²/2} η_π. Identities
/// whose decay is not monotone at some sampled scale are rejected, since
/// the square root would not exist.
pub fn heat_wavelet_family(
    identity: &DiffusiveIdentity,
    alpha: WeightFunction,
    eta: Eta,
) -> Result<WaveletFamily> {
    if matches!(eta, Eta::TorusPhases(_)) && identity.geometry() != Geometry::Torus {
        return Err(CoreError::FamilyMismatch(
            "per-frequency phases are a torus-only freedom".into(),
        ));
    }
    if let Eta::TorusPhases(map) = &eta {
        for (k, phase) in map {
            if (phase.norm() - 1.0).abs() > 1e-12 {
                return Err(CoreError::domain(format!(
                    "eta phase at k = {k} is not unimodular"
                )));
            }
        }
    }
    for rep in identity.reps().iter().filter(|r| identity.in_plus_set(r)) {
        for &t in &[0.01, 0.1, 1.0] {
            if -identity.derivative(t, rep) < -1e-12 {
                return Err(CoreError::domain(format!(
                    "identity is not monotone at t = {t}, rep {}; no positive square root",
                    rep.id
                )));
            }
        }
    }
    Ok(WaveletFamily {
        geometry: identity.geometry(),
        kind: FamilyKind::GroupCentral,
        bandlimit: identity.bandlimit(),
        alpha,
        eta,
        w: None,
        sphere_dim: 2,
        lambda_override: None,
        quotient: None,
    })
}

/// Zonal heat wavelet family on Sⁿ (class-1 spectral side for n = 2).
/// `lambda_seq` overrides the default eigenvalues λ_k² = k(k+n-1); any
/// positive increasing sequence yields a valid transform.
pub fn zonal_family_on_sphere(
    n: u32,
    alpha: WeightFunction,
    lambda_seq: Option<Vec<f64>>,
    bandlimit: u32,
) -> Result<WaveletFamily> {
    if n < 2 {
        return Err(CoreError::domain(format!("sphere dimension n = {n} must be >= 2")));
    }
    if let Some(seq) = &lambda_seq {
        if seq.len() < bandlimit as usize + 1 {
            return Err(CoreError::domain(format!(
                "lambda sequence has {} entries, band limit {bandlimit} needs {}",
                seq.len(),
                bandlimit + 1
            )));
        }
        if seq.iter().skip(1).any(|&l| l <= 0.0) {
            return Err(CoreError::domain("lambda sequence must be positive"));
        }
    }
    let lambda_override = lambda_seq.or_else(|| {
        if n == 2 {
            None // RepIndex::so3 already carries k(k+1)
        } else {
            Some(
                (0..=bandlimit)
                    .map(|k| (k as f64) * (k as f64 + n as f64 - 1.0))
                    .collect(),
            )
        }
    });
    Ok(WaveletFamily {
        geometry: Geometry::SO3,
        kind: FamilyKind::ZonalOnX,
        bandlimit,
        alpha,
        eta: Eta::Identity,
        w: None,
        sphere_dim: n,
        lambda_override,
        quotient: None,
    })
}

/// Non-zonal family on S² from per-degree unit weight vectors (adapted
/// ordering, w\[k\] of length 2k+1). The k = 0 entry is ignored (λ_0 = 0).
pub fn nonzonal_family(
    alpha: WeightFunction,
    w: Vec<DVector<Complex64>>,
    bandlimit: u32,
) -> Result<WaveletFamily> {
    if w.len() != bandlimit as usize + 1 {
        return Err(CoreError::domain(format!(
            "need {} weight vectors for band limit {bandlimit}, got {}",
            bandlimit + 1,
            w.len()
        )));
    }
    for (k, wk) in w.iter().enumerate() {
        if wk.len() != 2 * k + 1 {
            return Err(CoreError::domain(format!(
                "weight vector at degree {k} has length {}, expected {}",
                wk.len(),
                2 * k + 1
            )));
        }
        if k >= 1 && (wk.norm() - 1.0).abs() > 1e-12 {
            return Err(CoreError::domain(format!(
                "weight vector at degree {k} has norm {} != 1",
                wk.norm()
            )));
        }
    }
    Ok(WaveletFamily {
        geometry: Geometry::SO3,
        kind: FamilyKind::NonZonal,
        bandlimit,
        alpha,
        eta: Eta::Identity,
        w: Some(w),
        sphere_dim: 2,
        lambda_override: None,
        quotient: None,
    })
}

/// The equi-distributed weight vectors w(k) = (2k+1)^{-1/2} (1, …, 1)ᵀ.
pub fn equidistributed_weights(bandlimit: u32) -> Vec<DVector<Complex64>> {
    (0..=bandlimit)
        .map(|k| {
            let d = 2 * k as usize + 1;
            DVector::from_element(d, Complex64::new(1.0 / (d as f64).sqrt(), 0.0))
        })
        .collect()
}

/// Weight vectors e₁ = (1, 0, …, 0)ᵀ reproducing the zonal family.
pub fn zonal_weights(bandlimit: u32) -> Vec<DVector<Complex64>> {
    (0..=bandlimit)
        .map(|k| {
            let d = 2 * k as usize + 1;
            let mut v = DVector::from_element(d, Complex64::default());
            v[0] = Complex64::new(1.0, 0.0);
            v
        })
        .collect()
}
