//! Diffusive approximate identities and their verification.
//!
//! The spectral data is a scalar multiple of the identity per
//! representation, p̂_t(π) = p(t, π)·I; matrix-valued identities whose
//! derivative is not scalar are out of scope, which the representation
//! makes unbuildable rather than checkable.

use crate::error::Result;
use crate::harmonic::{Geometry, RepIndex};
use serde::Serialize;
use std::sync::Arc;

type SpectralFn = Arc<dyn Fn(f64, &RepIndex) -> f64 + Send + Sync>;
type PredicateFn = Arc<dyn Fn(&RepIndex) -> bool + Send + Sync>;

/// A family t ↦ p_t given by scalar spectral data and its t-derivative,
/// together with the co-finite set Ĝ₊ it is diffusive with respect to.
#[derive(Clone)]
pub struct DiffusiveIdentity {
    geometry: Geometry,
    bandlimit: u32,
    spectral: SpectralFn,
    derivative: SpectralFn,
    plus_set: PredicateFn,
}

impl std::fmt::Debug for DiffusiveIdentity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DiffusiveIdentity")
            .field("geometry", &self.geometry)
            .field("bandlimit", &self.bandlimit)
            .finish_non_exhaustive()
    }
}

impl DiffusiveIdentity {
    /// Custom identity from spectral data; Ĝ₊ defaults to {λ_π > 0}.
    pub fn from_spectral(
        geometry: Geometry,
        bandlimit: u32,
        spectral: impl Fn(f64, &RepIndex) -> f64 + Send + Sync + 'static,
        derivative: impl Fn(f64, &RepIndex) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            geometry,
            bandlimit,
            spectral: Arc::new(spectral),
            derivative: Arc::new(derivative),
            plus_set: Arc::new(|rep: &RepIndex| rep.in_plus_set()),
        }
    }

    pub fn with_plus_set(
        mut self,
        plus_set: impl Fn(&RepIndex) -> bool + Send + Sync + 'static,
    ) -> Self {
        self.plus_set = Arc::new(plus_set);
        self
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn bandlimit(&self) -> u32 {
        self.bandlimit
    }

    /// Scalar of p̂_t(π) = p(t, π)·I.
    pub fn spectral(&self, t: f64, rep: &RepIndex) -> f64 {
        (self.spectral)(t, rep)
    }

    /// Scalar of ∂_t p̂_t(π).
    pub fn derivative(&self, t: f64, rep: &RepIndex) -> f64 {
        (self.derivative)(t, rep)
    }

    pub fn in_plus_set(&self, rep: &RepIndex) -> bool {
        (self.plus_set)(rep)
    }

    pub fn reps(&self) -> Vec<RepIndex> {
        RepIndex::all_up_to(self.geometry, self.bandlimit)
    }
}

/// The heat kernel: p̂_t(π) = e^{-tλ_π²} I with Ĝ₊ = {λ_π > 0}.
pub fn heat_identity(geometry: Geometry, bandlimit: u32) -> DiffusiveIdentity {
    DiffusiveIdentity::from_spectral(
        geometry,
        bandlimit,
        |t, rep| (-t * rep.lambda_sq).exp(),
        |t, rep| -rep.lambda_sq * (-t * rep.lambda_sq).exp(),
    )
}

/// Observed bound above which condition (1) is reported as failed; genuine
/// diffusive identities stay O(1) on the spectral side.
const BOUND_LIMIT: f64 = 10.0;

/// Outcome of one of the four defining conditions.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub name: String,
    pub pass: bool,
    /// Worst observed value for the condition's criterion.
    pub worst: f64,
    /// (t, representation id) where the worst value occurred.
    pub witness: Option<(f64, i64)>,
}

/// Verification report for all four conditions.
#[derive(Debug, Clone, Serialize)]
pub struct DiffusiveReport {
    pub conditions: Vec<ConditionReport>,
    /// Observed uniform bound sup |p̂_t(π)|.
    pub bound_c: f64,
    pub pass: bool,
}

/// Check the four defining conditions on sampled (t, π):
/// (1) uniform boundedness, (2) p̂_t → I as t → 0, (3) p̂_t → 0 as t → ∞ on
/// Ĝ₊, (4) -∂_t p̂_t ⪰ 0 on Ĝ₊.
pub fn verify_diffusive(
    identity: &DiffusiveIdentity,
    t_samples: &[f64],
    tol: f64,
) -> Result<DiffusiveReport> {
    let reps = identity.reps();

    // (1) boundedness over the samples plus a large-t extension
    let mut c_bound: f64 = 0.0;
    let mut witness1 = None;
    let mut grid1: Vec<f64> = t_samples.to_vec();
    grid1.extend([10.0, 100.0, 10_000.0]);
    for rep in &reps {
        for &t in &grid1 {
            let v = identity.spectral(t, rep).abs();
            if v > c_bound {
                c_bound = v;
                witness1 = Some((t, rep.id));
            }
        }
    }
    let cond1 = ConditionReport {
        name: "uniform bound".into(),
        pass: c_bound.is_finite() && c_bound <= BOUND_LIMIT,
        worst: c_bound,
        witness: witness1,
    };

    // (2) identity limit at t = 10^{-d}, d = 2..6: deviations must shrink
    let mut worst2: f64 = 0.0;
    let mut witness2 = None;
    let mut pass2 = true;
    for rep in &reps {
        let devs: Vec<f64> = (2..=6)
            .map(|d| (identity.spectral(10f64.powi(-d), rep) - 1.0).abs())
            .collect();
        let monotone = devs.windows(2).all(|w| w[1] <= w[0] + tol);
        let converged = devs[4] <= tol.max(0.5 * devs[0]);
        if !(monotone && converged) {
            pass2 = false;
        }
        if devs[4] > worst2 {
            worst2 = devs[4];
            witness2 = Some((1e-6, rep.id));
        }
    }
    let cond2 = ConditionReport {
        name: "identity limit t -> 0".into(),
        pass: pass2,
        worst: worst2,
        witness: witness2,
    };

    // (3) decay on Ĝ₊: |p̂| at t = 10⁴ must be far below its value at t = 1
    let mut worst3: f64 = 0.0;
    let mut witness3 = None;
    let mut pass3 = true;
    for rep in reps.iter().filter(|r| identity.in_plus_set(r)) {
        let early = identity.spectral(1.0, rep).abs();
        let late = identity.spectral(10_000.0, rep).abs();
        if late > tol.max(0.01 * early) {
            pass3 = false;
        }
        if late > worst3 {
            worst3 = late;
            witness3 = Some((10_000.0, rep.id));
        }
    }
    let cond3 = ConditionReport {
        name: "decay t -> infinity on plus set".into(),
        pass: pass3,
        worst: worst3,
        witness: witness3,
    };

    // (4) -∂_t p̂_t positive semidefinite on Ĝ₊
    let mut worst4: f64 = 0.0;
    let mut witness4 = None;
    for rep in reps.iter().filter(|r| identity.in_plus_set(r)) {
        for &t in t_samples {
            let neg_derivative = -identity.derivative(t, rep);
            if neg_derivative < worst4 {
                worst4 = neg_derivative;
                witness4 = Some((t, rep.id));
            }
        }
    }
    let cond4 = ConditionReport {
        name: "monotone decay (-d/dt psd)".into(),
        pass: worst4 >= -1e-12,
        worst: worst4,
        witness: witness4,
    };

    let pass = cond1.pass && cond2.pass && cond3.pass && cond4.pass;
    Ok(DiffusiveReport {
        conditions: vec![cond1, cond2, cond3, cond4],
        bound_c: c_bound,
        pass,
    })
}
