//! Representation indices and eigenvalue tables.

use crate::constants::{s3_lambda_sq, so3_lambda_sq, torus_lambda_sq};
use crate::error::{CoreError, Result};
use serde::{Deserialize, Serialize};

/// The geometries carried by the Fourier layer. Functions on `S²` live on
/// the `SO3` spectral side (class-1 coefficients with first-row structure).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Geometry {
    Torus,
    S3Group,
    SO3,
}

impl std::fmt::Display for Geometry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Geometry::Torus => write!(f, "torus"),
            Geometry::S3Group => write!(f, "s3"),
            Geometry::SO3 => write!(f, "so3"),
        }
    }
}

/// One irreducible representation class: dimension, Laplacian eigenvalue
/// and the rank of the stabilizer projector Ĥ(π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepIndex {
    pub geometry: Geometry,
    /// k ∈ ℤ for the torus, n ∈ ℕ₀ for S³, k ∈ ℕ₀ for SO(3).
    pub id: i64,
    pub dim: usize,
    pub lambda_sq: f64,
    /// rank Ĥ(π); equals `dim` when no subgroup is in play.
    pub rank: usize,
}

impl RepIndex {
    pub fn torus(k: i64) -> Self {
        RepIndex {
            geometry: Geometry::Torus,
            id: k,
            dim: 1,
            lambda_sq: torus_lambda_sq(k),
            rank: 1,
        }
    }

    pub fn s3(n: u32) -> Self {
        RepIndex {
            geometry: Geometry::S3Group,
            id: n as i64,
            dim: n as usize + 1,
            lambda_sq: s3_lambda_sq(n),
            rank: n as usize + 1,
        }
    }

    /// Class-1 representation of SO(3) with respect to SO(2); the subgroup
    /// is massive, so the rank is always 1.
    pub fn so3(k: u32) -> Self {
        RepIndex {
            geometry: Geometry::SO3,
            id: k as i64,
            dim: 2 * k as usize + 1,
            lambda_sq: so3_lambda_sq(k),
            rank: 1,
        }
    }

    pub fn new(geometry: Geometry, id: i64) -> Result<Self> {
        match geometry {
            Geometry::Torus => Ok(RepIndex::torus(id)),
            Geometry::S3Group | Geometry::SO3 => {
                let n = u32::try_from(id).map_err(|_| {
                    CoreError::domain(format!("representation id {id} must be >= 0 on {geometry}"))
                })?;
                Ok(if geometry == Geometry::S3Group {
                    RepIndex::s3(n)
                } else {
                    RepIndex::so3(n)
                })
            }
        }
    }

    /// Whether the representation lies in Ĝ₊ for the heat identity
    /// (λ_π > 0).
    pub fn in_plus_set(&self) -> bool {
        self.lambda_sq > 0.0
    }

    /// All representation ids up to a band limit: |k| ≤ B on the torus,
    /// 0 ≤ id ≤ B otherwise.
    pub fn ids_up_to(geometry: Geometry, bandlimit: u32) -> Vec<i64> {
        match geometry {
            Geometry::Torus => (-(bandlimit as i64)..=bandlimit as i64).collect(),
            _ => (0..=bandlimit as i64).collect(),
        }
    }

    pub fn all_up_to(geometry: Geometry, bandlimit: u32) -> Vec<RepIndex> {
        RepIndex::ids_up_to(geometry, bandlimit)
            .into_iter()
            .map(|id| RepIndex::new(geometry, id).expect("ids_up_to yields valid ids"))
            .collect()
    }
}

/// Order j of the i-th adapted basis vector of the degree-k space on S²:
/// the zonal harmonic (j = 0) first, then j = +1, -1, +2, -2, …
///
/// In this ordering Ĥ(k) = diag(1, 0, …, 0) and functions lifted from S²
/// have coefficients in the first row only.
pub fn adapted_order(i: usize) -> i32 {
    if i == 0 {
        0
    } else if i % 2 == 1 {
        ((i + 1) / 2) as i32
    } else {
        -((i / 2) as i32)
    }
}
