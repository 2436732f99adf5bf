//! Wavelet coefficient fields.

use crate::harmonic::{Geometry, SpectralCoefficients};
use crate::Complex64;
use serde::{Deserialize, Serialize};

/// Whether the scale slices live on the space X or on the group G.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldDomain {
    ScaleByGroup,
    ScaleBySpace,
}

/// Sampled wavelet transform 𝒲φ: values indexed by (scale node, grid
/// node), with the per-scale spectral slices cached alongside.
#[derive(Debug, Clone)]
pub struct WaveletCoefficientField {
    pub domain: FieldDomain,
    /// Spectral geometry of the slices (functions on S² ride on SO3).
    pub geometry: Geometry,
    pub bandlimit: u32,
    pub scale_nodes: Vec<f64>,
    pub scale_weights: Vec<f64>,
    /// values[i][m] = 𝒲φ(ρ_i, node_m).
    pub values: Vec<Vec<Complex64>>,
    /// 𝒲̂φ(ρ_i, ·) per scale node.
    pub spectral: Vec<SpectralCoefficients>,
    /// Whether a nonzero mean was projected away on input.
    pub mean_projected: bool,
}

impl WaveletCoefficientField {
    /// Flat (ρ ascending, node ascending) export rows (ρ, node, re, im).
    pub fn export_rows(&self) -> Vec<(f64, usize, f64, f64)> {
        let mut rows = Vec::new();
        for (&rho, slice) in self.scale_nodes.iter().zip(&self.values) {
            for (m, v) in slice.iter().enumerate() {
                rows.push((rho, m, v.re, v.im));
            }
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn export_rows_are_ordered() {
        let field = WaveletCoefficientField {
            domain: FieldDomain::ScaleByGroup,
            geometry: Geometry::Torus,
            bandlimit: 1,
            scale_nodes: vec![0.1, 0.2],
            scale_weights: vec![0.5, 0.5],
            values: vec![
                vec![Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)],
                vec![Complex64::new(3.0, 0.0), Complex64::new(4.0, 0.0)],
            ],
            spectral: vec![],
            mean_projected: false,
        };
        let rows = field.export_rows();
        assert_eq!(rows.len(), 4);
        assert!(rows.windows(2).all(|w| (w[0].0, w[0].1) < (w[1].0, w[1].1)));
        assert_eq!(rows[3].2, 4.0);
    }
}
