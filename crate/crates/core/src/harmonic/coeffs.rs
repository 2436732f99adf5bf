//! Band-limited spectral coefficient maps and their JSON form.

use super::rep::{Geometry, RepIndex};
use crate::error::{CoreError, Result};
use crate::Complex64;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Band-limited map π ↦ φ̂(π); the Fourier side of every object in the
/// library. Entries are dense complex d_π × d_π matrices keyed by the
/// representation id.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralCoefficients {
    geometry: Geometry,
    bandlimit: u32,
    entries: BTreeMap<i64, DMatrix<Complex64>>,
}

impl SpectralCoefficients {
    pub fn new(geometry: Geometry, bandlimit: u32) -> Self {
        Self { geometry, bandlimit, entries: BTreeMap::new() }
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn bandlimit(&self) -> u32 {
        self.bandlimit
    }

    pub fn rep(&self, id: i64) -> RepIndex {
        RepIndex::new(self.geometry, id).expect("stored ids are valid")
    }

    /// Representation indices inside the band, whether or not an entry is
    /// stored for them.
    pub fn band_reps(&self) -> Vec<RepIndex> {
        RepIndex::all_up_to(self.geometry, self.bandlimit)
    }

    pub fn get(&self, id: i64) -> Option<&DMatrix<Complex64>> {
        self.entries.get(&id)
    }

    /// Stored entry or the zero matrix of the right shape.
    pub fn entry_or_zero(&self, id: i64) -> DMatrix<Complex64> {
        match self.entries.get(&id) {
            Some(m) => m.clone(),
            None => {
                let d = self.rep(id).dim;
                DMatrix::zeros(d, d)
            }
        }
    }

    /// Insert an entry, validating the id against the band and the matrix
    /// shape against the representation dimension.
    pub fn set(&mut self, id: i64, matrix: DMatrix<Complex64>) -> Result<()> {
        let rep = RepIndex::new(self.geometry, id)?;
        if id.unsigned_abs() > self.bandlimit as u64 {
            return Err(CoreError::domain(format!(
                "representation id {id} outside band limit {}",
                self.bandlimit
            )));
        }
        if matrix.nrows() != rep.dim || matrix.ncols() != rep.dim {
            return Err(CoreError::domain(format!(
                "matrix shape {}x{} does not match d_pi = {}",
                matrix.nrows(),
                matrix.ncols(),
                rep.dim
            )));
        }
        self.entries.insert(id, matrix);
        Ok(())
    }

    /// Scalar coefficient c with φ̂(π) = c·I; fails when the entry is not a
    /// scalar multiple of the identity within `tol`.
    pub fn scalar_entry(&self, id: i64, tol: f64) -> Result<Complex64> {
        let m = self.entry_or_zero(id);
        let d = m.nrows();
        let c = m.diagonal().sum() / Complex64::new(d as f64, 0.0);
        for i in 0..d {
            for j in 0..d {
                let want = if i == j { c } else { Complex64::default() };
                if (m[(i, j)] - want).norm() > tol {
                    return Err(CoreError::domain(format!(
                        "coefficient at rep {id} is not a scalar multiple of the identity"
                    )));
                }
            }
        }
        Ok(c)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &DMatrix<Complex64>)> {
        self.entries.iter()
    }

    pub fn ids(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.keys().copied()
    }

    /// Parseval sum Σ_π d_π ‖φ̂(π)‖²_HS.
    pub fn parseval_norm_sq(&self) -> f64 {
        self.entries
            .iter()
            .map(|(id, m)| self.rep(*id).dim as f64 * m.norm_squared())
            .sum()
    }

    /// Same sum restricted to Ĝ₊ (λ_π > 0), the energy seen by wavelet
    /// transforms.
    pub fn parseval_norm_sq_plus(&self) -> f64 {
        self.entries
            .iter()
            .filter(|(id, _)| self.rep(**id).in_plus_set())
            .map(|(id, m)| self.rep(*id).dim as f64 * m.norm_squared())
            .sum()
    }

    /// Involution φ̌(g) = conj(φ(g⁻¹)): adjoint per coefficient.
    pub fn involution(&self) -> Self {
        let mut out = Self::new(self.geometry, self.bandlimit);
        for (id, m) in &self.entries {
            out.entries.insert(*id, m.adjoint());
        }
        out
    }

    /// Drop the coefficients outside Ĝ₊ (projection onto mean-zero
    /// functions for the heat identity).
    pub fn project_plus(&self) -> Self {
        let mut out = Self::new(self.geometry, self.bandlimit);
        for (id, m) in &self.entries {
            if self.rep(*id).in_plus_set() {
                out.entries.insert(*id, m.clone());
            }
        }
        out
    }

    /// Largest entrywise deviation against another coefficient set.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        let mut dev: f64 = 0.0;
        let ids: std::collections::BTreeSet<i64> =
            self.ids().chain(other.ids()).collect();
        for id in ids {
            let a = self.entry_or_zero(id);
            let b = other.entry_or_zero(id);
            let local = (a - b).iter().map(|c| c.norm()).fold(0.0, f64::max);
            dev = dev.max(local);
        }
        dev
    }

    /// Serialize to the interchange JSON schema; floats round-trip
    /// bit-exactly.
    pub fn to_json(&self) -> String {
        let entries = self
            .entries
            .iter()
            .map(|(id, m)| {
                let rep = self.rep(*id);
                JsonEntry {
                    id: *id,
                    dim: rep.dim,
                    lambda_sq: rep.lambda_sq,
                    matrix: m
                        .row_iter()
                        .flat_map(|row| row.iter().map(|c| [c.re, c.im]).collect::<Vec<_>>())
                        .collect(),
                }
            })
            .collect();
        let doc = JsonDoc {
            geometry: self.geometry,
            bandlimit: self.bandlimit,
            entries,
        };
        serde_json::to_string_pretty(&doc).expect("schema is serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: JsonDoc =
            serde_json::from_str(text).map_err(|e| CoreError::Format(e.to_string()))?;
        let mut out = Self::new(doc.geometry, doc.bandlimit);
        for entry in doc.entries {
            let d = entry.dim;
            if entry.matrix.len() != d * d {
                return Err(CoreError::Format(format!(
                    "entry {} has {} matrix elements, expected {}",
                    entry.id,
                    entry.matrix.len(),
                    d * d
                )));
            }
            let m = DMatrix::from_fn(d, d, |i, j| {
                let [re, im] = entry.matrix[i * d + j];
                Complex64::new(re, im)
            });
            out.set(entry.id, m)?;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonDoc {
    geometry: Geometry,
    bandlimit: u32,
    entries: Vec<JsonEntry>,
}

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    id: i64,
    dim: usize,
    lambda_sq: f64,
    /// Row-major [re, im] pairs.
    matrix: Vec<[f64; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_coeffs(seed: u64) -> SpectralCoefficients {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut c = SpectralCoefficients::new(Geometry::SO3, 3);
        for k in 0..=3u32 {
            let d = 2 * k as usize + 1;
            let m = DMatrix::from_fn(d, d, |_, _| {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            });
            c.set(k as i64, m).unwrap();
        }
        c
    }

    #[test]
    fn shape_validation() {
        let mut c = SpectralCoefficients::new(Geometry::SO3, 2);
        assert!(c.set(1, DMatrix::zeros(2, 2)).is_err());
        assert!(c.set(1, DMatrix::zeros(3, 3)).is_ok());
        assert!(c.set(5, DMatrix::zeros(11, 11)).is_err());
        assert!(c.set(-1, DMatrix::zeros(1, 1)).is_err());
    }

    #[test]
    fn scalar_entry_detection() {
        let mut c = SpectralCoefficients::new(Geometry::S3Group, 2);
        let m = DMatrix::from_diagonal_element(3, 3, Complex64::new(0.5, -0.25));
        c.set(2, m).unwrap();
        let s = c.scalar_entry(2, 1e-12).unwrap();
        assert!((s - Complex64::new(0.5, -0.25)).norm() < 1e-15);

        let mut bad = DMatrix::from_diagonal_element(3, 3, Complex64::new(0.5, 0.0));
        bad[(0, 1)] = Complex64::new(0.1, 0.0);
        c.set(2, bad).unwrap();
        assert!(c.scalar_entry(2, 1e-12).is_err());
    }

    #[test]
    fn involution_is_adjoint() {
        let c = random_coeffs(1);
        let inv = c.involution();
        for (id, m) in c.iter() {
            assert_eq!(inv.get(*id).unwrap(), &m.adjoint());
        }
        assert!((c.parseval_norm_sq() - inv.parseval_norm_sq()).abs() < 1e-12);
    }

    #[test]
    fn json_roundtrip_is_bit_exact() {
        let c = random_coeffs(2);
        let text = c.to_json();
        let back = SpectralCoefficients::from_json(&text).unwrap();
        assert_eq!(back.geometry(), c.geometry());
        assert_eq!(back.bandlimit(), c.bandlimit());
        for (id, m) in c.iter() {
            let b = back.get(*id).unwrap();
            for (x, y) in m.iter().zip(b.iter()) {
                assert_eq!(x.re.to_bits(), y.re.to_bits());
                assert_eq!(x.im.to_bits(), y.im.to_bits());
            }
        }
        // malformed matrix length is rejected
        let broken = text.replace("\"dim\": 1", "\"dim\": 2");
        assert!(SpectralCoefficients::from_json(&broken).is_err());
    }

    #[test]
    fn plus_projection_drops_trivial_rep() {
        let mut c = SpectralCoefficients::new(Geometry::Torus, 1);
        c.set(0, DMatrix::from_element(1, 1, Complex64::new(2.0, 0.0))).unwrap();
        c.set(1, DMatrix::from_element(1, 1, Complex64::new(1.0, 0.0))).unwrap();
        let p = c.project_plus();
        assert!(p.get(0).is_none());
        assert!(p.get(1).is_some());
        assert!((p.parseval_norm_sq() - 1.0).abs() < 1e-15);
        assert!((c.parseval_norm_sq_plus() - 1.0).abs() < 1e-15);
    }
}
