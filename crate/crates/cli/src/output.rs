//! Output writers: curve CSVs, field JSON, summaries.
//!
//! Every file starts with the config fingerprint so downstream commands
//! can refuse mismatched inputs. Formatting goes through the shortest
//! round-trip float representation, which makes reruns byte-identical.

use anyhow::Context;
use diffwave_core::transform::{FieldDomain, WaveletCoefficientField};
use diffwave_core::Complex64;
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::Path;

/// Key-value header lines prefixed with `# `.
pub fn write_csv_with_header(
    path: &Path,
    header: &[(&str, String)],
    columns: &str,
    rows: impl Iterator<Item = String>,
) -> anyhow::Result<()> {
    let mut file = std::io::BufWriter::new(
        std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
    );
    for (key, value) in header {
        writeln!(file, "# {key}: {value}")?;
    }
    writeln!(file, "{columns}")?;
    for row in rows {
        writeln!(file, "{row}")?;
    }
    Ok(())
}

/// Field file: header plus flat (ρ, node, re, im) rows, ρ ascending then
/// node ascending.
#[derive(Debug, Serialize, Deserialize)]
pub struct FieldFile {
    pub fingerprint: String,
    pub geometry: String,
    pub domain: FieldDomain,
    pub bandlimit: u32,
    pub seed: u64,
    pub scale_nodes: Vec<f64>,
    pub scale_weights: Vec<f64>,
    pub mean_projected: bool,
    /// [rho, node-id, re, im] per entry.
    pub entries: Vec<(f64, usize, f64, f64)>,
}

impl FieldFile {
    pub fn from_field(field: &WaveletCoefficientField, fingerprint: &str, seed: u64) -> Self {
        FieldFile {
            fingerprint: fingerprint.into(),
            geometry: field.geometry.to_string(),
            domain: field.domain,
            bandlimit: field.bandlimit,
            seed,
            scale_nodes: field.scale_nodes.clone(),
            scale_weights: field.scale_weights.clone(),
            mean_projected: field.mean_projected,
            entries: field.export_rows(),
        }
    }

    /// Reassemble the per-slice sample values (n_nodes per scale node).
    pub fn slice_values(&self) -> anyhow::Result<Vec<Vec<Complex64>>> {
        let n_rho = self.scale_nodes.len();
        if n_rho == 0 || self.entries.len() % n_rho != 0 {
            anyhow::bail!("field file has inconsistent slice sizes");
        }
        let per_slice = self.entries.len() / n_rho;
        let mut out = vec![vec![Complex64::default(); per_slice]; n_rho];
        for (i, chunk) in self.entries.chunks(per_slice).enumerate() {
            for (expected_node, &(_rho, node, re, im)) in chunk.iter().enumerate() {
                if node != expected_node {
                    anyhow::bail!("field file rows are not in node order");
                }
                out[i][node] = Complex64::new(re, im);
            }
        }
        Ok(out)
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        let text = serde_json::to_string(self)?;
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }

    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading field file {}", path.display()))?;
        Ok(serde_json::from_str(&text)?)
    }
}

/// Samples file: JSON array of [re, im].
pub fn write_samples(path: &Path, samples: &[Complex64]) -> anyhow::Result<()> {
    let rows: Vec<[f64; 2]> = samples.iter().map(|c| [c.re, c.im]).collect();
    std::fs::write(path, serde_json::to_string(&rows)?)?;
    Ok(())
}

pub fn read_samples(path: &Path) -> anyhow::Result<Vec<Complex64>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading samples from {}", path.display()))?;
    let rows: Vec<[f64; 2]> = serde_json::from_str(&text)?;
    Ok(rows.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use diffwave_core::harmonic::Geometry;
    use diffwave_core::transform::WaveletCoefficientField;

    #[test]
    fn field_file_roundtrip() {
        let field = WaveletCoefficientField {
            domain: FieldDomain::ScaleByGroup,
            geometry: Geometry::Torus,
            bandlimit: 2,
            scale_nodes: vec![0.1, 0.5],
            scale_weights: vec![0.3, 0.7],
            values: vec![
                vec![Complex64::new(1.0, -1.0), Complex64::new(0.5, 0.0)],
                vec![Complex64::new(0.0, 2.0), Complex64::new(3.0, 0.25)],
            ],
            spectral: vec![],
            mean_projected: true,
        };
        let file = FieldFile::from_field(&field, "abcd", 9);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("field.json");
        file.write(&path).unwrap();
        let back = FieldFile::read(&path).unwrap();
        assert_eq!(back.fingerprint, "abcd");
        assert!(back.mean_projected);
        let slices = back.slice_values().unwrap();
        assert_eq!(slices[1][0], Complex64::new(0.0, 2.0));
    }
}
