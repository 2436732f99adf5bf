//! The four subcommands.

use crate::config::{FamilyKindName, GeometryName, RunConfig};
use crate::output::{read_samples, write_csv_with_header, write_samples, FieldFile};
use anyhow::{bail, Context};
use diffwave_core::diffusive::{FamilyKind, WaveletFamily};
use diffwave_core::grids::{so3_grid, sphere2_grid, sphere3_grid, torus_grid, QuadratureGrid, UnitQuaternion};
use diffwave_core::harmonic::{
    s2_forward, s3_central_forward, so3_forward, torus_forward, SpectralCoefficients, WignerTables,
};
use diffwave_core::testfn::{
    random_s2_samples, random_s3_central_samples, random_torus_samples, relative_l2_error,
};
use diffwave_core::transform::{
    energy_tail_correction, field_energy_numeric, wavelet_forward_group_s3,
    wavelet_forward_group_torus, wavelet_forward_nonzonal, wavelet_forward_zonal,
    wavelet_inverse_group_s3, wavelet_inverse_group_torus, wavelet_inverse_nonzonal,
    wavelet_inverse_zonal, FieldDomain, Reconstruction, WaveletCoefficientField,
};
use diffwave_core::verify::{run_suite, Suite, VerifyReport};
use diffwave_core::Complex64;
use serde::Serialize;
use std::path::Path;

/// Shared header lines for output files.
fn base_header(config: &RunConfig) -> Vec<(&'static str, String)> {
    let mut header = vec![("fingerprint", config.fingerprint())];
    if let Some(preset) = &config.preset {
        header.push(("preset", preset.clone()));
    }
    header.push(("geometry", format!("{:?}", config.geometry).to_lowercase()));
    header.push(("family", format!("{:?}", config.family.kind)));
    header.push(("alpha", alpha_description(config)));
    header
}

/// Caption-exact description of the weight function.
fn alpha_description(config: &RunConfig) -> String {
    use crate::config::AlphaKindName;
    let a = &config.family.alpha;
    match a.kind {
        AlphaKindName::Constant => format!("{}", a.c.unwrap_or(1.0)),
        AlphaKindName::HeatTrace => "heat-trace".into(),
        AlphaKindName::PowerLaw => {
            let c = a.c.unwrap_or(1.0);
            let e = a.exponent.unwrap_or(0.0);
            if c == 1.0 {
                format!("rho^{e}")
            } else {
                format!("{c}*rho^{e}")
            }
        }
    }
}

/// `family`: sample ψ_ρ along the geometry's natural axis for each
/// configured ρ and emit one CSV per scale.
pub fn cmd_family(config: &RunConfig, out_dir: &Path) -> anyhow::Result<()> {
    std::fs::create_dir_all(out_dir)?;
    let family = config.family(out_dir)?;
    let rhos: Vec<f64> = if config.rhos.is_empty() {
        vec![0.01, 0.05, 0.1]
    } else {
        config.rhos.clone()
    };
    std::fs::write(out_dir.join("preset.toml"), config.canonical_toml())?;

    for (idx, &rho) in rhos.iter().enumerate() {
        let mut header = base_header(config);
        header.push(("rho", format!("{rho}")));
        match (config.geometry, config.family.kind) {
            (GeometryName::Torus, _) => {
                // three periods, 512 samples per period
                let rows = (0..=1536).map(|m| {
                    let theta = -1.5 + m as f64 / 512.0;
                    let v = family.eval_torus(rho, theta).expect("family eval");
                    format!("{theta},{}", v.re)
                });
                write_csv_with_header(
                    &out_dir.join(format!("curve_{idx:02}.csv")),
                    &header,
                    "theta,value",
                    rows,
                )?;
            }
            (GeometryName::S3, _) => {
                // profile along the maximal circle S³ ∩ ℂ
                let rows = (0..=512).map(|m| {
                    let x0 = -1.0 + m as f64 / 256.0;
                    let x1 = (1.0 - x0 * x0).max(0.0).sqrt();
                    let q = UnitQuaternion::new(x0, x1, 0.0, 0.0).expect("unit by construction");
                    let v = family.eval_s3(rho, &q).expect("family eval");
                    format!("{x0},{v}")
                });
                write_csv_with_header(
                    &out_dir.join(format!("curve_{idx:02}.csv")),
                    &header,
                    "x0,value",
                    rows,
                )?;
            }
            (GeometryName::S2, FamilyKindName::Zonal) => {
                let rows = (0..=512).map(|m| {
                    let t = -1.0 + m as f64 / 256.0;
                    let v = family.eval_zonal(rho, t).expect("family eval");
                    format!("{t},{v}")
                });
                write_csv_with_header(
                    &out_dir.join(format!("curve_{idx:02}.csv")),
                    &header,
                    "t,value",
                    rows,
                )?;
            }
            (GeometryName::S2, FamilyKindName::Nonzonal) => {
                header.push((
                    "w",
                    config.family.w.clone().unwrap_or_else(|| "equidistributed".into()),
                ));
                let grid = sphere2_grid(config.bandlimit)?;
                let points: Vec<(f64, f64)> = grid
                    .nodes()
                    .iter()
                    .map(|p| (p.latitude_sine(), p.longitude()))
                    .collect();
                let rows = points.iter().map(|&(t, theta)| {
                    let p = diffwave_core::grids::SpherePoint::from_lat_lon(t, theta);
                    let v = family.eval_nonzonal(rho, &p).expect("family eval");
                    format!("{t},{theta},{},{}", v.re, v.im)
                });
                write_csv_with_header(
                    &out_dir.join(format!("field_{idx:02}.csv")),
                    &header,
                    "t,theta,re,im",
                    rows,
                )?;
            }
            _ => bail!("family kind does not fit the geometry"),
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct TransformSummary {
    fingerprint: String,
    input_norm: f64,
    field_norm: f64,
    relative_unitarity_gap: f64,
    mean_projected: bool,
}

struct ForwardRun {
    field: WaveletCoefficientField,
    samples: Vec<Complex64>,
    phi_hat: SpectralCoefficients,
}

fn run_forward(config: &RunConfig, base_dir: &Path) -> anyhow::Result<(WaveletFamily, ForwardRun)> {
    let family = config.family(base_dir)?;
    if family.quotient().is_some() {
        bail!("quotient families are sample-side objects; the spectral transform is undefined");
    }
    let scale = config.scale_grid()?;
    let band = config.bandlimit;
    let seed = config.seed;
    let from_file = |path: &str| -> anyhow::Result<Vec<Complex64>> {
        read_samples(&base_dir.join(path))
    };
    let run = match config.geometry {
        GeometryName::Torus => {
            let grid = torus_grid(2 * band as usize + 1)?;
            let samples = match config.input.as_str() {
                "random-bandlimited" => random_torus_samples(&grid, band, seed, true),
                spec if spec.starts_with("file:") => from_file(&spec[5..])?,
                other => bail!("unknown input source '{other}'"),
            };
            let field = wavelet_forward_group_torus(&grid, &samples, &family, &scale)?;
            let phi_hat = torus_forward(&grid, &samples, band)?;
            ForwardRun { field, samples, phi_hat }
        }
        GeometryName::S3 => {
            let grid = sphere3_grid(band)?;
            let samples = match config.input.as_str() {
                "random-bandlimited" => random_s3_central_samples(&grid, band, seed, true),
                spec if spec.starts_with("file:") => from_file(&spec[5..])?,
                other => bail!("unknown input source '{other}'"),
            };
            let field = wavelet_forward_group_s3(&grid, &samples, &family, &scale)?;
            let phi_hat = s3_central_forward(&grid, &samples, band)?;
            ForwardRun { field, samples, phi_hat }
        }
        GeometryName::S2 => {
            let grid = sphere2_grid(band)?;
            let samples = match config.input.as_str() {
                "random-bandlimited" => random_s2_samples(&grid, band, seed, true),
                spec if spec.starts_with("file:") => from_file(&spec[5..])?,
                other => bail!("unknown input source '{other}'"),
            };
            let phi_hat = s2_forward(&grid, &samples, band)?;
            let field = if family.kind() == FamilyKind::ZonalOnX {
                wavelet_forward_zonal(&grid, &samples, &family, &scale)?
            } else {
                let so3 = so3_grid(band)?;
                let tables = WignerTables::new(&so3);
                wavelet_forward_nonzonal(&grid, &samples, &family, &scale, &so3, &tables)?
            };
            ForwardRun { field, samples, phi_hat }
        }
    };
    Ok((family, run))
}

fn field_energy(
    config: &RunConfig,
    field: &WaveletCoefficientField,
    family: &WaveletFamily,
) -> anyhow::Result<f64> {
    let band = config.bandlimit;
    Ok(match (config.geometry, field.domain) {
        (GeometryName::Torus, _) => {
            field_energy_numeric(field, &torus_grid(2 * band as usize + 1)?, family)?
        }
        (GeometryName::S3, _) => field_energy_numeric(field, &sphere3_grid(band)?, family)?,
        (GeometryName::S2, FieldDomain::ScaleBySpace) => {
            field_energy_numeric(field, &sphere2_grid(band)?, family)?
        }
        (GeometryName::S2, FieldDomain::ScaleByGroup) => {
            field_energy_numeric(field, &so3_grid(band)?, family)?
        }
    })
}

/// `transform`: run the forward transform on the configured input and
/// persist the field, the input samples and an energy summary.
pub fn cmd_transform(config: &RunConfig, out_dir: &Path) -> anyhow::Result<()> {
    std::fs::create_dir_all(out_dir)?;
    let (family, run) = run_forward(config, out_dir)?;
    if run.field.mean_projected {
        eprintln!("warning: input projected to mean-zero");
    }
    let scale = config.scale_grid()?;
    let energy = field_energy(config, &run.field, &family)?
        + energy_tail_correction(&run.phi_hat, &family, &scale);
    let input_sq = run.phi_hat.parseval_norm_sq_plus();
    let gap = if input_sq > 0.0 {
        (energy - input_sq).abs() / input_sq
    } else {
        0.0
    };
    let fingerprint = config.fingerprint();
    FieldFile::from_field(&run.field, &fingerprint, config.seed)
        .write(&out_dir.join("field.json"))?;
    write_samples(&out_dir.join("input.json"), &run.samples)?;
    let summary = TransformSummary {
        fingerprint,
        input_norm: input_sq.sqrt(),
        field_norm: energy.max(0.0).sqrt(),
        relative_unitarity_gap: gap,
        mean_projected: run.field.mean_projected,
    };
    std::fs::write(
        out_dir.join("summary.json"),
        serde_json::to_string_pretty(&summary)?,
    )?;
    std::fs::write(out_dir.join("config.toml"), config.canonical_toml())?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct ErrorSummary {
    fingerprint: String,
    relative_l2_error: Option<f64>,
    truncation_bias: f64,
}

/// `reconstruct`: rebuild the field's spectral slices from the exported
/// sample values, run the inverse transform and compare against the input
/// when it is available.
pub fn cmd_reconstruct(config: &RunConfig, out_dir: &Path) -> anyhow::Result<()> {
    let field_path = out_dir.join("field.json");
    if !field_path.exists() {
        bail!("missing field file {}", field_path.display());
    }
    let file = FieldFile::read(&field_path)?;
    let fingerprint = config.fingerprint();
    if file.fingerprint != fingerprint {
        bail!(
            "family fingerprint mismatch: field carries {}, config is {}",
            file.fingerprint,
            fingerprint
        );
    }
    let family = config.family(out_dir)?;
    let scale = config.scale_grid()?;
    let band = config.bandlimit;
    let values = file.slice_values()?;

    let reconstruction: Reconstruction = match config.geometry {
        GeometryName::Torus => {
            let grid = torus_grid(2 * band as usize + 1)?;
            let field = rebuild_field(&file, values, |slice| {
                Ok(torus_forward(&grid, slice, band)?)
            })?;
            wavelet_inverse_group_torus(&field, &grid, &family, &scale)?
        }
        GeometryName::S3 => {
            let grid = sphere3_grid(band)?;
            let field = rebuild_field(&file, values, |slice| {
                Ok(s3_central_forward(&grid, slice, band)?)
            })?;
            wavelet_inverse_group_s3(&field, &grid, &family, &scale)?
        }
        GeometryName::S2 => {
            let grid = sphere2_grid(band)?;
            match file.domain {
                FieldDomain::ScaleBySpace => {
                    let field = rebuild_field(&file, values, |slice| {
                        Ok(s2_forward(&grid, slice, band)?)
                    })?;
                    wavelet_inverse_zonal(&field, &grid, &family, &scale)?
                }
                FieldDomain::ScaleByGroup => {
                    let so3 = so3_grid(band)?;
                    let tables = WignerTables::new(&so3);
                    let field = rebuild_field(&file, values, |slice| {
                        Ok(so3_forward(&so3, &tables, slice, band)?)
                    })?;
                    wavelet_inverse_nonzonal(&field, &grid, &family, &scale)?
                }
            }
        }
    };

    write_samples(&out_dir.join("reconstruction.json"), &reconstruction.samples)?;
    let input_path = out_dir.join("input.json");
    let relative = if input_path.exists() {
        let original = read_samples(&input_path)?;
        Some(match config.geometry {
            GeometryName::Torus => relative_l2_error(
                &torus_grid(2 * band as usize + 1)?,
                &reconstruction.samples,
                &original,
            ),
            GeometryName::S3 => {
                relative_l2_error(&sphere3_grid(band)?, &reconstruction.samples, &original)
            }
            GeometryName::S2 => {
                relative_l2_error(&sphere2_grid(band)?, &reconstruction.samples, &original)
            }
        })
    } else {
        None
    };
    let summary = ErrorSummary {
        fingerprint,
        relative_l2_error: relative,
        truncation_bias: reconstruction.truncation_bias,
    };
    std::fs::write(
        out_dir.join("error_summary.json"),
        serde_json::to_string_pretty(&summary)?,
    )?;
    Ok(())
}

fn rebuild_field(
    file: &FieldFile,
    values: Vec<Vec<Complex64>>,
    forward: impl Fn(&[Complex64]) -> anyhow::Result<SpectralCoefficients>,
) -> anyhow::Result<WaveletCoefficientField> {
    let spectral = values
        .iter()
        .map(|slice| forward(slice))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let geometry = match file.geometry.as_str() {
        "torus" => diffwave_core::harmonic::Geometry::Torus,
        "s3" => diffwave_core::harmonic::Geometry::S3Group,
        "so3" => diffwave_core::harmonic::Geometry::SO3,
        other => bail!("unknown geometry tag '{other}' in field file"),
    };
    Ok(WaveletCoefficientField {
        domain: file.domain,
        geometry,
        bandlimit: file.bandlimit,
        scale_nodes: file.scale_nodes.clone(),
        scale_weights: file.scale_weights.clone(),
        values,
        spectral,
        mean_projected: file.mean_projected,
    })
}

/// `verify`: run a suite, print one line per check, write the JSON report
/// and return whether everything passed.
pub fn cmd_verify(suite: Suite, seed: u64, out_dir: Option<&Path>) -> anyhow::Result<bool> {
    let report: VerifyReport = run_suite(suite, seed)?;
    for check in &report.checks {
        let status = if check.pass { "PASS" } else { "FAIL" };
        println!(
            "{status} [{}] {}: observed {:.3e} (tolerance {:.1e})",
            check.suite, check.name, check.observed, check.tolerance
        );
    }
    println!(
        "{}: {} checks, seed {}",
        if report.pass { "OK" } else { "FAILED" },
        report.checks.len(),
        report.seed
    );
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
        std::fs::write(
            dir.join("verify_report.json"),
            serde_json::to_string_pretty(&report).context("serializing report")?,
        )?;
    }
    Ok(report.pass)
}
