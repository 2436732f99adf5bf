//! Run configuration: TOML schema, validation, presets and the config
//! fingerprint embedded in every output file.

use anyhow::{bail, Context};
use diffwave_core::diffusive::{
    equidistributed_weights, heat_identity, heat_wavelet_family, nonzonal_family,
    zonal_family_on_sphere, Eta, WaveletFamily, WeightFunction,
};
use diffwave_core::harmonic::Geometry;
use diffwave_core::quotient::{quotient_zonal_family, QuotientSpec};
use diffwave_core::testfn::random_unit_weights;
use diffwave_core::transform::{ScaleGrid, TailMode};
use diffwave_core::Complex64;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub geometry: GeometryName,
    pub bandlimit: u32,
    #[serde(default = "default_seed")]
    pub seed: u64,
    /// "random-bandlimited" or "file:<path>" (JSON array of [re, im]).
    #[serde(default = "default_input")]
    pub input: String,
    pub family: FamilyConfig,
    #[serde(default)]
    pub scale_grid: ScaleGridConfig,
    /// Scale parameters sampled by the `family` command.
    #[serde(default)]
    pub rhos: Vec<f64>,
    /// Optional preset tag recorded by `preset_config`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
}

fn default_seed() -> u64 {
    0
}

fn default_input() -> String {
    "random-bandlimited".into()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeometryName {
    Torus,
    S3,
    S2,
}

impl GeometryName {
    pub fn spectral_geometry(self) -> Geometry {
        match self {
            GeometryName::Torus => Geometry::Torus,
            GeometryName::S3 => Geometry::S3Group,
            GeometryName::S2 => Geometry::SO3,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyConfig {
    pub kind: FamilyKindName,
    pub alpha: AlphaConfig,
    /// "identity" or "minus-i-sign" (torus families only).
    #[serde(default = "default_eta")]
    pub eta: String,
    /// Per-frequency phases overriding `eta` on the torus.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub eta_phase: Vec<EtaPhase>,
    /// "equidistributed", "random" or "file:<path>" (non-zonal only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<String>,
    /// Optional multiplier on the default eigenvalues λ_k² = k(k+1)
    /// (sphere families).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_scale: Option<f64>,
    /// Lens-space order p for families on S³/Γ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient_p: Option<u32>,
}

fn default_eta() -> String {
    "identity".into()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EtaPhase {
    pub k: i64,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKindName {
    GroupCentral,
    Zonal,
    Nonzonal,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaConfig {
    pub kind: AlphaKindName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlphaKindName {
    Constant,
    HeatTrace,
    PowerLaw,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScaleGridConfig {
    pub rho_min: f64,
    pub rho_max: f64,
    pub n_nodes: usize,
    pub tail_mode: TailMode,
}

impl Default for ScaleGridConfig {
    fn default() -> Self {
        Self { rho_min: 1e-4, rho_max: 5.0, n_nodes: 64, tail_mode: TailMode::AnalyticHeatTail }
    }
}

impl RunConfig {
    pub fn from_file(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let config: RunConfig = toml::from_str(&text)
            .with_context(|| format!("parsing config {}", path.display()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.bandlimit < 1 {
            bail!("bandlimit must be >= 1");
        }
        if !(self.scale_grid.rho_min > 0.0 && self.scale_grid.rho_min < self.scale_grid.rho_max) {
            bail!(
                "scale grid needs 0 < rho_min < rho_max, got [{}, {}]",
                self.scale_grid.rho_min,
                self.scale_grid.rho_max
            );
        }
        match (self.geometry, self.family.kind) {
            (GeometryName::Torus, FamilyKindName::GroupCentral) => {}
            (GeometryName::S3, FamilyKindName::GroupCentral) => {}
            (GeometryName::S2, FamilyKindName::Zonal | FamilyKindName::Nonzonal) => {}
            (g, k) => bail!("family kind {k:?} does not fit geometry {g:?}"),
        }
        if self.family.quotient_p.is_some() && self.geometry != GeometryName::S3 {
            bail!("quotient_p applies to S3 families only");
        }
        if self.family.w.is_some() && self.family.kind != FamilyKindName::Nonzonal {
            bail!("weight vectors apply to non-zonal families only");
        }
        if self.family.kind == FamilyKindName::Nonzonal && self.geometry != GeometryName::S2 {
            bail!("non-zonal families live on S2");
        }
        if self.geometry != GeometryName::Torus
            && (self.family.eta != "identity" || !self.family.eta_phase.is_empty())
        {
            bail!("eta phases are a torus-only freedom");
        }
        match self.family.alpha.kind {
            AlphaKindName::PowerLaw if self.family.alpha.exponent.is_none() => {
                bail!("power-law alpha needs an exponent")
            }
            _ => {}
        }
        if let Some(rho) = self.rhos.iter().find(|r| **r <= 0.0) {
            bail!("figure scale parameter rho = {rho} must be positive");
        }
        Ok(())
    }

    /// Canonical TOML of the resolved config; the fingerprint hashes this.
    pub fn canonical_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// First 16 hex digits of the SHA-256 of the canonical config.
    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.canonical_toml().as_bytes());
        let digest = hasher.finalize();
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    pub fn alpha(&self) -> anyhow::Result<WeightFunction> {
        let a = &self.family.alpha;
        Ok(match a.kind {
            AlphaKindName::Constant => WeightFunction::constant(a.c.unwrap_or(1.0))?,
            AlphaKindName::HeatTrace => {
                WeightFunction::heat_trace(self.geometry.spectral_geometry(), self.bandlimit)?
            }
            AlphaKindName::PowerLaw => WeightFunction::power_law(
                a.c.unwrap_or(1.0),
                a.exponent.context("power-law alpha needs an exponent")?,
            )?,
        })
    }

    /// Build the configured wavelet family.
    pub fn family(&self, base_dir: &Path) -> anyhow::Result<WaveletFamily> {
        let alpha = self.alpha()?;
        let band = self.bandlimit;
        Ok(match self.family.kind {
            FamilyKindName::GroupCentral => {
                if self.geometry == GeometryName::S3 {
                    if let Some(p) = self.family.quotient_p {
                        let spec = QuotientSpec::lens(p)?;
                        quotient_zonal_family(&spec, alpha, band)?
                    } else {
                        heat_wavelet_family(
                            &heat_identity(Geometry::S3Group, band),
                            alpha,
                            Eta::Identity,
                        )?
                    }
                } else {
                    let eta = self.eta(band)?;
                    heat_wavelet_family(&heat_identity(Geometry::Torus, band), alpha, eta)?
                }
            }
            FamilyKindName::Zonal => {
                zonal_family_on_sphere(2, alpha, self.lambda_override(), band)?
            }
            FamilyKindName::Nonzonal => {
                if self.family.lambda_scale.is_some() {
                    bail!("lambda_scale is supported for zonal families only");
                }
                let w = match self.family.w.as_deref().unwrap_or("equidistributed") {
                    "equidistributed" => equidistributed_weights(band),
                    "random" => random_unit_weights(band, self.seed),
                    spec if spec.starts_with("file:") => {
                        read_weight_file(&base_dir.join(&spec[5..]), band)?
                    }
                    other => bail!("unknown weight vector source '{other}'"),
                };
                nonzonal_family(alpha, w, band)?
            }
        })
    }

    fn lambda_override(&self) -> Option<Vec<f64>> {
        self.family.lambda_scale.map(|s| {
            (0..=self.bandlimit)
                .map(|k| s * (k as f64) * (k as f64 + 1.0))
                .collect()
        })
    }

    fn eta(&self, band: u32) -> anyhow::Result<Eta> {
        if !self.family.eta_phase.is_empty() {
            let mut phases = BTreeMap::new();
            for p in &self.family.eta_phase {
                phases.insert(p.k, Complex64::new(p.re, p.im));
            }
            return Ok(Eta::TorusPhases(phases));
        }
        match self.family.eta.as_str() {
            "identity" => Ok(Eta::Identity),
            "minus-i-sign" => Ok(Eta::minus_i_sign(band)),
            other => bail!("unknown eta choice '{other}'"),
        }
    }

    pub fn scale_grid(&self) -> anyhow::Result<ScaleGrid> {
        Ok(ScaleGrid::new(
            self.scale_grid.rho_min,
            self.scale_grid.rho_max,
            self.scale_grid.n_nodes,
            self.scale_grid.tail_mode,
        )?)
    }
}

/// Weight-vector file: one line per degree, `k,re0,im0,re1,im1,…` with
/// 2k+1 complex entries.
fn read_weight_file(path: &Path, band: u32) -> anyhow::Result<Vec<nalgebra::DVector<Complex64>>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading weight vectors from {}", path.display()))?;
    let mut by_degree: BTreeMap<u32, nalgebra::DVector<Complex64>> = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let k: u32 = fields[0]
            .trim()
            .parse()
            .with_context(|| format!("line {}: bad degree", lineno + 1))?;
        let need = 2 * k as usize + 1;
        if fields.len() != 1 + 2 * need {
            bail!(
                "line {}: degree {k} needs {} complex entries ({} numbers), got {}",
                lineno + 1,
                need,
                2 * need,
                fields.len() - 1
            );
        }
        let mut v = nalgebra::DVector::from_element(need, Complex64::default());
        for i in 0..need {
            let re: f64 = fields[1 + 2 * i].trim().parse()?;
            let im: f64 = fields[2 + 2 * i].trim().parse()?;
            v[i] = Complex64::new(re, im);
        }
        by_degree.insert(k, v);
    }
    let mut out = Vec::new();
    for k in 0..=band {
        match by_degree.remove(&k) {
            Some(v) => out.push(v),
            None if k == 0 => out.push(nalgebra::DVector::from_element(1, Complex64::new(1.0, 0.0))),
            None => bail!("weight file is missing degree {k}"),
        }
    }
    Ok(out)
}

/// The figure presets, pinning every caption constant.
pub fn preset_config(name: &str) -> anyhow::Result<RunConfig> {
    let config = match name {
        "fig1" => RunConfig {
            geometry: GeometryName::Torus,
            bandlimit: 32,
            seed: 0,
            input: default_input(),
            family: FamilyConfig {
                kind: FamilyKindName::GroupCentral,
                alpha: AlphaConfig { kind: AlphaKindName::Constant, c: Some(1.0), exponent: None },
                eta: "minus-i-sign".into(),
                eta_phase: Vec::new(),
                w: None,
                lambda_scale: None,
                quotient_p: None,
            },
            scale_grid: ScaleGridConfig::default(),
            rhos: vec![0.005, 0.01, 0.015, 0.025, 0.04, 0.1],
            preset: Some("fig1".into()),
        },
        "fig2" => RunConfig {
            geometry: GeometryName::S3,
            bandlimit: 128,
            seed: 0,
            input: default_input(),
            family: FamilyConfig {
                kind: FamilyKindName::GroupCentral,
                // the caption pins α(ρ) ~ ρ^{-1}; the proportionality
                // constant is taken as 1
                alpha: AlphaConfig {
                    kind: AlphaKindName::PowerLaw,
                    c: Some(1.0),
                    exponent: Some(-1.0),
                },
                eta: "identity".into(),
                eta_phase: Vec::new(),
                w: None,
                lambda_scale: None,
                quotient_p: None,
            },
            scale_grid: ScaleGridConfig::default(),
            rhos: vec![0.001, 0.003, 0.005, 0.007, 0.01, 0.02, 0.03],
            preset: Some("fig2".into()),
        },
        "fig3" => RunConfig {
            geometry: GeometryName::S2,
            bandlimit: 24,
            seed: 0,
            input: default_input(),
            family: FamilyConfig {
                kind: FamilyKindName::Nonzonal,
                alpha: AlphaConfig {
                    kind: AlphaKindName::PowerLaw,
                    c: Some(1.0),
                    exponent: Some(-3.0),
                },
                eta: "identity".into(),
                eta_phase: Vec::new(),
                w: Some("equidistributed".into()),
                lambda_scale: None,
                quotient_p: None,
            },
            scale_grid: ScaleGridConfig::default(),
            rhos: vec![0.15],
            preset: Some("fig3".into()),
        },
        other => bail!("unknown preset '{other}' (expected fig1|fig2|fig3)"),
    };
    Ok(config)
}
