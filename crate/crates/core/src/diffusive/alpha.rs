//! Scale weight functions α(ρ).

use crate::error::{CoreError, Result};
use crate::harmonic::{Geometry, RepIndex};
use serde::{Deserialize, Serialize};

/// Absolute tail bound above which a truncated heat-trace evaluation is
/// refused instead of silently losing accuracy.
const HEAT_TRACE_TAIL_TOL: f64 = 1e-12;

/// The admitted weight shapes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum WeightKind {
    Constant { c: f64 },
    /// α(ρ) = Σ d_π² λ_π² e^{-ρλ_π²} = -∂_ρ p_ρ(1), the negative derivative
    /// of the heat trace, truncated at the band limit with a certified
    /// geometric tail bound.
    HeatTrace,
    PowerLaw { c: f64, exponent: f64 },
}

/// Positive weight α(ρ) on the scale axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightFunction {
    pub kind: WeightKind,
    /// Geometry and band for the heat-trace series; unused otherwise.
    pub geometry: Option<Geometry>,
    pub bandlimit: u32,
}

impl WeightFunction {
    pub fn constant(c: f64) -> Result<Self> {
        if !(c > 0.0) {
            return Err(CoreError::domain(format!("weight constant {c} must be > 0")));
        }
        Ok(Self { kind: WeightKind::Constant { c }, geometry: None, bandlimit: 0 })
    }

    pub fn one() -> Self {
        Self::constant(1.0).expect("1 > 0")
    }

    pub fn power_law(c: f64, exponent: f64) -> Result<Self> {
        if !(c > 0.0) {
            return Err(CoreError::domain(format!("power-law constant {c} must be > 0")));
        }
        Ok(Self { kind: WeightKind::PowerLaw { c, exponent }, geometry: None, bandlimit: 0 })
    }

    pub fn heat_trace(geometry: Geometry, bandlimit: u32) -> Result<Self> {
        if bandlimit < 1 {
            return Err(CoreError::domain("heat trace needs bandlimit >= 1"));
        }
        Ok(Self { kind: WeightKind::HeatTrace, geometry: Some(geometry), bandlimit })
    }

    /// Evaluate α(ρ); ρ must be positive. The heat trace errors when the
    /// certified truncation bound at this ρ exceeds 1e-12.
    pub fn eval(&self, rho: f64) -> Result<f64> {
        if !(rho > 0.0) {
            return Err(CoreError::domain(format!("weight evaluated at rho = {rho} <= 0")));
        }
        match &self.kind {
            WeightKind::Constant { c } => Ok(*c),
            WeightKind::PowerLaw { c, exponent } => Ok(c * rho.powf(*exponent)),
            WeightKind::HeatTrace => {
                let geometry = self.geometry.expect("heat trace carries a geometry");
                let term = |rep: &RepIndex| {
                    let d = rep.dim as f64;
                    d * d * rep.lambda_sq * (-rho * rep.lambda_sq).exp()
                };
                let sum: f64 = RepIndex::all_up_to(geometry, self.bandlimit)
                    .iter()
                    .map(&term)
                    .sum();
                // Tail majorant: terms beyond the band decay at least
                // geometrically once the ratio drops below 1; certify it.
                let t1 = term(&RepIndex::new(geometry, self.bandlimit as i64 + 1)?);
                let t2 = term(&RepIndex::new(geometry, self.bandlimit as i64 + 2)?);
                let multiplicity = if geometry == Geometry::Torus { 2.0 } else { 1.0 };
                if t1 > 0.0 {
                    let q = t2 / t1;
                    if q >= 0.5 {
                        return Err(CoreError::Truncation(format!(
                            "heat trace at rho = {rho}: band {} too small (tail ratio {q:.3})",
                            self.bandlimit
                        )));
                    }
                    let bound = multiplicity * t1 / (1.0 - q);
                    if bound > HEAT_TRACE_TAIL_TOL {
                        return Err(CoreError::Truncation(format!(
                            "heat trace at rho = {rho}: tail bound {bound:.3e} exceeds {HEAT_TRACE_TAIL_TOL:.0e}"
                        )));
                    }
                }
                Ok(sum)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::torus_lambda_sq;

    #[test]
    fn constant_weight() {
        let a = WeightFunction::constant(1.0).unwrap();
        assert_eq!(a.eval(0.37).unwrap(), 1.0);
        assert!(WeightFunction::constant(0.0).is_err());
        assert!(a.eval(0.0).is_err());
    }

    #[test]
    fn power_law_value() {
        // α(ρ) = ρ^{-3} at ρ = 0.15
        let a = WeightFunction::power_law(1.0, -3.0).unwrap();
        let got = a.eval(0.15).unwrap();
        assert!((got - 0.15f64.powi(-3)).abs() < 1e-10);
        assert!((got - 296.2962962962963).abs() < 1e-9);
    }

    #[test]
    fn heat_trace_against_direct_summation() {
        // 200-term bilateral oracle on the torus at ρ = 0.1
        let band = 48u32;
        let a = WeightFunction::heat_trace(Geometry::Torus, band).unwrap();
        let got = a.eval(0.1).unwrap();
        let mut want = 0.0;
        for k in -200i64..=200 {
            let l2 = torus_lambda_sq(k);
            want += l2 * (-0.1 * l2).exp();
        }
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }

    #[test]
    fn heat_trace_refuses_unsound_truncation() {
        let a = WeightFunction::heat_trace(Geometry::Torus, 4).unwrap();
        // at tiny ρ the 4-term band cannot certify the 1e-12 tail
        match a.eval(1e-4) {
            Err(CoreError::Truncation(_)) => {}
            other => panic!("expected truncation refusal, got {other:?}"),
        }
        // at large ρ it is certified
        assert!(a.eval(1.0).is_ok());
    }
}
