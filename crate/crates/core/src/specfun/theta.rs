//! Jacobi θ₃ and its θ-derivative.

use crate::error::{CoreError, Result};
use std::f64::consts::PI;

const MAX_TERMS: u32 = 4096;

fn check_nome(q: f64) -> Result<()> {
    if !(0.0..1.0).contains(&q) {
        return Err(CoreError::domain(format!(
            "theta3: nome q = {q} outside [0, 1)"
        )));
    }
    Ok(())
}

/// Jacobi θ₃(u, q) = 1 + 2 Σ_{k≥1} q^{k²} cos(2ku).
///
/// The series is truncated at the first K with 2 q^{K²} / (1-q) < `tail_tol`
/// (a geometric majorant of the discarded tail), so the result is accurate
/// to `tail_tol` in absolute value.
pub fn theta3(u: f64, q: f64, tail_tol: f64) -> Result<f64> {
    check_nome(q)?;
    if q == 0.0 {
        return Ok(1.0);
    }
    let mut sum = 1.0;
    let mut k = 1u32;
    loop {
        let qk = q.powi((k * k) as i32);
        if 2.0 * qk / (1.0 - q) < tail_tol {
            break;
        }
        sum += 2.0 * qk * (2.0 * k as f64 * u).cos();
        k += 1;
        if k > MAX_TERMS {
            return Err(CoreError::Truncation(format!(
                "theta3: series did not reach tolerance {tail_tol} within {MAX_TERMS} terms"
            )));
        }
    }
    Ok(sum)
}

/// Derivative of θ₃(πθ, q) with respect to θ:
/// ∂_θ θ₃(πθ, q) = -4π Σ_{k≥1} k q^{k²} sin(2kπθ).
///
/// Antisymmetric in θ. The discarded tail is bounded by
/// 4π q^{K²} (K/(1-q) + q/(1-q)²).
pub fn theta3_dtheta(theta: f64, q: f64, tail_tol: f64) -> Result<f64> {
    check_nome(q)?;
    if q == 0.0 {
        return Ok(0.0);
    }
    let mut sum = 0.0;
    let mut k = 1u32;
    loop {
        let kf = k as f64;
        let qk = q.powi((k * k) as i32);
        let tail = 4.0 * PI * qk * (kf / (1.0 - q) + q / ((1.0 - q) * (1.0 - q)));
        if tail < tail_tol {
            break;
        }
        sum -= 4.0 * PI * kf * qk * (2.0 * kf * PI * theta).sin();
        k += 1;
        if k > MAX_TERMS {
            return Err(CoreError::Truncation(format!(
                "theta3_dtheta: series did not reach tolerance {tail_tol} within {MAX_TERMS} terms"
            )));
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-14;

    /// Direct 50-term summation, independent of the truncation logic.
    fn theta3_oracle(u: f64, q: f64) -> f64 {
        let mut s = 1.0;
        for k in 1..=50 {
            s += 2.0 * q.powi(k * k) * (2.0 * k as f64 * u).cos();
        }
        s
    }

    #[test]
    fn zero_nome() {
        assert_eq!(theta3(0.7, 0.0, TOL).unwrap(), 1.0);
        assert_eq!(theta3_dtheta(0.3, 0.0, TOL).unwrap(), 0.0);
    }

    #[test]
    fn domain() {
        assert!(theta3(0.0, 1.0, TOL).is_err());
        assert!(theta3(0.0, -0.1, TOL).is_err());
        assert!(theta3_dtheta(0.0, 1.5, TOL).is_err());
    }

    #[test]
    fn against_direct_summation() {
        let q = (-4.0 * PI * PI * 0.1f64).exp();
        let got = theta3(0.0, q, TOL).unwrap();
        let want = theta3_oracle(0.0, q);
        assert!((got - want).abs() < 1e-13, "{got} vs {want}");
        // value = 1 + 2 Σ e^{-4π²·0.1·k²}
        assert!((got - 1.0385928831).abs() < 1e-9, "got {got}");

        for &(u, q) in &[(0.3, 0.25), (1.2, 0.7), (-0.4, 0.5), (PI / 3.0, 0.9)] {
            let got = theta3(u, q, TOL).unwrap();
            assert!((got - theta3_oracle(u, q)).abs() < 1e-12);
        }
    }

    #[test]
    fn theta4_cross_check() {
        // θ₃(π/2, q) = θ₄(0, q) = 1 + 2 Σ (-1)^k q^{k²}.
        let q: f64 = 0.5;
        let mut theta4 = 1.0;
        for k in 1..=50 {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            theta4 += 2.0 * sign * q.powi(k * k);
        }
        let got = theta3(PI / 2.0, q, TOL).unwrap();
        assert!((got - theta4).abs() < 1e-13, "{got} vs {theta4}");
    }

    #[test]
    fn periodicity_and_parity() {
        let q = 0.37;
        for &u in &[0.0, 0.21, 1.4, 2.9] {
            let v = theta3(u, q, TOL).unwrap();
            assert!((theta3(u + PI, q, TOL).unwrap() - v).abs() < 1e-13);
            assert!((theta3(-u, q, TOL).unwrap() - v).abs() < 1e-13);
        }
    }

    #[test]
    fn heat_identity_bilateral_sum() {
        // θ₃(πθ, e^{-4π²t}) = Σ_{k∈ℤ} e^{-4π²k²t} e^{2πikθ}.
        let t = 0.05;
        let q = (-4.0 * PI * PI * t).exp();
        for &theta in &[0.0, 0.13, 0.5, -0.72] {
            let mut bilateral = 1.0;
            for k in 1..=50 {
                let kf = k as f64;
                bilateral += 2.0 * (-4.0 * PI * PI * kf * kf * t).exp()
                    * (2.0 * PI * kf * theta).cos();
            }
            let got = theta3(PI * theta, q, TOL).unwrap();
            assert!((got - bilateral).abs() < TOL * 10.0);
        }
    }

    #[test]
    fn derivative_sign_and_parity() {
        assert_eq!(theta3_dtheta(0.0, 0.3, TOL).unwrap(), 0.0);
        let v = theta3_dtheta(0.1, 0.2, TOL).unwrap();
        assert!((theta3_dtheta(-0.1, 0.2, TOL).unwrap() + v).abs() < 1e-13);
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let q = (-2.0 * PI * PI * 0.01f64).exp();
        let h = 1e-6;
        for &theta in &[0.25, 0.03, -0.4] {
            let fd = (theta3(PI * (theta + h), q, TOL).unwrap()
                - theta3(PI * (theta - h), q, TOL).unwrap())
                / (2.0 * h);
            let got = theta3_dtheta(theta, q, TOL).unwrap();
            assert!((got - fd).abs() < 1e-6, "theta={theta}: {got} vs {fd}");
        }
    }
}
