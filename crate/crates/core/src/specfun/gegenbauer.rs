//! Gegenbauer (ultraspherical) polynomials.

use crate::constants::{gegenbauer_at_one, harmonic_dim, sphere_area};
use crate::error::{CoreError, Result};

/// Evaluate the Gegenbauer polynomial C_k^ν(t).
///
/// Uses the forward recurrence
/// `k C_k = 2t(k+ν-1) C_{k-1} - (k+2ν-2) C_{k-2}` with C_0 = 1 and
/// C_1 = 2νt. Arguments with |t| ≤ 1 + 1e-12 are clamped to [-1, 1].
///
/// Special cases: ν = 1/2 gives the Legendre polynomials, ν = 1 the
/// Chebyshev polynomials of the second kind.
pub fn gegenbauer(nu: f64, k: u32, t: f64) -> Result<f64> {
    if !(nu > 0.0) {
        return Err(CoreError::domain(format!("gegenbauer: order nu = {nu} must be > 0")));
    }
    if t.abs() > 1.0 + 1e-12 {
        return Err(CoreError::domain(format!(
            "gegenbauer: argument t = {t} outside [-1, 1]"
        )));
    }
    let t = t.clamp(-1.0, 1.0);
    Ok(gegenbauer_unchecked(nu, k, t))
}

/// Recurrence core without argument validation; `t` must already lie in
/// [-1, 1].
pub(crate) fn gegenbauer_unchecked(nu: f64, k: u32, t: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * nu * t;
    for j in 2..=k {
        let jf = j as f64;
        let next = (2.0 * t * (jf + nu - 1.0) * cur - (jf + 2.0 * nu - 2.0) * prev) / jf;
        prev = cur;
        cur = next;
    }
    cur
}

/// Weighted L² normalization of the Gegenbauer polynomials:
///
/// `|S^{n-1}| ∫_{-1}^{1} [C_k^{(n-1)/2}(t)]² (1-t²)^{n/2-1} dt`
///
/// evaluated through the closed form `[C_k^{(n-1)/2}(1)]² |Sⁿ| / d_k(n)`.
pub fn gegenbauer_norm_constant(k: u32, n: u32) -> Result<f64> {
    if n < 2 {
        return Err(CoreError::domain(format!(
            "gegenbauer_norm_constant: sphere dimension n = {n} must be >= 2"
        )));
    }
    let c1 = gegenbauer_at_one(k, n) as f64;
    Ok(c1 * c1 * sphere_area(n) / harmonic_dim(k, n) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad1d::{gauss_chebyshev_u, gauss_legendre};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // Hand-expanded polynomials for ν ∈ {1/2, 1, 3/2}, degree ≤ 6.
    // C^{3/2}_k = P'_{k+1} in terms of the Legendre coefficients.
    fn explicit(nu: f64, k: u32, t: f64) -> f64 {
        let t2 = t * t;
        if nu == 0.5 {
            match k {
                0 => 1.0,
                1 => t,
                2 => (3.0 * t2 - 1.0) / 2.0,
                3 => (5.0 * t2 - 3.0) * t / 2.0,
                4 => ((35.0 * t2 - 30.0) * t2 + 3.0) / 8.0,
                5 => ((63.0 * t2 - 70.0) * t2 + 15.0) * t / 8.0,
                6 => (((231.0 * t2 - 315.0) * t2 + 105.0) * t2 - 5.0) / 16.0,
                _ => unreachable!(),
            }
        } else if nu == 1.0 {
            match k {
                0 => 1.0,
                1 => 2.0 * t,
                2 => 4.0 * t2 - 1.0,
                3 => (8.0 * t2 - 4.0) * t,
                4 => (16.0 * t2 - 12.0) * t2 + 1.0,
                5 => ((32.0 * t2 - 32.0) * t2 + 6.0) * t,
                6 => ((64.0 * t2 - 80.0) * t2 + 24.0) * t2 - 1.0,
                _ => unreachable!(),
            }
        } else {
            match k {
                0 => 1.0,
                1 => 3.0 * t,
                2 => (15.0 * t2 - 3.0) / 2.0,
                3 => (35.0 * t2 - 15.0) * t / 2.0,
                4 => ((315.0 * t2 - 210.0) * t2 + 15.0) / 8.0,
                5 => ((693.0 * t2 - 630.0) * t2 + 105.0) * t / 8.0,
                6 => (((3003.0 * t2 - 3465.0) * t2 + 945.0) * t2 - 35.0) / 16.0,
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn frozen_values() {
        // C_3^1(1) = 4 (= d_3 on S³), C_0 ≡ 1, and Legendre P_2(0.2) = -0.44.
        assert_eq!(gegenbauer(1.0, 3, 1.0).unwrap(), 4.0);
        assert_eq!(gegenbauer(2.5, 0, 0.37).unwrap(), 1.0);
        assert!((gegenbauer(0.5, 2, 0.2).unwrap() - (-0.44)).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(gegenbauer(0.0, 1, 0.5).is_err());
        assert!(gegenbauer(-1.0, 1, 0.5).is_err());
        assert!(gegenbauer(1.0, 1, 1.1).is_err());
        // values just past 1 are clamped
        assert_eq!(gegenbauer(1.0, 1, 1.0 + 5e-13).unwrap(), 2.0);
    }

    #[test]
    fn recurrence_matches_explicit_polynomials() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let t: f64 = rng.gen_range(-1.0..1.0);
            for &nu in &[0.5, 1.0, 1.5] {
                for k in 0..=6 {
                    let got = gegenbauer(nu, k, t).unwrap();
                    let want = explicit(nu, k, t);
                    assert!(
                        (got - want).abs() < 1e-12,
                        "nu={nu} k={k} t={t}: {got} vs {want}"
                    );
                }
            }
        }
    }

    #[test]
    fn endpoint_bound_and_parity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &nu in &[0.5, 1.0, 1.5, 2.5] {
            for k in 0..=12u32 {
                let at_one = gegenbauer(nu, k, 1.0).unwrap();
                for _ in 0..20 {
                    let t: f64 = rng.gen_range(-1.0..1.0);
                    let v = gegenbauer(nu, k, t).unwrap();
                    assert!(v.abs() <= at_one.abs() + 1e-12);
                    let mirrored = gegenbauer(nu, k, -t).unwrap();
                    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                    assert!((mirrored - sign * v).abs() < 1e-12 * at_one.max(1.0));
                }
            }
        }
    }

    #[test]
    fn orthogonality_against_weight() {
        // Integer ν - 1/2: plain Gauss-Legendre is exact.
        for &nu in &[0.5, 1.5] {
            let rule = gauss_legendre(128);
            for j in 0..=10u32 {
                for k in 0..=10u32 {
                    if j == k {
                        continue;
                    }
                    let val = rule.integrate(|t| {
                        let w = (1.0 - t * t).powf(nu - 0.5);
                        gegenbauer(nu, j, t).unwrap() * gegenbauer(nu, k, t).unwrap() * w
                    });
                    assert!(val.abs() < 1e-10, "nu={nu} j={j} k={k}: {val}");
                }
            }
        }
        // ν = 1 carries the weight √(1-t²); the Chebyshev-U rule is the
        // exact one there (a Legendre rule only converges algebraically).
        let rule = gauss_chebyshev_u(64);
        for j in 0..=10u32 {
            for k in 0..=10u32 {
                if j == k {
                    continue;
                }
                let val = rule.integrate(|t| {
                    gegenbauer(1.0, j, t).unwrap() * gegenbauer(1.0, k, t).unwrap()
                });
                assert!(val.abs() < 1e-10, "j={j} k={k}: {val}");
            }
        }
    }

    #[test]
    fn norm_constant_closed_form() {
        use std::f64::consts::PI;
        // n=2, k=0: |S²| = 4π. n=3, k=1: 4·2π²/4 = 2π². n=2, k=3: 4π/7.
        assert!((gegenbauer_norm_constant(0, 2).unwrap() - 4.0 * PI).abs() < 1e-12);
        assert!((gegenbauer_norm_constant(1, 3).unwrap() - 2.0 * PI * PI).abs() < 1e-12);
        assert!((gegenbauer_norm_constant(3, 2).unwrap() - 4.0 * PI / 7.0).abs() < 1e-12);
        assert!(gegenbauer_norm_constant(1, 1).is_err());
    }

    #[test]
    fn norm_constant_matches_quadrature() {
        use std::f64::consts::PI;
        // Independent integration oracle, 64-node Gauss-Legendre.
        // n = 2: weight (1-t²)^0; |S^{n-1}| = |S¹| = 2π.
        let rule = gauss_legendre(64);
        for k in 0..=6u32 {
            let integral = rule.integrate(|t| {
                let c = gegenbauer(0.5, k, t).unwrap();
                c * c
            });
            let got = 2.0 * PI * integral;
            let want = gegenbauer_norm_constant(k, 2).unwrap();
            assert!((got - want).abs() < 1e-10, "k={k}: {got} vs {want}");
        }
        // n = 3: weight √(1-t²) via the Chebyshev-U rule; |S²| = 4π.
        let rule = gauss_chebyshev_u(64);
        for k in 0..=6u32 {
            let integral = rule.integrate(|t| {
                let c = gegenbauer(1.0, k, t).unwrap();
                c * c
            });
            let got = 4.0 * PI * integral;
            let want = gegenbauer_norm_constant(k, 3).unwrap();
            assert!((got - want).abs() < 1e-9, "k={k}: {got} vs {want}");
        }
    }
}
