//! Spherical harmonics on S².
//!
//! The basis is indexed the conventional way, 𝒴_k^j with degree k ≥ 0 and
//! order -k ≤ j ≤ k, in the latitude-sine coordinate t = ξ₀ᵀξ and a
//! longitude θ ∈ [-π, π]:
//!
//! ```text
//! 𝒴_k^j(t, θ) = N_{k,|j|} · C_{k-|j|}^{|j|+1/2}(t) · (1-t²)^{|j|/2} · e^{ijθ}
//! ```
//!
//! with N chosen so the family is orthonormal against Lebesgue measure
//! (area 4π). There is no Condon–Shortley phase, hence
//! 𝒴_k^{-j} = conj(𝒴_k^j) and the zonal member 𝒴_k^0 is
//! √((2k+1)/4π)·C_k^{1/2}(t).

use super::gegenbauer::gegenbauer_unchecked;
use super::{ln_double_factorial_odd, ln_factorial};
use crate::error::{CoreError, Result};
use crate::Complex64;
use std::f64::consts::PI;

/// Index (k, j) of a spherical harmonic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphericalHarmonicIndex {
    pub degree: u32,
    pub order: i32,
}

impl SphericalHarmonicIndex {
    pub fn new(degree: u32, order: i32) -> Result<Self> {
        if order.unsigned_abs() > degree {
            return Err(CoreError::domain(format!(
                "spherical harmonic order {order} exceeds degree {degree}"
            )));
        }
        Ok(Self { degree, order })
    }
}

/// Orthonormality constant N_{k,m} (m = |j| ≥ 0), computed in log space to
/// stay finite at large degree.
fn norm_constant(k: u32, m: u32) -> f64 {
    let ln = ((2 * k + 1) as f64).ln() + ln_factorial(k - m) + 2.0 * ln_double_factorial_odd(m)
        - (4.0 * PI).ln()
        - ln_factorial(k + m);
    (0.5 * ln).exp()
}

/// Evaluate a single spherical harmonic 𝒴_k^j at latitude-sine t and
/// longitude θ.
pub fn sph_harm(idx: SphericalHarmonicIndex, t: f64, theta: f64) -> Result<Complex64> {
    if t.abs() > 1.0 + 1e-12 {
        return Err(CoreError::domain(format!(
            "sph_harm: latitude-sine t = {t} outside [-1, 1]"
        )));
    }
    let t = t.clamp(-1.0, 1.0);
    let m = idx.order.unsigned_abs();
    let c = gegenbauer_unchecked(m as f64 + 0.5, idx.degree - m, t);
    let assoc = (1.0 - t * t).powf(m as f64 / 2.0);
    let phase = Complex64::from_polar(1.0, idx.order as f64 * theta);
    Ok(norm_constant(idx.degree, m) * c * assoc * phase)
}

/// Evaluate all 𝒴_k^j for k ≤ bandlimit at one point; result\[k\]\[(k+j)\]
/// holds 𝒴_k^j.
pub fn sph_harm_all(bandlimit: u32, t: f64, theta: f64) -> Vec<Vec<Complex64>> {
    SphericalHarmonics::new(bandlimit).eval_all(t, theta)
}

/// Batch evaluator with cached normalization constants.
#[derive(Debug, Clone)]
pub struct SphericalHarmonics {
    bandlimit: u32,
    /// norms[m][d] = N_{d+m, m}
    norms: Vec<Vec<f64>>,
}

impl SphericalHarmonics {
    pub fn new(bandlimit: u32) -> Self {
        let norms = (0..=bandlimit)
            .map(|m| {
                (0..=(bandlimit - m))
                    .map(|d| norm_constant(d + m, m))
                    .collect()
            })
            .collect();
        Self { bandlimit, norms }
    }

    pub fn bandlimit(&self) -> u32 {
        self.bandlimit
    }

    /// All harmonics at one point: out\[k\]\[k+j\] = 𝒴_k^j(t, θ).
    pub fn eval_all(&self, t: f64, theta: f64) -> Vec<Vec<Complex64>> {
        let t = t.clamp(-1.0, 1.0);
        let band = self.bandlimit as usize;
        let mut out: Vec<Vec<Complex64>> =
            (0..=band).map(|k| vec![Complex64::default(); 2 * k + 1]).collect();
        let sin_lat = (1.0 - t * t).max(0.0).sqrt();
        let mut assoc = 1.0; // (1-t²)^{m/2}
        for m in 0..=band {
            let nu = m as f64 + 0.5;
            // Gegenbauer recurrence across degrees for this order.
            let mut prev = 0.0;
            let mut cur = 1.0;
            for d in 0..=(band - m) {
                if d > 0 {
                    let df = d as f64;
                    let next = if d == 1 {
                        2.0 * nu * t
                    } else {
                        (2.0 * t * (df + nu - 1.0) * cur - (df + 2.0 * nu - 2.0) * prev) / df
                    };
                    prev = cur;
                    cur = next;
                }
                let k = d + m;
                let radial = self.norms[m][d] * cur * assoc;
                let phase = Complex64::from_polar(1.0, m as f64 * theta);
                out[k][k + m] = radial * phase;
                if m > 0 {
                    out[k][k - m] = radial * phase.conj();
                }
            }
            assoc *= sin_lat;
        }
        out
    }
}

/// Convenience wrapper evaluating one harmonic from raw indices.
pub fn sph_harm_point(degree: u32, order: i32, t: f64, theta: f64) -> Result<Complex64> {
    sph_harm(SphericalHarmonicIndex::new(degree, order)?, t, theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad1d::gauss_legendre;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn idx(k: u32, j: i32) -> SphericalHarmonicIndex {
        SphericalHarmonicIndex::new(k, j).unwrap()
    }

    #[test]
    fn constant_harmonic() {
        let v = sph_harm(idx(0, 0), 0.3, 1.2).unwrap();
        assert!((v.re - (1.0 / (4.0 * PI)).sqrt()).abs() < 1e-14);
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn zonal_at_pole() {
        let v = sph_harm(idx(1, 0), 1.0, 0.0).unwrap();
        assert!((v.re - (3.0 / (4.0 * PI)).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn invalid_index_and_argument() {
        assert!(SphericalHarmonicIndex::new(2, 3).is_err());
        assert!(sph_harm(idx(2, 1), 1.5, 0.0).is_err());
    }

    #[test]
    fn conjugation_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let t: f64 = rng.gen_range(-1.0..1.0);
            let th: f64 = rng.gen_range(-PI..PI);
            for k in 0..=5u32 {
                for j in 1..=k as i32 {
                    let plus = sph_harm(idx(k, j), t, th).unwrap();
                    let minus = sph_harm(idx(k, -j), t, th).unwrap();
                    assert!((plus.conj() - minus).norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn batch_matches_single() {
        let table = SphericalHarmonics::new(6);
        let (t, th) = (-0.42, 2.1);
        let all = table.eval_all(t, th);
        for k in 0..=6u32 {
            for j in -(k as i32)..=(k as i32) {
                let got = all[k as usize][(k as i32 + j) as usize];
                let want = sph_harm(idx(k, j), t, th).unwrap();
                assert!((got - want).norm() < 1e-13, "k={k} j={j}");
            }
        }
    }

    /// Quadrature orthonormality oracle: Gauss-Legendre in t × uniform in θ
    /// integrates harmonics of degree ≤ 2L exactly against dξ = dt dθ.
    #[test]
    fn orthonormal_on_quadrature() {
        let band = 4u32;
        let rule = gauss_legendre(band as usize + 1);
        let n_theta = 2 * band as usize + 1;
        let mut gram = vec![vec![Complex64::default(); 25]; 25];
        let flat = |k: u32, j: i32| -> usize { (k * k) as usize + (k as i32 + j) as usize };
        for (gt, gw) in rule.nodes.iter().zip(&rule.weights) {
            for it in 0..n_theta {
                let th = 2.0 * PI * it as f64 / n_theta as f64 - PI;
                let w = gw * 2.0 * PI / n_theta as f64;
                let all = sph_harm_all(band, *gt, th);
                for k1 in 0..=band {
                    for j1 in -(k1 as i32)..=(k1 as i32) {
                        for k2 in 0..=band {
                            for j2 in -(k2 as i32)..=(k2 as i32) {
                                let a = all[k1 as usize][(k1 as i32 + j1) as usize];
                                let b = all[k2 as usize][(k2 as i32 + j2) as usize];
                                gram[flat(k1, j1)][flat(k2, j2)] += w * a * b.conj();
                            }
                        }
                    }
                }
            }
        }
        for r in 0..25 {
            for c in 0..25 {
                let want = if r == c { 1.0 } else { 0.0 };
                let err = (gram[r][c] - want).norm();
                assert!(err < 1e-10, "gram[{r}][{c}] = {:?}", gram[r][c]);
            }
        }
    }

    /// Addition theorem: C_k^{1/2}(ξᵀη)/C_k^{1/2}(1) equals
    /// (4π/(2k+1)) Σ_j 𝒴_k^j(ξ) conj(𝒴_k^j(η)).
    #[test]
    fn addition_theorem() {
        use crate::specfun::gegenbauer;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let rand_point = |rng: &mut ChaCha8Rng| {
            let t: f64 = rng.gen_range(-1.0..1.0);
            let th: f64 = rng.gen_range(-PI..PI);
            (t, th)
        };
        let cart = |t: f64, th: f64| {
            let s = (1.0 - t * t).sqrt();
            [s * th.cos(), s * th.sin(), t]
        };
        for _ in 0..50 {
            let (t1, th1) = rand_point(&mut rng);
            let (t2, th2) = rand_point(&mut rng);
            let (a, b) = (cart(t1, th1), cart(t2, th2));
            let dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
            for k in 0..=8u32 {
                let lhs = gegenbauer(0.5, k, dot.clamp(-1.0, 1.0)).unwrap();
                let mut sum = Complex64::default();
                for j in -(k as i32)..=(k as i32) {
                    sum += sph_harm(idx(k, j), t1, th1).unwrap()
                        * sph_harm(idx(k, j), t2, th2).unwrap().conj();
                }
                let rhs = 4.0 * PI / (2.0 * k as f64 + 1.0) * sum;
                assert!((lhs - rhs.re).abs() < 1e-10, "k={k}: {lhs} vs {rhs}");
                assert!(rhs.im.abs() < 1e-10);
            }
        }
    }
}
