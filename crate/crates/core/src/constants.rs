//! Geometric constants and eigenvalue conventions.
//!
//! Groups carry probability Haar measure; `S²` carries Lebesgue measure of
//! total area 4π (the normalization under which the spherical harmonics are
//! orthonormal). The bridge constants between the two conventions live here.

use std::f64::consts::PI;

/// Circumference of the unit circle, |S¹| = 2π.
pub const AREA_S1: f64 = 2.0 * PI;

/// Area of the unit 2-sphere, |S²| = 4π.
pub const AREA_S2: f64 = 4.0 * PI;

/// Volume of the unit 3-sphere, |S³| = 2π².
pub const AREA_S3: f64 = 2.0 * PI * PI;

/// Surface measure of the unit sphere `Sⁿ ⊂ ℝⁿ⁺¹`.
pub fn sphere_area(n: u32) -> f64 {
    // |Sⁿ| = 2 π^{(n+1)/2} / Γ((n+1)/2), evaluated via the recurrence
    // |Sⁿ| = 2π |Sⁿ⁻²| / (n-1) seeded with |S⁰| = 2, |S¹| = 2π.
    match n {
        0 => 2.0,
        1 => AREA_S1,
        _ => 2.0 * PI * sphere_area(n - 2) / (n - 1) as f64,
    }
}

/// Laplacian eigenvalue λ_k² = 4π²k² on the torus with coordinate
/// z = e^{2πiθ}.
pub fn torus_lambda_sq(k: i64) -> f64 {
    4.0 * PI * PI * (k * k) as f64
}

/// Laplacian eigenvalue λ_n² = (2π²)^{2/3} n(n+2) on `S³` with probability
/// Haar measure.
pub fn s3_lambda_sq(n: u32) -> f64 {
    AREA_S3.powf(2.0 / 3.0) * (n as f64) * (n as f64 + 2.0)
}

/// Default eigenvalue λ_k² = k(k+1) for the class-1 representations of
/// SO(3); any positive increasing sequence yields a valid transform, so a
/// user multiplier may be applied on top of this.
pub fn so3_lambda_sq(k: u32) -> f64 {
    (k as f64) * (k as f64 + 1.0)
}

/// Dimension d_k(n) of the space of degree-k spherical harmonics on `Sⁿ`.
pub fn harmonic_dim(k: u32, n: u32) -> u64 {
    if k == 0 {
        return 1;
    }
    binomial(n + k, n) - binomial(n + k - 2, n)
}

/// Gegenbauer value at the right endpoint, C_k^{(n-1)/2}(1) = binom(n+k-2, k).
pub fn gegenbauer_at_one(k: u32, n: u32) -> u64 {
    binomial(n + k - 2, k)
}

/// Binomial coefficient as u64; exact for the small arguments used here.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_areas() {
        assert!((sphere_area(1) - 2.0 * PI).abs() < 1e-14);
        assert!((sphere_area(2) - 4.0 * PI).abs() < 1e-14);
        assert!((sphere_area(3) - 2.0 * PI * PI).abs() < 1e-13);
    }

    #[test]
    fn harmonic_dims() {
        // d_k(2) = 2k+1 and d_n(3) = (n+1)².
        for k in 0..10u32 {
            assert_eq!(harmonic_dim(k, 2), (2 * k + 1) as u64);
            assert_eq!(harmonic_dim(k, 3), ((k + 1) * (k + 1)) as u64);
        }
    }

    #[test]
    fn gegenbauer_endpoint() {
        // n = 2: C_k^{1/2}(1) = 1; n = 3: C_k^1(1) = k+1.
        for k in 0..8u32 {
            assert_eq!(gegenbauer_at_one(k, 2), 1);
            assert_eq!(gegenbauer_at_one(k, 3), (k + 1) as u64);
        }
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }
}
