//! Scalar special functions.
//!
//! Everything upstream (grids, Fourier layer, wavelet families) consumes the
//! three function families implemented here:
//!
//! * Gegenbauer (ultraspherical) polynomials C_k^ν evaluated by the
//!   three-term recurrence, stable on [-1, 1] for the orders used at desk
//!   band limits;
//! * Jacobi's θ₃ function and its θ-derivative with certified series
//!   truncation;
//! * spherical harmonics on S², orthonormal with respect to Lebesgue
//!   measure (total area 4π), without the Condon–Shortley phase.

mod gegenbauer;
mod harmonics;
mod theta;

pub use gegenbauer::{gegenbauer, gegenbauer_norm_constant};
pub use harmonics::{
    sph_harm, sph_harm_all, sph_harm_point, SphericalHarmonicIndex, SphericalHarmonics,
};
pub use theta::{theta3, theta3_dtheta};

/// Natural log of n! accumulated termwise; exact to ~1e-14 relative for the
/// arguments that occur here (n ≤ a few hundred).
pub(crate) fn ln_factorial(n: u32) -> f64 {
    (2..=n as u64).map(|i| (i as f64).ln()).sum()
}

/// Natural log of the odd double factorial (2m-1)!! = 1·3·5···(2m-1).
pub(crate) fn ln_double_factorial_odd(m: u32) -> f64 {
    (1..=m as u64).map(|i| ((2 * i - 1) as f64).ln()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_helpers() {
        assert_eq!(ln_factorial(0), 0.0);
        assert_eq!(ln_factorial(1), 0.0);
        assert!((ln_factorial(5) - 120f64.ln()).abs() < 1e-13);
        // (2·3-1)!! = 15
        assert!((ln_double_factorial_odd(3) - 15f64.ln()).abs() < 1e-13);
    }
}
