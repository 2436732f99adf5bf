//! Funk–Hecke multiplier of a zonal kernel.

use crate::constants::{gegenbauer_at_one, sphere_area};
use crate::error::{CoreError, Result};
use crate::quad1d::Rule1d;
use crate::specfun::gegenbauer;

/// Eigenvalue by which convolution with the zonal kernel f(ξᵀη) acts on
/// degree-k harmonics of Sⁿ:
///
/// ```text
/// μ_k = |S^{n-1}| / C_k^{(n-1)/2}(1) · ∫_{-1}^{1} f(t) C_k^{(n-1)/2}(t) (1-t²)^{n/2-1} dt
/// ```
///
/// `f_at_nodes` holds f sampled at `rule.nodes` (Gauss–Legendre).
pub fn funk_hecke(f_at_nodes: &[f64], rule: &Rule1d, k: u32, n: u32) -> Result<f64> {
    if n < 2 {
        return Err(CoreError::domain("funk_hecke: need sphere dimension n >= 2"));
    }
    if f_at_nodes.len() != rule.nodes.len() {
        return Err(CoreError::GridMismatch(format!(
            "{} samples for a {}-node rule",
            f_at_nodes.len(),
            rule.nodes.len()
        )));
    }
    let nu = (n as f64 - 1.0) / 2.0;
    let weight_pow = n as f64 / 2.0 - 1.0;
    let mut integral = 0.0;
    for ((&t, &w), &f) in rule.nodes.iter().zip(&rule.weights).zip(f_at_nodes) {
        let c = gegenbauer(nu, k, t)?;
        let wfac = if weight_pow == 0.0 {
            1.0
        } else {
            (1.0 - t * t).powf(weight_pow)
        };
        integral += w * f * c * wfac;
    }
    Ok(sphere_area(n - 1) / gegenbauer_at_one(k, n) as f64 * integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grids::{sphere2_grid, QuadratureGrid, SpherePoint};
    use crate::quad1d::gauss_legendre;
    use crate::specfun::sph_harm_all;
    use crate::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn constant_kernel() {
        let rule = gauss_legendre(32);
        let ones = vec![1.0; 32];
        // total area for k = 0 on S²
        let mu0 = funk_hecke(&ones, &rule, 0, 2).unwrap();
        assert!((mu0 - 4.0 * PI).abs() < 1e-12);
        // orthogonality to constants for k >= 1
        for k in 1..=6u32 {
            assert!(funk_hecke(&ones, &rule, k, 2).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn gegenbauer_kernel_hits_norm_constant() {
        // f = C_2^{1/2}: μ_2 = |S¹| ∫ [C_2^{1/2}]² = 2π · 2/5 = 4π/5.
        let rule = gauss_legendre(32);
        let samples: Vec<f64> = rule
            .nodes
            .iter()
            .map(|&t| gegenbauer(0.5, 2, t).unwrap())
            .collect();
        let mu = funk_hecke(&samples, &rule, 2, 2).unwrap();
        assert!((mu - 4.0 * PI / 5.0).abs() < 1e-12, "{mu}");
    }

    #[test]
    fn matches_direct_sphere_quadrature() {
        // ∫ f(ξᵀη) 𝒴_k^i(ξ) dξ = μ_k 𝒴_k^i(η) for a polynomial kernel.
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let band = 5u32;
        let grid = sphere2_grid(band + 3).unwrap();
        let rule = gauss_legendre(64);
        let coef: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let f = |t: f64| coef[0] + coef[1] * t + coef[2] * t * t + coef[3] * t * t * t;
        let f_nodes: Vec<f64> = rule.nodes.iter().map(|&t| f(t)).collect();

        let eta = SpherePoint::from_lat_lon(rng.gen_range(-1.0..1.0), rng.gen_range(-PI..PI));
        for k in 0..=3u32 {
            let mu = funk_hecke(&f_nodes, &rule, k, 2).unwrap();
            for j in -(k as i32)..=(k as i32) {
                let mut lhs = Complex64::default();
                for (p, &w) in grid.nodes().iter().zip(grid.weights()) {
                    let y = sph_harm_all(k, p.latitude_sine(), p.longitude())[k as usize]
                        [(k as i32 + j) as usize];
                    lhs += w * f(p.dot(&eta)) * y;
                }
                let rhs = mu
                    * sph_harm_all(k, eta.latitude_sine(), eta.longitude())[k as usize]
                        [(k as i32 + j) as usize];
                assert!((lhs - rhs).norm() < 1e-9, "k={k} j={j}: {lhs} vs {rhs}");
            }
        }
    }
}
