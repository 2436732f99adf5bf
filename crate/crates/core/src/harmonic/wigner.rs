//! Class-1 representation matrices of SO(3) and the Fourier transform on
//! the rotation group.
//!
//! The representation acting on the degree-k harmonics is realized
//! concretely: M_k(A) is the matrix of f ↦ f(A⁻¹·) in the adapted
//! orthonormal basis (zonal harmonic first). Matrix entries are obtained
//! by band-exact quadrature of
//!
//! ```text
//! M_k(A)_{ij} = ∫_{S²} 𝒴^{(j)}(A⁻¹ξ) conj(𝒴^{(i)}(ξ)) dξ,
//! ```
//!
//! which is exact because the integrand is a spherical polynomial of
//! degree 2k. For Euler products A = R_γ S_β R_α the z-axis factors are
//! diagonal, M(R_δ) = diag(e^{i j δ}), so only the mid-angle matrices
//! D_k(β) are tabulated per grid node.

use super::coeffs::SpectralCoefficients;
use super::rep::{adapted_order, Geometry};
use crate::error::{CoreError, Result};
use crate::grids::{QuadratureGrid, Rotation3, So3Grid, SpherePoint};
use crate::specfun::SphericalHarmonics;
use crate::Complex64;
use nalgebra::DMatrix;

/// Adapted-basis values of all degrees at one point: out[k][i] = 𝒴^{(i)}
/// of degree k.
fn adapted_values(table: &SphericalHarmonics, p: &SpherePoint) -> Vec<Vec<Complex64>> {
    let all = table.eval_all(p.latitude_sine(), p.longitude());
    (0..=table.bandlimit() as usize)
        .map(|k| {
            (0..2 * k + 1)
                .map(|i| all[k][(k as i32 + adapted_order(i)) as usize])
                .collect()
        })
        .collect()
}

/// Representation matrices M_k(A), k ≤ band, of an arbitrary rotation,
/// synthesized by quadrature.
pub fn wigner_matrices(band: u32, a: &Rotation3) -> Vec<DMatrix<Complex64>> {
    let grid = crate::grids::sphere2_grid(band.max(1)).expect("band >= 1");
    let table = SphericalHarmonics::new(band);
    let a_inv = a.inverse();
    let mut mats: Vec<DMatrix<Complex64>> = (0..=band)
        .map(|k| DMatrix::zeros(2 * k as usize + 1, 2 * k as usize + 1))
        .collect();
    for (p, &w) in grid.nodes().iter().zip(grid.weights()) {
        let here = adapted_values(&table, p);
        let rotated = adapted_values(&table, &a_inv.apply(p));
        for k in 0..=band as usize {
            let d = 2 * k + 1;
            let m = &mut mats[k];
            for i in 0..d {
                let ci = here[k][i].conj() * w;
                for j in 0..d {
                    m[(i, j)] += rotated[k][j] * ci;
                }
            }
        }
    }
    mats
}

/// Tabulated mid-angle matrices for the nodes of an SO(3) grid.
#[derive(Debug, Clone)]
pub struct WignerTables {
    bandlimit: u32,
    beta_nodes: Vec<f64>,
    /// d_beta[ib][k] = M_k(S_β) at the ib-th β node.
    d_beta: Vec<Vec<DMatrix<Complex64>>>,
}

impl WignerTables {
    /// Build the tables for the β nodes of `grid`.
    pub fn new(grid: &So3Grid) -> Self {
        let band = grid.bandlimit();
        let d_beta = grid
            .beta_nodes()
            .iter()
            .map(|&beta| wigner_matrices(band, &Rotation3::s_x(beta)))
            .collect();
        Self {
            bandlimit: band,
            beta_nodes: grid.beta_nodes().to_vec(),
            d_beta,
        }
    }

    pub fn bandlimit(&self) -> u32 {
        self.bandlimit
    }

    pub fn beta_nodes(&self) -> &[f64] {
        &self.beta_nodes
    }

    /// Mid-angle matrix M_k(S_β) at β node `ib`.
    pub fn d_matrix(&self, ib: usize, k: u32) -> &DMatrix<Complex64> {
        &self.d_beta[ib][k as usize]
    }

    /// Full representation matrix M_k(R_γ S_β R_α) at β node `ib`.
    pub fn rep_matrix(&self, k: u32, alpha: f64, ib: usize, gamma: f64) -> DMatrix<Complex64> {
        let d = 2 * k as usize + 1;
        let mid = self.d_matrix(ib, k);
        DMatrix::from_fn(d, d, |i, j| {
            let ji = adapted_order(i) as f64;
            let jj = adapted_order(j) as f64;
            Complex64::from_polar(1.0, ji * gamma) * mid[(i, j)]
                * Complex64::from_polar(1.0, jj * alpha)
        })
    }
}

/// Peter–Weyl forward transform on SO(3): F̂(k) = Σ w_A F(A) M_k(A)*.
pub fn so3_forward(
    grid: &So3Grid,
    tables: &WignerTables,
    samples: &[Complex64],
    bandlimit: u32,
) -> Result<SpectralCoefficients> {
    if samples.len() != grid.len() {
        return Err(CoreError::GridMismatch(format!(
            "{} samples on a {}-node grid",
            samples.len(),
            grid.len()
        )));
    }
    if grid.exact_band() < 2 * bandlimit || tables.bandlimit() < bandlimit {
        return Err(CoreError::BandExceeded {
            have: grid.exact_band(),
            requested: 2 * bandlimit,
        });
    }
    let n_ang = grid.alpha_nodes().len();
    let mut out = SpectralCoefficients::new(Geometry::SO3, bandlimit);
    for k in 0..=bandlimit {
        let d = 2 * k as usize + 1;
        let mut acc = DMatrix::<Complex64>::zeros(d, d);
        for (idx, (&(alpha, _beta, gamma), &w)) in
            grid.euler_nodes().iter().zip(grid.weights()).enumerate()
        {
            let ib = idx / (n_ang * n_ang);
            let m = tables.rep_matrix(k, alpha, ib, gamma);
            let scale = samples[idx] * w;
            // F̂ += f(A) w M(A)*  (adjoint entry (a,b) = conj(M_{ba}))
            for a in 0..d {
                for b in 0..d {
                    acc[(a, b)] += scale * m[(b, a)].conj();
                }
            }
        }
        out.set(k as i64, acc)?;
    }
    Ok(out)
}

/// Synthesis on the grid: F(A) = Σ_k d_k tr(M_k(A) F̂(k)).
pub fn so3_backward(
    coeffs: &SpectralCoefficients,
    grid: &So3Grid,
    tables: &WignerTables,
) -> Result<Vec<Complex64>> {
    if coeffs.geometry() != Geometry::SO3 {
        return Err(CoreError::UnsupportedGeometry(format!(
            "so3_backward on {} coefficients",
            coeffs.geometry()
        )));
    }
    if tables.bandlimit() < coeffs.bandlimit() {
        return Err(CoreError::BandExceeded {
            have: tables.bandlimit(),
            requested: coeffs.bandlimit(),
        });
    }
    let n_ang = grid.alpha_nodes().len();
    let mut out = vec![Complex64::default(); grid.len()];
    for (k, f_hat) in coeffs.iter() {
        let rep = coeffs.rep(*k);
        let d = rep.dim;
        let dk = Complex64::new(d as f64, 0.0);
        for (idx, &(alpha, _beta, gamma)) in grid.euler_nodes().iter().enumerate() {
            let ib = idx / (n_ang * n_ang);
            let m = tables.rep_matrix(*k as u32, alpha, ib, gamma);
            let mut tr = Complex64::default();
            for a in 0..d {
                for b in 0..d {
                    tr += m[(a, b)] * f_hat[(b, a)];
                }
            }
            out[idx] += dk * tr;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grids::so3_grid;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn random_rotation(rng: &mut ChaCha8Rng) -> Rotation3 {
        Rotation3::from_euler(
            rng.gen_range(-PI..PI),
            rng.gen_range(0.0..PI),
            rng.gen_range(-PI..PI),
        )
    }

    #[test]
    fn representation_matrices_are_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..4 {
            let a = random_rotation(&mut rng);
            for (k, m) in wigner_matrices(5, &a).iter().enumerate() {
                let d = 2 * k + 1;
                let gram = m.adjoint() * m;
                let dev = (&gram - DMatrix::<Complex64>::identity(d, d))
                    .iter()
                    .map(|c| c.norm())
                    .fold(0.0, f64::max);
                assert!(dev < 1e-11, "k={k}: deviation {dev}");
            }
        }
    }

    #[test]
    fn homomorphism_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let a = random_rotation(&mut rng);
        let b = random_rotation(&mut rng);
        let ma = wigner_matrices(4, &a);
        let mb = wigner_matrices(4, &b);
        let mab = wigner_matrices(4, &a.compose(&b));
        for k in 0..=4usize {
            let prod = &ma[k] * &mb[k];
            let dev = (&prod - &mab[k]).iter().map(|c| c.norm()).fold(0.0, f64::max);
            assert!(dev < 1e-10, "k={k}: {dev}");
        }
    }

    #[test]
    fn euler_factorization_matches_direct_quadrature() {
        let grid = so3_grid(4).unwrap();
        let tables = WignerTables::new(&grid);
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..3 {
            let alpha = rng.gen_range(-PI..PI);
            let gamma = rng.gen_range(-PI..PI);
            let ib = rng.gen_range(0..grid.beta_nodes().len());
            let beta = grid.beta_nodes()[ib];
            let direct = wigner_matrices(4, &Rotation3::from_euler(alpha, beta, gamma));
            for k in 0..=4u32 {
                let fac = tables.rep_matrix(k, alpha, ib, gamma);
                let dev = (&fac - &direct[k as usize])
                    .iter()
                    .map(|c| c.norm())
                    .fold(0.0, f64::max);
                assert!(dev < 1e-10, "k={k}: {dev}");
            }
        }
    }

    #[test]
    fn lift_relation_first_column() {
        // conj(M_k(A)_{i,0}) √(d_k/4π) = 𝒴^{(i)}(A ξ₀)
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let band = 4u32;
        let table = SphericalHarmonics::new(band);
        for _ in 0..5 {
            let a = random_rotation(&mut rng);
            let mats = wigner_matrices(band, &a);
            let pole = a.apply(&SpherePoint::north_pole());
            let vals = adapted_values(&table, &pole);
            for k in 0..=band as usize {
                let d = 2 * k + 1;
                let scale = (d as f64 / (4.0 * PI)).sqrt();
                for i in 0..d {
                    let lhs = mats[k][(i, 0)].conj() * scale;
                    assert!((lhs - vals[k][i]).norm() < 1e-11, "k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn forward_backward_roundtrip_and_parseval() {
        let band = 3u32;
        let grid = so3_grid(band).unwrap();
        let tables = WignerTables::new(&grid);
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        let mut reference = SpectralCoefficients::new(Geometry::SO3, band);
        for k in 0..=band {
            let d = 2 * k as usize + 1;
            let m = DMatrix::from_fn(d, d, |_, _| {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            });
            reference.set(k as i64, m).unwrap();
        }
        let samples = so3_backward(&reference, &grid, &tables).unwrap();
        let coeffs = so3_forward(&grid, &tables, &samples, band).unwrap();
        assert!(coeffs.max_deviation(&reference) < 1e-10);

        let grid_norm: f64 = grid
            .weights()
            .iter()
            .zip(&samples)
            .map(|(w, f)| w * f.norm_sqr())
            .sum();
        let spectral = reference.parseval_norm_sq();
        assert!(
            (grid_norm - spectral).abs() < 1e-9 * grid_norm.max(1.0),
            "{grid_norm} vs {spectral}"
        );
    }

    #[test]
    fn schur_orthogonality_of_diagonal_coefficients() {
        // Σ_j ∫ |M_k^{jj}|² dμ = Σ_j 1/d_k = 1 (character orthogonality).
        let band = 3u32;
        let grid = so3_grid(band).unwrap();
        let tables = WignerTables::new(&grid);
        let n_ang = grid.alpha_nodes().len();
        for k in 1..=band {
            let d = 2 * k as usize + 1;
            let mut acc = 0.0;
            for (idx, (&(alpha, _b, gamma), &w)) in
                grid.euler_nodes().iter().zip(grid.weights()).enumerate()
            {
                let ib = idx / (n_ang * n_ang);
                let m = tables.rep_matrix(k, alpha, ib, gamma);
                for j in 0..d {
                    acc += w * m[(j, j)].norm_sqr();
                }
            }
            assert!((acc - 1.0).abs() < 1e-11, "k={k}: {acc}");
        }
    }
}
