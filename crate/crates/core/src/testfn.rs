//! Seeded random band-limited test functions.
//!
//! Shared by the verification suites, the CLI's builtin inputs and the
//! test code; everything is driven by a ChaCha stream so identical seeds
//! give identical functions on every platform.

use crate::grids::{QuadratureGrid, Sphere2Grid, Sphere3Grid, TorusGrid};
use crate::harmonic::{
    s2_backward, s3_central_backward, torus_backward, Geometry, SpectralCoefficients,
};
use crate::Complex64;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn unit_range(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Random torus coefficients; `zero_mean` drops k = 0.
pub fn random_torus_coeffs(bandlimit: u32, seed: u64, zero_mean: bool) -> SpectralCoefficients {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SpectralCoefficients::new(Geometry::Torus, bandlimit);
    for k in -(bandlimit as i64)..=bandlimit as i64 {
        if zero_mean && k == 0 {
            continue;
        }
        out.set(k, DMatrix::from_element(1, 1, unit_range(&mut rng)))
            .expect("band ids are valid");
    }
    out
}

/// Random central S³ coefficients (scalar multiples of the identity).
pub fn random_s3_central_coeffs(
    bandlimit: u32,
    seed: u64,
    zero_mean: bool,
) -> SpectralCoefficients {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SpectralCoefficients::new(Geometry::S3Group, bandlimit);
    for n in 0..=bandlimit {
        if zero_mean && n == 0 {
            continue;
        }
        let d = n as usize + 1;
        out.set(n as i64, DMatrix::from_diagonal_element(d, d, unit_range(&mut rng)))
            .expect("band ids are valid");
    }
    out
}

/// Random first-row coefficients of a function on S².
pub fn random_s2_coeffs(bandlimit: u32, seed: u64, zero_mean: bool) -> SpectralCoefficients {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SpectralCoefficients::new(Geometry::SO3, bandlimit);
    for k in 0..=bandlimit {
        if zero_mean && k == 0 {
            continue;
        }
        let d = 2 * k as usize + 1;
        let mut m = DMatrix::<Complex64>::zeros(d, d);
        for b in 0..d {
            m[(0, b)] = unit_range(&mut rng);
        }
        out.set(k as i64, m).expect("band ids are valid");
    }
    out
}

/// Random zonal coefficients on S² (entry (0,0) per degree).
pub fn random_zonal_coeffs(bandlimit: u32, seed: u64, zero_mean: bool) -> SpectralCoefficients {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SpectralCoefficients::new(Geometry::SO3, bandlimit);
    for k in 0..=bandlimit {
        if zero_mean && k == 0 {
            continue;
        }
        let d = 2 * k as usize + 1;
        let mut m = DMatrix::<Complex64>::zeros(d, d);
        m[(0, 0)] = unit_range(&mut rng);
        out.set(k as i64, m).expect("band ids are valid");
    }
    out
}

/// Random per-degree unit weight vectors for non-zonal families.
pub fn random_unit_weights(bandlimit: u32, seed: u64) -> Vec<nalgebra::DVector<Complex64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..=bandlimit)
        .map(|k| {
            let d = 2 * k as usize + 1;
            let mut v = nalgebra::DVector::from_fn(d, |_, _| unit_range(&mut rng));
            let n = v.norm();
            v /= Complex64::new(n, 0.0);
            v
        })
        .collect()
}

pub fn random_torus_samples(
    grid: &TorusGrid,
    bandlimit: u32,
    seed: u64,
    zero_mean: bool,
) -> Vec<Complex64> {
    torus_backward(&random_torus_coeffs(bandlimit, seed, zero_mean), grid)
        .expect("synthesis of valid coefficients")
}

pub fn random_s3_central_samples(
    grid: &Sphere3Grid,
    bandlimit: u32,
    seed: u64,
    zero_mean: bool,
) -> Vec<Complex64> {
    s3_central_backward(&random_s3_central_coeffs(bandlimit, seed, zero_mean), grid)
        .expect("synthesis of valid coefficients")
}

pub fn random_s2_samples(
    grid: &Sphere2Grid,
    bandlimit: u32,
    seed: u64,
    zero_mean: bool,
) -> Vec<Complex64> {
    s2_backward(&random_s2_coeffs(bandlimit, seed, zero_mean), grid)
        .expect("synthesis of valid coefficients")
}

/// Relative L² distance between two sample vectors under grid weights.
pub fn relative_l2_error<G: QuadratureGrid>(
    grid: &G,
    got: &[Complex64],
    want: &[Complex64],
) -> f64 {
    let num: f64 = grid
        .weights()
        .iter()
        .zip(got.iter().zip(want))
        .map(|(w, (a, b))| w * (a - b).norm_sqr())
        .sum();
    let den: f64 = grid
        .weights()
        .iter()
        .zip(want)
        .map(|(w, b)| w * b.norm_sqr())
        .sum();
    (num / den.max(f64::MIN_POSITIVE)).sqrt()
}
