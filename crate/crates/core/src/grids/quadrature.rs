//! Quadrature grids per geometry.

use super::points::{Rotation3, SpherePoint, TorusPoint, UnitQuaternion};
use crate::error::{CoreError, Result};
use crate::quad1d::{gauss_chebyshev_u, gauss_legendre};
use crate::Complex64;
use std::f64::consts::PI;
use std::io::Write;

/// Common access to nodes, weights and declared exactness.
pub trait QuadratureGrid {
    type Point;

    fn nodes(&self) -> &[Self::Point];
    fn weights(&self) -> &[f64];

    /// Largest integrand band integrated exactly (to ~1e-12); products of
    /// two basis coefficients within the construction band stay below this.
    fn exact_band(&self) -> u32;

    fn len(&self) -> usize {
        self.weights().len()
    }

    fn is_empty(&self) -> bool {
        self.weights().is_empty()
    }

    fn total_mass(&self) -> f64 {
        self.weights().iter().sum()
    }

    /// Weighted sum of samples taken at the grid nodes.
    fn integrate(&self, samples: &[Complex64]) -> Complex64 {
        assert_eq!(samples.len(), self.len(), "sample/grid length mismatch");
        self.weights()
            .iter()
            .zip(samples)
            .map(|(w, f)| f * *w)
            .sum()
    }
}

/// Equispaced grid on the torus; exact for frequencies |k| < n_points.
#[derive(Debug, Clone)]
pub struct TorusGrid {
    nodes: Vec<TorusPoint>,
    weights: Vec<f64>,
    exact_band: u32,
}

/// Build the n-point trapezoidal grid θ_m = m/n with weights 1/n.
pub fn torus_grid(n_points: usize) -> Result<TorusGrid> {
    if n_points < 1 {
        return Err(CoreError::domain("torus_grid: need at least one point"));
    }
    let nodes = (0..n_points)
        .map(|m| TorusPoint::new(m as f64 / n_points as f64))
        .collect();
    let weights = vec![1.0 / n_points as f64; n_points];
    Ok(TorusGrid { nodes, weights, exact_band: n_points as u32 - 1 })
}

impl QuadratureGrid for TorusGrid {
    type Point = TorusPoint;
    fn nodes(&self) -> &[TorusPoint] {
        &self.nodes
    }
    fn weights(&self) -> &[f64] {
        &self.weights
    }
    fn exact_band(&self) -> u32 {
        self.exact_band
    }
}

impl TorusGrid {
    /// CSV export with columns `theta,weight`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "# geometry: torus")?;
        writeln!(w, "theta,weight")?;
        for (p, wt) in self.nodes.iter().zip(&self.weights) {
            writeln!(w, "{},{}", p.theta(), wt)?;
        }
        Ok(())
    }
}

/// Gauss-Legendre × equispaced-longitude grid on S²; weights sum to the
/// Lebesgue area 4π and spherical polynomials of degree ≤ 2L are integrated
/// exactly.
#[derive(Debug, Clone)]
pub struct Sphere2Grid {
    bandlimit: u32,
    nodes: Vec<SpherePoint>,
    weights: Vec<f64>,
    t_nodes: Vec<f64>,
    t_weights: Vec<f64>,
    theta_nodes: Vec<f64>,
}

/// Build the S² grid for construction band `bandlimit` (L+1 latitude
/// nodes × 2L+1 longitudes).
pub fn sphere2_grid(bandlimit: u32) -> Result<Sphere2Grid> {
    if bandlimit < 1 {
        return Err(CoreError::domain("sphere2_grid: bandlimit must be >= 1"));
    }
    let rule = gauss_legendre(bandlimit as usize + 1);
    let n_theta = 2 * bandlimit as usize + 1;
    let theta_nodes: Vec<f64> = (0..n_theta)
        .map(|m| 2.0 * PI * m as f64 / n_theta as f64 - PI)
        .collect();
    let mut nodes = Vec::with_capacity(rule.nodes.len() * n_theta);
    let mut weights = Vec::with_capacity(rule.nodes.len() * n_theta);
    for (&t, &wt) in rule.nodes.iter().zip(&rule.weights) {
        for &theta in &theta_nodes {
            nodes.push(SpherePoint::from_lat_lon(t, theta));
            weights.push(wt * 2.0 * PI / n_theta as f64);
        }
    }
    Ok(Sphere2Grid {
        bandlimit,
        nodes,
        weights,
        t_nodes: rule.nodes,
        t_weights: rule.weights,
        theta_nodes,
    })
}

impl QuadratureGrid for Sphere2Grid {
    type Point = SpherePoint;
    fn nodes(&self) -> &[SpherePoint] {
        &self.nodes
    }
    fn weights(&self) -> &[f64] {
        &self.weights
    }
    fn exact_band(&self) -> u32 {
        2 * self.bandlimit
    }
}

impl Sphere2Grid {
    pub fn bandlimit(&self) -> u32 {
        self.bandlimit
    }
    pub fn latitude_nodes(&self) -> &[f64] {
        &self.t_nodes
    }
    pub fn latitude_weights(&self) -> &[f64] {
        &self.t_weights
    }
    pub fn longitude_nodes(&self) -> &[f64] {
        &self.theta_nodes
    }

    /// Flat node index of latitude index `it` and longitude index `im`.
    pub fn node_index(&self, it: usize, im: usize) -> usize {
        it * self.theta_nodes.len() + im
    }

    /// CSV export with columns `x,y,z,weight`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "# geometry: sphere2 (Lebesgue, total 4pi)")?;
        writeln!(w, "x,y,z,weight")?;
        for (p, wt) in self.nodes.iter().zip(&self.weights) {
            let [x, y, z] = p.coords();
            writeln!(w, "{x},{y},{z},{wt}")?;
        }
        Ok(())
    }
}

/// Product grid on S³ in hyperspherical coordinates: Gauss–Chebyshev
/// (second kind) in the scalar part x₀ times an S² grid on the fiber of
/// vector-part directions. Probability Haar; exact for matrix coefficients
/// of t_n, n ≤ 2N.
#[derive(Debug, Clone)]
pub struct Sphere3Grid {
    bandlimit: u32,
    nodes: Vec<UnitQuaternion>,
    weights: Vec<f64>,
    x0_nodes: Vec<f64>,
    x0_weights: Vec<f64>,
    fiber: Sphere2Grid,
}

/// Build the S³ grid for construction band `bandlimit`.
pub fn sphere3_grid(bandlimit: u32) -> Result<Sphere3Grid> {
    if bandlimit < 1 {
        return Err(CoreError::domain("sphere3_grid: bandlimit must be >= 1"));
    }
    let x0_rule = gauss_chebyshev_u(bandlimit as usize + 1);
    let fiber = sphere2_grid(bandlimit)?;
    let mut nodes = Vec::with_capacity(x0_rule.nodes.len() * fiber.len());
    let mut weights = Vec::with_capacity(nodes.capacity());
    for (&x0, &wx) in x0_rule.nodes.iter().zip(&x0_rule.weights) {
        let r = (1.0 - x0 * x0).max(0.0).sqrt();
        for (xi, &wf) in fiber.nodes().iter().zip(fiber.weights()) {
            let [vx, vy, vz] = xi.coords();
            nodes.push(UnitQuaternion {
                x0,
                x1: r * vx,
                x2: r * vy,
                x3: r * vz,
            });
            // (2/π) wx integrates the x₀ marginal to 1; wf/4π the fiber.
            weights.push((2.0 / PI) * wx * wf / (4.0 * PI));
        }
    }
    Ok(Sphere3Grid {
        bandlimit,
        nodes,
        weights,
        x0_nodes: x0_rule.nodes,
        x0_weights: x0_rule.weights,
        fiber,
    })
}

impl QuadratureGrid for Sphere3Grid {
    type Point = UnitQuaternion;
    fn nodes(&self) -> &[UnitQuaternion] {
        &self.nodes
    }
    fn weights(&self) -> &[f64] {
        &self.weights
    }
    fn exact_band(&self) -> u32 {
        2 * self.bandlimit
    }
}

impl Sphere3Grid {
    pub fn bandlimit(&self) -> u32 {
        self.bandlimit
    }
    /// Chebyshev nodes of the scalar part.
    pub fn x0_nodes(&self) -> &[f64] {
        &self.x0_nodes
    }
    /// Chebyshev weights (sum π/2, before Haar normalization).
    pub fn x0_weights(&self) -> &[f64] {
        &self.x0_weights
    }
    pub fn fiber(&self) -> &Sphere2Grid {
        &self.fiber
    }
    /// Number of fiber points per x₀ slice.
    pub fn fiber_len(&self) -> usize {
        self.fiber.len()
    }

    /// CSV export with columns `x0,x1,x2,x3,weight`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "# geometry: sphere3 (probability Haar)")?;
        writeln!(w, "x0,x1,x2,x3,weight")?;
        for (p, wt) in self.nodes.iter().zip(&self.weights) {
            writeln!(w, "{},{},{},{},{}", p.x0, p.x1, p.x2, p.x3, wt)?;
        }
        Ok(())
    }
}

/// Euler-angle product grid on SO(3): equispaced α, γ × Gauss-Legendre in
/// cos β. Probability Haar; exact for Wigner coefficients of degree ≤ 2L.
#[derive(Debug, Clone)]
pub struct So3Grid {
    bandlimit: u32,
    nodes: Vec<Rotation3>,
    euler: Vec<(f64, f64, f64)>,
    weights: Vec<f64>,
    alpha_nodes: Vec<f64>,
    beta_nodes: Vec<f64>,
    beta_weights: Vec<f64>,
    gamma_nodes: Vec<f64>,
}

/// Build the SO(3) grid for construction band `bandlimit`.
pub fn so3_grid(bandlimit: u32) -> Result<So3Grid> {
    if bandlimit < 1 {
        return Err(CoreError::domain("so3_grid: bandlimit must be >= 1"));
    }
    let n_ang = 2 * bandlimit as usize + 1;
    let angles: Vec<f64> = (0..n_ang)
        .map(|m| 2.0 * PI * m as f64 / n_ang as f64 - PI)
        .collect();
    let rule = gauss_legendre(bandlimit as usize + 1);
    let beta_nodes: Vec<f64> = rule.nodes.iter().map(|x| x.acos()).collect();
    let mut nodes = Vec::with_capacity(n_ang * n_ang * beta_nodes.len());
    let mut euler = Vec::with_capacity(nodes.capacity());
    let mut weights = Vec::with_capacity(nodes.capacity());
    for (ib, &beta) in beta_nodes.iter().enumerate() {
        let wb = rule.weights[ib] / 2.0;
        for &gamma in &angles {
            for &alpha in &angles {
                nodes.push(Rotation3::from_euler(alpha, beta, gamma));
                euler.push((alpha, beta, gamma));
                weights.push(wb / (n_ang * n_ang) as f64);
            }
        }
    }
    Ok(So3Grid {
        bandlimit,
        nodes,
        euler,
        weights,
        alpha_nodes: angles.clone(),
        beta_nodes,
        beta_weights: rule.weights,
        gamma_nodes: angles,
    })
}

impl QuadratureGrid for So3Grid {
    type Point = Rotation3;
    fn nodes(&self) -> &[Rotation3] {
        &self.nodes
    }
    fn weights(&self) -> &[f64] {
        &self.weights
    }
    fn exact_band(&self) -> u32 {
        2 * self.bandlimit
    }
}

impl So3Grid {
    pub fn bandlimit(&self) -> u32 {
        self.bandlimit
    }
    pub fn euler_nodes(&self) -> &[(f64, f64, f64)] {
        &self.euler
    }
    pub fn alpha_nodes(&self) -> &[f64] {
        &self.alpha_nodes
    }
    pub fn beta_nodes(&self) -> &[f64] {
        &self.beta_nodes
    }
    pub fn beta_weights(&self) -> &[f64] {
        &self.beta_weights
    }
    pub fn gamma_nodes(&self) -> &[f64] {
        &self.gamma_nodes
    }

    /// Flat node index of (β index, γ index, α index).
    pub fn node_index(&self, ib: usize, ig: usize, ia: usize) -> usize {
        let n = self.alpha_nodes.len();
        (ib * self.gamma_nodes.len() + ig) * n + ia
    }

    /// CSV export with columns `alpha,beta,gamma,weight`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "# geometry: so3 (probability Haar, Euler angles)")?;
        writeln!(w, "alpha,beta,gamma,weight")?;
        for (&(a, b, g), wt) in self.euler.iter().zip(&self.weights) {
            writeln!(w, "{a},{b},{g},{wt}")?;
        }
        Ok(())
    }
}
