//! Group elements, base-point conventions and quadrature grids.
//!
//! Grids carry Haar-normalized weights (sum 1) on the group geometries and
//! Lebesgue weights (sum 4π) on `S²`, and each declares the largest
//! integrand band it integrates exactly. Gauss-type product rules make
//! band-limited quadrature exact, which is what turns the continuum
//! identities of the Fourier and wavelet layers into machine-precision
//! tests.

mod points;
mod quadrature;

pub use points::{quaternion_mul, rotate_sphere, Rotation3, SpherePoint, TorusPoint, UnitQuaternion};
pub use quadrature::{
    so3_grid, sphere2_grid, sphere3_grid, torus_grid, QuadratureGrid, So3Grid, Sphere2Grid,
    Sphere3Grid, TorusGrid,
};
