//! The group Fourier layer.
//!
//! Peter–Weyl coefficients φ̂(π) = ∫ φ(g) π*(g) dμ per geometry, synthesis
//! φ(g) = Σ d_π tr(π(g) φ̂(π)), characters, spectral translations, the
//! stabilizer projector Ĥ(π) of SO(2) < SO(3) and the Funk–Hecke
//! multiplier.
//!
//! Functions on `S²` are carried as coefficient matrices over the class-1
//! representations of SO(3) with entries in the first row of the adapted
//! basis (the basis ordered so that the zonal harmonic at the north pole
//! comes first); that row structure is exactly the image of the projector
//! Ĥ(k) = diag(1, 0, …, 0).

mod coeffs;
mod funk_hecke;
mod ops;
mod rep;
mod s2;
mod s3;
mod torus;
mod wigner;

pub use coeffs::SpectralCoefficients;
pub use funk_hecke::funk_hecke;
pub use ops::{
    character_so3, character_s3, character_torus, stabilizer_projector, translate_left,
    translate_right, zonal_project, StabilizerProjector,
};
pub use rep::{adapted_order, Geometry, RepIndex};
pub use s2::{lift_to_so3, s2_backward, s2_eval, s2_forward, S2Synth};
pub use s3::{s3_central_backward, s3_central_eval, s3_central_forward, CENTRALITY_TOL};
pub use torus::{torus_backward, torus_eval, torus_forward};
pub use wigner::{so3_backward, so3_forward, wigner_matrices, WignerTables};
pub use ops::GroupElement;
