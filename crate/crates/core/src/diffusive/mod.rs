//! Diffusive approximate identities and spectral wavelet families.

mod alpha;
mod family;
mod identity;

pub use alpha::{WeightFunction, WeightKind};
pub use family::{
    equidistributed_weights, heat_wavelet_family, nonzonal_family, zonal_family_on_sphere,
    zonal_weights, Eta, FamilyKind, WaveletFamily,
};
pub use identity::{heat_identity, verify_diffusive, DiffusiveIdentity, DiffusiveReport};
