//! Wavelet transforms, convolution products and scale quadrature.

mod conv;
mod field;
mod scale_grid;
mod wavelet;

pub use conv::{
    conv_bullet_quadrature, conv_bullet_spectral, conv_group_s2_quadrature,
    conv_group_s3_quadrature, conv_group_spectral, conv_group_torus_quadrature,
    conv_zonal_hat_quadrature, conv_zonal_hat_spectral, is_zonal, torus_samples,
};
pub use field::{FieldDomain, WaveletCoefficientField};
pub use scale_grid::{ScaleGrid, TailMode};
pub use wavelet::{
    energy_tail_correction, field_energy_numeric, so3_slices_from_samples,
    wavelet_forward_group_s3, wavelet_forward_group_torus, wavelet_forward_nonzonal,
    wavelet_forward_zonal, wavelet_inverse_group_s3, wavelet_inverse_group_torus,
    wavelet_inverse_nonzonal, wavelet_inverse_zonal, zonal_slice_at_points, Reconstruction,
};
