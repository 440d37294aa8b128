//! The Heisenberg group `H^n`, its extension `S`, invariant fields and
//! second-order operators, the Schrödinger representation, and the pointwise
//! Cauchy / log kernels.

pub mod fields;
pub mod inversion;
pub mod kernels;
pub mod point;
pub mod rep;

pub use fields::{
    apply_field, apply_field_s, apply_field_twice, boundary_residuals, op_call_alpha,
    op_call_alpha_spec, op_l_alpha, op_l_alpha_spec, BoundaryResiduals, FdSpec, FieldId, FieldTag,
};
pub use inversion::{truncated_inversion_check, InversionCheck};
pub use kernels::{cauchy_kernel, log_kernel};
pub use point::{dilate, hn_inv, hn_mul, s_act, s_inv, s_mul, HPoint, SPoint, SiegelPoint};
pub use rep::{
    e_kappa_lambda, e_kappa_lambda_quadrature, e_kappa_psi, rep_coeff, LambdaProfile,
};

/// Errors from the Heisenberg-group layer.
#[derive(Debug, thiserror::Error)]
pub enum HeisError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("kernel is singular at the origin")]
    SingularPoint,
    #[error("representation parameter lambda must be nonzero")]
    LambdaZero,
    #[error("finite-difference stencil leaves a > 0 (a = {0}, step = {1})")]
    StencilOutOfDomain(f64, f64),
    #[error("fast-path calibration failed: {0}")]
    Calibration(String),
}
