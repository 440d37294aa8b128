//! Special functions: hypergeometric series, bounded solutions of the two
//! half-line ODE families, Hermite and Laguerre systems, and the quadrature
//! machinery they share.

pub mod fit;
pub mod hermite;
pub mod hyper;
pub mod laguerre;
pub mod legendre;
pub mod quad;
pub mod series;

pub use fit::{asymptotic_exponent, fit_power_or_log, geometric_grid, ExponentFit};
pub use hermite::{hermite, hermite_multi, hermite_poly_normalized, hermite_scaled};
pub use hyper::{index_above, BoundedHyperSolution};
pub use laguerre::{laguerre, laguerre_product, multi_indices, phi_k};
pub use legendre::BoundedLegendreSolution;
pub use quad::{adaptive_simpson, integrate_half_line, PanelRule, QuadratureRule, RuleKind};
pub use series::{hyp0f1, hyp1f1, pochhammer};

/// Errors from the special-function layer.
#[derive(Debug, thiserror::Error)]
pub enum SpecFunError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series did not converge: {0}")]
    Convergence(String),
    #[error("fit failure: {0}")]
    FitFailure(String),
}
