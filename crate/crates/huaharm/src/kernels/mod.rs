//! Poisson kernels, bounded harmonic extensions, the derivative probes
//! `I_p(a)`, and the blow-up-exponent dichotomy detector.

pub mod dichotomy;
pub mod multiplier;
pub mod pkernel;
pub mod probes;

pub use dichotomy::{dichotomy_cn, dichotomy_heis, DichotomyConfig, DichotomyReport, Verdict};
pub use multiplier::{extend_cn, q_multiplier, RadialMultiplier, TestProfile, TrigBoundaryData};
pub use pkernel::{HKernelSpec, MassBox, PKernelValue};
pub use probes::{
    g_radial, g_radial_solution, heis_i_probe, i_p_probe, psi_p_boundary_limit, psi_p_ode,
    HeisAtom,
};

/// Errors from the kernel layer.
#[derive(Debug, thiserror::Error)]
pub enum KernelError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("probe order {0} exceeds certified order k + 1 with k = {1}")]
    ProbeOrder(u32, i32),
    #[error("degenerate exponent: p = {0} makes n alpha - p + 1 vanish (n alpha = {1})")]
    DegenerateExponent(u32, f64),
    #[error(transparent)]
    SpecFun(#[from] crate::specfun::SpecFunError),
    #[error(transparent)]
    Heis(#[from] crate::heisenberg::HeisError),
}
