//! Pointwise Cauchy and logarithmic kernels on `H^n`.

use num_complex::Complex64;
use statrs::function::gamma::gamma;

use super::point::HPoint;
use super::HeisError;

fn is_origin(w: &HPoint) -> bool {
    w.t == 0.0 && w.zeta.iter().all(|z| *z == Complex64::ZERO)
}

/// Cauchy kernel `K([zeta, t]) = c (t + i|zeta|^2)^{-n-1}` with
/// `c = 2^{n-1} i^{n+1} n! / pi^{n+1}`.
pub fn cauchy_kernel(w: &HPoint) -> Result<Complex64, HeisError> {
    if is_origin(w) {
        return Err(HeisError::SingularPoint);
    }
    let n = w.dim() as i32;
    let c = Complex64::new(2.0f64.powi(n - 1), 0.0)
        * Complex64::I.powu(n as u32 + 1)
        * gamma(n as f64 + 1.0)
        / std::f64::consts::PI.powi(n + 1);
    let base = Complex64::new(w.t, w.zeta_norm_sqr());
    Ok(c * base.powi(-(n + 1)))
}

/// Logarithmic kernel
/// `Phi([zeta, t]) = (2^{n-2} (n-1)! / pi^{n+1})
///                   [log(|zeta|^2 - it) - log(|zeta|^2 + it)] (|zeta|^2 - it)^{-n}`
/// with principal-branch logarithms (the arguments live in the closed right
/// half-plane).
pub fn log_kernel(w: &HPoint) -> Result<Complex64, HeisError> {
    if is_origin(w) {
        return Err(HeisError::SingularPoint);
    }
    let n = w.dim() as i32;
    let c = 2.0f64.powi(n - 2) * gamma(n as f64) / std::f64::consts::PI.powi(n + 1);
    let minus = Complex64::new(w.zeta_norm_sqr(), -w.t);
    let plus = Complex64::new(w.zeta_norm_sqr(), w.t);
    Ok(c * (minus.ln() - plus.ln()) * minus.powi(-n))
}
