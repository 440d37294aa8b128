//! The Schrödinger representation of `H^n`, its Hermite matrix coefficients,
//! the spherical-type functions `e_kappa^lambda`, and their `lambda`-averages
//! `e_kappa^psi`.
//!
//! The representation is normalized so that the standard spectral identities
//! hold with a clean parameter: for `lambda != 0` and `zeta = u + iv`,
//!
//! ```text
//!     R^lambda(zeta, t) phi(x) = e^{i lambda (t + 4 u.x + 2 u.v)} phi(x + v),
//! ```
//!
//! acting on scaled Hermite functions of Gaussian width `(4|lambda|)^{1/2}`.
//! With this choice `T e_kappa^lambda = i lambda e_kappa^lambda` and
//! `calL e_kappa^lambda = (2 kappa + n) |lambda| e_kappa^lambda`, and the
//! diagonal coefficients reduce to Laguerre functions:
//!
//! ```text
//!     <R^lambda(zeta, 0) h_k^lambda, h_k^lambda>
//!         = prod_i L_{k_i}(2 |lambda| |zeta_i|^2) . e^{-|lambda| |zeta|^2}.
//! ```
//!
//! The Laguerre fast path is only enabled after a runtime calibration against
//! the direct Gauss-Hermite quadrature; a mismatch aborts loudly.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::specfun::hermite::hermite_poly_normalized;
use crate::specfun::laguerre::{laguerre, multi_indices};
use crate::specfun::quad::{PanelRule, QuadratureRule};

use super::point::HPoint;
use super::HeisError;

const GH_NODES: usize = 80;

fn gh_rule() -> &'static QuadratureRule {
    static RULE: OnceLock<QuadratureRule> = OnceLock::new();
    RULE.get_or_init(|| QuadratureRule::gauss_hermite(GH_NODES).expect("static rule"))
}

/// Matrix coefficient `<R^lambda(w) h_k^lambda, h_j^lambda>` by Gauss-Hermite
/// quadrature of the explicit integrand (one factor per coordinate).
pub fn rep_coeff(
    lambda: f64,
    k: &[u32],
    j: &[u32],
    w: &HPoint,
) -> Result<Complex64, HeisError> {
    if lambda == 0.0 {
        return Err(HeisError::LambdaZero);
    }
    let n = w.dim();
    if k.len() != n || j.len() != n {
        return Err(HeisError::DimensionMismatch(k.len().max(j.len()), n));
    }
    let s = (4.0 * lambda.abs()).sqrt();
    let rule = gh_rule();
    let mut prod = Complex64::new(1.0, 0.0);
    for i in 0..n {
        let u = w.zeta[i].re;
        let v = w.zeta[i].im;
        let c = s * v / 2.0;
        let omega = lambda.signum() * s * u;
        // int e^{-y^2} p_k(y + c) p_j(y - c) e^{i omega y} dy
        let mut g = Complex64::ZERO;
        for (&y, &wt) in rule.nodes().iter().zip(rule.weights()) {
            let val = hermite_poly_normalized(k[i], y + c) * hermite_poly_normalized(j[i], y - c);
            g += wt * val * Complex64::new(0.0, omega * y).exp();
        }
        // Phase e^{2 i lambda u v} from the group factor cancels the
        // e^{-2 i lambda u v} from centering the Gaussians.
        prod *= (-c * c).exp() * g;
    }
    Ok(Complex64::new(0.0, lambda * w.t).exp() * prod)
}

/// `e_kappa^lambda(w) = sum_{|k| = kappa} <R^lambda(w) h_k^lambda, h_k^lambda>`
/// by direct quadrature.  Ground truth for the fast path.
pub fn e_kappa_lambda_quadrature(
    lambda: f64,
    kappa: u32,
    w: &HPoint,
) -> Result<Complex64, HeisError> {
    let mut sum = Complex64::ZERO;
    for k in multi_indices(w.dim(), kappa) {
        sum += rep_coeff(lambda, &k, &k, w)?;
    }
    Ok(sum)
}

/// Laguerre closed form of the same sum.
fn e_kappa_lambda_fast(lambda: f64, kappa: u32, w: &HPoint) -> Result<Complex64, HeisError> {
    if lambda == 0.0 {
        return Err(HeisError::LambdaZero);
    }
    let la = lambda.abs();
    let mut radial = 0.0;
    for k in multi_indices(w.dim(), kappa) {
        let mut prod = 1.0;
        for (ki, zi) in k.iter().zip(&w.zeta) {
            prod *= laguerre(*ki, 2.0 * la * zi.norm_sqr())
                .map_err(|e| HeisError::Domain(e.to_string()))?;
        }
        radial += prod;
    }
    let gauss = (-la * w.zeta_norm_sqr()).exp();
    Ok(Complex64::new(0.0, lambda * w.t).exp() * radial * gauss)
}

/// One-time calibration of the Laguerre fast path against quadrature
/// (n = 1, kappa <= 5, lambda in {0.5, 1, 2}, a few base points).
fn calibration() -> &'static Result<(), String> {
    static CAL: OnceLock<Result<(), String>> = OnceLock::new();
    CAL.get_or_init(|| {
        let points = [
            HPoint::new(vec![Complex64::new(0.0, 0.0)], 0.0),
            HPoint::new(vec![Complex64::new(0.7, -0.4)], 0.3),
            HPoint::new(vec![Complex64::new(-1.2, 0.9)], -0.8),
        ];
        for lambda in [0.5, 1.0, 2.0] {
            for kappa in 0..=5u32 {
                for w in &points {
                    let q = e_kappa_lambda_quadrature(lambda, kappa, w)
                        .map_err(|e| e.to_string())?;
                    let f = e_kappa_lambda_fast(lambda, kappa, w).map_err(|e| e.to_string())?;
                    if (q - f).norm() > 1e-6 {
                        return Err(format!(
                            "fast path mismatch at lambda={lambda}, kappa={kappa}: \
                             quadrature {q}, laguerre {f}"
                        ));
                    }
                }
            }
        }
        Ok(())
    })
}

/// `e_kappa^lambda(w)`, via the calibrated Laguerre fast path.
pub fn e_kappa_lambda(lambda: f64, kappa: u32, w: &HPoint) -> Result<Complex64, HeisError> {
    calibration()
        .as_ref()
        .map_err(|msg| HeisError::Calibration(msg.clone()))?;
    e_kappa_lambda_fast(lambda, kappa, w)
}

/// A smooth profile on `R \ {0}`: a callable plus its support intervals,
/// none of which may touch 0.
pub struct LambdaProfile {
    intervals: Vec<(f64, f64)>,
    f: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl LambdaProfile {
    pub fn new(
        intervals: Vec<(f64, f64)>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self, HeisError> {
        for &(lo, hi) in &intervals {
            if lo >= hi {
                return Err(HeisError::Domain(format!("empty support interval [{lo}, {hi}]")));
            }
            if lo <= 0.0 && hi >= 0.0 {
                return Err(HeisError::Domain(
                    "profile support must stay away from lambda = 0".into(),
                ));
            }
        }
        Ok(Self { intervals, f: Box::new(f) })
    }

    pub fn eval(&self, lambda: f64) -> f64 {
        (self.f)(lambda)
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    /// `int psi(lambda) g(lambda) dlambda` over the support.
    pub fn integrate<G: FnMut(f64) -> Complex64>(
        &self,
        nodes_per_panel: usize,
        mut g: G,
    ) -> Complex64 {
        let panels: Vec<(f64, f64, usize)> =
            self.intervals.iter().map(|&(a, b)| (a, b, nodes_per_panel)).collect();
        let rule = PanelRule::gauss_legendre(&panels);
        let mut sum = Complex64::ZERO;
        for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
            sum += w * self.eval(x) * g(x);
        }
        sum
    }
}

/// `e_kappa^psi(w) = int e_kappa^lambda(w) psi(lambda) dlambda`.
pub fn e_kappa_psi(
    kappa: u32,
    psi: &LambdaProfile,
    w: &HPoint,
    nodes_per_panel: usize,
) -> Result<Complex64, HeisError> {
    calibration()
        .as_ref()
        .map_err(|msg| HeisError::Calibration(msg.clone()))?;
    let mut err = None;
    let val = psi.integrate(nodes_per_panel, |lambda| {
        match e_kappa_lambda_fast(lambda, kappa, w) {
            Ok(v) => v,
            Err(e) => {
                err = Some(e);
                Complex64::ZERO
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(val),
    }
}
