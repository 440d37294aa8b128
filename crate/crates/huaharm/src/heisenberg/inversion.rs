//! Truncated Fourier inversion on `H^n` (desk scale, n = 1).
//!
//! For a boundary function `f` and a smooth profile `psi` supported away from
//! `lambda = 0`, the spherical expansion
//!
//! ```text
//!     S_K(omega) = sum_{kappa <= K} int f(omega^{-1} w) e_kappa^psi(w) dw
//! ```
//!
//! converges, as the cutoff `K` grows, to a center-line average of `f`:
//! tracing the representation kernel collapses the `zeta`-integral, leaving
//!
//! ```text
//!     T(omega) = c int f(omega^{-1} [0, s]) G(s) ds,
//!     G(s)     = int psi(lambda) |lambda|^{-n} e^{i lambda s} dlambda,
//! ```
//!
//! which is a `t`-bandpass convolution of `f`.  The overall constant `c` is
//! fitted at a single base point; the check is that the residual against the
//! fitted target decreases monotonically in `K`.

use num_complex::Complex64;

use crate::specfun::laguerre::{laguerre, multi_indices};
use crate::specfun::quad::PanelRule;

use super::point::{hn_inv, hn_mul, HPoint};
use super::rep::LambdaProfile;
use super::HeisError;

/// Outcome of the truncated-inversion check.
#[derive(Debug, Clone, serde::Serialize)]
pub struct InversionCheck {
    /// `(K, residual)` pairs, residual summed over the off-base test points.
    pub residuals: Vec<(u32, f64)>,
    /// Fitted global constant (modulus; the phase is absorbed).
    pub constant_abs: f64,
}

/// Runs the check for `f(zeta, t) = exp(-|zeta|^2 - t^2)` on `H^1` with a
/// smooth bump profile on `[0.5, 2.5]`, cutoffs `K` in `cutoffs`.
pub fn truncated_inversion_check(cutoffs: &[u32]) -> Result<InversionCheck, HeisError> {
    let f = |w: &HPoint| (-w.zeta_norm_sqr() - w.t * w.t).exp();
    let psi_fn = |l: f64| {
        if l <= 0.5 || l >= 2.5 {
            0.0
        } else {
            (-1.0 / ((l - 0.5) * (2.5 - l))).exp()
        }
    };
    // Validates the support; the grid below samples psi_fn directly.
    let _psi = LambdaProfile::new(vec![(0.5, 2.5)], psi_fn)?;

    let base = HPoint::origin(1);
    let probes = vec![
        HPoint::new(vec![Complex64::new(0.4, 0.2)], 0.5),
        HPoint::new(vec![Complex64::new(-0.3, 0.6)], -0.8),
        HPoint::new(vec![Complex64::new(0.0, -0.7)], 1.2),
    ];
    let kmax = *cutoffs.iter().max().unwrap_or(&0);

    // lambda rule shared by both sides.
    let lrule = PanelRule::gauss_legendre(&[(0.5, 2.5, 32)]);

    // Spatial grid for the H^1 integral.
    let xy = PanelRule::gauss_legendre(&[(-4.5, 4.5, 44)]);
    let tg = PanelRule::gauss_legendre(&[(-9.0, 9.0, 48)]);

    // Radial factors R_kappa(lambda, zeta) = sum_{|k|=kappa} L-products times
    // the Gaussian, precomputed on the (zeta, lambda) product grid.
    let nx = xy.nodes().len();
    let nl = lrule.nodes().len();
    let nk = kmax as usize + 1;
    let mut radial = vec![0.0f64; nx * nx * nl * nk];
    for (ix, &x) in xy.nodes().iter().enumerate() {
        for (iy, &y) in xy.nodes().iter().enumerate() {
            let r2 = x * x + y * y;
            for (il, &l) in lrule.nodes().iter().enumerate() {
                let gauss = (-l * r2).exp();
                for kappa in 0..nk {
                    let mut s = 0.0;
                    for k in multi_indices(1, kappa as u32) {
                        s += laguerre(k[0], 2.0 * l * r2)
                            .map_err(|e| HeisError::Domain(e.to_string()))?;
                    }
                    radial[((ix * nx + iy) * nl + il) * nk + kappa] = s * gauss;
                }
            }
        }
    }

    // S_K at each probe and the base point.
    let mut lhs = vec![vec![Complex64::ZERO; nk]; probes.len() + 1];
    let all_points: Vec<&HPoint> = std::iter::once(&base).chain(probes.iter()).collect();
    for (ix, &x) in xy.nodes().iter().enumerate() {
        let wx = xy.weights()[ix];
        for (iy, &y) in xy.nodes().iter().enumerate() {
            let wy = xy.weights()[iy];
            let zeta = Complex64::new(x, y);
            for (it, &t) in tg.nodes().iter().enumerate() {
                let wt = tg.weights()[it];
                let w = HPoint::new(vec![zeta], t);
                // e_kappa^psi(w) for all kappa at once.
                let mut ek = vec![Complex64::ZERO; nk];
                for (il, &l) in lrule.nodes().iter().enumerate() {
                    let phase = Complex64::new(0.0, l * t).exp()
                        * (lrule.weights()[il] * psi_fn(l));
                    for (kappa, e) in ek.iter_mut().enumerate() {
                        *e += phase * radial[((ix * nx + iy) * nl + il) * nk + kappa];
                    }
                }
                let cell = wx * wy * wt;
                for (ip, omega) in all_points.iter().enumerate() {
                    let shifted = hn_mul(&hn_inv(omega), &w)?;
                    let fv = f(&shifted) * cell;
                    if fv != 0.0 {
                        for kappa in 0..nk {
                            lhs[ip][kappa] += fv * ek[kappa];
                        }
                    }
                }
            }
        }
    }
    // Partial sums over kappa.
    for row in &mut lhs {
        for kappa in 1..nk {
            let prev = row[kappa - 1];
            row[kappa] += prev;
        }
    }

    // Center-line target T(omega) = int f(omega^{-1}[0, s]) G(s) ds.
    let srule = PanelRule::gauss_legendre(&[(-12.0, 12.0, 96)]);
    let g_of = |s: f64| -> Complex64 {
        let mut acc = Complex64::ZERO;
        for (&l, &w) in lrule.nodes().iter().zip(lrule.weights()) {
            acc += w * psi_fn(l) / l * Complex64::new(0.0, l * s).exp();
        }
        acc
    };
    let target = |omega: &HPoint| -> Complex64 {
        let inv = hn_inv(omega);
        let mut acc = Complex64::ZERO;
        for (&s, &w) in srule.nodes().iter().zip(srule.weights()) {
            let p = hn_mul(&inv, &HPoint::new(vec![Complex64::ZERO], s)).unwrap();
            acc += w * f(&p) * g_of(s);
        }
        acc
    };

    // Fit the constant at the base point with the largest cutoff.
    let t_base = target(&base);
    let s_base = lhs[0][kmax as usize];
    if s_base.norm() == 0.0 {
        return Err(HeisError::Domain("degenerate base point in inversion check".into()));
    }
    let c = t_base / s_base;

    let t_probes: Vec<Complex64> = probes.iter().map(|p| target(p)).collect();
    let scale: f64 = t_probes.iter().map(|v| v.norm()).sum();
    let mut residuals = Vec::new();
    for &cutoff in cutoffs {
        let mut r = 0.0;
        for (ip, tv) in t_probes.iter().enumerate() {
            r += (c * lhs[ip + 1][cutoff as usize] - tv).norm();
        }
        residuals.push((cutoff, r / scale));
    }
    Ok(InversionCheck { residuals, constant_abs: c.norm() })
}
