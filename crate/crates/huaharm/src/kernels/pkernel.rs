//! The Poisson kernel `P_a^alpha` on `H^n` as a truncated spherical
//! expansion
//!
//! ```text
//!     P_a^alpha(w) = c_n int_R sum_kappa e_kappa^lambda(w^{-1})
//!                    g_{alpha,kappa}(|lambda| a) |lambda|^n dlambda,
//! ```
//!
//! with the `kappa`-sum cut at `kappa_max` and the `lambda`-integral on a
//! graded Gauss-Legendre grid over `+-[0.1, 10]`.  The overall constant is
//! not derived: it is fixed once by unit mass on a reference box, and all
//! later uses are relative.

use num_complex::Complex64;

use crate::heisenberg::point::{hn_inv, HPoint};
use crate::heisenberg::rep::e_kappa_lambda;
use crate::specfun::hyper::BoundedHyperSolution;
use crate::specfun::quad::PanelRule;

use super::probes::g_radial_solution;
use super::KernelError;

/// Truncation and grid parameters of the kernel.
pub struct HKernelSpec {
    pub alpha: f64,
    pub n: usize,
    pub kappa_max: u32,
    lambda_rule: PanelRule,
    profiles: Vec<BoundedHyperSolution>,
    c_n: f64,
}

/// One kernel evaluation with truncation diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct PKernelValue {
    pub value: f64,
    /// l1 size of the last kappa band over the lambda grid, relative to the
    /// total; above 0.01 the truncation is flagged.
    pub tail_ratio: f64,
    pub truncation_warning: bool,
}

/// Box for mass integrals on `H^1`, exploiting the radial symmetry in zeta.
#[derive(Debug, Clone, Copy)]
pub struct MassBox {
    pub rho_max: f64,
    pub t_max: f64,
    pub rho_nodes: usize,
    pub t_nodes: usize,
}

impl Default for MassBox {
    fn default() -> Self {
        Self { rho_max: 6.0, t_max: 40.0, rho_nodes: 56, t_nodes: 200 }
    }
}

impl HKernelSpec {
    /// Uncalibrated spec (`c_n = 1`) with the default graded lambda grid:
    /// 64 Gauss-Legendre nodes per sign on `[0.1, 10]`.
    pub fn new(alpha: f64, n: usize, kappa_max: u32) -> Result<Self, KernelError> {
        if alpha <= 0.0 {
            return Err(KernelError::Domain(format!("alpha must be positive, got {alpha}")));
        }
        let mut panels = Vec::new();
        for sign in [-1.0f64, 1.0] {
            for (a, b, m) in [(0.1, 0.5, 24), (0.5, 2.0, 20), (2.0, 10.0, 20)] {
                let (lo, hi) = if sign > 0.0 { (a, b) } else { (-b, -a) };
                panels.push((lo, hi, m));
            }
        }
        let profiles: Result<Vec<_>, _> =
            (0..=kappa_max).map(|k| g_radial_solution(alpha, n, k)).collect();
        Ok(Self {
            alpha,
            n,
            kappa_max,
            lambda_rule: PanelRule::gauss_legendre(&panels),
            profiles: profiles?,
            c_n: 1.0,
        })
    }

    /// Calibrates `c_n` by enforcing unit mass over `mass_box` at `a_ref`
    /// (n = 1 only).
    pub fn calibrated(
        alpha: f64,
        n: usize,
        kappa_max: u32,
        mass_box: &MassBox,
        a_ref: f64,
    ) -> Result<Self, KernelError> {
        let mut spec = Self::new(alpha, n, kappa_max)?;
        let raw = spec.mass(mass_box, a_ref)?;
        if raw.abs() < 1e-12 {
            return Err(KernelError::Domain("degenerate mass calibration".into()));
        }
        spec.c_n = 1.0 / raw;
        Ok(spec)
    }

    pub fn constant(&self) -> f64 {
        self.c_n
    }

    /// One term `e_kappa^lambda(w^{-1}) g(|lambda| a)` of the expansion.
    pub fn term(&self, lambda: f64, kappa: u32, w: &HPoint, a: f64) -> Result<Complex64, KernelError> {
        if kappa > self.kappa_max {
            return Err(KernelError::Domain(format!(
                "kappa {kappa} above truncation {}",
                self.kappa_max
            )));
        }
        let e = e_kappa_lambda(lambda, kappa, &hn_inv(w))?;
        let g = self.profiles[kappa as usize].evaluate(lambda.abs() * a);
        Ok(e * g)
    }

    /// Truncated kernel value at `(w, a)`, `a > 0`.
    pub fn p_kernel(&self, w: &HPoint, a: f64) -> Result<PKernelValue, KernelError> {
        if a <= 0.0 {
            return Err(KernelError::Domain(format!(
                "p_kernel needs a > 0 for the band profiles to decay, got {a}"
            )));
        }
        let inv = hn_inv(w);
        let nf = self.n as i32;
        let mut total = Complex64::ZERO;
        let mut head_l1 = 0.0f64;
        let mut tail_l1 = 0.0f64;
        for (&lam, &wt) in self.lambda_rule.nodes().iter().zip(self.lambda_rule.weights()) {
            let weight = wt * lam.abs().powi(nf);
            for kappa in 0..=self.kappa_max {
                let e = e_kappa_lambda(lam, kappa, &inv)?;
                let g = self.profiles[kappa as usize].evaluate(lam.abs() * a);
                let term = weight * e * g;
                total += term;
                if kappa == self.kappa_max {
                    tail_l1 += term.norm();
                } else {
                    head_l1 += term.norm();
                }
            }
        }
        let tail_ratio = tail_l1 / (head_l1 + tail_l1).max(1e-300);
        Ok(PKernelValue {
            value: self.c_n * total.re,
            tail_ratio,
            truncation_warning: tail_ratio > 0.01,
        })
    }

    /// Grid mass `int_box P_a^alpha` for n = 1, via the radial symmetry in
    /// zeta: `int = int_0^R 2 pi rho int_{-T}^{T} P([rho, 0], t) dt drho`.
    pub fn mass(&self, b: &MassBox, a: f64) -> Result<f64, KernelError> {
        if self.n != 1 {
            return Err(KernelError::Domain("mass integral implemented for n = 1".into()));
        }
        let rho = PanelRule::gauss_legendre(&[
            (0.0, 1.0, b.rho_nodes / 2),
            (1.0, b.rho_max, b.rho_nodes / 2),
        ]);
        let tg = PanelRule::gauss_legendre(&[
            (-b.t_max, 0.0, b.t_nodes / 2),
            (0.0, b.t_max, b.t_nodes / 2),
        ]);
        let rows: Vec<f64> = rho
            .nodes()
            .iter()
            .zip(rho.weights())
            .map(|(&r, &wr)| -> Result<f64, KernelError> {
                let mut acc = 0.0;
                for (&t, &wt) in tg.nodes().iter().zip(tg.weights()) {
                    let w = HPoint::new(vec![Complex64::new(r, 0.0)], t);
                    acc += wt * self.p_kernel(&w, a)?.value;
                }
                Ok(wr * 2.0 * std::f64::consts::PI * r * acc)
            })
            .collect::<Result<_, _>>()?;
        Ok(rows.iter().sum())
    }
}
