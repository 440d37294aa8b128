//! The bounded solution of the Legendre-type half-line equation
//!
//! ```text
//!     x z'' - beta z' - z = 0,    beta > 0,
//! ```
//!
//! realized by the Laplace-method integral
//!
//! ```text
//!     z(x) = (1 / Gamma(beta + 1)) int_0^inf e^{-xt} e^{-1/t} t^{-(2+beta)} dt,
//! ```
//!
//! which satisfies `z(0) = 1` exactly (substitute `u = 1/t`).  The solution is
//! positive, strictly decreasing, and its derivatives have finite limits at
//! `0` up to the index `k`; order `k + 1` behaves like `x^{beta - k}`
//! (or `ln x` for integer `beta`).

use statrs::function::gamma::gamma;

use super::quad::{adaptive_simpson_rel, QuadratureRule};
use super::SpecFunError;
use super::hyper::index_above;

#[derive(Debug, Clone)]
pub struct BoundedLegendreSolution {
    pub beta: f64,
    /// Index `k`: derivatives up to this order stay finite at the boundary.
    pub k: i32,
    /// Primary rule for the `u in [1, inf)` piece after `t -> 1/u`.
    pub rule: QuadratureRule,
    rule_double: QuadratureRule,
    /// `Gamma(beta + 1)`, the value forcing `z(0) = 1`.
    pub normalization: f64,
}

const GL_NODES: usize = 64;
const GL_AGREEMENT: f64 = 1e-10;
const ADAPT_TOL: f64 = 1e-13;

impl BoundedLegendreSolution {
    pub fn new(beta: f64) -> Result<Self, SpecFunError> {
        if beta <= 0.0 {
            return Err(SpecFunError::Domain(format!("beta must be positive, got {beta}")));
        }
        Ok(Self {
            beta,
            k: index_above(beta),
            rule: QuadratureRule::gauss_laguerre(GL_NODES, 0.0)?,
            rule_double: QuadratureRule::gauss_laguerre(2 * GL_NODES, 0.0)?,
            normalization: gamma(beta + 1.0),
        })
    }

    /// `z(x)`, with `z(0) = 1`.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.derivative(0, x).expect("order 0 is always certified")
    }

    /// p-th derivative at `x >= 0`; each `d/dx` pulls down `-t` under the
    /// integral.  Orders above `k + 1` are rejected.
    pub fn derivative(&self, p: u32, x: f64) -> Result<f64, SpecFunError> {
        if p as i32 > self.k + 1 {
            return Err(SpecFunError::Domain(format!(
                "derivative order {p} exceeds certified order k + 1 = {}",
                self.k + 1
            )));
        }
        if x < 0.0 {
            return Err(SpecFunError::Domain(format!("x must be non-negative, got {x}")));
        }
        if x == 0.0 {
            if p == 0 {
                return Ok(1.0);
            }
            if p as i32 == self.k + 1 {
                return Err(SpecFunError::Domain(
                    "derivative of order k + 1 diverges at x = 0".into(),
                ));
            }
        }
        let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
        Ok(sign * self.raw_integral(p, x) / self.normalization)
    }

    /// Residual of `x z'' - beta z' - z` at `x`.
    pub fn ode_residual(&self, x: f64) -> Result<f64, SpecFunError> {
        let z = self.derivative(0, x)?;
        let zp = self.derivative(1, x)?;
        let zpp = self.derivative(2, x)?;
        Ok(x * zpp - self.beta * zp - z)
    }

    /// `int_0^inf e^{-xt} e^{-1/t} t^{p - 2 - beta} dt`, split at `t = 1`.
    fn raw_integral(&self, p: u32, x: f64) -> f64 {
        let pw = p as f64;
        let b = self.beta;
        // t in (0, 1] -> u = 1/t in [1, inf): integrand e^{-x/u - u} u^{beta - p}.
        let head = {
            let f = |s: f64| {
                let u = 1.0 + s;
                (-x / u).exp() * (-1.0f64).exp() * u.powf(b - pw)
            };
            let coarse = self.rule.integrate(f);
            let fine = self.rule_double.integrate(f);
            if (coarse - fine).abs() <= GL_AGREEMENT * fine.abs().max(1e-300) {
                fine
            } else {
                adaptive_simpson_rel(
                    &|w: f64| {
                        // u = 1/w maps [1, inf) back onto (0, 1].
                        if w <= 0.0 {
                            return 0.0;
                        }
                        let u = 1.0 / w;
                        (-x / u - u).exp() * u.powf(b - pw) / (w * w)
                    },
                    0.0,
                    1.0,
                    ADAPT_TOL,
                )
            }
        };
        // t in [1, inf) -> v = 1/t in (0, 1]: integrand e^{-x/v - v} v^{beta - p}.
        let expo = b - pw;
        let mv = if expo > -1.0 { (4.0 / (expo + 1.0)).ceil().max(1.0) } else { 1.0 };
        let tail = adaptive_simpson_rel(
            &|r: f64| {
                if r <= 0.0 {
                    return 0.0;
                }
                let v = r.powf(mv);
                let damp = (-x / v - v).exp();
                if damp == 0.0 {
                    return 0.0;
                }
                mv * r.powf(mv * (expo + 1.0) - 1.0) * damp
            },
            0.0,
            1.0,
            ADAPT_TOL,
        );
        head + tail
    }
}
