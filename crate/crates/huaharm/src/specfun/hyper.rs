//! The bounded solution of the confluent-hypergeometric-type half-line
//! equation
//!
//! ```text
//!     x y'' - gamma y' - (x + gamma + beta) y = 0,    gamma > 0, beta >= 0.
//! ```
//!
//! For `beta > 0` the bounded solution has the Laplace-transform form
//!
//! ```text
//!     y(x) = e^{-x} int_0^inf e^{-2xt} t^{beta/2 - 1} (1+t)^{-(1 + gamma + beta/2)} dt,
//! ```
//!
//! normalized here so that `y(0) = 1` (dividing by `B(beta/2, gamma + 1)`).
//! Substituting `h(u) = e^{x} y(x)`, `u = 2x`, identifies the integral as
//! `Gamma(beta/2) U(beta/2, -gamma, u)` with `U` the Tricomi function, which is
//! the unique (up to constant) bounded branch.  For `beta = 0` the solution is
//! exactly `e^{-x}`.
//!
//! Derivatives are taken under the integral sign: each `d/dx` pulls down
//! `-(1 + 2t)`, so the p-th derivative is a single non-oscillatory integral.
//! Derivatives up to the index `k` have finite limits at `0`; order `k + 1`
//! behaves like `x^{gamma - k}` (or `ln x` for integer `gamma`).

use statrs::function::gamma::gamma;

use super::quad::{adaptive_simpson_rel, QuadratureRule};
use super::SpecFunError;

/// Smallest integer greater than `x`, except that integers map to themselves
/// (the index `k` attached to `gamma` and `beta` throughout).
pub fn index_above(x: f64) -> i32 {
    let r = x.round();
    if (x - r).abs() < 1e-9 {
        r as i32
    } else {
        x.floor() as i32 + 1
    }
}

/// Bounded solution of the hypergeometric-type equation.
#[derive(Debug, Clone)]
pub struct BoundedHyperSolution {
    pub gamma: f64,
    pub beta: f64,
    /// Index `k`: derivatives up to this order stay finite at the boundary.
    pub k: i32,
    /// Primary half-line rule (Gauss-Laguerre matched to the `t^{beta/2-1}`
    /// endpoint factor); evaluation falls back to adaptive quadrature when the
    /// `m` vs `2m` node check fails.
    pub rule: QuadratureRule,
    rule_double: QuadratureRule,
    norm: f64,
}

const GL_NODES: usize = 72;
const GL_AGREEMENT: f64 = 1e-10;
const ADAPT_TOL: f64 = 1e-12;

impl BoundedHyperSolution {
    pub fn new(gamma_par: f64, beta: f64) -> Result<Self, SpecFunError> {
        if gamma_par <= 0.0 {
            return Err(SpecFunError::Domain(format!("gamma must be positive, got {gamma_par}")));
        }
        if beta < 0.0 {
            return Err(SpecFunError::Domain(format!("beta must be non-negative, got {beta}")));
        }
        let q = beta / 2.0;
        let alpha = if beta > 0.0 { q - 1.0 } else { 0.0 };
        let rule = QuadratureRule::gauss_laguerre(GL_NODES, alpha)?;
        let rule_double = QuadratureRule::gauss_laguerre(2 * GL_NODES, alpha)?;
        let norm = if beta > 0.0 {
            // B(beta/2, gamma + 1) = y_raw(0)
            gamma(q) * gamma(gamma_par + 1.0) / gamma(q + gamma_par + 1.0)
        } else {
            1.0
        };
        Ok(Self { gamma: gamma_par, beta, k: index_above(gamma_par), rule, rule_double, norm })
    }

    /// `y(x)`, normalized to `y(0) = 1`.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.derivative(0, x).expect("order 0 is always certified")
    }

    /// p-th derivative at `x >= 0` by differentiation under the integral.
    ///
    /// Orders above `k + 1` are rejected (their boundary behavior is not
    /// certified), as is order `k + 1` at `x = 0` where it diverges.
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
        if self.beta == 0.0 {
            // y = e^{-x} exactly.
            let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
            return Ok(sign * (-x).exp());
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
        Ok(sign * self.raw_integral(p, x) / self.norm)
    }

    /// Residual of the defining equation at `x`, for diagnostics and tests.
    pub fn ode_residual(&self, x: f64) -> Result<f64, SpecFunError> {
        let y = self.derivative(0, x)?;
        let yp = self.derivative(1, x)?;
        let ypp = self.derivative(2, x)?;
        Ok(x * ypp - self.gamma * yp - (x + self.gamma + self.beta) * y)
    }

    /// `int_0^inf e^{-x(1+2t)} (1+2t)^p t^{beta/2-1} (1+t)^{-(1+gamma+beta/2)} dt`.
    fn raw_integral(&self, p: u32, x: f64) -> f64 {
        let q = self.beta / 2.0;
        let c1 = 1.0 + self.gamma + q;
        let pw = p as f64;
        if x > 0.0 {
            // Gauss-Laguerre in s = 2xt with weight s^{q-1} e^{-s}.
            let f = |s: f64| (1.0 + s / x).powf(pw) * (1.0 + s / (2.0 * x)).powf(-c1);
            let scale = (-x).exp() * (2.0 * x).powf(-q);
            let coarse = scale * self.rule.integrate(f);
            let fine = scale * self.rule_double.integrate(f);
            if (coarse - fine).abs() <= GL_AGREEMENT * fine.abs().max(1e-300) {
                return fine;
            }
        }
        self.adaptive_integral(p, x)
    }

    fn adaptive_integral(&self, p: u32, x: f64) -> f64 {
        let q = self.beta / 2.0;
        let c1 = 1.0 + self.gamma + q;
        let pw = p as f64;
        // Head t in (0, 1]: substitute t = u^m to absorb the t^{q-1} factor.
        let m = (4.0 / q).ceil().max(1.0);
        let head = adaptive_simpson_rel(
            &|u: f64| {
                if u <= 0.0 {
                    return 0.0;
                }
                let t = u.powf(m);
                m * u.powf(m * q - 1.0)
                    * (-x * (1.0 + 2.0 * t)).exp()
                    * (1.0 + 2.0 * t).powf(pw)
                    * (1.0 + t).powf(-c1)
            },
            0.0,
            1.0,
            ADAPT_TOL,
        );
        // Tail t in [1, inf) -> v in (0, 1]: integrand ~ v^{gamma - p} near 0.
        let expo = self.gamma - pw;
        let mv = if expo > -1.0 { (4.0 / (expo + 1.0)).ceil().max(1.0) } else { 1.0 };
        let tail = adaptive_simpson_rel(
            &|r: f64| {
                if r <= 0.0 {
                    return 0.0;
                }
                let v = r.powf(mv);
                let damp = (-x * (1.0 + 2.0 / v)).exp();
                if damp == 0.0 {
                    return 0.0;
                }
                mv * r.powf(mv * (expo + 1.0) - 1.0) * (v + 2.0).powf(pw) * (1.0 + v).powf(-c1)
                    * damp
            },
            0.0,
            1.0,
            ADAPT_TOL,
        );
        head + tail
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn index_above_follows_the_integer_convention() {
        assert_eq!(index_above(0.5), 1);
        assert_eq!(index_above(1.0), 1);
        assert_eq!(index_above(1.3), 2);
        assert_eq!(index_above(2.0), 2);
        assert_eq!(index_above(2.5), 3);
    }

    #[test]
    fn beta_zero_is_exactly_exp() {
        let sol = BoundedHyperSolution::new(2.0, 0.0).unwrap();
        assert_abs_diff_eq!(sol.evaluate(1.0), (-1.0f64).exp(), epsilon = 1e-15);
        assert_abs_diff_eq!(sol.derivative(1, 1.0).unwrap(), -(-1.0f64).exp(), epsilon = 1e-15);
    }

    #[test]
    fn normalization_at_zero() {
        for (g, b) in [(1.0, 2.0), (0.5, 1.0), (2.5, 2.0)] {
            let sol = BoundedHyperSolution::new(g, b).unwrap();
            assert_abs_diff_eq!(sol.evaluate(0.0), 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn ode_residual_small_on_log_grid() {
        for (g, b) in [(0.5, 1.0), (1.0, 1.0), (1.3, 2.0), (2.5, 1.0)] {
            let sol = BoundedHyperSolution::new(g, b).unwrap();
            for i in 0..20 {
                let x = 0.1 * (100.0f64).powf(i as f64 / 19.0);
                let res = sol.ode_residual(x).unwrap();
                let y = sol.evaluate(x);
                assert!(
                    res.abs() <= 1e-6 * y.abs(),
                    "residual {res:.3e} vs y {y:.3e} at x={x} (gamma={g}, beta={b})"
                );
            }
        }
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let sol = BoundedHyperSolution::new(1.3, 1.0).unwrap();
        let h = 1e-5;
        for x in [0.5, 1.0, 3.0] {
            let fd = (sol.evaluate(x + h) - sol.evaluate(x - h)) / (2.0 * h);
            assert_abs_diff_eq!(sol.derivative(1, x).unwrap(), fd, epsilon = 1e-8);
        }
    }

    #[test]
    fn derivative_order_guard() {
        let sol = BoundedHyperSolution::new(0.5, 1.0).unwrap();
        assert_eq!(sol.k, 1);
        assert!(sol.derivative(2, 0.5).is_ok());
        assert!(sol.derivative(3, 0.5).is_err());
        assert!(sol.derivative(2, 0.0).is_err());
    }

    #[test]
    fn parameter_validation() {
        assert!(BoundedHyperSolution::new(0.0, 1.0).is_err());
        assert!(BoundedHyperSolution::new(-1.0, 1.0).is_err());
        assert!(BoundedHyperSolution::new(1.0, -0.1).is_err());
    }

    #[test]
    fn decays_for_large_x() {
        let sol = BoundedHyperSolution::new(1.0, 2.0).unwrap();
        let mut prev = sol.evaluate(2.0);
        for i in 1..8 {
            let cur = sol.evaluate(2.0 + i as f64);
            assert!(cur > 0.0 && cur < prev);
            prev = cur;
        }
    }
}
