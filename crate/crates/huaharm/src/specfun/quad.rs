//! Quadrature rules: Gauss-Hermite, generalized Gauss-Laguerre, Gauss-Legendre
//! panels and an adaptive half-line integrator.
//!
//! Gaussian nodes and weights come from the Golub-Welsch algorithm: the nodes
//! are the eigenvalues of the Jacobi matrix of the orthogonal-polynomial
//! recurrence and the weights are `mu0 * v[0]^2` for the normalized
//! eigenvectors `v`. The adaptive integrator is a classic adaptive Simpson
//! scheme on the half line split at 1, with `[1, inf)` mapped to `(0, 1]` by
//! `t -> 1/t`.

use nalgebra::DMatrix;
use statrs::function::gamma::gamma;

use super::SpecFunError;

/// Which family a [`QuadratureRule`] belongs to.
#[derive(Debug, Clone, PartialEq)]
pub enum RuleKind {
    /// Integrates `f` against `exp(-x^2)` on the real line.
    GaussHermite,
    /// Integrates `f` against `t^alpha exp(-t)` on `[0, inf)`.
    GaussLaguerre { alpha: f64 },
    /// Frozen composite rule for a plain integral over `(0, inf)`.
    AdaptiveHalfLine,
}

/// A fixed node/weight rule.  All weights are positive.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub kind: RuleKind,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Gauss-Hermite rule with `m` nodes; integrates polynomials of degree
    /// `<= 2m - 1` against `exp(-x^2)` exactly.
    pub fn gauss_hermite(m: usize) -> Result<Self, SpecFunError> {
        if m == 0 {
            return Err(SpecFunError::Domain("node count must be positive".into()));
        }
        let diag = vec![0.0; m];
        let off: Vec<f64> = (1..m).map(|i| (i as f64 / 2.0).sqrt()).collect();
        let (nodes, weights) = golub_welsch(&diag, &off, std::f64::consts::PI.sqrt());
        Ok(Self { kind: RuleKind::GaussHermite, nodes, weights })
    }

    /// Generalized Gauss-Laguerre rule with `m` nodes for the weight
    /// `t^alpha exp(-t)`, `alpha > -1`.
    pub fn gauss_laguerre(m: usize, alpha: f64) -> Result<Self, SpecFunError> {
        if m == 0 {
            return Err(SpecFunError::Domain("node count must be positive".into()));
        }
        if alpha <= -1.0 {
            return Err(SpecFunError::Domain(format!(
                "gauss-laguerre parameter must exceed -1, got {alpha}"
            )));
        }
        let diag: Vec<f64> = (0..m).map(|i| 2.0 * i as f64 + alpha + 1.0).collect();
        let off: Vec<f64> = (1..m).map(|i| (i as f64 * (i as f64 + alpha)).sqrt()).collect();
        let (nodes, weights) = golub_welsch(&diag, &off, gamma(alpha + 1.0));
        Ok(Self { kind: RuleKind::GaussLaguerre { alpha }, nodes, weights })
    }

    /// Freezes the panels visited by the adaptive half-line integrator on the
    /// probe integrand into an explicit positive-weight composite rule.
    pub fn adaptive_half_line<F: Fn(f64) -> f64>(
        probe: F,
        tol: f64,
    ) -> Result<Self, SpecFunError> {
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        {
            let mut record = |a: f64, b: f64, map: &dyn Fn(f64) -> (f64, f64)| {
                // Simpson points of the final panel, mapped to the half line.
                let h = b - a;
                for (u, w) in [(a, h / 6.0), (0.5 * (a + b), 4.0 * h / 6.0), (b, h / 6.0)] {
                    let (t, jac) = map(u);
                    nodes.push(t);
                    weights.push(w * jac);
                }
            };
            let ident = |u: f64| (u, 1.0);
            let invert = |u: f64| (1.0 / u, 1.0 / (u * u));
            adaptive_simpson_panels(&|u| probe(u), 0.0, 1.0, tol, &mut |a, b| {
                record(a, b, &ident)
            });
            adaptive_simpson_panels(
                &|u| if u == 0.0 { 0.0 } else { probe(1.0 / u) / (u * u) },
                0.0,
                1.0,
                tol,
                &mut |a, b| record(a, b, &invert),
            );
        }
        // The map endpoint u = 0 corresponds to t = inf; drop it.
        let kept: Vec<(f64, f64)> = nodes
            .iter()
            .zip(&weights)
            .filter(|(t, _)| t.is_finite())
            .map(|(t, w)| (*t, *w))
            .collect();
        Ok(Self {
            kind: RuleKind::AdaptiveHalfLine,
            nodes: kept.iter().map(|p| p.0).collect(),
            weights: kept.iter().map(|p| p.1).collect(),
        })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `sum_i w_i f(x_i)`.  For the Gaussian kinds the weight function is
    /// implicit in the weights.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

fn golub_welsch(diag: &[f64], off: &[f64], mu0: f64) -> (Vec<f64>, Vec<f64>) {
    let m = diag.len();
    let mut jac = DMatrix::<f64>::zeros(m, m);
    for i in 0..m {
        jac[(i, i)] = diag[i];
    }
    for i in 0..m - 1 {
        jac[(i, i + 1)] = off[i];
        jac[(i + 1, i)] = off[i];
    }
    let eig = jac.symmetric_eigen();
    let mut pairs: Vec<(f64, f64)> = (0..m)
        .map(|j| {
            let v0 = eig.eigenvectors[(0, j)];
            (eig.eigenvalues[j], mu0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    (pairs.iter().map(|p| p.0).collect(), pairs.iter().map(|p| p.1).collect())
}

/// Gauss-Legendre panel rule on a union of finite intervals.
#[derive(Debug, Clone)]
pub struct PanelRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl PanelRule {
    /// `panels` lists `(a, b, m)` triples; nodes/weights are the `m`-point
    /// Gauss-Legendre rule mapped onto each `[a, b]`.
    pub fn gauss_legendre(panels: &[(f64, f64, usize)]) -> Self {
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for &(a, b, m) in panels {
            let (x, w) = gauss_legendre_unit(m);
            let mid = 0.5 * (a + b);
            let half = 0.5 * (b - a);
            for i in 0..m {
                nodes.push(mid + half * x[i]);
                weights.push(half * w[i]);
            }
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

fn gauss_legendre_unit(m: usize) -> (Vec<f64>, Vec<f64>) {
    let diag = vec![0.0; m];
    let off: Vec<f64> = (1..m)
        .map(|i| {
            let i = i as f64;
            i / (4.0 * i * i - 1.0).sqrt()
        })
        .collect();
    golub_welsch(&diag, &off, 2.0)
}

/// Adaptive Simpson on `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fm = f(0.5 * (a + b));
    let fb = f(b);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48)
}

/// Adaptive Simpson with the tolerance scaled to the integral's magnitude:
/// a cheap low-accuracy pass estimates the size, the second pass runs at
/// `rel * |estimate|`.  Keeps the subdivision away from the roundoff floor
/// when the integrand is large.
pub fn adaptive_simpson_rel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel: f64) -> f64 {
    let probe = adaptive_simpson(f, a, b, 1e-3);
    adaptive_simpson(f, a, b, rel * probe.abs().max(1e-30))
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = f(0.5 * (a + m));
    let rm = f(0.5 * (m + b));
    let left = (m - a) / 6.0 * (fa + 4.0 * lm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * rm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol.max(1e-300) {
        return left + right + delta / 15.0;
    }
    let scaled = 0.5 * tol;
    simpson_rec(f, a, m, fa, lm, fm, left, scaled, depth - 1)
        + simpson_rec(f, m, b, fm, rm, fb, right, scaled, depth - 1)
}

/// Like [`adaptive_simpson`] but reports the final panels to `emit`.
fn adaptive_simpson_panels<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    emit: &mut dyn FnMut(f64, f64),
) {
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
        emit: &mut dyn FnMut(f64, f64),
    ) {
        let m = 0.5 * (a + b);
        let lm = f(0.5 * (a + m));
        let rm = f(0.5 * (m + b));
        let left = (m - a) / 6.0 * (fa + 4.0 * lm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * rm + fb);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol.max(1e-300) {
            emit(a, m);
            emit(m, b);
            return;
        }
        rec(f, a, m, fa, lm, fm, left, 0.5 * tol, depth - 1, emit);
        rec(f, m, b, fm, rm, fb, right, 0.5 * tol, depth - 1, emit);
    }
    let fa = f(a);
    let fm = f(0.5 * (a + b));
    let fb = f(b);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    rec(f, a, b, fa, fm, fb, whole, tol, 40, emit);
}

/// `int_0^inf f(t) dt` by splitting at 1 and inverting the tail.
pub fn integrate_half_line<F: Fn(f64) -> f64>(f: &F, tol: f64) -> f64 {
    let head = adaptive_simpson(&|t| f(t), 0.0, 1.0, tol);
    let tail = adaptive_simpson(
        &|u| if u == 0.0 { 0.0 } else { f(1.0 / u) / (u * u) },
        0.0,
        1.0,
        tol,
    );
    head + tail
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn hermite_rule_integrates_monomials_exactly() {
        let rule = QuadratureRule::gauss_hermite(8).unwrap();
        // int x^{2k} e^{-x^2} = Gamma(k + 1/2)
        let sqrt_pi = std::f64::consts::PI.sqrt();
        let expected = [sqrt_pi, 0.5 * sqrt_pi, 0.75 * sqrt_pi, 1.875 * sqrt_pi];
        for (k, want) in expected.iter().enumerate() {
            let got = rule.integrate(|x| x.powi(2 * k as i32));
            assert_abs_diff_eq!(got, *want, epsilon = 1e-12 * want);
        }
        // Degree 15 = 2m - 1 is still exact; odd powers vanish (up to roundoff
        // on the ~1e4-sized node powers entering the sum).
        assert_abs_diff_eq!(rule.integrate(|x| x.powi(15)), 0.0, epsilon = 1e-8);
    }

    #[test]
    fn laguerre_rule_matches_gamma_moments() {
        let rule = QuadratureRule::gauss_laguerre(24, -0.5).unwrap();
        // int t^{k - 1/2} e^{-t} = Gamma(k + 1/2)
        for k in 0..6 {
            let got = rule.integrate(|t| t.powi(k));
            let want = gamma(k as f64 + 0.5);
            assert_abs_diff_eq!(got, want, epsilon = 1e-11 * want);
        }
    }

    #[test]
    fn weights_positive_and_counts_agree() {
        for rule in [
            QuadratureRule::gauss_hermite(64).unwrap(),
            QuadratureRule::gauss_laguerre(64, 0.0).unwrap(),
            QuadratureRule::adaptive_half_line(|t| (-t).exp(), 1e-10).unwrap(),
        ] {
            assert_eq!(rule.node_count(), rule.nodes().len());
            assert_eq!(rule.node_count(), rule.weights().len());
            assert!(rule.weights().iter().all(|&w| w > 0.0));
        }
    }

    #[test]
    fn adaptive_half_line_rule_reproduces_exponential_integral() {
        let rule = QuadratureRule::adaptive_half_line(|t| (-t).exp(), 1e-12).unwrap();
        assert_abs_diff_eq!(rule.integrate(|t| (-t).exp()), 1.0, epsilon = 1e-9);
    }

    #[test]
    fn half_line_integrator_handles_algebraic_decay() {
        // int_0^inf dt / (1+t)^2 = 1
        let got = integrate_half_line(&|t| (1.0 + t).powi(-2), 1e-12);
        assert_abs_diff_eq!(got, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn legendre_panels_integrate_smooth_functions() {
        let rule = PanelRule::gauss_legendre(&[(0.0, 1.0, 16), (1.0, 3.0, 16)]);
        let got = rule.integrate(|x| x.sin());
        assert_abs_diff_eq!(got, 1.0 - 3.0f64.cos(), epsilon = 1e-13);
    }
}
