//! Derivative probes `I_p(a)` of bounded harmonic extensions.
//!
//! On `C^n`, for trigonometric data the pairing against a test profile
//! collapses onto the modes:
//!
//! ```text
//!     I_p(a) = alpha^p sum_m c_m phihat(-xi_m) |xi_m|^{2p} z^{(p)}(alpha |xi_m|^2 a).
//! ```
//!
//! On `H^n`, for boundary data given as a finite sum of spherical atoms
//! `b_j e_{kappa_j}^{lambda_j}`, the probe against `e_kappa^psi` uses the
//! eigenfunction structure and reduces to
//!
//! ```text
//!     sum_{j : kappa_j = kappa} b_j psi(lambda_j) |lambda_j|^p g^{(p)}(|lambda_j| a),
//! ```
//!
//! with `g` the bounded radial profile of the level-`kappa` band; no
//! `(2n+1)`-dimensional quadrature is involved.

use num_complex::Complex64;

use crate::heisenberg::LambdaProfile;
use crate::specfun::hyper::{index_above, BoundedHyperSolution};
use crate::specfun::quad::adaptive_simpson_rel;

use super::multiplier::{RadialMultiplier, TestProfile, TrigBoundaryData};
use super::KernelError;

/// `I_p(a)` for trigonometric data on `C^n`.
pub fn i_p_probe(
    data: &TrigBoundaryData,
    mult: &RadialMultiplier,
    profile: &TestProfile,
    p: u32,
    a: f64,
) -> Result<Complex64, KernelError> {
    let k = mult.index();
    if p as i32 > k + 1 {
        return Err(KernelError::ProbeOrder(p, k));
    }
    let mut acc = Complex64::ZERO;
    for (xi, c) in &data.modes {
        let xi2: f64 = xi.iter().map(|x| x * x).sum();
        if xi2 == 0.0 {
            // Zero frequency: z(0 . a) = 1 identically, so only p = 0 sees it.
            if p == 0 {
                let neg: Vec<f64> = xi.iter().map(|x| -x).collect();
                acc += c * profile.hat(&neg);
            }
            continue;
        }
        let neg: Vec<f64> = xi.iter().map(|x| -x).collect();
        let zp = mult.z_derivative(p, mult.alpha * xi2 * a)?;
        acc += c * profile.hat(&neg) * xi2.powi(p as i32) * zp;
    }
    Ok(mult.alpha.powi(p as i32) * acc)
}

/// `g_radial(alpha, n, kappa, x)`: the bounded radial profile of the
/// level-`kappa` band, i.e. the bounded solution with `gamma = alpha n`,
/// `beta = 2 alpha kappa`, normalized to 1 at 0.
pub fn g_radial(alpha: f64, n: usize, kappa: u32, x: f64) -> Result<f64, KernelError> {
    Ok(g_radial_solution(alpha, n, kappa)?.evaluate(x))
}

pub fn g_radial_solution(
    alpha: f64,
    n: usize,
    kappa: u32,
) -> Result<BoundedHyperSolution, KernelError> {
    Ok(BoundedHyperSolution::new(alpha * n as f64, 2.0 * alpha * kappa as f64)?)
}

/// A spherical atom `coeff . e_kappa^lambda` of boundary data on `H^n`.
#[derive(Debug, Clone)]
pub struct HeisAtom {
    pub lambda: f64,
    pub kappa: u32,
    pub coeff: Complex64,
}

/// Closed-form probe of atomic data against `e_kappa^psi` at derivative
/// order `p`.
pub fn heis_i_probe(
    atoms: &[HeisAtom],
    alpha: f64,
    n: usize,
    psi: &LambdaProfile,
    kappa: u32,
    p: u32,
    a: f64,
) -> Result<Complex64, KernelError> {
    let k = index_above(alpha * n as f64);
    if p as i32 > k + 1 {
        return Err(KernelError::ProbeOrder(p, k));
    }
    let g = g_radial_solution(alpha, n, kappa)?;
    let mut acc = Complex64::ZERO;
    for atom in atoms {
        if atom.kappa != kappa || atom.lambda == 0.0 {
            continue;
        }
        let la = atom.lambda.abs();
        acc += atom.coeff * psi.eval(atom.lambda) * la.powi(p as i32) * g.derivative(p, la * a)?;
    }
    Ok(acc)
}

/// Evaluates the closed-form solution of `a psi_p' + (p - 1 - n alpha) psi_p
/// = g_p(a)`:
///
/// ```text
///     psi_p(a) = lambda a^q + a^q int_1^a g_p(t) / t^{q+1} dt,
///     q = n alpha - p + 1,
/// ```
///
/// by adaptive quadrature.  The degenerate case `p - 1 - n alpha = 0` is
/// rejected.
pub fn psi_p_ode(
    n: usize,
    alpha: f64,
    p: u32,
    g_p: &dyn Fn(f64) -> f64,
    lambda_const: f64,
    a: f64,
) -> Result<f64, KernelError> {
    let na = alpha * n as f64;
    let q = na - p as f64 + 1.0;
    if q.abs() < 1e-12 {
        return Err(KernelError::DegenerateExponent(p, na));
    }
    let k = index_above(na);
    if p as i32 > k {
        return Err(KernelError::ProbeOrder(p, k - 1));
    }
    if a <= 0.0 {
        return Err(KernelError::Domain(format!("a must be positive, got {a}")));
    }
    let integral = if (a - 1.0).abs() < 1e-300 {
        0.0
    } else {
        let f = |t: f64| g_p(t) * t.powf(-q - 1.0);
        if a < 1.0 {
            -adaptive_simpson_rel(&f, a, 1.0, 1e-12)
        } else {
            adaptive_simpson_rel(&f, 1.0, a, 1e-12)
        }
    };
    Ok(lambda_const * a.powf(q) + a.powf(q) * integral)
}

/// Samples `psi_p` on a decreasing grid and verifies a finite limit at 0
/// (Cauchy criterion); returns the limiting value.  Valid for `q > 0`.
pub fn psi_p_boundary_limit(
    n: usize,
    alpha: f64,
    p: u32,
    g_p: &dyn Fn(f64) -> f64,
    lambda_const: f64,
) -> Result<f64, KernelError> {
    let q = alpha * n as f64 - p as f64 + 1.0;
    if q <= 0.0 {
        return Err(KernelError::Domain(format!(
            "boundary limit requires n alpha - p + 1 > 0, got {q}"
        )));
    }
    // Convergence is like a^q, so the grid is taken deep enough for the
    // smallest admissible q before applying the Cauchy criterion.
    let mut prev = None;
    let mut value = 0.0;
    for i in 0..34 {
        let a = 0.5f64.powi(i + 2);
        value = psi_p_ode(n, alpha, p, g_p, lambda_const, a)?;
        if let Some(pv) = prev {
            let diff = (value - pv as f64).abs();
            if i >= 30 && diff > 1e-5 * (1.0 + value.abs()) {
                return Err(KernelError::Domain(format!(
                    "psi_p does not settle: diff {diff} at a = {a}"
                )));
            }
        }
        prev = Some(value);
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::geometric_grid;
    use approx::assert_abs_diff_eq;

    #[test]
    fn constant_data_probes_vanish_for_positive_order() {
        let data = TrigBoundaryData::constant(1, Complex64::new(3.0, 0.0));
        let m = RadialMultiplier::new(0.7, 1).unwrap();
        let prof = TestProfile::ring_bump(1.0, 0.5).unwrap();
        for p in 1..=2u32 {
            for a in [0.01, 0.1, 1.0] {
                assert_eq!(i_p_probe(&data, &m, &prof, p, a).unwrap(), Complex64::ZERO);
            }
        }
        // p = 0 pairs f with the profile; for constant data that is
        // c . phihat(0) = 0 since the profile avoids the zero frequency.
        assert_eq!(i_p_probe(&data, &m, &prof, 0, 0.3).unwrap(), Complex64::ZERO);
    }

    #[test]
    fn zero_order_probe_at_zero_height_pairs_data_and_profile() {
        let data = TrigBoundaryData::new(vec![
            (vec![1.0, 0.0], Complex64::new(1.5, 0.0)),
            (vec![0.0, 1.2], Complex64::new(0.0, -2.0)),
        ]);
        let m = RadialMultiplier::new(0.7, 1).unwrap();
        let prof = TestProfile::ring_bump(1.1, 0.4).unwrap();
        let got = i_p_probe(&data, &m, &prof, 0, 0.0).unwrap();
        let want: Complex64 = data
            .modes
            .iter()
            .map(|(xi, c)| {
                let neg: Vec<f64> = xi.iter().map(|x| -x).collect();
                c * prof.hat(&neg)
            })
            .sum();
        assert!((got - want).norm() <= 1e-14);
    }

    #[test]
    fn single_mode_blowup_rate() {
        // alpha = 0.7, n = 1: k = 1 and the order-(k+1) probe blows up like
        // a^{n alpha - k} = a^{-0.3}.
        let alpha = 0.7;
        let data = TrigBoundaryData::new(vec![(vec![1.0, 0.0], Complex64::ONE)]);
        let m = RadialMultiplier::new(alpha, 1).unwrap();
        let prof = TestProfile::ring_bump(1.0, 0.5).unwrap();
        let grid = geometric_grid(2e-4, 2e-2, 16);
        let samples: Vec<(f64, f64)> = grid
            .iter()
            .map(|&a| (a, i_p_probe(&data, &m, &prof, 2, a).unwrap().norm()))
            .collect();
        let fit = crate::specfun::fit_power_or_log(&samples).unwrap();
        assert!(!fit.log_flag);
        assert!((fit.exponent + 0.3).abs() <= 0.03, "exponent {}", fit.exponent);
    }

    #[test]
    fn g_radial_base_cases() {
        // kappa = 0 collapses to e^{-x}.
        assert_abs_diff_eq!(g_radial(0.5, 1, 0, 1.3).unwrap(), (-1.3f64).exp(), epsilon = 1e-14);
        assert_abs_diff_eq!(g_radial(0.8, 2, 3, 0.0).unwrap(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn g_radial_satisfies_the_level_equation() {
        // g'' - (alpha n / a) g' - (rho / a + 1) g = 0 with
        // rho = alpha (2 kappa + n).
        let (alpha, n, kappa) = (0.5, 1usize, 2u32);
        let g = g_radial_solution(alpha, n, kappa).unwrap();
        let rho = alpha * (2.0 * kappa as f64 + n as f64);
        for i in 0..10 {
            let x = 0.1 * (100.0f64).powf(i as f64 / 9.0);
            let res = g.derivative(2, x).unwrap()
                - alpha * n as f64 / x * g.derivative(1, x).unwrap()
                - (rho / x + 1.0) * g.evaluate(x);
            assert!(res.abs() <= 1e-6 * g.evaluate(x).abs(), "residual {res} at {x}");
        }
    }

    #[test]
    fn heis_probe_selects_matching_atoms() {
        let psi = LambdaProfile::new(vec![(0.25, 4.0)], |_| 1.0).unwrap();
        let atoms = vec![
            HeisAtom { lambda: 1.0, kappa: 0, coeff: Complex64::ONE },
            HeisAtom { lambda: 2.0, kappa: 1, coeff: Complex64::new(0.0, 2.0) },
        ];
        // kappa = 0 band: g = e^{-x}, probe = 1 . 1 . e^{-a}.
        let v = heis_i_probe(&atoms, 0.5, 1, &psi, 0, 0, 0.7).unwrap();
        assert_abs_diff_eq!(v.re, (-0.7f64).exp(), epsilon = 1e-12);
        // kappa = 2 band: nothing there.
        assert_eq!(heis_i_probe(&atoms, 0.5, 1, &psi, 2, 0, 0.7).unwrap(), Complex64::ZERO);
    }

    #[test]
    fn heis_probe_lambda_scaling() {
        // probe(lambda, a) = lambda^p . probe(1, lambda a) for a single atom
        // with flat psi.
        let psi = LambdaProfile::new(vec![(0.25, 8.0)], |_| 1.0).unwrap();
        let mk = |lambda: f64| {
            vec![HeisAtom { lambda, kappa: 1, coeff: Complex64::ONE }]
        };
        let (alpha, n, p) = (0.5, 1usize, 2u32);
        let lam = 2.0;
        let a = 0.3;
        let lhs = heis_i_probe(&mk(lam), alpha, n, &psi, 1, p, a).unwrap();
        let rhs = lam.powi(p as i32) * heis_i_probe(&mk(1.0), alpha, n, &psi, 1, p, lam * a).unwrap();
        assert!((lhs - rhs).norm() <= 1e-9 * rhs.norm());
    }

    #[test]
    fn probe_order_guard() {
        let data = TrigBoundaryData::constant(1, Complex64::ONE);
        let m = RadialMultiplier::new(0.7, 1).unwrap();
        let prof = TestProfile::ring_bump(1.0, 0.5).unwrap();
        assert!(i_p_probe(&data, &m, &prof, 3, 0.5).is_err());
    }

    #[test]
    fn psi_p_closed_forms() {
        // g_p = 0, lambda = 0: identically zero.
        for a in [0.1, 1.0, 2.0] {
            assert_eq!(psi_p_ode(1, 0.7, 1, &|_| 0.0, 0.0, a).unwrap(), 0.0);
        }
        // g_p = c: psi_p = lambda a^q + (c/q)(a^q - 1) -> -c/q as a -> 0.
        let (n, alpha, p, c) = (1usize, 0.7, 1u32, 2.0);
        let q = alpha - 1.0 + 1.0;
        let got = psi_p_boundary_limit(n, alpha, p, &move |_| c, 3.0).unwrap();
        assert_abs_diff_eq!(got, -c / q, epsilon = 1e-4);
    }

    #[test]
    fn psi_p_plugs_back_into_the_ode() {
        // a psi' + (p - 1 - n alpha) psi = g_p(a).
        let (n, alpha, p) = (1usize, 0.7, 1u32);
        let g = |t: f64| (1.0 + t).recip();
        let lam = 0.4;
        let h = 1e-5;
        for a in [0.3, 0.8, 1.7] {
            let psi = |x: f64| psi_p_ode(n, alpha, p, &g, lam, x).unwrap();
            let dpsi = (psi(a + h) - psi(a - h)) / (2.0 * h);
            let res = a * dpsi + (p as f64 - 1.0 - alpha) * psi(a) - g(a);
            assert!(res.abs() <= 1e-8, "residual {res} at a = {a}");
        }
    }

    #[test]
    fn psi_p_guards() {
        // Order above k is rejected.
        assert!(matches!(
            psi_p_ode(1, 0.7, 2, &|_| 0.0, 0.0, 0.5),
            Err(KernelError::ProbeOrder(..))
        ));
        // q = n alpha - p + 1 numerically zero is rejected before quadrature.
        assert!(matches!(
            psi_p_ode(1, 1.0 - 1e-14, 2, &|_| 0.0, 0.0, 0.5),
            Err(KernelError::DegenerateExponent(..))
        ));
        assert!(psi_p_ode(1, 0.7, 1, &|_| 0.0, 0.0, 0.0).is_err());
    }
}
