//! Left-invariant vector fields as finite-difference derivations along
//! one-parameter subgroups, and the second-order operators built from them.
//!
//! On `H^n`:
//!
//! ```text
//!   X_j = d/dx_j + 2 y_j d/dt,   Y_j = d/dy_j - 2 x_j d/dt,   T = d/dt,
//!   Zbar_j = (X_j + i Y_j)/2,    Z_j = (X_j - i Y_j)/2,
//!   calL_alpha = -(1/4) sum_j (X_j^2 + Y_j^2) + i alpha T.
//! ```
//!
//! On `S` the same tags differentiate the `(zeta, t)`-slice at fixed level
//! `a`, with `a d/da` and `Z_{n+1} = (T - i d/da)/2` completing the list, and
//!
//! ```text
//!   L_alpha = -alpha a (calL + n d/da) + a^2 (d/da^2 + T^2).
//! ```
//!
//! Derivatives are central differences along the exact subgroup curves with
//! Richardson extrapolation; a single invariant field applied twice is the
//! second difference along its own curve.

use num_complex::Complex64;

use super::point::{hn_mul, HPoint, SPoint};
use super::HeisError;

/// Finite-difference parameters: base step and number of Richardson halvings.
#[derive(Debug, Clone, Copy)]
pub struct FdSpec {
    pub step: f64,
    pub richardson_levels: u32,
}

impl Default for FdSpec {
    fn default() -> Self {
        Self { step: 1e-3, richardson_levels: 2 }
    }
}

/// Tags for the invariant fields of `H^n` and `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldTag {
    X(usize),
    Y(usize),
    T,
    Z(usize),
    Zbar(usize),
    /// `a d/da` (functions on `S` only).
    ADa,
    /// `Z_{n+1} = (T - i d/da)/2` (functions on `S` only).
    Zn1,
    /// `Zbar_{n+1} = (T + i d/da)/2` (functions on `S` only).
    Zbarn1,
}

/// A field together with its finite-difference spec.
#[derive(Debug, Clone, Copy)]
pub struct FieldId {
    pub tag: FieldTag,
    pub fd: FdSpec,
}

impl FieldId {
    pub fn new(tag: FieldTag) -> Self {
        Self { tag, fd: FdSpec::default() }
    }
}

/// Richardson table for a sequence of estimates `d(h), d(h/2), ...` whose
/// error expands in powers of `h^2`.
fn richardson(estimates: &[Complex64]) -> Complex64 {
    let mut table = estimates.to_vec();
    let mut factor = 4.0;
    for level in 1..table.len() {
        for i in 0..table.len() - level {
            table[i] = (factor * table[i + 1] - table[i]) / (factor - 1.0);
        }
        factor *= 4.0;
    }
    table[0]
}

fn first_derivative<C>(curve: C, fd: FdSpec, scale: f64) -> Complex64
where
    C: Fn(f64) -> Complex64,
{
    let h0 = fd.step * (1.0 + scale);
    let mut ests = Vec::with_capacity(fd.richardson_levels as usize + 1);
    for lvl in 0..=fd.richardson_levels {
        let h = h0 / (1 << lvl) as f64;
        ests.push((curve(h) - curve(-h)) / (2.0 * h));
    }
    richardson(&ests)
}

fn second_derivative<C>(curve: C, fd: FdSpec, scale: f64) -> Complex64
where
    C: Fn(f64) -> Complex64,
{
    let h0 = fd.step * (1.0 + scale);
    let center = curve(0.0);
    let mut ests = Vec::with_capacity(fd.richardson_levels as usize + 1);
    for lvl in 0..=fd.richardson_levels {
        let h = h0 / (1 << lvl) as f64;
        ests.push((curve(h) - 2.0 * center + curve(-h)) / (h * h));
    }
    richardson(&ests)
}

fn unit(n: usize, j: usize, re: f64, im: f64) -> Vec<Complex64> {
    let mut zeta = vec![Complex64::ZERO; n];
    zeta[j] = Complex64::new(re, im);
    zeta
}

fn coordinate_scale_h(p: &HPoint) -> f64 {
    p.zeta.iter().map(|z| z.norm()).fold(p.t.abs(), f64::max)
}

/// Applies an `H^n` field to a function on `H^n` at `at`.
pub fn apply_field<F>(field: FieldId, f: &F, at: &HPoint) -> Result<Complex64, HeisError>
where
    F: Fn(&HPoint) -> Complex64 + ?Sized,
{
    let n = at.dim();
    let scale = coordinate_scale_h(at);
    let along = |dir: fn(usize, usize, f64) -> (Vec<Complex64>, f64), j: usize| {
        move |s: f64| {
            let (zeta, t) = dir(n, j, s);
            f(&hn_mul(at, &HPoint::new(zeta, t)).expect("dimensions agree"))
        }
    };
    let x_dir = |n: usize, j: usize, s: f64| (unit(n, j, s, 0.0), 0.0);
    let y_dir = |n: usize, j: usize, s: f64| (unit(n, j, 0.0, s), 0.0);
    let t_dir = |n: usize, _j: usize, s: f64| (vec![Complex64::ZERO; n], s);
    match field.tag {
        FieldTag::X(j) => check_index(j, n).map(|_| first_derivative(along(x_dir, j), field.fd, scale)),
        FieldTag::Y(j) => check_index(j, n).map(|_| first_derivative(along(y_dir, j), field.fd, scale)),
        FieldTag::T => Ok(first_derivative(along(t_dir, 0), field.fd, scale)),
        FieldTag::Z(j) => {
            check_index(j, n)?;
            let x = first_derivative(along(x_dir, j), field.fd, scale);
            let y = first_derivative(along(y_dir, j), field.fd, scale);
            Ok(0.5 * (x - Complex64::I * y))
        }
        FieldTag::Zbar(j) => {
            check_index(j, n)?;
            let x = first_derivative(along(x_dir, j), field.fd, scale);
            let y = first_derivative(along(y_dir, j), field.fd, scale);
            Ok(0.5 * (x + Complex64::I * y))
        }
        _ => Err(HeisError::Domain(format!(
            "field {:?} acts on functions on S, not on H^n",
            field.tag
        ))),
    }
}

fn check_index(j: usize, n: usize) -> Result<(), HeisError> {
    if j >= n {
        return Err(HeisError::Domain(format!("field index {j} out of range for n = {n}")));
    }
    Ok(())
}

/// Second application of a single `H^n` field (second difference along its
/// own subgroup curve).
pub fn apply_field_twice<F>(field: FieldId, f: &F, at: &HPoint) -> Result<Complex64, HeisError>
where
    F: Fn(&HPoint) -> Complex64 + ?Sized,
{
    let n = at.dim();
    let scale = coordinate_scale_h(at);
    let curve = |dir: &dyn Fn(f64) -> HPoint| {
        let fd = field.fd;
        second_derivative(|s| f(&hn_mul(at, &dir(s)).expect("dimensions agree")), fd, scale)
    };
    match field.tag {
        FieldTag::X(j) => {
            check_index(j, n)?;
            Ok(curve(&|s| HPoint::new(unit(n, j, s, 0.0), 0.0)))
        }
        FieldTag::Y(j) => {
            check_index(j, n)?;
            Ok(curve(&|s| HPoint::new(unit(n, j, 0.0, s), 0.0)))
        }
        FieldTag::T => Ok(curve(&|s| HPoint::new(vec![Complex64::ZERO; n], s))),
        _ => Err(HeisError::Domain("second difference supported for X_j, Y_j, T".into())),
    }
}

/// `calL_alpha f = -(1/4) sum_j (X_j^2 + Y_j^2) f + i alpha T f` on `H^n`.
pub fn op_call_alpha<F>(alpha: f64, f: &F, at: &HPoint) -> Result<Complex64, HeisError>
where
    F: Fn(&HPoint) -> Complex64 + ?Sized,
{
    op_call_alpha_spec(alpha, f, at, FdSpec::default())
}

pub fn op_call_alpha_spec<F>(
    alpha: f64,
    f: &F,
    at: &HPoint,
    fd: FdSpec,
) -> Result<Complex64, HeisError>
where
    F: Fn(&HPoint) -> Complex64 + ?Sized,
{
    let n = at.dim();
    let mut sum = Complex64::ZERO;
    for j in 0..n {
        sum += apply_field_twice(FieldId { tag: FieldTag::X(j), fd }, f, at)?;
        sum += apply_field_twice(FieldId { tag: FieldTag::Y(j), fd }, f, at)?;
    }
    let t = apply_field(FieldId { tag: FieldTag::T, fd }, f, at)?;
    Ok(-0.25 * sum + Complex64::I * alpha * t)
}

/// Applies a field tag to a function on `S` at `at`.  The `H^n` tags act in
/// the `(zeta, t)`-slice at fixed level `a`; `ADa`, `Zn1`, `Zbarn1` involve
/// the level direction, with the `a`-step scaled by `a` and checked to keep
/// the stencil inside `a > 0`.
pub fn apply_field_s<F>(field: FieldId, f: &F, at: &SPoint) -> Result<Complex64, HeisError>
where
    F: Fn(&SPoint) -> Complex64 + ?Sized,
{
    match field.tag {
        FieldTag::ADa => Ok(at.a * d_da(field.fd, f, at)?),
        FieldTag::Zn1 => {
            let t = slice_field(field, FieldTag::T, f, at)?;
            Ok(0.5 * (t - Complex64::I * d_da(field.fd, f, at)?))
        }
        FieldTag::Zbarn1 => {
            let t = slice_field(field, FieldTag::T, f, at)?;
            Ok(0.5 * (t + Complex64::I * d_da(field.fd, f, at)?))
        }
        tag => slice_field(field, tag, f, at),
    }
}

fn slice_field<F>(
    field: FieldId,
    tag: FieldTag,
    f: &F,
    at: &SPoint,
) -> Result<Complex64, HeisError>
where
    F: Fn(&SPoint) -> Complex64 + ?Sized,
{
    let a = at.a;
    let h = at.h_part();
    let g = move |w: &HPoint| f(&SPoint { zeta: w.zeta.clone(), t: w.t, a });
    apply_field(FieldId { tag, fd: field.fd }, &g, &h)
}

/// Plain `d/da` with step `h * a` (the natural scale near the boundary).
fn d_da<F>(fd: FdSpec, f: &F, at: &SPoint) -> Result<Complex64, HeisError>
where
    F: Fn(&SPoint) -> Complex64 + ?Sized,
{
    let h0 = fd.step * at.a;
    if at.a - 2.0 * h0 <= 0.0 {
        return Err(HeisError::StencilOutOfDomain(at.a, h0));
    }
    let curve = |s: f64| f(&SPoint { zeta: at.zeta.clone(), t: at.t, a: at.a + s });
    Ok(first_derivative(curve, FdSpec { step: h0, richardson_levels: fd.richardson_levels }, 0.0))
}

fn d_da2<F>(fd: FdSpec, f: &F, at: &SPoint) -> Result<Complex64, HeisError>
where
    F: Fn(&SPoint) -> Complex64 + ?Sized,
{
    let h0 = fd.step * at.a;
    if at.a - 2.0 * h0 <= 0.0 {
        return Err(HeisError::StencilOutOfDomain(at.a, h0));
    }
    let curve = |s: f64| f(&SPoint { zeta: at.zeta.clone(), t: at.t, a: at.a + s });
    Ok(second_derivative(curve, FdSpec { step: h0, richardson_levels: fd.richardson_levels }, 0.0))
}

/// `calL_alpha` acting in the `(zeta, t)`-slice of a function on `S`.
pub fn op_call_alpha_slice<F>(
    alpha: f64,
    f: &F,
    at: &SPoint,
    fd: FdSpec,
) -> Result<Complex64, HeisError>
where
    F: Fn(&SPoint) -> Complex64 + ?Sized,
{
    let a = at.a;
    let g = move |w: &HPoint| f(&SPoint { zeta: w.zeta.clone(), t: w.t, a });
    op_call_alpha_spec(alpha, &g, &at.h_part(), fd)
}

/// `L_alpha F = -alpha a (calL F + n dF/da) + a^2 (d^2F/da^2 + T^2 F)` on `S`.
pub fn op_l_alpha<F>(alpha: f64, f: &F, at: &SPoint) -> Result<Complex64, HeisError>
where
    F: Fn(&SPoint) -> Complex64 + ?Sized,
{
    op_l_alpha_spec(alpha, f, at, FdSpec::default())
}

pub fn op_l_alpha_spec<F>(
    alpha: f64,
    f: &F,
    at: &SPoint,
    fd: FdSpec,
) -> Result<Complex64, HeisError>
where
    F: Fn(&SPoint) -> Complex64 + ?Sized,
{
    let n = at.dim() as f64;
    let call = op_call_alpha_slice(0.0, f, at, fd)?;
    let da = d_da(fd, f, at)?;
    let da2 = d_da2(fd, f, at)?;
    let a = at.a;
    let hpart = at.h_part();
    let t2 = {
        let g = move |w: &HPoint| f(&SPoint { zeta: w.zeta.clone(), t: w.t, a });
        apply_field_twice(FieldId { tag: FieldTag::T, fd }, &g, &hpart)?
    };
    Ok(-alpha * a * (call + n * da) + a * a * (da2 + t2))
}

/// Boundary-equation residuals of a smooth function on `H^n` at `at`:
/// the largest `|Zbar_j f|` (Cauchy-Riemann), `calL_n f` (holomorphy),
/// `calL_{-n} f` (anti-holomorphy) and `(calL^2 + n^2 T^2) f`
/// (pluriharmonicity).  All by finite differences; the fourth-order
/// composition uses a widened outer stencil.
#[derive(Debug, Clone)]
pub struct BoundaryResiduals {
    pub cr: f64,
    pub hol: Complex64,
    pub antihol: Complex64,
    pub pluri: Complex64,
}

pub fn boundary_residuals<F>(f: &F, at: &HPoint) -> Result<BoundaryResiduals, HeisError>
where
    F: Fn(&HPoint) -> Complex64 + Sync + ?Sized,
{
    let n = at.dim();
    let fd = FdSpec::default();
    let mut cr: f64 = 0.0;
    for j in 0..n {
        let v = apply_field(FieldId { tag: FieldTag::Zbar(j), fd }, f, at)?;
        cr = cr.max(v.norm());
    }
    let hol = op_call_alpha_spec(n as f64, f, at, fd)?;
    let antihol = op_call_alpha_spec(-(n as f64), f, at, fd)?;

    // (calL^2 + n^2 T^2) f: outer stencil widened to keep the inner FD noise
    // from being amplified by the outer second differences.
    let outer = FdSpec { step: 2e-2, richardson_levels: 2 };
    let inner = FdSpec { step: 5e-3, richardson_levels: 2 };
    let lf = move |w: &HPoint| op_call_alpha_spec(0.0, f, w, inner).expect("inner stencil");
    let l2 = op_call_alpha_spec(0.0, &lf, at, outer)?;
    let t2 = apply_field_twice(FieldId { tag: FieldTag::T, fd }, f, at)?;
    let nn = (n * n) as f64;
    Ok(BoundaryResiduals { cr, hol, antihol, pluri: l2 + nn * t2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::point::s_mul;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Boundary value of the bounded holomorphic function e^{i z_2} on U^1.
    fn hol_boundary(w: &HPoint) -> Complex64 {
        (Complex64::I * Complex64::new(w.t, w.zeta_norm_sqr())).exp()
    }

    fn gaussian(w: &HPoint) -> Complex64 {
        Complex64::new((-w.zeta_norm_sqr() - w.t * w.t).exp(), 0.0)
    }

    #[test]
    fn t_field_is_the_t_derivative() {
        let f = |w: &HPoint| Complex64::new(w.t, 0.0);
        let at = HPoint::new(vec![c(0.4, -0.2)], 0.7);
        let v = apply_field(FieldId::new(FieldTag::T), &f, &at).unwrap();
        assert_abs_diff_eq!(v.re, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn zbar_annihilates_holomorphic_boundary_values() {
        let at = HPoint::new(vec![c(0.3, 0.5)], -0.4);
        let v = apply_field(FieldId::new(FieldTag::Zbar(0)), &hol_boundary, &at).unwrap();
        assert!(v.norm() <= 1e-9, "Zbar residual {v}");
    }

    #[test]
    fn commutator_zbar_z_is_2i_t() {
        // [Zbar_j, Z_j] = 2i T on a Gaussian test function.
        let at = HPoint::new(vec![c(0.2, -0.6)], 0.3);
        let fd = FdSpec { step: 1e-2, richardson_levels: 2 };
        let z_of = move |w: &HPoint| {
            apply_field(FieldId { tag: FieldTag::Z(0), fd }, &gaussian, w).unwrap()
        };
        let zbar_of = move |w: &HPoint| {
            apply_field(FieldId { tag: FieldTag::Zbar(0), fd }, &gaussian, w).unwrap()
        };
        let zbar_z =
            apply_field(FieldId { tag: FieldTag::Zbar(0), fd }, &z_of, &at).unwrap();
        let z_zbar = apply_field(FieldId { tag: FieldTag::Z(0), fd }, &zbar_of, &at).unwrap();
        let t = apply_field(FieldId::new(FieldTag::T), &gaussian, &at).unwrap();
        let want = 2.0 * Complex64::I * t;
        assert!((zbar_z - z_zbar - want).norm() <= 1e-5);
    }

    #[test]
    fn commutator_y_x_is_4t() {
        let at = HPoint::new(vec![c(-0.3, 0.4)], 0.1);
        let fd = FdSpec { step: 1e-2, richardson_levels: 2 };
        let x_of = move |w: &HPoint| {
            apply_field(FieldId { tag: FieldTag::X(0), fd }, &gaussian, w).unwrap()
        };
        let y_of = move |w: &HPoint| {
            apply_field(FieldId { tag: FieldTag::Y(0), fd }, &gaussian, w).unwrap()
        };
        let yx = apply_field(FieldId { tag: FieldTag::Y(0), fd }, &x_of, &at).unwrap();
        let xy = apply_field(FieldId { tag: FieldTag::X(0), fd }, &y_of, &at).unwrap();
        let t = apply_field(FieldId::new(FieldTag::T), &gaussian, &at).unwrap();
        assert!((yx - xy - 4.0 * t).norm() <= 1e-4);
    }

    #[test]
    fn call_alpha_kills_constants_and_holomorphic_boundary_values() {
        let at = HPoint::new(vec![c(0.15, -0.25)], 0.2);
        let one = |_: &HPoint| Complex64::ONE;
        assert!(op_call_alpha(0.7, &one, &at).unwrap().norm() <= 1e-9);
        // Theorem-level fact: calL_n annihilates the boundary value of the
        // bounded holomorphic e^{i z_2} for n = 1.
        let v = op_call_alpha(1.0, &hol_boundary, &at).unwrap();
        assert!(v.norm() <= 1e-7, "calL_1 residual {v}");
    }

    #[test]
    fn l_alpha_kills_its_power_solution() {
        // F = a^{n alpha + 1} is L_alpha-harmonic.
        for alpha in [0.5, 1.0] {
            let f = move |p: &SPoint| Complex64::new(p.a.powf(alpha + 1.0), 0.0);
            let at = SPoint::new(vec![c(0.3, 0.2)], -0.15, 0.8).unwrap();
            let v = op_l_alpha(alpha, &f, &at).unwrap();
            assert!(v.norm() <= 1e-8, "alpha = {alpha}: residual {v}");
        }
    }

    #[test]
    fn s_invariant_commutator_ada_with_sqrt_a_x() {
        // [a d/da, a^{1/2} X_j] = (1/2) a^{1/2} X_j as an FD identity.  Both
        // S-invariant fields are realized by their group curves:
        // a d/da along s . [0, 0, e^h], a^{1/2} X_j along s . [h e_j, 0, 1].
        let fd = FdSpec { step: 5e-3, richardson_levels: 2 };
        let f = |p: &SPoint| {
            Complex64::new((-p.zeta[0].norm_sqr() - p.t * p.t).exp() / (1.0 + p.a), 0.0)
        };
        fn along<G: Fn(&SPoint) -> Complex64>(
            g: &G,
            p: &SPoint,
            dir: &dyn Fn(f64) -> SPoint,
            fd: FdSpec,
        ) -> Complex64 {
            super::first_derivative(|s| g(&s_mul(p, &dir(s)).unwrap()), fd, 1.0)
        }
        let x_curve = |s: f64| SPoint { zeta: vec![c(s, 0.0)], t: 0.0, a: 1.0 };
        let a_curve = |s: f64| SPoint { zeta: vec![c(0.0, 0.0)], t: 0.0, a: s.exp() };
        let sqrt_ax = |p: &SPoint| along(&f, p, &x_curve, fd);
        let ada = |p: &SPoint| along(&f, p, &a_curve, fd);
        let at = SPoint::new(vec![c(0.2, -0.3)], 0.4, 0.9).unwrap();
        let lhs = along(&sqrt_ax, &at, &a_curve, fd) - along(&ada, &at, &x_curve, fd);
        let rhs = 0.5 * sqrt_ax(&at);
        assert!((lhs - rhs).norm() <= 1e-4, "lhs {lhs}, rhs {rhs}");
    }

    #[test]
    fn stencil_domain_guard() {
        let f = |_: &SPoint| Complex64::ONE;
        let at = SPoint::new(vec![], 0.0, 1.0).unwrap();
        let wide = FieldId { tag: FieldTag::ADa, fd: FdSpec { step: 0.6, richardson_levels: 1 } };
        assert!(apply_field_s(wide, &f, &at).is_err());
    }

    #[test]
    fn boundary_residuals_classify_model_functions() {
        let at = HPoint::new(vec![c(0.25, 0.1)], -0.3);
        let res = boundary_residuals(&hol_boundary, &at).unwrap();
        assert!(res.cr <= 1e-7, "cr = {}", res.cr);
        assert!(res.hol.norm() <= 1e-6, "hol = {}", res.hol);
        // Conjugate boundary data is annihilated by calL_{-n}.
        let conj = |w: &HPoint| hol_boundary(w).conj();
        let res2 = boundary_residuals(&conj, &at).unwrap();
        assert!(res2.antihol.norm() <= 1e-6, "antihol = {}", res2.antihol);
        // f = t: both calL^2 and T^2 kill it (flagged case: unbounded f).
        let lin = |w: &HPoint| Complex64::new(w.t, 0.0);
        let res3 = boundary_residuals(&lin, &at).unwrap();
        assert!(res3.pluri.norm() <= 1e-5, "pluri = {}", res3.pluri);
    }
}
