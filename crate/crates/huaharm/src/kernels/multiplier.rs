//! The radial Fourier multiplier of the Poisson kernel `Q_a^alpha` on `C^n`
//! and bounded harmonic extensions of trigonometric boundary data.
//!
//! The multiplier at frequency `xi` and height `a` is `z(alpha |xi|^2 a)`
//! where `z` is the bounded solution of `x z'' - (alpha n) z' - z = 0` with
//! `z(0) = 1`; extensions of finite mode sums are exact Fourier synthesis.

use num_complex::Complex64;

use crate::specfun::legendre::BoundedLegendreSolution;

use super::KernelError;

/// `Q_a^alpha` as a radial multiplier: holds the bounded profile with
/// `beta = alpha n`.
#[derive(Debug, Clone)]
pub struct RadialMultiplier {
    pub alpha: f64,
    pub n: usize,
    pub z: BoundedLegendreSolution,
}

impl RadialMultiplier {
    pub fn new(alpha: f64, n: usize) -> Result<Self, KernelError> {
        if alpha <= 0.0 {
            return Err(KernelError::Domain(format!("alpha must be positive, got {alpha}")));
        }
        let z = BoundedLegendreSolution::new(alpha * n as f64)?;
        Ok(Self { alpha, n, z })
    }

    /// `z(alpha |xi|^2 a)`; equals 1 at `a = 0` or `xi = 0`.
    pub fn value(&self, a: f64, xi: &[f64]) -> f64 {
        let xi2: f64 = xi.iter().map(|x| x * x).sum();
        self.z.evaluate(self.alpha * xi2 * a)
    }

    pub fn z_derivative(&self, p: u32, x: f64) -> Result<f64, KernelError> {
        Ok(self.z.derivative(p, x)?)
    }

    /// Index `k` of the profile (smallest integer above `alpha n`).
    pub fn index(&self) -> i32 {
        self.z.k
    }
}

/// Convenience form of the multiplier.
pub fn q_multiplier(alpha: f64, n: usize, a: f64, xi: &[f64]) -> Result<f64, KernelError> {
    if a < 0.0 {
        return Err(KernelError::Domain(format!("a must be non-negative, got {a}")));
    }
    Ok(RadialMultiplier::new(alpha, n)?.value(a, xi))
}

/// Finite trigonometric boundary data `f(zeta) = sum_m c_m e^{i xi_m . zeta}`
/// on `C^n = R^{2n}`.
#[derive(Debug, Clone)]
pub struct TrigBoundaryData {
    pub modes: Vec<(Vec<f64>, Complex64)>,
}

impl TrigBoundaryData {
    pub fn new(modes: Vec<(Vec<f64>, Complex64)>) -> Self {
        Self { modes }
    }

    pub fn constant(n: usize, c: Complex64) -> Self {
        Self { modes: vec![(vec![0.0; 2 * n], c)] }
    }

    /// Boundedness witness `sum |c_m|`.
    pub fn coeff_l1(&self) -> f64 {
        self.modes.iter().map(|m| m.1.norm()).sum()
    }

    pub fn eval(&self, zeta: &[f64]) -> Complex64 {
        self.modes
            .iter()
            .map(|(xi, c)| {
                let phase: f64 = xi.iter().zip(zeta).map(|(a, b)| a * b).sum();
                c * Complex64::new(0.0, phase).exp()
            })
            .sum()
    }
}

/// Bounded `Lambda_alpha`-harmonic extension of trigonometric data:
/// `F(zeta, a) = sum_m c_m e^{i xi_m . zeta} z(alpha |xi_m|^2 a)`.
pub fn extend_cn(
    data: &TrigBoundaryData,
    mult: &RadialMultiplier,
    a: f64,
    zeta: &[f64],
) -> Result<Complex64, KernelError> {
    if a < 0.0 {
        return Err(KernelError::Domain(format!("a must be non-negative, got {a}")));
    }
    let mut acc = Complex64::ZERO;
    for (xi, c) in &data.modes {
        let phase: f64 = xi.iter().zip(zeta).map(|(u, v)| u * v).sum();
        acc += c * Complex64::new(0.0, phase).exp() * mult.value(a, xi);
    }
    Ok(acc)
}

/// A Schwartz-type test profile given through its Fourier transform, which
/// must vanish near the zero frequency.
pub struct TestProfile {
    hat: Box<dyn Fn(&[f64]) -> f64 + Send + Sync>,
}

impl TestProfile {
    /// Smooth radial ring bump: `hat(xi) = exp(-1/(1 - s^2))` for
    /// `s = (|xi| - center)/width` inside the ring, zero outside.  Requires
    /// `center > width > 0` so a neighborhood of 0 is excluded.
    pub fn ring_bump(center: f64, width: f64) -> Result<Self, KernelError> {
        if !(width > 0.0 && center > width) {
            return Err(KernelError::Domain(format!(
                "ring bump needs center > width > 0, got center {center}, width {width}"
            )));
        }
        Ok(Self {
            hat: Box::new(move |xi: &[f64]| {
                let r = xi.iter().map(|x| x * x).sum::<f64>().sqrt();
                let s = (r - center) / width;
                if s.abs() >= 1.0 {
                    0.0
                } else {
                    (-1.0 / (1.0 - s * s)).exp()
                }
            }),
        })
    }

    pub fn hat(&self, xi: &[f64]) -> f64 {
        (self.hat)(xi)
    }
}
