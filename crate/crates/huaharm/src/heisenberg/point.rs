//! Points of the Heisenberg group `H^n`, of its one-dimensional extension
//! `S = H^n x R+`, and of the Siegel upper half-plane `U^n`.
//!
//! Group laws:
//!
//! ```text
//!   [zeta, t] . [eta, s]        = [zeta + eta, t + s + 2 Im(zeta . conj(eta))]
//!   [zeta, t, a] . [eta, s, b]  = [zeta + a^{1/2} eta,
//!                                  t + a s + 2 a^{1/2} Im(zeta . conj(eta)), a b]
//! ```
//!
//! and `S` acts simply transitively on `U^n` by
//! `[zeta,t,a] z = (zeta + a^{1/2} z', t + a z_{n+1} + 2i a^{1/2} z'.conj(zeta) + i|zeta|^2)`.
//! The twist sign is fixed so that restricting the `S` law to `a = b = 1`
//! reproduces the `H^n` law and the action is a homomorphism.

use num_complex::Complex64;

use super::HeisError;

/// A point `[zeta, t]` of the Heisenberg group.
#[derive(Debug, Clone, PartialEq)]
pub struct HPoint {
    pub zeta: Vec<Complex64>,
    pub t: f64,
}

impl HPoint {
    pub fn new(zeta: Vec<Complex64>, t: f64) -> Self {
        Self { zeta, t }
    }

    pub fn origin(n: usize) -> Self {
        Self { zeta: vec![Complex64::ZERO; n], t: 0.0 }
    }

    pub fn dim(&self) -> usize {
        self.zeta.len()
    }

    /// `|zeta|^2`.
    pub fn zeta_norm_sqr(&self) -> f64 {
        self.zeta.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Boundary point of `U^n` this element is identified with:
    /// `(zeta, t + i |zeta|^2)`.
    pub fn to_boundary(&self) -> SiegelPoint {
        let mut z = self.zeta.clone();
        z.push(Complex64::new(self.t, self.zeta_norm_sqr()));
        SiegelPoint { z }
    }
}

/// `[zeta, t] . [eta, s]`.
pub fn hn_mul(p: &HPoint, q: &HPoint) -> Result<HPoint, HeisError> {
    if p.dim() != q.dim() {
        return Err(HeisError::DimensionMismatch(p.dim(), q.dim()));
    }
    let twist: f64 = p.zeta.iter().zip(&q.zeta).map(|(a, b)| (a * b.conj()).im).sum();
    Ok(HPoint {
        zeta: p.zeta.iter().zip(&q.zeta).map(|(a, b)| a + b).collect(),
        t: p.t + q.t + 2.0 * twist,
    })
}

/// `[zeta, t]^{-1} = [-zeta, -t]`.
pub fn hn_inv(p: &HPoint) -> HPoint {
    HPoint { zeta: p.zeta.iter().map(|z| -z).collect(), t: -p.t }
}

/// A point `[zeta, t, a]` of the extension `S`, with `a > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SPoint {
    pub zeta: Vec<Complex64>,
    pub t: f64,
    pub a: f64,
}

impl SPoint {
    pub fn new(zeta: Vec<Complex64>, t: f64, a: f64) -> Result<Self, HeisError> {
        if a <= 0.0 {
            return Err(HeisError::Domain(format!("S requires a > 0, got {a}")));
        }
        Ok(Self { zeta, t, a })
    }

    pub fn identity(n: usize) -> Self {
        Self { zeta: vec![Complex64::ZERO; n], t: 0.0, a: 1.0 }
    }

    pub fn dim(&self) -> usize {
        self.zeta.len()
    }

    pub fn h_part(&self) -> HPoint {
        HPoint { zeta: self.zeta.clone(), t: self.t }
    }

    /// Interior point of `U^n` this element is identified with:
    /// `[zeta, t, a] (0, i) = (zeta, t + i |zeta|^2 + i a)`.
    pub fn to_interior(&self) -> SiegelPoint {
        let mut z = self.zeta.clone();
        let n2: f64 = self.zeta.iter().map(|w| w.norm_sqr()).sum();
        z.push(Complex64::new(self.t, n2 + self.a));
        SiegelPoint { z }
    }
}

/// `[zeta, t, a] . [eta, s, b]`.
pub fn s_mul(p: &SPoint, q: &SPoint) -> Result<SPoint, HeisError> {
    if p.dim() != q.dim() {
        return Err(HeisError::DimensionMismatch(p.dim(), q.dim()));
    }
    let ra = p.a.sqrt();
    let twist: f64 = p.zeta.iter().zip(&q.zeta).map(|(a, b)| (a * b.conj()).im).sum();
    Ok(SPoint {
        zeta: p.zeta.iter().zip(&q.zeta).map(|(a, b)| a + ra * b).collect(),
        t: p.t + p.a * q.t + 2.0 * ra * twist,
        a: p.a * q.a,
    })
}

/// `[zeta, t, a]^{-1}`.
pub fn s_inv(p: &SPoint) -> SPoint {
    // From the law: inverse is [-a^{-1/2} zeta, -t/a, 1/a].
    let ra = p.a.sqrt();
    SPoint {
        zeta: p.zeta.iter().map(|z| -z / ra).collect(),
        t: -p.t / p.a,
        a: 1.0 / p.a,
    }
}

/// A point of `C^{n+1}`, relevant through `r(z) = Im z_{n+1} - |z'|^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct SiegelPoint {
    pub z: Vec<Complex64>,
}

impl SiegelPoint {
    pub fn new(z: Vec<Complex64>) -> Self {
        Self { z }
    }

    pub fn dim(&self) -> usize {
        self.z.len() - 1
    }

    /// Height function `r(z) = Im z_{n+1} - |z'|^2`; interior of `U^n` iff
    /// positive, boundary iff zero.
    pub fn r(&self) -> f64 {
        let n = self.dim();
        self.z[n].im - self.z[..n].iter().map(|w| w.norm_sqr()).sum::<f64>()
    }
}

/// The simply transitive action of `S` on `U^n` and its boundary.
pub fn s_act(p: &SPoint, z: &SiegelPoint) -> Result<SiegelPoint, HeisError> {
    if p.dim() != z.dim() {
        return Err(HeisError::DimensionMismatch(p.dim(), z.dim()));
    }
    let n = z.dim();
    let ra = p.a.sqrt();
    let mut out = Vec::with_capacity(n + 1);
    let mut cross = Complex64::ZERO;
    for j in 0..n {
        out.push(p.zeta[j] + ra * z.z[j]);
        cross += z.z[j] * p.zeta[j].conj();
    }
    let i = Complex64::I;
    out.push(
        Complex64::new(p.t, p.zeta.iter().map(|w| w.norm_sqr()).sum())
            + p.a * z.z[n]
            + 2.0 * i * ra * cross,
    );
    Ok(SiegelPoint { z: out })
}

/// Non-isotropic dilation `delta o z = (delta z', delta^2 z_{n+1})`;
/// `r(delta o z) = delta^2 r(z)`.
pub fn dilate(delta: f64, z: &SiegelPoint) -> Result<SiegelPoint, HeisError> {
    if delta <= 0.0 {
        return Err(HeisError::Domain(format!("dilation factor must be positive, got {delta}")));
    }
    let n = z.dim();
    let mut out: Vec<Complex64> = z.z[..n].iter().map(|w| delta * w).collect();
    out.push(delta * delta * z.z[n]);
    Ok(SiegelPoint { z: out })
}
