//! Laguerre polynomials, their products over a multi-index, and the diagonal
//! matrix-coefficient profile `Phi_k`.
//!
//! `L_k` is evaluated by the three-term recurrence
//! `(k+1) L_{k+1}(t) = (2k + 1 - t) L_k(t) - k L_{k-1}(t)`.

use num_complex::Complex64;

use super::hermite::HERMITE_MAX_DEGREE;
use super::SpecFunError;

/// Laguerre polynomial `L_k(t)`.
pub fn laguerre(k: u32, t: f64) -> Result<f64, SpecFunError> {
    if k > HERMITE_MAX_DEGREE {
        return Err(SpecFunError::Domain(format!(
            "laguerre degree {k} exceeds guard {HERMITE_MAX_DEGREE}"
        )));
    }
    let mut prev = 1.0;
    if k == 0 {
        return Ok(prev);
    }
    let mut cur = 1.0 - t;
    for j in 1..k {
        let j = j as f64;
        let next = ((2.0 * j + 1.0 - t) * cur - j * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `Lambda_k(zeta) = prod_i L_{k_i}(|zeta_i|^2 / 2)`.
pub fn laguerre_product(k: &[u32], zeta: &[Complex64]) -> Result<f64, SpecFunError> {
    if k.len() != zeta.len() {
        return Err(SpecFunError::Domain(format!(
            "multi-index length {} does not match dimension {}",
            k.len(),
            zeta.len()
        )));
    }
    let mut prod = 1.0;
    for (ki, zi) in k.iter().zip(zeta) {
        prod *= laguerre(*ki, 0.5 * zi.norm_sqr())?;
    }
    Ok(prod)
}

/// `Phi_k(zeta) = (2 pi)^{-n/2} Lambda_k(zeta) e^{-|zeta|^2 / 4}`.
pub fn phi_k(k: &[u32], zeta: &[Complex64]) -> Result<f64, SpecFunError> {
    let n = k.len() as f64;
    let norm_sq: f64 = zeta.iter().map(|z| z.norm_sqr()).sum();
    Ok((2.0 * std::f64::consts::PI).powf(-n / 2.0)
        * laguerre_product(k, zeta)?
        * (-0.25 * norm_sq).exp())
}

/// All multi-indices of length `n` with entries summing to `kappa`.
pub fn multi_indices(n: usize, kappa: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, kappa: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 1 {
            prefix.push(kappa);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=kappa {
            prefix.push(first);
            rec(n - 1, kappa - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, kappa, &mut Vec::new(), &mut out);
    out
}
