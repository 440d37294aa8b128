//! Orthonormal Hermite functions.
//!
//! `h_k(x) = H_k(x) e^{-x^2/2} / sqrt(sqrt(pi) 2^k k!)` with `H_k` the
//! physicists' Hermite polynomial, so that `{h_k}` is an orthonormal basis of
//! `L^2(R)`.  Values come from the stable normalized recurrence
//! `h_{k+1} = x sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}`, not from
//! factorials.

use super::SpecFunError;

/// Overflow guard on polynomial degree / multi-index weight.
pub const HERMITE_MAX_DEGREE: u32 = 60;

fn check_degree(k: u32) -> Result<(), SpecFunError> {
    if k > HERMITE_MAX_DEGREE {
        return Err(SpecFunError::Domain(format!(
            "hermite degree {k} exceeds guard {HERMITE_MAX_DEGREE}"
        )));
    }
    Ok(())
}

/// Orthonormal Hermite function `h_k(x)`.
pub fn hermite(k: u32, x: f64) -> Result<f64, SpecFunError> {
    check_degree(k)?;
    Ok(hermite_poly_normalized(k, x) * (-0.5 * x * x).exp())
}

/// The polynomial part `h_k(x) e^{x^2/2}` of the orthonormal Hermite function;
/// useful when the Gaussian is accounted for analytically.
pub fn hermite_poly_normalized(k: u32, x: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = std::f64::consts::PI.powf(-0.25);
    for j in 0..k {
        let j = j as f64;
        let next = x * (2.0 / (j + 1.0)).sqrt() * cur - (j / (j + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Product Hermite function `h_k(x) = h_{k_1}(x_1) ... h_{k_n}(x_n)`.
pub fn hermite_multi(k: &[u32], x: &[f64]) -> Result<f64, SpecFunError> {
    if k.len() != x.len() {
        return Err(SpecFunError::Domain(format!(
            "multi-index length {} does not match point dimension {}",
            k.len(),
            x.len()
        )));
    }
    let total: u32 = k.iter().sum();
    check_degree(total)?;
    let mut prod = 1.0;
    for (ki, xi) in k.iter().zip(x) {
        prod *= hermite(*ki, *xi)?;
    }
    Ok(prod)
}

/// Scaled Hermite function
/// `h_k^lambda(x) = (2 pi |lambda|)^{n/4} h_k((2 pi |lambda|)^{1/2} x)`.
pub fn hermite_scaled(k: &[u32], lambda: f64, x: &[f64]) -> Result<f64, SpecFunError> {
    if lambda == 0.0 {
        return Err(SpecFunError::Domain("hermite scaling requires lambda != 0".into()));
    }
    let s = 2.0 * std::f64::consts::PI * lambda.abs();
    let n = k.len() as f64;
    let scaled: Vec<f64> = x.iter().map(|&xi| s.sqrt() * xi).collect();
    Ok(s.powf(n / 4.0) * hermite_multi(k, &scaled)?)
}
