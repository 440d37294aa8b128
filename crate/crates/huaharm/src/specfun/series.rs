//! Pochhammer symbols and the hypergeometric series `1F1` and `0F1`.

use super::SpecFunError;

const SERIES_TOL: f64 = 1e-12;
const MAX_TERMS: usize = 600;

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    let mut p = 1.0;
    for i in 0..n {
        p *= a + i as f64;
    }
    p
}

fn reject_nonpositive_integer(c: f64) -> Result<(), SpecFunError> {
    if c <= 0.0 && (c - c.round()).abs() < 1e-12 {
        return Err(SpecFunError::Domain(format!(
            "series parameter c = {c} is a non-positive integer"
        )));
    }
    Ok(())
}

/// Confluent hypergeometric function `1F1(a, c, x)`, summed term by term to
/// relative tolerance 1e-12.
pub fn hyp1f1(a: f64, c: f64, x: f64) -> Result<f64, SpecFunError> {
    reject_nonpositive_integer(c)?;
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..MAX_TERMS {
        let n = n as f64;
        term *= (a + n) / (c + n) * x / (n + 1.0);
        sum += term;
        if term.abs() <= SERIES_TOL * sum.abs().max(1e-300) {
            return Ok(sum);
        }
    }
    Err(SpecFunError::Convergence(format!("1F1({a}, {c}, {x}) did not converge")))
}

/// `0F1(c, x) = sum_k x^k / ((c)_k k!)`.
pub fn hyp0f1(c: f64, x: f64) -> Result<f64, SpecFunError> {
    reject_nonpositive_integer(c)?;
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..MAX_TERMS {
        let n = n as f64;
        term *= x / ((c + n) * (n + 1.0));
        sum += term;
        if term.abs() <= SERIES_TOL * sum.abs().max(1e-300) {
            return Ok(sum);
        }
    }
    Err(SpecFunError::Convergence(format!("0F1({c}, {x}) did not converge")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Independent oracle: each term is rebuilt from scratch as a product of
    /// ratio factors (no running term), with compensated (Kahan) summation
    /// over 200 terms.
    fn series_oracle(ratio: impl Fn(f64) -> f64, x: f64) -> f64 {
        let mut sum = 0.0;
        let mut comp = 0.0;
        for n in 0..200u32 {
            let mut term = 1.0;
            for i in 0..n {
                term *= ratio(i as f64) * x / (i as f64 + 1.0);
            }
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        sum
    }

    #[test]
    fn pochhammer_base_cases() {
        assert_eq!(pochhammer(7.3, 0), 1.0);
        assert_eq!(pochhammer(3.0, 2), 12.0);
        assert_eq!(pochhammer(-1.0, 3), 0.0);
        assert_eq!(pochhammer(2.0, 1), 2.0);
    }

    #[test]
    fn hyp1f1_known_values() {
        assert_eq!(hyp1f1(0.3, 1.7, 0.0).unwrap(), 1.0);
        // (1)_n / (1)_n collapses the series to exp
        assert_abs_diff_eq!(hyp1f1(1.0, 1.0, 1.0).unwrap(), std::f64::consts::E, epsilon = 1e-12);
        let oracle = series_oracle(|i| (0.5 + i) / (1.5 + i), 2.0);
        assert_abs_diff_eq!(hyp1f1(0.5, 1.5, 2.0).unwrap(), oracle, epsilon = 1e-12 * oracle);
    }

    #[test]
    fn hyp0f1_known_values() {
        assert_eq!(hyp0f1(0.8, 0.0).unwrap(), 1.0);
        // sum 1/(k!)^2 = I_0(2)
        assert_abs_diff_eq!(hyp0f1(1.0, 1.0).unwrap(), 2.2795853023360673, epsilon = 1e-12);
        let oracle = series_oracle(|i| 1.0 / (2.0 + i), -1.0);
        assert_abs_diff_eq!(hyp0f1(2.0, -1.0).unwrap(), oracle, epsilon = 1e-13);
    }

    #[test]
    fn nonpositive_integer_parameter_rejected() {
        assert!(hyp1f1(1.0, 0.0, 1.0).is_err());
        assert!(hyp1f1(1.0, -3.0, 1.0).is_err());
        assert!(hyp0f1(-2.0, 1.0).is_err());
        // Non-integer negative c is fine.
        assert!(hyp0f1(-2.5, 1.0).is_ok());
    }
}
