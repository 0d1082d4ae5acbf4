//! Imaginary parts of the roots of `G(s, S_n(1))` from a cotangent sum.
//!
//! All roots lie on `re = -1/2`; writing them as `-1/2 ± ib` the imaginary
//! parts solve `h(b) = sum_{m=0..n} arccot(2b / (2m + 1)) = kπ`. `h` falls
//! strictly from `(n + 1)π/2` at `b = 0` to `0`, so bisection is safe, and it
//! avoids evaluating the badly conditioned polynomial for large `n`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

fn arccot(t: f64) -> f64 {
    if t == 0.0 {
        FRAC_PI_2
    } else {
        (1.0 / t).atan()
    }
}

pub fn h_sum(n: usize, b: f64) -> f64 {
    (0..=n).map(|m| arccot(2.0 * b / (2 * m + 1) as f64)).sum()
}

/// `b` with `h(b) = kπ`, by bisection on `[0, (n+1)^2/(2πk) + 1]`.
fn solve(n: usize, k: usize, tol: f64) -> Result<f64> {
    if 2 * k == n + 1 {
        return Ok(0.0);
    }
    let target = k as f64 * PI;
    let mut lo = 0.0;
    // arccot(t) < 1/t bounds h(b) by (n+1)^2 / (2b)
    let mut hi = ((n + 1) * (n + 1)) as f64 / (2.0 * PI * k as f64) + 1.0;
    if h_sum(n, lo) < target || h_sum(n, hi) > target {
        return Err(Error::BracketFailure { k });
    }
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= tol * hi.max(1.0) {
            break;
        }
        if h_sum(n, mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Imaginary parts `b_k >= 0` for `k = 1..=(n+1)/2`, in decreasing order.
pub fn sn1_spectrum(n: usize, tol: f64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    (1..=(n + 1) / 2).map(|k| solve(n, k, tol)).collect()
}

/// For each `n`: the largest imaginary part `b_n` and its ratio to `n(n+2)/(2π)`.
pub fn sn1_max_root_asymptotic(ns: &[usize]) -> Result<Vec<(usize, f64, f64)>> {
    ns.iter()
        .map(|&n| {
            if n == 0 {
                return Err(Error::InvalidInput("n must be at least 1".into()));
            }
            let b = solve(n, 1, 1e-15)?;
            let scale = (n * (n + 2)) as f64 / (2.0 * PI);
            Ok((n, b, b / scale))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(sn1_spectrum(1, 1e-15).unwrap(), vec![0.0]);
        let s2 = sn1_spectrum(2, 1e-15).unwrap();
        assert!((s2[0] - 15f64.sqrt() / 6.0).abs() < 1e-12);
        let s3 = sn1_spectrum(3, 1e-15).unwrap();
        assert_eq!(s3.len(), 2);
        assert!((s3[0] - 11f64.sqrt() / 2.0).abs() < 1e-12);
        assert_eq!(s3[1], 0.0);
        assert!((h_sum(3, 11f64.sqrt() / 2.0) - PI).abs() < 1e-12);
    }

    #[test]
    fn ratio_approaches_one() {
        let r = sn1_max_root_asymptotic(&[3, 100, 400]).unwrap();
        assert!((r[0].2 - 0.6946).abs() < 1e-3);
        assert!((0.95..=1.05).contains(&r[1].2));
        assert!((r[2].2 - 1.0).abs() < (r[1].2 - 1.0).abs());
    }
}
