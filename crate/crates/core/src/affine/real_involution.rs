//! A strictly decreasing involution of the positive reals and the map that
//! conjugates it to `x ↦ -x`. Double precision throughout.

use crate::error::{Error, Result};

fn check_domain(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("expected a finite positive real, got {x}")))
    }
}

/// `h(x) = ln((eˣ + 1)/(eˣ - 1))`, evaluated as `ln(1 + 2/(eˣ - 1))`.
pub fn decreasing_involution(x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok((2.0 / x.exp_m1()).ln_1p())
}

/// `g(x) = log₂(eˣ - 1) - 1/2`, which satisfies `g ∘ h = -g`.
pub fn linearizing_map(x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(x.exp_m1().log2() - 0.5)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualSummary {
    pub samples: usize,
    /// `max |h(h(x)) - x|`
    pub max_involution_residual: f64,
    /// `max |g(h(x)) + g(x)|`
    pub max_conjugacy_residual: f64,
}

/// Residuals over `sample_count` log-spaced points of `[lo, hi]`.
pub fn decreasing_involution_residuals(sample_count: usize, lo: f64, hi: f64) -> Result<ResidualSummary> {
    if sample_count == 0 {
        return Err(Error::InvalidArgument("sample count must be positive".into()));
    }
    check_domain(lo)?;
    check_domain(hi)?;
    if lo >= hi {
        return Err(Error::InvalidArgument(format!("empty interval [{lo}, {hi}]")));
    }
    let (a, b) = (lo.ln(), hi.ln());
    let mut inv: f64 = 0.0;
    let mut conj: f64 = 0.0;
    for i in 0..sample_count {
        let t = if sample_count == 1 {
            0.0
        } else {
            i as f64 / (sample_count - 1) as f64
        };
        let x = (a + t * (b - a)).exp();
        let hx = decreasing_involution(x)?;
        inv = inv.max((decreasing_involution(hx)? - x).abs());
        conj = conj.max((linearizing_map(hx)? + linearizing_map(x)?).abs());
    }
    Ok(ResidualSummary {
        samples: sample_count,
        max_involution_residual: inv,
        max_conjugacy_residual: conj,
    })
}

/// The unique fixed point of `h`, by bisection on `h(x) - x`.
pub fn involution_fixed_point() -> f64 {
    let (mut lo, mut hi) = (0.1f64, 10.0f64);
    let gap = |x: f64| decreasing_involution(x).expect("positive") - x;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if gap(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_one() {
        let h1 = decreasing_involution(1.0).unwrap();
        let e = std::f64::consts::E;
        assert!((h1 - ((e + 1.0) / (e - 1.0)).ln()).abs() < 1e-15);
        assert!((h1 - 0.77194).abs() < 1e-5);
        assert!((decreasing_involution(h1).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn residuals_are_tiny() {
        let r = decreasing_involution_residuals(100, 0.1, 10.0).unwrap();
        assert_eq!(r.samples, 100);
        assert!(r.max_involution_residual < 1e-9);
        assert!(r.max_conjugacy_residual < 1e-9);
    }

    #[test]
    fn strictly_decreasing() {
        let xs: Vec<f64> = (1..200).map(|i| i as f64 * 0.05).collect();
        for w in xs.windows(2) {
            assert!(decreasing_involution(w[0]).unwrap() > decreasing_involution(w[1]).unwrap());
        }
    }

    #[test]
    fn fixed_point() {
        let x = involution_fixed_point();
        assert!((decreasing_involution(x).unwrap() - x).abs() < 1e-12);
        // eˣ = 1 + √2 solves (eˣ + 1)/(eˣ - 1) = eˣ.
        assert!((x - (1.0 + 2f64.sqrt()).ln()).abs() < 1e-12);
        assert!(linearizing_map(x).unwrap().abs() < 1e-12);
    }

    #[test]
    fn domain_errors() {
        assert!(decreasing_involution(0.0).is_err());
        assert!(decreasing_involution(-1.0).is_err());
        assert!(linearizing_map(f64::NAN).is_err());
        assert!(decreasing_involution_residuals(10, -1.0, 2.0).is_err());
        assert!(decreasing_involution_residuals(0, 1.0, 2.0).is_err());
        assert!(decreasing_involution_residuals(10, 2.0, 1.0).is_err());
    }
}
