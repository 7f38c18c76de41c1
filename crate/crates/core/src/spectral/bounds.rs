//! Upper bounds on the spectral radius in terms of `n`, `m` and `δ`.

use crate::error::{Error, Result};
use crate::Scalar;

fn cast<T: Scalar>(x: usize) -> T {
    T::from_usize(x).expect("small integers are representable")
}

fn checked_sqrt<T: Scalar>(x: T) -> Result<T> {
    if x < T::zero() {
        return Err(Error::NegativeRadicand(x.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(x.sqrt())
}

/// `sqrt(2m - n + 1)`, valid for graphs without isolated vertices.
pub fn hong_bound<T: Scalar>(n: usize, m: usize) -> Result<T> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    checked_sqrt(cast::<T>(2 * m + 1) - cast::<T>(n))
}

/// `(δ - 1)/2 + sqrt(2m - nδ + (δ + 1)²/4)`.
pub fn nikiforov_bound<T: Scalar>(n: usize, m: usize, delta: usize) -> Result<T> {
    if n == 0 || delta >= n {
        return Err(Error::InvalidParameter(format!("need 0 <= δ <= n-1, got n={n}, δ={delta}")));
    }
    hsk_f(cast(delta), n, m)
}

/// `f(x) = (x - 1)/2 + sqrt(2q - px + (1 + x)²/4)` on `0 <= x <= p - 1`,
/// for `2q <= p(p - 1)`.
pub fn hsk_f<T: Scalar>(x: T, p: usize, q: usize) -> Result<T> {
    if p == 0 || 2 * q > p * (p - 1) {
        return Err(Error::InvalidParameter(format!("need 2q <= p(p-1), got p={p}, q={q}")));
    }
    if !(x >= T::zero() && x <= cast(p - 1)) {
        return Err(Error::InvalidParameter(format!("x = {x} outside [0, {}]", p - 1)));
    }
    let two = cast::<T>(2);
    let four = cast::<T>(4);
    let one = T::one();
    let rad = cast::<T>(2 * q) - cast::<T>(p) * x + (one + x) * (one + x) / four;
    Ok((x - one) / two + checked_sqrt(rad)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn hong_on_complete_graphs_is_tight() {
        for n in 1..=32usize {
            assert_abs_diff_eq!(hong_bound::<f64>(n, n * (n - 1) / 2).unwrap(), (n - 1) as f64, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(hong_bound::<f64>(6, 9).unwrap(), 13f64.sqrt(), epsilon = 1e-15);
        assert!(hong_bound::<f64>(6, 9).unwrap() >= 3.3723);
        assert_abs_diff_eq!(hong_bound::<f64>(7, 14).unwrap(), 22f64.sqrt(), epsilon = 1e-15);
        assert!(hong_bound::<f64>(5, 1).is_err());
    }

    #[test]
    fn nikiforov_specializations() {
        for n in 2..=20usize {
            let m = n * (n - 1) / 2;
            assert_abs_diff_eq!(nikiforov_bound::<f64>(n, m, n - 1).unwrap(), (n - 1) as f64, epsilon = 1e-12);
        }
        // δ = 2: 1/2 + sqrt(2m - 2n + 9/4)
        for (n, m) in [(10, 30), (14, 68), (7, 14)] {
            let direct = 0.5 + (2.0 * m as f64 - 2.0 * n as f64 + 2.25).sqrt();
            assert_abs_diff_eq!(nikiforov_bound::<f64>(n, m, 2).unwrap(), direct, epsilon = 1e-13);
        }
        // 2m = n² - 5n + 10 at n = 14 gives m = 68 and a bound of at least n - 3
        let b = nikiforov_bound::<f64>(14, 68, 2).unwrap();
        assert!(b >= 11.0, "{b}");
        assert!(nikiforov_bound::<f64>(5, 3, 5).is_err());
    }

    #[test]
    fn hsk_f_matches_nikiforov_and_decreases() {
        assert_eq!(hsk_f::<f64>(3.0, 4, 6).unwrap(), 3.0);
        assert_eq!(hsk_f::<f64>(2.0, 14, 68).unwrap(), nikiforov_bound::<f64>(14, 68, 2).unwrap());
        // (p, q) = (10, 20): the radicand 40 - 10x + (1+x)²/4 turns negative at x = 5
        let vals: Vec<f64> = (0..=4).map(|x| hsk_f::<f64>(x as f64, 10, 20).unwrap()).collect();
        assert!(vals.windows(2).all(|w| w[0] >= w[1]), "{vals:?}");
        assert!(matches!(hsk_f::<f64>(5.0, 10, 20), Err(Error::NegativeRadicand(_))));
        assert!(hsk_f::<f64>(10.0, 10, 20).is_err());
        assert!(hsk_f::<f64>(1.0, 4, 7).is_err());
        assert!(hsk_f::<f64>(-0.5, 4, 6).is_err());
        // radicand negative
        assert!(matches!(hsk_f::<f64>(9.0, 10, 0), Err(Error::NegativeRadicand(_))));
    }
}
