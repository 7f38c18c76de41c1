//! Closed forms and cubic characteristic factors for the named families.

use num_traits::{FromPrimitive, Num};

use crate::error::{Error, Result};
use crate::Scalar;

fn cast<T: Scalar>(x: i128) -> T {
    T::from_i128(x).expect("small integers are representable")
}

/// `ρ(K_k ∨ (n-k)K1) = (k - 1 + sqrt(4kn - (3k-1)(k+1))) / 2`.
pub fn rho_split_closed_form<T: Scalar>(n: usize, k: usize) -> Result<T> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!("need 1 <= k <= n-1, got n={n}, k={k}")));
    }
    let (n, k) = (n as i128, k as i128);
    let disc = 4 * k * n - (3 * k - 1) * (k + 1);
    Ok((cast::<T>(k - 1) + cast::<T>(disc).sqrt()) / cast(2))
}

/// Monic cubic `x^3 + c2 x^2 + c1 x + c0`, evaluated in any numeric type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cubic {
    pub c2: i128,
    pub c1: i128,
    pub c0: i128,
}

impl Cubic {
    pub fn eval<T: Num + FromPrimitive + Clone>(&self, x: &T) -> T {
        let c = |v: i128| T::from_i128(v).expect("coefficient fits");
        let mut acc = x.clone() + c(self.c2);
        acc = acc * x.clone() + c(self.c1);
        acc * x.clone() + c(self.c0)
    }

    /// Coefficients of `p(x + a)`.
    pub fn shifted(&self, a: i128) -> Cubic {
        Cubic {
            c2: 3 * a + self.c2,
            c1: 3 * a * a + 2 * self.c2 * a + self.c1,
            c0: a * a * a + self.c2 * a * a + self.c1 * a + self.c0,
        }
    }

    fn eval_int(&self, x: i128) -> i128 {
        ((x + self.c2) * x + self.c1) * x + self.c0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CubicKind {
    /// Factor for `K1 ∨ (K_{n-3} + 2K1)`: `x^3 - (n-4)x^2 - (n-1)x + 2(n-4)`.
    G1,
    /// Factor for `K2 ∨ (K_{n-4} + 2K1)`: `x^3 - (n-4)x^2 - (n+1)x + 4(n-5)`.
    G2,
    /// Factor for `K1 ∨ (K_{n-3} + K2)`: `x^3 - (n-3)x^2 - 3x + 3n - 11`.
    CutPair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CubicFamily {
    pub kind: CubicKind,
    pub n: usize,
}

impl CubicFamily {
    pub fn new(kind: CubicKind, n: usize) -> Result<Self> {
        let min = match kind {
            CubicKind::G1 | CubicKind::G2 => 4,
            CubicKind::CutPair => 5,
        };
        if n < min || n > 1 << 20 {
            return Err(Error::InvalidParameter(format!("{kind:?} cubic needs n >= {min}, got {n}")));
        }
        Ok(Self { kind, n })
    }

    pub fn polynomial(&self) -> Cubic {
        let n = self.n as i128;
        match self.kind {
            CubicKind::G1 => Cubic {
                c2: -(n - 4),
                c1: -(n - 1),
                c0: 2 * (n - 4),
            },
            CubicKind::G2 => Cubic {
                c2: -(n - 4),
                c1: -(n + 1),
                c0: 4 * (n - 5),
            },
            CubicKind::CutPair => Cubic {
                c2: -(n - 3),
                c1: -3,
                c0: 3 * n - 11,
            },
        }
    }
}

/// The unique root of the family's cubic above `n - 3`.
///
/// Bisection runs on `ε` in `p(n - 3 + ε)` over `[0, 2]`, where the shifted
/// coefficients are exact integers; both endpoint signs are checked first.
pub fn cubic_largest_root<T: Scalar>(fam: CubicFamily) -> Result<T> {
    let base = fam.n as i128 - 3;
    let q = fam.polynomial().shifted(base);
    let (lo_sign, hi_sign) = (q.eval_int(0), q.eval_int(2));
    if !(lo_sign < 0 && hi_sign > 0) {
        return Err(Error::NoSignChange {
            lo: base as f64,
            hi: (base + 2) as f64,
        });
    }
    let mut lo = T::zero();
    let mut hi = cast::<T>(2);
    let two = cast::<T>(2);
    for _ in 0..200 {
        if hi - lo <= T::bisection_floor() {
            break;
        }
        let mid = (lo + hi) / two;
        if mid <= lo || mid >= hi {
            break;
        }
        if q.eval(&mid) < T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(cast::<T>(base) + (lo + hi) / two)
}

fn bracket<T: Scalar>(n: usize, num: i128, lower_den: i128, upper_den: i128) -> Result<(T, T)> {
    if upper_den <= 0 {
        return Err(Error::InvalidParameter(format!("bracket undefined for n = {n}")));
    }
    let base = cast::<T>(n as i128 - 3);
    Ok((
        base + cast::<T>(num) / cast::<T>(lower_den),
        base + cast::<T>(num) / cast::<T>(upper_den),
    ))
}

/// `(n - 3 + 8/n², n - 3 + 8/(n² - 5n + 2))`, which contains `ρ(K2 ∨ (K_{n-4} + 2K1))`.
pub fn appendix_bracket_g2<T: Scalar>(n: usize) -> Result<(T, T)> {
    if n < 6 {
        return Err(Error::InvalidParameter(format!("bracket needs n >= 6, got {n}")));
    }
    let m = n as i128;
    bracket(n, 8, m * m, m * m - 5 * m + 2)
}

/// `(n - 3 + 2/n², n - 3 + 2/(n² - 6n + 6))`, which contains `ρ(K1 ∨ (K_{n-3} + K2))`.
pub fn appendix_bracket_cut_pair<T: Scalar>(n: usize) -> Result<(T, T)> {
    if n < 6 {
        return Err(Error::InvalidParameter(format!("bracket needs n >= 6, got {n}")));
    }
    let m = n as i128;
    bracket(n, 2, m * m, m * m - 6 * m + 6)
}
