use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::report::{Verdict, VerificationReport};
use crate::error::{Error, Result};
use crate::spectral::{cubic_largest_root, Cubic, CubicFamily, CubicKind};
use crate::ExactRatio;

fn ratio(num: i128, den: i128) -> ExactRatio {
    ExactRatio::new(BigInt::from(num), BigInt::from(den))
}

/// Root of the cubic in `(n-3, n-2)` is unique: the cubic shifted by
/// `n - 3` has positive `ε²` and `ε` coefficients, so it increases for
/// `ε >= 0`, and it is negative at 0 and positive at 1.
fn unique_root_in_unit(shifted: &Cubic) -> bool {
    shifted.c2 > 0 && shifted.c1 > 0 && shifted.c0 < 0 && shifted.eval(&1i128) > 0
}

/// Negative at `lo` and positive at `hi`, both offsets from `n - 3`.
fn brackets(shifted: &Cubic, lo: &ExactRatio, hi: &ExactRatio) -> bool {
    shifted.eval(lo).is_negative() && shifted.eval(hi).is_positive()
}

/// For `n = 7..=n_max`: the two cubics have unique roots in `(n-3, n-2)`,
/// the brackets `n-3 + 8/(n²) .. n-3 + 8/(n²-5n+2)` and
/// `n-3 + 2/n² .. n-3 + 2/(n²-6n+6)` contain them (exact rational signs),
/// the brackets are disjoint, and the roots compare directly.
pub fn verify_appendix(n_max: usize) -> Result<VerificationReport> {
    if !(7..=1 << 20).contains(&n_max) {
        return Err(Error::InvalidParameter(format!("appendix check needs 7 <= n_max <= 2^20, got {n_max}")));
    }
    let started = Instant::now();
    let mut r = VerificationReport::new("appendix", [7, n_max]);
    let mut failures = Vec::new();
    let mut min_gap = f64::INFINITY;
    for n in 7..=n_max {
        let m = n as i128;
        let f = CubicFamily::new(CubicKind::G2, n)?;
        let g = CubicFamily::new(CubicKind::CutPair, n)?;
        let fs = f.polynomial().shifted(m - 3);
        let gs = g.polynomial().shifted(m - 3);
        let ok_unique = unique_root_in_unit(&fs) && unique_root_in_unit(&gs);
        let f_lo = ratio(8, m * m);
        let f_hi = ratio(8, m * m - 5 * m + 2);
        let g_lo = ratio(2, m * m);
        let g_hi = ratio(2, m * m - 6 * m + 6);
        let ok_f = brackets(&fs, &f_lo, &f_hi);
        let ok_g = brackets(&gs, &g_lo, &g_hi);
        let ok_disjoint = f_lo > g_hi && !(&f_lo - &g_hi).is_zero();
        let rf = cubic_largest_root::<f64>(f)?;
        let rg = cubic_largest_root::<f64>(g)?;
        min_gap = min_gap.min(rf - rg);
        let ok_direct = rf > rg;
        if n == 7 || n == 14 {
            r.values.insert(format!("rho(G2:{n})"), rf);
            r.values.insert(format!("rho(cutK2:{n})"), rg);
        }
        if !(ok_unique && ok_f && ok_g && ok_disjoint && ok_direct) {
            failures.push(format!(
                "n = {n}: unique {ok_unique}, bracket f {ok_f}, bracket g {ok_g}, disjoint {ok_disjoint}, direct {ok_direct}"
            ));
        }
    }
    r.scanned = (n_max - 6) as u64;
    r.values.insert("min rho(G2:n) - rho(cutK2:n)".into(), min_gap);
    r.notes.push("bracket signs evaluated in exact rational arithmetic".into());
    if !failures.is_empty() {
        r.verdict = Verdict::Fail;
        r.notes.extend(failures);
    }
    Ok(r.finish(started))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_orders() {
        let r = verify_appendix(20).unwrap();
        assert!(r.passed(), "{:?}", r.notes);
        assert!(r.values["rho(cutK2:7)"] < 4.0 + 2.0 / 13.0);
        assert!((r.values["rho(G2:7)"] - 4.4040).abs() < 1e-4);
        assert!(verify_appendix(6).is_err());
    }

    #[test]
    fn f_positive_at_upper_end() {
        // f_n(n - 3 + 8/(n² - 5n + 2)) > 0 for n = 7..100
        for n in 7..=100i128 {
            let fs = CubicFamily::new(CubicKind::G2, n as usize).unwrap().polynomial().shifted(n - 3);
            assert!(fs.eval(&ratio(8, n * n - 5 * n + 2)).is_positive(), "n={n}");
        }
    }
}
