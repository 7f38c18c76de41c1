use std::time::Instant;

use super::common::{binom2, check_order, missing_members, Work};
use super::enumerate::{scan, Filters};
use super::report::VerificationReport;
use super::VerifyOptions;
use crate::error::Result;
use crate::graph::{exceptional_members, ExceptionalSet};

/// Non-Hamiltonian graphs with `δ >= 2` and `m >= C(n-2, 2) + 4` must be
/// exactly the order-`n` members of the non-Hamiltonian exceptional set.
pub fn verify_lemma_g2(n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_order("lemmaG2", n, 5, 9)?;
    let started = Instant::now();
    let filters = Filters::min_degree(2).with_min_edges(binom2(n - 2) + 4);
    let (work, scanned) = scan(n, &filters, opts.jobs, opts.long_running, Work::default, |w, g| {
        if !w.solver.cycle_exists(g) {
            w.tally[0].record(g);
        }
    })?;
    let expected = exceptional_members(ExceptionalSet::NonHamiltonian, n);
    let mut r = VerificationReport::new("lemmaG2", [n, n]);
    r.scanned = scanned;
    r.filters = filters.describe();
    work.tally[0].classify(&expected, &mut r)?;
    missing_members(&mut r, &expected);
    Ok(r.finish(started))
}

/// Non-traceable graphs with `δ >= 1` and `m >= C(n-2, 2) + 2` must be
/// exactly the order-`n` members of the non-traceable exceptional set.
pub fn verify_lemma_g1(n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_order("lemmaG1", n, 4, 8)?;
    let started = Instant::now();
    let filters = Filters::min_degree(1).with_min_edges(binom2(n - 2) + 2);
    let (work, scanned) = scan(n, &filters, opts.jobs, opts.long_running, Work::default, |w, g| {
        if !w.solver.path_exists(g) {
            w.tally[0].record(g);
        }
    })?;
    let expected = exceptional_members(ExceptionalSet::NonTraceable, n);
    let mut r = VerificationReport::new("lemmaG1", [n, n]);
    r.scanned = scanned;
    r.filters = filters.describe();
    work.tally[0].classify(&expected, &mut r)?;
    missing_members(&mut r, &expected);
    Ok(r.finish(started))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_orders() {
        let opts = VerifyOptions::default();
        let r = verify_lemma_g2(5, &opts).unwrap();
        assert!(r.passed());
        assert_eq!(r.families(), vec![Some("G2:5".to_string())]);
        let r = verify_lemma_g1(4, &opts).unwrap();
        assert!(r.passed());
        assert_eq!(r.families(), vec![Some("G1:4".to_string())]);
        assert!(verify_lemma_g2(4, &opts).is_err());
        assert!(matches!(verify_lemma_g2(9, &opts), Err(crate::Error::Infeasible { .. })));
    }
}
