use std::time::Instant;

use super::common::{check_order, note_coverage, rho, scan_or_sample};
use super::enumerate::Filters;
use super::report::VerificationReport;
use super::VerifyOptions;
use crate::error::Result;
use crate::hamilton::{chvatal_check, circumference, erdos_gallai_guarantee, join_k1, ChvatalVerdict};
use crate::spectral::{hong_bound, nikiforov_bound};

/// Slack allowed above an upper bound before a graph counts as a violation.
pub const BOUND_SLACK: f64 = 1e-8;

fn report(check: &str, n: usize, filters: &Filters) -> VerificationReport {
    let mut r = VerificationReport::new(check, [n, n]);
    r.filters = filters.describe();
    r
}

/// `has_hamilton_path(G)` agrees with `has_hamilton_cycle(G ∨ K1)`.
pub fn verify_join_equivalence(n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_order("join", n, 1, 8)?;
    let started = Instant::now();
    let filters = Filters::default();
    let (work, scanned, coverage) = scan_or_sample(n, &filters, opts, |w, g| {
        let path = w.solver.path_exists(g);
        let cycle = w.solver.cycle_exists(&join_k1(g).expect("order below the limit"));
        if path != cycle {
            w.tally[0].record(g);
        }
        if path {
            w.tally[1].bump("traceable");
        }
    })?;
    let mut r = report("join", n, &filters);
    r.scanned = scanned;
    work.tally[0].classify(&[], &mut r)?;
    work.tally[1].counters_into(&mut r);
    note_coverage(&mut r, n, coverage);
    Ok(r.finish(started))
}

/// `ρ <= sqrt(2m - n + 1)` when `δ >= 1`, `ρ <= (δ-1)/2 + sqrt(2m - nδ + (δ+1)²/4)`,
/// and `ρ <= (sqrt(8m + 1) - 1)/2`, each up to [`BOUND_SLACK`].
pub fn verify_bounds(n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_order("bounds", n, 1, 8)?;
    let started = Instant::now();
    let filters = Filters::default();
    let (work, scanned, coverage) = scan_or_sample(n, &filters, opts, |w, g| {
        let (m, delta, big) = (g.size(), g.min_degree(), g.max_degree() as f64);
        let mut bounds = [None; 3];
        if delta >= 1 {
            bounds[0] = Some(hong_bound::<f64>(n, m).expect("δ >= 1 keeps the radicand non-negative"));
        }
        bounds[1] = Some(nikiforov_bound::<f64>(n, m, delta).expect("valid (n, m, δ)"));
        bounds[2] = Some((((8 * m + 1) as f64).sqrt() - 1.0) / 2.0);
        let mut est = None;
        for (i, b) in bounds.into_iter().enumerate() {
            let Some(b) = b else { continue };
            let tally = &mut w.tally[i];
            if big <= b {
                tally.bump("certified by max degree");
                continue;
            }
            let upper = est.get_or_insert_with(|| rho(g)).upper;
            tally.bump("certified by spectral bracket");
            if upper > b + BOUND_SLACK {
                tally.record(g);
            }
        }
    })?;
    let mut r = report("bounds", n, &filters);
    r.scanned = scanned;
    r.tolerances.insert("bound_slack".into(), BOUND_SLACK);
    for (name, t) in ["hong", "nikiforov", "edge"].iter().zip(&work.tally) {
        r.notes.push(format!("{name}: {} violating classes", t.hits.len()));
        for (k, v) in &t.counters {
            r.notes.push(format!("{name}, {k}: {v}"));
        }
        t.classify(&[], &mut r)?;
    }
    note_coverage(&mut r, n, coverage);
    Ok(r.finish(started))
}

/// Chvátal's degree condition never certifies a non-Hamiltonian graph.
pub fn verify_chvatal(n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_order("chvatal", n, 3, 8)?;
    let started = Instant::now();
    let filters = Filters::default();
    let (work, scanned, coverage) = scan_or_sample(n, &filters, opts, |w, g| {
        let verdict = chvatal_check(&g.degree_sequence()).expect("n >= 3");
        if verdict == ChvatalVerdict::Guaranteed {
            w.tally[0].bump("condition holds");
            if !w.solver.cycle_exists(g) {
                w.tally[0].record(g);
            }
        }
    })?;
    let mut r = report("chvatal", n, &filters);
    r.scanned = scanned;
    work.tally[0].classify(&[], &mut r)?;
    work.tally[0].counters_into(&mut r);
    note_coverage(&mut r, n, coverage);
    Ok(r.finish(started))
}

/// The circumference is at least the edge-count guarantee.
pub fn verify_erdos_gallai(n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_order("erdos_gallai", n, 1, 8)?;
    let started = Instant::now();
    let filters = Filters::default();
    let (work, scanned, coverage) = scan_or_sample(n, &filters, opts, |w, g| {
        let need = erdos_gallai_guarantee(n, g.size());
        if need == 0 {
            return;
        }
        w.tally[0].bump("positive guarantee");
        if circumference(g).expect("order below the limit") < need {
            w.tally[0].record(g);
        }
    })?;
    let mut r = report("erdos_gallai", n, &filters);
    r.scanned = scanned;
    work.tally[0].classify(&[], &mut r)?;
    work.tally[0].counters_into(&mut r);
    note_coverage(&mut r, n, coverage);
    Ok(r.finish(started))
}
