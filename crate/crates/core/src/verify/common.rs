use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::enumerate::{edge_slots, pattern_count, pool, scan, Filters, Merge, FEASIBLE_PATTERNS};
use super::report::{Tally, VerificationReport};
use super::VerifyOptions;
use crate::error::Result;
use crate::graph::{FamilySpec, Graph, Member};
use crate::hamilton::HamSolver;
use crate::spectral::{compare_rho_int, compare_rho_sq, spectral_radius, DEFAULT_TOL};
use crate::Estimate;

/// Tolerance for re-checks inside the guard band around irrational thresholds.
pub const RECHECK_TOL: f64 = 1e-12;
const SAMPLE_CHUNKS: u64 = 64;

/// Per-worker state: tallies plus Hamilton scratch space.
#[derive(Default)]
pub(crate) struct Work {
    pub tally: [Tally; 3],
    pub solver: HamSolver,
}

impl Merge for Work {
    fn merge(&mut self, other: Self) {
        for (a, b) in self.tally.iter_mut().zip(other.tally) {
            a.merge(b);
        }
    }
}

pub(crate) fn members(specs: Vec<FamilySpec>, n: usize) -> Vec<Member> {
    specs
        .into_iter()
        .filter_map(|spec| {
            let graph = spec.realize().ok()?;
            (graph.order() == n).then_some(Member { spec, graph })
        })
        .collect()
}

pub(crate) fn rho(g: &Graph) -> Estimate {
    spectral_radius(g, DEFAULT_TOL).expect("default tolerance converges on small graphs")
}

pub(crate) fn rho_tight(g: &Graph) -> Estimate {
    spectral_radius(g, RECHECK_TOL).expect("re-check tolerance converges on small graphs")
}

/// `ρ(g)` against the integer `t`, exactly; the bracket settles clear cases.
pub(crate) fn cmp_int(g: &Graph, t: i64, guard: f64, tally: &mut Tally) -> Ordering {
    if (g.max_degree() as i64) < t {
        return Ordering::Less;
    }
    let est = rho(g);
    let tf = t as f64;
    if est.lower > tf + guard {
        Ordering::Greater
    } else if est.upper < tf - guard {
        Ordering::Less
    } else {
        tally.bump("guard band, exact re-check");
        compare_rho_int(g, t)
    }
}

/// `ρ(g)` against `sqrt(s)`, exactly; the bracket settles clear cases.
pub(crate) fn cmp_sqrt(g: &Graph, s: i64, guard: f64, tally: &mut Tally) -> Ordering {
    let est = rho(g);
    let r = (s as f64).sqrt();
    if est.lower > r + guard {
        Ordering::Greater
    } else if est.upper < r - guard {
        Ordering::Less
    } else {
        tally.bump("guard band, exact re-check");
        compare_rho_sq(g, s)
    }
}

/// `ρ(g)` against a threshold known to about 1e-12. Inside the guard band
/// the bracket is recomputed at [`RECHECK_TOL`]; `None` if still unresolved.
pub(crate) fn cmp_value(g: &Graph, r: f64, guard: f64, tally: &mut Tally) -> Option<Ordering> {
    if (g.max_degree() as f64) < r - guard {
        return Some(Ordering::Less);
    }
    let est = rho(g);
    if est.lower > r + guard {
        return Some(Ordering::Greater);
    }
    if est.upper < r - guard {
        return Some(Ordering::Less);
    }
    tally.bump("guard band, re-check at 1e-12");
    let est = rho_tight(g);
    let slack = 1e-11;
    if est.lower > r + slack {
        Some(Ordering::Greater)
    } else if est.upper < r - slack {
        Some(Ordering::Less)
    } else {
        tally.bump("guard band, unresolved");
        None
    }
}

pub(crate) fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// How the graphs of one order were covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Coverage {
    Exhaustive,
    Sampled(u64),
}

/// Exhaustive scan when feasible (or allowed), otherwise `opts.samples`
/// uniformly random labeled graphs split into fixed seeded chunks.
pub(crate) fn scan_or_sample<F>(n: usize, filters: &Filters, opts: &VerifyOptions, visit: F) -> Result<(Work, u64, Coverage)>
where
    F: Fn(&mut Work, &Graph) + Sync,
{
    if opts.long_running || pattern_count(n, filters) <= FEASIBLE_PATTERNS {
        let (w, c) = scan(n, filters, opts.jobs, opts.long_running, Work::default, visit)?;
        return Ok((w, c, Coverage::Exhaustive));
    }
    let slots = edge_slots(n);
    let run = || {
        (0..SAMPLE_CHUNKS)
            .into_par_iter()
            .map(|chunk| {
                let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
                rng.set_stream(chunk);
                let quota = opts.samples / SAMPLE_CHUNKS + u64::from(chunk < opts.samples % SAMPLE_CHUNKS);
                let mut work = Work::default();
                let mut visited = 0;
                for _ in 0..quota {
                    let mut g = Graph::empty(n).expect("order checked by caller");
                    for &(i, j) in &slots {
                        if rng.gen::<bool>() {
                            g.set_edge(i, j);
                        }
                    }
                    if g.size() >= filters.min_edges
                        && filters.max_edges.is_none_or(|m| g.size() <= m)
                        && filters.accepts(&g)
                    {
                        visited += 1;
                        visit(&mut work, &g);
                    }
                }
                (work, visited)
            })
            .collect::<Vec<_>>()
    };
    let parts = pool(opts.jobs)?.install(run);
    let mut it = parts.into_iter();
    let (mut work, mut count) = it.next().expect("at least one chunk");
    for (w, c) in it {
        work.merge(w);
        count += c;
    }
    Ok((work, count, Coverage::Sampled(opts.samples)))
}

pub(crate) fn note_coverage(report: &mut VerificationReport, n: usize, coverage: Coverage) {
    if let Coverage::Sampled(k) = coverage {
        report.notes.push(format!(
            "n = {n}: {k} uniformly random labeled graphs sampled (seeded) instead of all 2^{}",
            binom2(n)
        ));
    }
}

pub(crate) fn check_order(check: &str, n: usize, lo: usize, hi: usize) -> Result<()> {
    if n < lo || n > hi {
        return Err(crate::Error::InvalidParameter(format!("{check} needs {lo} <= n <= {hi}, got {n}")));
    }
    Ok(())
}

pub(crate) fn missing_members(report: &mut VerificationReport, expected: &[Member]) {
    for m in expected {
        let name = m.spec.to_string();
        if !report.exceptions.iter().any(|e| e.family.as_deref() == Some(name.as_str())) {
            report.notes.push(format!("expected member not found: {name}"));
        }
    }
}
