//! Labeled graph enumeration over edge-slot bit patterns.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest pattern count scanned without the long-running flag.
pub const FEASIBLE_PATTERNS: u128 = 1 << 26;
pub const MAX_ENUM_ORDER: usize = 9;
const SHARD_BITS: usize = 6;

/// Cheap predicates applied before the visitor sees a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filters {
    pub min_degree: usize,
    pub min_edges: usize,
    pub max_edges: Option<usize>,
    pub connected: bool,
}

impl Filters {
    pub fn min_degree(d: usize) -> Self {
        Self {
            min_degree: d,
            ..Self::default()
        }
    }

    pub fn with_min_edges(mut self, m: usize) -> Self {
        self.min_edges = m;
        self
    }

    pub fn with_max_edges(mut self, m: usize) -> Self {
        self.max_edges = Some(m);
        self
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn describe(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.min_degree > 0 {
            out.push(format!("min_degree >= {}", self.min_degree));
        }
        if self.min_edges > 0 {
            out.push(format!("edges >= {}", self.min_edges));
        }
        if let Some(m) = self.max_edges {
            out.push(format!("edges <= {m}"));
        }
        if self.connected {
            out.push("connected".into());
        }
        out
    }

    fn window(&self, slots: usize) -> (usize, usize) {
        (self.min_edges, self.max_edges.unwrap_or(slots).min(slots))
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        g.min_degree() >= self.min_degree && (!self.connected || g.is_connected())
    }
}

/// Vertex pairs in graph6 order: `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of edge patterns inside the filter's edge-count window.
pub fn pattern_count(n: usize, filters: &Filters) -> u128 {
    let s = n * n.saturating_sub(1) / 2;
    let (lo, hi) = filters.window(s);
    (lo..=hi).map(|j| binomial(s, j)).sum()
}

fn check_range(n: usize, filters: &Filters, long_running: bool) -> Result<()> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(Error::Order {
            n,
            max: MAX_ENUM_ORDER,
        });
    }
    let patterns = pattern_count(n, filters);
    if patterns > FEASIBLE_PATTERNS && !long_running {
        return Err(Error::Infeasible { patterns });
    }
    Ok(())
}

/// All patterns of `width` bits with popcount `k`, in increasing order.
fn for_each_combination(width: usize, k: usize, mut f: impl FnMut(u64)) {
    if k > width {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit = 1u64 << width;
    let mut x = (1u64 << k) - 1;
    while x < limit {
        f(x);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
}

struct Builder {
    n: usize,
    slots: Vec<(usize, usize)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Self {
            n,
            slots: edge_slots(n),
        }
    }

    fn graph(&self, mut pattern: u64) -> Graph {
        let mut rows = [0u32; 32];
        while pattern != 0 {
            let b = pattern.trailing_zeros() as usize;
            pattern &= pattern - 1;
            let (i, j) = self.slots[b];
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
        Graph::from_rows_unchecked(self.n, rows)
    }
}

/// Number of shards the pattern space is split into for order `n`.
pub fn shard_count(n: usize) -> usize {
    let s = n * n.saturating_sub(1) / 2;
    1 << SHARD_BITS.min(s)
}

/// Visits the graphs of one shard: the patterns whose top edge bits equal `shard`.
/// Returns the number of graphs passed to the visitor.
pub fn enumerate_shard(n: usize, filters: &Filters, shard: usize, mut visitor: impl FnMut(&Graph)) -> u64 {
    let builder = Builder::new(n);
    let s = builder.slots.len();
    let b = SHARD_BITS.min(s);
    let low = s - b;
    let prefix = (shard as u64) << low;
    let fixed = shard.count_ones() as usize;
    let (lo, hi) = filters.window(s);
    let mut visited = 0;
    for total in lo..=hi {
        if total < fixed || total - fixed > low {
            continue;
        }
        for_each_combination(low, total - fixed, |bits| {
            let g = builder.graph(prefix | bits);
            if filters.accepts(&g) {
                visited += 1;
                visitor(&g);
            }
        });
    }
    visited
}

/// Visits every labeled graph on `n` vertices passing `filters`, sequentially.
pub fn enumerate_graphs(n: usize, filters: &Filters, long_running: bool, mut visitor: impl FnMut(&Graph)) -> Result<u64> {
    check_range(n, filters, long_running)?;
    Ok((0..shard_count(n))
        .map(|shard| enumerate_shard(n, filters, shard, &mut visitor))
        .sum())
}

/// Accumulated per-shard results that combine associatively.
pub trait Merge {
    fn merge(&mut self, other: Self);
}

/// Runs `visit` over every shard on a pool of `jobs` threads and merges the
/// per-shard accumulators in shard order, so the result does not depend on
/// `jobs`.
pub fn scan<A, I, F>(n: usize, filters: &Filters, jobs: usize, long_running: bool, init: I, visit: F) -> Result<(A, u64)>
where
    A: Merge + Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, &Graph) + Sync,
{
    check_range(n, filters, long_running)?;
    let run = || {
        (0..shard_count(n))
            .into_par_iter()
            .map(|shard| {
                let mut acc = init();
                let count = enumerate_shard(n, filters, shard, |g| visit(&mut acc, g));
                (acc, count)
            })
            .collect::<Vec<_>>()
    };
    let parts = pool(jobs)?.install(run);
    let mut parts = parts.into_iter();
    let (mut acc, mut count) = parts.next().expect("at least one shard");
    for (a, c) in parts {
        acc.merge(a);
        count += c;
    }
    Ok((acc, count))
}

pub(crate) fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    if jobs == 0 {
        return Err(Error::InvalidParameter("jobs must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    impl Merge for u64 {
        fn merge(&mut self, other: Self) {
            *self += other;
        }
    }

    #[test]
    fn slot_order_matches_graph6() {
        assert_eq!(edge_slots(4), vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]);
        let b = Builder::new(4);
        // single edge in the last slot
        let g = b.graph(1 << 5);
        assert!(g.has_edge(2, 3) && g.size() == 1);
        assert_eq!(crate::graph::graph6_encode(&b.graph(0b111)), "Cw");
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_graphs(5, &Filters::default(), false, |_| {}).unwrap(), 1024);
        assert_eq!(enumerate_graphs(1, &Filters::default(), false, |_| {}).unwrap(), 1);
        assert_eq!(enumerate_graphs(2, &Filters::default(), false, |_| {}).unwrap(), 2);
        let f = Filters::default().with_min_edges(3).with_max_edges(4);
        assert_eq!(enumerate_graphs(5, &f, false, |g| assert!((3..=4).contains(&g.size()))).unwrap(), 120 + 210);
        assert_eq!(pattern_count(5, &f), 330);
    }

    #[test]
    fn combinations_are_complete() {
        let mut seen = vec![];
        for_each_combination(5, 2, |x| seen.push(x));
        assert_eq!(seen.len(), 10);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        assert!(seen.iter().all(|x| x.count_ones() == 2));
        let mut none = 0;
        for_each_combination(3, 4, |_| none += 1);
        assert_eq!(none, 0);
    }

    #[test]
    fn infeasible_without_flag() {
        assert!(matches!(
            enumerate_graphs(8, &Filters::default(), false, |_| {}),
            Err(Error::Infeasible { .. })
        ));
        assert!(matches!(enumerate_graphs(10, &Filters::default(), true, |_| {}), Err(Error::Order { .. })));
    }

    #[test]
    fn parallel_matches_sequential() {
        let f = Filters::min_degree(1);
        let seq = enumerate_graphs(6, &f, false, |_| {}).unwrap();
        for jobs in [1, 3] {
            let (edges, count) = scan(6, &f, jobs, false, || 0u64, |a, g| *a += g.size() as u64).unwrap();
            assert_eq!(count, seq);
            let mut total = 0u64;
            enumerate_graphs(6, &f, false, |g| total += g.size() as u64).unwrap();
            assert_eq!(edges, total);
        }
        assert!(scan(4, &f, 0, false, || 0u64, |_, _| {}).is_err());
    }
}
