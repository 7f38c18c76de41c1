use super::{HamSolver, MAX_HAM_ORDER};
use crate::error::{Error, Result};
use crate::graph::{exceptional_members, join, make_complete, DegreeSequence, ExceptionalSet, FamilySpec, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChvatalVerdict {
    /// Every graph with a pointwise larger degree sequence is Hamiltonian.
    Guaranteed,
    /// The condition fails at this (1-based) index.
    Unknown { k: usize },
}

impl ChvatalVerdict {
    pub fn witness_k(&self) -> Option<usize> {
        match *self {
            Self::Guaranteed => None,
            Self::Unknown { k } => Some(k),
        }
    }
}

/// Chvátal's condition: no `k < n/2` with `d_k <= k` and `d_{n-k} <= n-k-1`.
pub fn chvatal_check(d: &DegreeSequence) -> Result<ChvatalVerdict> {
    let n = d.len();
    if n < 3 {
        return Err(Error::InvalidParameter(format!("degree condition needs n >= 3, got {n}")));
    }
    for k in (1..).take_while(|&k| 2 * k < n) {
        if d.d(k) <= k && d.d(n - k) < n - k {
            return Ok(ChvatalVerdict::Unknown { k });
        }
    }
    Ok(ChvatalVerdict::Guaranteed)
}

/// Conclusion of an edge-count sufficient condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeVerdict {
    /// The hypotheses hold and `g` is not exceptional, so the property holds.
    Guaranteed,
    /// The hypotheses hold but `g` is the named exception.
    Exception(FamilySpec),
    /// The hypotheses do not hold.
    NotApplicable,
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `m >= C(n-1, 2) + 1` forces a Hamilton cycle, except for
/// `K1 ∨ (K_{n-2} + K1)` and, at `n = 5`, `K2 ∨ 3K1`.
pub fn ore_bondy_check(g: &Graph) -> Result<EdgeVerdict> {
    let n = g.order();
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle condition needs n >= 3, got {n}")));
    }
    if g.size() < binom2(n - 1) + 1 {
        return Ok(EdgeVerdict::NotApplicable);
    }
    // a pendant vertex plus this many edges leaves K_{n-1} behind it
    if g.min_degree() == 1 {
        return Ok(EdgeVerdict::Exception(FamilySpec::join(
            FamilySpec::Complete(1),
            FamilySpec::union(FamilySpec::Complete(n - 2), FamilySpec::Empty(1)),
        )));
    }
    let k2_3k1 = FamilySpec::join(FamilySpec::Complete(2), FamilySpec::Empty(3));
    if n == 5 && g.size() == 7 && g.degree_sequence().as_slice() == [2, 2, 2, 4, 4] {
        return Ok(EdgeVerdict::Exception(k2_3k1));
    }
    Ok(EdgeVerdict::Guaranteed)
}

fn match_exception(g: &Graph, set: ExceptionalSet) -> Result<EdgeVerdict> {
    for member in exceptional_members(set, g.order()) {
        if member.matches(g)? {
            return Ok(EdgeVerdict::Exception(member.spec));
        }
    }
    Ok(EdgeVerdict::Guaranteed)
}

/// `n >= 5`, `δ >= 2` and `m >= C(n-2, 2) + 4` force a Hamilton cycle
/// unless `g` is one of the nine exceptional non-Hamiltonian graphs.
pub fn lemma_edge_threshold_cycle(g: &Graph) -> Result<EdgeVerdict> {
    let n = g.order();
    if n < 5 || g.min_degree() < 2 || g.size() < binom2(n - 2) + 4 {
        return Ok(EdgeVerdict::NotApplicable);
    }
    match_exception(g, ExceptionalSet::NonHamiltonian)
}

/// `n >= 4`, `δ >= 1` and `m >= C(n-2, 2) + 2` force a Hamilton path
/// unless `g` is one of the nine exceptional non-traceable graphs.
pub fn lemma_edge_threshold_path(g: &Graph) -> Result<EdgeVerdict> {
    let n = g.order();
    if n < 4 || g.min_degree() < 1 || g.size() < binom2(n - 2) + 2 {
        return Ok(EdgeVerdict::NotApplicable);
    }
    match_exception(g, ExceptionalSet::NonTraceable)
}

/// `G ∨ K1`, with the new vertex last.
pub fn join_k1(g: &Graph) -> Result<Graph> {
    join(g, &make_complete(1)?)
}

/// `g` has a Hamilton path iff `G ∨ K1` has a Hamilton cycle.
pub fn hamilton_path_via_join(g: &Graph) -> Result<bool> {
    if g.order() + 1 > MAX_HAM_ORDER {
        return Err(Error::TooLarge {
            n: g.order(),
            max: MAX_HAM_ORDER - 1,
            method: "Hamilton path via join",
        });
    }
    Ok(HamSolver::new().cycle_exists(&join_k1(g)?))
}

/// Cycle length guaranteed by the edge count: a graph with
/// `m > k(n - 1)/2` has a cycle of length at least `k + 1` (for `k >= 2`).
/// Returns `k + 1` for the largest such `k`, or 0 when even `k = 2` is not
/// reached.
pub fn erdos_gallai_guarantee(n: usize, m: usize) -> usize {
    if n < 2 || m == 0 {
        return 0;
    }
    let k = (2 * m - 1) / (n - 1);
    if k < 2 {
        0
    } else {
        k + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete_bipartite, make_cycle, make_path};

    fn ds(v: &[usize]) -> DegreeSequence {
        DegreeSequence::from_sorted(v.to_vec()).unwrap()
    }

    #[test]
    fn chvatal() {
        // C5 is Hamiltonian but fails the condition
        assert_eq!(chvatal_check(&ds(&[2, 2, 2, 2, 2])).unwrap(), ChvatalVerdict::Unknown { k: 2 });
        assert_eq!(chvatal_check(&ds(&[1, 1, 2, 2])).unwrap(), ChvatalVerdict::Unknown { k: 1 });
        assert_eq!(chvatal_check(&ds(&[1, 1, 2, 2])).unwrap().witness_k(), Some(1));
        // K2 ∨ 3K1
        assert_eq!(chvatal_check(&ds(&[2, 2, 2, 4, 4])).unwrap(), ChvatalVerdict::Unknown { k: 2 });
        // K_{3,3}
        assert_eq!(chvatal_check(&ds(&[3; 6])).unwrap(), ChvatalVerdict::Guaranteed);
        assert_eq!(chvatal_check(&ds(&[4; 5])).unwrap(), ChvatalVerdict::Guaranteed);
        let g2 = FamilySpec::G2(14).realize().unwrap().degree_sequence();
        assert_eq!(chvatal_check(&g2).unwrap(), ChvatalVerdict::Unknown { k: 2 });
        let d = ds(&[5, 5, 5, 5, 5, 5, 10, 10, 10, 10, 10]);
        assert_eq!(chvatal_check(&d).unwrap(), ChvatalVerdict::Unknown { k: 5 });
        assert!(chvatal_check(&ds(&[1, 1])).is_err());
        assert!(DegreeSequence::from_sorted(vec![3, 2, 2, 1]).is_err());
    }

    #[test]
    fn ore_bondy() {
        let k5 = make_complete(5).unwrap();
        assert_eq!(ore_bondy_check(&k5).unwrap(), EdgeVerdict::Guaranteed);
        let pendant = FamilySpec::join(FamilySpec::Complete(1), FamilySpec::union(FamilySpec::Complete(4), FamilySpec::Empty(1)));
        let g = pendant.realize().unwrap();
        assert_eq!(ore_bondy_check(&g).unwrap(), EdgeVerdict::Exception(pendant));
        let k2_3k1 = FamilySpec::join(FamilySpec::Complete(2), FamilySpec::Empty(3));
        assert_eq!(ore_bondy_check(&k2_3k1.realize().unwrap()).unwrap(), EdgeVerdict::Exception(k2_3k1));
        assert_eq!(ore_bondy_check(&make_cycle(6).unwrap()).unwrap(), EdgeVerdict::NotApplicable);
        assert_eq!(ore_bondy_check(&make_path(3).unwrap()).unwrap(), EdgeVerdict::Exception(FamilySpec::join(
            FamilySpec::Complete(1),
            FamilySpec::union(FamilySpec::Complete(1), FamilySpec::Empty(1))
        )));
        assert!(ore_bondy_check(&make_complete(2).unwrap()).is_err());
    }

    #[test]
    fn cycle_lemma() {
        let g = FamilySpec::G2(14).realize().unwrap();
        assert_eq!(lemma_edge_threshold_cycle(&g).unwrap(), EdgeVerdict::Exception(FamilySpec::G2(14)));
        let g = FamilySpec::G2(7).realize().unwrap();
        assert_eq!(g.size(), 14);
        assert_eq!(lemma_edge_threshold_cycle(&g).unwrap(), EdgeVerdict::Exception(FamilySpec::G2(7)));
        let k2_k25 = FamilySpec::join(FamilySpec::Complete(2), FamilySpec::CompleteBipartite(2, 5));
        let g9 = k2_k25.realize().unwrap();
        assert_eq!((g9.order(), g9.size()), (9, 25));
        assert_eq!(lemma_edge_threshold_cycle(&g9).unwrap(), EdgeVerdict::Exception(k2_k25));
        let k3_4k1 = FamilySpec::join(FamilySpec::Complete(3), FamilySpec::Empty(4));
        assert_eq!(lemma_edge_threshold_cycle(&k3_4k1.realize().unwrap()).unwrap(), EdgeVerdict::Exception(k3_4k1));
        // one fewer edge than the threshold
        let (u, v) = g.edges().last().unwrap();
        assert_eq!(lemma_edge_threshold_cycle(&g.without_edge(u, v).unwrap()).unwrap(), EdgeVerdict::NotApplicable);
        let k9 = make_complete(9).unwrap();
        assert_eq!(lemma_edge_threshold_cycle(&k9).unwrap(), EdgeVerdict::Guaranteed);
    }

    #[test]
    fn path_lemma() {
        let k24 = make_complete_bipartite(2, 4).unwrap();
        assert_eq!(lemma_edge_threshold_path(&k24).unwrap(), EdgeVerdict::Exception(FamilySpec::CompleteBipartite(2, 4)));
        let g = FamilySpec::G1(13).realize().unwrap();
        assert_eq!(lemma_edge_threshold_path(&g).unwrap(), EdgeVerdict::Exception(FamilySpec::G1(13)));
        assert_eq!(lemma_edge_threshold_path(&make_complete(6).unwrap()).unwrap(), EdgeVerdict::Guaranteed);
        assert_eq!(lemma_edge_threshold_path(&make_cycle(6).unwrap()).unwrap(), EdgeVerdict::NotApplicable);
    }

    #[test]
    fn fixture_from_k4_join_4k1() {
        // K4 ∨ 4K1 with x–y1 and x–y2 removed and y1–y2 added
        let base = FamilySpec::join(FamilySpec::Complete(4), FamilySpec::Empty(4)).realize().unwrap();
        let g = join_k1(&base).unwrap();
        assert_eq!(g.order(), 9);
        let g = g.without_edge(8, 4).unwrap().without_edge(8, 5).unwrap().with_edge(4, 5).unwrap();
        assert!(HamSolver::new().cycle_exists(&g));
    }

    #[test]
    fn join_reduction() {
        assert!(hamilton_path_via_join(&make_path(4).unwrap()).unwrap());
        assert!(!hamilton_path_via_join(&Graph::empty(2).unwrap()).unwrap());
        assert!(!hamilton_path_via_join(&FamilySpec::G1(8).realize().unwrap()).unwrap());
        assert!(hamilton_path_via_join(&make_complete(24).unwrap()).is_err());
        let j = join_k1(&make_path(3).unwrap()).unwrap();
        assert_eq!((j.order(), j.size(), j.degree(3)), (4, 5, 3));
    }

    #[test]
    fn erdos_gallai() {
        assert_eq!(erdos_gallai_guarantee(10, 30), 7);
        assert_eq!(erdos_gallai_guarantee(10, 27), 6);
        assert_eq!(erdos_gallai_guarantee(5, 10), 5);
        // 2m = n² - 5n + 10 at n = 14
        assert_eq!(erdos_gallai_guarantee(14, 68), 11);
        // a spanning tree has n - 1 edges and no cycle
        assert_eq!(erdos_gallai_guarantee(10, 9), 0);
        assert_eq!(erdos_gallai_guarantee(10, 10), 3);
        assert_eq!(erdos_gallai_guarantee(3, 0), 0);
    }
}
