//! Exact Hamilton path/cycle decisions and the degree and edge-count
//! sufficient conditions that go with them.

mod circumference;
mod conditions;
mod graphic;

pub use circumference::{circumference, MAX_CIRCUMFERENCE_ORDER};
pub use conditions::{
    chvatal_check, erdos_gallai_guarantee, hamilton_path_via_join, join_k1, lemma_edge_threshold_cycle,
    lemma_edge_threshold_path, ore_bondy_check, ChvatalVerdict, EdgeVerdict,
};
pub use graphic::is_graphic;

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};

pub const MAX_HAM_ORDER: usize = 24;

/// Outcome of a Hamilton path or cycle search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamWitness {
    pub found: bool,
    /// Vertices in path/cycle order when `found`.
    pub order: Option<Vec<usize>>,
}

impl HamWitness {
    fn from_order(order: Option<Vec<usize>>) -> Self {
        Self {
            found: order.is_some(),
            order,
        }
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > MAX_HAM_ORDER {
        return Err(Error::TooLarge {
            n: g.order(),
            max: MAX_HAM_ORDER,
            method: "subset dynamic program",
        });
    }
    Ok(())
}

pub fn has_hamilton_path(g: &Graph) -> Result<HamWitness> {
    check_order(g)?;
    Ok(HamWitness::from_order(HamSolver::new().find_path(g)))
}

pub fn has_hamilton_cycle(g: &Graph) -> Result<HamWitness> {
    check_order(g)?;
    Ok(HamWitness::from_order(HamSolver::new().find_cycle(g)))
}

/// True if `order` is a Hamilton path (or cycle, when `closed`) of `g`.
pub fn is_valid_witness(g: &Graph, order: &[usize], closed: bool) -> bool {
    let n = g.order();
    if order.len() != n {
        return false;
    }
    let mut seen = 0u32;
    for &v in order {
        if v >= n || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    if !order.windows(2).all(|w| g.has_edge(w[0], w[1])) {
        return false;
    }
    !closed || n >= 3 && g.has_edge(order[0], order[n - 1])
}

/// Reusable scratch space for the Hamilton searches.
///
/// Dense graphs are settled by a short greedy depth-first search; anything
/// it does not finish falls through to the subset dynamic program, which
/// is exact. One solver per worker thread.
#[derive(Default)]
pub struct HamSolver {
    dp: Vec<u32>,
}

const DFS_BUDGET: usize = 256;

impl HamSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn path_exists(&mut self, g: &Graph) -> bool {
        self.find_path(g).is_some()
    }

    pub fn cycle_exists(&mut self, g: &Graph) -> bool {
        self.find_cycle(g).is_some()
    }

    pub fn find_path(&mut self, g: &Graph) -> Option<Vec<usize>> {
        let n = g.order();
        assert!(n <= MAX_HAM_ORDER);
        if n == 1 {
            return Some(vec![0]);
        }
        if !g.is_connected() {
            return None;
        }
        let order = self.quick_path(g).or_else(|| self.dp_path(g))?;
        assert!(is_valid_witness(g, &order, false), "invalid path witness");
        Some(order)
    }

    pub fn find_cycle(&mut self, g: &Graph) -> Option<Vec<usize>> {
        let n = g.order();
        assert!(n <= MAX_HAM_ORDER);
        if n < 3 || g.min_degree() < 2 || !g.is_connected() {
            return None;
        }
        let order = self.quick_cycle(g).or_else(|| self.dp_cycle(g))?;
        assert!(is_valid_witness(g, &order, true), "invalid cycle witness");
        Some(order)
    }

    fn quick_path(&self, g: &Graph) -> Option<Vec<usize>> {
        let mut budget = DFS_BUDGET;
        let mut starts: Vec<usize> = (0..g.order()).collect();
        starts.sort_by_key(|&v| g.degree(v));
        for s in starts.into_iter().take(2) {
            let mut path = vec![s];
            if dfs(g, &mut path, 1 << s, None, &mut budget) {
                return Some(path);
            }
        }
        None
    }

    fn quick_cycle(&self, g: &Graph) -> Option<Vec<usize>> {
        let mut budget = DFS_BUDGET;
        let s = (0..g.order()).min_by_key(|&v| g.degree(v))?;
        let mut path = vec![s];
        dfs(g, &mut path, 1 << s, Some(s), &mut budget).then_some(path)
    }

    fn dp_path(&mut self, g: &Graph) -> Option<Vec<usize>> {
        let n = g.order();
        let full = g.vertex_mask();
        self.dp.clear();
        self.dp.resize(1 << n, 0);
        let dp = &mut self.dp;
        for v in 0..n {
            dp[1 << v] = 1 << v;
        }
        for mask in 1..=full {
            let ends = dp[mask as usize];
            if ends == 0 {
                continue;
            }
            for v in BitIter(ends) {
                for u in BitIter(g.row(v) & !mask) {
                    dp[(mask | 1 << u) as usize] |= 1 << u;
                }
            }
        }
        let ends = dp[full as usize];
        if ends == 0 {
            return None;
        }
        let mut v = ends.trailing_zeros() as usize;
        let mut mask = full;
        let mut order = vec![v];
        loop {
            let prev = mask & !(1 << v);
            if prev == 0 {
                break;
            }
            let u = (dp[prev as usize] & g.row(v)).trailing_zeros() as usize;
            order.push(u);
            mask = prev;
            v = u;
        }
        Some(order)
    }

    /// Paths from vertex 0; state index is the visited set minus vertex 0, shifted down.
    fn dp_cycle(&mut self, g: &Graph) -> Option<Vec<usize>> {
        let n = g.order();
        let rest = (1u32 << (n - 1)) - 1;
        self.dp.clear();
        self.dp.resize(1 << (n - 1), 0);
        let dp = &mut self.dp;
        for u in BitIter(g.row(0)) {
            dp[1 << (u - 1)] |= 1 << u;
        }
        for m in 1..=rest {
            let ends = dp[m as usize];
            if ends == 0 {
                continue;
            }
            let visited = m << 1 | 1;
            for v in BitIter(ends) {
                for u in BitIter(g.row(v) & !visited) {
                    dp[(m | 1 << (u - 1)) as usize] |= 1 << u;
                }
            }
        }
        let closing = dp[rest as usize] & g.row(0);
        if closing == 0 {
            return None;
        }
        let mut v = closing.trailing_zeros() as usize;
        let mut m = rest;
        let mut order = vec![v];
        loop {
            let prev = m & !(1 << (v - 1));
            if prev == 0 {
                break;
            }
            let u = (dp[prev as usize] & g.row(v)).trailing_zeros() as usize;
            order.push(u);
            m = prev;
            v = u;
        }
        order.push(0);
        order.reverse();
        Some(order)
    }
}

/// Depth-first extension of `path`, fewest-onward-moves first. Gives up
/// (returning false) when the node budget runs out.
fn dfs(g: &Graph, path: &mut Vec<usize>, visited: u32, close_to: Option<usize>, budget: &mut usize) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let full = g.vertex_mask();
    let last = *path.last().expect("path is non-empty");
    if visited == full {
        return close_to.is_none_or(|s| g.has_edge(last, s));
    }
    let mut next: Vec<(u32, usize)> = BitIter(g.row(last) & !visited)
        .map(|u| ((g.row(u) & !visited).count_ones(), u))
        .collect();
    next.sort_unstable();
    for (_, u) in next {
        path.push(u);
        if dfs(g, path, visited | 1 << u, close_to, budget) {
            return true;
        }
        path.pop();
        if *budget == 0 {
            return false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, make_complete, make_cycle, make_path, FamilySpec};

    fn spec(s: FamilySpec) -> Graph {
        s.realize().unwrap()
    }

    #[test]
    fn paths() {
        let k2_4k1 = spec(FamilySpec::join(FamilySpec::Complete(2), FamilySpec::Empty(4)));
        assert!(!has_hamilton_path(&k2_4k1).unwrap().found);
        assert!(!has_hamilton_path(&spec(FamilySpec::G1(6))).unwrap().found);
        let w = has_hamilton_path(&make_path(5).unwrap()).unwrap();
        assert!(w.found);
        assert!(is_valid_witness(&make_path(5).unwrap(), w.order.as_ref().unwrap(), false));
        assert!(has_hamilton_path(&Graph::empty(1).unwrap()).unwrap().found);
        assert!(!has_hamilton_path(&Graph::empty(2).unwrap()).unwrap().found);
        let g = disjoint_union(&make_complete(4).unwrap(), &make_complete(1).unwrap()).unwrap();
        assert!(!has_hamilton_path(&g).unwrap().found);
    }

    #[test]
    fn cycles() {
        assert!(!has_hamilton_cycle(&spec(FamilySpec::G2(14))).unwrap().found);
        let k3_4k1 = spec(FamilySpec::join(FamilySpec::Complete(3), FamilySpec::Empty(4)));
        assert!(!has_hamilton_cycle(&k3_4k1).unwrap().found);
        let c8 = make_cycle(8).unwrap();
        let w = has_hamilton_cycle(&c8).unwrap();
        assert!(w.found && is_valid_witness(&c8, w.order.as_ref().unwrap(), true));
        assert!(!has_hamilton_cycle(&make_complete(2).unwrap()).unwrap().found);
        assert!(has_hamilton_cycle(&make_complete(3).unwrap()).unwrap().found);
    }

    #[test]
    fn order_limit() {
        let big = make_complete(25).unwrap();
        assert!(has_hamilton_path(&big).is_err());
        assert!(has_hamilton_cycle(&big).is_err());
    }

    #[test]
    fn dp_and_dfs_agree() {
        // Petersen graph: traceable, not Hamiltonian; the DFS budget does not decide it
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        let petersen = Graph::from_edges(10, &e).unwrap();
        let mut s = HamSolver::new();
        assert!(s.path_exists(&petersen));
        assert!(!s.cycle_exists(&petersen));
        assert!(s.dp_path(&petersen).is_some());
        assert!(s.dp_cycle(&petersen).is_none());
        let k6 = make_complete(6).unwrap();
        let c = s.dp_cycle(&k6).unwrap();
        assert!(is_valid_witness(&k6, &c, true));
        let p = s.dp_path(&make_path(6).unwrap()).unwrap();
        assert!(is_valid_witness(&make_path(6).unwrap(), &p, false));
    }

    #[test]
    fn witness_checker() {
        let c4 = make_cycle(4).unwrap();
        assert!(is_valid_witness(&c4, &[0, 1, 2, 3], true));
        assert!(!is_valid_witness(&c4, &[0, 2, 1, 3], false));
        assert!(!is_valid_witness(&c4, &[0, 1, 2], false));
        assert!(!is_valid_witness(&c4, &[0, 1, 1, 3], false));
        assert!(!is_valid_witness(&make_path(4).unwrap(), &[0, 1, 2, 3], true));
    }
}
