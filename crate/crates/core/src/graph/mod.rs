//! Simple undirected graphs on at most 32 vertices.
//!
//! Each adjacency row is one `u32`, so a [`Graph`] is `Copy` and cheap to
//! pass around inside enumeration loops.

mod family;
mod graph6;
mod iso;

pub use family::{exceptional_members, ExceptionalSet, FamilySpec, Member};
pub use graph6::{graph6_decode, graph6_encode};
pub use iso::{canonical_form, is_isomorphic, MAX_ISO_ORDER};

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    rows: [u32; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Order {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Self {
            n: n as u8,
            rows: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) invalid for order {n}"
                )));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows. Rows must be symmetric
    /// and loop-free; this is checked.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let n = rows.len();
        let mut g = Self::empty(n)?;
        let mask = g.vertex_mask();
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || row & (1 << v) != 0 {
                return Err(Error::InvalidParameter(format!("row {v} has bits outside the graph")));
            }
            g.rows[v] = row;
        }
        for u in 0..n {
            for v in 0..n {
                if g.has_edge(u, v) != g.has_edge(v, u) {
                    return Err(Error::InvalidParameter("adjacency is not symmetric".into()));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn from_rows_unchecked(n: usize, rows: [u32; MAX_VERTICES]) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        Self { n: n as u8, rows }
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    /// Copy of `self` with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = *self;
        g.set_edge(u, v);
        Ok(g)
    }

    /// Copy of `self` with the edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = *self;
        g.clear_edge(u, v);
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.order() || v >= self.order() || u == v {
            return Err(Error::InvalidParameter(format!(
                "pair ({u}, {v}) invalid for order {}",
                self.order()
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn row(&self, v: usize) -> u32 {
        self.rows[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.rows[..self.order()]
    }

    #[inline]
    pub fn vertex_mask(&self) -> u32 {
        if self.n as usize == MAX_VERTICES {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d: Vec<usize> = self.rows().iter().map(|r| r.count_ones() as usize).collect();
        d.sort_unstable();
        DegreeSequence(d)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |v| {
            let higher = self.rows[v] & !((2u32 << v).wrapping_sub(1));
            BitIter(higher).map(move |u| (v, u))
        })
    }

    /// Connected components as vertex bitmasks, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut remaining = self.vertex_mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining & remaining.wrapping_neg();
            let comp = self.reach(start);
            out.push(comp);
            remaining &= !comp;
        }
        out
    }

    /// Vertices reachable from the set `seed`.
    pub fn reach(&self, seed: u32) -> u32 {
        let mut seen = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(1) == self.vertex_mask()
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::InvalidParameter("permutation length mismatch".into()));
        }
        let mut seen = 0u32;
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut g = Self::empty(n)?;
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", graph6_encode(self))
    }
}

/// Iterates over set bit positions, lowest first.
#[derive(Clone, Copy)]
pub struct BitIter(pub u32);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Degrees sorted non-decreasing, indexed 1-based by [`DegreeSequence::d`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Accepts an already sorted sequence; rejects anything else.
    pub fn from_sorted(degrees: Vec<usize>) -> Result<Self> {
        if degrees.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Unsorted);
        }
        Ok(Self(degrees))
    }

    pub fn from_unsorted(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        Self(degrees)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// `d_i` with 1-based `i`.
    pub fn d(&self, i: usize) -> usize {
        self.0[i - 1]
    }
}

pub fn make_empty(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

pub fn make_complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    let mask = g.vertex_mask();
    for v in 0..n {
        g.rows[v] = mask & !(1 << v);
    }
    Ok(g)
}

pub fn make_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(format!("K{{{a},{b}}} needs both parts non-empty")));
    }
    join(&Graph::empty(a)?, &Graph::empty(b)?)
}

pub fn make_path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = make_path(n)?;
    g.set_edge(0, n - 1);
    Ok(g)
}

fn check_sum(a: usize, b: usize) -> Result<usize> {
    let n = a + b;
    if n > MAX_VERTICES {
        return Err(Error::Order {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(n)
}

/// `G + H`: vertices of `h` are shifted past those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let shift = g.order();
    let n = check_sum(shift, h.order())?;
    let mut rows = g.rows;
    for v in 0..h.order() {
        rows[shift + v] = h.rows[v] << shift;
    }
    Ok(Graph::from_rows_unchecked(n, rows))
}

/// `G ∨ H`: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut out = disjoint_union(g, h)?;
    let left = g.vertex_mask();
    let right = h.vertex_mask() << g.order();
    for v in 0..g.order() {
        out.rows[v] |= right;
    }
    for v in g.order()..out.order() {
        out.rows[v] |= left;
    }
    Ok(out)
}

/// `kG`: `k` disjoint copies of `g`.
pub fn k_copies(k: usize, g: &Graph) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("k_copies needs k >= 1".into()));
    }
    check_sum(0, k * g.order())?;
    let mut out = *g;
    for _ in 1..k {
        out = disjoint_union(&out, g)?;
    }
    Ok(out)
}
