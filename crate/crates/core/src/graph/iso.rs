//! Isomorphism by backtracking over vertex classes.
//!
//! Vertices are first split by a cheap invariant (degree, then the sum and
//! sum of squares of neighbor degrees); a bijection may only map a vertex
//! to one with the same invariant. Enough for the orders this crate works at.

use std::cmp::Ordering;

use super::{BitIter, Graph};
use crate::error::{Error, Result};

pub const MAX_ISO_ORDER: usize = 11;

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ISO_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_ISO_ORDER,
            method: "permutation isomorphism",
        });
    }
    Ok(())
}

fn invariants(g: &Graph) -> Vec<(usize, usize, usize)> {
    (0..g.order())
        .map(|v| {
            let (s, q) = BitIter(g.row(v)).fold((0, 0), |(s, q), u| {
                let d = g.degree(u);
                (s + d, q + d * d)
            });
            (g.degree(v), s, q)
        })
        .collect()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    check_order(g.order())?;
    check_order(h.order())?;
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let ig = invariants(g);
    let ih = invariants(h);
    let mut sg = ig.clone();
    let mut sh = ih.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return Ok(false);
    }

    // Visit g's vertices so each one has as many already-placed neighbors as possible.
    let n = g.order();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u32;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((g.row(v) & placed).count_ones(), g.degree(v), usize::MAX - v))
            .expect("unplaced vertex remains");
        order.push(next);
        placed |= 1 << next;
    }

    let mut image = vec![usize::MAX; n];
    Ok(extend(g, h, &ig, &ih, &order, &mut image, 0, 0))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    ig: &[(usize, usize, usize)],
    ih: &[(usize, usize, usize)],
    order: &[usize],
    image: &mut [usize],
    depth: usize,
    used: u32,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    // images of v's already-mapped neighbors
    let mut want = 0u32;
    let mut mapped = 0u32;
    for &u in &order[..depth] {
        mapped |= 1 << image[u];
        if g.has_edge(v, u) {
            want |= 1 << image[u];
        }
    }
    for w in 0..h.order() {
        if used >> w & 1 == 1 || ih[w] != ig[v] || h.row(w) & mapped != want {
            continue;
        }
        image[v] = w;
        if extend(g, h, ig, ih, order, image, depth + 1, used | 1 << w) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}

/// A canonical relabeling: isomorphic inputs produce identical graphs.
///
/// Positions are grouped by the vertex invariant and, within that
/// constraint, the column-major upper triangle is minimized lexicographically.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.order();
    check_order(n)?;
    let inv = invariants(g);
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by_key(|&v| inv[v]);
    let slot_class: Vec<(usize, usize, usize)> = slots.iter().map(|&v| inv[v]).collect();

    let mut search = Canon {
        g,
        inv: &inv,
        slot_class: &slot_class,
        at: vec![0; n],
        cols: vec![0; n],
        best: None,
    };
    search.descend(0, 0);
    let best = search.best.expect("at least one labeling exists");
    let mut perm = vec![0; n];
    for (pos, &v) in best.0.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

struct Canon<'a> {
    g: &'a Graph,
    inv: &'a [(usize, usize, usize)],
    slot_class: &'a [(usize, usize, usize)],
    at: Vec<usize>,
    cols: Vec<u32>,
    best: Option<(Vec<usize>, Vec<u32>)>,
}

impl Canon<'_> {
    /// Compares the current prefix `cols[..=k]` with the best code so far.
    fn against_best(&self, k: usize) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some((_, best)) => self.cols[..=k].cmp(&best[..=k]),
        }
    }

    fn descend(&mut self, k: usize, used: u32) {
        let n = self.g.order();
        for v in 0..n {
            if used >> v & 1 == 1 || self.inv[v] != self.slot_class[k] {
                continue;
            }
            let mut col = 0u32;
            for p in 0..k {
                col = col << 1 | self.g.has_edge(v, self.at[p]) as u32;
            }
            self.at[k] = v;
            self.cols[k] = col;
            let state = self.against_best(k);
            if state == Ordering::Greater {
                continue;
            }
            if k + 1 == n {
                if state == Ordering::Less {
                    self.best = Some((self.at.clone(), self.cols.clone()));
                }
            } else {
                self.descend(k + 1, used | 1 << v);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, join, make_complete, make_complete_bipartite, make_cycle, make_path};

    fn g1(n: usize) -> Graph {
        let inner = disjoint_union(&make_complete(n - 3).unwrap(), &Graph::empty(2).unwrap()).unwrap();
        join(&make_complete(1).unwrap(), &inner).unwrap()
    }

    #[test]
    fn bipartite_as_join_of_empties() {
        let a = make_complete_bipartite(2, 4).unwrap();
        let b = join(&Graph::empty(4).unwrap(), &Graph::empty(2).unwrap()).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn different_degree_sequences() {
        let k3_4k1 = join(&make_complete(3).unwrap(), &Graph::empty(4).unwrap()).unwrap();
        let inner = disjoint_union(&make_complete(3).unwrap(), &Graph::empty(2).unwrap()).unwrap();
        let g27 = join(&make_complete(2).unwrap(), &inner).unwrap();
        assert!(!is_isomorphic(&k3_4k1, &g27).unwrap());
    }

    #[test]
    fn relabelings_are_isomorphic() {
        let g = g1(8);
        let h = g.relabel(&[3, 7, 0, 5, 1, 6, 2, 4]).unwrap();
        let k = g.relabel(&[7, 6, 5, 4, 3, 2, 1, 0]).unwrap();
        assert!(is_isomorphic(&g, &h).unwrap());
        assert!(is_isomorphic(&h, &k).unwrap());
        assert_eq!(canonical_form(&h).unwrap(), canonical_form(&k).unwrap());
    }

    #[test]
    fn same_degrees_not_isomorphic() {
        // C6 and 2C3 are both 2-regular
        let c6 = make_cycle(6).unwrap();
        let two_c3 = disjoint_union(&make_cycle(3).unwrap(), &make_cycle(3).unwrap()).unwrap();
        assert!(!is_isomorphic(&c6, &two_c3).unwrap());
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&two_c3).unwrap());
        assert!(!is_isomorphic(&make_path(4).unwrap(), &make_cycle(4).unwrap()).unwrap());
    }

    #[test]
    fn order_cap() {
        let big = make_complete(12).unwrap();
        assert!(is_isomorphic(&big, &big).is_err());
        assert!(canonical_form(&big).is_err());
    }

    #[test]
    fn canonical_classes_match_isomorphism_on_five_vertices() {
        let slots: Vec<(usize, usize)> = (1..5).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let graphs: Vec<Graph> = (0u32..1 << 10)
            .map(|bits| {
                let e: Vec<_> = slots.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &p)| p).collect();
                Graph::from_edges(5, &e).unwrap()
            })
            .collect();
        let mut classes = std::collections::HashSet::new();
        for g in &graphs {
            classes.insert(crate::graph::graph6_encode(&canonical_form(g).unwrap()));
        }
        // 34 unlabeled graphs on five vertices
        assert_eq!(classes.len(), 34);
        for (i, a) in graphs.iter().enumerate().step_by(37) {
            for b in graphs.iter().skip(i % 11).step_by(53) {
                let same = canonical_form(a).unwrap() == canonical_form(b).unwrap();
                assert_eq!(same, is_isomorphic(a, b).unwrap());
            }
        }
    }
}
