use std::fmt;

use super::{
    disjoint_union, is_isomorphic, join, MAX_ISO_ORDER, k_copies, make_complete, make_complete_bipartite, make_cycle, make_path, Graph,
};
use crate::error::{Error, Result};

/// Symbolic description of a graph family member.
///
/// `Display` prints the expression grammar understood by the CLI, e.g.
/// `join(K2,union(K10,2K1))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    /// `K1 ∨ (K_{n-3} + 2K1)`, the extremal non-traceable graph.
    G1(usize),
    /// `K2 ∨ (K_{n-4} + 2K1)`, the extremal non-Hamiltonian graph.
    G2(usize),
    /// `K_k ∨ (n-k)K1`.
    Split { n: usize, k: usize },
    /// `K1 ∨ (K_{n-3} + K2)`.
    CutPair(usize),
    Path(usize),
    Cycle(usize),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Union(Box<FamilySpec>, Box<FamilySpec>),
    Copies(usize, Box<FamilySpec>),
    /// All members of an exceptional set with the given order.
    Set(ExceptionalSet, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExceptionalSet {
    /// Nine graphs with many edges, minimum degree 1 and no Hamilton path.
    NonTraceable,
    /// Nine graphs with many edges, minimum degree 2 and no Hamilton cycle.
    NonHamiltonian,
}

impl ExceptionalSet {
    pub fn tag(self) -> &'static str {
        match self {
            Self::NonTraceable => "calG1",
            Self::NonHamiltonian => "calG2",
        }
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

impl FamilySpec {
    pub fn join(a: FamilySpec, b: FamilySpec) -> Self {
        Self::Join(Box::new(a), Box::new(b))
    }

    pub fn union(a: FamilySpec, b: FamilySpec) -> Self {
        Self::Union(Box::new(a), Box::new(b))
    }

    pub fn copies(k: usize, a: FamilySpec) -> Self {
        Self::Copies(k, Box::new(a))
    }

    /// Builds the single graph this spec names.
    pub fn realize(&self) -> Result<Graph> {
        match *self {
            Self::Complete(n) => make_complete(n),
            Self::Empty(n) => Graph::empty(n),
            Self::CompleteBipartite(a, b) => make_complete_bipartite(a, b),
            Self::G1(n) => {
                if n < 4 {
                    return Err(invalid(format!("G1 needs n >= 4, got {n}")));
                }
                join(&make_complete(1)?, &disjoint_union(&make_complete(n - 3)?, &Graph::empty(2)?)?)
            }
            Self::G2(n) => {
                if n < 5 {
                    return Err(invalid(format!("G2 needs n >= 5, got {n}")));
                }
                join(&make_complete(2)?, &disjoint_union(&make_complete(n - 4)?, &Graph::empty(2)?)?)
            }
            Self::Split { n, k } => {
                if k == 0 || k >= n {
                    return Err(invalid(format!("split graph needs 1 <= k <= n-1, got n={n}, k={k}")));
                }
                join(&make_complete(k)?, &Graph::empty(n - k)?)
            }
            Self::CutPair(n) => {
                if n < 5 {
                    return Err(invalid(format!("K1 v (K_(n-3) + K2) needs n >= 5, got {n}")));
                }
                join(&make_complete(1)?, &disjoint_union(&make_complete(n - 3)?, &make_complete(2)?)?)
            }
            Self::Path(n) => make_path(n),
            Self::Cycle(n) => make_cycle(n),
            Self::Join(ref a, ref b) => join(&a.realize()?, &b.realize()?),
            Self::Union(ref a, ref b) => disjoint_union(&a.realize()?, &b.realize()?),
            Self::Copies(k, ref a) => k_copies(k, &a.realize()?),
            Self::Set(set, n) => Err(invalid(format!(
                "{}:{n} names a set of graphs; use members()",
                set.tag()
            ))),
        }
    }

    /// Every graph the spec names: one for ordinary families, the
    /// order-`n` members for set tags.
    pub fn members(&self) -> Result<Vec<Graph>> {
        match *self {
            Self::Set(set, n) => Ok(exceptional_members(set, n).into_iter().map(|m| m.graph).collect()),
            _ => Ok(vec![self.realize()?]),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Complete(n) => write!(f, "K{n}"),
            Self::Empty(1) => write!(f, "K1"),
            Self::Empty(n) => write!(f, "{n}K1"),
            Self::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            Self::G1(n) => write!(f, "G1:{n}"),
            Self::G2(n) => write!(f, "G2:{n}"),
            Self::Split { n, k } => write!(f, "split:{n}:{k}"),
            Self::CutPair(n) => write!(f, "cutK2:{n}"),
            Self::Path(n) => write!(f, "path:{n}"),
            Self::Cycle(n) => write!(f, "cycle:{n}"),
            Self::Join(a, b) => write!(f, "join({a},{b})"),
            Self::Union(a, b) => write!(f, "union({a},{b})"),
            Self::Copies(k, a) => write!(f, "{k}{a}"),
            Self::Set(s, n) => write!(f, "{}:{n}", s.tag()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Member {
    pub spec: FamilySpec,
    pub graph: Graph,
}

impl Member {
    /// Whether `g` is isomorphic to this member.
    ///
    /// Order, size and degree sequence are compared first. Past the
    /// isomorphism-search limit the two infinite families are recognised
    /// structurally.
    pub fn matches(&self, g: &Graph) -> Result<bool> {
        if g.order() != self.graph.order()
            || g.size() != self.graph.size()
            || g.degree_sequence() != self.graph.degree_sequence()
        {
            return Ok(false);
        }
        match self.spec {
            FamilySpec::G1(n) if n > MAX_ISO_ORDER => Ok(hub_clique_shape(g, 1)),
            FamilySpec::G2(n) if n > MAX_ISO_ORDER => Ok(hub_clique_shape(g, 2)),
            _ => is_isomorphic(g, &self.graph),
        }
    }
}

/// `K_h ∨ (K_{n-h-2} + 2K1)` given that the degree sequence already agrees:
/// the two degree-`h` vertices see exactly the hubs and every other
/// non-hub vertex sees everything except those two.
fn hub_clique_shape(g: &Graph, hubs: usize) -> bool {
    let n = g.order();
    let all = g.vertex_mask();
    let hub_mask = (0..n).filter(|&v| g.degree(v) == n - 1).fold(0u32, |m, v| m | 1 << v);
    let leaf_mask = (0..n).filter(|&v| g.degree(v) == hubs).fold(0u32, |m, v| m | 1 << v);
    if hub_mask.count_ones() as usize != hubs || leaf_mask.count_ones() != 2 || hub_mask & leaf_mask != 0 {
        return false;
    }
    (0..n).all(|v| {
        let bit = 1u32 << v;
        if hub_mask & bit != 0 {
            true
        } else if leaf_mask & bit != 0 {
            g.row(v) == hub_mask
        } else {
            g.row(v) == all & !leaf_mask & !bit
        }
    })
}

fn k(n: usize) -> FamilySpec {
    FamilySpec::Complete(n)
}

fn e(n: usize) -> FamilySpec {
    FamilySpec::Empty(n)
}

fn kb(a: usize, b: usize) -> FamilySpec {
    FamilySpec::CompleteBipartite(a, b)
}

fn set_list(set: ExceptionalSet, n: usize) -> Vec<FamilySpec> {
    use FamilySpec as F;
    match set {
        ExceptionalSet::NonHamiltonian => vec![
            F::G2(n),
            F::join(k(3), e(4)),
            F::join(k(2), F::union(kb(1, 3), k(1))),
            F::join(k(1), kb(2, 4)),
            F::join(k(3), F::union(k(2), e(3))),
            F::join(k(4), e(5)),
            F::join(k(3), F::union(kb(1, 4), k(1))),
            F::join(k(2), kb(2, 5)),
            F::join(k(5), e(6)),
        ],
        ExceptionalSet::NonTraceable => vec![
            F::G1(n),
            F::join(k(1), F::union(kb(1, 3), k(1))),
            kb(2, 4),
            F::join(k(2), e(4)),
            F::join(k(2), F::union(e(3), k(2))),
            F::join(k(1), kb(2, 5)),
            F::join(k(3), e(5)),
            F::join(k(2), F::union(kb(1, 4), k(1))),
            F::join(k(4), e(6)),
        ],
    }
}

/// Members of the exceptional set whose order is `n`.
pub fn exceptional_members(set: ExceptionalSet, n: usize) -> Vec<Member> {
    set_list(set, n)
        .into_iter()
        .filter_map(|spec| {
            let graph = spec.realize().ok()?;
            (graph.order() == n).then_some(Member { spec, graph })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom2(n: usize) -> usize {
        n * (n - 1) / 2
    }

    #[test]
    fn g1_g2_edge_counts() {
        for n in 4..=32 {
            assert_eq!(FamilySpec::G1(n).realize().unwrap().size(), binom2(n - 3) + n - 1);
        }
        for n in 5..=32 {
            assert_eq!(FamilySpec::G2(n).realize().unwrap().size(), binom2(n - 2) + 4);
        }
        assert_eq!(FamilySpec::G2(7).realize().unwrap().size(), 14);
        assert!(FamilySpec::G2(4).realize().is_err());
        assert!(FamilySpec::G1(3).realize().is_err());
    }

    #[test]
    fn split_graphs() {
        let g = FamilySpec::Split { n: 8, k: 3 }.realize().unwrap();
        let h = FamilySpec::join(k(3), e(5)).realize().unwrap();
        assert!(is_isomorphic(&g, &h).unwrap());
        assert!(FamilySpec::Split { n: 5, k: 5 }.realize().is_err());
        assert!(FamilySpec::Split { n: 5, k: 0 }.realize().is_err());
    }

    #[test]
    fn degree_sequences_of_named_graphs() {
        let n = 10;
        let d = FamilySpec::G2(n).realize().unwrap().degree_sequence();
        let mut want = vec![2, 2];
        want.extend(std::iter::repeat_n(n - 3, n - 4));
        want.extend([n - 1, n - 1]);
        assert_eq!(d.as_slice(), want.as_slice());

        let d = FamilySpec::join(k(5), e(6)).realize().unwrap().degree_sequence();
        assert_eq!(d.as_slice(), &[5, 5, 5, 5, 5, 5, 10, 10, 10, 10, 10]);
    }

    #[test]
    fn set_members_by_order() {
        let nine = exceptional_members(ExceptionalSet::NonHamiltonian, 9);
        let names: Vec<String> = nine.iter().map(|m| m.spec.to_string()).collect();
        assert_eq!(names, ["G2:9", "join(K4,5K1)", "join(K3,union(K1,4,K1))", "join(K2,K2,5)"]);

        let seven = exceptional_members(ExceptionalSet::NonHamiltonian, 7);
        assert_eq!(seven.len(), 4);
        assert_eq!(exceptional_members(ExceptionalSet::NonHamiltonian, 8).len(), 2);
        assert_eq!(exceptional_members(ExceptionalSet::NonHamiltonian, 11).len(), 2);
        assert_eq!(exceptional_members(ExceptionalSet::NonTraceable, 6).len(), 4);
        assert_eq!(exceptional_members(ExceptionalSet::NonTraceable, 8).len(), 4);
        assert_eq!(exceptional_members(ExceptionalSet::NonTraceable, 4).len(), 1);

        let all = FamilySpec::Set(ExceptionalSet::NonHamiltonian, 7).members().unwrap();
        assert_eq!(all.len(), 4);
        assert!(FamilySpec::Set(ExceptionalSet::NonHamiltonian, 7).realize().is_err());
    }

    #[test]
    fn sets_are_related_by_joining_a_vertex() {
        // every member of the cycle set is K1 joined with a member of the path set
        for n in 5..=11 {
            let big = exceptional_members(ExceptionalSet::NonHamiltonian, n);
            let small = exceptional_members(ExceptionalSet::NonTraceable, n - 1);
            assert_eq!(big.len(), small.len(), "n={n}");
            for s in &small {
                let lifted = join(&make_complete(1).unwrap(), &s.graph).unwrap();
                assert!(big.iter().any(|b| is_isomorphic(&b.graph, &lifted).unwrap()), "n={n} {}", s.spec);
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(FamilySpec::G1(6).to_string(), "G1:6");
        assert_eq!(FamilySpec::Split { n: 9, k: 4 }.to_string(), "split:9:4");
        assert_eq!(
            FamilySpec::join(k(2), FamilySpec::union(k(10), e(2))).to_string(),
            "join(K2,union(K10,2K1))"
        );
        assert_eq!(FamilySpec::copies(3, k(2)).to_string(), "3K2");
    }

    #[test]
    fn structural_match_agrees_with_isomorphism() {
        for n in 6..=11 {
            for (kind, hubs) in [(FamilySpec::G1(n), 1), (FamilySpec::G2(n), 2)] {
                let g = kind.realize().unwrap();
                let shuffled = g.relabel(&(0..n).rev().collect::<Vec<_>>()).unwrap();
                assert!(hub_clique_shape(&shuffled, hubs));
                let (u, v) = g.edges().next().unwrap();
                assert!(!hub_clique_shape(&g.without_edge(u, v).unwrap(), hubs));
            }
        }
        let g = FamilySpec::G2(14).realize().unwrap();
        let m = Member { spec: FamilySpec::G2(14), graph: g };
        assert!(m.matches(&g).unwrap());
        assert!(!m.matches(&FamilySpec::G1(14).realize().unwrap()).unwrap());
        let c = FamilySpec::CutPair(14).realize().unwrap();
        assert!(!m.matches(&c).unwrap());
    }
}
