use crate::graph::DegreeSequence;

/// Erdős–Gallai: the sequence is graphic iff its sum is even and for every
/// `k`, the `k` largest degrees sum to at most
/// `k(k-1) + Σ_{i>k} min(d_i, k)`.
pub fn is_graphic(d: &DegreeSequence) -> bool {
    let n = d.len();
    let mut desc: Vec<usize> = d.as_slice().to_vec();
    desc.sort_unstable_by(|a, b| b.cmp(a));
    if desc.first().is_some_and(|&top| top >= n) || d.sum() % 2 == 1 {
        return false;
    }
    let mut prefix = 0;
    for k in 1..=n {
        prefix += desc[k - 1];
        let tail: usize = desc[k..].iter().map(|&x| x.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}
