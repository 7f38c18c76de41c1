use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};

pub const MAX_CIRCUMFERENCE_ORDER: usize = 18;

/// Length of a longest cycle, 0 for forests.
///
/// For each start vertex `s`, a subset DP over the vertices above `s`
/// records which endpoints are reachable by a path from `s` through exactly
/// that set; a cycle closes whenever an endpoint is adjacent to `s`. Every
/// cycle is found from its smallest vertex.
pub fn circumference(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > MAX_CIRCUMFERENCE_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_CIRCUMFERENCE_ORDER,
            method: "longest cycle search",
        });
    }
    let mut best = 0;
    let mut dp: Vec<u32> = Vec::new();
    for s in 0..n {
        if n - s <= best.max(2) {
            break;
        }
        let width = n - s - 1;
        let above = g.vertex_mask() & !((2u32 << s) - 1);
        dp.clear();
        dp.resize(1 << width, 0);
        for u in BitIter(g.row(s) & above) {
            dp[1 << (u - s - 1)] |= 1 << u;
        }
        for m in 1u32..1 << width {
            let ends = dp[m as usize];
            if ends == 0 {
                continue;
            }
            let visited = m << (s + 1);
            let len = m.count_ones() as usize + 1;
            for v in BitIter(ends) {
                if len >= 3 && g.has_edge(v, s) {
                    best = best.max(len);
                }
                for u in BitIter(g.row(v) & above & !visited) {
                    dp[(m | 1 << (u - s - 1)) as usize] |= 1 << u;
                }
            }
        }
    }
    Ok(best)
}
