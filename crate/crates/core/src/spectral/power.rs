use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};
use crate::Scalar;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_ITERATIONS: usize = 200_000;

/// An eigenvalue estimate with a bracket `[lower, upper]` that contains the
/// true spectral radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralEstimate<T> {
    pub value: T,
    pub lower: T,
    pub upper: T,
    pub iterations: usize,
}

impl<T: Scalar> SpectralEstimate<T> {
    pub fn width(&self) -> T {
        self.upper - self.lower
    }

    pub fn contains(&self, x: T) -> bool {
        self.lower <= x && x <= self.upper
    }

    fn exact(x: T) -> Self {
        Self {
            value: x,
            lower: x,
            upper: x,
            iterations: 0,
        }
    }
}

/// Largest adjacency eigenvalue of `g`, bracketed to width `tol`.
///
/// Each connected component is handled separately. Regular components are
/// exact. Otherwise power iteration runs on `A + I` from a perturbed uniform
/// vector; the iterate stays positive, so the Collatz–Wielandt ratios
/// `min (Av)_i / v_i <= ρ <= max (Av)_i / v_i` bound the component's radius
/// from both sides, and the Rayleigh quotient tightens the lower end.
pub fn spectral_radius<T: Scalar>(g: &Graph, tol: T) -> Result<SpectralEstimate<T>> {
    if tol.partial_cmp(&T::zero()) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let n = g.order();
    let mut best: Option<SpectralEstimate<T>> = None;
    let mut iterations = 0;
    for comp in g.components() {
        let est = component_radius(g, comp, tol)?;
        iterations += est.iterations;
        best = Some(match best {
            None => est,
            Some(b) => SpectralEstimate {
                value: b.value.max(est.value),
                lower: b.lower.max(est.lower),
                upper: b.upper.max(est.upper),
                iterations: 0,
            },
        });
    }
    let mut est = best.expect("a graph has at least one component");
    let cast = |x: usize| T::from_usize(x).expect("small integers are representable");
    let avg = cast(2 * g.size()) / cast(n);
    est.lower = est.lower.max(avg);
    est.upper = est.upper.min(cast(g.max_degree()));
    est.value = est.value.max(est.lower).min(est.upper);
    est.iterations = iterations;
    Ok(est)
}

fn component_radius<T: Scalar>(g: &Graph, comp: u32, tol: T) -> Result<SpectralEstimate<T>> {
    let verts: Vec<usize> = BitIter(comp).collect();
    let k = verts.len();
    let cast = |x: usize| T::from_usize(x).expect("small integers are representable");
    let d0 = g.degree(verts[0]);
    if verts.iter().all(|&v| g.degree(v) == d0) {
        return Ok(SpectralEstimate::exact(cast(d0)));
    }

    let mut local = [0usize; 32];
    for (i, &v) in verts.iter().enumerate() {
        local[v] = i;
    }
    let nbrs: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| BitIter(g.row(v)).map(|u| local[u]).collect())
        .collect();

    // rounding in a length-k dot product of entries bounded by (Δ+1)
    let slack = T::epsilon() * cast(4 * k) * cast(g.max_degree() + 1);
    let bump = T::from_f64(1e-3).unwrap();
    let mut v: Vec<T> = (0..k).map(|i| T::one() + bump * cast(i + 1) / cast(k + 1)).collect();
    let mut w = vec![T::zero(); k];
    let mut width = T::infinity();

    for iter in 1..=MAX_ITERATIONS {
        for i in 0..k {
            w[i] = nbrs[i].iter().fold(v[i], |acc, &j| acc + v[j]);
        }
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        let mut vav = T::zero();
        let mut vv = T::zero();
        for i in 0..k {
            let av = w[i] - v[i];
            let r = av / v[i];
            lo = lo.min(r);
            hi = hi.max(r);
            vav = vav + v[i] * av;
            vv = vv + v[i] * v[i];
        }
        let rayleigh = vav / vv;
        let lower = rayleigh.max(lo) - slack;
        let upper = hi + slack;
        width = upper - lower;
        if width <= tol {
            return Ok(SpectralEstimate {
                value: rayleigh.max(lower).min(upper),
                lower,
                upper,
                iterations: iter,
            });
        }
        let scale = w.iter().fold(T::zero(), |m, &x| m.max(x));
        for i in 0..k {
            v[i] = w[i] / scale;
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        tol: tol.to_f64().unwrap_or(f64::NAN),
        width: width.to_f64().unwrap_or(f64::NAN),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, make_complete, make_complete_bipartite, make_cycle, make_path, FamilySpec};
    use approx::assert_abs_diff_eq;

    #[test]
    fn complete_graph_is_exact() {
        let est = spectral_radius(&make_complete(7).unwrap(), 1e-10).unwrap();
        assert_eq!(est.value, 6.0);
        assert!(est.contains(6.0));
    }

    #[test]
    fn bipartite_does_not_oscillate() {
        let est = spectral_radius(&make_complete_bipartite(2, 4).unwrap(), 1e-10).unwrap();
        assert!(est.contains(8f64.sqrt()));
        assert_abs_diff_eq!(est.value, 2.8284, epsilon = 1e-4);
        // a path is bipartite and irregular
        let p = spectral_radius(&make_path(7).unwrap(), 1e-10).unwrap();
        assert!(p.contains(2.0 * (std::f64::consts::PI / 8.0).cos()));
    }

    #[test]
    fn g2_eleven() {
        let g = FamilySpec::G2(11).realize().unwrap();
        let est = spectral_radius(&g, 1e-10).unwrap();
        assert_abs_diff_eq!(est.value, 8.1144, epsilon = 1e-4);
        assert!(est.width() <= 1e-10);
    }

    #[test]
    fn disconnected_takes_maximum() {
        let g = disjoint_union(&make_complete(6).unwrap(), &make_complete(1).unwrap()).unwrap();
        assert_eq!(spectral_radius(&g, 1e-10).unwrap().value, 5.0);
        let g = disjoint_union(&make_path(3).unwrap(), &make_cycle(5).unwrap()).unwrap();
        let est = spectral_radius(&g, 1e-10).unwrap();
        assert!(est.contains(2.0));
        let e = spectral_radius(&Graph::empty(4).unwrap(), 1e-10).unwrap();
        assert_eq!((e.lower, e.upper), (0.0, 0.0));
    }

    #[test]
    fn single_precision() {
        let g = FamilySpec::G2(7).realize().unwrap();
        let est = spectral_radius::<f32>(&g, 1e-3).unwrap();
        assert!((est.value - 4.4040).abs() < 1e-3);
        let d = spectral_radius::<f64>(&g, 1e-12).unwrap();
        assert!(est.lower as f64 <= d.upper && d.lower <= est.upper as f64);
    }

    #[test]
    fn rejects_bad_tolerance() {
        let g = make_path(3).unwrap();
        assert!(spectral_radius(&g, 0.0).is_err());
        assert!(spectral_radius(&g, f64::NAN).is_err());
        // far below what doubles can certify
        assert!(matches!(spectral_radius(&g, 1e-300), Err(Error::NoConvergence { .. })));
    }

    #[test]
    fn bracket_respects_perron_clamps() {
        let g = FamilySpec::G1(9).realize().unwrap();
        let est = spectral_radius(&g, 1e-10).unwrap();
        assert!(est.lower >= 2.0 * g.size() as f64 / 9.0);
        assert!(est.upper <= g.max_degree() as f64);
        assert!(est.lower <= est.value && est.value <= est.upper);
    }
}
