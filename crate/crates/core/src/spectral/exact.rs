//! Exact comparisons of the spectral radius with rational thresholds.
//!
//! The characteristic polynomial of an integer symmetric matrix is computed
//! exactly (Faddeev–LeVerrier). Its roots are all real, so Descartes' rule
//! of signs counts the positive roots exactly; shifting the matrix by `tI`
//! turns "how many eigenvalues exceed t" into a sign-variation count.

use std::cmp::Ordering;

use num_traits::{FromPrimitive, Num, Signed};

use crate::graph::Graph;
use crate::ExactInt;

/// Coefficients `c_0..=c_n` of `det(xI - M)` (so `c_n = 1`).
///
/// Works over any exact ring where the intermediate divisions by `k` are
/// exact, i.e. integers of sufficient width or rationals.
pub fn characteristic_polynomial<T>(matrix: &[Vec<T>]) -> Vec<T>
where
    T: Clone + Num + FromPrimitive,
{
    let n = matrix.len();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut m_prev: Vec<Vec<T>> = vec![vec![T::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut m_k = mat_mul(matrix, &m_prev);
        for (i, row) in m_k.iter_mut().enumerate() {
            row[i] = row[i].clone() + coeffs[n - k + 1].clone();
        }
        let am = mat_mul(matrix, &m_k);
        let trace = (0..n).fold(T::zero(), |acc, i| acc + am[i][i].clone());
        let kk = T::from_usize(k).expect("order fits");
        coeffs[n - k] = T::zero() - trace / kk;
        m_prev = m_k;
    }
    coeffs
}

fn mat_mul<T: Clone + Num>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = a.len();
    let mut out = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] = out[i][j].clone() + a[i][k].clone() * b[k][j].clone();
            }
        }
    }
    out
}

/// Number of eigenvalues of the symmetric integer matrix that are
/// `> t` and `== t` (with multiplicity).
pub fn eigenvalues_relative_to<T>(matrix: &[Vec<T>], t: &T) -> (usize, usize)
where
    T: Clone + Num + Signed + FromPrimitive,
{
    let shifted: Vec<Vec<T>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| if i == j { x.clone() - t.clone() } else { x.clone() })
                .collect()
        })
        .collect();
    let p = characteristic_polynomial(&shifted);
    let zeros = p.iter().take_while(|c| c.is_zero()).count();
    let mut variations = 0;
    let mut last: Option<bool> = None;
    for c in &p[zeros..] {
        if c.is_zero() {
            continue;
        }
        let pos = c.is_positive();
        if last.is_some_and(|l| l != pos) {
            variations += 1;
        }
        last = Some(pos);
    }
    (variations, zeros)
}

fn adjacency(g: &Graph) -> Vec<Vec<ExactInt>> {
    let n = g.order();
    (0..n)
        .map(|i| (0..n).map(|j| ExactInt::from(g.has_edge(i, j) as u8)).collect())
        .collect()
}

fn verdict((above, equal): (usize, usize)) -> Ordering {
    if above > 0 {
        Ordering::Greater
    } else if equal > 0 {
        Ordering::Equal
    } else {
        Ordering::Less
    }
}

/// Exact comparison of `ρ(g)` with the integer `t`.
pub fn compare_rho_int(g: &Graph, t: i64) -> Ordering {
    if t < 0 {
        return Ordering::Greater;
    }
    verdict(eigenvalues_relative_to(&adjacency(g), &ExactInt::from(t)))
}

/// Exact comparison of `ρ(g)²` with the integer `s`, i.e. `ρ(g)` against `sqrt(s)`.
///
/// Uses `A²`, whose largest eigenvalue is `ρ²` because `ρ >= |λ|` for every
/// adjacency eigenvalue `λ`.
pub fn compare_rho_sq(g: &Graph, s: i64) -> Ordering {
    if s < 0 {
        return Ordering::Greater;
    }
    let a = adjacency(g);
    let a2 = mat_mul(&a, &a);
    verdict(eigenvalues_relative_to(&a2, &ExactInt::from(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_complete_bipartite, make_cycle, make_path, FamilySpec};
    use num_rational::Ratio;

    fn adj_i128(g: &Graph) -> Vec<Vec<i128>> {
        let n = g.order();
        (0..n).map(|i| (0..n).map(|j| g.has_edge(i, j) as i128).collect()).collect()
    }

    #[test]
    fn small_characteristic_polynomials() {
        // K3: (x - 2)(x + 1)² = x³ - 3x - 2
        assert_eq!(characteristic_polynomial(&adj_i128(&make_complete(3).unwrap())), vec![-2, -3, 0, 1]);
        // P3: x³ - 2x
        assert_eq!(characteristic_polynomial(&adj_i128(&make_path(3).unwrap())), vec![0, -2, 0, 1]);
        // C4: x⁴ - 4x²
        assert_eq!(characteristic_polynomial(&adj_i128(&make_cycle(4).unwrap())), vec![0, 0, -4, 0, 1]);
    }

    #[test]
    fn generic_over_exact_types() {
        let g = FamilySpec::G2(8).realize().unwrap();
        let ints = characteristic_polynomial(&adj_i128(&g));
        let big: Vec<Vec<ExactInt>> = adjacency(&g);
        let bigs = characteristic_polynomial(&big);
        let rat: Vec<Vec<Ratio<i64>>> = adj_i128(&g)
            .iter()
            .map(|r| r.iter().map(|&x| Ratio::from_integer(x as i64)).collect())
            .collect();
        let rats = characteristic_polynomial(&rat);
        for i in 0..=8 {
            assert_eq!(ExactInt::from(ints[i]), bigs[i]);
            assert_eq!(Ratio::from_integer(ints[i] as i64), rats[i]);
        }
    }

    #[test]
    fn integer_thresholds() {
        let k7 = make_complete(7).unwrap();
        assert_eq!(compare_rho_int(&k7, 6), Ordering::Equal);
        assert_eq!(compare_rho_int(&k7, 5), Ordering::Greater);
        assert_eq!(compare_rho_int(&k7, 7), Ordering::Less);
        // K3 ∨ 5K1 has ρ exactly 5
        let s = FamilySpec::Split { n: 8, k: 3 }.realize().unwrap();
        assert_eq!(compare_rho_int(&s, 5), Ordering::Equal);
        // G1_8 has ρ ≈ 5.0695
        assert_eq!(compare_rho_int(&FamilySpec::G1(8).realize().unwrap(), 5), Ordering::Greater);
        assert_eq!(compare_rho_int(&Graph::empty(3).unwrap(), 0), Ordering::Equal);
        assert_eq!(compare_rho_int(&Graph::empty(3).unwrap(), -1), Ordering::Greater);
    }

    #[test]
    fn square_root_thresholds() {
        // ρ(K_{2,4}) = sqrt(8)
        let k24 = make_complete_bipartite(2, 4).unwrap();
        assert_eq!(compare_rho_sq(&k24, 8), Ordering::Equal);
        assert_eq!(compare_rho_sq(&k24, 7), Ordering::Greater);
        assert_eq!(compare_rho_sq(&k24, 9), Ordering::Less);
        // ρ(K2 ∨ 4K1) ≈ 3.3723 > sqrt(11) ≈ 3.3166
        let g = FamilySpec::join(FamilySpec::Complete(2), FamilySpec::Empty(4)).realize().unwrap();
        assert_eq!(compare_rho_sq(&g, 11), Ordering::Greater);
        assert_eq!(compare_rho_sq(&g, 12), Ordering::Less);
    }
}
