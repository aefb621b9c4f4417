//! The first and second Zagreb indices and their exact comparison.
//!
//! `M1(G)` is the sum of squared vertex degrees; `M2(G)` is the sum over
//! edges of the product of endpoint degrees. The interesting question is how
//! `M1/n` relates to `M2/m`; everything here decides it by integer
//! cross-multiplication of `n*M2` against `m*M1`, never by division.

use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::Graph;
use crate::rational::Rational;

/// Outcome of comparing `M1/n` against `M2/m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `M1/n < M2/m`
    StrictlyLess,
    /// `M1/n = M2/m`
    Equal,
    /// `M1/n > M2/m` (the inequality `M1/n <= M2/m` fails)
    StrictlyGreater,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::StrictlyLess => "strictly-less",
            Verdict::Equal => "equal",
            Verdict::StrictlyGreater => "strictly-greater",
        })
    }
}

/// Exact comparison result for one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZagrebReport {
    pub n: usize,
    pub m: usize,
    pub m1: BigInt,
    pub m2: BigInt,
    pub verdict: Verdict,
}

impl ZagrebReport {
    /// `M1/n` as an exact fraction.
    pub fn m1_over_n(&self) -> Rational {
        Rational::new(self.m1.clone(), BigInt::from(self.n))
    }

    /// `M2/m` as an exact fraction.
    pub fn m2_over_m(&self) -> Rational {
        Rational::new(self.m2.clone(), BigInt::from(self.m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZagrebError {
    /// The graph has no edges, so `M2/m` is undefined.
    Edgeless,
    /// A vertex of degree zero makes the per-vertex `1/d` weights undefined.
    IsolatedVertex(usize),
    /// Degree arguments must be at least 1.
    ZeroDegree,
}

impl fmt::Display for ZagrebError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZagrebError::Edgeless => write!(f, "graph has no edges"),
            ZagrebError::IsolatedVertex(v) => write!(f, "isolated vertex {v}"),
            ZagrebError::ZeroDegree => write!(f, "degree arguments must be >= 1"),
        }
    }
}

impl core::error::Error for ZagrebError {}

/// First Zagreb index: sum of `d(v)^2` over all vertices.
pub fn m1(g: &Graph) -> BigInt {
    let mut total = BigInt::zero();
    for v in 0..g.vertex_count() {
        let d = g.degree(v) as u64;
        total += BigInt::from(d * d);
    }
    total
}

/// Second Zagreb index: sum of `d(u) * d(v)` over all edges.
pub fn m2(g: &Graph) -> BigInt {
    let mut total = BigInt::zero();
    for (u, v) in g.edges() {
        total += BigInt::from(g.degree(u) as u64 * g.degree(v) as u64);
    }
    total
}

/// Compares `M1/n` with `M2/m` exactly.
///
/// Requires at least one edge and no isolated vertices; both make the ratio
/// comparison (and the edge-class identities behind it) meaningless.
pub fn compare(g: &Graph) -> Result<ZagrebReport, ZagrebError> {
    if let Some(v) = g.isolated_vertex() {
        return Err(ZagrebError::IsolatedVertex(v));
    }
    if g.edge_count() == 0 {
        return Err(ZagrebError::Edgeless);
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let m1 = m1(g);
    let m2 = m2(g);
    let lhs = BigInt::from(m) * &m1; // m * M1, i.e. M1/n scaled by n*m
    let rhs = BigInt::from(n) * &m2; // n * M2
    let verdict = match lhs.cmp(&rhs) {
        core::cmp::Ordering::Less => Verdict::StrictlyLess,
        core::cmp::Ordering::Equal => Verdict::Equal,
        core::cmp::Ordering::Greater => Verdict::StrictlyGreater,
    };
    Ok(ZagrebReport { n, m, m1, m2, verdict })
}

/// The pairwise edge-class interaction term
///
/// ```text
/// f(i,j,k,l) = ij(1/k + 1/l) + kl(1/i + 1/j) - i - j - k - l
///            = (ij - kl) * (ij(k+l) - kl(i+j)) / (ijkl)
/// ```
///
/// evaluated exactly. Its sign pattern over the degree classes present in a
/// graph governs the comparison of `M1/n` with `M2/m`.
pub fn f(i: u64, j: u64, k: u64, l: u64) -> Result<Rational, ZagrebError> {
    if i == 0 || j == 0 || k == 0 || l == 0 {
        return Err(ZagrebError::ZeroDegree);
    }
    let (i, j, k, l) = (BigInt::from(i), BigInt::from(j), BigInt::from(k), BigInt::from(l));
    let ij = &i * &j;
    let kl = &k * &l;
    let numerator = (&ij - &kl) * (&ij * (&k + &l) - &kl * (&i + &j));
    Ok(Rational::new(numerator, ij * kl))
}

/// Sign of `f(i, j, k, l)` without building the fraction.
///
/// Uses 128-bit arithmetic when it provably cannot overflow, falling back to
/// the exact rational for enormous degrees.
pub fn f_sign(i: u64, j: u64, k: u64, l: u64) -> Result<i32, ZagrebError> {
    if i == 0 || j == 0 || k == 0 || l == 0 {
        return Err(ZagrebError::ZeroDegree);
    }
    // ij, kl < 2^64 and ij(k+l), kl(i+j) < 2^97 when all inputs < 2^32
    if i < (1 << 32) && j < (1 << 32) && k < (1 << 32) && l < (1 << 32) {
        let ij = i as u128 * j as u128;
        let kl = k as u128 * l as u128;
        let left = ij * (k as u128 + l as u128);
        let right = kl * (i as u128 + j as u128);
        let s1 = cmp_sign(ij, kl);
        let s2 = cmp_sign(left, right);
        return Ok(s1 * s2);
    }
    Ok(f(i, j, k, l)?.signum())
}

fn cmp_sign(a: u128, b: u128) -> i32 {
    match a.cmp(&b) {
        core::cmp::Ordering::Less => -1,
        core::cmp::Ordering::Equal => 0,
        core::cmp::Ordering::Greater => 1,
    }
}

/// Sum of `f(i,j,k,l) * m[i,j] * m[k,l]` over unordered pairs of distinct
/// degree classes, `(i,j)` lexicographically before `(k,l)`.
///
/// Identical-class terms are omitted: `f` vanishes on the diagonal. The
/// result is always an integer and equals `n*M2 - m*M1` exactly; the
/// acceptance suite re-derives that identity from scratch.
pub fn decomposition_sum(g: &Graph) -> Result<BigInt, ZagrebError> {
    if let Some(v) = g.isolated_vertex() {
        return Err(ZagrebError::IsolatedVertex(v));
    }
    if g.edge_count() == 0 {
        return Err(ZagrebError::Edgeless);
    }
    let classes: alloc::vec::Vec<((usize, usize), usize)> =
        g.edge_class_counts().iter().collect();
    let mut total = Rational::zero();
    for (a, &((i, j), count_a)) in classes.iter().enumerate() {
        for &((k, l), count_b) in &classes[a + 1..] {
            let term = f(i as u64, j as u64, k as u64, l as u64)?;
            if term.is_zero() {
                continue;
            }
            let weight = Rational::from_integer(BigInt::from(count_a) * BigInt::from(count_b));
            total += term * weight;
        }
    }
    debug_assert!(total.is_integer());
    Ok(total.numer().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn m1_m2_small_graphs() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(m1(&c5), BigInt::from(20));
        assert_eq!(m2(&c5), BigInt::from(20));

        let star4 = Graph::star(4).unwrap();
        assert_eq!(m1(&star4), BigInt::from(20));
        assert_eq!(m2(&star4), BigInt::from(16));
    }

    #[test]
    fn regular_graphs_are_equal() {
        for g in [k(3), k(5), Graph::cycle(7).unwrap()] {
            let report = compare(&g).unwrap();
            assert_eq!(report.verdict, Verdict::Equal);
        }
    }

    #[test]
    fn biregular_class1_ratio_is_product() {
        let report = compare(&Graph::complete_bipartite(3, 4).unwrap()).unwrap();
        assert_eq!(report.verdict, Verdict::Equal);
        assert_eq!(report.m1_over_n(), Rational::from_integer(BigInt::from(12)));
        assert_eq!(report.m2_over_m(), Rational::from_integer(BigInt::from(12)));
    }

    #[test]
    fn k5_union_k36_is_equal() {
        let g = k(5).disjoint_union(&Graph::complete_bipartite(3, 6).unwrap());
        let report = compare(&g).unwrap();
        assert_eq!(report.m1, BigInt::from(242));
        assert_eq!(report.m2, BigInt::from(484));
        assert_eq!(report.verdict, Verdict::Equal);
        assert_eq!(report.m1_over_n(), Rational::new(121, 7));
    }

    #[test]
    fn c3_union_star5_violates_inequality() {
        let g = Graph::cycle(3).unwrap().disjoint_union(&Graph::star(5).unwrap());
        let report = compare(&g).unwrap();
        assert_eq!(report.verdict, Verdict::StrictlyGreater);
        assert_eq!(report.m1_over_n(), Rational::new(42, 9));
        assert_eq!(report.m2_over_m(), Rational::new(37, 8));
    }

    #[test]
    fn compare_rejects_degenerate_inputs() {
        assert_eq!(compare(&Graph::empty(3)), Err(ZagrebError::IsolatedVertex(0)));
        let with_isolated = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(compare(&with_isolated), Err(ZagrebError::IsolatedVertex(2)));
    }

    #[test]
    fn f_spot_values() {
        assert!(f(2, 3, 2, 3).unwrap().is_zero());
        assert!(f(1, 4, 2, 2).unwrap().is_zero());
        assert!(f(3, 6, 4, 4).unwrap().is_zero());
        assert_eq!(f(2, 5, 3, 3).unwrap(), Rational::new(-1, 30));
        assert_eq!(f(0, 1, 1, 1), Err(ZagrebError::ZeroDegree));
    }

    #[test]
    fn f_closed_form_matches_expanded_form() {
        // f = ij(1/k + 1/l) + kl(1/i + 1/j) - i - j - k - l
        for i in 1..=6u64 {
            for j in i..=6 {
                for k in 1..=6 {
                    for l in k..=6 {
                        let lhs = f(i, j, k, l).unwrap();
                        let ij = Rational::from_integer(BigInt::from(i * j));
                        let kl = Rational::from_integer(BigInt::from(k * l));
                        let inv = |x: u64| Rational::new(BigInt::one(), BigInt::from(x));
                        let rhs = ij * (inv(k) + inv(l)) + kl * (inv(i) + inv(j))
                            - Rational::from_integer(BigInt::from(i + j + k + l));
                        assert_eq!(lhs, rhs, "f({i},{j},{k},{l})");
                    }
                }
            }
        }
    }

    #[test]
    fn f_sign_matches_f() {
        for i in 1..=7u64 {
            for j in 1..=7 {
                for k in 1..=7 {
                    for l in 1..=7 {
                        assert_eq!(
                            f_sign(i, j, k, l).unwrap(),
                            f(i, j, k, l).unwrap().signum()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_p4() {
        let p4 = Graph::path(4).unwrap();
        let sum = decomposition_sum(&p4).unwrap();
        assert_eq!(sum, BigInt::from(2));
        let report = compare(&p4).unwrap();
        let direct = BigInt::from(report.n) * &report.m2 - BigInt::from(report.m) * &report.m1;
        assert_eq!(sum, direct);
    }

    #[test]
    fn decomposition_regular_is_zero() {
        assert_eq!(decomposition_sum(&k(6)).unwrap(), BigInt::zero());
        assert_eq!(decomposition_sum(&Graph::cycle(9).unwrap()).unwrap(), BigInt::zero());
    }
}
