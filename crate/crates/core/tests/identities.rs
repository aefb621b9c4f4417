//! Property tests for the algebraic identities tying the edge-class
//! decomposition to the index comparison.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use zagreb_core::enumerate::{enumerate, EnumerationSpec};
use zagreb_core::graph::Graph;
use zagreb_core::intervals::{
    find_harmonic_collisions, find_product_collisions, good_threshold, harmonic_discriminant,
};
use zagreb_core::rational::Rational;
use zagreb_core::zagreb::{compare, decomposition_sum, f, m1, m2, Verdict};

/// Random simple graph with no isolated vertices: random pair bits, then
/// every still-isolated vertex is hooked to its successor.
fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[idx] {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            let mut degrees = vec![0usize; n];
            for &(u, v) in &edges {
                degrees[u] += 1;
                degrees[v] += 1;
            }
            for v in 0..n {
                if degrees[v] == 0 {
                    let u = (v + 1) % n;
                    edges.push((v.min(u), v.max(u)));
                    degrees[v] += 1;
                    degrees[u] += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// The decomposition sum always reproduces n*M2 - m*M1.
    #[test]
    fn decomposition_identity_random(g in graph_strategy(50)) {
        let direct = BigInt::from(g.vertex_count()) * m2(&g)
            - BigInt::from(g.edge_count()) * m1(&g);
        prop_assert_eq!(decomposition_sum(&g).unwrap(), direct);
    }
}

proptest! {
    #[test]
    fn verdict_matches_decomposition_sign(g in graph_strategy(24)) {
        let report = compare(&g).unwrap();
        let sum = decomposition_sum(&g).unwrap();
        let expected = match report.verdict {
            Verdict::StrictlyLess => sum > BigInt::zero(),
            Verdict::Equal => sum.is_zero(),
            Verdict::StrictlyGreater => sum < BigInt::zero(),
        };
        prop_assert!(expected, "verdict {:?} vs sum {}", report.verdict, sum);
    }

    /// m[i,j] identities: totals reproduce m, M1, M2, and n.
    #[test]
    fn edge_class_invariants(g in graph_strategy(30)) {
        let classes = g.edge_class_counts();
        let mut count = 0usize;
        let mut sum_m1 = BigInt::zero();
        let mut sum_m2 = BigInt::zero();
        let mut harmonic = Rational::zero();
        for ((i, j), c) in classes.iter() {
            count += c;
            sum_m1 += BigInt::from(c) * BigInt::from(i + j);
            sum_m2 += BigInt::from(c) * BigInt::from(i * j);
            let weight = Rational::from_integer(BigInt::from(c));
            let inv = Rational::new(BigInt::one(), BigInt::from(i))
                + Rational::new(BigInt::one(), BigInt::from(j));
            harmonic += weight * inv;
        }
        prop_assert_eq!(count, g.edge_count());
        prop_assert_eq!(sum_m1, m1(&g));
        prop_assert_eq!(sum_m2, m2(&g));
        prop_assert_eq!(harmonic, Rational::from_integer(BigInt::from(g.vertex_count())));
    }

    /// f is symmetric within each pair and under exchanging the pairs.
    #[test]
    fn f_symmetry(i in 1u64..40, j in 1u64..40, k in 1u64..40, l in 1u64..40) {
        let base = f(i, j, k, l).unwrap();
        prop_assert_eq!(&base, &f(j, i, k, l).unwrap());
        prop_assert_eq!(&base, &f(i, j, l, k).unwrap());
        prop_assert_eq!(&base, &f(k, l, i, j).unwrap());
    }

    /// f vanishes exactly at product or harmonic collisions.
    #[test]
    fn f_zero_characterization(i in 1u64..25, j in 1u64..25, k in 1u64..25, l in 1u64..25) {
        let zero = f(i, j, k, l).unwrap().is_zero();
        let product = i * j == k * l;
        let harmonic = harmonic_discriminant(i, j, k, l).is_zero();
        prop_assert_eq!(zero, product || harmonic);
    }

    /// Every biregular class-1 graph attains equality with ratio a*b.
    #[test]
    fn complete_bipartite_equality(a in 1usize..12, b in 1usize..12) {
        prop_assume!(a != b); // equal parts are regular, covered below
        let g = Graph::complete_bipartite(a, b).unwrap();
        let report = compare(&g).unwrap();
        prop_assert_eq!(report.verdict, Verdict::Equal);
        prop_assert_eq!(report.m1_over_n(), Rational::from_integer(BigInt::from(a * b)));
    }

    /// Subdivisions of regular graphs are biregular class 1 (or cycles) and
    /// attain equality.
    #[test]
    fn subdivision_of_complete_equality(r in 2usize..9) {
        let g = Graph::complete(r + 1).unwrap().subdivision();
        prop_assert_eq!(compare(&g).unwrap().verdict, Verdict::Equal);
    }

    /// Regular graphs and stars attain equality.
    #[test]
    fn regular_and_star_equality(k in 3usize..30) {
        prop_assert_eq!(compare(&Graph::cycle(k).unwrap()).unwrap().verdict, Verdict::Equal);
        prop_assert_eq!(compare(&Graph::complete(k).unwrap()).unwrap().verdict, Verdict::Equal);
        prop_assert_eq!(compare(&Graph::star(k).unwrap()).unwrap().verdict, Verdict::Equal);
    }

    /// Subdivision transforms (n, m) -> (n + m, 2m), keeps original degrees,
    /// and never joins two new vertices.
    #[test]
    fn subdivision_shape(g in graph_strategy(16)) {
        let n = g.vertex_count();
        let s = g.subdivision();
        prop_assert_eq!(s.vertex_count(), n + g.edge_count());
        prop_assert_eq!(s.edge_count(), 2 * g.edge_count());
        for v in 0..n {
            prop_assert_eq!(s.degree(v), g.degree(v));
        }
        for v in n..s.vertex_count() {
            prop_assert_eq!(s.degree(v), 2);
        }
        for (u, v) in s.edges() {
            prop_assert!(u < n || v < n);
        }
    }
}

/// Inside a good interval, f vanishes on distinct pairs exactly at the
/// tuples the two collision scans report.
#[test]
fn f_zero_census_matches_collision_scans() {
    for p in 0u64..=8 {
        let threshold = good_threshold(p).max(1) as u64;
        for a in [threshold, threshold + 1, threshold + 7] {
            let hi = a + p;
            let mut zeros = Vec::new();
            let mut pairs = Vec::new();
            for x in a..=hi {
                for y in x..=hi {
                    pairs.push((x, y));
                }
            }
            for (s, &(x, y)) in pairs.iter().enumerate() {
                for &(u, v) in &pairs[s + 1..] {
                    if f(x, y, u, v).unwrap().is_zero() {
                        zeros.push((x, y, u, v));
                    }
                }
            }
            let mut expected = find_product_collisions(a, p).tuples;
            expected.extend(find_harmonic_collisions(a, p).tuples);
            expected.sort_unstable();
            expected.dedup();
            zeros.sort_unstable();
            assert_eq!(zeros, expected, "a = {a}, p = {p}");
        }
    }
}

/// The same decomposition identity, exhaustively on small graphs.
#[test]
fn decomposition_identity_exhaustive_n5() {
    let spec = EnumerationSpec {
        min_degree: 1,
        ..EnumerationSpec::all_graphs(5)
    };
    let mut checked = 0u32;
    for g in enumerate(spec).unwrap() {
        let direct = BigInt::from(g.vertex_count()) * m2(&g)
            - BigInt::from(g.edge_count()) * m1(&g);
        assert_eq!(decomposition_sum(&g).unwrap(), direct);
        checked += 1;
    }
    assert!(checked > 100);
}
