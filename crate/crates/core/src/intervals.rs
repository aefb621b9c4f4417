//! Degree-interval analysis.
//!
//! An integer interval `[a, a+p]` is *good* when every graph whose degrees
//! lie inside it satisfies `M1/n <= M2/m`; the closed-form test is
//! `a >= p(p-1)/2`, with `[1, 4]` as the lone exception. Inside a good
//! interval the pairwise term `f(i,j,k,l)` is nonnegative and vanishes only
//! at *collisions*: distinct degree pairs with equal products or with equal
//! `(x+y)/xy`. The scans here list those collisions exhaustively, and
//! [`classify_equality_structure`] turns the resulting case analysis into a
//! structural test of whether a graph attains `M1/n = M2/m`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::graph::Graph;
use crate::zagreb::f_sign;

/// Integer interval `[a, a+p]` of vertex degrees, `a >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntervalSpec {
    a: u64,
    p: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalError {
    ZeroLowerEndpoint,
    NotGood { a: u64, p: u64 },
    DegreeOutsideInterval { vertex: usize, degree: usize },
    IsolatedVertex(usize),
}

impl fmt::Display for IntervalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalError::ZeroLowerEndpoint => write!(f, "interval lower endpoint must be >= 1"),
            IntervalError::NotGood { a, p } => {
                write!(f, "interval [{a}, {}] is not good", a + p)
            }
            IntervalError::DegreeOutsideInterval { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree} outside the interval")
            }
            IntervalError::IsolatedVertex(v) => write!(f, "isolated vertex {v}"),
        }
    }
}

impl core::error::Error for IntervalError {}

impl IntervalSpec {
    pub fn new(a: u64, p: u64) -> Result<Self, IntervalError> {
        if a == 0 {
            return Err(IntervalError::ZeroLowerEndpoint);
        }
        Ok(IntervalSpec { a, p })
    }

    pub fn lower(&self) -> u64 {
        self.a
    }

    /// Length `p`; the interval is `[a, a+p]`.
    pub fn length(&self) -> u64 {
        self.p
    }

    pub fn upper(&self) -> u64 {
        self.a + self.p
    }

    pub fn contains(&self, degree: u64) -> bool {
        self.a <= degree && degree <= self.upper()
    }

    pub fn is_good(&self) -> bool {
        is_good_interval(self.a, self.p)
    }
}

impl fmt::Display for IntervalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.upper())
    }
}

/// `p(p-1)/2`, the smallest good lower endpoint for length `p`.
pub fn good_threshold(p: u64) -> u128 {
    let p = p as u128;
    p * p.saturating_sub(1) / 2
}

/// True iff `[a, a+p]` is good: `a >= p(p-1)/2`, or the interval is `[1, 4]`.
pub fn is_good_interval(a: u64, p: u64) -> bool {
    if p == 0 {
        return true;
    }
    (a as u128) >= good_threshold(p) || (a, p) == (1, 3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CollisionKind {
    /// Distinct pairs with equal products: `x*y = u*v`.
    Product,
    /// Distinct pairs with equal `(x+y)/(x*y)`.
    Harmonic,
}

/// Exhaustive list of colliding pair-of-pairs from one interval.
///
/// Tuples `(x, y, u, v)` satisfy `x <= y`, `u <= v`, and `(x, y)` strictly
/// before `(u, v)` lexicographically, so each collision is reported once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionReport {
    pub kind: CollisionKind,
    pub tuples: Vec<(u64, u64, u64, u64)>,
}

fn collisions_by_key<K: Ord>(
    a: u64,
    p: u64,
    kind: CollisionKind,
    key: impl Fn(u64, u64) -> K,
) -> CollisionReport {
    assert!(a >= 1, "interval lower endpoint must be >= 1");
    let hi = a.checked_add(p).expect("interval endpoint overflow");
    let mut groups: BTreeMap<K, Vec<(u64, u64)>> = BTreeMap::new();
    for x in a..=hi {
        for y in x..=hi {
            groups.entry(key(x, y)).or_default().push((x, y));
        }
    }
    let mut tuples = Vec::new();
    for pairs in groups.values() {
        for (idx, &(x, y)) in pairs.iter().enumerate() {
            for &(u, v) in &pairs[idx + 1..] {
                tuples.push((x, y, u, v));
            }
        }
    }
    tuples.sort_unstable();
    CollisionReport { kind, tuples }
}

/// All distinct pairs in `[a, a+p]` with equal products. Empty whenever
/// `a >= p(p-1)/2`.
pub fn find_product_collisions(a: u64, p: u64) -> CollisionReport {
    collisions_by_key(a, p, CollisionKind::Product, |x, y| x as u128 * y as u128)
}

/// `(u+v)*x*y - (x+y)*u*v`; zero iff `(x+y)/xy = (u+v)/uv`.
pub fn harmonic_discriminant(x: u64, y: u64, u: u64, v: u64) -> BigInt {
    let (x, y, u, v) = (BigInt::from(x), BigInt::from(y), BigInt::from(u), BigInt::from(v));
    (&u + &v) * &x * &y - (&x + &y) * u * v
}

/// All distinct pairs in `[a, a+p]` with equal `(x+y)/xy`.
///
/// For `a >= p(p-1)/2` the scan reproduces the known answer: exactly one
/// tuple `(a, a+p, (p^2-1)/2, (p^2-1)/2)` when `p` is odd and `a` sits at
/// the threshold, and none otherwise.
pub fn find_harmonic_collisions(a: u64, p: u64) -> CollisionReport {
    collisions_by_key(a, p, CollisionKind::Harmonic, |x, y| {
        // reduced (x + y) / xy as the grouping key
        let sum = x as u128 + y as u128;
        let product = x as u128 * y as u128;
        let g = sum.gcd(&product);
        (sum / g, product / g)
    })
}

/// Searches `S^4` in lexicographic order for the first quadruple with
/// `f(i,j,k,l) < 0`. `None` certifies that every `f` over `S` is
/// nonnegative, the sufficient condition for `S` to be good.
pub fn scan_f_sign(degrees: &[u64]) -> Option<(u64, u64, u64, u64)> {
    assert!(!degrees.is_empty(), "degree set must be nonempty");
    assert!(degrees.iter().all(|&d| d >= 1), "degrees must be >= 1");
    let mut set: Vec<u64> = degrees.to_vec();
    set.sort_unstable();
    set.dedup();
    for &i in &set {
        for &j in &set {
            for &k in &set {
                for &l in &set {
                    if f_sign(i, j, k, l).expect("degrees checked nonzero") < 0 {
                        return Some((i, j, k, l));
                    }
                }
            }
        }
    }
    None
}

/// Verifies, for `x = p(p-1)/2` and `y = x + p`, that every `(u, v)` with
/// `x <= u <= v <= y` other than `(x, y)` itself satisfies
/// `u*v > x*y  <=>  u + v >= x + y`. Returns a violating `(u, v)` if any.
pub fn check_sum_product_equivalence(p: u64) -> Option<(u64, u64)> {
    assert!(p >= 1);
    let x = (p * (p - 1)) / 2;
    let y = x + p;
    let xy = x as u128 * y as u128;
    for u in x..=y {
        for v in u..=y {
            if (u, v) == (x, y) {
                continue;
            }
            let product_bigger = (u as u128 * v as u128) > xy;
            let sum_at_least = u + v >= x + y;
            if product_bigger != sum_at_least {
                return Some((u, v));
            }
        }
    }
    None
}

/// Case analysis for graphs attaining `M1/n = M2/m` with degrees in a good
/// interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqualityCase {
    /// All components `k`-regular for one common `k`.
    Regular,
    /// Exactly two degrees overall and every edge joins them.
    BiregularClass1,
    /// `p` odd: `((p^2-1)/2)`-regular components together with
    /// class-1 biregular components on degrees `p(p-1)/2` and `p(p+1)/2`.
    MixedRegularBiregular,
    /// Interval `[1, 4]`: disjoint union of `K_{1,4}` stars and cycles.
    StarsAndCycles,
    NotEquality,
}

impl fmt::Display for EqualityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EqualityCase::Regular => "regular",
            EqualityCase::BiregularClass1 => "biregular-class1",
            EqualityCase::MixedRegularBiregular => "mixed-regular-biregular",
            EqualityCase::StarsAndCycles => "stars-and-cycles",
            EqualityCase::NotEquality => "not-equality",
        })
    }
}

/// Classification of one connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentClass {
    Regular { degree: usize },
    BiregularClass1 { low: usize, high: usize },
    Other { degrees: Vec<usize> },
}

impl fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentClass::Regular { degree } => write!(f, "regular({degree})"),
            ComponentClass::BiregularClass1 { low, high } => {
                write!(f, "biregular-class1({low},{high})")
            }
            ComponentClass::Other { degrees } => {
                write!(f, "other(")?;
                for (i, d) in degrees.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{d}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Structural verdict plus the per-component evidence it rests on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityStructure {
    pub verdict: EqualityCase,
    pub components: Vec<ComponentClass>,
}

fn classify_component(g: &Graph, component: &[usize]) -> ComponentClass {
    let mut degrees: Vec<usize> = component.iter().map(|&v| g.degree(v)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    match degrees.len() {
        1 => ComponentClass::Regular { degree: degrees[0] },
        2 => {
            let diagonal = component.iter().any(|&u| {
                g.neighbors(u)
                    .iter()
                    .any(|&v| u < v && g.degree(u) == g.degree(v))
            });
            if diagonal {
                ComponentClass::Other { degrees }
            } else {
                ComponentClass::BiregularClass1 { low: degrees[0], high: degrees[1] }
            }
        }
        _ => ComponentClass::Other { degrees },
    }
}

/// Decides whether `G` (degrees inside the good `interval`, no isolated
/// vertices) has one of the structures that force `M1/n = M2/m`:
///
/// 1. every component `k`-regular for the same `k`;
/// 2. biregular of class 1 as a whole;
/// 3. for odd `p`, a mix of `((p^2-1)/2)`-regular components and class-1
///    biregular components on degrees `p(p-1)/2`, `p(p+1)/2`, both present;
/// 4. for `[1, 4]`, a mix of `K_{1,4}` stars and cycles, both present.
///
/// Overlapping shapes resolve to the earliest case in this order; anything
/// else is `NotEquality`.
pub fn classify_equality_structure(
    g: &Graph,
    interval: IntervalSpec,
) -> Result<EqualityStructure, IntervalError> {
    if !interval.is_good() {
        return Err(IntervalError::NotGood { a: interval.a, p: interval.p });
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(IntervalError::IsolatedVertex(v));
    }
    for v in 0..g.vertex_count() {
        let d = g.degree(v) as u64;
        if !interval.contains(d) {
            return Err(IntervalError::DegreeOutsideInterval { vertex: v, degree: g.degree(v) });
        }
    }

    let components: Vec<ComponentClass> = g
        .connected_components()
        .iter()
        .map(|c| classify_component(g, c))
        .collect();

    let verdict = decide_case(g, interval, &components);
    Ok(EqualityStructure { verdict, components })
}

fn decide_case(g: &Graph, interval: IntervalSpec, components: &[ComponentClass]) -> EqualityCase {
    // (1) one common degree everywhere
    let all_regular_same = match components.first() {
        Some(ComponentClass::Regular { degree }) => components
            .iter()
            .all(|c| matches!(c, ComponentClass::Regular { degree: d } if d == degree)),
        _ => false,
    };
    if all_regular_same {
        return EqualityCase::Regular;
    }

    // (2) two degrees overall, every edge mixed
    if g.degree_set().len() == 2 && !g.has_equal_degree_edge() {
        return EqualityCase::BiregularClass1;
    }

    // (3) threshold interval of odd length
    let p = interval.length() as u128;
    if p % 2 == 1 {
        let lo = p * (p - 1) / 2;
        let hi = p * (p + 1) / 2;
        let r = (p * p - 1) / 2;
        let mut regulars = 0usize;
        let mut biregulars = 0usize;
        let mut fits = true;
        for c in components {
            match c {
                ComponentClass::Regular { degree } if *degree as u128 == r => regulars += 1,
                ComponentClass::BiregularClass1 { low, high }
                    if *low as u128 == lo && *high as u128 == hi =>
                {
                    biregulars += 1
                }
                _ => {
                    fits = false;
                    break;
                }
            }
        }
        if fits && regulars > 0 && biregulars > 0 {
            return EqualityCase::MixedRegularBiregular;
        }
    }

    // (4) the [1, 4] exception: K_{1,4} stars and cycles, both present
    if (interval.lower(), interval.length()) == (1, 3) {
        let mut stars = 0usize;
        let mut cycles = 0usize;
        let mut fits = true;
        for c in components {
            match c {
                ComponentClass::Regular { degree: 2 } => cycles += 1,
                ComponentClass::BiregularClass1 { low: 1, high: 4 } => stars += 1,
                _ => {
                    fits = false;
                    break;
                }
            }
        }
        if fits && stars > 0 && cycles > 0 {
            return EqualityCase::StarsAndCycles;
        }
    }

    EqualityCase::NotEquality
}
