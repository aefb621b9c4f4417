//! The four-parameter equality family `G(x, y, z, w)` and the catalog of
//! known equality (and violation) families.
//!
//! `G(x, y, z, w)` chains `x` copies of `K_{2,5}`, one trimmed `K_{2,z}`, a
//! path on `2y` new vertices, and `w` spliced copies of `K_{3,3}` into one
//! connected graph whose degree classes are fully determined by the
//! parameters. Solving for the parameters that zero out `m*M1 - n*M2` gives
//! arbitrarily many connected graphs with maximum degree 5 or more, neither
//! regular nor biregular of class 1, attaining `M1/n = M2/m`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graph::{Graph, GraphError};
use crate::zagreb::Verdict;

/// Parameters of the `G(x, y, z, w)` construction: `x` copies of `K_{2,5}`,
/// a path on `2y` vertices, one `K_{2,z}` block, `w` copies of `K_{3,3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub w: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    ParameterBelowMinimum { name: &'static str, value: u64, min: u64 },
    /// The graph would not fit in addressable memory.
    TooLarge,
    /// The closed-form solve produced something other than the expected
    /// shape; indicates a transcription error, never ignored.
    SolveInconsistent { reason: &'static str },
    /// A solved parameter exceeds the representable range.
    ParamOverflow,
    UnknownFamily { name: String },
    WrongParamCount { family: &'static str, expected: usize, got: usize },
    InvalidCatalogParams { family: &'static str, detail: &'static str },
    Graph(GraphError),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::ParameterBelowMinimum { name, value, min } => {
                write!(f, "parameter {name} = {value} below minimum {min}")
            }
            FamilyError::TooLarge => write!(f, "graph too large to materialize"),
            FamilyError::SolveInconsistent { reason } => {
                write!(f, "parameter solve failed its postcondition: {reason}")
            }
            FamilyError::ParamOverflow => write!(f, "solved parameter exceeds u64"),
            FamilyError::UnknownFamily { name } => write!(f, "unknown family '{name}'"),
            FamilyError::WrongParamCount { family, expected, got } => {
                write!(f, "family {family} takes {expected} parameters, got {got}")
            }
            FamilyError::InvalidCatalogParams { family, detail } => {
                write!(f, "invalid parameters for {family}: {detail}")
            }
            FamilyError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for FamilyError {}

impl From<GraphError> for FamilyError {
    fn from(e: GraphError) -> Self {
        FamilyError::Graph(e)
    }
}

impl FamilyParams {
    /// Requires `x >= 1`, `y >= 1`, `z >= 2`, `w >= 1`. `z = 1` would
    /// degenerate the trimmed `K_{2,z}`: removing both of its block edges
    /// strands the single path-side vertex.
    pub fn new(x: u64, y: u64, z: u64, w: u64) -> Result<Self, FamilyError> {
        let check = |name, value, min| {
            if value < min {
                Err(FamilyError::ParameterBelowMinimum { name, value, min })
            } else {
                Ok(())
            }
        };
        check("x", x, 1)?;
        check("y", y, 1)?;
        check("z", z, 2)?;
        check("w", w, 1)?;
        Ok(FamilyParams { x, y, z, w })
    }

    /// True when `z` lands on one of the other degree values `{2, 3, 5}`,
    /// shrinking the realized degree set below four distinct values.
    pub fn degree_set_collides(&self) -> bool {
        matches!(self.z, 2 | 3 | 5)
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x={}, y={}, z={}, w={})", self.x, self.y, self.z, self.w)
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

/// `n = 7x + 2y + z + 8w + 6`.
pub fn predicted_vertex_count(params: &FamilyParams) -> BigInt {
    big(7) * big(params.x) + big(2) * big(params.y) + big(params.z) + big(8) * big(params.w)
        + big(6)
}

/// `m = 10x + 2y + 2z + 12w + 5`.
pub fn predicted_edge_count(params: &FamilyParams) -> BigInt {
    big(10) * big(params.x)
        + big(2) * big(params.y)
        + big(2) * big(params.z)
        + big(12) * big(params.w)
        + big(5)
}

/// `M1 = 2(35x + 4y + z^2 + 2z + 36w + 13)`.
pub fn predicted_m1(params: &FamilyParams) -> BigInt {
    let z = big(params.z);
    big(2)
        * (big(35) * big(params.x)
            + big(4) * big(params.y)
            + &z * &z
            + big(2) * &z
            + big(36) * big(params.w)
            + big(13))
}

/// `M2 = 100x + 8y + 4z^2 + 108w + 36`.
pub fn predicted_m2(params: &FamilyParams) -> BigInt {
    let z = big(params.z);
    big(100) * big(params.x)
        + big(8) * big(params.y)
        + big(4) * &z * &z
        + big(108) * big(params.w)
        + big(36)
}

/// `m*M1 - n*M2` for the built graph, in closed form:
///
/// ```text
/// -86 - 242x - 28y + 36z - 264w - 36xy + 80xz + 4xw + 16yz - 40yw + 84zw
///     - 8xz^2 - 4yz^2 - 8wz^2 - 6z^2
/// ```
pub fn defect_polynomial(params: &FamilyParams) -> BigInt {
    let (x, y, z, w) = (big(params.x), big(params.y), big(params.z), big(params.w));
    let z2 = &z * &z;
    big(0) - big(86) - big(242) * &x - big(28) * &y + big(36) * &z - big(264) * &w
        - big(36) * &x * &y
        + big(80) * &x * &z
        + big(4) * &x * &w
        + big(16) * &y * &z
        - big(40) * &y * &w
        + big(84) * &z * &w
        - big(8) * &x * &z2
        - big(4) * &y * &z2
        - big(8) * &w * &z2
        - big(6) * &z2
}

/// Vertex tally per degree value, with buckets merged when `z` collides
/// with one of `{2, 3, 5}`.
pub fn predicted_degree_counts(params: &FamilyParams) -> BTreeMap<u64, BigInt> {
    let mut counts: BTreeMap<u64, BigInt> = BTreeMap::new();
    let mut add = |degree: u64, count: BigInt| {
        let entry = counts.entry(degree).or_insert_with(BigInt::zero);
        *entry += count;
    };
    add(5, big(2) * big(params.x));
    add(3, big(8) * big(params.w) + big(2));
    add(2, big(5) * big(params.x) + big(2) * big(params.y) + big(params.z) + big(2));
    add(params.z, big(2));
    counts
}

/// Edge tally per degree class, with buckets merged when `z` collides with
/// one of `{2, 3, 5}`:
///
/// ```text
/// m[z,2] = 2z   m[5,2] = 10x-1   m[3,2] = 3
/// m[2,2] = 2y+1 m[5,3] = 1       m[3,3] = 12w+1
/// ```
pub fn predicted_edge_class_counts(params: &FamilyParams) -> BTreeMap<(u64, u64), BigInt> {
    let mut counts: BTreeMap<(u64, u64), BigInt> = BTreeMap::new();
    let mut add = |i: u64, j: u64, count: BigInt| {
        let key = (i.min(j), i.max(j));
        let entry = counts.entry(key).or_insert_with(BigInt::zero);
        *entry += count;
    };
    add(params.z, 2, big(2) * big(params.z));
    add(5, 2, big(10) * big(params.x) - big(1));
    add(3, 2, big(3));
    add(2, 2, big(2) * big(params.y) + big(1));
    add(5, 3, big(1));
    add(3, 3, big(12) * big(params.w) + big(1));
    counts
}

fn to_usize(v: &BigInt) -> Result<usize, FamilyError> {
    use num_traits::ToPrimitive;
    v.to_usize().ok_or(FamilyError::TooLarge)
}

/// Builds `G(x, y, z, w)`:
///
/// * the `x` copies of `K_{2,5}` are chained by swapping, between
///   consecutive copies, the edges `u2-v5` and `u1'-v1'` for the cross edges
///   `u2-v1'` and `u1'-v5`;
/// * `K_{2,z}` loses the edges `t2-p1` and `t1-pz`; a path on `2y` new
///   vertices runs from the last copy's `v5` to `p1`, and one new degree-2
///   vertex joins the last copy's `u2` to `t1`;
/// * two adjacent vertices `t` (neighbors `t2`, `s`) and `s` (neighbors
///   `pz`, `t`, first splice vertex) bridge to the `K_{3,3}` chain;
/// * each `K_{3,3}` copy loses the edges `a1-b1` and `a3-b3` and gains two
///   degree-3 splice vertices, one between `a1` and `a3`, one between `b1`
///   and `b3`; splice vertices of consecutive copies are joined, and a final
///   vertex `q` is adjacent to the last splice vertex and to `u1`, `v1` of
///   the first `K_{2,5}` copy (whose internal `u1-v1` edge is dropped).
///
/// The resulting degree multiset and per-class edge counts are asserted
/// against the closed forms before the graph is returned; any mismatch is a
/// construction bug and panics.
pub fn build_gxyzw(params: &FamilyParams) -> Result<Graph, FamilyError> {
    FamilyParams::new(params.x, params.y, params.z, params.w)?;
    let n_big = predicted_vertex_count(params);
    let n = to_usize(&n_big)?;
    let m = to_usize(&predicted_edge_count(params))?;
    let x = to_usize(&big(params.x))?;
    let y = to_usize(&big(params.y))?;
    let z = to_usize(&big(params.z))?;
    let w = to_usize(&big(params.w))?;

    // vertex layout, in construction order
    let u1 = |i: usize| 7 * i;
    let u2 = |i: usize| 7 * i + 1;
    let v = |i: usize, b: usize| 7 * i + 2 + b; // b in 0..5
    let block = 7 * x;
    let t1 = block;
    let t2 = block + 1;
    let pv = |k: usize| block + 2 + k; // k in 0..z
    let path0 = block + 2 + z;
    let path = |i: usize| path0 + i; // i in 0..2y
    let linker = path0 + 2 * y; // the degree-2 vertex joining u2^x to t1
    let t = linker + 1;
    let s = linker + 2;
    let k33 = |i: usize| linker + 3 + 8 * i;
    let a = |i: usize, r: usize| k33(i) + r; // r in 0..3
    let b = |i: usize, r: usize| k33(i) + 3 + r; // r in 0..3
    let splice_a = |i: usize| k33(i) + 6;
    let splice_b = |i: usize| k33(i) + 7;
    let q = linker + 3 + 8 * w;
    debug_assert_eq!(q + 1, n);

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);

    // chained K_{2,5} copies; u1-v1 and u2-v5 are dropped in every copy and
    // replaced by cross links (interior) or the boundary attachments below
    for i in 0..x {
        for bidx in 0..5 {
            if bidx != 0 {
                edges.push((u1(i), v(i, bidx)));
            }
            if bidx != 4 {
                edges.push((u2(i), v(i, bidx)));
            }
        }
        if i + 1 < x {
            edges.push((u2(i), v(i + 1, 0)));
            edges.push((u1(i + 1), v(i, 4)));
        }
    }

    // trimmed K_{2,z}: t2-p1 and t1-pz removed
    for k in 0..z {
        if k != z - 1 {
            edges.push((t1, pv(k)));
        }
        if k != 0 {
            edges.push((t2, pv(k)));
        }
    }

    // path on 2y vertices from v5 of the last copy to p1
    edges.push((v(x - 1, 4), path(0)));
    for i in 0..2 * y - 1 {
        edges.push((path(i), path(i + 1)));
    }
    edges.push((path(2 * y - 1), pv(0)));

    // degree-2 linker from u2 of the last copy to t1
    edges.push((u2(x - 1), linker));
    edges.push((linker, t1));

    // t and s
    edges.push((t2, t));
    edges.push((t, s));
    edges.push((s, pv(z - 1)));

    // spliced K_{3,3} copies
    for i in 0..w {
        for ar in 0..3 {
            for br in 0..3 {
                if (ar, br) == (0, 0) || (ar, br) == (2, 2) {
                    continue; // a1-b1 and a3-b3 are replaced by the splices
                }
                edges.push((a(i, ar), b(i, br)));
            }
        }
        edges.push((splice_a(i), a(i, 0)));
        edges.push((splice_a(i), a(i, 2)));
        edges.push((splice_b(i), b(i, 0)));
        edges.push((splice_b(i), b(i, 2)));
        if i + 1 < w {
            edges.push((splice_b(i), splice_a(i + 1)));
        }
    }
    edges.push((s, splice_a(0)));

    // the closing vertex q
    edges.push((q, splice_b(w - 1)));
    edges.push((q, u1(0)));
    edges.push((q, v(0, 0)));

    let graph = Graph::from_edges_unchecked(n, &edges);

    // hard postconditions: the closed-form degree and edge-class tables are
    // the ground truth for construction correctness
    assert_eq!(graph.vertex_count(), n, "G(x,y,z,w) vertex count");
    assert_eq!(BigInt::from(graph.edge_count()), predicted_edge_count(params));
    let degree_counts: BTreeMap<u64, BigInt> = graph
        .degree_counts()
        .into_iter()
        .map(|(d, c)| (d as u64, BigInt::from(c)))
        .collect();
    assert_eq!(degree_counts, predicted_degree_counts(params), "G(x,y,z,w) degree multiset");
    let class_counts: BTreeMap<(u64, u64), BigInt> = graph
        .edge_class_counts()
        .iter()
        .map(|((i, j), c)| ((i as u64, j as u64), BigInt::from(c)))
        .collect();
    assert_eq!(
        class_counts,
        predicted_edge_class_counts(params),
        "G(x,y,z,w) edge-class table"
    );
    assert!(graph.is_connected(), "G(x,y,z,w) must be connected");

    Ok(graph)
}

/// Solves for the `(x, w)` making `G(x, y, z, w)` attain the equality, given
/// `y >= 1` and `z >= 2`:
///
/// ```text
/// w = 61 + 9y - 20z + 2z^2
/// x = (132w - 42zw + 4z^2*w + 14y - 8yz + 20yw + 2yz^2 + 3z^2 - 18z + 43)
///     / (-121 - 18y + 2w + 40z - 4z^2)
/// ```
///
/// The denominator must come out exactly 1 and the numerator positive; the
/// solved parameters are re-checked against the defect polynomial before
/// being returned. Any failure of those checks is reported, never ignored.
pub fn solve_params(y: u64, z: u64) -> Result<FamilyParams, FamilyError> {
    if y < 1 {
        return Err(FamilyError::ParameterBelowMinimum { name: "y", value: y, min: 1 });
    }
    if z < 2 {
        return Err(FamilyError::ParameterBelowMinimum { name: "z", value: z, min: 2 });
    }
    let yb = big(y);
    let zb = big(z);
    let z2 = &zb * &zb;

    let w = big(61) + big(9) * &yb - big(20) * &zb + big(2) * &z2;
    if !w.is_positive() {
        return Err(FamilyError::SolveInconsistent { reason: "w not positive" });
    }

    let denominator = BigInt::from(-121) - big(18) * &yb + big(2) * &w + big(40) * &zb
        - big(4) * &z2;
    if !denominator.is_one() {
        return Err(FamilyError::SolveInconsistent { reason: "denominator not 1" });
    }

    let numerator = big(132) * &w - big(42) * &zb * &w + big(4) * &z2 * &w + big(14) * &yb
        - big(8) * &yb * &zb
        + big(20) * &yb * &w
        + big(2) * &yb * &z2
        + big(3) * &z2
        - big(18) * &zb
        + big(43);
    if !numerator.is_positive() {
        return Err(FamilyError::SolveInconsistent { reason: "numerator not positive" });
    }

    use num_traits::ToPrimitive;
    let x = numerator.to_u64().ok_or(FamilyError::ParamOverflow)?;
    let w = w.to_u64().ok_or(FamilyError::ParamOverflow)?;
    let params = FamilyParams::new(x, y, z, w)?;

    if !defect_polynomial(&params).is_zero() {
        return Err(FamilyError::SolveInconsistent { reason: "defect polynomial nonzero" });
    }
    Ok(params)
}

/// The catalog of families with a known comparison verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogFamily {
    /// Subdivision of an `r`-regular graph on `base` vertices (a circulant).
    SubdivisionOfRegular { degree: u64, base: u64 },
    /// `count` disjoint copies of `K_p`.
    EqualCompleteUnion { order: u64, count: u64 },
    /// `K_3` together with a `q`-cycle.
    Complete3PlusCycle { cycle: u64 },
    /// Two disjoint paths; only `(2, 2)` and `(3, 3)` attain the equality.
    TwoPaths { p: u64, q: u64 },
    /// `C_p` together with `K_{2,2}`.
    CyclePlusK22 { cycle: u64 },
    /// `C_p` together with the star `K_{1,4}`.
    CyclePlusStar4 { cycle: u64 },
    /// `C_p` together with `K_{1,b}`, `b >= 5`: the violation family.
    CyclePlusStarB { cycle: u64, leaves: u64 },
}

impl CatalogFamily {
    pub fn name(&self) -> &'static str {
        match self {
            CatalogFamily::SubdivisionOfRegular { .. } => "subdivision-of-regular",
            CatalogFamily::EqualCompleteUnion { .. } => "equal-complete-union",
            CatalogFamily::Complete3PlusCycle { .. } => "complete3-plus-cycle",
            CatalogFamily::TwoPaths { .. } => "two-paths",
            CatalogFamily::CyclePlusK22 { .. } => "cycle-plus-k22",
            CatalogFamily::CyclePlusStar4 { .. } => "cycle-plus-star4",
            CatalogFamily::CyclePlusStarB { .. } => "cycle-plus-star-b",
        }
    }

    /// Parses a family name plus its integer parameters.
    pub fn parse(name: &str, params: &[u64]) -> Result<Self, FamilyError> {
        let expect = |family: &'static str, count: usize| {
            if params.len() == count {
                Ok(())
            } else {
                Err(FamilyError::WrongParamCount { family, expected: count, got: params.len() })
            }
        };
        let lowered = name.to_ascii_lowercase();
        let family = match lowered.as_str() {
            "subdivision-of-regular" => {
                expect("subdivision-of-regular", 2)?;
                CatalogFamily::SubdivisionOfRegular { degree: params[0], base: params[1] }
            }
            "equal-complete-union" => {
                expect("equal-complete-union", 2)?;
                CatalogFamily::EqualCompleteUnion { order: params[0], count: params[1] }
            }
            "complete3-plus-cycle" => {
                expect("complete3-plus-cycle", 1)?;
                CatalogFamily::Complete3PlusCycle { cycle: params[0] }
            }
            "two-paths" => {
                expect("two-paths", 2)?;
                CatalogFamily::TwoPaths { p: params[0], q: params[1] }
            }
            "cycle-plus-k22" => {
                expect("cycle-plus-k22", 1)?;
                CatalogFamily::CyclePlusK22 { cycle: params[0] }
            }
            "cycle-plus-star4" => {
                expect("cycle-plus-star4", 1)?;
                CatalogFamily::CyclePlusStar4 { cycle: params[0] }
            }
            "cycle-plus-star-b" => {
                expect("cycle-plus-star-b", 2)?;
                CatalogFamily::CyclePlusStarB { cycle: params[0], leaves: params[1] }
            }
            _ => return Err(FamilyError::UnknownFamily { name: String::from(name) }),
        };
        Ok(family)
    }

    /// The verdict the comparison must produce for this entry.
    pub fn expected_verdict(&self) -> Verdict {
        match self {
            CatalogFamily::CyclePlusStarB { .. } => Verdict::StrictlyGreater,
            _ => Verdict::Equal,
        }
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            CatalogFamily::SubdivisionOfRegular { degree, base } => {
                let g = circulant(cast(base)?, cast(degree)?)?;
                Ok(g.subdivision())
            }
            CatalogFamily::EqualCompleteUnion { order, count } => {
                if order < 2 {
                    return Err(FamilyError::InvalidCatalogParams {
                        family: "equal-complete-union",
                        detail: "complete graphs need order >= 2",
                    });
                }
                if count < 1 {
                    return Err(FamilyError::InvalidCatalogParams {
                        family: "equal-complete-union",
                        detail: "need at least one copy",
                    });
                }
                let part = Graph::complete(cast(order)?)?;
                let mut g = part.clone();
                for _ in 1..count {
                    g = g.disjoint_union(&part);
                }
                Ok(g)
            }
            CatalogFamily::Complete3PlusCycle { cycle } => {
                Ok(Graph::complete(3)?.disjoint_union(&Graph::cycle(cast(cycle)?)?))
            }
            CatalogFamily::TwoPaths { p, q } => {
                if !matches!((p, q), (2, 2) | (3, 3)) {
                    return Err(FamilyError::InvalidCatalogParams {
                        family: "two-paths",
                        detail: "only (2,2) and (3,3) attain the equality",
                    });
                }
                Ok(Graph::path(cast(p)?)?.disjoint_union(&Graph::path(cast(q)?)?))
            }
            CatalogFamily::CyclePlusK22 { cycle } => {
                Ok(Graph::cycle(cast(cycle)?)?.disjoint_union(&Graph::complete_bipartite(2, 2)?))
            }
            CatalogFamily::CyclePlusStar4 { cycle } => {
                Ok(Graph::cycle(cast(cycle)?)?.disjoint_union(&Graph::star(4)?))
            }
            CatalogFamily::CyclePlusStarB { cycle, leaves } => {
                if leaves < 5 {
                    return Err(FamilyError::InvalidCatalogParams {
                        family: "cycle-plus-star-b",
                        detail: "b >= 5 is the violation regime; use cycle-plus-star4 for b = 4",
                    });
                }
                Ok(Graph::cycle(cast(cycle)?)?.disjoint_union(&Graph::star(cast(leaves)?)?))
            }
        }
    }
}

fn cast(v: u64) -> Result<usize, FamilyError> {
    usize::try_from(v).map_err(|_| FamilyError::TooLarge)
}

/// Connected `degree`-regular circulant graph on `n` vertices: jumps
/// `1..=degree/2`, plus the antipodal jump when `degree` is odd (which
/// forces `n` even).
fn circulant(n: usize, degree: usize) -> Result<Graph, FamilyError> {
    if degree < 1 {
        return Err(FamilyError::ParameterBelowMinimum {
            name: "degree",
            value: degree as u64,
            min: 1,
        });
    }
    if n <= degree {
        return Err(FamilyError::InvalidCatalogParams {
            family: "subdivision-of-regular",
            detail: "base order must exceed the degree",
        });
    }
    if degree % 2 == 1 && n % 2 == 1 {
        return Err(FamilyError::InvalidCatalogParams {
            family: "subdivision-of-regular",
            detail: "odd degree needs an even base order",
        });
    }
    let mut edges = Vec::with_capacity(n * degree / 2);
    for jump in 1..=degree / 2 {
        for i in 0..n {
            edges.push((i, (i + jump) % n));
        }
    }
    if degree % 2 == 1 {
        for i in 0..n / 2 {
            edges.push((i, i + n / 2));
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}
