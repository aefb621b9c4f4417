//! Exhaustive enumeration of small labeled graphs, used as the ground-truth
//! oracle for the equality characterizations.
//!
//! Graphs on `n <= 8` vertices are identified with bitmasks over the
//! `n(n-1)/2` vertex pairs in column-major order: pair `(i, j)`, `i < j`,
//! sits at bit `j(j-1)/2 + i`. The stream walks the mask space in ascending
//! numeric order as a DFS over bit decisions, pruning on the degree bounds,
//! and checks connectivity at the leaves.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::intervals::{classify_equality_structure, EqualityCase, IntervalSpec};
use crate::zagreb::{compare, Verdict};

/// Enumeration is exhaustive over labeled graphs, so the cap stays at desk
/// scale: 2^28 masks at n = 8.
pub const MAX_VERTICES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dedup {
    /// Every labeled graph, each exactly once.
    None,
    /// One representative per isomorphism class: the first labeled graph
    /// whose canonical mask has not been seen.
    CanonicalForm,
}

/// What to enumerate: exact vertex count, inclusive degree bounds, optional
/// connectivity filter, optional isomorphism dedup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected_only: bool,
    pub dedup: Dedup,
}

impl EnumerationSpec {
    /// All labeled graphs on `n` vertices, no filters.
    pub fn all_graphs(n: usize) -> Self {
        EnumerationSpec {
            n,
            min_degree: 0,
            max_degree: n.saturating_sub(1),
            connected_only: false,
            dedup: Dedup::None,
        }
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        if self.n < 1 || self.n > MAX_VERTICES {
            return Err(EnumError::VertexCountOutOfRange { n: self.n, max: MAX_VERTICES });
        }
        if self.min_degree > self.max_degree || self.max_degree > self.n - 1 {
            return Err(EnumError::InvalidDegreeBounds {
                min: self.min_degree,
                max: self.max_degree,
                n: self.n,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumError {
    VertexCountOutOfRange { n: usize, max: usize },
    InvalidDegreeBounds { min: usize, max: usize, n: usize },
    /// Surveys compare `M1/n` with `M2/m`, which needs every degree >= 1.
    MinDegreeRequired,
    IntervalNotGood { a: u64, p: u64 },
    /// Degree bounds must lie inside the survey interval.
    IntervalMismatch,
    PrefixTooLong { len: u32, pairs: usize },
}

impl fmt::Display for EnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumError::VertexCountOutOfRange { n, max } => {
                write!(f, "vertex count {n} outside 1..={max}")
            }
            EnumError::InvalidDegreeBounds { min, max, n } => {
                write!(f, "degree bounds {min}..={max} invalid for n = {n}")
            }
            EnumError::MinDegreeRequired => write!(f, "surveys need min_degree >= 1"),
            EnumError::IntervalNotGood { a, p } => {
                write!(f, "survey interval [{a}, {}] is not good", a + p)
            }
            EnumError::IntervalMismatch => {
                write!(f, "degree bounds not contained in the survey interval")
            }
            EnumError::PrefixTooLong { len, pairs } => {
                write!(f, "prefix of {len} bits exceeds the {pairs} pair decisions")
            }
        }
    }
}

impl core::error::Error for EnumError {}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(pair_count(n));
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Materializes the graph encoded by a pair bitmask.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = pair_list(n);
    debug_assert!(mask < (1u64 << pairs.len()) || pairs.len() >= 64);
    let mut edges = Vec::with_capacity(mask.count_ones() as usize);
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        if mask >> idx & 1 == 1 {
            edges.push((i, j));
        }
    }
    Graph::from_edges_unchecked(n, &edges)
}

/// The pair bitmask of a graph with at most [`MAX_VERTICES`] vertices.
pub fn graph_mask(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= MAX_VERTICES, "masks only defined up to n = {MAX_VERTICES}");
    let mut mask = 0u64;
    for (idx, (i, j)) in pair_list(n).into_iter().enumerate() {
        if g.has_edge(i, j) {
            mask |= 1 << idx;
        }
    }
    mask
}

fn adjacency_rows(n: usize, mask: u64) -> [u8; MAX_VERTICES] {
    let pairs = pair_list(n);
    let mut rows = [0u8; MAX_VERTICES];
    let mut bits = mask;
    while bits != 0 {
        let idx = bits.trailing_zeros() as usize;
        let (i, j) = pairs[idx];
        rows[i] |= 1 << j;
        rows[j] |= 1 << i;
        bits &= bits - 1;
    }
    rows
}

fn mask_connected(n: usize, mask: u64) -> bool {
    if n <= 1 {
        return true;
    }
    let rows = adjacency_rows(n, mask);
    let full: u8 = if n == 8 { 0xFF } else { (1u8 << n) - 1 };
    let mut reached: u8 = 1;
    loop {
        let mut next = reached;
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            next |= rows[v];
            frontier &= frontier - 1;
        }
        if next == reached {
            return reached == full;
        }
        reached = next;
    }
}

/// The lexicographically minimal pair bitmask over all vertex relabelings:
/// equal canonical masks mean isomorphic graphs. Only defined for
/// `n <= 8`.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.vertex_count();
    canonical_mask_of(n, graph_mask(g))
}

fn canonical_mask_of(n: usize, mask: u64) -> u64 {
    assert!(n <= MAX_VERTICES);
    let rows = adjacency_rows(n, mask);
    let mut search = CanonSearch {
        n,
        rows,
        best: Vec::new(),
        have_best: false,
        perm: Vec::with_capacity(n),
        used: [false; MAX_VERTICES],
        current: Vec::with_capacity(pair_count(n)),
    };
    search.dfs();
    let mut canon = 0u64;
    for (idx, &bit) in search.best.iter().enumerate() {
        if bit == 1 {
            canon |= 1 << idx;
        }
    }
    canon
}

/// Branch-and-bound over partial relabelings: placing vertex `k` fixes the
/// bits of column `k`, so a prefix already larger than the best is pruned.
struct CanonSearch {
    n: usize,
    rows: [u8; MAX_VERTICES],
    best: Vec<u8>,
    have_best: bool,
    perm: Vec<usize>,
    used: [bool; MAX_VERTICES],
    current: Vec<u8>,
}

impl CanonSearch {
    fn dfs(&mut self) {
        let k = self.perm.len();
        if k == self.n {
            if !self.have_best || self.current < self.best {
                self.best = self.current.clone();
                self.have_best = true;
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let start = self.current.len();
            for i in 0..k {
                self.current.push((self.rows[self.perm[i]] >> v) & 1);
            }
            let viable = !self.have_best
                || self.current[..] <= self.best[..self.current.len()];
            if viable {
                self.used[v] = true;
                self.perm.push(v);
                self.dfs();
                self.perm.pop();
                self.used[v] = false;
            }
            self.current.truncate(start);
        }
    }
}

/// Iterator over every labeled graph matching a spec, in ascending mask
/// order. Two runs of the same spec produce identical streams.
pub struct GraphStream {
    spec: EnumerationSpec,
    pairs: Vec<(usize, usize)>,
    p: usize,
    fixed_depths: usize,
    depth: usize,
    choice: Vec<u8>,
    degrees: Vec<usize>,
    mask: u64,
    /// `incident_below[idx][v]`: pairs with index `< idx` touching `v`,
    /// i.e. the undecided slots still able to raise `v`'s degree.
    incident_below: Vec<Vec<usize>>,
    seen: BTreeSet<u64>,
    exhausted: bool,
}

impl GraphStream {
    pub fn new(spec: EnumerationSpec) -> Result<Self, EnumError> {
        Self::with_prefix(spec, 0, 0)
    }

    /// Stream restricted to masks whose top `prefix_len` bits equal
    /// `prefix`. Streams over all prefixes of one length partition the full
    /// stream, in order; this is the hook for parallel drivers.
    ///
    /// Canonical-form dedup is only valid on an unrestricted stream: each
    /// restricted stream deduplicates independently.
    pub fn with_prefix(spec: EnumerationSpec, prefix: u64, prefix_len: u32) -> Result<Self, EnumError> {
        spec.validate()?;
        let pairs = pair_list(spec.n);
        let p = pairs.len();
        if prefix_len as usize > p {
            return Err(EnumError::PrefixTooLong { len: prefix_len, pairs: p });
        }
        let mut incident_below = vec![vec![0usize; spec.n]; p + 1];
        for idx in 0..p {
            let (i, j) = pairs[idx];
            let prev = incident_below[idx].clone();
            incident_below[idx + 1] = prev;
            incident_below[idx + 1][i] += 1;
            incident_below[idx + 1][j] += 1;
        }
        let mut stream = GraphStream {
            spec,
            pairs,
            p,
            fixed_depths: prefix_len as usize,
            depth: 0,
            choice: vec![0; p.max(1)],
            degrees: vec![0; spec.n],
            mask: 0,
            incident_below,
            seen: BTreeSet::new(),
            exhausted: false,
        };
        for t in 0..prefix_len {
            let branch = ((prefix >> (prefix_len - 1 - t)) & 1) as u8;
            stream.choice[stream.depth] = branch + 1;
            if !stream.try_branch(branch) {
                stream.exhausted = true;
                break;
            }
        }
        Ok(stream)
    }

    /// Applies one decision at the current depth; on success the cursor
    /// advances. Fails when the branch violates the degree bounds now or
    /// makes the minimum degree unreachable for an endpoint.
    fn try_branch(&mut self, branch: u8) -> bool {
        let idx = self.p - 1 - self.depth;
        let (i, j) = self.pairs[idx];
        if branch == 1 {
            if self.degrees[i] >= self.spec.max_degree || self.degrees[j] >= self.spec.max_degree {
                return false;
            }
            self.mask |= 1 << idx;
            self.degrees[i] += 1;
            self.degrees[j] += 1;
        }
        let feasible = self.degrees[i] + self.incident_below[idx][i] >= self.spec.min_degree
            && self.degrees[j] + self.incident_below[idx][j] >= self.spec.min_degree;
        if !feasible {
            if branch == 1 {
                self.mask &= !(1 << idx);
                self.degrees[i] -= 1;
                self.degrees[j] -= 1;
            }
            return false;
        }
        self.depth += 1;
        if self.depth < self.p {
            self.choice[self.depth] = 0;
        }
        true
    }

    fn backtrack(&mut self) {
        loop {
            if self.depth <= self.fixed_depths {
                self.exhausted = true;
                return;
            }
            self.depth -= 1;
            let d = self.depth;
            let idx = self.p - 1 - d;
            if self.choice[d] == 2 {
                // undo an applied 1-branch
                let (i, j) = self.pairs[idx];
                if self.mask >> idx & 1 == 1 {
                    self.mask &= !(1 << idx);
                    self.degrees[i] -= 1;
                    self.degrees[j] -= 1;
                }
            }
            if self.choice[d] < 2 {
                return;
            }
        }
    }

    fn leaf(&mut self) -> Option<Graph> {
        debug_assert!(self
            .degrees
            .iter()
            .all(|&d| d >= self.spec.min_degree && d <= self.spec.max_degree));
        if self.spec.connected_only && !mask_connected(self.spec.n, self.mask) {
            return None;
        }
        if self.spec.dedup == Dedup::CanonicalForm {
            let canon = canonical_mask_of(self.spec.n, self.mask);
            if !self.seen.insert(canon) {
                return None;
            }
        }
        Some(graph_from_mask(self.spec.n, self.mask))
    }

    /// The mask currently under construction; at a leaf, the emitted graph.
    pub fn current_mask(&self) -> u64 {
        self.mask
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.exhausted {
            return None;
        }
        loop {
            if self.depth == self.p {
                let emitted = self.leaf();
                self.backtrack();
                if emitted.is_some() {
                    return emitted;
                }
                if self.exhausted {
                    return None;
                }
                continue;
            }
            let d = self.depth;
            let branch = self.choice[d];
            if branch >= 2 {
                self.backtrack();
                if self.exhausted {
                    return None;
                }
                continue;
            }
            self.choice[d] = branch + 1;
            let _ = self.try_branch(branch);
        }
    }
}

/// Creates the stream for a validated spec.
pub fn enumerate(spec: EnumerationSpec) -> Result<GraphStream, EnumError> {
    GraphStream::new(spec)
}

/// One surveyed graph: its mask, the exact comparison verdict, the
/// structural classification when an interval was supplied, and whether the
/// two agree (`Equal` exactly when the structure is an equality case).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub n: usize,
    pub mask: u64,
    pub verdict: Verdict,
    pub structure: Option<EqualityCase>,
    pub agreement: bool,
}

impl SurveyRow {
    pub fn graph(&self) -> Graph {
        graph_from_mask(self.n, self.mask)
    }
}

/// Evaluates one graph. The caller guarantees minimum degree >= 1 and, when
/// an interval is supplied, that the graph's degrees lie inside it.
pub fn evaluate_survey_row(g: &Graph, interval: Option<IntervalSpec>) -> SurveyRow {
    let verdict = compare(g).expect("survey graphs have min degree >= 1").verdict;
    let structure = interval.map(|iv| {
        classify_equality_structure(g, iv)
            .expect("survey degree bounds lie inside the interval")
            .verdict
    });
    let agreement = match structure {
        Some(s) => (verdict == Verdict::Equal) == (s != EqualityCase::NotEquality),
        None => true,
    };
    SurveyRow { n: g.vertex_count(), mask: graph_mask(g), verdict, structure, agreement }
}

/// Streams a survey: every enumerated graph with its verdict and, when an
/// interval is given, the structural classification to cross-check.
pub fn survey_equality(
    spec: EnumerationSpec,
    interval: Option<IntervalSpec>,
) -> Result<impl Iterator<Item = SurveyRow>, EnumError> {
    spec.validate()?;
    if spec.min_degree < 1 {
        return Err(EnumError::MinDegreeRequired);
    }
    if let Some(iv) = interval {
        if !iv.is_good() {
            return Err(EnumError::IntervalNotGood { a: iv.lower(), p: iv.length() });
        }
        if iv.lower() > spec.min_degree as u64 || (spec.max_degree as u64) > iv.upper() {
            return Err(EnumError::IntervalMismatch);
        }
    }
    let stream = GraphStream::new(spec)?;
    Ok(stream.map(move |g| evaluate_survey_row(&g, interval)))
}

/// All connected graphs with `2 <= n <= n_max` violating `M1/n <= M2/m`,
/// one representative per isomorphism class.
pub fn counterexample_search(n_max: usize) -> Result<Vec<Graph>, EnumError> {
    if n_max > MAX_VERTICES {
        return Err(EnumError::VertexCountOutOfRange { n: n_max, max: MAX_VERTICES });
    }
    let mut found = Vec::new();
    for n in 2..=n_max.max(1) {
        let spec = EnumerationSpec {
            n,
            min_degree: 1,
            max_degree: n - 1,
            connected_only: true,
            dedup: Dedup::None,
        };
        let mut seen = BTreeSet::new();
        for g in GraphStream::new(spec)? {
            let verdict = compare(&g).expect("connected with n >= 2").verdict;
            if verdict == Verdict::StrictlyGreater && seen.insert(canonical_mask(&g)) {
                found.push(g);
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn labeled_connected_on_3_vertices() {
        let spec = EnumerationSpec { connected_only: true, ..EnumerationSpec::all_graphs(3) };
        let graphs: Vec<Graph> = enumerate(spec).unwrap().collect();
        assert_eq!(graphs.len(), 4); // three labeled paths and the triangle
    }

    #[test]
    fn connected_classes_on_4_vertices() {
        let spec = EnumerationSpec {
            connected_only: true,
            dedup: Dedup::CanonicalForm,
            ..EnumerationSpec::all_graphs(4)
        };
        assert_eq!(enumerate(spec).unwrap().count(), 6);
    }

    #[test]
    fn all_classes_on_4_vertices() {
        let spec =
            EnumerationSpec { dedup: Dedup::CanonicalForm, ..EnumerationSpec::all_graphs(4) };
        assert_eq!(enumerate(spec).unwrap().count(), 11);
    }

    #[test]
    fn two_vertices_min_degree_one() {
        let spec = EnumerationSpec {
            min_degree: 1,
            ..EnumerationSpec::all_graphs(2)
        };
        let graphs: Vec<Graph> = enumerate(spec).unwrap().collect();
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].edge_count(), 1);
    }

    #[test]
    fn masks_ascend_and_are_deterministic() {
        let spec = EnumerationSpec { connected_only: true, ..EnumerationSpec::all_graphs(5) };
        let first: Vec<u64> = enumerate(spec).unwrap().map(|g| graph_mask(&g)).collect();
        let second: Vec<u64> = enumerate(spec).unwrap().map(|g| graph_mask(&g)).collect();
        assert_eq!(first, second);
        assert!(first.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn degree_bounds_are_honored() {
        let spec = EnumerationSpec {
            min_degree: 2,
            max_degree: 2,
            ..EnumerationSpec::all_graphs(5)
        };
        for g in enumerate(spec).unwrap() {
            assert!(g.degree_sequence().iter().all(|&d| d == 2));
        }
        // 2-regular graphs on 5 labeled vertices: the (5-1)!/2 = 12 cycles
        assert_eq!(enumerate(spec).unwrap().count(), 12);
    }

    #[test]
    fn prefix_streams_partition_the_full_stream() {
        let spec = EnumerationSpec { connected_only: true, ..EnumerationSpec::all_graphs(5) };
        let full: Vec<u64> = enumerate(spec).unwrap().map(|g| graph_mask(&g)).collect();
        let mut merged = Vec::new();
        for prefix in 0..8u64 {
            let stream = GraphStream::with_prefix(spec, prefix, 3).unwrap();
            merged.extend(stream.map(|g| graph_mask(&g)));
        }
        assert_eq!(full, merged);
    }

    #[test]
    fn canonical_mask_invariant_under_relabeling() {
        // the path 0-1-2-3 and the path 2-0-3-1 are isomorphic
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_mask(&a), canonical_mask(&b));
        let c = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_ne!(canonical_mask(&a), canonical_mask(&c));
    }

    #[test]
    fn mask_round_trip() {
        let g = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!(graph_from_mask(5, graph_mask(&g)), g);
    }

    #[test]
    fn survey_flags_structures() {
        let spec = EnumerationSpec {
            min_degree: 1,
            max_degree: 3,
            connected_only: true,
            ..EnumerationSpec::all_graphs(4)
        };
        let interval = IntervalSpec::new(1, 3).unwrap();
        for row in survey_equality(spec, Some(interval)).unwrap() {
            assert!(row.agreement, "mask {:#b}", row.mask);
        }
    }

    #[test]
    fn survey_requires_min_degree() {
        let spec = EnumerationSpec::all_graphs(4);
        assert_eq!(
            survey_equality(spec, None).err(),
            Some(EnumError::MinDegreeRequired)
        );
    }

    #[test]
    fn no_counterexamples_up_to_5_vertices() {
        assert!(counterexample_search(5).unwrap().is_empty());
    }

    #[test]
    fn spec_validation() {
        assert!(EnumerationSpec::all_graphs(9).validate().is_err());
        assert!(EnumerationSpec::all_graphs(0).validate().is_err());
        let bad = EnumerationSpec { min_degree: 3, max_degree: 2, ..EnumerationSpec::all_graphs(4) };
        assert!(bad.validate().is_err());
    }
}
