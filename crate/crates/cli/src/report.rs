//! Line-oriented structured reports: `key = value` with a stable key order,
//! all numbers integers or integer fraction pairs.

use std::fmt::{self, Display};

use zagreb_core::graph::Graph;
use zagreb_core::intervals::{classify_equality_structure, is_good_interval, IntervalSpec};
use zagreb_core::zagreb::{compare, decomposition_sum, ZagrebError};

#[derive(Debug, Default, Clone)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (key, value) in &self.entries {
            writeln!(f, "{key} = {value}")?;
        }
        Ok(())
    }
}

fn join(values: impl IntoIterator<Item = impl Display>) -> String {
    let mut out = String::new();
    for (idx, v) in values.into_iter().enumerate() {
        if idx > 0 {
            out.push(',');
        }
        out.push_str(&v.to_string());
    }
    out
}

/// The smallest good interval containing the degree set, if any: the tight
/// interval `[min degree, max degree]` when it is good, else `[1, 4]` when
/// the degrees allow it. Widening a bad interval only raises the threshold,
/// so these are the only candidates.
pub fn derive_good_interval(g: &Graph) -> Option<IntervalSpec> {
    let degrees = g.degree_set();
    let lo = *degrees.first()? as u64;
    let hi = *degrees.last()? as u64;
    if lo == 0 {
        return None;
    }
    if is_good_interval(lo, hi - lo) {
        return Some(IntervalSpec::new(lo, hi - lo).expect("lo >= 1"));
    }
    if hi <= 4 {
        return Some(IntervalSpec::new(1, 3).expect("valid"));
    }
    None
}

/// Full per-graph report: counts, degree data, regularity class, edge-class
/// table, both Zagreb indices with their exact ratios, the comparison
/// verdict, the decomposition sum, and (when the degrees fit a good
/// interval) the equality-structure classification.
pub fn graph_report(g: &Graph) -> Result<Report, ZagrebError> {
    let zagreb = compare(g)?;
    let mut report = Report::new();
    report.push("n", zagreb.n);
    report.push("m", zagreb.m);
    report.push("degree-set", join(g.degree_set()));
    report.push("connected", g.is_connected());
    report.push("regularity", g.classify_regularity());
    for ((i, j), count) in g.edge_class_counts().iter() {
        report.push(format!("edge-class[{i},{j}]"), count);
    }
    report.push("m1", &zagreb.m1);
    report.push("m2", &zagreb.m2);
    report.push("m1/n", format!("{}/{}", zagreb.m1, zagreb.n));
    report.push("m2/m", format!("{}/{}", zagreb.m2, zagreb.m));
    report.push("verdict", zagreb.verdict);
    report.push("decomposition-sum", decomposition_sum(g)?);
    match derive_good_interval(g) {
        Some(interval) => {
            report.push("good-interval", interval);
            let structure = classify_equality_structure(g, interval)
                .expect("derived interval satisfies the preconditions");
            report.push("equality-structure", structure.verdict);
            for (idx, component) in structure.components.iter().enumerate() {
                report.push(format!("component[{idx}]"), component);
            }
        }
        None => {
            report.push("good-interval", "none");
            report.push("equality-structure", "not-applicable");
        }
    }
    Ok(report)
}
