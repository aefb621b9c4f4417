//! Worker-pool survey driver. The enumeration mask space splits by pinning
//! the top bits, one stream per prefix; merging partial results in prefix
//! order reproduces the sequential (ascending-mask) output exactly.

use std::env;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use zagreb_core::enumerate::{
    evaluate_survey_row, pair_count, survey_equality, Dedup, EnumError, EnumerationSpec,
    GraphStream, SurveyRow,
};
use zagreb_core::intervals::IntervalSpec;
use zagreb_core::zagreb::Verdict;

/// `ZAGREB_THREADS` caps the worker count; default is the available cores.
pub fn worker_threads() -> usize {
    if let Ok(value) = env::var("ZAGREB_THREADS") {
        if let Ok(n) = value.trim().parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
        eprintln!("warning: ignoring invalid ZAGREB_THREADS value {value:?}");
    }
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

#[derive(Debug, Default)]
pub struct SurveySummary {
    pub total: u64,
    pub strictly_less: u64,
    pub equal: u64,
    pub strictly_greater: u64,
    pub equal_rows: Vec<SurveyRow>,
    pub disagreements: Vec<SurveyRow>,
}

impl SurveySummary {
    fn absorb_row(&mut self, row: SurveyRow) {
        self.total += 1;
        match row.verdict {
            Verdict::StrictlyLess => self.strictly_less += 1,
            Verdict::Equal => self.equal += 1,
            Verdict::StrictlyGreater => self.strictly_greater += 1,
        }
        let keep_equal = row.verdict == Verdict::Equal;
        if !row.agreement {
            if keep_equal {
                self.equal_rows.push(row.clone());
            }
            self.disagreements.push(row);
        } else if keep_equal {
            self.equal_rows.push(row);
        }
    }

    fn absorb(&mut self, other: SurveySummary) {
        self.total += other.total;
        self.strictly_less += other.strictly_less;
        self.equal += other.equal;
        self.strictly_greater += other.strictly_greater;
        self.equal_rows.extend(other.equal_rows);
        self.disagreements.extend(other.disagreements);
    }
}

fn summarize(rows: impl Iterator<Item = SurveyRow>) -> SurveySummary {
    let mut summary = SurveySummary::default();
    for row in rows {
        summary.absorb_row(row);
    }
    summary
}

/// Runs a survey, fanning the mask space out over `threads` workers.
///
/// Canonical-form dedup needs one global seen-set, so it always runs on the
/// sequential path.
pub fn run_survey(
    spec: EnumerationSpec,
    interval: Option<IntervalSpec>,
    threads: usize,
) -> Result<SurveySummary, EnumError> {
    let p = pair_count(spec.n);
    if threads <= 1 || spec.dedup == Dedup::CanonicalForm || p < 8 {
        return Ok(summarize(survey_equality(spec, interval)?));
    }
    // run the sequential constructor once for its validation
    drop(survey_equality(spec, interval)?);

    let prefix_len = ((threads * 4).next_power_of_two().trailing_zeros()).min(10).min(p as u32 - 1);
    let jobs = 1usize << prefix_len;
    let counter = AtomicUsize::new(0);
    let mut partials: Vec<(usize, SurveySummary)> = thread::scope(|scope| {
        let counter = &counter;
        let mut handles = Vec::new();
        for _ in 0..threads.min(jobs) {
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                loop {
                    let job = counter.fetch_add(1, Ordering::Relaxed);
                    if job >= jobs {
                        break;
                    }
                    let stream = GraphStream::with_prefix(spec, job as u64, prefix_len)
                        .expect("spec validated above");
                    out.push((job, summarize(stream.map(|g| evaluate_survey_row(&g, interval)))));
                }
                out
            }));
        }
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("survey worker panicked"))
            .collect()
    });
    partials.sort_by_key(|(job, _)| *job);
    let mut merged = SurveySummary::default();
    for (_, partial) in partials {
        merged.absorb(partial);
    }
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn survey_spec(n: usize) -> EnumerationSpec {
        EnumerationSpec {
            n,
            min_degree: 1,
            max_degree: n - 1,
            connected_only: true,
            dedup: Dedup::None,
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let spec = survey_spec(6);
        let interval = None;
        let sequential = run_survey(spec, interval, 1).unwrap();
        let parallel = run_survey(spec, interval, 4).unwrap();
        assert_eq!(sequential.total, parallel.total);
        assert_eq!(sequential.equal, parallel.equal);
        assert_eq!(sequential.equal_rows, parallel.equal_rows);
        assert_eq!(sequential.disagreements.len(), parallel.disagreements.len());
    }

    #[test]
    fn survey_counts_small_case() {
        // connected graphs on 3 vertices: the star P_3 (x3 labelings) and
        // the cycle C_3, all of which attain the equality
        let summary = run_survey(survey_spec(3), None, 1).unwrap();
        assert_eq!(summary.total, 4);
        assert_eq!(summary.equal, 4);
        assert_eq!(summary.strictly_less, 0);
        assert_eq!(summary.strictly_greater, 0);

        // P_4 breaks it: one strictly-less row appears
        let summary = run_survey(survey_spec(4), None, 1).unwrap();
        assert_eq!(summary.total, 38);
        assert!(summary.strictly_less > 0);
        assert_eq!(summary.strictly_greater, 0);
    }
}
