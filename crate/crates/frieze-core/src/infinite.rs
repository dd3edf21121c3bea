//! Infinite downward propagation: a middle row of a frieze is adjoined
//! beneath a fresh row of ones and extended indefinitely by the
//! unimodular rule `d = (bc - 1) / a`.
//!
//! The conjecture under test: seeding with any line other than the
//! first, second, last or second-to-last of a frieze with at least five
//! lines yields an infinite pattern of positive integers. Propagation
//! is exact, so a non-integer entry is evidence, not rounding noise.
//! [`scan_conjecture`] sweeps every triangulation-derived frieze up to
//! a vertex bound and reports confirmations and counterexamples; the
//! contract is "search and report", never "prove".

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::multiplicative::Frieze;
use crate::rational::Rational;
use crate::triangulation::Triangulation;

/// Upper bound for [`scan_conjecture`]'s polygon sweep.
pub const MAX_SCAN_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InfiniteError {
    #[error("seed source needs at least 5 lines, got {0}")]
    TooFewLines(usize),
    #[error(
        "row {k} cannot seed an infinite pattern: the row must lie in 3..={max} \
         (not the first, second, last or second-to-last of the {lines} lines)"
    )]
    RowOutOfRange { k: usize, max: usize, lines: usize },
    #[error("propagation depth must be at least 1")]
    ZeroDepth,
    #[error("vertex bound must be in 3..={MAX_SCAN_VERTICES}, got {0}")]
    VertexBound(usize),
}

/// One period of the row adjoined beneath the row of ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteSeed {
    period: Vec<Rational>,
}

impl InfiniteSeed {
    /// Extracts line `k` of a frieze as a seed. The frieze must have at
    /// least 5 lines and `k` must avoid the two boundary lines on each
    /// side, i.e. `3 <= k <= n - 2`.
    pub fn from_frieze_row(source: &Frieze, k: usize) -> Result<Self, InfiniteError> {
        let lines = source.lines();
        if lines < 5 {
            return Err(InfiniteError::TooFewLines(lines));
        }
        if !(3..=lines - 2).contains(&k) {
            return Err(InfiniteError::RowOutOfRange {
                k,
                max: lines - 2,
                lines,
            });
        }
        Ok(InfiniteSeed {
            period: source.line_period(k).to_vec(),
        })
    }

    /// Wraps a raw periodic row without range checks, for probing what
    /// happens outside the admissible seed rows.
    pub fn from_period(period: Vec<Rational>) -> Self {
        assert!(!period.is_empty(), "empty seed period");
        InfiniteSeed { period }
    }

    pub fn period(&self) -> &[Rational] {
        &self.period
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// The entry two rows above a cell was zero, halting propagation.
    ZeroDivisor,
    NonInteger,
    NonPositive,
}

/// First defect found while propagating, in row-major scan order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub row: usize,
    pub position: i64,
    pub kind: ViolationKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Rational>,
}

/// A propagated row reduced to one period, with per-row verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropagatedRow {
    pub period: Vec<Rational>,
    pub integral: bool,
    pub positive: bool,
}

/// Outcome of propagating a seed to a requested depth.
///
/// Row 0 is the row of ones, row 1 the seed. `depth_reached` falls
/// short of the request only when a zero divisor halts propagation;
/// `first_violation` records the earliest non-integer, non-positive or
/// zero-divisor cell. Rows are computed over a window three periods
/// wider than the depth and checked for periodicity rather than stored
/// periodically, so an aperiodic row would be detected and flagged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropagationReport {
    pub depth_reached: usize,
    pub all_integral: bool,
    pub all_positive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_aperiodicity: Option<(usize, i64)>,
    pub rows: Vec<PropagatedRow>,
}

impl PropagationReport {
    pub fn confirms_conjecture(&self) -> bool {
        self.first_violation.is_none() && self.first_aperiodicity.is_none()
    }
}

/// Runs the unimodular propagation `rows[i][k] =
/// (rows[i-1][k] rows[i-1][k+1] - 1) / rows[i-2][k+1]` down to `depth`.
pub fn propagate(seed: &InfiniteSeed, depth: usize) -> PropagationReport {
    assert!(depth >= 1, "depth must be at least 1");
    let p = seed.period.len();
    let width = depth + 3 * p;

    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(depth + 1);
    rows.push(vec![Rational::one(); width]);
    rows.push((0..width).map(|k| seed.period[k % p].clone()).collect());

    let mut first_violation: Option<Violation> = None;
    let mut first_aperiodicity: Option<(usize, i64)> = None;
    let scan = |row_index: usize,
                    row: &[Rational],
                    first_violation: &mut Option<Violation>,
                    first_aperiodicity: &mut Option<(usize, i64)>|
     -> (bool, bool) {
        let mut integral = true;
        let mut positive = true;
        for (k, value) in row.iter().enumerate() {
            let kind = if !value.is_integer() {
                integral = false;
                Some(ViolationKind::NonInteger)
            } else if !value.is_positive() {
                positive = false;
                Some(ViolationKind::NonPositive)
            } else {
                None
            };
            if let Some(kind) = kind {
                if first_violation.is_none() {
                    *first_violation = Some(Violation {
                        row: row_index,
                        position: k as i64,
                        kind,
                        value: Some(value.clone()),
                    });
                }
            }
        }
        for k in 0..row.len().saturating_sub(p) {
            if row[k] != row[k + p] && first_aperiodicity.is_none() {
                *first_aperiodicity = Some((row_index, k as i64));
            }
        }
        (integral, positive)
    };

    let mut verdicts = Vec::with_capacity(depth + 1);
    for (i, row) in rows.iter().enumerate() {
        verdicts.push(scan(i, row, &mut first_violation, &mut first_aperiodicity));
    }

    'propagation: for i in 2..=depth {
        let new_width = rows[i - 1].len() - 1;
        let mut row = Vec::with_capacity(new_width);
        for k in 0..new_width {
            let divisor = &rows[i - 2][k + 1];
            if divisor.is_zero() {
                if first_violation.is_none() {
                    first_violation = Some(Violation {
                        row: i,
                        position: k as i64,
                        kind: ViolationKind::ZeroDivisor,
                        value: None,
                    });
                }
                break 'propagation;
            }
            let value =
                (&rows[i - 1][k] * &rows[i - 1][k + 1] - Rational::one()) / divisor.clone();
            row.push(value);
        }
        verdicts.push(scan(i, &row, &mut first_violation, &mut first_aperiodicity));
        rows.push(row);
    }

    let reported_rows = rows
        .iter()
        .zip(&verdicts)
        .map(|(row, &(integral, positive))| PropagatedRow {
            period: row[..p.min(row.len())].to_vec(),
            integral,
            positive,
        })
        .collect::<Vec<_>>();
    PropagationReport {
        depth_reached: rows.len() - 1,
        all_integral: verdicts.iter().all(|&(i, _)| i),
        all_positive: verdicts.iter().all(|&(_, p)| p),
        first_violation,
        first_aperiodicity,
        rows: reported_rows,
    }
}

/// Identifies a seed inside the scan corpus: line `row` of the frieze
/// of triangulation number `triangulation` of the `vertices`-gon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeedOutcome {
    pub vertices: usize,
    pub triangulation: usize,
    pub row: usize,
    pub depth_reached: usize,
    pub all_integral: bool,
    pub all_positive: bool,
}

/// A counterexample candidate, persisted verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanViolation {
    pub vertices: usize,
    pub triangulation: usize,
    pub row: usize,
    pub seed: Vec<Rational>,
    pub violation: Violation,
}

/// Result of sweeping every admissible seed. Serializes as
/// `{"seeds": [...], "violations": [...], "depth": d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub seeds: Vec<SeedOutcome>,
    pub violations: Vec<ScanViolation>,
    pub depth: usize,
}

impl ScanSummary {
    pub fn confirmed_count(&self) -> usize {
        self.seeds.len() - self.violations.len()
    }

    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }
}

/// Propagates every admissible seed from every triangulation-derived
/// frieze with up to `max_vertices` polygon vertices. Seeds run in
/// parallel; the summary is merged in (vertices, triangulation, row)
/// order, so identical inputs give identical summaries.
pub fn scan_conjecture(max_vertices: usize, depth: usize) -> Result<ScanSummary, InfiniteError> {
    if depth == 0 {
        return Err(InfiniteError::ZeroDepth);
    }
    if !(3..=MAX_SCAN_VERTICES).contains(&max_vertices) {
        return Err(InfiniteError::VertexBound(max_vertices));
    }

    let mut jobs: Vec<(usize, usize, usize, InfiniteSeed)> = Vec::new();
    for vertices in 6..=max_vertices {
        let triangulations =
            Triangulation::enumerate(vertices).expect("vertex bound already checked");
        for (index, t) in triangulations.iter().enumerate() {
            let frieze =
                Frieze::build(t.quiddity_rationals()).expect("triangulation quiddities close");
            let lines = frieze.lines();
            for row in 3..=lines - 2 {
                let seed = InfiniteSeed::from_frieze_row(&frieze, row)
                    .expect("row range matches the seed contract");
                jobs.push((vertices, index, row, seed));
            }
        }
    }

    let results: Vec<(SeedOutcome, Option<ScanViolation>)> = jobs
        .par_iter()
        .map(|(vertices, index, row, seed)| {
            let report = propagate(seed, depth);
            let outcome = SeedOutcome {
                vertices: *vertices,
                triangulation: *index,
                row: *row,
                depth_reached: report.depth_reached,
                all_integral: report.all_integral,
                all_positive: report.all_positive,
            };
            let violation = report.first_violation.map(|violation| ScanViolation {
                vertices: *vertices,
                triangulation: *index,
                row: *row,
                seed: seed.period().to_vec(),
                violation,
            });
            (outcome, violation)
        })
        .collect();

    let mut summary = ScanSummary {
        seeds: Vec::with_capacity(results.len()),
        violations: Vec::new(),
        depth,
    };
    for (outcome, violation) in results {
        summary.seeds.push(outcome);
        summary.violations.extend(violation);
    }
    Ok(summary)
}
