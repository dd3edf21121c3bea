//! Additive tilings: brick-wall arrays with zero top and bottom rows in
//! which every diamond
//!
//! ```text
//!   a
//! b   c
//!   d
//! ```
//!
//! satisfies `(b + c) - (a + d) = 1`.
//!
//! A tiling with lines `0..=n` is completely determined by one period of
//! line 1 (`n` values summing to the (n-1)-th triangular number): the
//! entry spanning first-row indices `r..=s` sits on line `s - r + 1` and
//! equals the window sum minus `t(s - r)`. Everything here — grids,
//! positivity, growth, endpoint recovery, diagonal reconstruction — is
//! derived from that closed form and cross-checked against diamond
//! propagation in the tests.

use std::fmt;
use std::ops::RangeInclusive;

use thiserror::Error;

use crate::periodic::{is_rotation, PeriodicSeq};
use crate::rational::{triangular_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdditiveError {
    #[error("first row needs at least 2 values, got {0}")]
    TooShort(usize),
    #[error("expected {expected} first-row values, got {actual}")]
    WrongLength { expected: usize, actual: usize },
    #[error("not closed: line {n} would not vanish (first-row sum is {sum}, needs {expected})")]
    NotClosed {
        n: usize,
        sum: Rational,
        expected: Rational,
    },
    #[error("diagonal for an (n+1)-line tiling needs n-1 = {expected} values, got {actual}")]
    DiagonalLength { expected: usize, actual: usize },
    #[error("parallelogram indices must satisfy r < j <= k < s, got r={r} j={j} k={k} s={s}")]
    ParallelogramIndices { j: i64, k: i64, r: i64, s: i64 },
}

/// Which way a straight diagonal leans when read downwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalDirection {
    /// Fixed left endpoint: entries `r..=r`, `r..=r+1`, ...
    DownRight,
    /// Fixed right endpoint: entries `s..=s`, `s-1..=s`, ...
    DownLeft,
}

/// One period of line 1 of an additive tiling with lines `0..=n`.
///
/// The period length is exactly `n` and the period sum equals
/// `t(n-1)`, which is the condition for line `n` to vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstRow {
    values: PeriodicSeq,
}

impl FirstRow {
    /// Validates closure: the `n` values must sum to `t(n-1)`.
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self, AdditiveError> {
        if n < 2 {
            return Err(AdditiveError::TooShort(n));
        }
        if values.len() != n {
            return Err(AdditiveError::WrongLength {
                expected: n,
                actual: values.len(),
            });
        }
        let sum: Rational = values.iter().sum();
        let expected = triangular_rational(n as u64 - 1);
        if sum != expected {
            return Err(AdditiveError::NotClosed { n, sum, expected });
        }
        Ok(FirstRow {
            values: PeriodicSeq::new(values),
        })
    }

    /// The constant first row: every value `(n-1)/2`. Line `k` of the
    /// resulting tiling is constantly `(nk - k^2)/2`.
    pub fn constant(n: usize) -> Result<Self, AdditiveError> {
        if n < 2 {
            return Err(AdditiveError::TooShort(n));
        }
        let value = Rational::new(n as i64 - 1, 2);
        FirstRow::new(n, vec![value; n])
    }

    /// Number of interior-defining values; the tiling has lines `0..=n`.
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// The first-row value `a_i`. Indices are 1-based: `a_1` is the
    /// first stored value, matching the display convention where line 1
    /// reads `a_1, a_2, ...`.
    pub fn value(&self, i: i64) -> &Rational {
        self.values.get(i - 1)
    }

    pub fn values(&self) -> &[Rational] {
        self.values.values()
    }

    pub fn is_rotation_of(&self, other: &FirstRow) -> bool {
        is_rotation(self.values(), other.values())
    }

    /// The entry spanning first-row indices `r..=s`, on line `s - r + 1`.
    ///
    /// `s = r - 1` addresses line 0 and returns zero; `s = r + n - 1`
    /// addresses line `n` and returns zero by closure.
    pub fn entry(&self, r: i64, s: i64) -> Rational {
        assert!(s >= r - 1, "entry range ends before it starts");
        if s < r {
            return Rational::zero();
        }
        let count = (s - r + 1) as u64;
        self.values.window_sum(r - 1, count) - triangular_rational(count - 1)
    }

    /// True iff every period value is an integer; this decides
    /// integrality of the whole tiling.
    pub fn is_integral(&self) -> bool {
        self.values().iter().all(Rational::is_integer)
    }

    /// True iff every window sum meets its triangular lower bound,
    /// equivalently every tiling entry is non-negative. Ties count as
    /// positive.
    pub fn is_positive(&self) -> bool {
        self.first_positivity_violation().is_none()
    }

    /// First window `(r, s)` with `a_r + ... + a_{r+s} < t(s)`, scanning
    /// `r` then `s` over one period. The offending entry sits on line
    /// `s + 1` of the tiling.
    pub fn first_positivity_violation(&self) -> Option<PositivityViolation> {
        let n = self.n() as i64;
        for r in 1..=n {
            let mut sum = Rational::zero();
            for s in 0..n {
                sum = sum + self.value(r + s);
                let bound = triangular_rational(s as u64);
                if sum < bound {
                    return Some(PositivityViolation {
                        r,
                        s,
                        sum,
                        bound,
                    });
                }
            }
        }
        None
    }

    /// Inserts the value `n` into the period, producing the first row of
    /// a tiling with one more line. Closure is automatic: the period sum
    /// becomes `t(n-1) + n = t(n)`. The position is taken modulo `n + 1`,
    /// with 0 meaning "before the first stored value".
    pub fn grow_insert(&self, position: i64) -> FirstRow {
        let n = self.n();
        let index = position.rem_euclid(n as i64 + 1) as usize;
        let mut values = self.values().to_vec();
        values.insert(index, Rational::from_integer(n as i64));
        FirstRow::new(n + 1, values).expect("insertion preserves closure")
    }

    /// `(a_{j..k} + a_{r..s}) - (a_{j..s} + a_{r..k} - (j-r)(s-k))` for
    /// `r < j <= k < s`. Identically zero on valid tilings.
    pub fn parallelogram_defect(
        &self,
        j: i64,
        k: i64,
        r: i64,
        s: i64,
    ) -> Result<Rational, AdditiveError> {
        if !(r < j && j <= k && k < s) {
            return Err(AdditiveError::ParallelogramIndices { j, k, r, s });
        }
        let area = Rational::from_integer((j - r) * (s - k));
        Ok(self.entry(j, k) + self.entry(r, s) - (self.entry(j, s) + self.entry(r, k) - area))
    }

    /// Rebuilds a first row from one straight diagonal read down lines
    /// `1..=n-1`. `anchor` is the first-row index of the line-1 entry.
    ///
    /// Each adjacent couple determines the next endpoint
    /// (`a_s = a_{r..s} - a_{r..s-1} + (s - r)` and its mirror); the last
    /// value comes from extending the diagonal onto the zero boundary.
    pub fn from_diagonal(
        n: usize,
        diag: &[Rational],
        direction: DiagonalDirection,
        anchor: i64,
    ) -> Result<Self, AdditiveError> {
        if n < 2 {
            return Err(AdditiveError::TooShort(n));
        }
        if diag.len() != n - 1 {
            return Err(AdditiveError::DiagonalLength {
                expected: n - 1,
                actual: diag.len(),
            });
        }
        let mut recovered = Vec::with_capacity(n);
        recovered.push(diag[0].clone());
        for j in 1..n {
            let next = if j < n - 1 {
                &diag[j] - &diag[j - 1]
            } else {
                // Line n is zero, so the final couple is (diag[n-2], 0).
                -&diag[n - 2]
            };
            recovered.push(next + Rational::from_integer(j as i64));
        }

        let mut values = vec![Rational::zero(); n];
        for (t, value) in recovered.into_iter().enumerate() {
            let index = match direction {
                DiagonalDirection::DownRight => anchor + t as i64,
                DiagonalDirection::DownLeft => anchor - t as i64,
            };
            values[(index - 1).rem_euclid(n as i64) as usize] = value;
        }
        FirstRow::new(n, values)
    }

    /// Materializes lines `0..=n` for first-row indices in `window`.
    pub fn build(&self, window: RangeInclusive<i64>) -> AdditiveTiling {
        let start = *window.start();
        let end = *window.end();
        assert!(start <= end, "empty window");
        let width = (end - start + 1) as usize;
        let n = self.n();
        let rows = (0..=n)
            .map(|line| {
                (0..width)
                    .map(|idx| {
                        let r = start + idx as i64;
                        self.entry(r, r + line as i64 - 1)
                    })
                    .collect()
            })
            .collect();
        AdditiveTiling {
            n,
            start,
            rows,
        }
    }

    /// Default materialization: two full periods starting at `a_1`.
    pub fn build_default(&self) -> AdditiveTiling {
        self.build(1..=(2 * self.n() as i64))
    }
}

/// Witness that a window sum undercuts its triangular bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityViolation {
    /// Window start (first-row index).
    pub r: i64,
    /// Window length minus one; the entry lies on line `s + 1`.
    pub s: i64,
    pub sum: Rational,
    pub bound: Rational,
}

/// Recovers the right endpoint of a couple:
/// `a_s = a_{r..s} - a_{r..s-1} + (s - r)`.
pub fn recover_endpoint_right(a_rs: &Rational, a_rs_prev: &Rational, r: i64, s: i64) -> Rational {
    assert!(s > r, "couple needs s > r");
    a_rs - a_rs_prev + Rational::from_integer(s - r)
}

/// Recovers the left endpoint of a couple:
/// `a_r = a_{r..s} - a_{r+1..s} + (s - r)`.
pub fn recover_endpoint_left(a_rs: &Rational, a_rs_next: &Rational, r: i64, s: i64) -> Rational {
    assert!(s > r, "couple needs s > r");
    a_rs - a_rs_next + Rational::from_integer(s - r)
}

/// A materialized additive tiling: lines `0..=n` over a window of
/// first-row indices. Row `line` holds the entries `r..=r+line-1` for
/// `r` in the window, so the store is rectangular and every diamond
/// whose four cells exist can be checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveTiling {
    n: usize,
    start: i64,
    rows: Vec<Vec<Rational>>,
}

impl AdditiveTiling {
    /// Wraps raw rows without validation, for checking foreign grids.
    /// `rows[line][idx]` is the entry spanning `start+idx ..= start+idx+line-1`.
    pub fn from_rows(n: usize, start: i64, rows: Vec<Vec<Rational>>) -> Self {
        assert_eq!(rows.len(), n + 1, "need one row per line 0..=n");
        let width = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == width));
        AdditiveTiling { n, start, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> RangeInclusive<i64> {
        self.start..=(self.start + self.width() as i64 - 1)
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    /// Entry on `line` whose leftmost first-row index is `r`.
    pub fn entry_at(&self, line: usize, r: i64) -> &Rational {
        &self.rows[line][(r - self.start) as usize]
    }

    pub fn set_entry(&mut self, line: usize, r: i64, value: Rational) {
        self.rows[line][(r - self.start) as usize] = value;
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// One period of `line`, read from first-row index 0.
    pub fn line_period(&self, line: usize) -> Vec<Rational> {
        (0..self.n as i64)
            .map(|r| self.entry_at(line, r).clone())
            .collect()
    }

    /// Checks every diamond and both boundary rows; an empty report
    /// means the grid is a valid additive tiling over its window.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let width = self.width();
        for line in [0, self.n] {
            for idx in 0..width {
                let value = &self.rows[line][idx];
                if !value.is_zero() {
                    report.boundary.push(BoundaryViolation {
                        line,
                        r: self.start + idx as i64,
                        value: value.clone(),
                    });
                }
            }
        }
        for line in 1..self.n {
            for idx in 0..width.saturating_sub(1) {
                let b = &self.rows[line][idx];
                let c = &self.rows[line][idx + 1];
                let a = &self.rows[line - 1][idx + 1];
                let d = &self.rows[line + 1][idx];
                let defect = (b + c) - (a + d) - Rational::one();
                if !defect.is_zero() {
                    report.diamonds.push(DiamondViolation {
                        line,
                        r: self.start + idx as i64,
                        defect,
                    });
                }
            }
        }
        report
    }

    /// Searches the window for a slice of zeros: adjacent entries, one
    /// per line `1..=n-1`. Returns the leftmost such slice as
    /// `(line, r)` coordinates, top to bottom.
    pub fn zero_slice(&self) -> Option<Vec<(usize, i64)>> {
        self.find_slice(1, self.n.checked_sub(1)?, |v| v.is_zero())
    }

    /// Slice search over lines `top..=bottom` for entries satisfying
    /// `pred`. Consecutive slice entries are diamond-adjacent: from
    /// `(line, idx)` the next line's entry is at `idx - 1` (down-left)
    /// or `idx` (down-right).
    fn find_slice(
        &self,
        top: usize,
        bottom: usize,
        pred: impl Fn(&Rational) -> bool,
    ) -> Option<Vec<(usize, i64)>> {
        if bottom < top {
            return None;
        }
        let levels: Vec<Vec<bool>> = (top..=bottom)
            .map(|line| self.rows[line].iter().map(&pred).collect())
            .collect();
        let path = crate::periodic::downward_path(&levels)?;
        Some(
            path.iter()
                .enumerate()
                .map(|(offset, &idx)| (top + offset, self.start + idx as i64))
                .collect(),
        )
    }
}

/// Diamond whose four corners fail `(b + c) - (a + d) = 1`; identified
/// by its left corner `b` at (`line`, `r`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondViolation {
    pub line: usize,
    pub r: i64,
    pub defect: Rational,
}

/// Nonzero entry on a boundary line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryViolation {
    pub line: usize,
    pub r: i64,
    pub value: Rational,
}

/// Outcome of checking a materialized grid. Violations are data, not
/// errors: an empty report means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub diamonds: Vec<DiamondViolation>,
    pub boundary: Vec<BoundaryViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.diamonds.is_empty() && self.boundary.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for v in &self.boundary {
            writeln!(f, "boundary line {} at {}: expected 0, found {}", v.line, v.r, v.value)?;
        }
        for v in &self.diamonds {
            writeln!(
                f,
                "diamond at line {}, index {}: (b+c)-(a+d)-1 = {}",
                v.line, v.r, v.defect
            )?;
        }
        Ok(())
    }
}
