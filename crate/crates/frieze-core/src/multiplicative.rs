//! Multiplicative friezes: brick-wall arrays whose top and bottom rows
//! are all ones and whose every diamond
//!
//! ```text
//!   a
//! b   c
//!   d
//! ```
//!
//! satisfies the unimodular rule `bc - ad = 1`.
//!
//! Positions follow the double-index convention: the entry `m(k, p)`
//! sits on line `p - k`, line 1 holds `m(k, k+1) = 1`, line 2 holds the
//! quiddity `m(k, k+2)`, and in an `n`-line frieze line `n` is again all
//! ones. A frieze is canonically encoded by one quiddity period of
//! length `n + 1`; grids, diagonals and slices are views derived from
//! it. Along a diagonal (fixed `k`) the entries obey the three-term
//! continuant recurrence, which is what [`continuant`] evaluates.

use num_traits::Zero;
use thiserror::Error;

use crate::periodic::{downward_path, is_rotation};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("quiddity needs at least 3 values, got {0}")]
    TooShort(usize),
    #[error("quiddity does not close: line {line} entry at {k} is {value}, expected 1")]
    DoesNotClose { line: usize, k: i64, value: Rational },
    #[error("degenerate frieze at ({k},{p}): interior entry is zero")]
    Degenerate { k: i64, p: i64 },
    #[error("diagonal needs at least 2 values, got {0}")]
    DiagonalTooShort(usize),
    #[error("diagonal must start and end with 1")]
    DiagonalEndpoints,
    #[error("diagonal does not extend: entry on line {line} is zero")]
    DiagonalDoesNotExtend { line: usize },
    #[error("not a frieze diagonal: {reason}")]
    NotFriezeDiagonal { reason: String },
    #[error("division by zero: middle diagonal entry is 0")]
    ZeroTriple,
    #[error("divisibility undefined: entry at ({k},{p}) is {value}, need a nonzero integer")]
    DivisibilityUndefined { k: i64, p: i64, value: Rational },
}

/// The continuant: determinant of the tridiagonal matrix with `qs` on
/// the diagonal and ones off it, via `D_j = q_j D_{j-1} - D_{j-2}` with
/// `D_0 = 1`, `D_{-1} = 0`. The empty product is 1. A frieze entry
/// `m(k, p)` equals the continuant of the quiddity segment
/// `q_k, ..., q_{p-2}`.
pub fn continuant(qs: &[Rational]) -> Rational {
    let mut prev = Rational::zero();
    let mut current = Rational::one();
    for q in qs {
        let next = q * &current - &prev;
        prev = current;
        current = next;
    }
    current
}

/// `m(p, p+2) = (m(k, p) + m(k, p+2)) / m(k, p+1)`: the quiddity entry
/// read off three consecutive entries of any diagonal.
pub fn quiddity_from_diagonal_triple(
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<Rational, FriezeError> {
    if b.is_zero() {
        return Err(FriezeError::ZeroTriple);
    }
    Ok((a + c) / b.clone())
}

/// Index image of a cell under the glide reflection. Applying it twice
/// composes to the translation by `n + 1`, and line `r` maps to line
/// `n + 1 - r`.
pub fn glide_image(k: i64, p: i64, n: usize) -> (i64, i64) {
    (p, k + n as i64 + 1)
}

/// Line values of the constant `n`-line frieze: the diagonal lengths
/// `sin(r*pi/(n+1)) / sin(pi/(n+1))` of a regular `(n+1)`-gon with unit
/// sides. The first and last values are 1.
pub fn constant_diagonals(n: usize) -> Vec<f64> {
    assert!(n >= 2);
    let theta = std::f64::consts::PI / (n as f64 + 1.0);
    (1..=n).map(|r| (r as f64 * theta).sin() / theta.sin()).collect()
}

/// One period of a frieze's second line. Constructing a `Quiddity`
/// builds the whole grid and checks that it closes, so every value of
/// this type is the quiddity of an actual frieze.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiddity {
    values: Vec<Rational>,
}

impl Quiddity {
    pub fn new(values: Vec<Rational>) -> Result<Self, FriezeError> {
        Frieze::build(values).map(Frieze::into_quiddity)
    }

    /// Period length; the frieze has `m - 1` lines.
    pub fn m(&self) -> usize {
        self.values.len()
    }

    pub fn lines(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, i: i64) -> &Rational {
        &self.values[i.rem_euclid(self.values.len() as i64) as usize]
    }

    pub fn is_rotation_of(&self, other: &Quiddity) -> bool {
        is_rotation(&self.values, &other.values)
    }

    /// Replaces the adjacent pair `(b, c)` around gap `position` by
    /// `(b+1, 1, c+1)`, yielding the quiddity of a frieze with one more
    /// line. Gap `p` lies between entries `p` and `p+1` (cyclically);
    /// the position is taken modulo the period length.
    pub fn grow(&self, position: i64) -> Quiddity {
        let m = self.m();
        let b = position.rem_euclid(m as i64) as usize;
        let c = (b + 1) % m;
        let mut values = self.values.clone();
        values[b] = &values[b] + &Rational::one();
        values[c] = &values[c] + &Rational::one();
        values.insert(b + 1, Rational::one());
        Quiddity::new(values).expect("ear insertion preserves closure")
    }

    pub fn frieze(&self) -> Frieze {
        Frieze::build(self.values.clone()).expect("quiddity already validated")
    }
}

/// A frieze materialized from its quiddity: one period of every line.
///
/// `rows[j-1][k mod m]` holds `m(k, k+j)` for lines `j = 1..=n`; by the
/// translation symmetry one period per line is the whole grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frieze {
    quiddity: Quiddity,
    rows: Vec<Vec<Rational>>,
}

impl Frieze {
    /// Builds the grid from one quiddity period by the unimodular
    /// propagation `m(k,p) = (m(k,p-1) m(k+1,p) - 1) / m(k+1,p-1)`,
    /// rejecting interior zeros (the divisors of later rows) and
    /// checking that line `n` closes to all ones.
    pub fn build(values: Vec<Rational>) -> Result<Self, FriezeError> {
        let m = values.len();
        if m < 3 {
            return Err(FriezeError::TooShort(m));
        }
        let n = m - 1;
        let reject_zeros = |rows: &[Vec<Rational>], line: usize| -> Result<(), FriezeError> {
            for k in 0..m {
                if rows[line - 1][k].is_zero() {
                    return Err(FriezeError::Degenerate {
                        k: k as i64,
                        p: k as i64 + line as i64,
                    });
                }
            }
            Ok(())
        };
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n);
        rows.push(vec![Rational::one(); m]);
        rows.push(values);
        for line in 3..=n {
            // Line `line - 2` becomes a divisor now; interior zeros on
            // it make the frieze degenerate.
            if line - 2 >= 2 {
                reject_zeros(&rows, line - 2)?;
            }
            let prev = &rows[line - 2];
            let above = &rows[line - 3];
            let next: Vec<Rational> = (0..m)
                .map(|k| {
                    (&prev[k] * &prev[(k + 1) % m] - Rational::one()) / above[(k + 1) % m].clone()
                })
                .collect();
            rows.push(next);
        }
        if n >= 3 {
            reject_zeros(&rows, n - 1)?;
        }
        for k in 0..m {
            let value = &rows[n - 1][k];
            if value != &Rational::one() {
                return Err(FriezeError::DoesNotClose {
                    line: n,
                    k: k as i64,
                    value: value.clone(),
                });
            }
        }
        let quiddity = Quiddity {
            values: rows[1].clone(),
        };
        Ok(Frieze { quiddity, rows })
    }

    /// Reconstructs the unique frieze containing the given diagonal
    /// `(m(k,k+1), ..., m(k,k+n))`, anchored so that the result's
    /// diagonal at `k = 0` equals the input.
    ///
    /// The quiddity is recovered by solving the unimodular rule across
    /// the grid: triples along the diagonal give all but the last two
    /// entries, extending onto the zero boundary gives the next, and
    /// one reconstructed neighbor diagonal gives the last.
    pub fn from_diagonal(diag: &[Rational]) -> Result<Self, FriezeError> {
        let n = diag.len();
        if n < 2 {
            return Err(FriezeError::DiagonalTooShort(n));
        }
        let one = Rational::one();
        if diag[0] != one || diag[n - 1] != one {
            return Err(FriezeError::DiagonalEndpoints);
        }
        for (j, value) in diag.iter().enumerate().take(n - 1) {
            if value.is_zero() {
                return Err(FriezeError::DiagonalDoesNotExtend { line: j + 1 });
            }
        }

        // d[j] = m(0, j) with the zero boundary d[0] = 0.
        let mut d = Vec::with_capacity(n + 1);
        d.push(Rational::zero());
        d.extend_from_slice(diag);

        let mut quiddity = Vec::with_capacity(n + 1);
        for j in 1..n {
            quiddity.push((&d[j - 1] + &d[j + 1]) / d[j].clone());
        }
        // Extending the diagonal onto the zero row above line n+1 pins
        // the next quiddity entry to the second-to-last diagonal value.
        quiddity.push(d[n - 1].clone());
        // The same rule applied to the neighbor diagonal pins the last.
        let mut prev = Rational::zero();
        let mut current = Rational::one();
        for q in quiddity.iter().take(n - 1).skip(1) {
            let next = q * &current - &prev;
            prev = current;
            current = next;
        }
        quiddity.push(current);

        let frieze = Frieze::build(quiddity).map_err(|e| FriezeError::NotFriezeDiagonal {
            reason: e.to_string(),
        })?;
        if frieze.diagonal_at(0) != diag {
            return Err(FriezeError::NotFriezeDiagonal {
                reason: "reconstructed frieze does not contain the diagonal".to_string(),
            });
        }
        Ok(frieze)
    }

    pub fn quiddity(&self) -> &Quiddity {
        &self.quiddity
    }

    pub fn into_quiddity(self) -> Quiddity {
        self.quiddity
    }

    pub fn m(&self) -> usize {
        self.quiddity.m()
    }

    /// Number of lines `n`; lines 1 and `n` are all ones.
    pub fn lines(&self) -> usize {
        self.quiddity.lines()
    }

    /// `m(k, p)` for `0 <= p - k <= n`, read from the grid.
    pub fn entry(&self, k: i64, p: i64) -> Rational {
        let line = p - k;
        assert!((0..=self.lines() as i64).contains(&line), "entry off grid");
        if line == 0 {
            return Rational::zero();
        }
        self.rows[line as usize - 1][k.rem_euclid(self.m() as i64) as usize].clone()
    }

    /// One period of `line`, starting at `k = 0`.
    pub fn line_period(&self, line: usize) -> &[Rational] {
        &self.rows[line - 1]
    }

    /// The diagonal `(m(k,k+1), ..., m(k,k+n))`.
    pub fn diagonal_at(&self, k: i64) -> Vec<Rational> {
        (1..=self.lines() as i64).map(|j| self.entry(k, k + j)).collect()
    }

    pub fn is_rotation_of(&self, other: &Frieze) -> bool {
        self.quiddity.is_rotation_of(&other.quiddity)
    }

    /// Searches two periods for a slice of ones: adjacent entries, one
    /// per line `1..=n`. Returns `(line, k)` coordinates top to bottom.
    pub fn ones_slice(&self) -> Option<Vec<(usize, i64)>> {
        let one = Rational::one();
        let width = 2 * self.m();
        let levels: Vec<Vec<bool>> = (1..=self.lines())
            .map(|line| {
                (0..width)
                    .map(|k| self.rows[line - 1][k % self.m()] == one)
                    .collect()
            })
            .collect();
        let path = downward_path(&levels)?;
        Some(
            path.iter()
                .enumerate()
                .map(|(offset, &idx)| (offset + 1, idx as i64))
                .collect(),
        )
    }

    /// Whether every interior entry of diagonal `k` divides the sum of
    /// its two diagonal neighbors. The diagonal must consist of nonzero
    /// integers.
    pub fn divisibility_along(&self, k: i64) -> Result<bool, FriezeError> {
        let diag = self.diagonal_at(k);
        for (j, value) in diag.iter().enumerate() {
            if !value.is_integer() || value.is_zero() {
                return Err(FriezeError::DivisibilityUndefined {
                    k,
                    p: k + j as i64 + 1,
                    value: value.clone(),
                });
            }
        }
        let n = self.lines();
        for j in 2..n {
            // diag[j-1] = m(k, k+j); neighbors are lines j-1 and j+1.
            let entry = diag[j - 1].numer();
            let sum = diag[j - 2].numer() + diag[j].numer();
            if !(sum % entry).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rationals(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| Rational::from_integer(v)).collect()
    }

    fn heptagon_frieze() -> Frieze {
        Frieze::build(rationals(&[1, 2, 2, 2, 2, 1, 5])).unwrap()
    }

    #[test]
    fn six_line_example_grid() {
        let f = heptagon_frieze();
        assert_eq!(f.lines(), 6);
        assert_eq!(f.line_period(1), rationals(&[1, 1, 1, 1, 1, 1, 1]).as_slice());
        assert_eq!(f.line_period(2), rationals(&[1, 2, 2, 2, 2, 1, 5]).as_slice());
        assert!(is_rotation(f.line_period(3), &rationals(&[4, 1, 3, 3, 3, 1, 4])));
        assert!(is_rotation(f.line_period(4), &rationals(&[3, 1, 4, 4, 1, 3, 3])));
        assert!(is_rotation(f.line_period(5), &rationals(&[2, 2, 1, 5, 1, 2, 2])));
        assert_eq!(f.line_period(6), rationals(&[1, 1, 1, 1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn rotation_builds_the_shifted_frieze() {
        let f = heptagon_frieze();
        let g = Frieze::build(rationals(&[5, 1, 2, 2, 2, 2, 1])).unwrap();
        assert!(f.is_rotation_of(&g));
        for line in 1..=6 {
            assert!(is_rotation(f.line_period(line), g.line_period(line)));
        }
    }

    #[test]
    fn only_the_all_ones_quiddity_of_length_3_closes() {
        for a in 1..=4i64 {
            for b in 1..=4i64 {
                for c in 1..=4i64 {
                    let result = Frieze::build(rationals(&[a, b, c]));
                    if (a, b, c) == (1, 1, 1) {
                        assert!(result.is_ok());
                    } else {
                        assert!(matches!(result, Err(FriezeError::DoesNotClose { .. })));
                    }
                }
            }
        }
    }

    #[test]
    fn rational_quiddity_closes() {
        let q = vec![
            Rational::new(1, 2),
            Rational::from_integer(4),
            Rational::new(1, 2),
            Rational::from_integer(4),
        ];
        let f = Frieze::build(q).unwrap();
        assert_eq!(f.lines(), 3);
    }

    #[test]
    fn zero_interior_entries_are_degenerate() {
        // Lines of an all-zero quiddity of period 6 would close, but the
        // interior contains zeros that later propagation divides by.
        let result = Frieze::build(rationals(&[0, 0, 0, 0, 0, 0]));
        assert!(matches!(result, Err(FriezeError::Degenerate { .. })));
    }

    #[test]
    fn diagonal_reconstruction_matches_the_example() {
        let f = heptagon_frieze();
        let diag = rationals(&[1, 1, 4, 3, 2, 1]);
        assert_eq!(f.diagonal_at(5), diag);
        let rebuilt = Frieze::from_diagonal(&diag).unwrap();
        assert!(rebuilt.is_rotation_of(&f));
        assert_eq!(rebuilt.diagonal_at(0), diag);
    }

    #[test]
    fn every_diagonal_round_trips() {
        let f = heptagon_frieze();
        for k in 0..7 {
            let diag = f.diagonal_at(k);
            let rebuilt = Frieze::from_diagonal(&diag).unwrap();
            assert!(rebuilt.is_rotation_of(&f));
            assert_eq!(rebuilt.diagonal_at(0), diag);
        }
    }

    #[test]
    fn diagonal_endpoints_are_checked() {
        assert!(matches!(
            Frieze::from_diagonal(&rationals(&[1, 2, 3])),
            Err(FriezeError::DiagonalEndpoints)
        ));
        assert!(matches!(
            Frieze::from_diagonal(&rationals(&[1])),
            Err(FriezeError::DiagonalTooShort(1))
        ));
    }

    #[test]
    fn non_closing_diagonal_is_rejected() {
        // Interior zeros cannot extend across the grid.
        let diag = rationals(&[1, 0, 1, 1]);
        assert!(matches!(
            Frieze::from_diagonal(&diag),
            Err(FriezeError::DiagonalDoesNotExtend { .. })
        ));
    }

    #[test]
    fn continuant_small_cases() {
        assert_eq!(continuant(&[]), Rational::one());
        assert_eq!(continuant(&rationals(&[7])), Rational::from_integer(7));
        assert_eq!(
            continuant(&rationals(&[1, 2, 2])),
            // 1*2*2 - 2 - 1 for the 3x3 tridiagonal determinant
            Rational::from_integer(1)
        );
    }

    #[test]
    fn continuant_reproduces_grid_entries() {
        let f = heptagon_frieze();
        let q = f.quiddity().clone();
        for k in 0..7i64 {
            for line in 1..=6i64 {
                let segment: Vec<Rational> =
                    (k..k + line - 1).map(|i| q.value(i).clone()).collect();
                assert_eq!(continuant(&segment), f.entry(k, k + line));
            }
        }
    }

    #[test]
    fn full_period_continuant_closes_to_one() {
        let f = heptagon_frieze();
        let q = f.quiddity().clone();
        for k in 0..7i64 {
            let segment: Vec<Rational> = (k..k + 5).map(|i| q.value(i).clone()).collect();
            assert_eq!(continuant(&segment), Rational::one());
            // One step past line n lands on the zero boundary.
            let extended: Vec<Rational> = (k..k + 6).map(|i| q.value(i).clone()).collect();
            assert_eq!(continuant(&extended), Rational::zero());
        }
    }

    #[test]
    fn glide_composes_to_translation() {
        for n in 2..7usize {
            for k in -5..5i64 {
                for j in 1..=n as i64 {
                    let p = k + j;
                    let (k1, p1) = glide_image(k, p, n);
                    assert_eq!(p1 - k1, n as i64 + 1 - j, "line reflects");
                    let (k2, p2) = glide_image(k1, p1, n);
                    assert_eq!((k2, p2), (k + n as i64 + 1, p + n as i64 + 1));
                }
            }
        }
    }

    #[test]
    fn glide_preserves_grid_values() {
        let f = heptagon_frieze();
        let n = f.lines();
        for k in 0..7i64 {
            for j in 1..=n as i64 {
                let p = k + j;
                let (gk, gp) = glide_image(k, p, n);
                assert_eq!(f.entry(k, p), f.entry(gk, gp));
            }
        }
    }

    #[test]
    fn bold_slice_values_reappear_under_glide() {
        let f = heptagon_frieze();
        let bold = f.diagonal_at(1);
        assert_eq!(bold, rationals(&[1, 2, 3, 4, 5, 1]));
        for (j, value) in bold.iter().enumerate() {
            let (gk, gp) = glide_image(1, 1 + j as i64 + 1, f.lines());
            assert_eq!(&f.entry(gk, gp), value);
        }
    }

    #[test]
    fn ones_slice_in_the_example() {
        let f = heptagon_frieze();
        let slice = f.ones_slice().expect("slice of ones");
        assert_eq!(slice.len(), 6);
        for &(line, k) in &slice {
            assert_eq!(f.entry(k, k + line as i64), Rational::one());
        }
    }

    #[test]
    fn triangle_frieze_is_all_ones() {
        let f = Frieze::build(rationals(&[1, 1, 1])).unwrap();
        assert!(f.ones_slice().is_some());
        for line in 1..=2 {
            assert!(f.line_period(line).iter().all(|v| v == &Rational::one()));
        }
    }

    #[test]
    fn divisibility_holds_on_the_example() {
        let f = heptagon_frieze();
        for k in 0..7 {
            assert_eq!(f.divisibility_along(k), Ok(true));
        }
    }

    #[test]
    fn divisibility_undefined_on_rational_friezes() {
        let q = vec![
            Rational::new(1, 2),
            Rational::from_integer(4),
            Rational::new(1, 2),
            Rational::from_integer(4),
        ];
        let f = Frieze::build(q).unwrap();
        assert!(matches!(
            f.divisibility_along(0),
            Err(FriezeError::DivisibilityUndefined { .. })
        ));
    }

    #[test]
    fn triple_rule_recovers_quiddity() {
        let f = heptagon_frieze();
        let q = f.quiddity().clone();
        for k in 0..7i64 {
            for p in (k + 1)..(k + 5) {
                let recovered = quiddity_from_diagonal_triple(
                    &f.entry(k, p),
                    &f.entry(k, p + 1),
                    &f.entry(k, p + 2),
                )
                .unwrap();
                assert_eq!(&recovered, q.value(p));
            }
        }
    }

    #[test]
    fn triple_rule_edge_values() {
        assert_eq!(
            quiddity_from_diagonal_triple(
                &Rational::zero(),
                &Rational::from_integer(3),
                &Rational::zero()
            )
            .unwrap(),
            Rational::zero()
        );
        assert!(matches!(
            quiddity_from_diagonal_triple(&Rational::one(), &Rational::zero(), &Rational::one()),
            Err(FriezeError::ZeroTriple)
        ));
    }

    #[test]
    fn growing_the_triangle_reaches_the_square() {
        let triangle = Quiddity::new(rationals(&[1, 1, 1])).unwrap();
        let grown = triangle.grow(0);
        let square = Quiddity::new(rationals(&[1, 2, 1, 2])).unwrap();
        assert!(grown.is_rotation_of(&square));
    }

    #[test]
    fn growing_squares_reaches_all_pentagon_quiddities() {
        let squares = [rationals(&[1, 2, 1, 2]), rationals(&[2, 1, 2, 1])];
        let mut reached: Vec<Vec<Rational>> = Vec::new();
        for values in squares {
            let q = Quiddity::new(values).unwrap();
            for gap in 0..4 {
                let grown = q.grow(gap);
                if !reached.contains(&grown.values().to_vec()) {
                    reached.push(grown.values().to_vec());
                }
            }
        }
        reached.sort_by_key(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>());
        let expected: Vec<Vec<Rational>> = (0..5)
            .map(|shift| {
                let base = [3i64, 1, 2, 2, 1];
                rationals(&(0..5).map(|i| base[(i + shift) % 5]).collect::<Vec<_>>())
            })
            .collect();
        assert_eq!(reached.len(), 5);
        for q in expected {
            assert!(reached.contains(&q), "missing pentagon quiddity {q:?}");
        }
    }

    #[test]
    fn growth_then_ear_removal_is_identity() {
        let q = Quiddity::new(rationals(&[1, 2, 2, 2, 2, 1, 5])).unwrap();
        let grown = q.grow(2);
        // The inserted entry is the 1 at index 3; removing the ear
        // undoes the insertion.
        let mut values = grown.values().to_vec();
        assert_eq!(values[3], Rational::one());
        values.remove(3);
        values[2] = &values[2] - &Rational::one();
        values[3] = &values[3] - &Rational::one();
        assert_eq!(values, q.values());
    }

    #[test]
    fn constant_diagonals_of_the_hexagon() {
        let d = constant_diagonals(5);
        let expected = [1.0, 3f64.sqrt(), 2.0, 3f64.sqrt(), 1.0];
        assert_eq!(d.len(), 5);
        for (value, want) in d.iter().zip(expected) {
            assert!((value - want).abs() < 1e-9);
        }
        assert_eq!(constant_diagonals(2), vec![1.0, 1.0]);
    }

    #[test]
    fn constant_diagonals_satisfy_the_unimodular_rule() {
        for n in 2..12 {
            let d = constant_diagonals(n);
            for r in 2..n {
                let defect = d[r - 1] * d[r - 1] - d[r - 2] * d[r] - 1.0;
                assert!(defect.abs() < 1e-9, "n={n} r={r} defect={defect}");
            }
        }
    }
}
