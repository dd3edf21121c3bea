//! Periodic sequences indexed by arbitrary integers.

use crate::rational::Rational;

/// One period of an infinite periodic sequence. Index `i` refers to
/// `period[i mod len]`, for any integer `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicSeq {
    values: Vec<Rational>,
}

impl PeriodicSeq {
    /// The period must be non-empty.
    pub fn new(values: Vec<Rational>) -> Self {
        assert!(!values.is_empty(), "empty period");
        PeriodicSeq { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: i64) -> &Rational {
        &self.values[i.rem_euclid(self.values.len() as i64) as usize]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Sum of `count` consecutive values starting at index `start`.
    pub fn window_sum(&self, start: i64, count: u64) -> Rational {
        let len = self.values.len() as u64;
        let period_sum: Rational = self.values.iter().sum();
        let mut total = Rational::zero();
        let full = count / len;
        if full > 0 {
            total = total + period_sum * Rational::from_integer(full as i64);
        }
        for offset in 0..(count % len) {
            total = total + self.get(start + (full * len) as i64 + offset as i64);
        }
        total
    }
}

/// Whether `b` is a cyclic rotation of `a`.
pub fn is_rotation<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    (0..n).any(|shift| (0..n).all(|i| a[(i + shift) % n] == b[i]))
}

/// Leftmost top-to-bottom path through the `true` cells of a staggered
/// grid, where a cell at `(level, idx)` connects downward to
/// `(level + 1, idx - 1)` and `(level + 1, idx)`. Both slice searches
/// (zeros in additive tilings, ones in friezes) reduce to this.
pub(crate) fn downward_path(levels: &[Vec<bool>]) -> Option<Vec<usize>> {
    let width = levels.first()?.len();
    let mut parents: Vec<Vec<Option<usize>>> = Vec::with_capacity(levels.len());
    for level in levels {
        let prev = parents.last();
        let row = (0..width)
            .map(|idx| {
                if !level[idx] {
                    return None;
                }
                match prev {
                    None => Some(idx),
                    Some(prev_row) => {
                        if prev_row[idx].is_some() {
                            Some(idx)
                        } else if idx + 1 < width && prev_row[idx + 1].is_some() {
                            Some(idx + 1)
                        } else {
                            None
                        }
                    }
                }
            })
            .collect::<Vec<_>>();
        parents.push(row);
    }
    let last = parents.last()?;
    let mut idx = (0..width).find(|&i| last[i].is_some())?;
    let mut path = vec![0usize; levels.len()];
    for depth in (0..levels.len()).rev() {
        path[depth] = idx;
        idx = parents[depth][idx].expect("reachable chain");
    }
    Some(path)
}
