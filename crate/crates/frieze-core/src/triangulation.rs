//! Triangulations of convex polygons and their quiddity sequences.
//!
//! Vertices are labeled `0..m` around the polygon; a triangulation is
//! the set of its `m - 3` pairwise non-crossing diagonals. The quiddity
//! of a triangulation counts the triangles incident to each vertex,
//! which is exactly one more than the vertex's diagonal degree. Ear
//! removal inverts the map: a vertex counting one triangle is an ear,
//! and peeling ears reconstructs a triangulation from its counts.

use std::collections::HashMap;

use thiserror::Error;

use crate::rational::Rational;

/// Enumeration is capped here; the largest case still enumerates in
/// well under a second.
pub const MAX_ENUMERATION_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("vertex count must be in 3..={MAX_ENUMERATION_VERTICES}, got {0}")]
    VertexCountRange(usize),
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("({0},{1}) is not a diagonal of the {2}-gon")]
    InvalidDiagonal(usize, usize, usize),
    #[error("diagonals ({0},{1}) and ({2},{3}) cross")]
    CrossingDiagonals(usize, usize, usize, usize),
    #[error("a triangulation of the {m}-gon has {expected} diagonals, got {actual}")]
    WrongDiagonalCount {
        m: usize,
        expected: usize,
        actual: usize,
    },
    #[error("not a quiddity sequence: {0}")]
    NotAQuiddity(String),
}

/// A triangulation of the convex polygon with vertices `0..m`, stored
/// as its sorted diagonal set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triangulation {
    vertex_count: usize,
    diagonals: Vec<(usize, usize)>,
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    let ((i, j), (k, l)) = (a, b);
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

impl Triangulation {
    /// Validates the diagonal set: each pair `(i, j)` with `i < j` must
    /// be a true diagonal, no two may cross, and there must be exactly
    /// `m - 3` of them (which forces a full triangulation).
    pub fn new(
        vertex_count: usize,
        mut diagonals: Vec<(usize, usize)>,
    ) -> Result<Self, TriangulationError> {
        let m = vertex_count;
        if m < 3 {
            return Err(TriangulationError::TooFewVertices(m));
        }
        diagonals.sort_unstable();
        diagonals.dedup();
        for &(i, j) in &diagonals {
            let is_diagonal = i < j && j < m && j - i >= 2 && (i, j) != (0, m - 1);
            if !is_diagonal {
                return Err(TriangulationError::InvalidDiagonal(i, j, m));
            }
        }
        if diagonals.len() != m - 3 {
            return Err(TriangulationError::WrongDiagonalCount {
                m,
                expected: m - 3,
                actual: diagonals.len(),
            });
        }
        for (a, &da) in diagonals.iter().enumerate() {
            for &db in diagonals.iter().skip(a + 1) {
                if crosses(da, db) {
                    return Err(TriangulationError::CrossingDiagonals(
                        da.0, da.1, db.0, db.1,
                    ));
                }
            }
        }
        Ok(Triangulation {
            vertex_count: m,
            diagonals,
        })
    }

    /// All triangulations of the convex `m`-gon, in lexicographic order
    /// of their diagonal sets. The count is the Catalan number
    /// `C(m - 2)`.
    pub fn enumerate(m: usize) -> Result<Vec<Triangulation>, TriangulationError> {
        if !(3..=MAX_ENUMERATION_VERTICES).contains(&m) {
            return Err(TriangulationError::VertexCountRange(m));
        }
        let mut memo: HashMap<(usize, usize), Vec<Vec<(usize, usize)>>> = HashMap::new();
        let mut sets = interval_triangulations(0, m - 1, &mut memo);
        for set in &mut sets {
            set.sort_unstable();
        }
        sets.sort_unstable();
        Ok(sets
            .into_iter()
            .map(|diagonals| Triangulation {
                vertex_count: m,
                diagonals,
            })
            .collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    /// Per-vertex incident-triangle counts. In a full triangulation a
    /// vertex meets one more triangle than it meets diagonals, so the
    /// counts sum to `3(m - 2)`.
    pub fn quiddity(&self) -> Vec<u64> {
        let mut counts = vec![1u64; self.vertex_count];
        for &(i, j) in &self.diagonals {
            counts[i] += 1;
            counts[j] += 1;
        }
        counts
    }

    pub fn quiddity_rationals(&self) -> Vec<Rational> {
        self.quiddity()
            .into_iter()
            .map(|c| Rational::from_integer(c as i64))
            .collect()
    }

    /// Rebuilds a triangulation from triangle counts by repeated ear
    /// removal: a vertex counting one triangle is an ear; removing it
    /// joins its neighbors by a diagonal and decrements their counts.
    /// The lowest-numbered ear is removed first, so the result is
    /// deterministic.
    pub fn from_quiddity(q: &[u64]) -> Result<Self, TriangulationError> {
        let m = q.len();
        if m < 3 {
            return Err(TriangulationError::NotAQuiddity(format!(
                "needs at least 3 counts, got {m}"
            )));
        }
        let sum: u64 = q.iter().sum();
        if sum != 3 * (m as u64 - 2) {
            return Err(TriangulationError::NotAQuiddity(format!(
                "counts sum to {sum}, a triangulated {m}-gon needs {}",
                3 * (m - 2)
            )));
        }
        if let Some(v) = q.iter().position(|&c| c == 0) {
            return Err(TriangulationError::NotAQuiddity(format!(
                "vertex {v} touches no triangle"
            )));
        }

        let mut counts = q.to_vec();
        let mut next = (0..m).map(|v| (v + 1) % m).collect::<Vec<_>>();
        let mut prev = (0..m).map(|v| (v + m - 1) % m).collect::<Vec<_>>();
        let mut active = vec![true; m];
        let mut remaining = m;
        let mut diagonals = Vec::with_capacity(m - 3);

        while remaining > 3 {
            let ear = (0..m)
                .find(|&v| active[v] && counts[v] == 1)
                .ok_or_else(|| {
                    TriangulationError::NotAQuiddity(
                        "no ear (entry equal to 1) among remaining vertices".to_string(),
                    )
                })?;
            let (u, w) = (prev[ear], next[ear]);
            for neighbor in [u, w] {
                if counts[neighbor] <= 1 {
                    return Err(TriangulationError::NotAQuiddity(format!(
                        "removing ear {ear} leaves vertex {neighbor} with no triangles"
                    )));
                }
                counts[neighbor] -= 1;
            }
            let chord = (u.min(w), u.max(w));
            let polygon_edge = chord.1 - chord.0 == 1 || chord == (0, m - 1);
            if !polygon_edge {
                diagonals.push(chord);
            }
            active[ear] = false;
            next[u] = w;
            prev[w] = u;
            remaining -= 1;
        }

        if (0..m).any(|v| active[v] && counts[v] != 1) {
            return Err(TriangulationError::NotAQuiddity(
                "final triangle counts do not close".to_string(),
            ));
        }
        Triangulation::new(m, diagonals)
    }
}

/// Diagonal sets triangulating the sub-polygon on vertices `i..=j`,
/// closed by the chord `(i, j)`. The triangle on that chord picks an
/// apex `v` strictly between `i` and `j`, splitting the interval.
fn interval_triangulations(
    i: usize,
    j: usize,
    memo: &mut HashMap<(usize, usize), Vec<Vec<(usize, usize)>>>,
) -> Vec<Vec<(usize, usize)>> {
    if j - i < 2 {
        return vec![Vec::new()];
    }
    if let Some(cached) = memo.get(&(i, j)) {
        return cached.clone();
    }
    let mut result = Vec::new();
    for apex in (i + 1)..j {
        let left = interval_triangulations(i, apex, memo);
        let right = interval_triangulations(apex, j, memo);
        for l in &left {
            for r in &right {
                let mut set = l.clone();
                set.extend_from_slice(r);
                if apex - i >= 2 {
                    set.push((i, apex));
                }
                if j - apex >= 2 {
                    set.push((apex, j));
                }
                result.push(set);
            }
        }
    }
    memo.insert((i, j), result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_square_pentagon_counts() {
        assert_eq!(Triangulation::enumerate(3).unwrap().len(), 1);
        assert_eq!(Triangulation::enumerate(4).unwrap().len(), 2);
        assert_eq!(Triangulation::enumerate(5).unwrap().len(), 5);
    }

    #[test]
    fn enumeration_bounds_are_enforced() {
        assert!(matches!(
            Triangulation::enumerate(2),
            Err(TriangulationError::VertexCountRange(2))
        ));
        assert!(matches!(
            Triangulation::enumerate(13),
            Err(TriangulationError::VertexCountRange(13))
        ));
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        for m in 3..=8 {
            let all = Triangulation::enumerate(m).unwrap();
            let mut sets: Vec<_> = all.iter().map(|t| t.diagonals().to_vec()).collect();
            let sorted = {
                let mut s = sets.clone();
                s.sort();
                s
            };
            assert_eq!(sets, sorted, "m={m} enumeration must be lexicographic");
            sets.dedup();
            assert_eq!(sets.len(), all.len(), "m={m} enumeration has duplicates");
            for t in &all {
                Triangulation::new(m, t.diagonals().to_vec()).unwrap();
            }
        }
    }

    #[test]
    fn quiddity_of_small_polygons() {
        let triangle = Triangulation::new(3, vec![]).unwrap();
        assert_eq!(triangle.quiddity(), vec![1, 1, 1]);
        let square = Triangulation::new(4, vec![(0, 2)]).unwrap();
        assert_eq!(square.quiddity(), vec![2, 1, 2, 1]);
    }

    #[test]
    fn quiddity_sums_to_three_times_triangle_count() {
        for m in 3..=9 {
            for t in Triangulation::enumerate(m).unwrap() {
                let sum: u64 = t.quiddity().iter().sum();
                assert_eq!(sum, 3 * (m as u64 - 2));
            }
        }
    }

    #[test]
    fn heptagon_example_quiddity_is_realized() {
        let target = vec![1u64, 2, 2, 2, 2, 1, 5];
        let found = Triangulation::enumerate(7)
            .unwrap()
            .into_iter()
            .find(|t| t.quiddity() == target);
        assert!(found.is_some(), "quiddity of the 6-line example frieze");
    }

    #[test]
    fn from_quiddity_round_trips() {
        assert_eq!(
            Triangulation::from_quiddity(&[1, 1, 1]).unwrap(),
            Triangulation::new(3, vec![]).unwrap()
        );
        assert_eq!(
            Triangulation::from_quiddity(&[2, 1, 2, 1]).unwrap(),
            Triangulation::new(4, vec![(0, 2)]).unwrap()
        );
        for m in 3..=9 {
            for t in Triangulation::enumerate(m).unwrap() {
                let rebuilt = Triangulation::from_quiddity(&t.quiddity()).unwrap();
                assert_eq!(rebuilt.quiddity(), t.quiddity());
            }
        }
    }

    #[test]
    fn heptagon_fan_reconstruction() {
        let t = Triangulation::from_quiddity(&[1, 2, 2, 2, 2, 1, 5]).unwrap();
        assert_eq!(t.quiddity(), vec![1, 2, 2, 2, 2, 1, 5]);
        assert_eq!(t.diagonals().len(), 4);
    }

    #[test]
    fn bad_quiddities_are_rejected() {
        assert!(Triangulation::from_quiddity(&[1, 1, 1, 1]).is_err());
        assert!(Triangulation::from_quiddity(&[2, 2, 2, 2, 2, 2]).is_err());
        assert!(Triangulation::from_quiddity(&[1, 1]).is_err());
        assert!(Triangulation::from_quiddity(&[3, 0, 2, 2, 2]).is_err());
    }

    #[test]
    fn validation_rejects_bad_sets() {
        assert!(matches!(
            Triangulation::new(4, vec![(0, 1)]),
            Err(TriangulationError::InvalidDiagonal(0, 1, 4))
        ));
        assert!(matches!(
            Triangulation::new(4, vec![(0, 3)]),
            Err(TriangulationError::InvalidDiagonal(0, 3, 4))
        ));
        assert!(matches!(
            Triangulation::new(6, vec![(0, 2), (1, 3), (3, 5)]),
            Err(TriangulationError::CrossingDiagonals(0, 2, 1, 3))
        ));
        assert!(matches!(
            Triangulation::new(5, vec![(0, 2)]),
            Err(TriangulationError::WrongDiagonalCount { .. })
        ));
    }
}
