//! ASCII brick-wall rendering.
//!
//! Rows alternate a half-cell offset, reproducing the staggered layout
//! the grids are displayed in: the first row is flush, the second is
//! indented half a cell, and so on. Output is plain ASCII with LF
//! newlines only, so rendered grids diff cleanly as golden files.

use crate::rational::Rational;

#[derive(Debug, Clone, Copy)]
pub struct RenderOptions {
    /// Minimum width of one cell in characters; rounded up to keep the
    /// half-cell offset whole, and auto-expanded so that no value is
    /// ever truncated.
    pub cell_width: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { cell_width: 4 }
    }
}

/// Renders rows of exact values.
pub fn render_rows(rows: &[Vec<Rational>], options: RenderOptions) -> String {
    let text_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|row| row.iter().map(Rational::to_string).collect())
        .collect();
    render_text_rows(&text_rows, options)
}

/// Renders pre-formatted cells; exposed for float-valued grids.
pub fn render_text_rows(rows: &[Vec<String>], options: RenderOptions) -> String {
    let widest = rows
        .iter()
        .flatten()
        .map(String::len)
        .max()
        .unwrap_or(0);
    let mut cell = options.cell_width.max(widest + 1).max(2);
    if cell % 2 != 0 {
        cell += 1;
    }

    let mut out = String::new();
    for (index, row) in rows.iter().enumerate() {
        let mut line = String::new();
        if index % 2 == 1 {
            line.push_str(&" ".repeat(cell / 2));
        }
        for value in row {
            line.push_str(&" ".repeat(cell - value.len()));
            line.push_str(value);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|row| row.iter().map(|&v| Rational::from_integer(v)).collect())
            .collect()
    }

    #[test]
    fn rows_alternate_half_cell_offsets() {
        let text = render_rows(
            &grid(&[&[0, 0, 0], &[1, 2, 3], &[4, 5, 6]]),
            RenderOptions { cell_width: 4 },
        );
        assert_eq!(text, "   0   0   0\n     1   2   3\n   4   5   6\n");
    }

    #[test]
    fn single_row_has_no_offset() {
        let text = render_rows(&grid(&[&[7, 8]]), RenderOptions { cell_width: 4 });
        assert_eq!(text, "   7   8\n");
    }

    #[test]
    fn cells_expand_for_wide_values() {
        let rows = vec![vec![Rational::new(-355, 113)], vec![Rational::one()]];
        let text = render_rows(&rows, RenderOptions { cell_width: 2 });
        assert!(text.contains("-355/113"));
        for line in text.lines() {
            assert!(line.len() <= 10 + 5);
        }
    }

    #[test]
    fn output_is_stable() {
        let rows = grid(&[&[1, 2], &[3, 4]]);
        let a = render_rows(&rows, RenderOptions::default());
        let b = render_rows(&rows, RenderOptions::default());
        assert_eq!(a, b);
        assert!(!a.contains('\r'));
    }
}
