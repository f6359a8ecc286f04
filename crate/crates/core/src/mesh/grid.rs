//! Staggered rendering of a function on `ℤQ`, one row per level.
//!
//! Rows from top to bottom hold level `n`, then levels `n - 2` and `n - 1`
//! interleaved, then levels `n - 3` down to 1. Level `j <= n - 2` at column
//! `i` goes to array column `2i + j - 4`, both central levels to
//! `2i + n - 5`. The source sits at `ℤQ` column 1.

use std::fmt;

use serde::Serialize;

use crate::geometry::TaggedEdge;

use super::MeshVertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GridCell {
    Blank,
    Value(u8),
    /// A copy of the source object.
    Source(u8),
}

#[derive(Clone, Debug, Serialize)]
pub struct HomGrid {
    pub n: usize,
    pub source: TaggedEdge,
    pub rows: Vec<Vec<GridCell>>,
}

fn array_column(n: usize, i: i64, j: usize) -> i64 {
    if j <= n - 2 {
        2 * i + j as i64 - 4
    } else {
        2 * i + n as i64 - 5
    }
}

fn row_levels(n: usize, r: usize) -> Vec<usize> {
    match r {
        0 => vec![n],
        1 => vec![n - 2, n - 1],
        _ => vec![n - 1 - r],
    }
}

/// Evaluates `value` on every cell of a `n - 1` by `width` grid.
pub fn hom_grid(source: &TaggedEdge, width: usize, value: impl Fn(&TaggedEdge) -> u8) -> HomGrid {
    let n = source.n();
    let k = source.start() as i64;
    let mut rows = vec![vec![GridCell::Blank; width]; n - 1];
    for (r, row) in rows.iter_mut().enumerate() {
        for j in row_levels(n, r) {
            let mut i = (-array_column(n, 0, j)).div_euclid(2) - 1;
            loop {
                let c = array_column(n, i, j);
                if c >= width as i64 {
                    break;
                }
                if c >= 0 {
                    let edge = MeshVertex::from_zq(n, i, j).edge.tau_pow(-k);
                    let v = value(&edge);
                    row[c as usize] = if edge == *source {
                        GridCell::Source(v)
                    } else {
                        GridCell::Value(v)
                    };
                }
                i += 1;
            }
        }
    }
    HomGrid {
        n,
        source: *source,
        rows,
    }
}

impl fmt::Display for HomGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: String = row
                .iter()
                .map(|c| match c {
                    GridCell::Blank => "   ".to_string(),
                    GridCell::Value(0) => " . ".to_string(),
                    GridCell::Value(v) => format!(" {v} "),
                    GridCell::Source(v) => format!("[{v}]"),
                })
                .collect();
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_is_staggered() {
        let n = 5;
        let m = TaggedEdge::parse(n, "0-3").unwrap();
        let g = hom_grid(&m, 4 * n - 1, |_| 1);
        assert_eq!(g.rows.len(), n - 1);
        // every array column holds exactly one cell in the merged row and
        // alternates in the others
        for (r, row) in g.rows.iter().enumerate() {
            let filled = row.iter().filter(|c| **c != GridCell::Blank).count();
            if r == 1 {
                assert_eq!(filled, row.len());
            } else {
                assert!(filled == row.len() / 2 || filled == row.len() / 2 + 1);
            }
        }
        // the source appears at ℤQ column 1 and one period later
        let sources = g
            .rows
            .iter()
            .flatten()
            .filter(|c| matches!(c, GridCell::Source(_)))
            .count();
        assert_eq!(sources, 2);
    }
}
