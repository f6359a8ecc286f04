//! Crossing numbers of tagged edges.
//!
//! The boundary of the punctured polygon lifts to the integer line in the
//! universal cover of the punctured disk, vertex `v` lifting to `v + k n`.
//! A plain edge `M_{a,b}` lifts to the chord `(a, a + ((b - a) mod n))`; a
//! central edge lifts to the family of rays at `a + k n`. Two arcs in minimal
//! position meet once for every translate whose endpoints strictly interleave
//! with the fixed lift.

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{enumerate_tagged_edges, TaggedEdge};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftKind {
    PlainChord,
    /// Rays to the puncture at `lo + k n`; `hi` is unused.
    CentralRay,
}

/// An arc in the universal cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftChord {
    pub lo: i64,
    pub hi: i64,
    pub kind: LiftKind,
}

impl LiftChord {
    /// Canonical lift of `m` starting at `m.start()`.
    pub fn of(m: &TaggedEdge) -> LiftChord {
        let n = m.n() as i64;
        let lo = m.start() as i64;
        if m.is_central() {
            LiftChord { lo, hi: lo, kind: LiftKind::CentralRay }
        } else {
            let hi = lo + (m.end() as i64 - lo).rem_euclid(n);
            LiftChord { lo, hi, kind: LiftKind::PlainChord }
        }
    }

    fn shifted(self, by: i64) -> LiftChord {
        LiftChord { lo: self.lo + by, hi: self.hi + by, ..self }
    }
}

fn interleaves(x: LiftChord, y: LiftChord) -> bool {
    (x.lo < y.lo && y.lo < x.hi && x.hi < y.hi) || (y.lo < x.lo && x.lo < y.hi && y.hi < x.hi)
}

/// Plain chords have span at most `n - 1`, so only translates with
/// `|k| <= 2` can meet the fixed lift.
const TRANSLATES: std::ops::RangeInclusive<i64> = -2..=2;

pub(crate) fn crossing(m: &TaggedEdge, other: &TaggedEdge) -> u8 {
    let n = m.n() as i64;
    let (x, y) = (LiftChord::of(m), LiftChord::of(other));
    match (x.kind, y.kind) {
        (LiftKind::PlainChord, LiftKind::PlainChord) => TRANSLATES
            .filter(|k| interleaves(x, y.shifted(k * n)))
            .count() as u8,
        (LiftKind::CentralRay, LiftKind::PlainChord) => ray_hits(x.lo, y, n),
        (LiftKind::PlainChord, LiftKind::CentralRay) => ray_hits(y.lo, x, n),
        (LiftKind::CentralRay, LiftKind::CentralRay) => {
            u8::from(m.start() != other.start() && m.tag() != other.tag())
        }
    }
}

fn ray_hits(ray: i64, chord: LiftChord, n: i64) -> u8 {
    TRANSLATES
        .map(|k| ray + k * n)
        .filter(|&r| chord.lo < r && r < chord.hi)
        .count() as u8
}

/// The crossing number `e(M, N)`.
pub fn crossing_number(m: &TaggedEdge, other: &TaggedEdge) -> Result<u8> {
    m.same_polygon(other)?;
    Ok(crossing(m, other))
}

/// `e` over all pairs, rows and columns in enumeration order.
#[derive(Clone, Debug, Serialize)]
pub struct CrossingMatrix {
    pub n: usize,
    pub edges: Vec<TaggedEdge>,
    pub entries: Vec<Vec<u8>>,
}

pub fn crossing_matrix(n: usize) -> Result<CrossingMatrix> {
    let edges = enumerate_tagged_edges(n)?;
    let entries = edges
        .iter()
        .map(|m| edges.iter().map(|x| crossing(m, x)).collect())
        .collect();
    Ok(CrossingMatrix { n, edges, entries })
}

impl CrossingMatrix {
    pub fn get(&self, m: &TaggedEdge, other: &TaggedEdge) -> u8 {
        self.entries[m.index()][other.index()]
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.edges.len();
        (0..k).all(|i| (0..k).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "legend": self.edges,
            "entries": self.entries,
        })
    }

    /// Fixed-width grid with the edge legend along both axes.
    pub fn to_text(&self) -> String {
        let labels: Vec<String> = self.edges.iter().map(|m| m.to_string()).collect();
        let w = labels.iter().map(|l| l.len()).max().unwrap_or(1).max(1);
        let mut out = format!("{:>w$} ", "", w = w);
        for l in &labels {
            out.push_str(&format!(" {l:>w$}"));
        }
        out.push('\n');
        for (l, row) in labels.iter().zip(&self.entries) {
            out.push_str(&format!("{l:>w$} "));
            for v in row {
                let cell = if *v == 0 { ".".to_string() } else { v.to_string() };
                out.push_str(&format!(" {cell:>w$}"));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Tag;

    fn e(n: usize, s: &str) -> TaggedEdge {
        TaggedEdge::parse(n, s).unwrap()
    }

    #[test]
    fn central_rules() {
        let n = 6;
        assert_eq!(crossing(&e(n, "2|+"), &e(n, "2|-")), 0);
        assert_eq!(crossing(&e(n, "2|+"), &e(n, "4|-")), 1);
        assert_eq!(crossing(&e(n, "2|+"), &e(n, "4|+")), 0);
        // ray never crosses a chord incident to its vertex
        for m in enumerate_tagged_edges(n).unwrap() {
            if !m.is_central() {
                for v in [m.start(), m.end()] {
                    for tag in [Tag::Plus, Tag::Minus] {
                        let c = TaggedEdge::central(n, v, tag).unwrap();
                        assert_eq!(crossing(&c, &m), 0, "{c} vs {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn plain_examples() {
        assert_eq!(crossing(&e(5, "0-4"), &e(5, "3-2")), 2);
        assert_eq!(crossing(&e(4, "1-3"), &e(4, "3-1")), 0);
        assert_eq!(crossing(&e(8, "0-4"), &e(8, "2-6")), 1);
        assert_eq!(crossing(&e(8, "0-4"), &e(8, "4-0")), 0);
        assert_eq!(crossing(&e(8, "0-3"), &e(8, "1|-")), 1);
        assert_eq!(crossing(&e(8, "0-3"), &e(8, "3|-")), 0);
    }

    #[test]
    fn mismatched_polygons_rejected() {
        assert!(crossing_number(&e(4, "0-2"), &e(5, "0-2")).is_err());
    }

    #[test]
    fn n3_row_sums_by_hand() {
        // Each chord a-(a+2) crosses the other two chords once and both rays
        // at a+1: row sum 4. Each ray crosses the chord around its vertex and
        // the two rays of opposite tag at the other vertices: row sum 3.
        let m = crossing_matrix(3).unwrap();
        for (edge, row) in m.edges.iter().zip(&m.entries) {
            let sum: u32 = row.iter().map(|&v| u32::from(v)).sum();
            assert_eq!(sum, if edge.is_central() { 3 } else { 4 }, "{edge}");
        }
    }

    #[test]
    fn matrix_shape() {
        for n in 3..=8 {
            let m = crossing_matrix(n).unwrap();
            assert!(m.is_symmetric());
            for i in 0..n * n {
                assert_eq!(m.entries[i][i], 0);
            }
            assert!(m.entries.iter().flatten().all(|&v| v <= 2));
        }
        let text = crossing_matrix(3).unwrap().to_text();
        assert_eq!(text.lines().count(), 10);
    }
}
