//! The generalized quadrilateral around an exchange pair, read off from
//! lifts to the universal cover.
//!
//! For two plain edges crossing once, the four lifted endpoints
//! `p0 < p1 < p2 < p3` on the boundary line span the quadrilateral; its
//! sides are `p0 p1`, `p1 p2`, `p2 p3` and `p0 p3`, and opposite sides pair
//! up into the two products. A side of span 1 is a boundary segment (the
//! zero object) and a side of span `n` encloses the puncture, which makes it
//! the pair of central edges at its vertex. When one of the edges is
//! central the puncture itself is the fourth corner, and for two central
//! edges the region is a punctured digon.

use serde::Serialize;

use crate::crossing::{crossing, LiftChord};
use crate::error::{Error, Result};
use crate::geometry::{modn, Tag, TaggedEdge};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum QuadSide {
    Edge(TaggedEdge),
    /// Segment from a vertex to its counterclockwise neighbor.
    Boundary(usize),
}

/// The two sets of opposite sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quadrilateral {
    pub first: Vec<QuadSide>,
    pub second: Vec<QuadSide>,
}

fn side(n: usize, x: i64, y: i64) -> Vec<QuadSide> {
    let (u, w) = (modn(x, n), modn(y, n));
    match y - x {
        1 => vec![QuadSide::Boundary(u)],
        s if s == n as i64 => vec![
            QuadSide::Edge(TaggedEdge::raw(n, u, u, Tag::Plus)),
            QuadSide::Edge(TaggedEdge::raw(n, u, u, Tag::Minus)),
        ],
        _ => vec![QuadSide::Edge(TaggedEdge::raw(n, u, w, Tag::Plus))],
    }
}

fn radius(n: usize, x: i64, tag: Tag) -> QuadSide {
    let u = modn(x, n);
    QuadSide::Edge(TaggedEdge::raw(n, u, u, tag))
}

pub fn generalized_quadrilateral(m: &TaggedEdge, other: &TaggedEdge) -> Result<Quadrilateral> {
    m.same_polygon(other)?;
    let e = crossing(m, other);
    if e != 1 {
        return Err(Error::Crossing {
            first: m.to_string(),
            second: other.to_string(),
            crossing: e,
        });
    }
    let n = m.n();
    let ni = n as i64;
    let (first, second) = match (m.is_central(), other.is_central()) {
        (false, false) => {
            let x = LiftChord::of(m);
            let y = LiftChord::of(other);
            let shift = (-2..=2)
                .map(|k| k * ni)
                .find(|s| {
                    let (c, d) = (y.lo + s, y.hi + s);
                    (x.lo < c && c < x.hi && x.hi < d) || (c < x.lo && x.lo < d && d < x.hi)
                })
                .expect("a crossing translate");
            let mut p = [x.lo, x.hi, y.lo + shift, y.hi + shift];
            p.sort_unstable();
            let mut first = side(n, p[0], p[1]);
            first.extend(side(n, p[2], p[3]));
            let mut second = side(n, p[1], p[2]);
            second.extend(side(n, p[0], p[3]));
            (first, second)
        }
        (true, true) => {
            let a = m.start() as i64;
            let c = a + (other.start() as i64 - a).rem_euclid(ni);
            (side(n, a, c), side(n, c, a + ni))
        }
        _ => {
            let (ray, chord) = if m.is_central() { (m, other) } else { (other, m) };
            let y = LiftChord::of(chord);
            let r = (-2..=2)
                .map(|k| ray.start() as i64 + k * ni)
                .find(|&r| y.lo < r && r < y.hi)
                .expect("a crossing translate");
            let mut first = side(n, y.lo, r);
            first.push(radius(n, y.hi, ray.tag()));
            let mut second = side(n, r, y.hi);
            second.push(radius(n, y.lo, ray.tag()));
            (first, second)
        }
    };
    Ok(Quadrilateral { first, second })
}

impl Quadrilateral {
    /// Sides that are actual edges, as sorted multisets.
    pub fn edge_factors(&self) -> (Vec<TaggedEdge>, Vec<TaggedEdge>) {
        let edges = |v: &[QuadSide]| {
            let mut out: Vec<TaggedEdge> = v
                .iter()
                .filter_map(|s| match s {
                    QuadSide::Edge(e) => Some(*e),
                    QuadSide::Boundary(_) => None,
                })
                .collect();
            out.sort();
            out
        };
        (edges(&self.first), edges(&self.second))
    }
}
