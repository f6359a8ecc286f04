//! The punctured n-gon and its tagged edges.
//!
//! Vertices are the integers `0..n` in counterclockwise order, so the
//! counterclockwise neighbor of `v` is `(v + 1) mod n`. A tagged edge is
//! either a plain edge `a-b` (with `a != b` and `b` not the counterclockwise
//! neighbor of `a`) standing for the homotopy class of the boundary path from
//! `a` to `b`, or a central edge `a|+` / `a|-` running from `a` to the
//! puncture with a tag.
//!
//! Enumeration order (used for every table and report): plain edges sorted by
//! `(start, |delta|)`, followed by central edges sorted by `(vertex, tag)` with
//! `+` before `-`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::PolygonTooSmall(n));
    }
    if n > u16::MAX as usize / 2 {
        return Err(Error::Invalid(format!("n = {n} is too large")));
    }
    Ok(())
}

#[inline]
pub(crate) fn modn(x: i64, n: usize) -> usize {
    x.rem_euclid(n as i64) as usize
}

/// Number of vertices on the counterclockwise boundary path from `a` to `b`,
/// both ends included; `n + 1` when `a == b`.
pub fn delta_len(n: usize, a: usize, b: usize) -> usize {
    if a == b {
        n + 1
    } else {
        modn(b as i64 - a as i64 - 1, n) + 2
    }
}

/// The tag of an edge. Plain edges always carry `Plus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Plus,
    Minus,
}

impl Tag {
    pub fn sign(self) -> i64 {
        match self {
            Tag::Plus => 1,
            Tag::Minus => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Tag {
        if sign >= 0 {
            Tag::Plus
        } else {
            Tag::Minus
        }
    }

    pub fn flipped(self) -> Tag {
        match self {
            Tag::Plus => Tag::Minus,
            Tag::Minus => Tag::Plus,
        }
    }
}

/// One of the `n²` indecomposable objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TaggedEdge {
    n: u16,
    start: u16,
    end: u16,
    tag: Tag,
}

impl TaggedEdge {
    /// Plain edge from `a` to `b`, `a != b`.
    pub fn plain(n: usize, a: usize, b: usize) -> Result<Self> {
        check_n(n)?;
        for v in [a, b] {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if a == b {
            return Err(Error::Invalid(format!(
                "plain edge needs distinct endpoints; use {a}|+ or {a}|- for central edges"
            )));
        }
        if delta_len(n, a, b) < 3 {
            return Err(Error::NeighborChord { start: a, end: b });
        }
        Ok(Self::raw(n, a, b, Tag::Plus))
    }

    /// Central edge from `a` to the puncture.
    pub fn central(n: usize, a: usize, tag: Tag) -> Result<Self> {
        check_n(n)?;
        if a >= n {
            return Err(Error::VertexOutOfRange { vertex: a, n });
        }
        Ok(Self::raw(n, a, a, tag))
    }

    /// Edge from its endpoints and tag; the tag is ignored for plain edges.
    pub fn new(n: usize, a: usize, b: usize, tag: Tag) -> Result<Self> {
        if a == b {
            Self::central(n, a, tag)
        } else {
            Self::plain(n, a, b)
        }
    }

    #[inline]
    pub(crate) fn raw(n: usize, a: usize, b: usize, tag: Tag) -> Self {
        TaggedEdge {
            n: n as u16,
            start: a as u16,
            end: b as u16,
            tag: if a == b { tag } else { Tag::Plus },
        }
    }

    /// Parses the compact `"a-b"`, `"a|+"`, `"a|-"` notation.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let syntax = || Error::EdgeSyntax(s.to_string());
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| syntax());
        if let Some((a, t)) = s.split_once('|') {
            let tag = match t.trim() {
                "+" | "+1" => Tag::Plus,
                "-" | "-1" => Tag::Minus,
                _ => return Err(syntax()),
            };
            Self::central(n, num(a)?, tag)
        } else if let Some((a, b)) = s.split_once('-') {
            Self::plain(n, num(a)?, num(b)?)
        } else {
            Err(syntax())
        }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }
    pub fn start(&self) -> usize {
        self.start as usize
    }
    pub fn end(&self) -> usize {
        self.end as usize
    }
    pub fn tag(&self) -> Tag {
        self.tag
    }
    pub fn is_central(&self) -> bool {
        self.start == self.end
    }

    pub fn delta_len(&self) -> usize {
        delta_len(self.n(), self.start(), self.end())
    }

    /// Index in the deterministic enumeration order.
    pub fn index(&self) -> usize {
        let n = self.n();
        if self.is_central() {
            n * (n - 2) + 2 * self.start() + usize::from(self.tag == Tag::Minus)
        } else {
            self.start() * (n - 2) + self.delta_len() - 3
        }
    }

    /// Inverse of [`TaggedEdge::index`].
    pub fn from_index(n: usize, index: usize) -> Result<Self> {
        check_n(n)?;
        let plain = n * (n - 2);
        if index < plain {
            let a = index / (n - 2);
            let len = index % (n - 2) + 3;
            Ok(Self::raw(n, a, (a + len - 1) % n, Tag::Plus))
        } else if index < n * n {
            let r = index - plain;
            let tag = if r.is_multiple_of(2) { Tag::Plus } else { Tag::Minus };
            Ok(Self::raw(n, r / 2, r / 2, tag))
        } else {
            Err(Error::Invalid(format!("edge index {index} out of range for n = {n}")))
        }
    }

    pub(crate) fn same_polygon(&self, other: &TaggedEdge) -> Result<()> {
        if self.n != other.n {
            Err(Error::PolygonMismatch(self.n(), other.n()))
        } else {
            Ok(())
        }
    }

    /// Targets of all elementary moves out of this edge.
    ///
    /// With `c`, `d` the counterclockwise neighbors of `a`, `b`: a plain edge
    /// moves to `M_{c,b}` when that is still an edge (`|delta| >= 4`), and to
    /// `M_{a,d}` when `|delta| < n`, or to both central edges at `a` when
    /// `|delta| = n`. A central edge `M_{a,a}` moves to `M_{c,a}`.
    pub fn elementary_moves(&self) -> Vec<TaggedEdge> {
        let n = self.n();
        let (a, b) = (self.start(), self.end());
        let c = (a + 1) % n;
        if self.is_central() {
            return vec![Self::raw(n, c, a, Tag::Plus)];
        }
        let d = (b + 1) % n;
        let len = self.delta_len();
        let mut out = Vec::with_capacity(3);
        if len >= 4 {
            out.push(Self::raw(n, c, b, Tag::Plus));
        }
        if len < n {
            out.push(Self::raw(n, a, d, Tag::Plus));
        } else {
            out.push(Self::raw(n, a, a, Tag::Plus));
            out.push(Self::raw(n, a, a, Tag::Minus));
        }
        out
    }

    /// The translation: both endpoints one step clockwise, central tags negated.
    pub fn tau(&self) -> TaggedEdge {
        self.tau_pow(1)
    }

    pub fn tau_inv(&self) -> TaggedEdge {
        self.tau_pow(-1)
    }

    /// `tau^k` for any integer `k`.
    pub fn tau_pow(&self, k: i64) -> TaggedEdge {
        let n = self.n();
        let a = modn(self.start() as i64 - k, n);
        let b = modn(self.end() as i64 - k, n);
        let tag = if self.is_central() && k.rem_euclid(2) == 1 {
            self.tag.flipped()
        } else {
            self.tag
        };
        Self::raw(n, a, b, tag)
    }

    /// Position in the fundamental domain with reference vertex 0.
    pub fn pos(&self) -> Position {
        self.pos_from(0)
    }

    /// Position relative to the fan at reference vertex `a1`.
    ///
    /// Column is `((start - a1) mod n) + 1`. Plain edges sit at level
    /// `|delta| - 2`; a central edge at column `i` sits at level `n` iff
    /// `tag * (-1)^(i+1) = +1`, otherwise at level `n - 1`.
    pub fn pos_from(&self, a1: usize) -> Position {
        let n = self.n();
        let column = modn(self.start() as i64 - a1 as i64, n) + 1;
        let level = if self.is_central() {
            let parity = if column % 2 == 1 { 1 } else { -1 };
            if self.tag.sign() * parity == 1 {
                n
            } else {
                n - 1
            }
        } else {
            self.delta_len() - 2
        };
        Position { column, level }
    }

    /// Serialized compact form.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl PartialOrd for TaggedEdge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TaggedEdge {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.index()).cmp(&(other.n, other.index()))
    }
}

impl fmt::Display for TaggedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_central() {
            let t = if self.tag == Tag::Plus { '+' } else { '-' };
            write!(f, "{}|{}", self.start, t)
        } else {
            write!(f, "{}-{}", self.start, self.end)
        }
    }
}

impl Serialize for TaggedEdge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Coordinates `(column, level)` in the fundamental domain `{1..n} x {1..n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub column: usize,
    pub level: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.column, self.level)
    }
}

impl Serialize for Position {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Inverse of [`TaggedEdge::pos`].
pub fn pos_inv(n: usize, p: Position) -> Result<TaggedEdge> {
    pos_inv_from(n, p, 0)
}

pub fn pos_inv_from(n: usize, p: Position, a1: usize) -> Result<TaggedEdge> {
    check_n(n)?;
    if !(1..=n).contains(&p.column) || !(1..=n).contains(&p.level) {
        return Err(Error::PositionOutOfRange {
            column: p.column as i64,
            level: p.level as i64,
            n,
        });
    }
    let start = (a1 + p.column - 1) % n;
    if p.level <= n - 2 {
        Ok(TaggedEdge::raw(n, start, (start + p.level + 1) % n, Tag::Plus))
    } else {
        let parity = if p.column % 2 == 1 { 1 } else { -1 };
        let sign = if p.level == n { parity } else { -parity };
        Ok(TaggedEdge::raw(n, start, start, Tag::from_sign(sign)))
    }
}

/// All `n²` tagged edges in enumeration order.
pub fn enumerate_tagged_edges(n: usize) -> Result<Vec<TaggedEdge>> {
    check_n(n)?;
    (0..n * n).map(|i| TaggedEdge::from_index(n, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, s: &str) -> TaggedEdge {
        TaggedEdge::parse(n, s).unwrap()
    }

    #[test]
    fn delta_lengths() {
        assert_eq!(delta_len(8, 3, 3), 9);
        for a in 0..8 {
            assert_eq!(delta_len(8, a, (a + 1) % 8), 2);
        }
        assert_eq!(delta_len(5, 0, 3), 4);
        assert_eq!(delta_len(5, 3, 0), 3);
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_tagged_edges(3).unwrap().len(), 9);
        assert_eq!(enumerate_tagged_edges(8).unwrap().len(), 64);
        let e4 = enumerate_tagged_edges(4).unwrap();
        assert_eq!(e4.iter().filter(|m| m.is_central()).count(), 8);
        assert_eq!(e4.iter().filter(|m| !m.is_central()).count(), 8);
        let labels: Vec<String> = e4.iter().map(|m| m.to_string()).collect();
        assert_eq!(
            labels,
            [
                "0-2", "0-3", "1-3", "1-0", "2-0", "2-1", "3-1", "3-2", "0|+", "0|-", "1|+",
                "1|-", "2|+", "2|-", "3|+", "3|-"
            ]
        );
        for (i, m) in e4.iter().enumerate() {
            assert_eq!(m.index(), i);
        }
        assert!(enumerate_tagged_edges(2).is_err());
    }

    #[test]
    fn parse_rejects_neighbor_chord() {
        assert_eq!(
            TaggedEdge::parse(5, "0-1"),
            Err(Error::NeighborChord { start: 0, end: 1 })
        );
        assert!(matches!(TaggedEdge::parse(5, "0+1"), Err(Error::EdgeSyntax(_))));
        assert!(matches!(TaggedEdge::parse(5, "7-1"), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(e(5, "1-0").delta_len(), 5);
        assert_eq!(e(5, "2|-").tag(), Tag::Minus);
    }

    #[test]
    fn elementary_move_cases() {
        let n = 8;
        // |delta| = 3
        assert_eq!(e(n, "0-2").elementary_moves(), vec![e(n, "0-3")]);
        // 4 <= |delta| <= n-1
        assert_eq!(e(n, "0-4").elementary_moves(), vec![e(n, "1-4"), e(n, "0-5")]);
        // |delta| = n
        assert_eq!(
            e(n, "3-2").elementary_moves(),
            vec![e(n, "4-2"), e(n, "3|+"), e(n, "3|-")]
        );
        // central
        assert_eq!(e(n, "5|-").elementary_moves(), vec![e(n, "6-5")]);
        // n = 3: the move to M_{c,b} would be a boundary segment
        assert_eq!(e(3, "0-2").elementary_moves(), vec![e(3, "0|+"), e(3, "0|-")]);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(e(6, "2|+").tau(), e(6, "1|-"));
        assert_eq!(e(6, "0|+").tau(), e(6, "5|-"));
        assert_eq!(e(6, "0-3").tau(), e(6, "5-2"));
        for n in 3..9 {
            for m in enumerate_tagged_edges(n).unwrap() {
                assert_eq!(m.tau().tau_inv(), m);
                assert_eq!(m.tau_pow(3), m.tau().tau().tau());
            }
        }
    }

    #[test]
    fn positions() {
        let n = 7;
        assert_eq!(e(n, "0-2").pos(), Position { column: 1, level: 1 });
        assert_eq!(e(n, "0|+").pos(), Position { column: 1, level: n });
        assert_eq!(e(n, "0|-").pos(), Position { column: 1, level: n - 1 });
        assert_eq!(e(n, "1|-").pos(), Position { column: 2, level: n });
        assert_eq!(e(n, "3-1").pos(), Position { column: 4, level: 4 });
        assert_eq!(e(n, "3-1").pos().to_string(), "(4,4)");
        assert!(pos_inv(n, Position { column: 0, level: 1 }).is_err());
        assert!(pos_inv(n, Position { column: 1, level: n + 1 }).is_err());
        assert_eq!(e(n, "2-6").pos_from(2), Position { column: 1, level: 3 });
        for m in enumerate_tagged_edges(n).unwrap() {
            assert_eq!(pos_inv_from(n, m.pos_from(3), 3).unwrap(), m);
        }
    }
}
