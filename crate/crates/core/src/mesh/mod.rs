//! The translation quiver `Γ = ℤ × E` and its mesh category.
//!
//! A vertex `(k, M)` pairs a shift `k` with a tagged edge. Arrows come from
//! elementary moves; the shift increases by one exactly when a move enters
//! the fan at vertex 0 from outside it. Every arrow keeps or increases the
//! geometric column `k n + start(M)` by one, and the translation lowers it by
//! one, which gives a cheap topological order.

mod closed_form;
mod grid;
mod hom;
mod paths;
mod window;

pub use closed_form::hom_dim_closed_form;
pub use grid::{hom_grid, GridCell, HomGrid};
pub use hom::{HomTable, MeshEngine, Morphism, MorphismSpace, PathClass, SpaceComponent};
pub use paths::{enumerate_paths, hom_dim_paths};
pub use window::{build_window, MeshWindow};

use std::fmt;

use serde::Serialize;

use crate::geometry::{modn, Tag, TaggedEdge};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MeshVertex {
    pub shift: i64,
    pub edge: TaggedEdge,
}

#[inline]
fn in_fan(m: &TaggedEdge) -> bool {
    m.start() == 0
}

impl MeshVertex {
    pub fn new(shift: i64, edge: TaggedEdge) -> Self {
        MeshVertex { shift, edge }
    }

    pub fn n(&self) -> usize {
        self.edge.n()
    }

    /// Geometric column `k n + start`.
    pub fn column(&self) -> i64 {
        self.shift * self.n() as i64 + self.edge.start() as i64
    }

    /// Sort key compatible with every arrow.
    pub(crate) fn order_key(&self) -> (i64, usize, Tag) {
        (self.column(), self.edge.delta_len(), self.edge.tag())
    }

    /// Heads of all arrows out of this vertex.
    pub fn successors(&self) -> Vec<MeshVertex> {
        let from_fan = in_fan(&self.edge);
        self.edge
            .elementary_moves()
            .into_iter()
            .map(|m| {
                let shift = if in_fan(&m) && !from_fan {
                    self.shift + 1
                } else {
                    self.shift
                };
                MeshVertex::new(shift, m)
            })
            .collect()
    }

    /// The translation `τ_Γ`.
    pub fn tau(&self) -> MeshVertex {
        let shift = if in_fan(&self.edge) {
            self.shift - 1
        } else {
            self.shift
        };
        MeshVertex::new(shift, self.edge.tau())
    }

    pub fn tau_inv(&self) -> MeshVertex {
        let m = self.edge.tau_inv();
        let shift = if in_fan(&m) { self.shift + 1 } else { self.shift };
        MeshVertex::new(shift, m)
    }

    /// The rotation `ρ^k`: `(i, M) ↦ (i + k, M)`.
    pub fn rho(&self, k: i64) -> MeshVertex {
        MeshVertex::new(self.shift + k, self.edge)
    }

    /// Coordinates `(column, level)` in `ℤQ`, calibrated so that shift 0
    /// agrees with [`TaggedEdge::pos`].
    pub fn zq_position(&self) -> (i64, usize) {
        let n = self.n();
        let g = self.column();
        let level = if self.edge.is_central() {
            let parity = if g.rem_euclid(2) == 0 { 1 } else { -1 };
            if self.edge.tag().sign() * parity == 1 {
                n
            } else {
                n - 1
            }
        } else {
            self.edge.delta_len() - 2
        };
        (g + 1, level)
    }

    /// Inverse of [`MeshVertex::zq_position`]; `level` must lie in `1..=n`.
    pub fn from_zq(n: usize, column: i64, level: usize) -> MeshVertex {
        assert!((1..=n).contains(&level), "level {level} out of range");
        let g = column - 1;
        let shift = g.div_euclid(n as i64);
        let start = modn(g, n);
        let edge = if level <= n - 2 {
            TaggedEdge::raw(n, start, (start + level + 1) % n, Tag::Plus)
        } else {
            let parity = if g.rem_euclid(2) == 0 { 1 } else { -1 };
            let sign = if level == n { parity } else { -parity };
            TaggedEdge::raw(n, start, start, Tag::from_sign(sign))
        };
        MeshVertex::new(shift, edge)
    }
}

impl fmt::Display for MeshVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.shift, self.edge)
    }
}
