//! Morphism spaces of the mesh category.
//!
//! `Hom(x, y)` is computed column by column: the identity spans `Hom(x, x)`,
//! and for `y != x` the space `Hom(x, y)` is the cokernel of the mesh map
//! `Hom(x, τy) -> ⊕_{z -> y} Hom(x, z)`. Each table keeps, per vertex, the
//! projection from the direct sum onto the chosen basis together with one
//! representative path per basis vector, which is all that composition needs.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{check_n, enumerate_tagged_edges, TaggedEdge};
use crate::linalg::{cokernel, Q};

use super::window::{build_window, MeshWindow};
use super::MeshVertex;

#[derive(Clone, Debug)]
struct Entry {
    dim: usize,
    /// `(predecessor, offset, dimension)` blocks of the direct sum.
    blocks: Vec<(MeshVertex, usize, usize)>,
    /// `dim x width` matrix onto the basis.
    projection: Vec<Vec<Q>>,
    reps: Vec<Vec<MeshVertex>>,
}

impl Entry {
    fn block(&self, z: &MeshVertex) -> Option<(usize, usize)> {
        self.blocks
            .iter()
            .find(|(w, _, _)| w == z)
            .map(|&(_, off, d)| (off, d))
    }
}

/// All nonzero `Hom(x, y)` for a fixed source `x`.
#[derive(Clone, Debug)]
pub struct HomTable {
    pub source: MeshVertex,
    entries: HashMap<MeshVertex, Entry>,
    /// Last column that can carry a nonzero space.
    pub last_column: i64,
}

enum Outcome {
    Closed(HomTable),
    Open,
}

fn compute_table(window: &MeshWindow, source: MeshVertex) -> Outcome {
    let Some(start) = window.index_of(&source) else {
        return Outcome::Open;
    };
    let g0 = source.column();
    let mut entries: HashMap<MeshVertex, Entry> = HashMap::new();
    entries.insert(
        source,
        Entry {
            dim: 1,
            blocks: Vec::new(),
            projection: vec![Vec::new()],
            reps: vec![vec![source]],
        },
    );
    let mut column = g0;
    let mut column_nonzero = true;
    let mut last_column = g0;
    for i in start + 1..window.len() {
        let y = window.vertices[i];
        if y.column() != column {
            if column > g0 && !column_nonzero {
                return Outcome::Closed(HomTable { source, entries, last_column });
            }
            column = y.column();
            column_nonzero = false;
        }
        let mut blocks = Vec::new();
        let mut width = 0;
        for &p in window.predecessors(i) {
            let z = window.vertices[p];
            if let Some(e) = entries.get(&z) {
                blocks.push((z, width, e.dim));
                width += e.dim;
            }
        }
        if width == 0 {
            continue;
        }
        let mut relations = Vec::new();
        if let Some(t) = entries.get(&y.tau()) {
            for b in 0..t.dim {
                let mut row = vec![Q::zero(); width];
                for &(z, off, _) in &blocks {
                    let ez = &entries[&z];
                    // the arrow τy -> z sends basis vector b into Hom(x, z)
                    if let Some((toff, _)) = ez.block(&y.tau()) {
                        for (r, prow) in ez.projection.iter().enumerate() {
                            row[off + r] += prow[toff + b];
                        }
                    }
                }
                relations.push(row);
            }
        }
        let coker = cokernel(&relations, width);
        if coker.dim() == 0 {
            continue;
        }
        let reps = coker
            .basis
            .iter()
            .map(|&c| {
                let &(z, off, _) = blocks
                    .iter()
                    .rev()
                    .find(|(_, off, _)| *off <= c)
                    .expect("block covering basis column");
                let mut path = entries[&z].reps[c - off].clone();
                path.push(y);
                path
            })
            .collect();
        column_nonzero = true;
        last_column = column;
        entries.insert(
            y,
            Entry {
                dim: coker.dim(),
                blocks,
                projection: coker.projection,
                reps,
            },
        );
    }
    if column > g0 && !column_nonzero {
        Outcome::Closed(HomTable { source, entries, last_column })
    } else {
        Outcome::Open
    }
}

impl HomTable {
    pub fn dim(&self, target: &MeshVertex) -> usize {
        self.entries.get(target).map_or(0, |e| e.dim)
    }

    /// Targets with nonzero morphism spaces, in topological order.
    pub fn support(&self) -> Vec<(MeshVertex, usize)> {
        let mut v: Vec<(MeshVertex, usize)> =
            self.entries.iter().map(|(k, e)| (*k, e.dim)).collect();
        v.sort_by_key(|(k, _)| k.order_key());
        v
    }

    /// Representative paths of the basis of `Hom(source, target)`.
    pub fn representatives(&self, target: &MeshVertex) -> Vec<Vec<MeshVertex>> {
        self.entries
            .get(target)
            .map_or_else(Vec::new, |e| e.reps.clone())
    }

    /// Post-composes an element of `Hom(source, path[0])` with the path.
    /// Returns `None` when the result is zero for dimension reasons.
    fn walk(&self, coords: &[Q], path: &[MeshVertex]) -> Option<Vec<Q>> {
        let mut cur = coords.to_vec();
        for pair in path.windows(2) {
            let e = self.entries.get(&pair[1])?;
            let (off, d) = e.block(&pair[0])?;
            cur = e
                .projection
                .iter()
                .map(|row| (0..d).map(|t| row[off + t] * cur[t]).sum())
                .collect();
            if cur.iter().all(Zero::is_zero) {
                return None;
            }
        }
        Some(cur)
    }
}

/// Representative path of one basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathClass {
    pub vertices: Vec<MeshVertex>,
}

impl PathClass {
    pub fn arrow_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpaceComponent {
    pub shift: i64,
    pub dim: usize,
    pub basis: Vec<PathClass>,
}

/// `Hom_C(M, N)` graded by the shift of the target.
#[derive(Clone, Debug, Serialize)]
pub struct MorphismSpace {
    pub source: TaggedEdge,
    pub target: TaggedEdge,
    pub components: Vec<SpaceComponent>,
}

impl MorphismSpace {
    pub fn dim(&self) -> usize {
        self.components.iter().map(|c| c.dim).sum()
    }

    /// Flat coordinates of `f` in the concatenated basis.
    pub fn coords(&self, f: &Morphism) -> Vec<Q> {
        let mut out = Vec::with_capacity(self.dim());
        for c in &self.components {
            match f.components.get(&c.shift) {
                Some(v) => out.extend_from_slice(v),
                None => out.extend(std::iter::repeat_n(Q::zero(), c.dim)),
            }
        }
        out
    }

    /// Inverse of [`MorphismSpace::coords`].
    pub fn element(&self, coords: &[Q]) -> Morphism {
        let mut components = BTreeMap::new();
        let mut off = 0;
        for c in &self.components {
            components.insert(c.shift, coords[off..off + c.dim].to_vec());
            off += c.dim;
        }
        Morphism {
            source: self.source,
            target: self.target,
            components,
        }
    }

    /// The `i`-th vector of the concatenated basis.
    pub fn basis_element(&self, mut i: usize) -> Morphism {
        for c in &self.components {
            if i < c.dim {
                let mut v = vec![Q::zero(); c.dim];
                v[i] = Q::from_integer(1);
                return Morphism {
                    source: self.source,
                    target: self.target,
                    components: BTreeMap::from([(c.shift, v)]),
                };
            }
            i -= c.dim;
        }
        panic!("basis index out of range");
    }
}

/// A morphism `M -> N` of the cluster category, stored as coordinates in
/// the engine's basis of each `Hom((0, M), (k, N))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub source: TaggedEdge,
    pub target: TaggedEdge,
    pub components: BTreeMap<i64, Vec<Q>>,
}

impl Morphism {
    pub fn is_zero(&self) -> bool {
        self.components.values().flatten().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        assert_eq!((self.source, self.target), (other.source, other.target));
        let mut components = self.components.clone();
        for (k, v) in &other.components {
            let e = components
                .entry(*k)
                .or_insert_with(|| vec![Q::zero(); v.len()]);
            for (a, b) in e.iter_mut().zip(v) {
                *a += b;
            }
        }
        Morphism { components, ..*self }
    }

    pub fn scale(&self, c: Q) -> Morphism {
        let components = self
            .components
            .iter()
            .map(|(k, v)| (*k, v.iter().map(|x| x * c).collect()))
            .collect();
        Morphism { components, ..*self }
    }
}

/// Hom tables for every source `(0, M)` of one polygon.
#[derive(Clone, Debug)]
pub struct MeshEngine {
    n: usize,
    tables: Vec<HomTable>,
}

/// The window never needs more than this many columns.
const MAX_COLUMNS_PER_N: i64 = 32;

impl MeshEngine {
    pub fn new(n: usize) -> Result<MeshEngine> {
        check_n(n)?;
        let edges = enumerate_tagged_edges(n)?;
        let ni = n as i64;
        let lo = -1;
        let mut hi = 2 * ni + 2;
        loop {
            let window = build_window(n, lo..=hi)?;
            let mut tables = Vec::with_capacity(edges.len());
            let mut open = None;
            for m in &edges {
                match compute_table(&window, MeshVertex::new(0, *m)) {
                    Outcome::Closed(t) => tables.push(t),
                    Outcome::Open => {
                        open = Some(*m);
                        break;
                    }
                }
            }
            match open {
                None => return Ok(MeshEngine { n, tables }),
                Some(m) => {
                    let columns = hi - lo + 1;
                    if columns >= MAX_COLUMNS_PER_N * ni {
                        return Err(Error::WindowNotClosed {
                            source_edge: m.to_string(),
                            columns,
                        });
                    }
                    hi = lo + 2 * columns;
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self, source: &TaggedEdge) -> &HomTable {
        &self.tables[source.index()]
    }

    fn check(&self, m: &TaggedEdge) -> Result<()> {
        if m.n() != self.n {
            Err(Error::PolygonMismatch(self.n, m.n()))
        } else {
            Ok(())
        }
    }

    /// `dim Hom_Γ((0, M), (k, N))`.
    pub fn hom_dim_mesh(&self, m: &TaggedEdge, target: &TaggedEdge, k: i64) -> Result<usize> {
        self.check(m)?;
        self.check(target)?;
        Ok(self.table(m).dim(&MeshVertex::new(k, *target)))
    }

    /// `dim Hom_Γ(x, y)` for arbitrary vertices, using `ρ`-invariance.
    pub fn hom_dim_vertices(&self, x: &MeshVertex, y: &MeshVertex) -> Result<usize> {
        self.hom_dim_mesh(&x.edge, &y.edge, y.shift - x.shift)
    }

    /// `dim Hom_C(M, N)`: the sum over all shifts.
    pub fn hom_dim_cluster(&self, m: &TaggedEdge, target: &TaggedEdge) -> Result<usize> {
        self.check(m)?;
        self.check(target)?;
        Ok(self
            .table(m)
            .entries
            .iter()
            .filter(|(v, _)| v.edge == *target)
            .map(|(_, e)| e.dim)
            .sum())
    }

    /// `dim Ext¹_C(M, N) = dim Hom_C(M, τN)`.
    pub fn ext1_dim(&self, m: &TaggedEdge, target: &TaggedEdge) -> Result<usize> {
        self.hom_dim_cluster(m, &target.tau())
    }

    pub fn hom_space(&self, m: &TaggedEdge, target: &TaggedEdge) -> Result<MorphismSpace> {
        self.check(m)?;
        self.check(target)?;
        let mut comps: Vec<SpaceComponent> = self
            .table(m)
            .entries
            .iter()
            .filter(|(v, _)| v.edge == *target)
            .map(|(v, e)| SpaceComponent {
                shift: v.shift,
                dim: e.dim,
                basis: e
                    .reps
                    .iter()
                    .map(|p| PathClass { vertices: p.clone() })
                    .collect(),
            })
            .collect();
        comps.sort_by_key(|c| c.shift);
        Ok(MorphismSpace {
            source: *m,
            target: *target,
            components: comps,
        })
    }

    pub fn identity(&self, m: &TaggedEdge) -> Morphism {
        Morphism {
            source: *m,
            target: *m,
            components: BTreeMap::from([(0, vec![Q::from_integer(1)])]),
        }
    }

    /// The composite "`f`, then `g`".
    pub fn compose(&self, f: &Morphism, g: &Morphism) -> Result<Morphism> {
        if f.target != g.source {
            return Err(Error::NotComposable(format!(
                "{} -> {} followed by {} -> {}",
                f.source, f.target, g.source, g.target
            )));
        }
        self.check(&f.source)?;
        let table_f = self.table(&f.source);
        let table_g = self.table(&g.source);
        let mut out: BTreeMap<i64, Vec<Q>> = BTreeMap::new();
        for (&k, cf) in &f.components {
            if cf.iter().all(Zero::is_zero) {
                continue;
            }
            for (&l, cg) in &g.components {
                let reps = table_g.representatives(&MeshVertex::new(l, g.target));
                for (i, c) in cg.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let path: Vec<MeshVertex> = reps[i].iter().map(|v| v.rho(k)).collect();
                    if let Some(v) = table_f.walk(cf, &path) {
                        let acc = out
                            .entry(k + l)
                            .or_insert_with(|| vec![Q::zero(); v.len()]);
                        for (a, b) in acc.iter_mut().zip(&v) {
                            *a += b * c;
                        }
                    }
                }
            }
        }
        out.retain(|_, v| !v.iter().all(Zero::is_zero));
        Ok(Morphism {
            source: f.source,
            target: g.target,
            components: out,
        })
    }
}
