use std::collections::HashMap;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::geometry::{check_n, TaggedEdge, Tag};

use super::MeshVertex;

/// A finite full subquiver of `Γ` spanned by a range of geometric columns.
#[derive(Clone, Debug)]
pub struct MeshWindow {
    pub n: usize,
    pub columns: RangeInclusive<i64>,
    /// Vertices in topological order.
    pub vertices: Vec<MeshVertex>,
    index: HashMap<MeshVertex, usize>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
}

pub fn build_window(n: usize, columns: RangeInclusive<i64>) -> Result<MeshWindow> {
    check_n(n)?;
    if columns.is_empty() {
        return Err(Error::EmptyRange);
    }
    let mut vertices = Vec::new();
    for g in columns.clone() {
        let shift = g.div_euclid(n as i64);
        let a = g.rem_euclid(n as i64) as usize;
        for len in 3..=n {
            vertices.push(MeshVertex::new(shift, TaggedEdge::raw(n, a, (a + len - 1) % n, Tag::Plus)));
        }
        for tag in [Tag::Plus, Tag::Minus] {
            vertices.push(MeshVertex::new(shift, TaggedEdge::raw(n, a, a, tag)));
        }
    }
    vertices.sort_by_key(|v| v.order_key());
    let index: HashMap<MeshVertex, usize> =
        vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut succ = vec![Vec::new(); vertices.len()];
    let mut pred = vec![Vec::new(); vertices.len()];
    for (i, v) in vertices.iter().enumerate() {
        for w in v.successors() {
            if let Some(&j) = index.get(&w) {
                succ[i].push(j);
                pred[j].push(i);
            }
        }
    }
    Ok(MeshWindow {
        n,
        columns,
        vertices,
        index,
        succ,
        pred,
    })
}

impl MeshWindow {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: &MeshVertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &MeshVertex) -> bool {
        self.index.contains_key(v)
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    pub fn predecessors(&self, i: usize) -> &[usize] {
        &self.pred[i]
    }

    pub fn arrow_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Translation inside the window, if defined there.
    pub fn tau(&self, i: usize) -> Option<usize> {
        self.index_of(&self.vertices[i].tau())
    }

    /// Checks the translation-quiver axioms at every vertex whose whole mesh
    /// lies inside the window: the arrows into `x` correspond bijectively to
    /// the arrows out of `τx`. Returns one message per violation.
    pub fn translation_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, x) in self.vertices.iter().enumerate() {
            let Some(t) = self.tau(i) else { continue };
            let mut into: Vec<usize> = self.pred[i].clone();
            let mut out_of: Vec<usize> = self.succ[t].clone();
            into.sort_unstable();
            out_of.sort_unstable();
            // a predecessor outside the window would have column g - 1 or g,
            // both inside once τx is
            if into != out_of {
                out.push(format!(
                    "mesh at {x}: predecessors {:?} differ from successors of {}",
                    into.iter().map(|&j| self.vertices[j].to_string()).collect::<Vec<_>>(),
                    self.vertices[t]
                ));
            }
            if self.vertices[t] == *x {
                out.push(format!("translation fixes {x}"));
            }
        }
        out
    }

    /// Arrows of the slice `{(0, M) : M in the fan at vertex 0}`.
    pub fn fan_slice_arrows(&self) -> Vec<(TaggedEdge, TaggedEdge)> {
        let mut out = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if v.shift != 0 || v.edge.start() != 0 {
                continue;
            }
            for &j in &self.succ[i] {
                let w = self.vertices[j];
                if w.shift == 0 && w.edge.start() == 0 {
                    out.push((v.edge, w.edge));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_shape() {
        for n in 3..=8 {
            let w = build_window(n, -2..=2 * n as i64).unwrap();
            assert_eq!(w.len(), n * (2 * n + 3));
            assert!(w.translation_violations().is_empty(), "{:?}", w.translation_violations());
            // arrows respect the topological order
            for i in 0..w.len() {
                for &j in w.successors(i) {
                    assert!(i < j);
                    let dg = w.vertices[j].column() - w.vertices[i].column();
                    assert!(dg == 0 || dg == 1);
                }
            }
            // the fan slice is a D_n quiver: n - 1 arrows, a tree
            let arrows = w.fan_slice_arrows();
            assert_eq!(arrows.len(), n - 1);
        }
        let (lo, hi) = (3, 2);
        assert!(build_window(4, lo..=hi).is_err());
    }
}
