//! Modules over cluster-tilted algebras: dimension vectors and the
//! Auslander-Reiten quiver obtained by deleting `T` from the category.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::crossing::crossing;
use crate::error::Result;
use crate::geometry::{enumerate_tagged_edges, TaggedEdge};
use crate::triangulation::Triangulation;

/// Coordinates indexed like `T.edges()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DimensionVector {
    pub coords: Vec<u8>,
}

impl DimensionVector {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len()).filter(|&i| self.coords[i] > 0).collect()
    }
}

/// `(dim)_i = e(M, T_i)`.
pub fn dimension_vector(m: &TaggedEdge, t: &Triangulation) -> Result<DimensionVector> {
    for x in t.edges() {
        m.same_polygon(x)?;
    }
    Ok(DimensionVector {
        coords: t.edges().iter().map(|x| crossing(m, x)).collect(),
    })
}

/// The cylinder `Γ / ρ` on all `n²` tagged edges.
#[derive(Clone, Debug, Serialize)]
pub struct CategoryQuiver {
    pub n: usize,
    pub vertices: Vec<TaggedEdge>,
    pub arrows: Vec<(TaggedEdge, TaggedEdge)>,
    /// Pairs `(M, τM)`.
    pub tau: Vec<(TaggedEdge, TaggedEdge)>,
}

pub fn ar_quiver_of_category(n: usize) -> Result<CategoryQuiver> {
    let vertices = enumerate_tagged_edges(n)?;
    let mut arrows = Vec::new();
    for m in &vertices {
        for x in m.elementary_moves() {
            arrows.push((*m, x));
        }
    }
    let tau = vertices.iter().map(|m| (*m, m.tau())).collect();
    Ok(CategoryQuiver { n, vertices, arrows, tau })
}

impl CategoryQuiver {
    /// Arrows into `x` against arrows out of `τx`, vertex by vertex.
    pub fn translation_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for x in &self.vertices {
            let mut into: Vec<TaggedEdge> = self
                .arrows
                .iter()
                .filter(|(_, b)| b == x)
                .map(|(a, _)| *a)
                .collect();
            let t = x.tau();
            let mut from_tau: Vec<TaggedEdge> = self
                .arrows
                .iter()
                .filter(|(a, _)| *a == t)
                .map(|(_, b)| *b)
                .collect();
            into.sort();
            from_tau.sort();
            if into != from_tau {
                out.push(format!("{x}: arrows in {into:?}, arrows out of τ {from_tau:?}"));
            }
        }
        out
    }

    /// Sizes of the τ-orbits, in enumeration order of their first member.
    pub fn tau_orbit_sizes(&self) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        let mut sizes = Vec::new();
        for m in &self.vertices {
            if seen.contains(m) {
                continue;
            }
            let mut x = *m;
            let mut k = 0;
            loop {
                seen.insert(x);
                k += 1;
                x = x.tau();
                if x == *m {
                    break;
                }
            }
            sizes.push(k);
        }
        sizes
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleVertex {
    pub edge: TaggedEdge,
    pub dimvec: DimensionVector,
}

/// The Auslander-Reiten quiver of `End_C(T)^op`.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleCategoryQuiver {
    pub n: usize,
    #[serde(rename = "T")]
    pub t: Triangulation,
    pub vertices: Vec<ModuleVertex>,
    pub arrows: Vec<(TaggedEdge, TaggedEdge)>,
    pub tau: Vec<(TaggedEdge, TaggedEdge)>,
}

pub fn ar_quiver_of_tilted(t: &Triangulation) -> Result<ModuleCategoryQuiver> {
    let cat = ar_quiver_of_category(t.n())?;
    let vertices = cat
        .vertices
        .iter()
        .filter(|m| !t.contains(m))
        .map(|m| {
            Ok(ModuleVertex {
                edge: *m,
                dimvec: dimension_vector(m, t)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let keep = |m: &TaggedEdge| !t.contains(m);
    let arrows = cat
        .arrows
        .iter()
        .filter(|(a, b)| keep(a) && keep(b))
        .copied()
        .collect();
    let tau = cat
        .tau
        .iter()
        .filter(|(a, b)| keep(a) && keep(b))
        .copied()
        .collect();
    Ok(ModuleCategoryQuiver {
        n: t.n(),
        t: t.clone(),
        vertices,
        arrows,
        tau,
    })
}

impl ModuleCategoryQuiver {
    pub fn dimvec(&self, m: &TaggedEdge) -> Option<&DimensionVector> {
        self.vertices.iter().find(|v| v.edge == *m).map(|v| &v.dimvec)
    }

    /// At every mesh `τx -> ⊕ y -> x` whose members all survive, the middle
    /// must dominate the ends coordinatewise.
    pub fn mesh_additivity_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for v in &self.vertices {
            let t = v.edge.tau();
            let Some(dt) = self.dimvec(&t) else { continue };
            let middle = t.elementary_moves();
            let dims: Option<Vec<&DimensionVector>> = middle.iter().map(|y| self.dimvec(y)).collect();
            let Some(dims) = dims else { continue };
            for i in 0..v.dimvec.coords.len() {
                let mid: u32 = dims.iter().map(|d| u32::from(d.coords[i])).sum();
                let ends = u32::from(v.dimvec.coords[i]) + u32::from(dt.coords[i]);
                if mid < ends {
                    out.push(format!("mesh ending at {}: coordinate {i} has middle {mid} < ends {ends}", v.edge));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "T": self.t,
            "vertices": self.vertices,
            "arrows": self.arrows.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
            "tau": self.tau.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
        })
    }
}

/// Support of `d` split into layers along `arrows` (pairs of indices into
/// `T`): each layer holds the vertices with no incoming arrow from a later
/// layer. A coordinate equal to 2 repeats its vertex.
pub fn loewy_layers(d: &DimensionVector, arrows: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut left: Vec<usize> = d.support();
    let mut layers = Vec::new();
    while !left.is_empty() {
        let mut top: Vec<usize> = left
            .iter()
            .copied()
            .filter(|&v| !arrows.iter().any(|&(a, b)| b == v && a != v && left.contains(&a)))
            .collect();
        if top.is_empty() {
            // an oriented cycle inside the support
            top = left.clone();
        }
        left.retain(|v| !top.contains(v));
        let mut layer = Vec::new();
        for v in top {
            for _ in 0..d.coords[v] {
                layer.push(v);
            }
        }
        layers.push(layer);
    }
    layers
}

/// Loewy layers written top to bottom with `/`, vertices numbered by `label`.
pub fn loewy_text(d: &DimensionVector, arrows: &[(usize, usize)], label: impl Fn(usize) -> String) -> String {
    loewy_layers(d, arrows)
        .iter()
        .map(|layer| layer.iter().map(|&v| label(v)).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("/")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::fan_triangulation;

    #[test]
    fn category_quiver_is_a_translation_quiver() {
        for n in 3..=8 {
            let q = ar_quiver_of_category(n).unwrap();
            assert!(q.translation_violations().is_empty());
            let sizes = q.tau_orbit_sizes();
            if n % 2 == 0 {
                assert!(sizes.iter().all(|&s| s == n));
                assert_eq!(sizes.len(), n);
            } else {
                // the two central levels merge into one orbit of length 2n
                assert_eq!(sizes.iter().filter(|&&s| s == 2 * n).count(), 1);
                assert_eq!(sizes.len(), n - 1);
            }
        }
    }

    #[test]
    fn fan_modules() {
        for n in 3..=7 {
            let t = fan_triangulation(n, 0).unwrap();
            let q = ar_quiver_of_tilted(&t).unwrap();
            assert_eq!(q.vertices.len(), n * n - n);
            assert!(q.vertices.iter().all(|v| !v.dimvec.is_zero()));
            assert!(q.mesh_additivity_violations().is_empty());
        }
    }

    #[test]
    fn layers() {
        let d = DimensionVector { coords: vec![1, 1, 0, 1] };
        // 0 -> 1 -> 2 -> 3 -> 0
        let arrows = [(0, 1), (1, 2), (2, 3), (3, 0)];
        assert_eq!(loewy_layers(&d, &arrows), vec![vec![3], vec![0], vec![1]]);
        assert_eq!(loewy_text(&d, &arrows, |v| (v + 1).to_string()), "4/1/2");
    }
}
