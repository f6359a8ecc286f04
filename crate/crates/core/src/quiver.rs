//! Gabriel quivers of `End_C(T)` and the vanishing-path probe.

use serde::Serialize;

use crate::error::Result;
use crate::geometry::TaggedEdge;
use crate::linalg::rank;
use crate::mesh::{MeshEngine, Morphism};
use crate::triangulation::Triangulation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverArrow {
    pub from: usize,
    pub to: usize,
    pub multiplicity: usize,
}

/// Quiver on the summands of `T`.
///
/// Arrows point in the direction of irreducible morphisms `T_i -> T_j`
/// inside `add T`; [`QuiverPresentation::opposite`] gives the quiver of the
/// opposite algebra.
#[derive(Clone, Debug, Serialize)]
pub struct QuiverPresentation {
    pub vertices: Vec<TaggedEdge>,
    pub arrows: Vec<QuiverArrow>,
    pub vanishing_paths: Vec<PathVerdict>,
    /// Whether arrows have been reversed relative to morphisms.
    pub opposite: bool,
    /// One irreducible morphism per parallel arrow, parallel to `arrows`.
    #[serde(skip)]
    irreducible: Vec<Vec<Morphism>>,
}

/// One path of the quiver and whether its composite vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathVerdict {
    /// Vertex indices along the path, in quiver direction.
    pub vertices: Vec<usize>,
    /// Which parallel arrow is used at each step.
    pub arrow_choice: Vec<usize>,
    pub zero: bool,
}

impl PathVerdict {
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Arrows `i -> j` counted as `dim Hom_C(T_i, T_j)` minus the span of all
/// composites of two radical maps through some `T_k`.
#[allow(clippy::needless_range_loop)]
pub fn quiver_of_triangulation(engine: &MeshEngine, t: &Triangulation) -> Result<QuiverPresentation> {
    let vs = t.edges().to_vec();
    let k = vs.len();
    let mut spaces = Vec::with_capacity(k);
    for a in &vs {
        let row = vs
            .iter()
            .map(|b| engine.hom_space(a, b))
            .collect::<Result<Vec<_>>>()?;
        spaces.push(row);
    }
    // radical basis of Hom(T_a, T_b): everything except the identity
    let radical = |a: usize, b: usize| -> Vec<Morphism> {
        let s = &spaces[a][b];
        (0..s.dim())
            .map(|i| s.basis_element(i))
            .filter(|f| !(a == b && *f == engine.identity(&vs[a])))
            .collect()
    };
    let mut arrows = Vec::new();
    let mut irreducible = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let h = &spaces[i][j];
            if h.dim() == 0 {
                continue;
            }
            let mut rows = Vec::new();
            for m in 0..k {
                let left = radical(i, m);
                if left.is_empty() {
                    continue;
                }
                let right = radical(m, j);
                for f in &left {
                    for g in &right {
                        rows.push(h.coords(&engine.compose(f, g)?));
                    }
                }
            }
            let r = rank(&rows);
            if r == h.dim() {
                continue;
            }
            // complete the square of the radical greedily by basis vectors
            let mut chosen = Vec::new();
            let mut cur = r;
            for b in 0..h.dim() {
                let f = h.basis_element(b);
                rows.push(h.coords(&f));
                let nr = rank(&rows);
                if nr > cur {
                    cur = nr;
                    chosen.push(f);
                } else {
                    rows.pop();
                }
            }
            arrows.push(QuiverArrow {
                from: i,
                to: j,
                multiplicity: chosen.len(),
            });
            irreducible.push(chosen);
        }
    }
    Ok(QuiverPresentation {
        vertices: vs,
        arrows,
        vanishing_paths: Vec::new(),
        opposite: false,
        irreducible,
    })
}

impl QuiverPresentation {
    pub fn arrow_count(&self) -> usize {
        self.arrows.iter().map(|a| a.multiplicity).sum()
    }

    pub fn has_loops(&self) -> bool {
        self.arrows.iter().any(|a| a.from == a.to)
    }

    /// Arrows as `(from, to)` pairs, repeated by multiplicity.
    pub fn arrow_pairs(&self) -> Vec<(usize, usize)> {
        self.arrows
            .iter()
            .flat_map(|a| std::iter::repeat_n((a.from, a.to), a.multiplicity))
            .collect()
    }

    /// Reverses every arrow and every recorded path.
    pub fn opposite(&self) -> QuiverPresentation {
        let mut q = self.clone();
        for a in &mut q.arrows {
            std::mem::swap(&mut a.from, &mut a.to);
        }
        for p in &mut q.vanishing_paths {
            p.vertices.reverse();
            p.arrow_choice.reverse();
        }
        q.opposite = !q.opposite;
        q
    }

    pub fn with_vanishing_paths(mut self, engine: &MeshEngine, maxlen: usize) -> Result<Self> {
        self.vanishing_paths = vanishing_paths_report(engine, &self, maxlen)?;
        Ok(self)
    }
}

/// Every path of length `2..=maxlen`, with the verdict whether the
/// composite of the chosen irreducible morphisms vanishes in `End_C(T)`.
pub fn vanishing_paths_report(
    engine: &MeshEngine,
    q: &QuiverPresentation,
    maxlen: usize,
) -> Result<Vec<PathVerdict>> {
    // work in morphism direction and convert at the end
    let morph_arrows: Vec<(usize, usize, usize)> = q
        .arrows
        .iter()
        .enumerate()
        .map(|(idx, a)| if q.opposite { (a.to, a.from, idx) } else { (a.from, a.to, idx) })
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, Vec<usize>, Morphism)> = Vec::new();
    for &(i, j, idx) in &morph_arrows {
        for (c, f) in q.irreducible[idx].iter().enumerate() {
            stack.push((vec![i, j], vec![c], f.clone()));
        }
    }
    while let Some((verts, choice, f)) = stack.pop() {
        let len = verts.len() - 1;
        if len >= 2 {
            out.push(PathVerdict {
                vertices: verts.clone(),
                arrow_choice: choice.clone(),
                zero: f.is_zero(),
            });
        }
        if len == maxlen {
            continue;
        }
        let last = *verts.last().unwrap();
        for &(i, j, idx) in &morph_arrows {
            if i != last {
                continue;
            }
            for (c, g) in q.irreducible[idx].iter().enumerate() {
                let h = engine.compose(&f, g)?;
                let mut v = verts.clone();
                v.push(j);
                let mut ch = choice.clone();
                ch.push(c);
                stack.push((v, ch, h));
            }
        }
    }
    if q.opposite {
        for p in &mut out {
            p.vertices.reverse();
            p.arrow_choice.reverse();
        }
    }
    out.sort_by(|a, b| (a.len(), &a.vertices, &a.arrow_choice).cmp(&(b.len(), &b.vertices, &b.arrow_choice)));
    Ok(out)
}
