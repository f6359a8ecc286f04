//! Triangulations, flips and exchange relations.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::crossing::crossing;
use crate::error::{Error, Result};
use crate::geometry::{check_n, enumerate_tagged_edges, Tag, TaggedEdge};
use crate::linalg::{rank, Q};
use crate::mesh::{MeshEngine, Morphism};

/// A maximal set of pairwise compatible tagged edges, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    edges: Vec<TaggedEdge>,
}

/// First crossing pair in enumeration order, if any.
pub fn find_crossing(edges: &[TaggedEdge]) -> Option<(TaggedEdge, TaggedEdge, u8)> {
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            let e = crossing(a, b);
            if e > 0 {
                return Some((*a, *b, e));
            }
        }
    }
    None
}

fn compatible_with_all(m: &TaggedEdge, edges: &[TaggedEdge]) -> bool {
    edges.iter().all(|x| crossing(m, x) == 0)
}

/// True iff the edges are pairwise compatible and no other edge can be added.
pub fn is_triangulation(edges: &[TaggedEdge]) -> bool {
    let Some(first) = edges.first() else {
        return false;
    };
    let n = first.n();
    if edges.iter().any(|m| m.n() != n) || find_crossing(edges).is_some() {
        return false;
    }
    let set: BTreeSet<TaggedEdge> = edges.iter().copied().collect();
    enumerate_tagged_edges(n)
        .unwrap()
        .iter()
        .all(|m| set.contains(m) || !compatible_with_all(m, edges))
}

impl Triangulation {
    /// Validates `edges`, naming the offending pair or missing edge.
    pub fn new(edges: impl IntoIterator<Item = TaggedEdge>) -> Result<Triangulation> {
        let set: BTreeSet<TaggedEdge> = edges.into_iter().collect();
        let edges: Vec<TaggedEdge> = set.into_iter().collect();
        let Some(first) = edges.first() else {
            return Err(Error::Invalid("empty edge set".into()));
        };
        let n = first.n();
        for m in &edges {
            first.same_polygon(m)?;
        }
        if let Some((a, b, e)) = find_crossing(&edges) {
            return Err(Error::Crossing {
                first: a.to_string(),
                second: b.to_string(),
                crossing: e,
            });
        }
        for m in enumerate_tagged_edges(n)? {
            if edges.binary_search(&m).is_err() && compatible_with_all(&m, &edges) {
                return Err(Error::NotMaximal(m.to_string()));
            }
        }
        Ok(Triangulation { n, edges })
    }

    /// Parses a comma-separated list such as `"1-3, 3|+, 3-1, 1|+"`.
    pub fn parse(n: usize, s: &str) -> Result<Triangulation> {
        let edges = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| TaggedEdge::parse(n, t))
            .collect::<Result<Vec<_>>>()?;
        Triangulation::new(edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[TaggedEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, m: &TaggedEdge) -> bool {
        self.edges.binary_search(m).is_ok()
    }

    pub fn position(&self, m: &TaggedEdge) -> Option<usize> {
        self.edges.binary_search(m).ok()
    }

    pub fn without(&self, m: &TaggedEdge) -> Vec<TaggedEdge> {
        self.edges.iter().filter(|x| *x != m).copied().collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.edges.iter().map(|m| m.to_string()).collect()
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.labels().join(","))
    }
}

impl Serialize for Triangulation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

/// Both central edges at `a1` and every chord out of `a1`.
pub fn fan_triangulation(n: usize, a1: usize) -> Result<Triangulation> {
    check_n(n)?;
    if a1 >= n {
        return Err(Error::VertexOutOfRange { vertex: a1, n });
    }
    let mut edges = vec![
        TaggedEdge::raw(n, a1, a1, Tag::Plus),
        TaggedEdge::raw(n, a1, a1, Tag::Minus),
    ];
    for k in 2..n {
        edges.push(TaggedEdge::raw(n, a1, (a1 + k) % n, Tag::Plus));
    }
    edges.sort();
    Ok(Triangulation { n, edges })
}

pub const DEFAULT_ENUMERATION_BOUND: usize = 6;

/// All triangulations for `n <= 6`.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Triangulation>> {
    enumerate_triangulations_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

/// All maximal compatible sets, by Bron-Kerbosch with pivoting. The size of
/// the sets is not used anywhere in the search.
pub fn enumerate_triangulations_bounded(n: usize, bound: usize) -> Result<Vec<Triangulation>> {
    check_n(n)?;
    if n > bound {
        return Err(Error::EnumerationBound { n, bound });
    }
    let edges = enumerate_tagged_edges(n)?;
    let k = edges.len();
    let adj: Vec<Vec<bool>> = edges
        .iter()
        .map(|a| edges.iter().map(|b| a != b && crossing(a, b) == 0).collect())
        .collect();
    let mut out = Vec::new();
    let mut clique = Vec::new();
    bron_kerbosch(&adj, &mut clique, (0..k).collect(), Vec::new(), &mut out);
    let mut tris: Vec<Triangulation> = out
        .into_iter()
        .map(|c: Vec<usize>| {
            let mut es: Vec<TaggedEdge> = c.into_iter().map(|i| edges[i]).collect();
            es.sort();
            Triangulation { n, edges: es }
        })
        .collect();
    tris.sort();
    tris.dedup();
    Ok(tris)
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    clique: &mut Vec<usize>,
    p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(clique.clone());
        }
        return;
    }
    let pivot = *p
        .iter()
        .chain(&x)
        .max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count())
        .unwrap();
    let mut p = p;
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in candidates {
        clique.push(v);
        let np = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let nx = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, clique, np, nx, out);
        clique.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}

/// `(3n - 2) / n · C(2n - 2, n - 1)`.
pub fn cluster_count_formula(n: usize) -> u64 {
    let mut c: u64 = 1;
    let (top, k) = (2 * n as u64 - 2, n as u64 - 1);
    for i in 0..k {
        c = c * (top - i) / (i + 1);
    }
    c * (3 * n as u64 - 2) / n as u64
}

/// Replaces `m` by the unique other edge compatible with `T ∖ {m}`.
pub fn flip(t: &Triangulation, m: &TaggedEdge) -> Result<(Triangulation, TaggedEdge)> {
    if !t.contains(m) {
        return Err(Error::NotInTriangulation(m.to_string()));
    }
    let rest = t.without(m);
    let candidates: Vec<TaggedEdge> = enumerate_tagged_edges(t.n)?
        .into_iter()
        .filter(|x| x != m && !t.contains(x) && compatible_with_all(x, &rest))
        .collect();
    if candidates.len() != 1 {
        return Err(Error::FlipNotUnique {
            edge: m.to_string(),
            candidates: candidates.iter().map(|x| x.to_string()).collect(),
        });
    }
    let nn = candidates[0];
    let mut edges = rest;
    edges.push(nn);
    edges.sort();
    Ok((Triangulation { n: t.n, edges }, nn))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeData {
    pub removed: TaggedEdge,
    pub inserted: TaggedEdge,
    pub crossing: u8,
    pub side_factors: Vec<TaggedEdge>,
    pub coside_factors: Vec<TaggedEdge>,
}

fn product(factors: &[TaggedEdge]) -> String {
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors
            .iter()
            .map(|m| format!("x[{m}]"))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl ExchangeData {
    /// `x[M] * x[N] = x[L1]*x[L2] + x[L'1]*...`
    pub fn relation_text(&self) -> String {
        format!(
            "x[{}] * x[{}] = {} + {}",
            self.removed,
            self.inserted,
            product(&self.side_factors),
            product(&self.coside_factors)
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "removed": self.removed,
            "inserted": self.inserted,
            "crossing": self.crossing,
            "side_factors": self.side_factors,
            "coside_factors": self.coside_factors,
            "relation": self.relation_text(),
        })
    }
}

/// Flips `m` and reads off both exchange products from minimal
/// `add(T ∖ {m})`-approximations of `m` and of its partner.
pub fn exchange_sides(engine: &MeshEngine, t: &Triangulation, m: &TaggedEdge) -> Result<ExchangeData> {
    let (_, nn) = flip(t, m)?;
    let rest = t.without(m);
    let side_factors = minimal_approximation(engine, &rest, m)?;
    let coside_factors = minimal_approximation(engine, &rest, &nn)?;
    Ok(ExchangeData {
        removed: *m,
        inserted: nn,
        crossing: crossing(m, &nn),
        side_factors,
        coside_factors,
    })
}

/// Candidate maps `L -> X` for a summand of multiplicity `mult`.
fn candidate_maps(space_dim: usize, mult: usize) -> Vec<Vec<Vec<Q>>> {
    let unit = |i: usize| {
        let mut v = vec![Q::zero(); space_dim];
        v[i] = Q::from_integer(1);
        v
    };
    if mult == 0 {
        return vec![Vec::new()];
    }
    if mult >= space_dim {
        return vec![(0..space_dim).map(unit).collect()];
    }
    // a single map out of a two-dimensional space
    let mut out: Vec<Vec<Vec<Q>>> = (0..space_dim).map(|i| vec![unit(i)]).collect();
    if space_dim == 2 {
        for s in [1, -1] {
            out.push(vec![vec![Q::from_integer(1), Q::from_integer(s)]]);
        }
    }
    out
}

/// Minimal right approximation of `x` by sums of `rest` with every
/// multiplicity at most 2; returns the summands with multiplicity.
fn minimal_approximation(engine: &MeshEngine, rest: &[TaggedEdge], x: &TaggedEdge) -> Result<Vec<TaggedEdge>> {
    let spaces: Vec<_> = rest
        .iter()
        .map(|l| engine.hom_space(l, x))
        .collect::<Result<_>>()?;
    let caps: Vec<usize> = spaces.iter().map(|s| s.dim().min(2)).collect();
    let targets: Vec<_> = rest
        .iter()
        .map(|tj| engine.hom_space(tj, x))
        .collect::<Result<_>>()?;
    // Hom(T_j, L) for every pair
    let sources: Vec<Vec<_>> = rest
        .iter()
        .map(|tj| rest.iter().map(|l| engine.hom_space(tj, l)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let max_total: usize = caps.iter().sum();
    for total in 0..=max_total {
        let mut found = None;
        each_multiplicity(&caps, total, &mut |mults| {
            if found.is_some() {
                return;
            }
            let choices: Vec<Vec<Vec<Vec<Q>>>> = mults
                .iter()
                .zip(&spaces)
                .map(|(&k, s)| candidate_maps(s.dim(), k))
                .collect();
            let mut pick = vec![0usize; choices.len()];
            loop {
                let maps: Vec<Vec<Morphism>> = (0..rest.len())
                    .map(|li| {
                        choices[li][pick[li]]
                            .iter()
                            .map(|c| spaces[li].element(c))
                            .collect()
                    })
                    .collect();
                if approximates(engine, &targets, &sources, &maps) {
                    found = Some(mults.to_vec());
                    return;
                }
                // odometer over the choices
                let mut i = 0;
                while i < pick.len() {
                    pick[i] += 1;
                    if pick[i] < choices[i].len() {
                        break;
                    }
                    pick[i] = 0;
                    i += 1;
                }
                if i == pick.len() {
                    return;
                }
            }
        });
        if let Some(mults) = found {
            let mut out = Vec::new();
            for (l, k) in rest.iter().zip(mults) {
                out.extend(std::iter::repeat_n(*l, k));
            }
            return Ok(out);
        }
    }
    Err(Error::NoApproximation(x.to_string()))
}

fn each_multiplicity(caps: &[usize], total: usize, f: &mut impl FnMut(&[usize])) {
    fn go(caps: &[usize], left: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == caps.len() {
            if left == 0 {
                f(cur);
            }
            return;
        }
        let cap = caps[cur.len()].min(left);
        for k in 0..=cap {
            cur.push(k);
            go(caps, left - k, cur, f);
            cur.pop();
        }
    }
    go(caps, total, &mut Vec::new(), f);
}

/// Every `T_j -> X` factors through the chosen maps `L -> X`.
fn approximates(
    engine: &MeshEngine,
    targets: &[crate::mesh::MorphismSpace],
    sources: &[Vec<crate::mesh::MorphismSpace>],
    maps: &[Vec<Morphism>],
) -> bool {
    for (j, target) in targets.iter().enumerate() {
        if target.dim() == 0 {
            continue;
        }
        let mut rows = Vec::new();
        for (li, hs) in maps.iter().enumerate() {
            let from = &sources[j][li];
            for h in hs {
                for b in 0..from.dim() {
                    let g = from.basis_element(b);
                    let c = engine.compose(&g, h).expect("composable");
                    rows.push(target.coords(&c));
                }
            }
        }
        if rank(&rows) < target.dim() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, s: &str) -> TaggedEdge {
        TaggedEdge::parse(n, s).unwrap()
    }

    #[test]
    fn fan_and_radii() {
        let t = fan_triangulation(8, 0).unwrap();
        assert_eq!(t.to_string(), "0-2,0-3,0-4,0-5,0-6,0-7,0|+,0|-");
        assert!(is_triangulation(t.edges()));
        let radii: Vec<TaggedEdge> = (0..5).map(|v| TaggedEdge::central(5, v, Tag::Plus).unwrap()).collect();
        assert!(is_triangulation(&radii));
        assert!(!is_triangulation(&[e(5, "0-2")]));
        assert!(!is_triangulation(&[]));
    }

    #[test]
    fn validation_errors_name_the_problem() {
        match Triangulation::parse(4, "0-2,1-3") {
            Err(Error::Crossing { first, second, .. }) => assert_eq!((first.as_str(), second.as_str()), ("0-2", "1-3")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(Triangulation::parse(4, "0-2"), Err(Error::NotMaximal(_))));
        assert!(matches!(Triangulation::parse(4, "0-1"), Err(Error::NeighborChord { .. })));
    }

    #[test]
    fn counts_match_formula() {
        assert_eq!(cluster_count_formula(3), 14);
        assert_eq!(cluster_count_formula(4), 50);
        for n in 3..=5 {
            let all = enumerate_triangulations(n).unwrap();
            assert_eq!(all.len() as u64, cluster_count_formula(n));
            assert!(all.iter().all(|t| t.len() == n));
        }
        assert!(matches!(enumerate_triangulations(7), Err(Error::EnumerationBound { .. })));
    }

    #[test]
    fn flip_is_involutive() {
        let t = fan_triangulation(5, 0).unwrap();
        for m in t.edges() {
            let (t2, nn) = flip(&t, m).unwrap();
            assert_eq!(crossing(m, &nn), 1);
            let (t3, back) = flip(&t2, &nn).unwrap();
            assert_eq!((t3, back), (t.clone(), *m));
        }
        assert!(flip(&t, &e(5, "1-3")).is_err());
    }
}
