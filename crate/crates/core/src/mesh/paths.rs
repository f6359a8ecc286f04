//! Brute-force morphism spaces: all paths modulo the span of every
//! `u · m_z · v` with `m_z` a mesh relation. Only usable for small `n`.
//!
//! The relation vectors have 0/1 entries and the rank is taken over
//! `F_p` for a 61-bit prime, reducing rows one at a time and stopping as
//! soon as the span is everything.

use std::collections::{BTreeSet, HashMap};

use super::MeshVertex;

/// Every path from `x` to `y` in `Γ`, as vertex sequences.
pub fn enumerate_paths(x: &MeshVertex, y: &MeshVertex) -> Vec<Vec<MeshVertex>> {
    let mut out = Vec::new();
    let mut stack = vec![*x];
    dfs(y, &mut stack, &mut out);
    out
}

fn dfs(y: &MeshVertex, stack: &mut Vec<MeshVertex>, out: &mut Vec<Vec<MeshVertex>>) {
    let cur = *stack.last().unwrap();
    if cur == *y {
        out.push(stack.clone());
        return;
    }
    if cur.order_key() >= y.order_key() {
        return;
    }
    for w in cur.successors() {
        stack.push(w);
        dfs(y, stack, out);
        stack.pop();
    }
}

pub fn hom_dim_paths(x: &MeshVertex, y: &MeshVertex) -> usize {
    let paths = enumerate_paths(x, y);
    if paths.is_empty() {
        return 0;
    }
    let index: HashMap<&[MeshVertex], usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mids: BTreeSet<MeshVertex> = paths
        .iter()
        .flat_map(|p| p.iter().skip(1).copied())
        .collect();
    let mut span = ModSpan::new(paths.len());
    for z in &mids {
        if span.is_full() {
            break;
        }
        let t = z.tau();
        let heads = enumerate_paths(x, &t);
        if heads.is_empty() {
            continue;
        }
        let tails = enumerate_paths(z, y);
        let middle: Vec<MeshVertex> = t
            .successors()
            .into_iter()
            .filter(|w| w.successors().contains(z))
            .collect();
        for u in &heads {
            for v in &tails {
                let mut row = vec![0i64; paths.len()];
                for w in &middle {
                    let mut p = u.clone();
                    p.push(*w);
                    p.extend_from_slice(v);
                    row[index[p.as_slice()]] += 1;
                }
                span.insert(row);
            }
        }
    }
    paths.len() - span.rank()
}

const P: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn inv(a: u64) -> u64 {
    let (mut r, mut base, mut e) = (1u64, a, P - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    r
}

/// Row span over `F_p`, kept with one normalized pivot row per pivot column.
struct ModSpan {
    width: usize,
    pivots: HashMap<usize, Vec<u64>>,
}

impl ModSpan {
    fn new(width: usize) -> Self {
        ModSpan { width, pivots: HashMap::new() }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn is_full(&self) -> bool {
        self.pivots.len() == self.width
    }

    fn insert(&mut self, row: Vec<i64>) {
        let mut v: Vec<u64> = row.iter().map(|&x| x.rem_euclid(P as i64) as u64).collect();
        for c in 0..self.width {
            if v[c] == 0 {
                continue;
            }
            match self.pivots.get(&c) {
                Some(p) => {
                    let f = v[c];
                    for (x, y) in v.iter_mut().zip(p) {
                        *x = (*x + P - mul(f, *y)) % P;
                    }
                }
                None => {
                    let s = inv(v[c]);
                    for x in v.iter_mut() {
                        *x = mul(*x, s);
                    }
                    self.pivots.insert(c, v);
                    return;
                }
            }
        }
    }
}
