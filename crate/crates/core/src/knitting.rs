//! Knitting on `ℤD_n`, using only the shape of the quiver.
//!
//! Levels `1..=n-2` form the long arm and `n - 1`, `n` the fork. Arrows are
//! `(i, j) -> (i, j+1)` for `j <= n-3`, `(i, n-2) -> (i, n-1), (i, n)` and
//! `(i, j+1) -> (i+1, j)` for `j+1 <= n-2`, `(i, n-1), (i, n) -> (i+1, n-2)`.

use std::collections::HashMap;

/// Heads of arrows into `(i, j)`.
pub fn zq_predecessors(n: usize, i: i64, j: usize) -> Vec<(i64, usize)> {
    let mut out = Vec::new();
    if j <= n - 2 {
        if j >= 2 {
            out.push((i, j - 1));
        }
        if j < n - 2 {
            out.push((i - 1, j + 1));
        } else {
            out.push((i - 1, n - 1));
            out.push((i - 1, n));
        }
    } else {
        out.push((i, n - 2));
    }
    out
}

/// Tails of arrows out of `(i, j)`.
pub fn zq_successors(n: usize, i: i64, j: usize) -> Vec<(i64, usize)> {
    let mut out = Vec::new();
    if j <= n - 2 {
        if j < n - 2 {
            out.push((i, j + 1));
        } else {
            out.push((i, n - 1));
            out.push((i, n));
        }
        if j >= 2 {
            out.push((i + 1, j - 1));
        }
    } else {
        out.push((i + 1, n - 2));
    }
    out
}

/// `h(y) = max(0, Σ_{z -> y} h(z) - h(τy))` started from `h(source) = 1`,
/// over `columns` columns beginning at the source column.
pub fn knit_hom_function(n: usize, source: (i64, usize), columns: i64) -> HashMap<(i64, usize), i64> {
    let mut h: HashMap<(i64, usize), i64> = HashMap::new();
    let get = |h: &HashMap<(i64, usize), i64>, p: (i64, usize)| h.get(&p).copied().unwrap_or(0);
    let (i0, j0) = source;
    for i in i0..i0 + columns {
        for j in 1..=n {
            if i == i0 && j == j0 {
                h.insert((i, j), 1);
                continue;
            }
            let sum: i64 = zq_predecessors(n, i, j).into_iter().map(|p| get(&h, p)).sum();
            let v = (sum - get(&h, (i - 1, j))).max(0);
            if v > 0 {
                h.insert((i, j), v);
            }
        }
    }
    h
}

/// Dimension vectors of the indecomposable modules of the path algebra of
/// the `D_n` quiver with arrows toward level 1, column by column, starting
/// from the projectives `P_j` in column 1.
pub fn knit_path_algebra(n: usize) -> Vec<((i64, usize), Vec<i64>)> {
    let mut dims: HashMap<(i64, usize), Vec<i64>> = HashMap::new();
    let unit = |k: usize| {
        let mut v = vec![0i64; n];
        v[k - 1] = 1;
        v
    };
    for j in 1..=n {
        let mut v = vec![0i64; n];
        for k in 1..=j.min(n - 2) {
            v[k - 1] = 1;
        }
        if j > n - 2 {
            v = (0..n).map(|k| i64::from(k < n - 2)).collect();
            v = v.iter().zip(unit(j)).map(|(a, b)| a + b).collect();
        }
        dims.insert((1, j), v);
    }
    let mut order = Vec::new();
    for j in 1..=n {
        order.push((1, j));
    }
    'outer: for c in 1..n as i64 - 1 {
        for j in 1..=n {
            let mut v: Vec<i64> = dims[&(c, j)].iter().map(|x| -x).collect();
            for s in zq_successors(n, c, j) {
                match dims.get(&s) {
                    Some(d) => v.iter_mut().zip(d).for_each(|(a, b)| *a += b),
                    None => break 'outer,
                }
            }
            if v.iter().any(|&x| x < 0) || v.iter().all(|&x| x == 0) {
                break 'outer;
            }
            dims.insert((c + 1, j), v);
            order.push((c + 1, j));
        }
    }
    order.into_iter().map(|p| (p, dims[&p].clone())).collect()
}
