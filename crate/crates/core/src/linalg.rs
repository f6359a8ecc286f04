//! Exact linear algebra over the integers and rationals.

use num_rational::Ratio;
use num_traits::{One, Zero};

/// Exact rational scalar.
pub type Q = Ratio<i64>;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank_fraction_free(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let height = m.len();
    let width = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(p) = (rank..height).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col];
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut().take(height - rank - 1) {
            let f = row[col];
            for (x, &p) in row[col..width].iter_mut().zip(&prow[col..width]) {
                // exact by Sylvester's identity
                *x = (pivot * *x - f * p) / prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let width = rows.first().map_or(0, |r| r.len());
    reverse_echelon(rows, width).pivots.len()
}

struct Echelon {
    rows: Vec<Vec<Q>>,
    /// `(column, row index)` pairs.
    pivots: Vec<(usize, usize)>,
}

/// Fully reduced echelon form where every pivot is the last nonzero entry
/// of its row. Columns are processed right to left.
fn reverse_echelon(rows: &[Vec<Q>], width: usize) -> Echelon {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let mut used = vec![false; m.len()];
    let mut pivots = Vec::new();
    for col in (0..width).rev() {
        let Some(p) = (0..m.len()).find(|&r| !used[r] && !m[r][col].is_zero()) else {
            continue;
        };
        used[p] = true;
        let inv = m[p][col].recip();
        for x in m[p].iter_mut() {
            *x *= inv;
        }
        let pivot_row = m[p].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == p || row[col].is_zero() {
                continue;
            }
            let f = row[col];
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= f * y;
            }
        }
        pivots.push((col, p));
    }
    Echelon { rows: m, pivots }
}

/// Quotient of `Q^width` by the row span of a relation matrix.
#[derive(Clone, Debug)]
pub struct Cokernel {
    /// Coordinates (in ascending order) whose unit vectors form the
    /// lexicographically first basis of the quotient.
    pub basis: Vec<usize>,
    /// `basis.len() x width` matrix sending a vector to quotient coordinates.
    pub projection: Vec<Vec<Q>>,
}

impl Cokernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        self.projection
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

pub fn cokernel(relations: &[Vec<Q>], width: usize) -> Cokernel {
    let ech = reverse_echelon(relations, width);
    let mut pivot_row = vec![None; width];
    for &(c, r) in &ech.pivots {
        pivot_row[c] = Some(r);
    }
    let basis: Vec<usize> = (0..width).filter(|&c| pivot_row[c].is_none()).collect();
    let mut projection = vec![vec![Q::zero(); width]; basis.len()];
    for (t, &b) in basis.iter().enumerate() {
        projection[t][b] = Q::one();
        for (c, pr) in pivot_row.iter().enumerate() {
            if let Some(r) = pr {
                projection[t][c] = -ech.rows[*r][b];
            }
        }
    }
    Cokernel { basis, projection }
}

pub fn int_vec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| Q::from_integer(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bareiss_small() {
        assert_eq!(rank_fraction_free(&[]), 0);
        assert_eq!(rank_fraction_free(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_fraction_free(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_fraction_free(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, -1]]), 2);
        assert_eq!(rank_fraction_free(&[vec![2, 3], vec![3, 5], vec![1, 1]]), 2);
    }

    #[test]
    fn cokernel_picks_first_columns() {
        // relation e0 + e1 + e2 = 0 in Q^3
        let c = cokernel(&[int_vec(&[1, 1, 1])], 3);
        assert_eq!(c.basis, vec![0, 1]);
        assert_eq!(c.apply(&int_vec(&[0, 0, 1])), int_vec(&[-1, -1]));
        // relation e1 = 0 only
        let c = cokernel(&[int_vec(&[0, 1, 0])], 3);
        assert_eq!(c.basis, vec![0, 2]);
        assert_eq!(c.apply(&int_vec(&[3, 5, 7])), int_vec(&[3, 7]));
    }

    proptest! {
        #[test]
        fn rank_routes_agree(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 0..6)) {
            let q: Vec<Vec<Q>> = rows.iter().map(|r| int_vec(r)).collect();
            prop_assert_eq!(rank_fraction_free(&rows), rank(&q));
            let c = cokernel(&q, 5);
            prop_assert_eq!(c.dim(), 5 - rank(&q));
            // relations vanish in the quotient
            for r in &q {
                prop_assert!(c.apply(r).iter().all(|x| x.is_zero()));
            }
        }
    }
}
