//! Reduced simplicial homology over the rationals.
//!
//! Boundary matrices have entries in {-1, 0, 1}. Ranks are computed by
//! fraction-free (Bareiss) elimination, first in `i128` with overflow
//! checks and, should an intermediate minor overflow, again over `BigInt`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Zero};
use serde::Serialize;

/// Reduced Betti numbers `β̃_{-1}, β̃_0, …, β̃_{dim}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HomologyProfile {
    betti: Vec<usize>,
}

impl HomologyProfile {
    /// Betti numbers, entry `k` holding dimension `k - 1`.
    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    /// `β̃_i`; zero outside the stored range.
    pub fn rank(&self, dim: i64) -> usize {
        usize::try_from(dim + 1).ok().and_then(|k| self.betti.get(k)).copied().unwrap_or(0)
    }

    /// `Σ (-1)^i β̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.betti)
    }

    /// True iff `β̃_i = 0` for every `i` below `top`.
    pub fn vanishes_below(&self, top: i64) -> bool {
        (-1..top).all(|i| self.rank(i) == 0)
    }
}

/// `Σ_k (-1)^(k-1) values[k]`, i.e. an alternating sum indexed from dimension -1.
pub(crate) fn alternating_sum(values: &[usize]) -> i64 {
    values.iter().enumerate().map(|(k, &v)| if k % 2 == 0 { -(v as i64) } else { v as i64 }).sum()
}

/// Rank of an integer matrix by Bareiss elimination, or `None` on overflow.
fn bareiss_rank<T>(mut m: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Zero + One + CheckedMul + CheckedSub + CheckedDiv,
{
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            let factor = row[col].clone();
            for (c, cell) in row.iter_mut().enumerate().skip(col + 1) {
                let a = cell.checked_mul(&pivot)?;
                let b = factor.checked_mul(&pivot_row[c])?;
                *cell = a.checked_sub(&b)?.checked_div(&prev)?;
            }
            row[col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Exact rank over ℚ of a small integer matrix.
pub fn rational_rank(m: &[Vec<i64>]) -> usize {
    let narrow: Vec<Vec<i128>> = m.iter().map(|row| row.iter().map(|&v| v as i128).collect()).collect();
    if let Some(r) = bareiss_rank(narrow) {
        return r;
    }
    let wide: Vec<Vec<BigInt>> = m.iter().map(|row| row.iter().map(|&v| BigInt::from(v)).collect()).collect();
    bareiss_rank(wide).expect("BigInt elimination cannot overflow")
}

/// Faces of the complex generated by `facets`, grouped by cardinality.
pub(crate) fn faces_by_size(facets: &[u64]) -> Vec<Vec<u64>> {
    let mut seen = std::collections::HashSet::new();
    for &f in facets {
        let mut sub = f;
        loop {
            seen.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f;
        }
    }
    let top = seen.iter().map(|f| f.count_ones() as usize).max().map_or(0, |m| m + 1);
    let mut groups = vec![Vec::new(); top];
    for f in seen {
        groups[f.count_ones() as usize].push(f);
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    groups
}

/// Boundary map from faces of size `k` to faces of size `k - 1`, as a dense matrix.
fn boundary_matrix(lower: &[u64], upper: &[u64]) -> Vec<Vec<i64>> {
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (c, &face) in upper.iter().enumerate() {
        let mut bits = face;
        let mut position = 0;
        while bits != 0 {
            let v = bits & bits.wrapping_neg();
            bits &= bits - 1;
            let row = index[&(face & !v)];
            m[row][c] = if position % 2 == 0 { 1 } else { -1 };
            position += 1;
        }
    }
    m
}

/// Reduced homology of the complex generated by `facets` (vertex bitmasks).
///
/// No facets at all is the complex without faces, whose profile is empty.
pub(crate) fn reduced_homology_of(facets: &[u64]) -> HomologyProfile {
    if facets.is_empty() {
        return HomologyProfile { betti: Vec::new() };
    }
    let groups = faces_by_size(facets);
    // ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces.
    let mut ranks = vec![0usize; groups.len() + 1];
    for k in 1..groups.len() {
        ranks[k] = rational_rank(&boundary_matrix(&groups[k - 1], &groups[k]));
    }
    let betti = (0..groups.len()).map(|k| groups[k].len() - ranks[k] - ranks[k + 1]).collect();
    HomologyProfile { betti }
}
