//! Exact rank computations by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

/// Rank of an integer matrix given as rows. Rows may be ragged only if all
/// have the same length; an empty matrix has rank 0.
pub fn rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    debug_assert!(rows.iter().all(|r| r.len() == cols));

    let mut prev_pivot = BigInt::from(1);
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in col..cols {
                // Bareiss step: the division is exact
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = v.div_rem(&prev_pivot);
                debug_assert!(rem.is_zero());
                row[j] = q;
            }
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

/// Divides a row by the gcd of its entries and fixes the sign of the leading
/// nonzero entry to positive. Zero rows are returned unchanged.
pub fn primitive(row: &[BigInt]) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in row {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return row.to_vec();
    }
    let lead_negative = row.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    if lead_negative {
        g = -g;
    }
    row.iter().map(|x| x / &g).collect()
}

/// Sparse integer vector: column index to nonzero entry.
pub type SparseRow = BTreeMap<usize, BigInt>;

/// Incremental row-echelon basis over the integers. Rows are kept primitive
/// and each is keyed by its leading (smallest) column. Reduction cross
/// multiplies instead of dividing, so no fractions ever appear.
#[derive(Debug, Default, Clone)]
pub struct SparseEchelon {
    rows: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis. Returns `true` (and keeps the reduced
    /// vector) if `v` was independent of the rows inserted so far.
    pub fn insert(&mut self, mut v: SparseRow) -> bool {
        v.retain(|_, x| !x.is_zero());
        loop {
            let Some((&lead, _)) = v.iter().next() else {
                return false;
            };
            let Some(row) = self.rows.get(&lead) else {
                let dense: Vec<BigInt> = v.values().cloned().collect();
                let p = primitive(&dense);
                let v = v.keys().copied().zip(p).collect();
                self.rows.insert(lead, v);
                return true;
            };
            let a = row[&lead].clone();
            let b = v[&lead].clone();
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            // v <- a*v - b*row kills the lead column
            for x in v.values_mut() {
                *x *= &a;
            }
            for (col, x) in row {
                let e = v.entry(*col).or_insert_with(BigInt::zero);
                *e -= &b * x;
            }
            v.retain(|_, x| !x.is_zero());
        }
    }
}

/// Rank of a list of sparse rows by [`SparseEchelon`].
pub fn sparse_rank<I: IntoIterator<Item = SparseRow>>(rows: I) -> usize {
    let mut ech = SparseEchelon::new();
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Dimension of the null space `{x : A x = 0}` for a matrix with `cols`
/// columns given by sparse rows.
pub fn nullity<I: IntoIterator<Item = SparseRow>>(rows: I, cols: usize) -> usize {
    cols - sparse_rank(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(vec![]), 0);
        assert_eq!(rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
        assert_eq!(rank(m(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, -5]])), 3);
        assert_eq!(rank(m(&[&[0, 1], &[1, 0], &[1, 1]])), 2);
    }

    fn sparse(rows: &[Vec<BigInt>]) -> Vec<SparseRow> {
        rows.iter()
            .map(|r| r.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect()
    }

    #[test]
    fn sparse_agrees_with_dense() {
        let a = m(&[&[2, -4, 0], &[-1, 2, 0], &[0, 0, 3], &[0, 0, 0], &[1, 1, 1]]);
        assert_eq!(rank(a.clone()), 3);
        assert_eq!(sparse_rank(sparse(&a)), 3);
        assert_eq!(nullity(sparse(&a), 3), 0);
        assert_eq!(nullity(sparse(&m(&[&[1, 1, 0]])), 3), 2);
        let b = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(sparse_rank(sparse(&b)), 2);
    }

    #[test]
    fn echelon_rejects_dependent_rows() {
        let mut e = SparseEchelon::new();
        let rows = sparse(&m(&[&[0, 3, 6], &[0, -1, -2], &[5, 0, 1], &[5, 3, 7]]));
        let kept: Vec<bool> = rows.into_iter().map(|r| e.insert(r)).collect();
        assert_eq!(kept, vec![true, false, true, false]);
        assert_eq!(e.rank(), 2);
    }

    proptest::proptest! {
        #[test]
        fn dense_and_sparse_ranks_agree(
            data in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 5), 0..7)
        ) {
            let rows: Vec<Vec<BigInt>> =
                data.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            proptest::prop_assert_eq!(rank(rows.clone()), sparse_rank(sparse(&rows)));
        }
    }

    #[test]
    fn primitive_normalises_sign_and_gcd() {
        let p = primitive(&m(&[&[0, -4, 6]])[0]);
        assert_eq!(p, m(&[&[0, 2, -3]])[0]);
    }
}
