use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, Zero};

use super::IntMatrix;

/// Singular values below `RANK_TOLERANCE * σ_max` count as zero.
pub const RANK_TOLERANCE: f64 = 1e-10;

pub fn numeric_rank(m: &DMatrix<f64>) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    // SVD of the wide orientation keeps the decomposition small
    let sv = if m.nrows() <= m.ncols() {
        m.clone().transpose().singular_values()
    } else {
        m.singular_values()
    };
    let max = sv.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > RANK_TOLERANCE * max).count()
}

/// Rank over the rationals by fraction-free row elimination. Rows are
/// divided by their content after every update, which keeps boundary
/// matrices small; `i128` is used until an operation overflows, then the
/// elimination restarts with big integers.
pub fn exact_rank(m: &IntMatrix) -> usize {
    // eliminate along the shorter side
    let rows = if m.nrows() <= m.ncols() {
        m.transpose().to_dense_rows()
    } else {
        m.to_dense_rows()
    };
    let small: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    if let Some(r) = eliminate(small) {
        return r;
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    eliminate(big).expect("big integers do not overflow")
}

/// Row echelon elimination; `None` signals an overflow.
fn eliminate<T>(mut rows: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Zero + One + Integer + Signed + CheckedMul + CheckedSub,
{
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        // smallest nonzero pivot keeps growth down
        let Some(pivot) = (rank..nrows)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()))
        else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let p = prow[col].clone();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = p.gcd(&row[col]);
            let a = p.clone() / g.clone();
            let b = row[col].clone() / g;
            let mut content = T::zero();
            for j in col..ncols {
                let lhs = row[j].checked_mul(&a)?;
                let rhs = prow[j].checked_mul(&b)?;
                row[j] = lhs.checked_sub(&rhs)?;
                content = content.gcd(&row[j]);
            }
            if !content.is_zero() && !content.is_one() {
                for v in row[col..].iter_mut() {
                    *v = v.clone() / content.clone();
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sparse::SparseMatrix;

    fn dense(rows: &[&[i64]]) -> IntMatrix {
        let mut t = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                t.push((i, j, v));
            }
        }
        SparseMatrix::from_triplets(rows.len(), rows[0].len(), t)
    }

    #[test]
    fn small_ranks() {
        assert_eq!(exact_rank(&dense(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(exact_rank(&dense(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]])), 2);
        assert_eq!(exact_rank(&dense(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(exact_rank(&dense(&[&[2, 3, 5], &[7, 11, 13]])), 2);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // Vandermonde-like rows produce large intermediate minors
        let n = 30;
        let mut t = Vec::new();
        for i in 0..n {
            for j in 0..n {
                t.push((i, j, ((i + 1) as i64).pow((j % 5 + 1) as u32) + (i * j) as i64));
            }
        }
        let m = SparseMatrix::from_triplets(n, n, t);
        let exact = exact_rank(&m);
        assert!(exact <= n);
        let big: Vec<Vec<BigInt>> = m
            .to_dense_rows()
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        assert_eq!(exact, eliminate(big).unwrap());
    }

    #[test]
    fn numeric_agrees_with_exact() {
        let m = dense(&[&[1, -1, 0, 0], &[0, 1, -1, 0], &[1, 0, -1, 0]]);
        assert_eq!(numeric_rank(&m.to_f64().to_dense()), exact_rank(&m));
    }
}
