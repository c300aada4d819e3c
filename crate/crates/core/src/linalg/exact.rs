use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Field, ScalarMatrix};
use crate::error::{Error, Result};

/// Exact rank of an integer matrix via fraction-free (Bareiss) elimination.
pub fn rank_exact(m: &ScalarMatrix) -> Result<usize> {
    match m.field() {
        Field::Rational => Ok(bareiss_rank(m)),
        Field::ModP(p) => Err(Error::FieldMismatch(format!(
            "exact rank needs an integer matrix, got one over F_{p}"
        ))),
    }
}

/// Every intermediate entry is a minor of the input, so the division by the
/// previous pivot is exact and the numbers stay as small as determinants.
pub(super) fn bareiss_rank(m: &ScalarMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = m
        .row_iter()
        .map(|r| r.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let (top, rest) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pv = &prow[c];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            if factor.is_zero() {
                for e in &mut row[c + 1..] {
                    if !e.is_zero() {
                        *e = &*e * pv / &prev;
                    }
                }
            } else {
                for j in c + 1..cols {
                    let v = &row[j] * pv - &factor * &prow[j];
                    row[j] = v / &prev;
                }
            }
        }
        prev = prow[c].clone();
        rank += 1;
    }
    rank
}
