//! Dense linear solves over the fraction field.

use super::ratfn::RatFn;
use crate::error::{Error, Result};

/// Solves `A X = B` for square `A` by Gaussian elimination with the sparsest
/// available pivot. `b` holds the right-hand sides as columns.
pub fn solve(a: &[Vec<RatFn>], b: &[Vec<RatFn>]) -> Result<Vec<Vec<RatFn>>> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) || b.len() != n {
        return Err(Error::SingularSystem("matrix shape mismatch".into()));
    }
    let k = b.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<RatFn>> = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb).cloned().collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].num().num_terms() + m[r][col].den().num_terms())
            .ok_or_else(|| Error::SingularSystem(format!("no pivot in column {col}")))?;
        m.swap(col, pivot);
        let inv = m[col][col].inv().expect("nonzero pivot");
        for c in col..n + k {
            m[col][c] = m[col][c].mul(&inv);
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..n + k {
                if !m[col][c].is_zero() {
                    let d = f.mul(&m[col][c]);
                    m[r][c] = m[r][c].sub(&d);
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Inverse of a square matrix.
pub fn invert(a: &[Vec<RatFn>]) -> Result<Vec<Vec<RatFn>>> {
    let n = a.len();
    let id: Vec<Vec<RatFn>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { RatFn::one() } else { RatFn::zero() })
                .collect()
        })
        .collect();
    solve(a, &id)
}
