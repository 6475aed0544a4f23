//! Exact rank over the rationals by fraction-free (Bareiss) elimination.
//!
//! Elimination first runs on `i128` with checked arithmetic; on overflow it
//! restarts on arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

trait BareissScalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `(a*b - c*d) / p`, the division being exact.
    fn step(a: &Self, b: &Self, c: &Self, d: &Self, p: &Self) -> Option<Self>;
}

impl BareissScalar for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn step(a: &Self, b: &Self, c: &Self, d: &Self, p: &Self) -> Option<Self> {
        let lhs = a.checked_mul(*b)?;
        let rhs = c.checked_mul(*d)?;
        Some(lhs.checked_sub(rhs)? / p)
    }
}

impl BareissScalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn step(a: &Self, b: &Self, c: &Self, d: &Self, p: &Self) -> Option<Self> {
        Some((a * b - c * d) / p)
    }
}

fn bareiss_rank<T: BareissScalar>(mut m: Vec<Vec<T>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_line = &top[rank];
        let pivot = pivot_line[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for c in col + 1..cols {
                row[c] = T::step(&pivot, &row[c], &factor, &pivot_line[c], &prev)?;
            }
            row[col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Rank of an integer matrix, viewed over the rationals.
pub fn rank(matrix: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    if let Some(r) = bareiss_rank(small) {
        return r;
    }
    let big: Vec<Vec<BigInt>> = matrix.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    bareiss_rank(big).expect("big-integer elimination cannot overflow")
}
