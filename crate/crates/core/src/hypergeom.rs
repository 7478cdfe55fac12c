//! Terminating `3F2` hypergeometric sums.

use alloc::format;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// `3F2(p1, p2, p3; q1, q2; z) = sum_k (p1)_k (p2)_k (p3)_k / ((q1)_k (q2)_k k!) z^k`.
///
/// At least one upper parameter must be a non-positive integer `-m`; the sum
/// then stops at `k = m` (the smallest such `m`). Lower parameters must be
/// positive.
pub fn eval_3f2_terminating(
    p1: i64,
    p2: i64,
    p3: i64,
    q1: i64,
    q2: i64,
    z: &BigRational,
) -> Result<BigRational> {
    if q1 <= 0 || q2 <= 0 {
        return Err(Error::domain(format!(
            "lower parameters must be positive, got ({q1}, {q2})"
        )));
    }
    let last = [p1, p2, p3]
        .into_iter()
        .filter(|&p| p <= 0)
        .map(|p| -p)
        .min()
        .ok_or(Error::NonTerminating)?;

    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    for k in 0..=last {
        sum += &term;
        let num = BigInt::from(p1 + k) * BigInt::from(p2 + k) * BigInt::from(p3 + k);
        let den = BigInt::from(q1 + k) * BigInt::from(q2 + k) * BigInt::from(k + 1);
        term = term * BigRational::new(num, den) * z;
    }
    Ok(sum)
}
