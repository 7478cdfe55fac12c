//! Binomials, Pochhammer symbols and the closed forms for refined Baxter
//! numbers `D(n,k)`, Θ-numbers and Baxter numbers `B_n`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{DensePolynomial, Error, Result};

/// `C(n, k)`, zero when `k < 0` or `k > n`.
///
/// Uses the multiplicative formula with an exact division after every
/// step, so intermediates never exceed `k * C(n, k)`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::domain(format!("binomial with negative upper index {n}")));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    Ok(acc)
}

/// The full row `C(n, 0), ..., C(n, n)`.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c *= n - k;
        c /= k + 1;
        row.push(c.clone());
    }
    row
}

/// Rising factorial `(a)_m = a (a+1) ... (a+m-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &BigRational, m: i64) -> Result<BigRational> {
    if m < 0 {
        return Err(Error::domain(format!("Pochhammer symbol with negative length {m}")));
    }
    let mut acc = BigRational::one();
    let mut factor = a.clone();
    for _ in 0..m {
        acc *= &factor;
        factor += BigRational::one();
    }
    Ok(acc)
}

fn require_integer(value: BigRational, context: impl FnOnce() -> alloc::string::String) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NotIntegral { context: context() })
    }
}

/// `2 / (n (n+1)^2)` as an exact rational.
fn baxter_prefactor(n: i64) -> BigRational {
    let n_big = BigInt::from(n);
    let np1 = BigInt::from(n + 1);
    BigRational::new(BigInt::from(2), &n_big * &np1 * &np1)
}

/// Refined Baxter number
/// `D(n,k) = 2/(n(n+1)^2) C(n+1,k-1) C(n+1,k) C(n+1,k+1)`.
///
/// The prefactor is applied as an exact rational and the result is checked
/// for integrality; a non-integral value is reported as an error and means
/// the evaluation is wrong.
pub fn refined_baxter(n: i64, k: i64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::domain(format!("refined Baxter number needs n >= 1, got {n}")));
    }
    if k <= 0 || k > n {
        return Ok(BigInt::zero());
    }
    let product = binomial(n + 1, k - 1)? * binomial(n + 1, k)? * binomial(n + 1, k + 1)?;
    let value = baxter_prefactor(n) * BigRational::from_integer(product);
    require_integer(value, || format!("D({n},{k})"))
}

/// `[D(n,0), D(n,1), ..., D(n,n)]` from a single binomial row.
pub fn refined_baxter_row(n: i64) -> Result<Vec<BigInt>> {
    if n < 1 {
        return Err(Error::domain(format!("refined Baxter row needs n >= 1, got {n}")));
    }
    let row = binomial_row((n + 1) as u64);
    let prefactor = baxter_prefactor(n);
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(BigInt::zero());
    for k in 1..=n as usize {
        let product = &row[k - 1] * &row[k] * &row[k + 1];
        let value = &prefactor * BigRational::from_integer(product);
        out.push(require_integer(value, || format!("D({n},{k})"))?);
    }
    Ok(out)
}

/// Θ-number `2/((s+1)^2 (s+2)) C(s+t,s) C(s+t+1,s) C(s+t+2,s)`, which
/// satisfies `Θ(k-1, n-k) = D(n,k)`.
pub fn theta(s: i64, t: i64) -> Result<BigInt> {
    if s < 0 || t < 0 {
        return Err(Error::domain(format!("Θ-number needs s, t >= 0, got ({s}, {t})")));
    }
    let product = binomial(s + t, s)? * binomial(s + t + 1, s)? * binomial(s + t + 2, s)?;
    let sp1 = BigInt::from(s + 1);
    let value = BigRational::new(BigInt::from(2), &sp1 * &sp1 * BigInt::from(s + 2))
        * BigRational::from_integer(product);
    require_integer(value, || format!("Θ({s},{t})"))
}

/// Baxter number `B_n`, with `B_0 = 1`.
pub fn baxter_number(n: i64) -> Result<BigInt> {
    match n {
        n if n < 0 => Err(Error::domain(format!("Baxter number needs n >= 0, got {n}"))),
        0 => Ok(BigInt::one()),
        n => Ok(refined_baxter_row(n)?.into_iter().sum()),
    }
}

/// Baxter polynomial `sum_k D(n,k) x^k`.
pub fn baxter_poly(n: i64) -> Result<DensePolynomial> {
    Ok(DensePolynomial::from_integers(refined_baxter_row(n)?))
}

/// `B_n(1)`, `B_n'(1)` and `B_n''(1)` summed directly from the row of `D(n,k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaxterMoments {
    pub value: BigInt,
    pub first: BigInt,
    pub second: BigInt,
}

pub fn baxter_moments(n: i64) -> Result<BaxterMoments> {
    let row = refined_baxter_row(n)?;
    let mut m = BaxterMoments {
        value: BigInt::zero(),
        first: BigInt::zero(),
        second: BigInt::zero(),
    };
    for (k, d) in row.iter().enumerate() {
        let k = k as u64;
        m.value += d;
        m.first += d * k;
        if k >= 2 {
            m.second += d * (k * (k - 1));
        }
    }
    Ok(m)
}

/// Franel number `sum_k C(n,k)^3`.
pub fn franel(n: u64) -> BigInt {
    binomial_row(n).iter().map(|c| c * c * c).sum()
}
