//! Exact coefficient distributions of the Baxter polynomials and finite-n
//! distances to the normal law.
//!
//! Probabilities, means and variances are exact rationals; they are rounded
//! to `f64` only when compared against Gaussian quantities.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::numbers::{baxter_moments, refined_baxter_row, BaxterMoments};
use crate::ore::{derivative_shift_coeffs, shift_up_coeffs};
use crate::{Error, Result};

const FRAC_1_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Nearest `f64` (NaN if the value is out of range).
pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Law of the coefficient index `X_n` with `P(X_n = k) = D(n,k) / B_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionSummary {
    pub n: i64,
    /// `p(n, k)` for `k = 0..=n`.
    pub probs: Vec<BigRational>,
    pub mu: BigRational,
    pub sigma2: BigRational,
}

impl DistributionSummary {
    /// `P(X_n <= k)` for `k = 0..=n`.
    pub fn cdf(&self) -> Vec<BigRational> {
        self.probs
            .iter()
            .scan(BigRational::zero(), |acc, p| {
                *acc += p;
                Some(acc.clone())
            })
            .collect()
    }
}

fn moments_to_mean_variance(m: &BaxterMoments) -> (BigRational, BigRational) {
    let b = BigRational::from_integer(m.value.clone());
    let mu = BigRational::from_integer(m.first.clone()) / &b;
    let second = BigRational::from_integer(m.second.clone()) / &b;
    let sigma2 = second + &mu - &mu * &mu;
    (mu, sigma2)
}

/// Exact probabilities, mean `B_n'(1)/B_n(1)` and variance
/// `B_n''(1)/B_n(1) + μ - μ^2`.
pub fn distribution(n: i64) -> Result<DistributionSummary> {
    if n < 2 {
        return Err(Error::domain(format!("distribution needs n >= 2, got {n}")));
    }
    let row = refined_baxter_row(n)?;
    let total: BigInt = row.iter().sum();
    let probs = row
        .iter()
        .map(|d| BigRational::new(d.clone(), total.clone()))
        .collect();
    let (mu, sigma2) = moments_to_mean_variance(&baxter_moments(n)?);
    Ok(DistributionSummary { n, probs, mu, sigma2 })
}

pub fn standard_normal_pdf(x: f64) -> f64 {
    FRAC_1_SQRT_2PI * libm::exp(-0.5 * x * x)
}

/// Upper tail `1 - Φ(a)` for `a >= 0`.
fn upper_tail(a: f64) -> f64 {
    if a < 5.0 {
        // Φ(a) = 1/2 + φ(a) sum_k a^(2k+1) / (1·3·...·(2k+1)), all terms positive.
        let a2 = a * a;
        let mut term = a;
        let mut sum = a;
        let mut k = 1.0;
        while term > sum * 1e-17 {
            term *= a2 / (2.0 * k + 1.0);
            sum += term;
            k += 1.0;
            if k > 1000.0 {
                break;
            }
        }
        0.5 - standard_normal_pdf(a) * sum
    } else {
        // Mills ratio continued fraction a + 1/(a + 2/(a + 3/(a + ...))).
        let mut frac = a;
        for k in (1..=80).rev() {
            frac = a + k as f64 / frac;
        }
        standard_normal_pdf(a) / frac
    }
}

/// Standard normal distribution function, absolute error below `1e-12`.
pub fn standard_normal_cdf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x >= 0.0 {
        1.0 - upper_tail(x)
    } else {
        upper_tail(-x)
    }
}

/// Finite-n normality distances for one `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalityReport {
    pub n: i64,
    pub kolmogorov: f64,
    pub local_sup: f64,
}

fn mean_sd(summary: &DistributionSummary) -> Result<(f64, f64)> {
    if summary.sigma2.is_zero() {
        return Err(Error::ZeroVariance { n: summary.n });
    }
    Ok((to_f64(&summary.mu), libm::sqrt(to_f64(&summary.sigma2))))
}

/// `sup_x |F_n(μ + xσ) - Φ(x)|`. `F_n` is a step function, so the supremum
/// is the largest one-sided gap at an atom `x_k = (k - μ)/σ`.
pub fn kolmogorov_from(summary: &DistributionSummary) -> Result<f64> {
    let (mu, sd) = mean_sd(summary)?;
    let mut prev = 0.0_f64;
    let mut sup = 0.0_f64;
    for (k, cum) in summary.cdf().iter().enumerate() {
        let phi = standard_normal_cdf((k as f64 - mu) / sd);
        let here = to_f64(cum);
        sup = sup.max((here - phi).abs()).max((prev - phi).abs());
        prev = here;
    }
    Ok(sup)
}

pub fn kolmogorov_distance(n: i64) -> Result<f64> {
    kolmogorov_from(&distribution(n)?)
}

/// `sup_x |σ p(n, ⌊μ + xσ⌋) - φ(x)|`.
///
/// For each integer `k` the set of `x` with `⌊μ + xσ⌋ = k` is the interval
/// `[(k-μ)/σ, (k+1-μ)/σ)`, on which `p` is constant and `φ` attains its
/// extremes at the endpoints or at `x = 0`. Indices outside `0..=n` have
/// `p = 0` and contribute `φ` at the endpoint closest to zero.
pub fn local_limit_from(summary: &DistributionSummary) -> Result<f64> {
    let (mu, sd) = mean_sd(summary)?;
    let n = summary.probs.len() as i64 - 1;
    let mut sup = standard_normal_pdf(-mu / sd).max(standard_normal_pdf((n as f64 + 1.0 - mu) / sd));
    for (k, p) in summary.probs.iter().enumerate() {
        let scaled = sd * to_f64(p);
        let lo = (k as f64 - mu) / sd;
        let hi = (k as f64 + 1.0 - mu) / sd;
        let mut candidates = [lo, hi, 0.0];
        let count = if lo <= 0.0 && 0.0 < hi { 3 } else { 2 };
        for x in &mut candidates[..count] {
            sup = sup.max((scaled - standard_normal_pdf(*x)).abs());
        }
    }
    Ok(sup)
}

pub fn local_limit_distance(n: i64) -> Result<f64> {
    local_limit_from(&distribution(n)?)
}

pub fn normality_report(n: i64) -> Result<NormalityReport> {
    let d = distribution(n)?;
    Ok(NormalityReport {
        n,
        kolmogorov: kolmogorov_from(&d)?,
        local_sup: local_limit_from(&d)?,
    })
}

/// `B_n(1)`, `B_n'(1)`, `B_n''(1)` for `n = 1..=max_n`, built once and read
/// afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentTable {
    rows: Vec<BaxterMoments>,
}

impl MomentTable {
    /// Direct summation of every row.
    pub fn direct(max_n: i64) -> Result<Self> {
        let rows = (1..=max_n).map(baxter_moments).collect::<Result<Vec<_>>>()?;
        Ok(Self { rows })
    }

    pub fn max_n(&self) -> i64 {
        self.rows.len() as i64
    }

    pub fn get(&self, n: i64) -> Option<&BaxterMoments> {
        self.rows.get(usize::try_from(n.checked_sub(1)?).ok()?)
    }

    fn require(&self, n: i64) -> Result<&BaxterMoments> {
        self.get(n).ok_or(Error::InsufficientOracle { n })
    }

    /// Exact `(μ_n, σ_n^2)`.
    pub fn mean_variance(&self, n: i64) -> Result<(BigRational, BigRational)> {
        Ok(moments_to_mean_variance(self.require(n)?))
    }

    /// `B_n''(1) / B_n(1)`.
    pub fn second_ratio(&self, n: i64) -> Result<BigRational> {
        let m = self.require(n)?;
        Ok(BigRational::new(m.second.clone(), m.value.clone()))
    }
}

/// Ratios whose limits are 1/2, 1/4 and 1/12.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitRatios {
    pub n: i64,
    pub m: i64,
    /// `B_n'(1) / (n B_n(1))`
    pub mean_ratio: f64,
    /// `B_n''(1) / (n^2 B_n(1))`
    pub second_ratio: f64,
    /// `(σ²_{n+m} - σ²_n) / m`, exact.
    pub variance_slope_exact: BigRational,
    pub variance_slope: f64,
}

pub fn limit_ratio_report_with(table: &MomentTable, n: i64, m: i64) -> Result<LimitRatios> {
    if n < 3 || m < 1 {
        return Err(Error::domain(format!("limit ratios need n >= 3 and m >= 1, got n = {n}, m = {m}")));
    }
    let (mu, s_n) = table.mean_variance(n)?;
    let (_, s_nm) = table.mean_variance(n + m)?;
    let nn = BigRational::from_integer(n.into());
    let mean_ratio = mu / &nn;
    let second_ratio = table.second_ratio(n)? / (&nn * &nn);
    let slope = (s_nm - s_n) / BigRational::from_integer(m.into());
    Ok(LimitRatios {
        n,
        m,
        mean_ratio: to_f64(&mean_ratio),
        second_ratio: to_f64(&second_ratio),
        variance_slope: to_f64(&slope),
        variance_slope_exact: slope,
    })
}

/// Limit ratios at `n` with the variance difference quotient over `m = 200`.
pub fn limit_ratio_report(n: i64) -> Result<LimitRatios> {
    let table = MomentTable::direct(n + 200)?;
    limit_ratio_report_with(&table, n, 200)
}

/// `(B_n'(1)/B_n(1), B_n''(1)/B_n(1))` obtained by solving the two mixed
/// identities at `x = 1` for the unknown moments, given the ratios
/// `B_{n+1}(1)/B_n(1)` and `B_{n+1}'(1)/B_n'(1)`.
pub fn moment_via_recurrence_with(table: &MomentTable, n: i64) -> Result<(BigRational, BigRational)> {
    if n < 2 {
        return Err(Error::domain(format!("moment cross-check needs n >= 2, got {n}")));
    }
    let cur = table.require(n)?;
    let next = table.require(n + 1)?;
    let zero_div = |what: &str| Error::ZeroDivision(format!("{what} at n = {n}"));
    if cur.value.is_zero() || cur.first.is_zero() {
        return Err(zero_div("vanishing moment"));
    }
    let value_ratio = BigRational::new(next.value.clone(), cur.value.clone());
    let first_ratio = BigRational::new(next.first.clone(), cur.first.clone());

    let one = BigRational::one();
    let [a, b, c] = shift_up_coeffs(n, &one);
    let [ta, tb, tc] = derivative_shift_coeffs(n, &one);
    if c.is_zero() {
        return Err(zero_div("c_n(1) = 0"));
    }
    let num = &one - &tc / &c * (&value_ratio - &a);
    let den = &ta * &first_ratio + &tb - &tc * &b / &c;
    if den.is_zero() {
        return Err(zero_div("vanishing denominator"));
    }
    let mean = num / den;
    let second = (&value_ratio - &a - &b * &mean) / &c;
    Ok((mean, second))
}

pub fn moment_via_recurrence(n: i64) -> Result<(BigRational, BigRational)> {
    let table = MomentTable::direct(n + 1)?;
    moment_via_recurrence_with(&table, n)
}
