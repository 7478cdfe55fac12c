//! Characteristic roots and formal power-type solutions of P-recursive
//! sequences.
//!
//! For a characteristic root `λ` the ansatz
//!
//! ```text
//! f(n) = λ^n n^ν (1 + b_1/n + b_2/n^2 + ...)
//! ```
//!
//! is substituted into `sum_j c_j(n) f(n-j) = 0`. Writing
//! `G_e(n) = sum_j c_j(n) λ^{-j} (1 - j/n)^e = n^d sum_i g_i(e) n^{-i}`
//! with every `g_i` a polynomial in `e`, the equation becomes
//! `sum_s b_s n^{ν-s} G_{ν-s}(n) = 0`. If `g_p` is the first `g_i` that is
//! not identically zero, the leading order gives the indicial equation
//! `g_p(ν) = 0`, and order `p + t` gives
//!
//! ```text
//! g_p(ν - t) b_t = -sum_{s<t} b_s g_{p+t-s}(ν - s).
//! ```
//!
//! Only rational `λ` and `ν` and no logarithmic or sub-exponential factors
//! are handled; anything else is reported as unsupported.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::RationalRoots;
use crate::recurrence::{generate_terms, PolyCoeffRecurrence, TermSequence};
use crate::sturm::{count_real_roots, Bound};
use crate::{DensePolynomial, Error, Result};

/// Characteristic polynomial in `λ`, normalized to coprime integer
/// coefficients with a positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicPolynomial {
    pub poly: DensePolynomial,
}

/// `c_0 λ^l - sum_{j>=1} c_j λ^{l-j}` where `c_j` is the coefficient of
/// `n^d` in `a_j(n)` and `d` is the largest coefficient degree.
pub fn characteristic_polynomial(rec: &PolyCoeffRecurrence) -> Result<CharacteristicPolynomial> {
    let coeffs = rec.coeffs();
    let order = rec.order();
    let d = coeffs.iter().filter_map(DensePolynomial::degree).max().unwrap_or(0);
    let top: Vec<BigRational> = coeffs.iter().map(|a| a.coeff(d)).collect();
    if top[0].is_zero() {
        return Err(Error::DegenerateCharacteristic);
    }
    let mut by_power = alloc::vec![BigRational::zero(); order + 1];
    for (j, c) in top.into_iter().enumerate() {
        by_power[order - j] = if j == 0 { c } else { -c };
    }
    let ints = DensePolynomial::new(by_power).primitive_integer_coeffs();
    let poly = DensePolynomial::from_integers(ints);
    let poly = if poly.leading_coeff().is_some_and(Signed::is_negative) {
        -poly
    } else {
        poly
    };
    Ok(CharacteristicPolynomial { poly })
}

/// Rational roots with multiplicities; `residual_degree()` tells whether
/// other roots remain.
pub fn rational_roots(cp: &CharacteristicPolynomial) -> Result<RationalRoots> {
    cp.poly.rational_roots()
}

/// Disjoint intervals `(lo, hi]`, each holding exactly one real root of the
/// non-rational part of the characteristic polynomial.
pub fn irrational_root_intervals(cp: &CharacteristicPolynomial) -> Result<Vec<(BigRational, BigRational)>> {
    let residual = rational_roots(cp)?.residual;
    if residual.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let p = crate::sturm::squarefree_part(&residual)?;
    // Cauchy bound: every root lies in (-R, R).
    let lc = p.leading_coeff().expect("nonzero").abs();
    let r = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lc)
        .fold(BigRational::zero(), |acc, c| if c > acc { c } else { acc })
        + BigRational::one();
    let mut out = Vec::new();
    let mut stack = alloc::vec![(-r.clone(), r)];
    while let Some((lo, hi)) = stack.pop() {
        let count = count_real_roots(&p, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))?;
        match count {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BranchStatus {
    /// Every requested coefficient was determined.
    Complete,
    /// Some `b_s` had a vanishing coefficient and a consistent equation; it was set to zero.
    ResonanceFreeParameter,
    /// A resonance with a nonzero right-hand side; the series stops before it.
    LogRequired,
}

impl BranchStatus {
    pub fn name(self) -> &'static str {
        match self {
            Self::Complete => "complete",
            Self::ResonanceFreeParameter => "resonance_free_parameter",
            Self::LogRequired => "log_required",
        }
    }
}

/// `λ^n n^ν (1 + b_1/n + ... + b_M/n^M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticBranch {
    pub lambda: BigRational,
    pub nu: BigRational,
    /// `b_1, ..., b_M` (`b_0 = 1` is implicit). Shorter than `order` only when
    /// the status is `LogRequired`.
    pub coeffs: Vec<BigRational>,
    pub order: usize,
    pub status: BranchStatus,
}

impl AsymptoticBranch {
    /// `f(n) / (λ^n n^ν (1 + sum_s b_s n^-s))`, exact then rounded. Requires integral `ν`.
    pub fn normalized_ratio(&self, f_n: &BigRational, n: i64) -> Result<f64> {
        if !self.nu.is_integer() {
            return Err(Error::UnsupportedAsymptotics(String::from(
                "normalized ratio needs an integral exponent",
            )));
        }
        let nn = BigRational::from_integer(n.into());
        let nu = self.nu.to_integer().to_i32().ok_or_else(|| {
            Error::UnsupportedAsymptotics(String::from("exponent out of range"))
        })?;
        let n_u32 = u32::try_from(n).map_err(|_| Error::domain("n must be nonnegative"))?;
        let mut series = BigRational::one();
        let mut pow = BigRational::one();
        for b in &self.coeffs {
            pow /= &nn;
            series += b * &pow;
        }
        let scale = num_traits::pow::Pow::pow(&self.lambda, n_u32) * num_traits::pow::Pow::pow(&nn, nu) * series;
        if scale.is_zero() {
            return Err(Error::ZeroDivision(format!("branch vanishes at n = {n}")));
        }
        Ok(crate::stats::to_f64(&(f_n / scale)))
    }
}

/// `C(e, m) = e (e-1) ... (e-m+1) / m!` as a polynomial in `e`.
fn binomial_in_e(m: usize) -> DensePolynomial {
    let mut p = DensePolynomial::one();
    for i in 0..m {
        p = &p * &DensePolynomial::new(alloc::vec![BigRational::from_integer(-BigInt::from(i)), BigRational::one()]);
    }
    let mut fact = BigInt::one();
    for i in 2..=m {
        fact *= i;
    }
    p.scale(&BigRational::new(BigInt::one(), fact))
}

/// `g_0, ..., g_{count-1}` for the expansion at `lambda`.
fn expansion_polys(homogeneous: &[DensePolynomial], lambda: &BigRational, count: usize) -> Vec<DensePolynomial> {
    let d = homogeneous.iter().filter_map(DensePolynomial::degree).max().unwrap_or(0);
    let binoms: Vec<DensePolynomial> = (0..count).map(binomial_in_e).collect();
    let inv = lambda.recip();
    (0..count)
        .map(|i| {
            let mut g = DensePolynomial::zero();
            let mut lam_pow = BigRational::one();
            for (j, c) in homogeneous.iter().enumerate() {
                let neg_j = BigRational::from_integer(-BigInt::from(j));
                for k in 0..=d {
                    let alpha = c.coeff(k);
                    if alpha.is_zero() || i + k < d {
                        continue;
                    }
                    let m = i + k - d;
                    // (-j)^m, with 0^0 = 1
                    let shift = num_traits::pow::Pow::pow(&neg_j, m as u32);
                    if shift.is_zero() {
                        continue;
                    }
                    g = &g + &binoms[m].scale(&(&lam_pow * &alpha * shift));
                }
                lam_pow *= &inv;
            }
            g
        })
        .collect()
}

/// Formal solutions at the characteristic root `lambda`, one per indicial
/// root `ν`, each carried to `order` correction terms.
pub fn expand_branch(rec: &PolyCoeffRecurrence, lambda: &BigRational, order: usize) -> Result<Vec<AsymptoticBranch>> {
    if order < 1 {
        return Err(Error::domain("expansion order must be at least 1"));
    }
    let cp = characteristic_polynomial(rec)?;
    if !cp.poly.eval(lambda).is_zero() {
        return Err(Error::NotACharacteristicRoot { lambda: lambda.clone() });
    }
    if lambda.is_zero() {
        return Err(Error::UnsupportedAsymptotics(String::from("zero characteristic root")));
    }
    let multiplicity = rational_roots(&cp)?
        .roots
        .into_iter()
        .find(|(r, _)| r == lambda)
        .map(|(_, m)| m)
        .expect("root was just checked");

    let homogeneous = rec.homogeneous_coeffs();
    let search = rec.order() + homogeneous.iter().filter_map(DensePolynomial::degree).max().unwrap_or(0) + 2;
    let gs = expansion_polys(&homogeneous, lambda, search + order + 1);
    let p = gs[..=search]
        .iter()
        .position(|g| !g.is_zero())
        .ok_or_else(|| Error::UnsupportedAsymptotics(String::from("no indicial equation found")))?;
    let indicial = &gs[p];
    if indicial.degree() != Some(multiplicity) {
        return Err(Error::UnsupportedAsymptotics(format!(
            "indicial equation has degree {} at a root of multiplicity {multiplicity}; \
             a sub-exponential factor exp(c n^(1/r)) is needed",
            indicial.degree().unwrap_or(0)
        )));
    }
    let exps = indicial.rational_roots()?;
    if exps.residual_degree() > 0 {
        return Err(Error::UnsupportedAsymptotics(format!(
            "indicial equation {indicial} has non-rational roots"
        )));
    }

    let branches = exps
        .roots
        .into_iter()
        .map(|(nu, _)| solve_coefficients(&gs, p, lambda, nu, order))
        .collect();
    Ok(branches)
}

fn solve_coefficients(
    gs: &[DensePolynomial],
    p: usize,
    lambda: &BigRational,
    nu: BigRational,
    order: usize,
) -> AsymptoticBranch {
    let indicial = &gs[p];
    let mut b: Vec<BigRational> = alloc::vec![BigRational::one()];
    let mut status = BranchStatus::Complete;
    for t in 1..=order {
        let shifted = |s: usize| &nu - BigRational::from_integer(s.into());
        let lin = indicial.eval(&shifted(t));
        let mut rhs = BigRational::zero();
        for (s, bs) in b.iter().enumerate() {
            if !bs.is_zero() {
                rhs -= bs * gs[p + t - s].eval(&shifted(s));
            }
        }
        if lin.is_zero() {
            if rhs.is_zero() {
                status = BranchStatus::ResonanceFreeParameter;
                b.push(BigRational::zero());
                continue;
            }
            status = BranchStatus::LogRequired;
            break;
        }
        b.push(rhs / lin);
    }
    b.remove(0);
    AsymptoticBranch {
        lambda: lambda.clone(),
        nu,
        coeffs: b,
        order,
        status,
    }
}

/// Residual series coefficients `sum_{s<=t} b_s g_{p+t-s}(ν - s)` for
/// `t = 0..=order`; all vanish for a correctly solved branch.
pub fn branch_residuals(rec: &PolyCoeffRecurrence, branch: &AsymptoticBranch) -> Result<Vec<BigRational>> {
    let homogeneous = rec.homogeneous_coeffs();
    let search = rec.order() + homogeneous.iter().filter_map(DensePolynomial::degree).max().unwrap_or(0) + 2;
    let gs = expansion_polys(&homogeneous, &branch.lambda, search + branch.order + 1);
    let p = gs.iter().position(|g| !g.is_zero()).ok_or(Error::ZeroPolynomial)?;
    let mut b = alloc::vec![BigRational::one()];
    b.extend(branch.coeffs.iter().cloned());
    Ok((0..b.len())
        .map(|t| {
            (0..=t).fold(BigRational::zero(), |acc, s| {
                acc + &b[s] * gs[p + t - s].eval(&(&branch.nu - BigRational::from_integer(s.into())))
            })
        })
        .collect())
}

/// The branch at the unique characteristic root of largest modulus.
///
/// Fails when that root is not rational and simple, when two roots share the
/// largest modulus, or when non-real roots make dominance uncertifiable.
pub fn dominant_branch(rec: &PolyCoeffRecurrence, order: usize) -> Result<AsymptoticBranch> {
    let cp = characteristic_polynomial(rec)?;
    let rr = rational_roots(&cp)?;
    let (top, mult) = rr
        .roots
        .iter()
        .max_by(|a, b| a.0.abs().cmp(&b.0.abs()))
        .cloned()
        .ok_or_else(|| Error::UnsupportedAsymptotics(String::from("no rational characteristic root")))?;
    let radius = top.abs();
    let ties: Vec<String> = rr
        .roots
        .iter()
        .filter(|(r, _)| r.abs() == radius)
        .map(|(r, _)| format!("{r}"))
        .collect();
    if ties.len() > 1 {
        return Err(Error::DominantRootTie(ties.join(", ")));
    }
    if mult > 1 {
        return Err(Error::UnsupportedAsymptotics(format!(
            "dominant root {top} has multiplicity {mult}"
        )));
    }
    if rr.residual_degree() > 0 {
        let rest = crate::sturm::squarefree_part(&rr.residual)?;
        let deg = rest.degree().unwrap_or(0);
        let real = count_real_roots(&rest, &Bound::NegInfinity, &Bound::PosInfinity)?;
        if real != deg {
            return Err(Error::UnsupportedAsymptotics(String::from(
                "non-real characteristic roots; dominance not certified",
            )));
        }
        // `rest` has no rational roots, so ±radius are not roots of it.
        let outside = count_real_roots(&rest, &Bound::NegInfinity, &Bound::Finite(-radius.clone()))?
            + count_real_roots(&rest, &Bound::Finite(radius.clone()), &Bound::PosInfinity)?;
        if outside > 0 {
            return Err(Error::UnsupportedAsymptotics(String::from(
                "irrational characteristic root of modulus >= the largest rational root",
            )));
        }
    }
    let mut branches = expand_branch(rec, &top, order)?;
    branches.sort_by(|a, b| b.nu.cmp(&a.nu));
    Ok(branches.remove(0))
}

/// `f(n+1) / f(n)` from exactly generated terms.
pub fn ratio_diagnostic(rec: &PolyCoeffRecurrence, n: i64) -> Result<f64> {
    let terms = generate_terms(rec, (n + 1).max(rec.valid_from()))?;
    ratio_from_terms(&terms, n)
}

/// `f(n+1) / f(n)` from precomputed terms.
pub fn ratio_from_terms(terms: &TermSequence, n: i64) -> Result<f64> {
    let den = terms.get(n).ok_or(Error::InsufficientOracle { n })?;
    let num = terms.get(n + 1).ok_or(Error::InsufficientOracle { n: n + 1 })?;
    if den.is_zero() {
        return Err(Error::ZeroDivision(format!("f({n}) = 0")));
    }
    Ok(crate::stats::to_f64(&(num / den)))
}
