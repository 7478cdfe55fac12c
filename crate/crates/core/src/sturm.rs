//! Sturm chains over the integers and real-root counting.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::numbers::baxter_poly;
use crate::{DensePolynomial, Error, Result};

/// Interval endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(BigRational),
    PosInfinity,
}

impl Bound {
    fn less_than(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::NegInfinity, Bound::NegInfinity) | (Bound::PosInfinity, _) => false,
            (Bound::NegInfinity, _) | (_, Bound::PosInfinity) => true,
            (Bound::Finite(_), Bound::NegInfinity) => false,
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
        }
    }
}

type IntPoly = Vec<BigInt>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Divides out the (positive) content.
fn primitive(p: IntPoly) -> IntPoly {
    let content = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &content).collect()
}

fn derivative(p: &IntPoly) -> IntPoly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * k).collect())
}

/// Remainder of `|lc(b)|^(deg a - deg b + 1) * a` modulo `b`. Scaling by a
/// positive constant keeps the signs a Sturm chain depends on.
fn positive_prem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return a.clone();
    }
    let delta = a.len() - b.len();
    let lc = &b[db];
    let mut r = a.clone();
    for k in (0..=delta).rev() {
        let top = r.get(k + db).cloned().unwrap_or_else(BigInt::zero);
        for c in r.iter_mut() {
            *c *= lc;
        }
        if !top.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                r[k + i] -= &top * bc;
            }
        }
    }
    let mut r = trim(r);
    if lc.is_negative() && (delta + 1) % 2 == 1 {
        for c in r.iter_mut() {
            *c = -&*c;
        }
    }
    r
}

/// Primitive greatest common divisor over the integers.
fn int_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (primitive(trim(a.clone())), primitive(trim(b.clone())));
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(positive_prem(&a, &b));
        a = b;
        b = r;
    }
    if a.last().is_some_and(Signed::is_negative) {
        a = a.into_iter().map(|c| -c).collect();
    }
    a
}

/// Exact quotient `a / b` over the integers; `b` must divide `a`.
fn int_exact_div(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.len() - 1;
    let mut r = a.clone();
    let mut q = alloc::vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let (coef, rem) = r[k + db].div_rem(&b[db]);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        if !coef.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                r[k + i] -= &coef * bc;
            }
        }
        q[k] = coef;
    }
    q
}

fn to_int_poly(p: &DensePolynomial) -> IntPoly {
    p.primitive_integer_coeffs()
}

/// `p / gcd(p, p')`, keeping the leading coefficient of `p`.
pub fn squarefree_part(p: &DensePolynomial) -> Result<DensePolynomial> {
    let lc = p.leading_coeff().ok_or(Error::ZeroPolynomial)?.clone();
    let ip = to_int_poly(p);
    let g = int_gcd(&ip, &derivative(&ip));
    let q = DensePolynomial::from_integers(int_exact_div(&ip, &g));
    let qlc = q.leading_coeff().expect("nonzero quotient").clone();
    Ok(q.scale(&(lc / qlc)))
}

/// Degree of `gcd(p, p')`; zero iff `p` is squarefree.
pub fn repeated_root_degree(p: &DensePolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ip = to_int_poly(p);
    Ok(int_gcd(&ip, &derivative(&ip)).len().saturating_sub(1))
}

/// `p, p', -prem(p, p'), ...` down to a nonzero constant, each made primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    pub chain: Vec<DensePolynomial>,
    ints: Vec<IntPoly>,
}

impl SturmChain {
    /// Requires a nonzero squarefree polynomial.
    pub fn new(p: &DensePolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p0 = to_int_poly(p);
        let p1 = primitive(derivative(&p0));
        let mut ints = alloc::vec![p0];
        if !p1.is_empty() {
            ints.push(p1);
        }
        while ints.len() >= 2 {
            let n = ints.len();
            let r = positive_prem(&ints[n - 2], &ints[n - 1]);
            if r.is_empty() {
                break;
            }
            ints.push(primitive(r.into_iter().map(|c| -c).collect()));
        }
        if ints.last().is_some_and(|last| last.len() > 1) {
            return Err(Error::NotSquarefree);
        }
        let chain = ints
            .iter()
            .map(|c| DensePolynomial::from_integers(c.iter().cloned()))
            .collect();
        Ok(Self { chain, ints })
    }

    fn sign_at(p: &IntPoly, at: &Bound) -> i32 {
        let lead = p.last().map_or(0, |c| c.signum().to_i32());
        match at {
            Bound::PosInfinity => lead,
            Bound::NegInfinity => {
                if (p.len() - 1) % 2 == 0 {
                    lead
                } else {
                    -lead
                }
            }
            Bound::Finite(x) => {
                // sign of q^deg * p(num/q) with q > 0, evaluated over the integers
                let (num, den) = (x.numer(), x.denom());
                let deg = p.len() - 1;
                let mut acc = BigInt::zero();
                let mut den_pow = BigInt::one();
                let mut terms: Vec<BigInt> = Vec::with_capacity(p.len());
                for _ in 0..=deg {
                    terms.push(den_pow.clone());
                    den_pow *= den;
                }
                for (k, c) in p.iter().enumerate().rev() {
                    acc = acc * num + c * &terms[deg - k];
                }
                acc.signum().to_i32()
            }
        }
    }

    /// Sign variations of the chain at `at`, zeros skipped.
    pub fn variations(&self, at: &Bound) -> usize {
        let mut count = 0;
        let mut prev = 0;
        for p in &self.ints {
            let s = Self::sign_at(p, at);
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Bound, b: &Bound) -> Result<usize> {
        if !a.less_than(b) {
            return Err(Error::EmptyInterval);
        }
        Ok(self.variations(a).saturating_sub(self.variations(b)))
    }
}

trait SignumI32 {
    fn to_i32(&self) -> i32;
}

impl SignumI32 for BigInt {
    fn to_i32(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

/// Number of distinct real roots of a squarefree `p` in `(a, b]`.
pub fn count_real_roots(p: &DensePolynomial, a: &Bound, b: &Bound) -> Result<usize> {
    if !a.less_than(b) {
        return Err(Error::EmptyInterval);
    }
    SturmChain::new(p)?.count(a, b)
}

/// Outcome of the real-rootedness check of one Baxter polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRootReport {
    pub n: i64,
    pub degree: usize,
    pub squarefree_degree: usize,
    pub distinct_real_roots: usize,
    pub positive_roots: usize,
    pub zero_is_root: bool,
    /// Degree of `gcd(p, p')`.
    pub repeated_root_degree: usize,
}

impl RealRootReport {
    /// All roots real, none positive, and zero among them.
    pub fn passed(&self) -> bool {
        self.distinct_real_roots == self.squarefree_degree && self.positive_roots == 0 && self.zero_is_root
    }
}

pub fn check_baxter_real_rooted(n: i64) -> Result<RealRootReport> {
    if n < 2 {
        return Err(Error::domain(alloc::format!("real-rootedness is checked from n = 2, got {n}")));
    }
    let p = baxter_poly(n)?;
    let sq = squarefree_part(&p)?;
    let chain = SturmChain::new(&sq)?;
    let zero = Bound::Finite(BigRational::zero());
    Ok(RealRootReport {
        n,
        degree: p.degree().unwrap_or(0),
        squarefree_degree: sq.degree().unwrap_or(0),
        distinct_real_roots: chain.count(&Bound::NegInfinity, &Bound::PosInfinity)?,
        positive_roots: chain.count(&zero, &Bound::PosInfinity)?,
        zero_is_root: p.coeff(0).is_zero(),
        repeated_root_degree: repeated_root_degree(&p)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn fin(v: BigRational) -> Bound {
        Bound::Finite(v)
    }

    #[test]
    fn squarefree_parts() {
        let p = DensePolynomial::from_i64(&[0, 0, 1, 1]);
        assert_eq!(squarefree_part(&p).unwrap(), DensePolynomial::from_i64(&[0, 1, 1]));
        let c = DensePolynomial::from_i64(&[0, 1, 4, 1]);
        assert_eq!(squarefree_part(&c).unwrap(), c);
        let k = DensePolynomial::from_i64(&[5]);
        assert_eq!(squarefree_part(&k).unwrap(), k);
        assert_eq!(squarefree_part(&DensePolynomial::zero()), Err(Error::ZeroPolynomial));
        // 2 (x-1)^3 (x+2) -> 2 (x-1)(x+2)
        let p = DensePolynomial::from_roots(&[rat(1), rat(1), rat(1), rat(-2)]).scale(&rat(2));
        assert_eq!(
            squarefree_part(&p).unwrap(),
            DensePolynomial::from_roots(&[rat(1), rat(-2)]).scale(&rat(2))
        );
    }

    #[test]
    fn counting() {
        let q = DensePolynomial::from_i64(&[1, 4, 1]);
        assert_eq!(count_real_roots(&q, &Bound::NegInfinity, &Bound::PosInfinity).unwrap(), 2);
        assert_eq!(count_real_roots(&q, &fin(rat(0)), &Bound::PosInfinity).unwrap(), 0);
        let i = DensePolynomial::from_i64(&[1, 0, 1]);
        assert_eq!(count_real_roots(&i, &Bound::NegInfinity, &Bound::PosInfinity).unwrap(), 0);
        // roots -2 ± sqrt(3) ≈ -3.73, -0.27
        assert_eq!(count_real_roots(&q, &fin(rat(-1)), &fin(rat(0))).unwrap(), 1);
        assert_eq!(count_real_roots(&q, &fin(rat(-4)), &fin(ratio(-1, 2))).unwrap(), 1);
    }

    #[test]
    fn half_open_interval() {
        // roots 1 and 2: (1, 2] contains only 2
        let p = DensePolynomial::from_roots(&[rat(1), rat(2)]);
        assert_eq!(count_real_roots(&p, &fin(rat(1)), &fin(rat(2))).unwrap(), 1);
        assert_eq!(count_real_roots(&p, &fin(rat(0)), &fin(rat(1))).unwrap(), 1);
    }

    #[test]
    fn errors() {
        let q = DensePolynomial::from_i64(&[1, 4, 1]);
        assert_eq!(count_real_roots(&q, &fin(rat(1)), &fin(rat(1))), Err(Error::EmptyInterval));
        assert_eq!(count_real_roots(&q, &Bound::PosInfinity, &Bound::NegInfinity), Err(Error::EmptyInterval));
        let sq = DensePolynomial::from_i64(&[1, 2, 1]);
        assert_eq!(count_real_roots(&sq, &Bound::NegInfinity, &Bound::PosInfinity), Err(Error::NotSquarefree));
    }

    #[test]
    fn small_baxter_polynomials() {
        let r = check_baxter_real_rooted(3).unwrap();
        assert!(r.passed());
        assert_eq!((r.distinct_real_roots, r.positive_roots), (3, 0));
        let r = check_baxter_real_rooted(2).unwrap();
        assert!(r.passed());
        assert_eq!(r.distinct_real_roots, 2);
        assert!(check_baxter_real_rooted(1).is_err());
    }
}
