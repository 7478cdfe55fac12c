//! Linear recurrences with polynomial coefficients, term generation and
//! exact residual checks.
//!
//! A recurrence of order `l` is stored as
//!
//! ```text
//! a_0(n) f(n) = a_1(n) f(n-1) + ... + a_l(n) f(n-l),    n >= valid_from
//! ```
//!
//! with seeds `f(valid_from - l), ..., f(valid_from - 1)`. The residual at
//! `n` is `a_0(n) f(n) - sum_j a_j(n) f(n-j)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::numbers::{baxter_moments, baxter_number, franel};
use crate::{DensePolynomial, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCoeffRecurrence {
    label: String,
    coeffs: Vec<DensePolynomial>,
    valid_from: i64,
    seeds: Vec<BigRational>,
    integral: bool,
}

impl PolyCoeffRecurrence {
    /// `coeffs = [a_0, a_1, ..., a_l]`; `seeds` must hold exactly `l` values.
    ///
    /// Rejects recurrences whose leading coefficient `a_0` has an integer
    /// root at or beyond `valid_from`. With `integral` set, generated terms
    /// are required to be integers.
    pub fn new(
        label: impl Into<String>,
        coeffs: Vec<DensePolynomial>,
        valid_from: i64,
        seeds: Vec<BigRational>,
        integral: bool,
    ) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::domain("recurrence order must be at least 1"));
        }
        let order = coeffs.len() - 1;
        if seeds.len() != order {
            return Err(Error::domain(format!(
                "order {order} recurrence needs {order} seeds, got {}",
                seeds.len()
            )));
        }
        let lead = &coeffs[0];
        if lead.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if lead.degree() != Some(0) {
            for (root, _) in lead.rational_roots()?.roots {
                if root.is_integer() && root >= BigRational::from_integer(valid_from.into()) {
                    return Err(Error::VanishingLeadingCoefficient {
                        n: i64::try_from(root.to_integer()).unwrap_or(i64::MAX),
                    });
                }
            }
        }
        Ok(Self {
            label: label.into(),
            coeffs,
            valid_from,
            seeds,
            integral,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `[a_0, a_1, ..., a_l]`.
    pub fn coeffs(&self) -> &[DensePolynomial] {
        &self.coeffs
    }

    /// `[a_0, -a_1, ..., -a_l]`, i.e. `sum_j c_j(n) f(n-j) = 0`.
    pub fn homogeneous_coeffs(&self) -> Vec<DensePolynomial> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| if j == 0 { c.clone() } else { -c })
            .collect()
    }

    pub fn valid_from(&self) -> i64 {
        self.valid_from
    }

    /// Index of the first seed.
    pub fn seed_start(&self) -> i64 {
        self.valid_from - self.order() as i64
    }

    pub fn seeds(&self) -> &[BigRational] {
        &self.seeds
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    /// Same recurrence with different seeds.
    pub fn with_seeds(&self, seeds: Vec<BigRational>) -> Result<Self> {
        Self::new(
            self.label.clone(),
            self.coeffs.clone(),
            self.valid_from,
            seeds,
            self.integral,
        )
    }

    /// `a_0(n) f(n) - sum_j a_j(n) f(n-j)` with `f` read from `terms`.
    pub fn residual(&self, n: i64, terms: &TermSequence) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (j, a) in self.coeffs.iter().enumerate() {
            let idx = n - j as i64;
            let f = terms.get(idx).ok_or(Error::InsufficientOracle { n: idx })?;
            let term = a.eval_i64(n) * f;
            if j == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for PolyCoeffRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) f(n) =", self.coeffs[0])?;
        for (j, a) in self.coeffs.iter().enumerate().skip(1) {
            let sep = if j == 1 { " " } else { " + " };
            write!(f, "{sep}({a}) f(n-{j})")?;
        }
        write!(f, ", n >= {}", self.valid_from)
    }
}

/// Consecutive terms `f(start), f(start+1), ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermSequence {
    pub start: i64,
    pub values: Vec<BigRational>,
}

impl TermSequence {
    pub fn new(start: i64, values: Vec<BigRational>) -> Self {
        Self { start, values }
    }

    /// Builds `f(from..=to)` from a closure.
    pub fn from_fn(from: i64, to: i64, mut f: impl FnMut(i64) -> Result<BigRational>) -> Result<Self> {
        let values = (from..=to).map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(from, values))
    }

    pub fn get(&self, n: i64) -> Option<&BigRational> {
        let idx = usize::try_from(n.checked_sub(self.start)?).ok()?;
        self.values.get(idx)
    }

    /// Last covered index.
    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }
}

/// Generates `f(seed_start..=upto)` by exact division by `a_0(n)`.
pub fn generate_terms(rec: &PolyCoeffRecurrence, upto: i64) -> Result<TermSequence> {
    if upto < rec.valid_from {
        return Err(Error::BelowValidRange {
            n: upto,
            valid_from: rec.valid_from,
        });
    }
    let start = rec.seed_start();
    let mut values: Vec<BigRational> = rec.seeds.clone();
    values.reserve((upto - rec.valid_from + 1) as usize);
    for n in rec.valid_from..=upto {
        let lead = rec.coeffs[0].eval_i64(n);
        if lead.is_zero() {
            return Err(Error::VanishingLeadingCoefficient { n });
        }
        let mut rhs = BigRational::zero();
        for (j, a) in rec.coeffs.iter().enumerate().skip(1) {
            let f = &values[(n - j as i64 - start) as usize];
            if !f.is_zero() {
                rhs += a.eval_i64(n) * f;
            }
        }
        let term = rhs / lead;
        if rec.integral && !term.is_integer() {
            return Err(Error::NotIntegral {
                context: format!("{} term at n = {n}", rec.label),
            });
        }
        values.push(term);
    }
    Ok(TermSequence::new(start, values))
}

/// Checks the recurrence against independently computed terms on `from..=to`.
pub fn verify_recurrence(
    rec: &PolyCoeffRecurrence,
    oracle: &TermSequence,
    from: i64,
    to: i64,
) -> Result<VerificationReport> {
    if from < rec.valid_from {
        return Err(Error::BelowValidRange {
            n: from,
            valid_from: rec.valid_from,
        });
    }
    let needed = from - rec.order() as i64;
    if oracle.get(needed).is_none() {
        return Err(Error::InsufficientOracle { n: needed });
    }
    if to >= from && oracle.get(to).is_none() {
        return Err(Error::InsufficientOracle { n: to });
    }
    let mut report = VerificationReport::new(rec.label.clone());
    for n in from..=to {
        report.push(n, Residual::Scalar(rec.residual(n, oracle)?));
    }
    Ok(report)
}

/// What was left over when checking one instance of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Residual {
    Scalar(BigRational),
    Polynomial(DensePolynomial),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Scalar(r) => r.is_zero(),
            Residual::Polynomial(p) => p.is_zero(),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Scalar(r) => write!(f, "{r}"),
            Residual::Polynomial(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub n: i64,
    pub residual: Residual,
}

/// One residual per checked index; passes iff every residual is exactly zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub label: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, n: i64, residual: Residual) {
        self.checks.push(Check { n, residual });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.residual.is_zero())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.residual.is_zero())
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

/// The recurrences shipped with the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BuiltinRecurrence {
    /// `B_n`, order 2, valid for `n >= 3`.
    Baxter,
    /// `B_n'(1)`, order 3, valid for `n >= 4`.
    D1,
    /// `B_n''(1)`, order 3, valid for `n >= 4`.
    D2,
    /// Franel numbers `sum_k C(n,k)^3`, order 2, valid for `n >= 2`.
    Franel,
}

impl BuiltinRecurrence {
    pub const ALL: [BuiltinRecurrence; 4] = [Self::Baxter, Self::D1, Self::D2, Self::Franel];

    pub fn name(self) -> &'static str {
        match self {
            Self::Baxter => "baxter",
            Self::D1 => "d1",
            Self::D2 => "d2",
            Self::Franel => "franel",
        }
    }

    /// The term computed directly from its closed form or defining sum.
    pub fn direct_term(self, n: i64) -> Result<BigRational> {
        let value = match self {
            Self::Baxter => baxter_number(n)?,
            Self::D1 | Self::D2 if n == 0 => BigInt::zero(),
            Self::D1 => baxter_moments(n)?.first,
            Self::D2 => baxter_moments(n)?.second,
            Self::Franel => {
                let n = u64::try_from(n).map_err(|_| Error::domain("Franel index must be >= 0"))?;
                franel(n)
            }
        };
        Ok(BigRational::from_integer(value))
    }

    /// Direct values on `from..=to`.
    pub fn direct_terms(self, from: i64, to: i64) -> Result<TermSequence> {
        TermSequence::from_fn(from, to, |n| self.direct_term(n))
    }
}

impl fmt::Display for BuiltinRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinRecurrence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownRecurrence(s.to_string()))
    }
}

fn lin(c0: i64, c1: i64) -> DensePolynomial {
    DensePolynomial::from_i64(&[c0, c1])
}

fn product(factors: &[DensePolynomial]) -> DensePolynomial {
    factors.iter().fold(DensePolynomial::one(), |acc, f| &acc * f)
}

fn scaled(c: i64, p: DensePolynomial) -> DensePolynomial {
    p.scale(&BigRational::from_integer(c.into()))
}

/// Coefficients `[a_0, ..., a_l]` of a built-in recurrence.
fn builtin_coeffs(which: BuiltinRecurrence) -> Vec<DensePolynomial> {
    let n = |c: i64| lin(c, 1); // n + c
    match which {
        BuiltinRecurrence::Baxter => alloc::vec![
            product(&[n(2), n(3)]),
            DensePolynomial::from_i64(&[-2, 7, 7]),
            scaled(8, product(&[n(-1), n(-2)])),
        ],
        BuiltinRecurrence::D1 => alloc::vec![
            product(&[lin(-2, 3), n(3), n(2), n(1)]),
            scaled(6, product(&[n(1), DensePolynomial::from_i64(&[-4, 0, 5, 3])])),
            scaled(3, product(&[n(-2), DensePolynomial::from_i64(&[-6, -7, 6, 15])])),
            scaled(8, product(&[lin(1, 3), n(-3), n(-2), n(-1)])),
        ],
        BuiltinRecurrence::D2 => alloc::vec![
            product(&[lin(-7, 9), n(3), n(2), n(-2)]),
            scaled(6, DensePolynomial::from_i64(&[4, -20, -12, 5, 9])),
            scaled(3, product(&[n(-1), DensePolynomial::from_i64(&[8, -50, -77, 45])])),
            scaled(8, product(&[lin(2, 9), n(-1), n(-2), n(-3)])),
        ],
        // (n+2)^2 u(n+2) = (7n^2+21n+16) u(n+1) + 8(n+1)^2 u(n), shifted by two.
        BuiltinRecurrence::Franel => alloc::vec![
            product(&[n(0), n(0)]),
            DensePolynomial::from_i64(&[2, -7, 7]),
            scaled(8, product(&[n(-1), n(-1)])),
        ],
    }
}

fn builtin_valid_from(which: BuiltinRecurrence) -> i64 {
    match which {
        BuiltinRecurrence::Baxter => 3,
        BuiltinRecurrence::D1 | BuiltinRecurrence::D2 => 4,
        BuiltinRecurrence::Franel => 2,
    }
}

fn stored_seeds(which: BuiltinRecurrence) -> &'static [i64] {
    match which {
        BuiltinRecurrence::Baxter => &[1, 2],
        BuiltinRecurrence::D1 => &[1, 3, 12],
        BuiltinRecurrence::D2 => &[0, 2, 14],
        BuiltinRecurrence::Franel => &[1, 2],
    }
}

/// Built-in recurrence with its stored seed constants.
pub fn builtin_recurrence(which: BuiltinRecurrence) -> PolyCoeffRecurrence {
    let seeds = stored_seeds(which)
        .iter()
        .map(|&s| BigRational::from_integer(s.into()))
        .collect();
    PolyCoeffRecurrence::new(which.name(), builtin_coeffs(which), builtin_valid_from(which), seeds, true)
        .expect("built-in recurrences are well formed")
}

/// Built-in recurrence with seeds recomputed from the closed forms.
pub fn builtin_recurrence_derived(which: BuiltinRecurrence) -> Result<PolyCoeffRecurrence> {
    let valid_from = builtin_valid_from(which);
    let order = builtin_coeffs(which).len() as i64 - 1;
    let seeds = (valid_from - order..valid_from)
        .map(|n| which.direct_term(n))
        .collect::<Result<Vec<_>>>()?;
    builtin_recurrence(which).with_seeds(seeds)
}

/// Looks up a built-in recurrence by name.
pub fn builtin_recurrence_by_name(name: &str) -> Result<PolyCoeffRecurrence> {
    Ok(builtin_recurrence(name.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn builtin_shapes() {
        let b = builtin_recurrence(BuiltinRecurrence::Baxter);
        assert_eq!(b.order(), 2);
        assert_eq!(b.coeffs()[0], DensePolynomial::from_i64(&[6, 5, 1]));
        assert_eq!(b.coeffs()[2], DensePolynomial::from_i64(&[16, -24, 8]));

        let d2 = builtin_recurrence(BuiltinRecurrence::D2);
        assert_eq!(d2.order(), 3);
        assert_eq!(d2.coeffs()[0], product(&[lin(-7, 9), lin(3, 1), lin(2, 1), lin(-2, 1)]));
        assert_eq!(d2.valid_from(), 4);
        assert_eq!(d2.seed_start(), 1);
    }

    #[test]
    fn unknown_name() {
        assert_eq!(
            builtin_recurrence_by_name("catalan"),
            Err(Error::UnknownRecurrence("catalan".into()))
        );
    }

    #[test]
    fn stored_seeds_match_closed_forms() {
        for which in BuiltinRecurrence::ALL {
            assert_eq!(
                builtin_recurrence(which),
                builtin_recurrence_derived(which).unwrap(),
                "{which}"
            );
        }
    }

    #[test]
    fn generates_known_terms() {
        let b = generate_terms(&builtin_recurrence(BuiltinRecurrence::Baxter), 9).unwrap();
        assert_eq!(b.get(9), Some(&rat(58202)));
        assert_eq!(b.start, 1);
        let d1 = generate_terms(&builtin_recurrence(BuiltinRecurrence::D1), 5).unwrap();
        assert_eq!(d1.get(5), Some(&rat(276)));
        let d2 = generate_terms(&builtin_recurrence(BuiltinRecurrence::D2), 5).unwrap();
        assert_eq!(d2.get(5), Some(&rat(600)));
        let fr = generate_terms(&builtin_recurrence(BuiltinRecurrence::Franel), 2).unwrap();
        assert_eq!(fr.get(2), Some(&rat(10)));
    }

    #[test]
    fn refuses_below_valid_range() {
        let b = builtin_recurrence(BuiltinRecurrence::Baxter);
        assert_eq!(
            generate_terms(&b, 2),
            Err(Error::BelowValidRange { n: 2, valid_from: 3 })
        );
    }

    #[test]
    fn hand_checked_instances() {
        // 2100*55 - 8040*12 - 6132*3 - 624*1 = 0
        let d1 = builtin_recurrence(BuiltinRecurrence::D1);
        let vals: Vec<i64> = d1.coeffs().iter().map(|a| a.eval_i64(4).to_integer().try_into().unwrap()).collect();
        assert_eq!(vals, [2100, 8040, 6132, 624]);
        // 6384*600 - 35124*92 - 41496*14 - 9024*2 = 0
        let d2 = builtin_recurrence(BuiltinRecurrence::D2);
        let vals: Vec<i64> = d2.coeffs().iter().map(|a| a.eval_i64(5).to_integer().try_into().unwrap()).collect();
        assert_eq!(vals, [6384, 35124, 41496, 9024]);
        let oracle = BuiltinRecurrence::D2.direct_terms(1, 5).unwrap();
        let rep = verify_recurrence(&d2, &oracle, 4, 5).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.checks.len(), 2);
    }

    #[test]
    fn report_records_failures() {
        let b = builtin_recurrence(BuiltinRecurrence::Baxter);
        let mut oracle = BuiltinRecurrence::Baxter.direct_terms(1, 10).unwrap();
        oracle.values[6] += rat(1); // corrupt B_7
        let rep = verify_recurrence(&b, &oracle, 3, 10).unwrap();
        assert!(!rep.passed());
        let failing: Vec<i64> = rep.failures().map(|c| c.n).collect();
        assert_eq!(failing, [7, 8, 9]);
    }

    #[test]
    fn insufficient_oracle() {
        let b = builtin_recurrence(BuiltinRecurrence::Baxter);
        let oracle = BuiltinRecurrence::Baxter.direct_terms(2, 10).unwrap();
        assert_eq!(
            verify_recurrence(&b, &oracle, 3, 10),
            Err(Error::InsufficientOracle { n: 1 })
        );
        assert_eq!(
            verify_recurrence(&b, &oracle, 4, 11),
            Err(Error::InsufficientOracle { n: 11 })
        );
    }

    #[test]
    fn rejects_vanishing_leading_coefficient() {
        let coeffs = alloc::vec![lin(-5, 1), DensePolynomial::one()];
        let err = PolyCoeffRecurrence::new("bad", coeffs, 3, alloc::vec![rat(1)], false);
        assert_eq!(err, Err(Error::VanishingLeadingCoefficient { n: 5 }));
    }
}
