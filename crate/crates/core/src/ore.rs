//! Mixed shift/derivative identities for the Baxter polynomial family.
//!
//! An operator `sum c_ij(n, x) S^i D^j` acts on `{B_n(x)}` by
//! `c_ij(n, x) * d^j/dx^j B_{n+i}(x)`. Verification is by direct
//! application at each `n`: the operator annihilates the family at `n` iff
//! the result is the zero polynomial.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::numbers::baxter_poly;
use crate::recurrence::{Residual, VerificationReport};
use crate::{DensePolynomial, Error, Result};

/// Polynomial in `n` and `x` with integer coefficients, stored sparsely as
/// `(power of n, power of x) -> coefficient`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePoly {
    /// From `(coefficient, power of n, power of x)` triples; like terms are merged.
    pub fn from_terms(terms: &[(i64, u32, u32)]) -> Self {
        let mut out = BTreeMap::new();
        for &(c, np, xp) in terms {
            *out.entry((np, xp)).or_insert_with(BigInt::zero) += c;
        }
        out.retain(|_, c: &mut BigInt| !c.is_zero());
        Self { terms: out }
    }

    /// Specializes `n` and returns the resulting polynomial in `x`.
    pub fn at_n(&self, n: i64) -> DensePolynomial {
        let n = BigInt::from(n);
        let degree = self.terms.keys().map(|&(_, xp)| xp).max().unwrap_or(0) as usize;
        let mut coeffs = alloc::vec![BigInt::zero(); degree + 1];
        for (&(np, xp), c) in &self.terms {
            coeffs[xp as usize] += c * n.pow(np);
        }
        DensePolynomial::from_integers(coeffs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OreTerm {
    pub shift: usize,
    pub derivative: usize,
    pub coeff: BivariatePoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OreOperatorExpr {
    pub label: String,
    pub terms: Vec<OreTerm>,
}

impl OreOperatorExpr {
    pub fn new(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            terms: Vec::new(),
        }
    }

    /// Adds `coeff(n, x) S^shift D^derivative`.
    pub fn term(mut self, shift: usize, derivative: usize, coeff: &[(i64, u32, u32)]) -> Self {
        self.terms.push(OreTerm {
            shift,
            derivative,
            coeff: BivariatePoly::from_terms(coeff),
        });
        self
    }

    pub fn max_shift(&self) -> usize {
        self.terms.iter().map(|t| t.shift).max().unwrap_or(0)
    }

    /// Applies the operator to an arbitrary polynomial family at index `n`.
    pub fn apply_to_family(
        &self,
        n: i64,
        mut family: impl FnMut(i64) -> Result<DensePolynomial>,
    ) -> Result<DensePolynomial> {
        let mut members: BTreeMap<(usize, usize), DensePolynomial> = BTreeMap::new();
        let mut acc = DensePolynomial::zero();
        for t in &self.terms {
            if let alloc::collections::btree_map::Entry::Vacant(e) = members.entry((t.shift, 0)) {
                e.insert(family(n + t.shift as i64)?);
            }
            for d in 1..=t.derivative {
                if !members.contains_key(&(t.shift, d)) {
                    let prev = members[&(t.shift, d - 1)].derivative();
                    members.insert((t.shift, d), prev);
                }
            }
            let member = &members[&(t.shift, t.derivative)];
            acc = &acc + &(&t.coeff.at_n(n) * member);
        }
        Ok(acc)
    }
}

/// Applies `op` to `{B_n(x)}` at index `n >= 1`; zero means `op` annihilates
/// it there.
pub fn apply_ore_operator(op: &OreOperatorExpr, n: i64) -> Result<DensePolynomial> {
    if n < 1 {
        return Err(Error::domain(format!("Ore operators are applied from n = 1, got {n}")));
    }
    op.apply_to_family(n, baxter_poly)
}

/// The three-element annihilating basis for `{B_n(x)}` in the shift `S_n`
/// and derivative `D_x`.
pub fn baxter_annihilators() -> [OreOperatorExpr; 3] {
    let first = OreOperatorExpr::new("annihilator-1")
        .term(0, 2, &[(-6, 0, 2), (-6, 0, 3)])
        .term(1, 0, &[(12, 0, 0), (7, 1, 0), (1, 2, 0)])
        .term(0, 1, &[(-12, 0, 1), (-3, 1, 1), (12, 0, 2), (15, 1, 2)])
        .term(0, 0, &[(-4, 1, 0), (-1, 2, 0), (-12, 0, 1), (-25, 1, 1), (-10, 2, 1)]);
    let second = OreOperatorExpr::new("annihilator-2")
        .term(1, 1, &[(-6, 0, 1), (-2, 1, 1)])
        .term(1, 0, &[(6, 0, 0), (5, 1, 0), (1, 2, 0)])
        .term(0, 1, &[(-1, 1, 1), (-1, 1, 2)])
        .term(0, 0, &[(-2, 1, 0), (-1, 2, 0), (3, 1, 1), (2, 2, 1)]);
    let third = OreOperatorExpr::new("annihilator-3")
        .term(2, 0, &[(120, 0, 0), (94, 1, 0), (24, 2, 0), (2, 3, 0)])
        .term(
            1,
            0,
            &[
                (-120, 0, 0),
                (-145, 1, 0),
                (-56, 2, 0),
                (-7, 3, 0),
                (-120, 0, 1),
                (-145, 1, 1),
                (-56, 2, 1),
                (-7, 3, 1),
            ],
        )
        .term(0, 1, &[(21, 1, 1), (9, 2, 1), (-21, 1, 3), (-9, 2, 3)])
        .term(
            0,
            0,
            &[
                (30, 1, 0),
                (23, 2, 0),
                (5, 3, 0),
                (-129, 1, 1),
                (-140, 2, 1),
                (-35, 3, 1),
                (51, 1, 2),
                (53, 2, 2),
                (14, 3, 2),
            ],
        );
    [first, second, third]
}

/// Checks every annihilator at every `n` in `from..=to`.
pub fn verify_annihilators(from: i64, to: i64) -> Result<Vec<VerificationReport>> {
    baxter_annihilators()
        .iter()
        .map(|op| {
            let mut report = VerificationReport::new(op.label.clone());
            for n in from..=to {
                report.push(n, Residual::Polynomial(apply_ore_operator(op, n)?));
            }
            Ok(report)
        })
        .collect()
}

/// The two mixed recurrences linking `B_n`, `B_{n+1}` and their derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MixedIdentity {
    /// `B_{n+1} = a_n B_n + b_n B_n' + c_n B_n''`.
    ShiftUp,
    /// `B_n = ã_n B_{n+1}' + b̃_n B_n' + c̃_n B_n''`.
    DerivativeShift,
}

impl MixedIdentity {
    pub const ALL: [MixedIdentity; 2] = [Self::ShiftUp, Self::DerivativeShift];

    pub fn name(self) -> &'static str {
        match self {
            Self::ShiftUp => "shift-up",
            Self::DerivativeShift => "derivative-shift",
        }
    }
}

fn np(n: i64, coeffs: &[i64]) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, &c| acc * n + c)
}

/// `(n+3)(n+4)`
fn shift_up_denominator(n: i64) -> BigInt {
    BigInt::from((n + 3) * (n + 4))
}

/// `6n^3 + 28n^2 + 37n + 12`
fn derivative_shift_denominator(n: i64) -> BigInt {
    np(n, &[12, 37, 28, 6])
}

/// Numerators `[a, b, c]` of the shift-up coefficients as polynomials in `x`,
/// over the common denominator `(n+3)(n+4)`.
fn shift_up_numerators(n: i64) -> [DensePolynomial; 3] {
    let a = DensePolynomial::from_integers([np(n, &[0, 4, 1]), np(n, &[12, 25, 10])]);
    // -3x(5nx + 4x - n - 4)
    let b = DensePolynomial::from_integers([
        BigInt::zero(),
        BigInt::from(3 * (n + 4)),
        BigInt::from(-3 * (5 * n + 4)),
    ]);
    let c = DensePolynomial::from_i64(&[0, 0, 6, 6]);
    [a, b, c]
}

/// Numerators `[ã, b̃, c̃]` over `6n^3 + 28n^2 + 37n + 12`.
fn derivative_shift_numerators(n: i64) -> [DensePolynomial; 3] {
    let q = (n + 3) * (n + 4);
    let a = DensePolynomial::from_i64(&[q]);
    let b = DensePolynomial::from_integers([BigInt::from(-q), np(n, &[12, 23, 8])]);
    let c = DensePolynomial::from_integers([
        BigInt::zero(),
        BigInt::from(-3 * (n + 2)),
        BigInt::from(-3 * (n + 2)),
    ]);
    [a, b, c]
}

/// Rational coefficients `[a_n(x), b_n(x), c_n(x)]` of the shift-up identity.
pub fn shift_up_coeffs(n: i64, x: &BigRational) -> [BigRational; 3] {
    let den = BigRational::from_integer(shift_up_denominator(n));
    shift_up_numerators(n).map(|p| p.eval(x) / &den)
}

/// Rational coefficients `[ã_n(x), b̃_n(x), c̃_n(x)]` of the derivative-shift identity.
pub fn derivative_shift_coeffs(n: i64, x: &BigRational) -> [BigRational; 3] {
    let den = BigRational::from_integer(derivative_shift_denominator(n));
    derivative_shift_numerators(n).map(|p| p.eval(x) / &den)
}

/// Forms both sides of the identity at `n` with denominators cleared and
/// records their difference.
pub fn verify_mixed_identity(n: i64, which: MixedIdentity) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::domain(format!("mixed identities hold from n = 2, got {n}")));
    }
    let cur = baxter_poly(n)?;
    let next = baxter_poly(n + 1)?;
    let d1 = cur.derivative();
    let d2 = d1.derivative();
    let (lhs, rhs) = match which {
        MixedIdentity::ShiftUp => {
            let den = DensePolynomial::from_integers([shift_up_denominator(n)]);
            let [a, b, c] = shift_up_numerators(n);
            (&den * &next, &(&(&a * &cur) + &(&b * &d1)) + &(&c * &d2))
        }
        MixedIdentity::DerivativeShift => {
            let den = DensePolynomial::from_integers([derivative_shift_denominator(n)]);
            let [a, b, c] = derivative_shift_numerators(n);
            let next_d1 = next.derivative();
            (&den * &cur, &(&(&a * &next_d1) + &(&b * &d1)) + &(&c * &d2))
        }
    };
    let mut report = VerificationReport::new(which.name());
    report.push(n, Residual::Polynomial(&lhs - &rhs));
    Ok(report)
}
