//! Exact arithmetic for refined Baxter numbers and the Baxter polynomials
//! `B_n(x) = sum_k D(n,k) x^k`.
//!
//! Everything here is `no_std` (with `alloc`): closed-form evaluation,
//! recurrence term generation and residual checks, Ore operator
//! application, asymptotic branch expansion of P-recursive sequences,
//! Sturm root counting, finite-n normality statistics and the brute-force
//! permutation oracle. IO, report formatting and threading live in the
//! `baxter-cli` crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![deny(missing_debug_implementations)]

extern crate alloc;

pub mod asym;
pub mod error;
pub mod hypergeom;
pub mod numbers;
pub mod ore;
pub mod perm;
pub mod poly;
pub mod recurrence;
pub mod stats;
pub mod sturm;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::DensePolynomial;

/// Arbitrary-precision signed integer.
pub type ExactInteger = BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type ExactRational = BigRational;

/// Shorthand for an integral [`ExactRational`].
pub fn rat(v: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
