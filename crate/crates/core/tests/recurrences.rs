use baxter_core::numbers::{baxter_number, baxter_poly};
use baxter_core::ore::{apply_ore_operator, baxter_annihilators, verify_annihilators, verify_mixed_identity, MixedIdentity};
use baxter_core::poly::{poly_derivative, poly_eval};
use baxter_core::recurrence::{
    builtin_recurrence, builtin_recurrence_by_name, builtin_recurrence_derived, generate_terms, verify_recurrence,
    BuiltinRecurrence, TermSequence,
};
use baxter_core::{rat, BigInt, BigRational, Error};
use num_traits::One;

fn deriv_at_one(n: i64, order: i64) -> BigRational {
    let p = baxter_poly(n).unwrap();
    let p = if order == 0 { p } else { poly_derivative(&p, order).unwrap() };
    poly_eval(&p, &BigRational::one())
}

/// sum_k C(n,k)^3 from a Pascal row.
fn franel_oracle(n: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::one(); m + 1];
        for k in 1..m {
            next[k] = &row[k - 1] + &row[k];
        }
        row = next;
    }
    row.iter().map(|c| c * c * c).sum()
}

#[test]
fn baxter_terms_match_closed_form_to_500() {
    let terms = generate_terms(&builtin_recurrence(BuiltinRecurrence::Baxter), 500).unwrap();
    for n in 1..=500 {
        assert_eq!(terms.get(n).unwrap(), &BigRational::from_integer(baxter_number(n).unwrap()), "n = {n}");
    }
}

#[test]
fn derivative_terms_match_polynomials_to_300() {
    for (which, order) in [(BuiltinRecurrence::D1, 1), (BuiltinRecurrence::D2, 2)] {
        let terms = generate_terms(&builtin_recurrence(which), 300).unwrap();
        for n in 1..=300 {
            assert_eq!(terms.get(n).unwrap(), &deriv_at_one(n, order), "{which} at n = {n}");
        }
    }
}

#[test]
fn residuals_vanish_against_direct_values() {
    let oracle = |order: i64| TermSequence::from_fn(1, 300, |n| Ok(deriv_at_one(n, order))).unwrap();
    for (which, order) in [
        (BuiltinRecurrence::Baxter, 0),
        (BuiltinRecurrence::D1, 1),
        (BuiltinRecurrence::D2, 2),
    ] {
        let rec = builtin_recurrence(which);
        let report = verify_recurrence(&rec, &oracle(order), rec.valid_from(), 300).unwrap();
        assert!(report.passed(), "{which}");
        assert_eq!(report.checks.len() as i64, 300 - rec.valid_from() + 1);
    }
}

#[test]
fn franel_residuals_vanish_to_200() {
    let rec = builtin_recurrence(BuiltinRecurrence::Franel);
    let oracle = TermSequence::from_fn(0, 200, |n| Ok(BigRational::from_integer(franel_oracle(n as usize)))).unwrap();
    assert!(verify_recurrence(&rec, &oracle, rec.valid_from(), 200).unwrap().passed());
    let terms = generate_terms(&rec, 200).unwrap();
    for n in 0..=200 {
        assert_eq!(terms.get(n), oracle.get(n));
    }
}

#[test]
fn perturbed_oracle_is_caught() {
    let rec = builtin_recurrence(BuiltinRecurrence::Baxter);
    let mut values: Vec<BigRational> = (1..=40).map(|n| deriv_at_one(n, 0)).collect();
    values[20] += BigRational::one();
    let oracle = TermSequence::new(1, values);
    let report = verify_recurrence(&rec, &oracle, 3, 40).unwrap();
    assert!(!report.passed());
    // f(21) enters the residuals at n = 21, 22, 23
    let bad: Vec<i64> = report.failures().map(|c| c.n).collect();
    assert_eq!(bad, [21, 22, 23]);
}

#[test]
fn stored_seeds_agree_with_derived_seeds() {
    for which in BuiltinRecurrence::ALL {
        let stored = builtin_recurrence(which);
        let derived = builtin_recurrence_derived(which).unwrap();
        assert_eq!(stored.seeds(), derived.seeds(), "{which}");
        assert_eq!(builtin_recurrence_by_name(which.name()).unwrap(), stored);
    }
    assert!(matches!(builtin_recurrence_by_name("catalan"), Err(Error::UnknownRecurrence(_))));
}

#[test]
fn range_errors() {
    let rec = builtin_recurrence(BuiltinRecurrence::D1);
    assert!(matches!(generate_terms(&rec, 3), Err(Error::BelowValidRange { .. })));
    let short = TermSequence::new(1, vec![rat(1); 5]);
    assert!(matches!(
        verify_recurrence(&rec, &short, 4, 10),
        Err(Error::InsufficientOracle { .. })
    ));
}

#[test]
fn annihilators_to_50() {
    assert_eq!(baxter_annihilators().len(), 3);
    let reports = verify_annihilators(2, 50).unwrap();
    assert_eq!(reports.len(), 3);
    for r in &reports {
        assert!(r.passed(), "{}", r.label);
        assert_eq!(r.checks.len(), 49);
    }
}

#[test]
fn annihilators_also_hold_at_one() {
    for op in baxter_annihilators() {
        assert!(apply_ore_operator(&op, 1).unwrap().is_zero(), "{}", op.label);
        assert!(apply_ore_operator(&op, 0).is_err());
    }
}

#[test]
fn mixed_identities_to_100() {
    for which in MixedIdentity::ALL {
        for n in 2..=100 {
            assert!(verify_mixed_identity(n, which).unwrap().passed(), "{} at n = {n}", which.name());
        }
    }
    assert!(verify_mixed_identity(1, MixedIdentity::ShiftUp).is_err());
}
