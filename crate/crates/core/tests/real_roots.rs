use baxter_core::numbers::baxter_poly;
use baxter_core::sturm::{check_baxter_real_rooted, count_real_roots, squarefree_part, Bound};
use baxter_core::{rat, ratio, BigRational, DensePolynomial};
use num_traits::Signed;
use proptest::prelude::*;

#[test]
fn baxter_polynomials_are_real_rooted_to_60() {
    for n in 2..=60 {
        let r = check_baxter_real_rooted(n).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.degree as i64, n);
        assert_eq!(r.squarefree_degree, r.degree, "n = {n} has a repeated root");
        assert_eq!(r.repeated_root_degree, 0);
    }
}

/// Sign changes of `p` on a geometric grid over the negative axis. Every
/// change brackets a root, so this is a lower bound on the negative roots.
fn grid_sign_changes(p: &DensePolynomial) -> usize {
    let mut changes = 0;
    let mut prev: Option<bool> = None;
    // -10^8 .. -10^-8, 40 points per decade
    for i in (-320..=320).rev() {
        let x = -BigRational::from_float(10f64.powf(i as f64 / 40.0)).unwrap();
        let v = p.eval(&x);
        if v == rat(0) {
            continue;
        }
        let neg = v.is_negative();
        if prev.is_some_and(|p| p != neg) {
            changes += 1;
        }
        prev = Some(neg);
    }
    changes
}

#[test]
fn grid_oracle_agrees_for_small_n() {
    for n in 2..=14 {
        let p = baxter_poly(n).unwrap();
        // every nonzero root is negative and found on the grid
        assert_eq!(grid_sign_changes(&p), n as usize - 1, "n = {n}");
        let neg = count_real_roots(&p, &Bound::NegInfinity, &Bound::Finite(ratio(-1, 100_000_000))).unwrap();
        assert_eq!(neg, n as usize - 1);
    }
}

#[test]
fn squarefree_part_is_idempotent() {
    let cases = [
        DensePolynomial::from_roots(&[rat(1), rat(1), rat(-3), ratio(1, 2), ratio(1, 2), ratio(1, 2)]),
        baxter_poly(12).unwrap(),
        DensePolynomial::from_i64(&[7]),
        DensePolynomial::from_i64(&[1, 0, 2, 0, 1]),
    ];
    for p in cases {
        let s = squarefree_part(&p).unwrap();
        assert_eq!(squarefree_part(&s).unwrap(), s);
    }
}

fn bounded_count(p: &DensePolynomial, a: i64, b: i64) -> usize {
    count_real_roots(p, &Bound::Finite(rat(a)), &Bound::Finite(rat(b))).unwrap()
}

proptest! {
    #[test]
    fn counts_are_additive(roots in proptest::collection::vec(-20i64..20, 1..8), a in -30i64..0, mid in 0i64..5, b in 5i64..30) {
        let rs: Vec<BigRational> = roots.iter().map(|&r| rat(r)).collect();
        let p = squarefree_part(&DensePolynomial::from_roots(&rs)).unwrap();
        prop_assert_eq!(bounded_count(&p, a, mid) + bounded_count(&p, mid, b), bounded_count(&p, a, b));
        let whole = count_real_roots(&p, &Bound::NegInfinity, &Bound::PosInfinity).unwrap();
        let split = count_real_roots(&p, &Bound::NegInfinity, &Bound::Finite(rat(mid))).unwrap()
            + count_real_roots(&p, &Bound::Finite(rat(mid)), &Bound::PosInfinity).unwrap();
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn counts_match_known_roots(roots in proptest::collection::btree_set(-20i64..20, 1..8), a in -25i64..25, w in 1i64..20) {
        let rs: Vec<BigRational> = roots.iter().map(|&r| rat(r)).collect();
        let p = DensePolynomial::from_roots(&rs);
        let expected = roots.iter().filter(|&&r| a < r && r <= a + w).count();
        prop_assert_eq!(bounded_count(&p, a, a + w), expected);
    }
}
