use baxter_core::hypergeom::eval_3f2_terminating;
use baxter_core::numbers::{baxter_number, baxter_poly, binomial, refined_baxter, refined_baxter_row, theta};
use baxter_core::poly::{poly_derivative, poly_eval};
use baxter_core::{ratio, rat, BigInt, BigRational};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Pascal's triangle, rows `0..=max`.
fn pascal(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=max {
        let prev = &rows[n - 1];
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}

fn pick(rows: &[Vec<BigInt>], n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        BigInt::zero()
    } else {
        rows[n][k as usize].clone()
    }
}

#[test]
fn first_baxter_numbers() {
    let expected = [1u64, 1, 2, 6, 22, 92, 422, 2074, 10754, 58202];
    for (n, b) in expected.iter().enumerate() {
        assert_eq!(baxter_number(n as i64).unwrap(), BigInt::from(*b), "B_{n}");
    }
}

#[test]
fn refined_numbers_against_pascal_oracle() {
    // D(n,k) * C(n+1,1) * C(n+1,2) = C(n+1,k-1) C(n+1,k) C(n+1,k+1)
    let rows = pascal(121);
    for n in 1..=120usize {
        let m = n + 1;
        let den = pick(&rows, m, 1) * pick(&rows, m, 2);
        for k in 1..=n as i64 {
            let num = pick(&rows, m, k - 1) * pick(&rows, m, k) * pick(&rows, m, k + 1);
            assert!((&num % &den).is_zero());
            assert_eq!(refined_baxter(n as i64, k).unwrap(), num / &den, "D({n},{k})");
        }
    }
}

#[test]
fn binomial_against_pascal_oracle() {
    let rows = pascal(80);
    for n in 0..=80i64 {
        for k in -2..=n + 2 {
            assert_eq!(binomial(n, k).unwrap(), pick(&rows, n as usize, k));
        }
    }
}

#[test]
fn row_sums_and_symmetry_to_300() {
    for n in 1..=300i64 {
        let row = refined_baxter_row(n).unwrap();
        assert_eq!(row.iter().sum::<BigInt>(), baxter_number(n).unwrap());
        assert!(row[0].is_zero());
        assert!(row[1].is_one() && row[n as usize].is_one());
        for k in 1..=n as usize {
            assert_eq!(row[k], row[n as usize + 1 - k]);
        }
    }
}

#[test]
fn integrality_spot_checks_to_1000() {
    for n in [500i64, 777, 999, 1000] {
        for k in [1, 2, n / 3, n / 2, n / 2 + 1, n - 1, n] {
            assert!(refined_baxter(n, k).unwrap() > BigInt::zero());
        }
    }
}

#[test]
fn theta_is_refined_baxter_reindexed() {
    for s in 0..25i64 {
        for t in 0..25i64 {
            let n = s + t + 1;
            assert_eq!(theta(s, t).unwrap(), refined_baxter(n, s + 1).unwrap(), "Θ({s},{t})");
        }
    }
    assert_eq!(theta(1, 1).unwrap(), BigInt::from(4));
    assert_eq!(theta(1, 2).unwrap(), BigInt::from(10));
}

#[test]
fn hypergeometric_form_to_100() {
    let zs = [rat(1), rat(2), ratio(-1, 2)];
    for n in 1..=100i64 {
        let p = baxter_poly(n).unwrap();
        for z in &zs {
            let f = eval_3f2_terminating(-n, -n - 1, -n + 1, 2, 3, &-z.clone()).unwrap();
            assert_eq!(z * f, poly_eval(&p, z), "n = {n}, z = {z}");
        }
    }
}

#[test]
fn polynomial_derivatives_at_one() {
    // B_n'(1) = sum k D(n,k), B_n''(1) = sum k(k-1) D(n,k)
    for n in 1..=60i64 {
        let p = baxter_poly(n).unwrap();
        let row = refined_baxter_row(n).unwrap();
        let one = BigRational::one();
        let first: BigInt = row.iter().enumerate().map(|(k, d)| d * BigInt::from(k)).sum();
        let second: BigInt = row.iter().enumerate().map(|(k, d)| d * BigInt::from(k * k.saturating_sub(1))).sum();
        assert_eq!(poly_eval(&poly_derivative(&p, 1).unwrap(), &one), BigRational::from_integer(first));
        assert_eq!(poly_eval(&poly_derivative(&p, 2).unwrap(), &one), BigRational::from_integer(second));
    }
    assert!(poly_derivative(&baxter_poly(3).unwrap(), 3).is_err());
}

proptest! {
    #[test]
    fn symmetry_prop(n in 1i64..400, k in 1i64..400) {
        prop_assume!(k <= n);
        prop_assert_eq!(refined_baxter(n, k).unwrap(), refined_baxter(n, n + 1 - k).unwrap());
    }

    #[test]
    fn outside_support_is_zero(n in 1i64..200, k in -5i64..5) {
        prop_assert!(refined_baxter(n, k).unwrap().is_zero() == (k < 1));
        prop_assert!(refined_baxter(n, n + 1 - k).unwrap().is_zero() == (k < 1));
    }

    #[test]
    fn hypergeometric_form_random_z(n in 1i64..40, p in -20i64..20, q in 1i64..20) {
        let z = ratio(p, q);
        let f = eval_3f2_terminating(-n, -n - 1, -n + 1, 2, 3, &-z.clone()).unwrap();
        prop_assert_eq!(&z * f, poly_eval(&baxter_poly(n).unwrap(), &z));
    }
}
