use baxter_core::numbers::baxter_moments;
use baxter_core::stats::{
    distribution, kolmogorov_distance, limit_ratio_report_with, local_limit_distance, moment_via_recurrence_with,
    standard_normal_cdf, standard_normal_pdf, MomentTable,
};
use baxter_core::{rat, ratio, BigRational};
use num_traits::{One, Zero};

/// Composite Simpson rule for `∫_0^x φ`, 20000 panels.
fn phi_by_quadrature(x: f64) -> f64 {
    let m = 20_000;
    let h = x / m as f64;
    let f = |t: f64| (-0.5 * t * t).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let mut s = f(0.0) + f(x);
    for i in 1..m {
        s += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    0.5 + s * h / 3.0
}

#[test]
fn normal_cdf_against_quadrature() {
    assert!((standard_normal_cdf(1.0) - 0.841344746068543).abs() < 1e-14);
    for i in -80..=80 {
        let x = i as f64 / 10.0;
        let tol = 1e-13;
        assert!((standard_normal_cdf(x) - phi_by_quadrature(x)).abs() < tol, "x = {x}");
    }
    assert!(standard_normal_cdf(-40.0) >= 0.0 && standard_normal_cdf(-40.0) < 1e-300);
    assert_eq!(standard_normal_cdf(40.0), 1.0);
    assert!((standard_normal_pdf(0.0) - 0.3989422804014327).abs() < 1e-16);
}

#[test]
fn probabilities_and_mean() {
    for n in 2..=120 {
        let d = distribution(n).unwrap();
        assert_eq!(d.probs.iter().fold(BigRational::zero(), |a, p| a + p), BigRational::one());
        let cdf = d.cdf();
        assert!(cdf.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(d.mu, ratio(n + 1, 2));
    }
}

#[test]
fn mean_is_exact_and_variance_increases_to_500() {
    let table = MomentTable::direct(500).unwrap();
    let mut prev = rat(-1);
    for n in 2..=500 {
        let (mu, s2) = table.mean_variance(n).unwrap();
        assert_eq!(mu, ratio(n + 1, 2), "n = {n}");
        if n >= 3 {
            assert!(s2 > prev, "σ² not increasing at n = {n}");
        }
        prev = s2;
    }
}

#[test]
fn moment_cross_check_to_200() {
    let table = MomentTable::direct(201).unwrap();
    for n in 2..=200 {
        let m = baxter_moments(n).unwrap();
        let mean = BigRational::new(m.first, m.value.clone());
        let second = BigRational::new(m.second, m.value);
        assert_eq!(moment_via_recurrence_with(&table, n).unwrap(), (mean, second), "n = {n}");
    }
}

#[test]
fn ratios_approach_their_limits() {
    let table = MomentTable::direct(600).unwrap();
    let r = limit_ratio_report_with(&table, 400, 200).unwrap();
    assert!((r.mean_ratio - 0.5).abs() < 0.01);
    assert!((r.second_ratio - 0.25).abs() < 0.01);
    assert!((r.variance_slope - 1.0 / 12.0).abs() < 1e-3);
}

#[test]
fn normality_distances_shrink() {
    let k: Vec<f64> = [50, 100, 200, 400].iter().map(|&n| kolmogorov_distance(n).unwrap()).collect();
    assert!(k.windows(2).all(|w| w[1] < w[0]), "{k:?}");
    let l: Vec<f64> = [50, 100, 200].iter().map(|&n| local_limit_distance(n).unwrap()).collect();
    assert!(l.windows(2).all(|w| w[1] <= w[0] + 1e-3), "{l:?}");
    assert_eq!(kolmogorov_distance(100).unwrap(), kolmogorov_distance(100).unwrap());
}
