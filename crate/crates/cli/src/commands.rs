//! Validation and execution of the subcommands.

use baxter_core::asym::{branch_residuals, expand_branch};
use baxter_core::numbers::{baxter_number, baxter_poly, refined_baxter, refined_baxter_row};
use baxter_core::ore::{apply_ore_operator, baxter_annihilators, verify_mixed_identity, MixedIdentity};
use baxter_core::perm::{enumerate_partition, StatTable, DEFAULT_MAX_N, LARGE_MAX_N};
use baxter_core::recurrence::{
    builtin_recurrence, builtin_recurrence_derived, generate_terms, verify_recurrence, BuiltinRecurrence,
    PolyCoeffRecurrence,
};
use baxter_core::stats::{limit_ratio_report_with, normality_report, to_f64, MomentTable};
use baxter_core::sturm::check_baxter_real_rooted;
use baxter_core::{ratio, BigInt, BigRational};
use num_traits::Zero;
use rayon::prelude::*;

use crate::report::{Cell, Report, Row};
use crate::{Cli, CliError, Command};

const MAX_NUMBERS: i64 = 1000;
const MAX_POLY: i64 = 2000;
const MAX_REC: i64 = 5000;
const MAX_MIXED: i64 = 1000;
const MAX_ORE: i64 = 400;
const MAX_ROOTS: i64 = 200;
const MAX_CLT: i64 = 3000;
const MAX_ORDER: usize = 30;
/// Offset of the variance difference quotient in `clt`.
const SLOPE_GAP: i64 = 200;

/// A configuration that passed validation.
#[derive(Debug, Clone)]
pub enum Plan {
    Numbers { max_n: i64 },
    Poly { n: i64 },
    VerifyRec { which: BuiltinRecurrence, to: i64 },
    VerifyMixed { to: i64 },
    VerifyOre { from: i64, to: i64 },
    Asym { which: BuiltinRecurrence, root: BigRational, order: usize },
    Roots { to: i64 },
    Clt { ns: Vec<i64> },
    Enum { n: usize, allow_large: bool },
}

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

fn in_range(what: &str, v: i64, lo: i64, hi: i64) -> Result<(), CliError> {
    if (lo..=hi).contains(&v) {
        Ok(())
    } else {
        Err(usage(format!("{what} must lie in {lo}..={hi}, got {v}")))
    }
}

fn builtin(name: &str) -> Result<BuiltinRecurrence, CliError> {
    name.parse().map_err(|_| {
        let known: Vec<&str> = BuiltinRecurrence::ALL.iter().map(|b| b.name()).collect();
        usage(format!("unknown recurrence {name:?}; expected one of {}", known.join(", ")))
    })
}

pub fn validate(cli: &Cli) -> Result<Plan, CliError> {
    Ok(match &cli.command {
        Command::Numbers { max_n } => {
            in_range("--max-n", *max_n, 0, MAX_NUMBERS)?;
            Plan::Numbers { max_n: *max_n }
        }
        Command::Poly { n } => {
            in_range("--n", *n, 1, MAX_POLY)?;
            Plan::Poly { n: *n }
        }
        Command::VerifyRec { name, to } => {
            let which = builtin(name)?;
            let from = builtin_recurrence(which).valid_from();
            in_range("--to", *to, from, MAX_REC)?;
            Plan::VerifyRec { which, to: *to }
        }
        Command::VerifyMixed { to } => {
            in_range("--to", *to, 2, MAX_MIXED)?;
            Plan::VerifyMixed { to: *to }
        }
        Command::VerifyOre { from, to } => {
            in_range("--from", *from, 1, MAX_ORE)?;
            in_range("--to", *to, *from, MAX_ORE)?;
            Plan::VerifyOre { from: *from, to: *to }
        }
        Command::Asym(a) => {
            let which = builtin(&a.name)?;
            let root: BigRational = a
                .root
                .trim()
                .parse()
                .map_err(|_| usage(format!("--root must be an integer or p/q, got {:?}", a.root)))?;
            if a.order > MAX_ORDER {
                return Err(usage(format!("--order must be at most {MAX_ORDER}, got {}", a.order)));
            }
            Plan::Asym { which, root, order: a.order }
        }
        Command::Roots { to } => {
            in_range("--to", *to, 2, MAX_ROOTS)?;
            Plan::Roots { to: *to }
        }
        Command::Clt { n } => {
            let mut ns = n.clone();
            for &v in &ns {
                in_range("--n entries", v, 3, MAX_CLT)?;
            }
            ns.sort_unstable();
            ns.dedup();
            Plan::Clt { ns }
        }
        Command::Enum { n, allow_large } => {
            let max = if *allow_large { LARGE_MAX_N } else { DEFAULT_MAX_N };
            if !(2..=max).contains(n) {
                let hint = if *allow_large || *n != LARGE_MAX_N { "" } else { " (9 needs --allow-large)" };
                return Err(usage(format!("--n must lie in 2..={max}, got {n}{hint}")));
            }
            Plan::Enum { n: *n, allow_large: *allow_large }
        }
    })
}

fn recurrence(which: BuiltinRecurrence, seed_check: bool) -> Result<PolyCoeffRecurrence, CliError> {
    Ok(if seed_check {
        builtin_recurrence_derived(which)?
    } else {
        builtin_recurrence(which)
    })
}

pub fn run_plan(plan: &Plan, seed_check: bool) -> Result<Report, CliError> {
    let mut report = match plan {
        Plan::Numbers { max_n } => numbers(*max_n, seed_check)?,
        Plan::Poly { n } => poly(*n)?,
        Plan::VerifyRec { which, to } => verify_rec(*which, *to, seed_check)?,
        Plan::VerifyMixed { to } => verify_mixed(*to)?,
        Plan::VerifyOre { from, to } => verify_ore(*from, *to)?,
        Plan::Asym { which, root, order } => asym(*which, root, *order)?,
        Plan::Roots { to } => roots(*to)?,
        Plan::Clt { ns } => clt(ns)?,
        Plan::Enum { n, allow_large } => enumerate(*n, *allow_large)?,
    };
    if seed_check {
        let mut all_match = true;
        for which in BuiltinRecurrence::ALL {
            all_match &= builtin_recurrence_derived(which)?.seeds() == builtin_recurrence(which).seeds();
        }
        report.params.push(("seed_check", Cell::Bool(true)));
        report.params.push(("stored_seeds_match", Cell::Bool(all_match)));
        report.pass &= all_match;
    }
    Ok(report)
}

fn numbers(max_n: i64, seed_check: bool) -> Result<Report, CliError> {
    let mut report = Report::new("numbers", vec![("max_n", max_n.into())]);
    let rec = recurrence(BuiltinRecurrence::Baxter, seed_check)?;
    let generated = if max_n >= rec.valid_from() { Some(generate_terms(&rec, max_n)?) } else { None };
    for n in 0..=max_n {
        let b = baxter_number(n)?;
        let row: Vec<BigInt> = if n == 0 { Vec::new() } else { refined_baxter_row(n)?[1..].to_vec() };
        let sum_ok = n == 0 || row.iter().sum::<BigInt>() == b;
        let rec_ok = match generated.as_ref().and_then(|t| t.get(n)) {
            Some(v) => *v == BigRational::from_integer(b.clone()),
            None => true,
        };
        report.pass &= sum_ok && rec_ok;
        report.rows.push(vec![
            ("n", n.into()),
            ("baxter", b.into()),
            ("refined", Cell::List(row.into_iter().map(Cell::Big).collect())),
            ("row_sum_ok", sum_ok.into()),
            ("recurrence_ok", rec_ok.into()),
        ]);
    }
    Ok(report)
}

fn poly(n: i64) -> Result<Report, CliError> {
    let mut report = Report::new("poly", vec![("n", n.into())]);
    let p = baxter_poly(n)?;
    for (k, c) in p.coeffs().iter().enumerate() {
        report.rows.push(vec![("k", k.into()), ("coeff", Cell::Big(c.to_integer()))]);
    }
    Ok(report)
}

fn verify_rec(which: BuiltinRecurrence, to: i64, seed_check: bool) -> Result<Report, CliError> {
    let rec = recurrence(which, seed_check)?;
    let from = rec.valid_from();
    let mut report = Report::new("verify-rec", vec![("name", which.name().into()), ("from", from.into()), ("to", to.into())]);
    let oracle = which.direct_terms(rec.seed_start().max(0), to)?;
    let residuals = verify_recurrence(&rec, &oracle, from, to)?;
    let generated = generate_terms(&rec, to)?;
    for check in &residuals.checks {
        let term_ok = generated.get(check.n) == oracle.get(check.n);
        let zero = check.residual.is_zero();
        report.pass &= zero && term_ok;
        report.rows.push(vec![
            ("n", check.n.into()),
            ("residual", check.residual.to_string().into()),
            ("zero", zero.into()),
            ("generated_matches_direct", term_ok.into()),
        ]);
    }
    Ok(report)
}

fn verify_mixed(to: i64) -> Result<Report, CliError> {
    let mut report = Report::new("verify-mixed", vec![("from", 2i64.into()), ("to", to.into())]);
    let jobs: Vec<(MixedIdentity, i64)> = MixedIdentity::ALL
        .iter()
        .flat_map(|&w| (2..=to).map(move |n| (w, n)))
        .collect();
    let results = jobs
        .par_iter()
        .map(|&(w, n)| verify_mixed_identity(n, w))
        .collect::<Result<Vec<_>, _>>()?;
    for ((which, n), r) in jobs.iter().zip(results) {
        let residual = r.checks.first().map(|c| c.residual.to_string()).unwrap_or_default();
        report.pass &= r.passed();
        report.rows.push(vec![
            ("identity", which.name().into()),
            ("n", (*n).into()),
            ("residual", residual.into()),
            ("zero", r.passed().into()),
        ]);
    }
    Ok(report)
}

fn verify_ore(from: i64, to: i64) -> Result<Report, CliError> {
    let mut report = Report::new("verify-ore", vec![("from", from.into()), ("to", to.into())]);
    let ops = baxter_annihilators();
    let jobs: Vec<(usize, i64)> = (0..ops.len()).flat_map(|i| (from..=to).map(move |n| (i, n))).collect();
    let results = jobs
        .par_iter()
        .map(|&(i, n)| apply_ore_operator(&ops[i], n))
        .collect::<Result<Vec<_>, _>>()?;
    for ((i, n), residual) in jobs.iter().zip(results) {
        let zero = residual.is_zero();
        report.pass &= zero;
        report.rows.push(vec![
            ("operator", ops[*i].label.clone().into()),
            ("n", (*n).into()),
            ("residual", residual.to_string().into()),
            ("zero", zero.into()),
        ]);
    }
    Ok(report)
}

fn asym(which: BuiltinRecurrence, root: &BigRational, order: usize) -> Result<Report, CliError> {
    let mut report = Report::new(
        "asym",
        vec![("name", which.name().into()), ("root", root.clone().into()), ("order", order.into())],
    );
    let rec = builtin_recurrence(which);
    for b in expand_branch(&rec, root, order)? {
        let residuals_zero = branch_residuals(&rec, &b)?.iter().all(Zero::is_zero);
        report.pass &= residuals_zero;
        report.rows.push(vec![
            ("lambda", b.lambda.clone().into()),
            ("nu", b.nu.clone().into()),
            ("coeffs", Cell::List(b.coeffs.iter().cloned().map(Cell::Rational).collect())),
            ("status", b.status.name().into()),
            ("residuals_zero", residuals_zero.into()),
        ]);
    }
    Ok(report)
}

fn roots(to: i64) -> Result<Report, CliError> {
    let mut report = Report::new("roots", vec![("from", 2i64.into()), ("to", to.into())]);
    let results = (2..=to)
        .into_par_iter()
        .map(check_baxter_real_rooted)
        .collect::<Result<Vec<_>, _>>()?;
    for r in results {
        report.pass &= r.passed();
        report.rows.push(vec![
            ("n", r.n.into()),
            ("degree", r.degree.into()),
            ("squarefree_degree", r.squarefree_degree.into()),
            ("distinct_real_roots", r.distinct_real_roots.into()),
            ("positive_roots", r.positive_roots.into()),
            ("repeated_root_degree", r.repeated_root_degree.into()),
            ("pass", r.passed().into()),
        ]);
    }
    Ok(report)
}

/// Passes when the mean is exactly `(n+1)/2` everywhere and the Kolmogorov distance
/// strictly decreases along the sorted list.
fn clt(ns: &[i64]) -> Result<Report, CliError> {
    let mut report = Report::new(
        "clt",
        vec![
            ("n", Cell::List(ns.iter().map(|&n| Cell::Int(n)).collect())),
            ("slope_gap", SLOPE_GAP.into()),
        ],
    );
    let max = *ns.last().expect("validated non-empty");
    let table = MomentTable::direct(max + SLOPE_GAP)?;
    let rows = ns
        .par_iter()
        .map(|&n| -> Result<Row, baxter_core::Error> {
            let normal = normality_report(n)?;
            let (mu, sigma2) = table.mean_variance(n)?;
            let lr = limit_ratio_report_with(&table, n, SLOPE_GAP)?;
            let offset = &mu - ratio(n + 1, 2);
            Ok(vec![
                ("n", n.into()),
                ("mu", mu.into()),
                // exactly zero: the mean carries no 1/n^2 correction
                ("mu_minus_half_n_plus_one", offset.into()),
                ("sigma2", to_f64(&sigma2).into()),
                ("kolmogorov", normal.kolmogorov.into()),
                ("local_sup", normal.local_sup.into()),
                ("mean_ratio", lr.mean_ratio.into()),
                ("second_ratio", lr.second_ratio.into()),
                ("variance_slope", lr.variance_slope.into()),
            ])
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut prev_k = f64::INFINITY;
    for row in &rows {
        let field = |name: &str| &row.iter().find(|(k, _)| *k == name).expect("field present").1;
        let (Cell::Rational(offset), Cell::Float(k)) = (field("mu_minus_half_n_plus_one"), field("kolmogorov")) else {
            unreachable!()
        };
        report.pass &= offset.is_zero() && *k < prev_k;
        prev_k = *k;
    }
    report.rows = rows;
    Ok(report)
}

fn enumerate(n: usize, allow_large: bool) -> Result<Report, CliError> {
    let mut report = Report::new("enum", vec![("n", n.into()), ("allow_large", allow_large.into())]);
    let parts = (1..=n as u8)
        .into_par_iter()
        .map(|first| enumerate_partition(n, first, allow_large))
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = StatTable { n, ..Default::default() };
    for p in &parts {
        table.merge(p);
    }
    for d in 0..n {
        let count = table.by_descents.get(&d).copied().unwrap_or(0);
        let expected = refined_baxter(n as i64, d as i64 + 1)?;
        let ok = BigInt::from(count) == expected;
        report.pass &= ok;
        report.rows.push(vec![
            ("descents", d.into()),
            ("rises", (n - 1 - d).into()),
            ("count", count.into()),
            ("refined_baxter", expected.into()),
            ("match", ok.into()),
        ]);
    }
    let total_ok = BigInt::from(table.total()) == baxter_number(n as i64)?;
    report.pass &= total_ok;
    Ok(report)
}
