use baxter_core::numbers::{baxter_number, refined_baxter};
use baxter_core::perm::{enumerate_counts, enumerate_partition, is_baxter, non_baxter, stats, Permutation};
use baxter_core::BigInt;

/// Lexicographic permutations of 1..=n.
fn all_perms(n: u8) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Quadruple scan straight from the pattern definition.
fn is_baxter_naive(p: &[u8]) -> bool {
    let n = p.len();
    for i in 0..n {
        for j in i + 1..n {
            let k = j + 1;
            for l in k + 1..n {
                let (a, b, c, d) = (p[i], p[j], p[k], p[l]);
                if (c < a && a < d && d < b) || (b < d && d < a && a < c) {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn fast_scan_matches_naive_scan() {
    for n in 1..=7 {
        for p in all_perms(n) {
            assert_eq!(is_baxter(&Permutation::new(p.clone()).unwrap()), is_baxter_naive(&p), "{p:?}");
        }
    }
}

#[test]
fn tables_match_refined_numbers() {
    for n in 2..=8usize {
        let t = enumerate_counts(n, false).unwrap();
        assert_eq!(BigInt::from(t.total()), baxter_number(n as i64).unwrap());
        for d in 0..n {
            let count = t.by_descents.get(&d).copied().unwrap_or(0);
            assert_eq!(BigInt::from(count), refined_baxter(n as i64, d as i64 + 1).unwrap(), "n = {n}, d = {d}");
            assert_eq!(count, t.by_descents.get(&(n - 1 - d)).copied().unwrap_or(0));
            assert_eq!(t.with_rises(n - 1 - d), count);
        }
    }
}

#[test]
fn partitions_merge_to_the_whole() {
    let whole = enumerate_counts(6, false).unwrap();
    let mut merged = enumerate_partition(6, 1, false).unwrap();
    for first in 2..=6 {
        merged.merge(&enumerate_partition(6, first, false).unwrap());
    }
    assert_eq!(merged, whole);
}

#[test]
fn closed_under_reverse_and_complement() {
    for n in 1..=6 {
        for p in all_perms(n) {
            let p = Permutation::new(p).unwrap();
            if is_baxter(&p) {
                assert!(is_baxter(&p.reverse()) && is_baxter(&p.complement()), "{p:?}");
            }
        }
    }
}

#[test]
fn excluded_at_four() {
    let bad = non_baxter(4).unwrap();
    let as_digits: Vec<Vec<u8>> = bad.iter().map(|p| p.entries().to_vec()).collect();
    assert_eq!(as_digits, [vec![2, 4, 1, 3], vec![3, 1, 4, 2]]);
}

#[test]
fn stats_add_up() {
    for p in all_perms(6) {
        let (r, d) = stats(&Permutation::new(p).unwrap());
        assert_eq!(r + d, 5);
    }
}
