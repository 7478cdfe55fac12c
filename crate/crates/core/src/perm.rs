//! Brute-force enumeration of Baxter permutations by descent count.
//!
//! A permutation is Baxter when it avoids the vincular patterns 2-41-3 and
//! 3-14-2, where the middle two letters must be adjacent.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Largest `n` enumerated without an explicit opt-in.
pub const DEFAULT_MAX_N: usize = 8;
/// Hard ceiling on `n`, even with the opt-in.
pub const LARGE_MAX_N: usize = 9;

/// One-line notation on `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let n = entries.len();
        let mut seen = alloc::vec![false; n + 1];
        for &e in &entries {
            let e = e as usize;
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidPermutation(format!("{entries:?} is not a bijection on 1..={n}")));
            }
            seen[e] = true;
        }
        Ok(Self(entries))
    }

    /// Parses compact digit notation such as `"2413"` (only for `n <= 9`).
    pub fn from_digits(s: &str) -> Result<Self> {
        let entries = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        let n = self.0.len() as u8 + 1;
        Self(self.0.iter().map(|&e| n - e).collect())
    }
}

/// No `i < j < j+1 < l` with `p(j+1) < p(i) < p(l) < p(j)` (2-41-3) or
/// `p(j) < p(i) < p(l) < p(j+1)` (3-14-2).
pub fn is_baxter(p: &Permutation) -> bool {
    is_baxter_slice(&p.0)
}

fn is_baxter_slice(p: &[u8]) -> bool {
    let n = p.len();
    if n < 4 {
        return true;
    }
    for j in 1..n - 2 {
        let (a, b) = (p[j], p[j + 1]);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if hi - lo < 3 {
            continue;
        }
        for &pi in &p[..j] {
            if pi <= lo || pi >= hi {
                continue;
            }
            for &pl in &p[j + 2..] {
                if a > b {
                    // 2-41-3: p(j+1) < p(i) < p(l) < p(j)
                    if pi < pl && pl < a {
                        return false;
                    }
                } else if pl < pi && pl > a {
                    // 3-14-2: p(j) < p(l) < p(i) < p(j+1)
                    return false;
                }
            }
        }
    }
    true
}

/// `(rises, descents)`.
pub fn stats(p: &Permutation) -> (usize, usize) {
    let rises = p.0.windows(2).filter(|w| w[0] < w[1]).count();
    (rises, p.0.len().saturating_sub(1) - rises)
}

fn descents(p: &[u8]) -> usize {
    p.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Baxter permutations of size `n` tabulated by number of descents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StatTable {
    pub n: usize,
    pub by_descents: BTreeMap<usize, u64>,
}

impl StatTable {
    pub fn total(&self) -> u64 {
        self.by_descents.values().sum()
    }

    /// Count with exactly `r` rises, i.e. `n - 1 - r` descents.
    pub fn with_rises(&self, r: usize) -> u64 {
        self.n
            .checked_sub(1 + r)
            .and_then(|d| self.by_descents.get(&d).copied())
            .unwrap_or(0)
    }

    /// Entry-wise sum; used to merge partitions.
    pub fn merge(&mut self, other: &StatTable) {
        for (&d, &c) in &other.by_descents {
            *self.by_descents.entry(d).or_insert(0) += c;
        }
    }
}

fn check_size(n: usize, allow_large: bool) -> Result<()> {
    let max = if allow_large { LARGE_MAX_N } else { DEFAULT_MAX_N };
    if !(2..=max).contains(&n) {
        return Err(Error::domain(format!(
            "enumeration needs 2 <= n <= {max}{}, got {n}",
            if allow_large { "" } else { " (9 needs the large opt-in)" }
        )));
    }
    Ok(())
}

/// Visits every permutation of `items` (in place, Heap's algorithm).
fn for_each_permutation(items: &mut [u8], k: usize, f: &mut impl FnMut(&[u8])) {
    if k <= 1 {
        f(items);
        return;
    }
    for i in 0..k - 1 {
        for_each_permutation(items, k - 1, f);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    for_each_permutation(items, k - 1, f);
}

/// The part of the enumeration with `p(1) = first`; the partitions for
/// `first = 1..=n` are disjoint and cover all permutations.
pub fn enumerate_partition(n: usize, first: u8, allow_large: bool) -> Result<StatTable> {
    check_size(n, allow_large)?;
    if first == 0 || first as usize > n {
        return Err(Error::domain(format!("first entry {first} outside 1..={n}")));
    }
    let mut table = StatTable { n, ..Default::default() };
    let mut perm: Vec<u8> = Vec::with_capacity(n);
    perm.push(first);
    perm.extend((1..=n as u8).filter(|&v| v != first));
    let rest_len = n - 1;
    let (head, tail) = perm.split_at_mut(1);
    let head = head[0];
    let mut buf = alloc::vec![0u8; n];
    for_each_permutation(tail, rest_len, &mut |rest| {
        buf[0] = head;
        buf[1..].copy_from_slice(rest);
        if is_baxter_slice(&buf) {
            *table.by_descents.entry(descents(&buf)).or_insert(0) += 1;
        }
    });
    Ok(table)
}

/// Counts all Baxter permutations of size `n` by descents. Sizes above
/// [`DEFAULT_MAX_N`] need `allow_large`.
pub fn enumerate_counts(n: usize, allow_large: bool) -> Result<StatTable> {
    check_size(n, allow_large)?;
    let mut table = StatTable { n, ..Default::default() };
    for first in 1..=n as u8 {
        table.merge(&enumerate_partition(n, first, allow_large)?);
    }
    Ok(table)
}

/// All permutations of size `n` failing [`is_baxter`], in lexicographic order.
pub fn non_baxter(n: usize) -> Result<Vec<Permutation>> {
    check_size(n, false)?;
    let mut items: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::new();
    for_each_permutation(&mut items, n, &mut |p| {
        if !is_baxter_slice(p) {
            out.push(Permutation(p.to_vec()));
        }
    });
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        Permutation::from_digits(s).unwrap()
    }

    #[test]
    fn pattern_examples() {
        assert!(!is_baxter(&perm("2413")));
        assert!(!is_baxter(&perm("3142")));
        assert!(is_baxter(&perm("2143")));
        for s in ["1", "12", "21", "123", "132", "213", "231", "312", "321"] {
            assert!(is_baxter(&perm(s)));
        }
        // (2, 4 1, 3) with the outer letters far apart
        assert!(!is_baxter(&perm("254163")));
        // contains classical 2413 (2 5 1 4) but never with adjacent middle letters
        assert!(is_baxter(&perm("25314")));
    }

    #[test]
    fn rises_and_descents() {
        assert_eq!(stats(&perm("123")), (2, 0));
        assert_eq!(stats(&perm("321")), (0, 2));
        assert_eq!(stats(&perm("2413")), (2, 1));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(alloc::vec![1, 1, 2]).is_err());
        assert!(Permutation::new(alloc::vec![0, 1]).is_err());
        assert!(Permutation::new(alloc::vec![1, 3]).is_err());
    }

    #[test]
    fn small_tables() {
        let t = enumerate_counts(3, false).unwrap();
        assert_eq!(t.by_descents.into_iter().collect::<Vec<_>>(), [(0, 1), (1, 4), (2, 1)]);
        let t = enumerate_counts(4, false).unwrap();
        assert_eq!(t.total(), 22);
        assert_eq!(non_baxter(4).unwrap(), [perm("2413"), perm("3142")]);
    }

    #[test]
    fn size_guard() {
        assert!(enumerate_counts(9, false).is_err());
        assert!(enumerate_counts(1, false).is_err());
        assert!(enumerate_counts(10, true).is_err());
    }
}
