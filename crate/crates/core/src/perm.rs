//! Permutations in one-line notation, standardisation, structural
//! operations and lexicographic iteration over S_n.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest permutation representable (values are stored as `u8`).
pub const MAX_LEN: usize = 255;

/// A permutation of {1, ..., n} in one-line notation.
///
/// The empty permutation (n = 0) is valid. Values are 1-based: `at(i)`
/// is the image of position `i` for `i` in 1..=n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation, checking that `values` is a rearrangement of 1..=n.
    pub fn new(values: Vec<u8>) -> Result<Self> {
        let n = values.len();
        if n > MAX_LEN {
            return Err(Error::InvalidPermutation(format!(
                "length {n} exceeds the supported maximum {MAX_LEN}"
            )));
        }
        let mut seen = vec![false; n];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} out of range 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("value {v} repeats")));
            }
            seen[v - 1] = true;
        }
        Ok(Self { values })
    }

    /// The empty permutation.
    pub fn empty() -> Self {
        Self { values: Vec::new() }
    }

    /// The identity permutation 12...n.
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Self {
            values: (1..=n as u8).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// One-line notation values, 1-based entries at 0-based slots.
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Image of the 1-based position `pos`.
    pub fn at(&self, pos: usize) -> usize {
        self.values[pos - 1] as usize
    }

    /// The unique permutation order-isomorphic to `word`.
    ///
    /// Entries must be pairwise distinct.
    pub fn standardize(word: &[i64]) -> Result<Self> {
        let n = word.len();
        if n > MAX_LEN {
            return Err(Error::InvalidPermutation(format!(
                "length {n} exceeds the supported maximum {MAX_LEN}"
            )));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| word[i]);
        for w in order.windows(2) {
            if word[w[0]] == word[w[1]] {
                return Err(Error::DuplicateEntries);
            }
        }
        let mut values = vec![0u8; n];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank as u8 + 1;
        }
        Ok(Self { values })
    }

    /// Standardisation of a subsequence of permutation values (known distinct).
    pub(crate) fn standardize_values(vals: &[u8]) -> Vec<u8> {
        let n = vals.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| vals[i]);
        let mut ranks = vec![0u8; n];
        for (rank, &i) in order.iter().enumerate() {
            ranks[i] = rank as u8 + 1;
        }
        ranks
    }

    /// Inserts the value `k` at the front, shifting values >= k up by one.
    ///
    /// Requires 1 <= k <= n+1; the result has length n+1 and starts with `k`.
    pub fn k_prefix(&self, k: usize) -> Result<Self> {
        self.insert_shifted(k, true)
    }

    /// Inserts the value `k` at the back, shifting values >= k up by one.
    pub fn k_postfix(&self, k: usize) -> Result<Self> {
        self.insert_shifted(k, false)
    }

    fn insert_shifted(&self, k: usize, front: bool) -> Result<Self> {
        let n = self.len();
        if k == 0 || k > n + 1 {
            return Err(Error::InvalidInput(format!(
                "insertion value {k} out of range 1..={}",
                n + 1
            )));
        }
        let mut values = Vec::with_capacity(n + 1);
        if front {
            values.push(k as u8);
        }
        for &v in &self.values {
            values.push(if (v as usize) < k { v } else { v + 1 });
        }
        if !front {
            values.push(k as u8);
        }
        Ok(Self { values })
    }

    /// Recovers `(k, pi)` from `k_prefix(k, pi)`. `None` for the empty permutation.
    pub fn prefix_split(&self) -> Option<(usize, Permutation)> {
        if self.is_empty() {
            return None;
        }
        let k = self.values[0] as usize;
        let rest = Self::standardize_values(&self.values[1..]);
        Some((k, Self { values: rest }))
    }

    /// Recovers `(pi, k)` from `k_postfix(pi, k)`. `None` for the empty permutation.
    pub fn postfix_split(&self) -> Option<(Permutation, usize)> {
        if self.is_empty() {
            return None;
        }
        let n = self.len();
        let k = self.values[n - 1] as usize;
        let rest = Self::standardize_values(&self.values[..n - 1]);
        Some((Self { values: rest }, k))
    }

    /// Skew sum: `self` placed above-left of `other`.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let shift = other.len() as u8;
        let mut values: Vec<u8> = self.values.iter().map(|&v| v + shift).collect();
        values.extend_from_slice(&other.values);
        Self { values }
    }

    /// The unique maximal decomposition into skew-indecomposable components.
    ///
    /// Concatenating the components with [`skew_sum`](Self::skew_sum)
    /// reproduces `self`. The empty permutation decomposes into no components.
    pub fn skew_decompose(&self) -> Vec<Permutation> {
        let n = self.len();
        let mut components = Vec::new();
        let mut start = 0usize;
        let mut min_val = u8::MAX;
        for i in 0..n {
            min_val = min_val.min(self.values[i]);
            // The prefix 0..=i holds exactly the top i+1 values iff its
            // minimum is n-i; every such point is a component boundary.
            if min_val as usize == n - i {
                let ranks = Self::standardize_values(&self.values[start..=i]);
                components.push(Self { values: ranks });
                start = i + 1;
                min_val = u8::MAX;
            }
        }
        components
    }

    /// True when the permutation is nonempty and admits no skew split.
    pub fn is_skew_indecomposable(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return false;
        }
        let mut min_val = u8::MAX;
        for i in 0..n - 1 {
            min_val = min_val.min(self.values[i]);
            if min_val as usize == n - i {
                return false;
            }
        }
        true
    }

    /// The n standardised patterns obtained by deleting one entry.
    pub fn one_point_deletions(&self) -> Vec<Permutation> {
        let n = self.len();
        let mut out = Vec::with_capacity(n);
        for skip in 0..n {
            let removed = self.values[skip];
            let mut values = Vec::with_capacity(n - 1);
            for (i, &v) in self.values.iter().enumerate() {
                if i != skip {
                    values.push(if v > removed { v - 1 } else { v });
                }
            }
            out.push(Self { values });
        }
        out
    }

    /// True iff some subsequence of `self` is order-isomorphic to `p`.
    pub fn contains(&self, p: &Permutation) -> bool {
        crate::occurrence::contains_impl(p, self)
    }

    pub fn avoids(&self, p: &Permutation) -> bool {
        !self.contains(p)
    }

    /// True iff `self` avoids every pattern in `basis`.
    pub fn avoids_all<'a, I>(&self, basis: I) -> bool
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        basis.into_iter().all(|p| self.avoids(p))
    }
}

impl fmt::Display for Permutation {
    /// Digit string for length <= 9 ("42135"), comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for &v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let mut values = Vec::new();
        if s.contains(',') {
            for token in s.split(',') {
                let v: u8 = token.parse().map_err(|_| Error::Parse {
                    what: "permutation",
                    token: token.to_string(),
                })?;
                values.push(v);
            }
        } else {
            for c in s.chars() {
                match c.to_digit(10) {
                    Some(d) if d >= 1 => values.push(d as u8),
                    _ => {
                        return Err(Error::Parse {
                            what: "permutation",
                            token: c.to_string(),
                        })
                    }
                }
            }
        }
        Self::new(values)
    }
}

/// n! as a u64; panics for n > 20.
pub fn factorial(n: usize) -> u64 {
    assert!(n <= 20, "factorial overflow");
    (1..=n as u64).product()
}

/// All permutations of length `n` in lexicographic order of one-line notation.
pub fn iterate_permutations(n: usize) -> LexPermutations {
    lex_range(n, 0, factorial(n))
}

/// The contiguous lexicographic range [start, end) of S_n, by rank.
///
/// Ranks run from 0 (the identity) to n!-1 (the decreasing permutation).
pub fn lex_range(n: usize, start: u64, end: u64) -> LexPermutations {
    let total = factorial(n);
    assert!(start <= end && end <= total, "rank range out of bounds");
    LexPermutations {
        current: if start < end {
            Some(unrank(n, start))
        } else {
            None
        },
        remaining: end - start,
    }
}

/// Iterator over a lexicographic range of S_n.
pub struct LexPermutations {
    current: Option<Vec<u8>>,
    remaining: u64,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let cur = self.current.as_mut()?;
        let item = Permutation {
            values: cur.clone(),
        };
        self.remaining -= 1;
        if self.remaining > 0 {
            next_permutation(cur);
        }
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

/// Lexicographic unranking via the factorial number system.
fn unrank(n: usize, mut rank: u64) -> Vec<u8> {
    let mut pool: Vec<u8> = (1..=n as u8).collect();
    let mut values = Vec::with_capacity(n);
    for slot in (0..n).rev() {
        let f = factorial(slot);
        let pick = (rank / f) as usize;
        rank %= f;
        values.push(pool.remove(pick));
    }
    values
}

/// In-place successor in lexicographic order; false at the final permutation.
fn next_permutation(vals: &mut [u8]) -> bool {
    let n = vals.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && vals[i - 1] >= vals[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while vals[j] <= vals[i - 1] {
        j -= 1;
    }
    vals.swap(i - 1, j);
    vals[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(Permutation::standardize(&[2, 5, 3]).unwrap(), p("132"));
        assert_eq!(Permutation::standardize(&[1, 3, 2]).unwrap(), p("132"));
        assert_eq!(Permutation::standardize(&[]).unwrap(), Permutation::empty());
        assert_eq!(Permutation::standardize(&[-7, 100, 4]).unwrap(), p("132"));
    }

    #[test]
    fn standardize_rejects_duplicates() {
        assert!(matches!(
            Permutation::standardize(&[1, 2, 1]),
            Err(Error::DuplicateEntries)
        ));
    }

    #[test]
    fn standardize_idempotent_small() {
        for n in 0..=5 {
            for pi in iterate_permutations(n) {
                let word: Vec<i64> = pi.values().iter().map(|&v| v as i64).collect();
                assert_eq!(Permutation::standardize(&word).unwrap(), pi);
            }
        }
    }

    #[test]
    fn new_validates_bijection() {
        assert!(Permutation::new(vec![1, 2, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn parse_and_display_round_trip() {
        assert_eq!(p("42135").values(), &[4, 2, 1, 3, 5]);
        assert_eq!(p("4,2,1,3,5"), p("42135"));
        assert_eq!(p("").len(), 0);
        assert_eq!(p("42135").to_string(), "42135");
        let long = Permutation::identity(10);
        assert_eq!(long.to_string(), "1,2,3,4,5,6,7,8,9,10");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
    }

    #[test]
    fn parse_names_bad_token() {
        match "41x35".parse::<Permutation>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("expected parse error, got {other:?}"),
        }
        match "4,2,x".parse::<Permutation>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!("420".parse::<Permutation>().is_err());
    }

    #[test]
    fn k_prefix_example() {
        assert_eq!(p("42135").k_prefix(2).unwrap(), p("253146"));
        assert_eq!(Permutation::empty().k_prefix(1).unwrap(), p("1"));
    }

    #[test]
    fn k_postfix_example() {
        assert_eq!(p("42135").k_postfix(3).unwrap(), p("521463"));
    }

    #[test]
    fn insertion_rejects_out_of_range() {
        assert!(p("42135").k_prefix(0).is_err());
        assert!(p("42135").k_prefix(7).is_err());
        assert!(p("42135").k_postfix(7).is_err());
        assert!(p("42135").k_prefix(6).is_ok());
    }

    #[test]
    fn prefix_round_trip_is_bijection() {
        // (k, pi) -> k_prefix(k, pi) covers S_{n+1} exactly once.
        for n in 0..=6 {
            let mut seen = std::collections::HashSet::new();
            for pi in iterate_permutations(n) {
                for k in 1..=n + 1 {
                    let ext = pi.k_prefix(k).unwrap();
                    let (k2, pi2) = ext.prefix_split().unwrap();
                    assert_eq!((k2, &pi2), (k, &pi));
                    assert!(seen.insert(ext));
                }
            }
            assert_eq!(seen.len() as u64, factorial(n + 1));
        }
    }

    #[test]
    fn postfix_round_trip_small() {
        for n in 0..=5 {
            for pi in iterate_permutations(n) {
                for k in 1..=n + 1 {
                    let ext = pi.k_postfix(k).unwrap();
                    let (pi2, k2) = ext.postfix_split().unwrap();
                    assert_eq!((&pi2, k2), (&pi, k));
                }
            }
        }
    }

    #[test]
    fn skew_decompose_examples() {
        assert_eq!(p("3412").skew_decompose(), vec![p("12"), p("12")]);
        assert_eq!(p("42135").skew_decompose(), vec![p("42135")]);
        assert_eq!(p("1").skew_decompose(), vec![p("1")]);
        assert_eq!(p("321").skew_decompose(), vec![p("1"), p("1"), p("1")]);
        assert!(Permutation::empty().skew_decompose().is_empty());
    }

    #[test]
    fn skew_decompose_recomposes() {
        for n in 0..=7 {
            for pi in iterate_permutations(n) {
                let comps = pi.skew_decompose();
                for c in &comps {
                    assert!(c.is_skew_indecomposable(), "component {c:?} of {pi:?}");
                }
                let rebuilt = comps
                    .iter()
                    .fold(Permutation::empty(), |acc, c| acc.skew_sum(c));
                assert_eq!(rebuilt, pi);
            }
        }
    }

    #[test]
    fn iteration_is_lexicographic_and_complete() {
        let s0: Vec<_> = iterate_permutations(0).collect();
        assert_eq!(s0, vec![Permutation::empty()]);

        let s3: Vec<_> = iterate_permutations(3).collect();
        assert_eq!(s3.len(), 6);
        assert_eq!(s3.first().unwrap(), &p("123"));
        assert_eq!(s3.last().unwrap(), &p("321"));
        let mut sorted = s3.clone();
        sorted.sort();
        assert_eq!(s3, sorted);

        assert_eq!(iterate_permutations(8).count(), 40320);
    }

    #[test]
    fn lex_ranges_partition_the_iteration() {
        let n = 6;
        let total = factorial(n);
        let whole: Vec<_> = iterate_permutations(n).collect();
        for blocks in [1u64, 2, 3, 8] {
            let mut glued = Vec::new();
            for b in 0..blocks {
                let start = total * b / blocks;
                let end = total * (b + 1) / blocks;
                glued.extend(lex_range(n, start, end));
            }
            assert_eq!(glued, whole);
        }
    }

    #[test]
    fn one_point_deletions_standardise() {
        assert_eq!(
            p("2143").one_point_deletions(),
            vec![p("132"), p("132"), p("213"), p("213")]
        );
        assert_eq!(p("1").one_point_deletions(), vec![Permutation::empty()]);
    }
}
