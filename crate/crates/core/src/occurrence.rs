//! Occurrences of classical patterns: index sets, index injections and
//! the backtracking enumerator behind containment tests.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A strictly increasing set of 1-based positions; the index set of one
/// occurrence of a pattern in a host permutation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    indices: Vec<u8>,
}

impl IndexSet {
    pub fn new(indices: Vec<u8>) -> Result<Self> {
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput(format!(
                    "index set must be strictly increasing, got {} before {}",
                    w[0], w[1]
                )));
            }
        }
        if indices.first().is_some_and(|&i| i == 0) {
            return Err(Error::InvalidInput("indices are 1-based".into()));
        }
        Ok(Self { indices })
    }

    pub fn empty() -> Self {
        Self {
            indices: Vec::new(),
        }
    }

    pub(crate) fn from_sorted_unchecked(indices: Vec<u8>) -> Self {
        Self { indices }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[u8] {
        &self.indices
    }

    pub fn contains_index(&self, i: u8) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Edge rule of occurrence graphs: |self \ other| = |other \ self| = 1.
    pub fn differs_by_one(&self, other: &IndexSet) -> bool {
        if self.len() != other.len() || self.is_empty() {
            return false;
        }
        let mut shared = 0usize;
        let (a, b) = (&self.indices, &other.indices);
        let (mut i, mut j) = (0usize, 0usize);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Equal => {
                    shared += 1;
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
            }
        }
        shared + 1 == self.len()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The order-preserving injection j -> i_j determined by an occurrence's
/// index set, viewed as a function on 1-based pattern positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexInjection {
    map: Vec<u8>,
}

impl IndexInjection {
    pub fn new(map: Vec<u8>) -> Result<Self> {
        for w in map.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput(
                    "index injection must be strictly increasing".into(),
                ));
            }
        }
        if map.first().is_some_and(|&i| i == 0) {
            return Err(Error::InvalidInput("indices are 1-based".into()));
        }
        Ok(Self { map })
    }

    pub fn from_index_set(set: &IndexSet) -> Self {
        Self {
            map: set.indices().to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Image of the 1-based position `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.map[j - 1] as usize
    }

    pub fn as_index_set(&self) -> IndexSet {
        IndexSet {
            indices: self.map.clone(),
        }
    }
}

/// All index sets of occurrences of `p` in `pi`, in lexicographic order.
///
/// For the empty pattern this is exactly one empty index set.
pub fn occurrences(p: &Permutation, pi: &Permutation) -> Vec<IndexSet> {
    let mut out = Vec::new();
    for_each_occurrence(p, pi, &mut |chosen| {
        out.push(IndexSet::from_sorted_unchecked(chosen.to_vec()));
        false
    });
    out
}

pub(crate) fn contains_impl(p: &Permutation, pi: &Permutation) -> bool {
    for_each_occurrence(p, pi, &mut |_| true)
}

/// Backtracking enumeration of occurrences in lexicographic index order.
/// The visitor returns true to stop; the function reports whether it stopped.
pub(crate) fn for_each_occurrence<F>(p: &Permutation, pi: &Permutation, visit: &mut F) -> bool
where
    F: FnMut(&[u8]) -> bool,
{
    let k = p.len();
    let n = pi.len();
    if k > n {
        return false;
    }
    let mut chosen: Vec<u8> = Vec::with_capacity(k);
    search(p.values(), pi.values(), &mut chosen, visit)
}

fn search<F>(p: &[u8], host: &[u8], chosen: &mut Vec<u8>, visit: &mut F) -> bool
where
    F: FnMut(&[u8]) -> bool,
{
    let t = chosen.len();
    if t == p.len() {
        return visit(chosen);
    }
    let n = host.len();
    let first = chosen.last().map_or(1, |&c| c as usize + 1);
    // Leave room for the remaining pattern positions.
    let last = n + t + 1 - p.len();
    for idx in first..=last {
        let v = host[idx - 1];
        let consistent = (0..t).all(|s| (v < host[chosen[s] as usize - 1]) == (p[t] < p[s]));
        if consistent {
            chosen.push(idx as u8);
            if search(p, host, chosen, visit) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
