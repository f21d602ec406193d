//! Mesh patterns: classical patterns with shaded grid cells that must
//! stay free of host points in an occurrence.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::occurrence::for_each_occurrence;
use crate::perm::Permutation;

/// A classical pattern of length k together with shaded cells of the
/// (k+1) x (k+1) cell grid.
///
/// Cells are (column, row) with 0 at the left/bottom: cell (c, r) is the
/// open region strictly between the c-th and (c+1)-st occurrence columns
/// and strictly between the r-th and (r+1)-st occurrence values by rank,
/// where 0 and k+1 stand for the grid boundary.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MeshPattern {
    pattern: Permutation,
    shaded: Vec<(u8, u8)>,
}

impl MeshPattern {
    pub fn new<I>(pattern: Permutation, shaded: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u8, u8)>,
    {
        let k = pattern.len() as u8;
        let mut cells: Vec<(u8, u8)> = Vec::new();
        for (c, r) in shaded {
            if c > k || r > k {
                return Err(Error::InvalidInput(format!(
                    "shaded cell ({c},{r}) outside the {0}x{0} cell grid",
                    k as usize + 1
                )));
            }
            cells.push((c, r));
        }
        cells.sort_unstable();
        cells.dedup();
        Ok(Self {
            pattern,
            shaded: cells,
        })
    }

    /// A classical pattern viewed as a mesh pattern with no shading.
    pub fn classical(pattern: Permutation) -> Self {
        Self {
            pattern,
            shaded: Vec::new(),
        }
    }

    /// The mesh pattern whose avoidance characterises permutations with a
    /// connected occurrence graph for the pattern 12: underlying pattern
    /// 3412 with the lower-left and upper-right blocks shaded.
    pub fn connectivity_classifier() -> Self {
        let cells = [
            (0, 0),
            (0, 1),
            (1, 0),
            (1, 1),
            (2, 0),
            (2, 1),
            (3, 2),
            (3, 3),
            (3, 4),
            (4, 2),
            (4, 3),
            (4, 4),
        ];
        Self::new("3412".parse().unwrap(), cells).unwrap()
    }

    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }

    pub fn shaded(&self) -> &[(u8, u8)] {
        &self.shaded
    }
}

impl fmt::Display for MeshPattern {
    /// Text form: `3412|0,0;0,1;...` with cells sorted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|", self.pattern)?;
        for (i, (c, r)) in self.shaded.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{c},{r}")?;
        }
        Ok(())
    }
}

impl FromStr for MeshPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (pat_text, cells_text) = match s.split_once('|') {
            Some((a, b)) => (a, b),
            None => (s, ""),
        };
        let pattern: Permutation = pat_text.parse()?;
        let mut cells = Vec::new();
        if !cells_text.is_empty() {
            for cell in cells_text.split(';') {
                let parsed = cell.split_once(',').and_then(|(c, r)| {
                    Some((c.trim().parse::<u8>().ok()?, r.trim().parse::<u8>().ok()?))
                });
                match parsed {
                    Some(cr) => cells.push(cr),
                    None => {
                        return Err(Error::Parse {
                            what: "mesh pattern cell",
                            token: cell.to_string(),
                        })
                    }
                }
            }
        }
        Self::new(pattern, cells)
    }
}

impl Permutation {
    /// True iff some classical occurrence of `m.pattern()` in `self` keeps
    /// every shaded cell's region free of host points.
    pub fn contains_mesh(&self, m: &MeshPattern) -> bool {
        let k = m.pattern.len();
        let n = self.len();
        let host = self.values();
        let mut sorted_vals: Vec<u8> = Vec::with_capacity(k);
        for_each_occurrence(&m.pattern, self, &mut |chosen| {
            sorted_vals.clear();
            sorted_vals.extend(chosen.iter().map(|&i| host[i as usize - 1]));
            sorted_vals.sort_unstable();
            m.shaded.iter().all(|&(c, r)| {
                let (c, r) = (c as usize, r as usize);
                let x_lo = if c == 0 { 0 } else { chosen[c - 1] as usize };
                let x_hi = if c == k { n + 1 } else { chosen[c] as usize };
                let y_lo = if r == 0 {
                    0
                } else {
                    sorted_vals[r - 1] as usize
                };
                let y_hi = if r == k {
                    n + 1
                } else {
                    sorted_vals[r] as usize
                };
                (x_lo + 1..x_hi).all(|x| {
                    let y = host[x - 1] as usize;
                    y <= y_lo || y >= y_hi
                })
            })
        })
    }

    pub fn avoids_mesh(&self, m: &MeshPattern) -> bool {
        !self.contains_mesh(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::iterate_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn classifier_round_trips_through_text() {
        let m = MeshPattern::connectivity_classifier();
        let text = "3412|0,0;0,1;1,0;1,1;2,0;2,1;3,2;3,3;3,4;4,2;4,3;4,4";
        assert_eq!(m.to_string(), text);
        assert_eq!(text.parse::<MeshPattern>().unwrap(), m);
        assert_eq!("3412|".parse::<MeshPattern>().unwrap().shaded(), &[]);
        assert_eq!("3412".parse::<MeshPattern>().unwrap().shaded(), &[]);
    }

    #[test]
    fn rejects_cells_outside_grid() {
        assert!(MeshPattern::new(p("12"), [(3, 0)]).is_err());
        assert!(MeshPattern::new(p("12"), [(0, 3)]).is_err());
        assert!(MeshPattern::new(p("12"), [(2, 2)]).is_ok());
    }

    #[test]
    fn classifier_containment_examples() {
        let m = MeshPattern::connectivity_classifier();
        assert!(p("3412").contains_mesh(&m));
        assert!(!p("123").contains_mesh(&m));
        assert!(!p("24153").contains_mesh(&m));
    }

    #[test]
    fn only_3412_contains_classifier_at_length_4() {
        let m = MeshPattern::connectivity_classifier();
        let holders: Vec<Permutation> = iterate_permutations(4)
            .filter(|pi| pi.contains_mesh(&m))
            .collect();
        assert_eq!(holders, vec![p("3412")]);
    }

    #[test]
    fn empty_shading_reduces_to_classical_containment() {
        let mut pats: Vec<Permutation> = Vec::new();
        for k in 0..=3 {
            pats.extend(iterate_permutations(k));
        }
        pats.push(p("3412"));
        for n in 0..=6 {
            for pi in iterate_permutations(n) {
                for pat in &pats {
                    let m = MeshPattern::classical(pat.clone());
                    assert_eq!(
                        pi.contains_mesh(&m),
                        pi.contains(pat),
                        "pattern {pat:?} in {pi:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn shading_constrains_containment() {
        // 12 with every cell shaded occurs only in 12 itself.
        let all_cells = (0..=2).flat_map(|c| (0..=2).map(move |r| (c, r)));
        let m = MeshPattern::new(p("12"), all_cells).unwrap();
        assert!(p("12").contains_mesh(&m));
        assert!(!p("132").contains_mesh(&m));
        assert!(!p("312").contains_mesh(&m));
        // 312 still has a plain occurrence of 12.
        assert!(p("312").contains(&p("12")));
    }
}
