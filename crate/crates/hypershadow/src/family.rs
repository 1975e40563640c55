//! Duplicate-free families of equal-size vertex subsets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A family of k-sets, kept sorted in antilexicographic order without duplicates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetFamily {
    k: usize,
    sets: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new(k: usize) -> Self {
        SetFamily { k, sets: Vec::new() }
    }

    /// Collects sets of size `k`; duplicates are merged, wrong sizes rejected.
    pub fn from_sets<I: IntoIterator<Item = VertexSet>>(k: usize, sets: I) -> Result<Self> {
        let mut collected = BTreeSet::new();
        for s in sets {
            if s.len() != k {
                return Err(Error::EdgeArity {
                    edge: s,
                    got: s.len(),
                    expected: k,
                });
            }
            collected.insert(s);
        }
        Ok(SetFamily {
            k,
            sets: collected.into_iter().collect(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.sets.iter().copied()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    /// Inserts a set, returning whether it was new.
    pub fn insert(&mut self, s: VertexSet) -> Result<bool> {
        if s.len() != self.k {
            return Err(Error::EdgeArity {
                edge: s,
                got: s.len(),
                expected: self.k,
            });
        }
        match self.sets.binary_search(&s) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.sets.insert(pos, s);
                Ok(true)
            }
        }
    }

    /// The s-shadow: all s-sets contained in at least one member.
    pub fn shadow(&self, s: usize) -> Result<SetFamily> {
        if s > self.k {
            return Err(Error::InvalidTarget {
                target: s,
                uniformity: self.k,
            });
        }
        let mut out = BTreeSet::new();
        for member in &self.sets {
            for sub in member.subsets_of_size(s) {
                out.insert(sub);
            }
        }
        Ok(SetFamily {
            k: s,
            sets: out.into_iter().collect(),
        })
    }

    /// Largest label used by any member, 0 for an empty family.
    pub fn max_label(&self) -> usize {
        self.sets
            .iter()
            .filter_map(|s| s.max())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(labels: &[usize]) -> VertexSet {
        VertexSet::from_labels(labels.iter().copied()).unwrap()
    }

    #[test]
    fn shadow_of_single_edges() {
        let f = SetFamily::from_sets(2, [vs(&[1, 2]), vs(&[1, 3])]).unwrap();
        let sh = f.shadow(1).unwrap();
        assert_eq!(sh.sets(), &[vs(&[1]), vs(&[2]), vs(&[3])]);
    }

    #[test]
    fn shadow_of_one_triple_is_all_pairs() {
        let f = SetFamily::from_sets(3, [vs(&[1, 2, 3])]).unwrap();
        let sh = f.shadow(2).unwrap();
        assert_eq!(sh.sets(), &[vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]);
    }

    #[test]
    fn shadow_of_clique_plus_extra_edge() {
        // All 2-subsets of [4] plus {1,5},{2,5}: eight pairs in total.
        let f = SetFamily::from_sets(
            3,
            [
                vs(&[1, 2, 3]),
                vs(&[1, 2, 4]),
                vs(&[1, 3, 4]),
                vs(&[2, 3, 4]),
                vs(&[1, 2, 5]),
            ],
        )
        .unwrap();
        let sh = f.shadow(2).unwrap();
        assert_eq!(sh.len(), 8);
        assert!(sh.contains(vs(&[1, 5])));
        assert!(sh.contains(vs(&[2, 5])));
        assert!(!sh.contains(vs(&[3, 5])));
    }

    #[test]
    fn shadow_target_checks() {
        let f = SetFamily::from_sets(2, [vs(&[1, 2])]).unwrap();
        assert!(matches!(f.shadow(3), Err(Error::InvalidTarget { .. })));
        // s = k returns the family itself; s = 0 the empty set only.
        assert_eq!(f.shadow(2).unwrap().sets(), f.sets());
        assert_eq!(f.shadow(0).unwrap().sets(), &[VertexSet::EMPTY]);
    }

    #[test]
    fn duplicates_merge_and_sizes_check() {
        let f = SetFamily::from_sets(2, [vs(&[1, 2]), vs(&[1, 2])]).unwrap();
        assert_eq!(f.len(), 1);
        assert!(SetFamily::from_sets(2, [vs(&[1, 2, 3])]).is_err());
    }
}
