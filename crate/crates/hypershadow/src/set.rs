//! Small vertex sets over the labeled universe {1, ..., 64}, packed into a `u64`.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::{Error, Result};

/// Largest vertex label a [`VertexSet`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex labels from `1..=64`, stored as a bitmask (bit `v-1` encodes
/// vertex `v`).
///
/// The derived `Ord` compares masks numerically. On sets of equal size this is
/// exactly the antilexicographic order: the largest element of the symmetric
/// difference decides, and that element owns the most significant differing bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Result<Self> {
        Self::from_labels([v])
    }

    /// Builds a set from labels, rejecting out-of-range labels and duplicates.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Result<Self> {
        let mut mask = 0u64;
        for v in labels {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexRange {
                    vertex: v,
                    limit: MAX_VERTICES,
                });
            }
            let bit = 1u64 << (v - 1);
            if mask & bit != 0 {
                return Err(Error::InvalidInput(format!("duplicate vertex {v}")));
            }
            mask |= bit;
        }
        Ok(VertexSet(mask))
    }

    /// The full set {1, ..., n}.
    pub fn full(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::LabelOverflow);
        }
        if n == 64 {
            Ok(VertexSet(u64::MAX))
        } else {
            Ok(VertexSet((1u64 << n) - 1))
        }
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= MAX_VERTICES && self.0 & (1u64 << (v - 1)) != 0
    }

    /// Adds a vertex; the label must already be known to be in 1..=64.
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v >= 1 && v <= MAX_VERTICES);
        VertexSet(self.0 | (1u64 << (v - 1)))
    }

    pub fn without(self, v: usize) -> Self {
        debug_assert!(v >= 1 && v <= MAX_VERTICES);
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    /// Labels in increasing order.
    pub fn iter(self) -> Labels {
        Labels(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All k-subsets of this set, in antilexicographic order.
    pub fn subsets_of_size(self, k: usize) -> KSubsets {
        KSubsets::new(self, k)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterator over the labels of a [`VertexSet`] in increasing order.
pub struct Labels(u64);

impl Iterator for Labels {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize + 1;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Iterator over the k-subsets of a fixed set in antilexicographic order.
///
/// Internally walks k-bit masks over the member positions with Gosper's hack;
/// increasing compressed masks map to increasing antilex order on the labels
/// because the members are sorted.
pub struct KSubsets {
    members: Vec<usize>,
    state: u64,
    done: bool,
}

impl KSubsets {
    fn new(ground: VertexSet, k: usize) -> Self {
        let members = ground.to_vec();
        if k > members.len() {
            return KSubsets {
                members,
                state: 0,
                done: true,
            };
        }
        let state = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        KSubsets {
            members,
            state,
            done: false,
        }
    }
}

impl Iterator for KSubsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let p = self.members.len();
        let limit = if p == 64 { u64::MAX } else { (1u64 << p) - 1 };
        let cur = self.state;
        if cur & !limit != 0 {
            self.done = true;
            return None;
        }
        let mut out = VertexSet::EMPTY;
        let mut bits = cur;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            out = out.with(self.members[i]);
            bits &= bits - 1;
        }
        // Gosper's hack; the empty set has no successor.
        if cur == 0 {
            self.done = true;
        } else {
            let u = cur & cur.wrapping_neg();
            let v = cur.wrapping_add(u);
            if v == 0 {
                self.done = true;
            } else {
                self.state = v | (((cur ^ v) / u) >> 2);
                if self.state > limit || self.state < cur {
                    self.done = true;
                }
            }
        }
        Some(out)
    }
}
