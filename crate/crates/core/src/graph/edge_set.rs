use fixedbitset::FixedBitSet;

use super::EdgeId;

/// Membership set over edge ids with O(1) queries and a maintained count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSet {
    bits: FixedBitSet,
    len: usize,
}

impl EdgeSet {
    pub fn empty(m: usize) -> Self {
        EdgeSet {
            bits: FixedBitSet::with_capacity(m),
            len: 0,
        }
    }

    pub fn full(m: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(m);
        bits.insert_range(..);
        EdgeSet { bits, len: m }
    }

    /// Number of edge ids this set ranges over.
    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        self.bits.contains(e)
    }

    /// Returns true if `e` was newly added.
    #[inline]
    pub fn insert(&mut self, e: EdgeId) -> bool {
        let was = self.bits.put(e);
        if !was {
            self.len += 1;
        }
        !was
    }

    /// Returns true if `e` was present.
    #[inline]
    pub fn remove(&mut self, e: EdgeId) -> bool {
        let was = self.bits.contains(e);
        if was {
            self.bits.set(e, false);
            self.len -= 1;
        }
        was
    }

    /// Ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits.ones()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.bits.is_subset(&other.bits)
    }
}
