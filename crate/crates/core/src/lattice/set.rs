use std::fmt;

use fixedbitset::FixedBitSet;

use super::{Elem, Oml};

/// A subset of the elements of one fixed lattice.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectionSet {
    bits: FixedBitSet,
}

impl ProjectionSet {
    pub fn empty(universe: usize) -> Self {
        ProjectionSet { bits: FixedBitSet::with_capacity(universe) }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ProjectionSet { bits }
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(universe: usize, items: I) -> Self {
        let mut s = Self::empty(universe);
        for e in items {
            s.insert(e);
        }
        s
    }

    /// `{ p ∈ L : pred(p) }`.
    pub fn filter(l: &Oml, mut pred: impl FnMut(Elem) -> bool) -> Self {
        Self::from_elems(l.len(), l.elements().filter(|&p| pred(p)))
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, e: Elem) -> bool {
        !self.bits.put(e.0)
    }

    pub fn remove(&mut self, e: Elem) {
        self.bits.set(e.0, false);
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.bits.contains(e.0)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.ones().map(Elem)
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ProjectionSet { bits }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ProjectionSet { bits }
    }

    /// Labels of the members, in index order.
    pub fn labels<'a>(&'a self, l: &'a Oml) -> Vec<&'a str> {
        self.iter().map(|e| l.label(e)).collect()
    }
}

impl fmt::Debug for ProjectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}
