//! Bit-mask subsets of a finite carrier.

use std::fmt;

/// Largest carrier a [`PointSet`] can address.
pub const MAX_POINTS: usize = 16;

/// A subset of `{0, .., n-1}` for some `n <= MAX_POINTS`, stored as a mask.
///
/// A `PointSet` carries no carrier size of its own; it is always read
/// against exactly one space, which supplies `n` where complements or
/// iteration need it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PointSet(u16);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub const fn from_bits(bits: u16) -> Self {
        PointSet(bits)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    /// The full carrier `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        PointSet(((1u32 << n) - 1) as u16)
    }

    pub fn singleton(x: usize) -> Self {
        debug_assert!(x < MAX_POINTS);
        PointSet(1 << x)
    }

    pub fn contains(self, x: usize) -> bool {
        x < MAX_POINTS && self.0 & (1 << x) != 0
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1 << x);
    }

    pub fn with(self, x: usize) -> Self {
        PointSet(self.0 | (1 << x))
    }

    pub fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to a carrier of `n` points.
    pub fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & Self::full(n).0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Every subset of the carrier `{0, .., n-1}`, in mask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = PointSet> {
        (0..(1u32 << n)).map(|b| PointSet(b as u16))
    }

    /// Every nonempty subset of `self`, in increasing mask order.
    pub fn nonempty_subsets(self) -> SubsetIter {
        SubsetIter {
            mask: self.0,
            next: Some(self.0 & self.0.wrapping_neg()),
        }
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter(u16);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

/// Enumerates nonempty submasks of a mask in increasing numeric order.
pub struct SubsetIter {
    mask: u16,
    next: Option<u16>,
}

impl Iterator for SubsetIter {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        let cur = self.next?;
        if cur == 0 {
            self.next = None;
            return None;
        }
        // standard "next submask above cur" step
        let succ = (cur | !self.mask).wrapping_add(1) & self.mask;
        self.next = if succ == 0 { None } else { Some(succ) };
        Some(PointSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_mask_are_all_enumerated_once() {
        let m = PointSet::from_bits(0b1011_0100);
        let subs: Vec<_> = m.nonempty_subsets().collect();
        assert_eq!(subs.len(), (1 << m.len()) - 1);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|s| s.is_subset(m) && !s.is_empty()));
        assert_eq!(PointSet::EMPTY.nonempty_subsets().count(), 0);
    }

    #[test]
    fn complement_stays_inside_carrier() {
        let s: PointSet = [0, 2].into_iter().collect();
        assert_eq!(s.complement(3), PointSet::singleton(1));
        assert_eq!(PointSet::full(16).complement(16), PointSet::EMPTY);
        assert_eq!(PointSet::full(16).len(), 16);
    }
}
