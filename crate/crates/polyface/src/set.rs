//! Small sets of poset elements, stored as bitmasks.
//!
//! Every ground set in this crate is `{0, 1, .., n-1}` for some small `n`, so
//! a `u64` mask is enough. The numeric order of masks doubles as the
//! canonical enumeration order used throughout the crate.

use std::fmt;

/// Maximum number of elements a set (and hence a poset) can hold.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `{0, .., 63}` as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn singleton(x: usize) -> ElementSet {
        debug_assert!(x < MAX_ELEMENTS);
        ElementSet(1 << x)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> ElementSet {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn from_mask(mask: u64) -> ElementSet {
        ElementSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, x: usize) -> bool {
        x < MAX_ELEMENTS && self.0 & (1 << x) != 0
    }

    pub fn insert(&mut self, x: usize) {
        debug_assert!(x < MAX_ELEMENTS);
        self.0 |= 1 << x;
    }

    pub fn remove(&mut self, x: usize) {
        debug_assert!(x < MAX_ELEMENTS);
        self.0 &= !(1 << x);
    }

    pub fn with(self, x: usize) -> ElementSet {
        let mut s = self;
        s.insert(x);
        s
    }

    pub fn without(self, x: usize) -> ElementSet {
        let mut s = self;
        s.remove(x);
        s
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// The smallest element, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let x = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(x)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(iter: I) -> ElementSet {
        let mut s = ElementSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }

    /// All subsets of `self`, in ascending mask order.
    pub fn subsets(self) -> impl Iterator<Item = ElementSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            // Standard submask walk, increasing numeric order.
            next = if cur == full {
                None
            } else {
                Some(cur.wrapping_sub(full) & full)
            };
            Some(ElementSet(cur))
        })
    }
}

/// All subsets of `{0, .., n-1}`, in ascending mask order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    debug_assert!(n < 32, "subset enumeration is only meant for small ground sets");
    (0u64..(1 << n)).map(ElementSet)
}

impl std::ops::BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & rhs.0)
    }
}

impl std::ops::BitXor for ElementSet {
    type Output = ElementSet;
    fn bitxor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 ^ rhs.0)
    }
}

/// Set difference.
impl std::ops::Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> ElementSet {
        ElementSet::from_elements(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn basic_ops() {
        let a = set(&[0, 2, 3]);
        let b = set(&[2, 4]);
        assert_eq!((a | b).to_vec(), vec![0, 2, 3, 4]);
        assert_eq!((a & b).to_vec(), vec![2]);
        assert_eq!((a - b).to_vec(), vec![0, 3]);
        assert_eq!((a ^ b).to_vec(), vec![0, 3, 4]);
        assert_eq!(a.len(), 3);
        assert!(set(&[2, 3]).is_subset(a));
        assert!(!a.is_subset(b));
        assert!(a.contains(3) && !a.contains(1));
    }

    #[test]
    fn full_and_empty() {
        assert_eq!(ElementSet::full(3).to_vec(), vec![0, 1, 2]);
        assert!(ElementSet::EMPTY.is_empty());
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
    }

    #[test]
    fn subset_walk_is_ascending_and_complete() {
        let s = set(&[0, 2, 5]);
        let subs: Vec<ElementSet> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        for w in subs.windows(2) {
            assert!(w[0].mask() < w[1].mask());
        }
        for sub in &subs {
            assert!(sub.is_subset(s));
        }
    }

    #[test]
    fn all_subsets_count() {
        assert_eq!(all_subsets(4).count(), 16);
        assert_eq!(all_subsets(0).count(), 1);
    }
}
