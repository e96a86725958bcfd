//! Small index sets backed by a 128-bit mask.

use std::fmt;

/// Hard cap on ground-set elements (and cells); the mask is a `u128`.
pub const MAX_SET_BITS: usize = 128;

/// A subset of ground-set elements, identified by index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(u128);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_SET_BITS);
        ElemSet(1u128 << i)
    }

    pub fn from_indices(ix: &[usize]) -> Self {
        let mut s = ElemSet::EMPTY;
        for &i in ix {
            s = s.with(i);
        }
        s
    }

    pub fn with(self, i: usize) -> Self {
        assert!(i < MAX_SET_BITS);
        ElemSet(self.0 | (1u128 << i))
    }

    pub fn union(self, other: ElemSet) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_SET_BITS && self.0 & (1u128 << i) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    #[cfg(test)]
    pub(crate) fn raw(self) -> u128 {
        self.0
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
