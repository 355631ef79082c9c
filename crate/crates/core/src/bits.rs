//! Vertex sets as 128-bit masks.

pub type VSet = u128;

#[inline]
pub fn bit(v: usize) -> VSet {
    1u128 << v
}

#[inline]
pub fn contains(s: VSet, v: usize) -> bool {
    s >> v & 1 == 1
}

#[inline]
pub fn len(s: VSet) -> usize {
    s.count_ones() as usize
}

#[inline]
pub fn first(s: VSet) -> Option<usize> {
    if s == 0 {
        None
    } else {
        Some(s.trailing_zeros() as usize)
    }
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full(n: usize) -> VSet {
    if n >= 128 {
        !0
    } else {
        (1u128 << n) - 1
    }
}

/// Ascending iterator over the members of a set.
#[derive(Clone, Copy)]
pub struct Iter(VSet);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = len(self.0);
        (k, Some(k))
    }
}

#[inline]
pub fn iter(s: VSet) -> Iter {
    Iter(s)
}
