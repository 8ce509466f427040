//! Fixed-width vertex bitsets.
//!
//! A [`VertexSet`] is tied to a host graph order `n` fixed at creation: it
//! always carries `ceil(n/64)` words, so sets from the same host compare,
//! hash, and combine wordwise. Graphs at verification scale (n <= 128) stay
//! inline; the hard cap is [`MAX_VERTICES`].

use smallvec::SmallVec;

/// Hard cap on graph order; multi-word sets cover up to 512 vertices.
pub const MAX_VERTICES: usize = 512;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS).max(1)
}

/// A set of vertex ids `0..n` of a fixed host graph, stored as bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    /// Empty set for a host with `n` vertices.
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet {
            words: smallvec::smallvec![0; words_for(n)],
        }
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    /// Singleton `{v}` for a host with `n` vertices.
    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    pub fn from_iter(n: usize, iter: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for v in iter {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v / WORD_BITS < self.words.len());
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v / WORD_BITS < self.words.len());
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        match self.words.get(v / WORD_BITS) {
            Some(w) => w >> (v % WORD_BITS) & 1 == 1,
            None => false,
        }
    }

    /// Number of elements.
    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        !self.intersects(other)
    }

    /// Ascending iterator over the elements.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Elements as a sorted `Vec`, handy for reports and assertions.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * WORD_BITS + tz);
            }
            self.word += 1;
            self.bits = *self.set.words.get(self.word)?;
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter_roundtrip() {
        let mut s = VertexSet::empty(130);
        for v in [0, 63, 64, 65, 129] {
            s.insert(v);
        }
        assert_eq!(s.to_vec(), vec![0, 63, 64, 65, 129]);
        assert_eq!(s.len(), 5);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_iter(70, [1, 2, 65]);
        let b = VertexSet::from_iter(70, [2, 3, 65]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2, 65]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 65]);
        assert_eq!(a.difference(&b).to_vec(), vec![1]);
        assert!(a.intersects(&b));
        assert!(VertexSet::empty(70).is_subset_of(&a));
        assert_eq!(VertexSet::full(70).len(), 70);
        assert_eq!(a.first(), Some(1));
    }
}
