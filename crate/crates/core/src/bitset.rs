//! Fixed-width bitsets over vertex indices.
//!
//! Adjacency rows, solver domains and walk frontiers all use this type so the
//! hot loops reduce to word-wise `and`/`or` over `u64` slices.

use std::fmt;

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut b = BitSet {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        b.trim();
        b
    }

    pub fn from_indices(len: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut b = BitSet::new(len);
        for i in it {
            b.insert(i);
        }
        b
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        first_in(&self.words)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        or_into(&mut self.words, &other.words);
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        and_into(&mut self.words, &other.words);
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        intersects(&self.words, &other.words)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> Ones<'_> {
        ones(&self.words)
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// Slice helpers shared with the solver's flat domain store.

#[inline]
pub(crate) fn and_into(dst: &mut [u64], src: &[u64]) {
    for (a, b) in dst.iter_mut().zip(src) {
        *a &= b;
    }
}

#[inline]
pub(crate) fn or_into(dst: &mut [u64], src: &[u64]) {
    for (a, b) in dst.iter_mut().zip(src) {
        *a |= b;
    }
}

#[inline]
pub(crate) fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

#[inline]
pub(crate) fn first_in(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
}

#[inline]
pub(crate) fn count_in(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn ones(words: &[u64]) -> Ones<'_> {
    Ones {
        words,
        idx: 0,
        cur: words.first().copied().unwrap_or(0),
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_is_trimmed() {
        let b = BitSet::full(70);
        assert_eq!(b.count(), 70);
        assert_eq!(b.iter().last(), Some(69));
    }

    #[test]
    fn set_ops() {
        let mut a = BitSet::from_indices(130, [1, 64, 129]);
        let b = BitSet::from_indices(130, [64, 100]);
        assert!(a.intersects(&b));
        a.intersect_with(&b);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![64]);
        assert!(a.is_subset(&b));
        a.union_with(&b);
        assert_eq!(a.count(), 2);
        a.difference_with(&b);
        assert!(a.is_empty());
        assert_eq!(b.first(), Some(64));
    }
}
