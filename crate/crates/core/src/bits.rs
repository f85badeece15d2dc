//! Fixed-width bitsets over the element labels `1..=len`.

use std::fmt;

use crate::table::Element;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    len: u32,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(len: u32) -> Self {
        ElementSet {
            len,
            words: vec![0; (len as usize).div_ceil(64)],
        }
    }

    pub fn full(len: u32) -> Self {
        let mut s = Self::empty(len);
        for x in 1..=len {
            s.insert(x);
        }
        s
    }

    /// Capacity: the largest element that can be stored.
    pub fn universe(&self) -> u32 {
        self.len
    }

    #[inline]
    fn slot(x: Element) -> (usize, u64) {
        let i = x as usize - 1;
        (i / 64, 1 << (i % 64))
    }

    pub fn insert(&mut self, x: Element) {
        debug_assert!(x >= 1 && x <= self.len);
        let (w, b) = Self::slot(x);
        self.words[w] |= b;
    }

    pub fn remove(&mut self, x: Element) {
        let (w, b) = Self::slot(x);
        self.words[w] &= !b;
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        if x == 0 || x > self.len {
            return false;
        }
        let (w, b) = Self::slot(x);
        self.words[w] & b != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros();
                rest &= rest - 1;
                Some((w * 64) as u32 + bit + 1)
            })
        })
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Element> for ElementSet {
    /// The universe is the largest element seen.
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let items: Vec<Element> = iter.into_iter().collect();
        let mut s = Self::empty(items.iter().copied().max().unwrap_or(0));
        for x in items {
            s.insert(x);
        }
        s
    }
}
