use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A set of canonical root indices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet {
    words: Vec<u64>,
}

impl RootSet {
    pub fn new() -> Self {
        RootSet::default()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    /// Returns `true` if `i` was not already present.
    pub fn insert(&mut self, i: usize) -> bool {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let bit = 1u64 << (i % 64);
        let fresh = self.words[w] & bit == 0;
        self.words[w] |= bit;
        fresh
    }

    pub fn remove(&mut self, i: usize) -> bool {
        let Some(word) = self.words.get_mut(i / 64) else {
            return false;
        };
        let bit = 1u64 << (i % 64);
        let present = *word & bit != 0;
        *word &= !bit;
        self.trim();
        present
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| 64 * k + b)
        })
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        let n = self.words.len().max(other.words.len());
        let mut words: Vec<u64> = (0..n)
            .map(|k| self.words.get(k).unwrap_or(&0) | other.words.get(k).unwrap_or(&0))
            .collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        RootSet { words }
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        let mut words: Vec<u64> = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        RootSet { words }
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        let mut words: Vec<u64> = self
            .words
            .iter()
            .enumerate()
            .map(|(k, a)| a & !other.words.get(k).unwrap_or(&0))
            .collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        RootSet { words }
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &RootSet) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for RootSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for RootSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Vec::<usize>::deserialize(d)?.into_iter().collect())
    }
}
