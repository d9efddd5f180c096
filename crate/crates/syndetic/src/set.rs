//! Canonical finite sets of element/point ids.
//!
//! A [`FiniteSet`] is a sorted, duplicate-free list of `u64` ids. Which ids
//! are meaningful is the business of the carrier the set lives in (a finite
//! group, a G-space, or a windowed group); set equality is list equality.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FiniteSet {
    members: Vec<u64>,
}

impl FiniteSet {
    pub fn empty() -> Self {
        FiniteSet { members: Vec::new() }
    }

    /// Builds a set from arbitrary ids, sorting and deduplicating.
    pub fn from_ids(mut ids: Vec<u64>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        FiniteSet { members: ids }
    }

    /// Builds from a list already known to be sorted and duplicate-free.
    pub fn from_sorted_unchecked(ids: Vec<u64>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        FiniteSet { members: ids }
    }

    pub fn singleton(id: u64) -> Self {
        FiniteSet { members: vec![id] }
    }

    /// The ids `0..n`, the full universe of a finite carrier of size `n`.
    pub fn range(n: u64) -> Self {
        FiniteSet {
            members: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: u64) -> bool {
        self.members.binary_search(&id).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.members
    }

    pub fn first(&self) -> Option<u64> {
        self.members.first().copied()
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.members, &other.members);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        FiniteSet { members: out }
    }

    pub fn intersection(&self, other: &FiniteSet) -> FiniteSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.members, &other.members);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        FiniteSet { members: out }
    }

    pub fn difference(&self, other: &FiniteSet) -> FiniteSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.members, &other.members);
        while i < a.len() {
            if j == b.len() || a[i] < b[j] {
                out.push(a[i]);
                i += 1;
            } else if a[i] == b[j] {
                i += 1;
                j += 1;
            } else {
                j += 1;
            }
        }
        FiniteSet { members: out }
    }

    pub fn is_subset_of(&self, other: &FiniteSet) -> bool {
        let mut j = 0;
        let b = &other.members;
        for &x in &self.members {
            while j < b.len() && b[j] < x {
                j += 1;
            }
            if j == b.len() || b[j] != x {
                return false;
            }
        }
        true
    }

    pub fn is_disjoint_from(&self, other: &FiniteSet) -> bool {
        self.intersection(other).is_empty()
    }
}

impl FromIterator<u64> for FiniteSet {
    fn from_iter<T: IntoIterator<Item = u64>>(iter: T) -> Self {
        FiniteSet::from_ids(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let s = FiniteSet::from_ids(vec![5, 1, 3, 1, 5]);
        assert_eq!(s.as_slice(), &[1, 3, 5]);
        assert_eq!(s, FiniteSet::from_ids(vec![3, 5, 1]));
    }

    #[test]
    fn algebra() {
        let a = FiniteSet::from_ids(vec![0, 1, 3, 4]);
        let b = FiniteSet::from_ids(vec![1, 2, 4]);
        assert_eq!(a.union(&b).as_slice(), &[0, 1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).as_slice(), &[1, 4]);
        assert_eq!(a.difference(&b).as_slice(), &[0, 3]);
        assert!(FiniteSet::from_ids(vec![1, 4]).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        assert!(FiniteSet::empty().is_subset_of(&b));
        assert!(FiniteSet::from_ids(vec![7]).is_disjoint_from(&a));
    }
}
