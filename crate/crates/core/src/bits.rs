use std::fmt;

/// A set of vertex ids below 64, stored as a single machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set {0, 1, ..., n-1}.
    pub fn below(n: usize) -> VertexSet {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_slice(vertices: &[usize]) -> VertexSet {
        vertices.iter().fold(VertexSet::EMPTY, |s, &v| s.with(v))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members strictly greater than `v`.
    #[inline]
    pub fn above(self, v: usize) -> VertexSet {
        if v >= 63 {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 & (u64::MAX << (v + 1)))
        }
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Members(u64);

impl Iterator for Members {
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
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl DoubleEndedIterator for Members {
    #[inline]
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = 63 - self.0.leading_zeros() as usize;
        self.0 &= !(1u64 << v);
        Some(v)
    }
}

impl ExactSizeIterator for Members {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_ascend() {
        let s = VertexSet::from_slice(&[5, 0, 63, 17]);
        assert_eq!(s.to_vec(), vec![0, 5, 17, 63]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.above(5).to_vec(), vec![17, 63]);
        assert!(s.above(63).is_empty());
        assert_eq!(s.iter().rev().collect::<Vec<_>>(), vec![63, 17, 5, 0]);
    }

    #[test]
    fn below_edges() {
        assert_eq!(VertexSet::below(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::below(64).len(), 64);
        assert_eq!(VertexSet::below(3).to_vec(), vec![0, 1, 2]);
    }
}
