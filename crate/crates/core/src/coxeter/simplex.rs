use std::fmt;

/// A subset of the vertex set, vertex `i` present iff bit `i` is set.
///
/// Internal vertex indices are always `0..n`; families that number their
/// vertices from 1 apply a label offset only when printing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Simplex(pub u64);

impl Simplex {
    pub const EMPTY: Simplex = Simplex(0);

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        Simplex(vs.into_iter().fold(0, |acc, v| acc | (1u64 << v)))
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Simplex(u64::MAX)
        } else {
            Simplex((1u64 << n) - 1)
        }
    }

    /// Vertices `lo..hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        if hi <= lo {
            return Simplex::EMPTY;
        }
        Simplex(Simplex::full(hi).0 & !Simplex::full(lo).0)
    }

    /// Parses a bitstring with the lowest vertex leftmost, e.g. `"0101"`.
    pub fn from_bitstring(s: &str) -> Option<Self> {
        let mut bits = 0u64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '1' => bits |= 1 << i,
                '0' => {}
                _ => return None,
            }
        }
        Some(Simplex(bits))
    }

    pub fn bitstring(self, width: usize) -> String {
        (0..width).map(|i| if self.contains(i) { '1' } else { '0' }).collect()
    }

    /// Cardinality; the chain degree of the simplex.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        Simplex(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        Simplex(self.0 & !(1 << v))
    }

    pub fn toggle(self, v: usize) -> Self {
        Simplex(self.0 ^ 1 << v)
    }

    pub fn is_subset(self, other: Simplex) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Simplex) -> Self {
        Simplex(self.0 | other.0)
    }

    pub fn intersection(self, other: Simplex) -> Self {
        Simplex(self.0 & other.0)
    }

    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    /// Codimension-one faces `(removed vertex, face)`.
    pub fn facets(self) -> impl Iterator<Item = (usize, Simplex)> {
        self.vertices().map(move |v| (v, self.without(v)))
    }

    /// Number of vertices of `self` strictly below `v`.
    pub fn count_below(self, v: usize) -> usize {
        (self.0 & ((1u64 << v) - 1)).count_ones() as usize
    }

    /// Smallest vertex in `0..n` not in the simplex, if any.
    pub fn first_missing(self, n: usize) -> Option<usize> {
        let v = (!self.0).trailing_zeros() as usize;
        (v < n).then_some(v)
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitstring_round_trip() {
        let s = Simplex::from_vertices([1, 3]);
        assert_eq!(s.bitstring(4), "0101");
        assert_eq!(Simplex::from_bitstring("0101"), Some(s));
        assert_eq!(Simplex::from_bitstring("01x"), None);
    }

    #[test]
    fn ranges_and_counts() {
        assert_eq!(Simplex::range(2, 5), Simplex::from_vertices([2, 3, 4]));
        assert_eq!(Simplex::range(3, 3), Simplex::EMPTY);
        let s = Simplex::from_vertices([0, 2, 5]);
        assert_eq!(s.count_below(5), 2);
        assert_eq!(s.first_missing(6), Some(1));
        assert_eq!(Simplex::full(4).first_missing(4), None);
        assert_eq!(s.facets().count(), 3);
    }
}
