use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::binom_u64;
use crate::error::{Error, Result};

/// A set of vertices packed into one 64-bit word; bit `i` is vertex `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub fn singleton(x: usize) -> Self {
        VertexSet(1u64 << x)
    }

    #[inline]
    pub fn mask(self) -> u64 {
        self.0
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
    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    pub fn with(self, x: usize) -> Self {
        VertexSet(self.0 | 1u64 << x)
    }

    pub fn without(self, x: usize) -> Self {
        VertexSet(self.0 & !(1u64 << x))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Colexicographic rank among the subsets of the same size.
    pub fn colex_rank(self) -> u64 {
        self.iter()
            .enumerate()
            .map(|(i, c)| binom_u64(c as u64, i as u64 + 1))
            .sum()
    }

    /// Inverse of [`VertexSet::colex_rank`] for subsets of `{0..v-1}` of the given size.
    pub fn colex_unrank(index: u64, size: usize, v: usize) -> Result<Self> {
        let bound = binom_u64(v as u64, size as u64);
        if index >= bound {
            return Err(Error::IndexOutOfRange { index, bound });
        }
        let mut rest = index;
        let mut mask = 0u64;
        let mut top = v;
        for i in (1..=size).rev() {
            // largest c < top with C(c, i) <= rest
            let mut c = top - 1;
            while binom_u64(c as u64, i as u64) > rest {
                c -= 1;
            }
            rest -= binom_u64(c as u64, i as u64);
            mask |= 1u64 << c;
            top = c;
        }
        Ok(VertexSet(mask))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Serialized as the increasing list of its members.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&x) = members.iter().find(|&&x| x >= 64) {
            return Err(serde::de::Error::custom(format!("vertex {x} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        self.iter()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All `k`-subsets of `{0..v-1}` in colexicographic order (Gosper's hack).
pub fn subsets(v: usize, k: usize) -> Subsets {
    let next = if k > v || v > 64 {
        None
    } else {
        Some(low_bits(k))
    };
    Subsets { v, next }
}

#[derive(Clone, Debug)]
pub struct Subsets {
    v: usize,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                if self.v < 64 && nxt >> self.v != 0 {
                    None
                } else {
                    Some(nxt)
                }
            }
        };
        Some(VertexSet(cur))
    }
}
