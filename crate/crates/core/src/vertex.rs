//! Sets of Dynkin-diagram vertices.
//!
//! Vertices are numbered from 1 as in Bourbaki. A [`VertexSet`] is a bitmask,
//! so a diagram can have at most [`MAX_VERTICES`] vertices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All vertices `1..=rank`.
    pub fn full(rank: usize) -> Self {
        debug_assert!(rank <= MAX_VERTICES);
        if rank == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << rank) - 1)
        }
    }

    pub fn singleton(vertex: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&vertex));
        VertexSet(1u64 << (vertex - 1))
    }

    /// Builds a set from 1-based indices, checking each against `rank`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(rank: usize, indices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in indices {
            if v == 0 || v > rank {
                return Err(Error::VertexOutOfRange { vertex: v, rank });
            }
            bits |= 1u64 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn contains(self, vertex: usize) -> bool {
        (1..=MAX_VERTICES).contains(&vertex) && self.0 & (1u64 << (vertex - 1)) != 0
    }

    pub fn insert(&mut self, vertex: usize) {
        self.0 |= 1u64 << (vertex - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
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

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Ascending 1-based indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(tz + 1)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        // Carry-rippler enumeration of the submasks, ascending as integers.
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(VertexSet(cur))
        })
    }
}

/// Sets are ordered by size first, then lexicographically by their sorted
/// indices, which is the order used by printed classification tables.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(deserializer)?;
        VertexSet::from_indices(MAX_VERTICES, indices).map_err(serde::de::Error::custom)
    }
}
