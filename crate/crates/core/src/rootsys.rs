//! Root systems of the simple complex Lie algebras.
//!
//! Roots are integer coefficient vectors over the simple roots, numbered as in
//! Bourbaki. The full root set is generated from the Cartan matrix alone by
//! closing the simple roots under the simple reflections
//! `s_i(b) = b - <b, a_i^vee> a_i`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::vertex::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    /// Smallest rank accepted for this family.
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::G => 2,
            Family::C => 3,
            Family::D | Family::F => 4,
            Family::E => 6,
        }
    }

    fn rank_constraint(self) -> &'static str {
        match self {
            Family::A => "A needs rank >= 1",
            Family::B => "B needs rank >= 2",
            Family::C => "C needs rank >= 3",
            Family::D => "D needs rank >= 4",
            Family::E => "E needs rank 6, 7 or 8",
            Family::F => "F needs rank 4",
            Family::G => "G needs rank 2",
        }
    }

    fn accepts(self, rank: usize) -> bool {
        match self {
            Family::A | Family::B | Family::C | Family::D => {
                rank >= self.min_rank() && rank <= MAX_VERTICES
            }
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple complex Lie algebra, identified by its Cartan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgebraType {
    family: Family,
    rank: usize,
}

impl AlgebraType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.accepts(rank) {
            let constraint = if rank > MAX_VERTICES {
                "rank must not exceed 64"
            } else {
                family.rank_constraint()
            };
            return Err(Error::InvalidRank {
                family,
                rank,
                constraint,
            });
        }
        Ok(AlgebraType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every algebra of the given family whose rank lies in `1..=max_rank`.
    pub fn all_up_to(family: Family, max_rank: usize) -> Vec<AlgebraType> {
        (1..=max_rank)
            .filter_map(|r| AlgebraType::new(family, r).ok())
            .collect()
    }

    /// Cartan matrix with entries `a[i][j] = <a_i^vee, a_j> = 2(a_i, a_j) / (a_i, a_i)`.
    ///
    /// In this convention a row holds the pairings of one coroot with all
    /// simple roots, so `<b, a_i^vee> = sum_j b_j a[i][j]`.
    pub fn cartan_matrix(self) -> Vec<Vec<i32>> {
        let l = self.rank;
        let mut a = vec![vec![0i32; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        // Edges between 1-based vertices, simply laced.
        let mut link = |i: usize, j: usize| {
            a[i - 1][j - 1] = -1;
            a[j - 1][i - 1] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 1..l {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 1..l - 1 {
                    link(i, i + 1);
                }
                link(l - 2, l);
            }
            Family::E => {
                link(1, 3);
                for i in 3..l {
                    link(i, i + 1);
                }
                link(2, 4);
            }
            Family::F => {
                link(1, 2);
                link(2, 3);
                link(3, 4);
            }
            Family::G => link(1, 2),
        }
        match self.family {
            // a_l short
            Family::B => a[l - 1][l - 2] = -2,
            // a_l long
            Family::C => a[l - 2][l - 1] = -2,
            // a_1, a_2 long; a_3, a_4 short
            Family::F => a[2][1] = -2,
            // a_1 short, a_2 long
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for AlgebraType {
    type Err = Error;

    /// Accepts `E6`, `e6`, `E_6`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::UnknownAlgebra(s.to_string()))?;
        let digits = chars.as_str().trim_start_matches('_');
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::UnknownAlgebra(s.to_string()));
        }
        let rank = digits
            .parse()
            .map_err(|_| Error::UnknownAlgebra(s.to_string()))?;
        AlgebraType::new(family, rank)
    }
}

impl Serialize for AlgebraType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AlgebraType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A root `sum k_i a_i`, stored as its coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn simple(rank: usize, vertex: usize) -> Self {
        let mut v = vec![0; rank];
        v[vertex - 1] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    /// Coefficient of the 1-based simple root `vertex`.
    pub fn coeff(&self, vertex: usize) -> i32 {
        self.0[vertex - 1]
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&k| k >= 0)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|k| -k).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    /// Vertices with a nonzero coefficient.
    pub fn support(&self) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for (i, &k) in self.0.iter().enumerate() {
            if k != 0 {
                s.insert(i + 1);
            }
        }
        s
    }
}

impl fmt::Display for Root {
    /// Writes the root as a sum of simple roots, e.g. `a1+2a2+a3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &k) in self.0.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let sign = if k < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = k.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// The complete root system of a simple complex Lie algebra.
///
/// Immutable once built. Roots are kept sorted by coefficient vector.
#[derive(Debug, Clone)]
pub struct RootSystem {
    algebra: AlgebraType,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    members: HashSet<Root>,
    highest_root: Root,
    marks: Vec<u32>,
    neighbours: Vec<VertexSet>,
}

impl RootSystem {
    pub fn build(algebra: AlgebraType) -> RootSystem {
        let cartan = algebra.cartan_matrix();
        let l = algebra.rank();

        let mut members: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for v in 1..=l {
            let r = Root::simple(l, v);
            members.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(b) = queue.pop_front() {
            for (i, row) in cartan.iter().enumerate() {
                let pairing: i32 = b.0.iter().zip(row).map(|(k, a)| k * a).sum();
                if pairing == 0 {
                    continue;
                }
                let mut image = b.0.clone();
                image[i] -= pairing;
                let image = Root(image);
                if !members.contains(&image) {
                    members.insert(image.clone());
                    queue.push_back(image);
                }
            }
        }

        let mut roots: Vec<Root> = members.iter().cloned().collect();
        roots.sort();

        // The highest root has maximal height; it dominates every root.
        let highest_root = roots
            .iter()
            .max_by_key(|r| r.height())
            .cloned()
            .expect("a root system has roots");
        let marks = highest_root.0.iter().map(|&k| k as u32).collect();

        let neighbours = cartan
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut s = VertexSet::EMPTY;
                for (j, &a) in row.iter().enumerate() {
                    if i != j && a != 0 {
                        s.insert(j + 1);
                    }
                }
                s
            })
            .collect();

        RootSystem {
            algebra,
            cartan,
            roots,
            members,
            highest_root,
            marks,
            neighbours,
        }
    }

    pub fn algebra(&self) -> AlgebraType {
        self.algebra
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// All roots, ascending by coefficient vector.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Membership test for a coefficient vector of length `rank`.
    pub fn is_root(&self, v: &[i32]) -> Result<bool> {
        if v.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok(self.contains(&Root(v.to_vec())))
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.members.contains(r)
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    /// Dynkin marks: the coefficients of the highest root.
    pub fn dynkin_marks(&self) -> &[u32] {
        &self.marks
    }

    /// Vertices joined to `vertex` by an edge of the Dynkin diagram.
    pub fn neighbours(&self, vertex: usize) -> VertexSet {
        self.neighbours[vertex - 1]
    }

    /// Connected components of the Dynkin subgraph induced on `within`.
    pub fn components(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within;
        let mut out = Vec::new();
        while let Some(start) = remaining.iter().next() {
            let mut comp = VertexSet::singleton(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbours(v).intersection(within).iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }
}
