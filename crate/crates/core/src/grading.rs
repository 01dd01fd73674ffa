//! Gradations of a simple Lie algebra defined by label vectors.
//!
//! A label vector `d` assigns a non-negative integer to each simple root and
//! gives every root `sum k_i a_i` the degree `sum k_i d_i`. The grading spaces
//! are represented by their root sets; the Cartan subalgebra sits in degree 0
//! implicitly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};
use crate::vertex::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LabelVector(Vec<u32>);

impl LabelVector {
    pub fn new(labels: Vec<u32>) -> Self {
        LabelVector(labels)
    }

    /// The 0/1 vector with label one exactly on `pi1`.
    pub fn from_pi1(rank: usize, pi1: VertexSet) -> Self {
        LabelVector((1..=rank).map(|v| u32::from(pi1.contains(v))).collect())
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Label of the 1-based vertex.
    pub fn label(&self, vertex: usize) -> u32 {
        self.0[vertex - 1]
    }

    /// Vertices with label one.
    pub fn pi1(&self) -> VertexSet {
        self.vertices_where(|d| d == 1)
    }

    /// Vertices with a nonzero label.
    pub fn support(&self) -> VertexSet {
        self.vertices_where(|d| d != 0)
    }

    pub fn is_zero_one(&self) -> bool {
        self.0.iter().all(|&d| d <= 1)
    }

    fn vertices_where(&self, pred: impl Fn(u32) -> bool) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for (i, &d) in self.0.iter().enumerate() {
            if pred(d) {
                s.insert(i + 1);
            }
        }
        s
    }
}

impl fmt::Display for LabelVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradationFlags {
    pub fundamental: bool,
    pub effective: bool,
    pub nondegenerate: bool,
}

/// The irreducible `g^0`-submodule of `g^1` with lowest weight a simple root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleComponent {
    pub vertex: usize,
    pub lowest_weight: Root,
    pub roots: Vec<Root>,
}

impl IrreducibleComponent {
    pub fn dimension(&self) -> usize {
        self.roots.len()
    }
}

/// A gradation of the algebra of `rs`, with the degree of every root cached.
#[derive(Debug, Clone)]
pub struct Gradation<'a> {
    rs: &'a RootSystem,
    labels: LabelVector,
    degrees: Vec<i32>,
    depth: u32,
}

impl<'a> Gradation<'a> {
    pub fn new(rs: &'a RootSystem, labels: LabelVector) -> Result<Self> {
        if labels.len() != rs.rank() {
            return Err(Error::LengthMismatch {
                expected: rs.rank(),
                got: labels.len(),
            });
        }
        let degrees: Vec<i32> = rs.roots().iter().map(|r| degree_of(&labels, r)).collect();
        let depth = degrees.iter().map(|d| d.unsigned_abs()).max().unwrap_or(0);
        Ok(Gradation {
            rs,
            labels,
            degrees,
            depth,
        })
    }

    /// The fundamental gradation with label one on `pi1` and zero elsewhere.
    pub fn from_pi1(rs: &'a RootSystem, pi1: VertexSet) -> Result<Self> {
        if !pi1.is_subset(VertexSet::full(rs.rank())) {
            let vertex = pi1.iter().find(|&v| v > rs.rank()).unwrap_or(0);
            return Err(Error::VertexOutOfRange {
                vertex,
                rank: rs.rank(),
            });
        }
        Gradation::new(rs, LabelVector::from_pi1(rs.rank(), pi1))
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn labels(&self) -> &LabelVector {
        &self.labels
    }

    pub fn degree(&self, root: &Root) -> i32 {
        degree_of(&self.labels, root)
    }

    /// Largest `|d(a)|` over all roots.
    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Roots paired with their degrees, in root-system order.
    pub fn graded_roots(&self) -> impl Iterator<Item = (&'a Root, i32)> + '_ {
        self.rs.roots().iter().zip(self.degrees.iter().copied())
    }

    /// The root set `R^i` of the grading space `g^i`.
    pub fn level(&self, i: i32) -> impl Iterator<Item = &'a Root> + '_ {
        self.graded_roots()
            .filter(move |&(_, d)| d == i)
            .map(|(r, _)| r)
    }

    pub fn level_sets(&self) -> BTreeMap<i32, Vec<&'a Root>> {
        let mut out: BTreeMap<i32, Vec<&Root>> = BTreeMap::new();
        for (r, d) in self.graded_roots() {
            out.entry(d).or_default().push(r);
        }
        out
    }

    /// Simple roots of degree one.
    pub fn pi1(&self) -> VertexSet {
        self.labels.pi1()
    }

    /// Simple roots of degree zero.
    pub fn pi0(&self) -> VertexSet {
        VertexSet::full(self.rs.rank()).difference(self.labels.support())
    }

    /// True when the negative part is generated by `g^{-1}`: every root of
    /// degree `-j < -1` is a root of degree `-1` plus a root of degree `-j+1`.
    pub fn is_fundamental(&self) -> bool {
        let minus_one: Vec<&Root> = self.level(-1).collect();
        if minus_one.is_empty() {
            return false;
        }
        self.graded_roots().filter(|&(_, d)| d < -1).all(|(r, d)| {
            minus_one.iter().any(|b| {
                let rest = r.sub(b);
                self.rs.contains(&rest) && self.degree(&rest) == d + 1
            })
        })
    }

    /// For a simple algebra `g^{>=0}` contains a nonzero ideal exactly when
    /// the gradation is trivial.
    pub fn is_effective(&self) -> bool {
        !self.labels.support().is_empty()
    }

    /// Root-level test on `R^{-1}`: every root of degree -1 brackets
    /// nontrivially with some other root of degree -1.
    pub fn minus_one_pairs_nontrivially(&self) -> bool {
        let minus_one: Vec<&Root> = self.level(-1).collect();
        !minus_one.is_empty()
            && minus_one.iter().all(|b| {
                minus_one.iter().any(|c| {
                    let s = b.add(c);
                    s.is_zero() || self.rs.contains(&s)
                })
            })
    }

    pub fn flags(&self) -> GradationFlags {
        let fundamental = self.is_fundamental();
        let nondegenerate = fundamental && (self.depth >= 2 || self.minus_one_pairs_nontrivially());
        GradationFlags {
            fundamental,
            effective: self.is_effective(),
            nondegenerate,
        }
    }

    /// Decomposes `g^1` into irreducible `g^0`-submodules, one per label-one
    /// simple root `c`. The component of `c` is the orbit of `c` under
    /// repeated addition of degree-zero roots, staying inside the root set.
    pub fn irreducible_components(&self) -> Result<Vec<IrreducibleComponent>> {
        if !self.labels.is_zero_one() || !self.is_fundamental() {
            return Err(Error::NotFundamental(self.labels.to_string()));
        }
        let zero_level: Vec<&Root> = self.level(0).collect();
        let rank = self.rs.rank();
        Ok(self
            .pi1()
            .iter()
            .map(|v| {
                let lowest = Root::simple(rank, v);
                let mut seen: BTreeSet<Root> = BTreeSet::new();
                seen.insert(lowest.clone());
                let mut stack = vec![lowest.clone()];
                while let Some(b) = stack.pop() {
                    for phi in &zero_level {
                        let next = b.add(phi);
                        if self.rs.contains(&next) && !seen.contains(&next) {
                            seen.insert(next.clone());
                            stack.push(next);
                        }
                    }
                }
                IrreducibleComponent {
                    vertex: v,
                    lowest_weight: lowest,
                    roots: seen.into_iter().collect(),
                }
            })
            .collect())
    }
}

fn degree_of(labels: &LabelVector, root: &Root) -> i32 {
    root.coeffs()
        .iter()
        .zip(labels.labels())
        .map(|(&k, &d)| k * d as i32)
        .sum()
}

/// Depth of the fundamental gradation of `pi1` as the sum of its Dynkin marks.
pub fn depth_by_marks(rs: &RootSystem, pi1: VertexSet) -> Result<u32> {
    if pi1.is_empty() {
        return Err(Error::EmptyPi1);
    }
    if let Some(v) = pi1.iter().find(|&v| v > rs.rank()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            rank: rs.rank(),
        });
    }
    let marks = rs.dynkin_marks();
    Ok(pi1.iter().map(|v| marks[v - 1]).sum())
}
