//! Satake diagrams of real forms.
//!
//! A diagram colours some vertices of the Dynkin diagram black (compact simple
//! roots) and pairs some white vertices by arrows (sigma-equivalence). The
//! action of sigma on the black part of a white root is not represented; every
//! predicate here depends only on the colouring and the arrows.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dsl;
use crate::error::{Error, Result};
use crate::grading::{Gradation, LabelVector};
use crate::rootsys::AlgebraType;
use crate::vertex::VertexSet;

/// Why a label vector does not induce a gradation of the real form.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RealTypeViolation {
    #[error("black vertex {vertex} has label {label}")]
    BlackVertex { vertex: usize, label: u32 },
    #[error("arrow ({}, {}) joins labels {} and {}", pair.0, pair.1, labels.0, labels.1)]
    ArrowPair {
        pair: (usize, usize),
        labels: (u32, u32),
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakeDiagram {
    algebra: AlgebraType,
    black: VertexSet,
    arrows: Vec<(usize, usize)>,
    name: Option<String>,
}

impl SatakeDiagram {
    /// Validates the structural invariants: arrows join distinct white
    /// vertices and each vertex carries at most one arrow.
    pub fn new(
        algebra: AlgebraType,
        black: VertexSet,
        arrows: impl IntoIterator<Item = (usize, usize)>,
        name: Option<String>,
    ) -> Result<Self> {
        let rank = algebra.rank();
        if let Some(v) = black.iter().find(|&v| v > rank) {
            return Err(Error::VertexOutOfRange { vertex: v, rank });
        }
        let mut used = VertexSet::EMPTY;
        let mut normalized = Vec::new();
        for (a, b) in arrows {
            for v in [a, b] {
                if v == 0 || v > rank {
                    return Err(Error::VertexOutOfRange { vertex: v, rank });
                }
                if black.contains(v) {
                    return Err(Error::InvalidDiagram(format!(
                        "arrow ({a},{b}) touches black vertex {v}"
                    )));
                }
            }
            if a == b {
                return Err(Error::InvalidDiagram(format!("arrow ({a},{b}) is a loop")));
            }
            for v in [a, b] {
                if used.contains(v) {
                    return Err(Error::InvalidDiagram(format!(
                        "vertex {v} carries more than one arrow"
                    )));
                }
                used.insert(v);
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        Ok(SatakeDiagram {
            algebra,
            black,
            arrows: normalized,
            name,
        })
    }

    /// The split real form: all vertices white, no arrows.
    pub fn split(algebra: AlgebraType) -> Self {
        SatakeDiagram {
            algebra,
            black: VertexSet::EMPTY,
            arrows: Vec::new(),
            name: None,
        }
    }

    pub fn algebra(&self) -> AlgebraType {
        self.algebra
    }

    pub fn black(&self) -> VertexSet {
        self.black
    }

    pub fn white(&self) -> VertexSet {
        VertexSet::full(self.algebra.rank()).difference(self.black)
    }

    /// Arrow pairs `(a, b)` with `a < b`, sorted.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn is_split(&self) -> bool {
        self.black.is_empty() && self.arrows.is_empty()
    }

    pub fn partner(&self, vertex: usize) -> Option<usize> {
        self.arrows.iter().find_map(|&(a, b)| {
            if a == vertex {
                Some(b)
            } else if b == vertex {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Number of sigma-equivalence classes of white vertices.
    pub fn real_rank(&self) -> usize {
        self.white().len() - self.arrows.len()
    }

    /// Checks that black vertices carry label 0 and arrow-joined vertices
    /// carry equal labels. The first violation found is returned, black
    /// vertices before arrows.
    pub fn check_real_type(&self, labels: &LabelVector) -> Result<(), Error> {
        if labels.len() != self.algebra.rank() {
            return Err(Error::LengthMismatch {
                expected: self.algebra.rank(),
                got: labels.len(),
            });
        }
        if let Some(v) = self.black.iter().find(|&v| labels.label(v) != 0) {
            return Err(RealTypeViolation::BlackVertex {
                vertex: v,
                label: labels.label(v),
            }
            .into());
        }
        for &(a, b) in &self.arrows {
            let (la, lb) = (labels.label(a), labels.label(b));
            if la != lb {
                return Err(RealTypeViolation::ArrowPair {
                    pair: (a, b),
                    labels: (la, lb),
                }
                .into());
            }
        }
        Ok(())
    }

    /// Splits `pi1` into arrow classes: a singleton per unpaired vertex and
    /// one two-element set per arrow pair, in ascending order of their least
    /// vertex. Arrow pairs that leave `pi1` are cut to their part inside it.
    pub fn atoms(&self, pi1: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut seen = VertexSet::EMPTY;
        for v in pi1.iter() {
            if seen.contains(v) {
                continue;
            }
            let mut atom = VertexSet::singleton(v);
            if let Some(w) = self.partner(v) {
                if pi1.contains(w) {
                    atom.insert(w);
                }
            }
            seen = seen.union(atom);
            out.push(atom);
        }
        out
    }

    /// Irreducible real submodules of `(g^sigma)^{-1}`: unpaired label-one
    /// vertices and arrow pairs with both labels one.
    pub fn real_components(&self, g: &Gradation<'_>) -> Result<RealComponentSet> {
        if g.root_system().algebra() != self.algebra {
            return Err(Error::InvalidDiagram(format!(
                "diagram is for {}, gradation for {}",
                self.algebra,
                g.root_system().algebra()
            )));
        }
        self.check_real_type(g.labels())?;
        let pi1 = g.pi1();
        if !pi1.is_empty() && !g.is_fundamental() {
            return Err(Error::NotFundamental(g.labels().to_string()));
        }
        let mut singles = VertexSet::EMPTY;
        let mut pairs = Vec::new();
        for atom in self.atoms(pi1) {
            let v = atom.to_vec();
            match v.as_slice() {
                [a] => singles.insert(*a),
                [a, b] => pairs.push((*a, *b)),
                _ => unreachable!("arrow classes have at most two vertices"),
            }
        }
        Ok(RealComponentSet { singles, pairs })
    }
}

impl fmt::Display for SatakeDiagram {
    /// Renders the `satake` statement of the input language.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "satake black {} arrows {{", self.black)?;
        for (i, (a, b)) in self.arrows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealComponentSet {
    pub singles: VertexSet,
    pub pairs: Vec<(usize, usize)>,
}

impl RealComponentSet {
    pub fn count(&self) -> usize {
        self.singles.len() + self.pairs.len()
    }
}

/// Named Satake diagrams, read from a catalog file in the input language.
#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<SatakeDiagram>,
}

pub const BUNDLED_CATALOG: &str = include_str!("../assets/satake_catalog.txt");

impl Catalog {
    pub fn bundled() -> Catalog {
        Catalog::parse(BUNDLED_CATALOG).expect("bundled Satake catalog is valid")
    }

    pub fn parse(text: &str) -> Result<Catalog> {
        let entries = dsl::parse_catalog(text)?;
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[SatakeDiagram] {
        &self.entries
    }

    pub fn for_algebra(&self, algebra: AlgebraType) -> impl Iterator<Item = &SatakeDiagram> {
        self.entries.iter().filter(move |d| d.algebra == algebra)
    }

    pub fn get(&self, name: &str) -> Option<&SatakeDiagram> {
        let key = normalize_name(name);
        self.entries
            .iter()
            .find(|d| d.name.as_deref().map(normalize_name) == Some(key.clone()))
    }

    /// Looks a diagram up by name, optionally requiring a particular algebra.
    pub fn lookup(&self, name: &str, algebra: Option<AlgebraType>) -> Result<&SatakeDiagram> {
        let found = self
            .get(name)
            .filter(|d| algebra.is_none_or(|a| a == d.algebra));
        found.ok_or_else(|| {
            let available: Vec<&str> = self
                .entries
                .iter()
                .filter(|d| algebra.is_none_or(|a| a == d.algebra))
                .filter_map(|d| d.name())
                .collect();
            Error::UnknownRealForm {
                name: name.to_string(),
                algebra: algebra.map_or_else(|| "any algebra".to_string(), |a| a.to_string()),
                available: available.join(", "),
            }
        })
    }
}

/// Case-insensitive, with runs of spaces collapsed and spaces next to
/// brackets and commas dropped: `SU(2, 2)` matches `su(2,2)`.
fn normalize_name(name: &str) -> String {
    let mut s = name
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_ascii_lowercase();
    for (from, to) in [
        (", ", ","),
        (" ,", ","),
        ("( ", "("),
        (" )", ")"),
        (" (", "("),
    ] {
        s = s.replace(from, to);
    }
    s
}
