//! Admissibility, Abelian parts, alternate decompositions and para-CR verdicts.
//!
//! A fundamental gradation is given by the set `pi1` of label-one vertices.
//! A split `pi1 = plus ∪ minus` defines a para-CR structure exactly when both
//! `g^{-1}_+` and `g^{-1}_-` are commutative. Commutativity of a part is read
//! off the root system: no root may have its `pi1`-coefficients summing to 2
//! and concentrated on the part.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{Gradation, GradationFlags, LabelVector};
use crate::rootsys::{AlgebraType, Root, RootSystem};
use crate::satake::{RealComponentSet, SatakeDiagram};
use crate::vertex::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Admissibility {
    Admissible,
    /// Fewer than two label-one vertices.
    TooSmall {
        size: usize,
    },
    /// A root `2a + sum k_i b_i` with `a` in `pi1` and every `b_i` outside it.
    DoubledRoot {
        vertex: usize,
        witness: Root,
    },
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }

    pub fn witness(&self) -> Option<&Root> {
        match self {
            Admissibility::DoubledRoot { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum AbelianVerdict {
    Abelian,
    NotAbelian { witness: Root },
}

impl AbelianVerdict {
    pub fn is_abelian(&self) -> bool {
        matches!(self, AbelianVerdict::Abelian)
    }

    pub fn witness(&self) -> Option<&Root> {
        match self {
            AbelianVerdict::NotAbelian { witness } => Some(witness),
            AbelianVerdict::Abelian => None,
        }
    }
}

/// A split of `pi1` into two nonempty disjoint parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Pi1Decomposition {
    plus: VertexSet,
    minus: VertexSet,
}

impl Pi1Decomposition {
    pub fn new(plus: VertexSet, minus: VertexSet) -> Result<Self> {
        if plus.is_empty() || minus.is_empty() {
            return Err(Error::InvalidDecomposition(format!(
                "both parts must be nonempty (plus {plus}, minus {minus})"
            )));
        }
        if !plus.is_disjoint(minus) {
            return Err(Error::InvalidDecomposition(format!(
                "parts overlap in {}",
                plus.intersection(minus)
            )));
        }
        Ok(Pi1Decomposition { plus, minus })
    }

    pub fn plus(&self) -> VertexSet {
        self.plus
    }

    pub fn minus(&self) -> VertexSet {
        self.minus
    }

    pub fn pi1(&self) -> VertexSet {
        self.plus.union(self.minus)
    }

    pub fn swapped(&self) -> Self {
        Pi1Decomposition {
            plus: self.minus,
            minus: self.plus,
        }
    }
}

fn require_pi1_gradation(g: &Gradation<'_>, pi1: VertexSet) -> Result<()> {
    let rank = g.root_system().rank();
    if let Some(v) = pi1.iter().find(|&v| v > rank) {
        return Err(Error::VertexOutOfRange { vertex: v, rank });
    }
    let expected = LabelVector::from_pi1(rank, pi1);
    if g.labels() != &expected {
        return Err(Error::GradationMismatch {
            expected: expected.to_string(),
            got: g.labels().to_string(),
        });
    }
    Ok(())
}

/// Scans the roots for `2a + sum k_i b_i` with `a` in `pi1` and the `b_i`
/// outside `pi1`. The witness is the least such root.
pub fn check_admissible(g: &Gradation<'_>, pi1: VertexSet) -> Result<Admissibility> {
    require_pi1_gradation(g, pi1)?;
    if pi1.len() < 2 {
        return Ok(Admissibility::TooSmall { size: pi1.len() });
    }
    for root in g.root_system().roots() {
        for a in pi1.iter() {
            if root.coeff(a) == 2 && pi1.iter().all(|b| b == a || root.coeff(b) == 0) {
                return Ok(Admissibility::DoubledRoot {
                    vertex: a,
                    witness: root.clone(),
                });
            }
        }
    }
    Ok(Admissibility::Admissible)
}

/// Decides whether `sum_{c in part} g(R(c))` is commutative: it is not
/// exactly when some root has `pi1`-coefficients summing to 2 and vanishing
/// outside `part`. The witness is the least such root.
pub fn check_abelian_part(g: &Gradation<'_>, part: VertexSet) -> Result<AbelianVerdict> {
    let pi1 = g.pi1();
    if !part.is_subset(pi1) {
        return Err(Error::InvalidDecomposition(format!(
            "part {part} is not contained in pi1 {pi1}"
        )));
    }
    let outside = pi1.difference(part);
    let hit = g.root_system().roots().iter().find(|root| {
        outside.iter().all(|b| root.coeff(b) == 0)
            && part.iter().map(|a| root.coeff(a)).sum::<i32>() == 2
    });
    Ok(match hit {
        Some(root) => AbelianVerdict::NotAbelian {
            witness: root.clone(),
        },
        None => AbelianVerdict::Abelian,
    })
}

/// The two conditions defining an alternate decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alternation {
    /// Arrow-equivalent vertices lie in the same part.
    pub respects_arrows: bool,
    /// Deleting either part leaves components with at most one vertex of the
    /// other part.
    pub alternating: bool,
}

impl Alternation {
    pub fn holds(&self) -> bool {
        self.respects_arrows && self.alternating
    }
}

pub fn alternation(
    rs: &RootSystem,
    diagram: Option<&SatakeDiagram>,
    dec: &Pi1Decomposition,
) -> Alternation {
    let respects_arrows = diagram.is_none_or(|sd| {
        sd.arrows().iter().all(|&(a, b)| {
            dec.plus().contains(a) == dec.plus().contains(b)
                && dec.minus().contains(a) == dec.minus().contains(b)
        })
    });
    let full = VertexSet::full(rs.rank());
    let separates = |deleted: VertexSet, counted: VertexSet| {
        rs.components(full.difference(deleted))
            .iter()
            .all(|c| c.intersection(counted).len() <= 1)
    };
    let alternating = separates(dec.plus(), dec.minus()) && separates(dec.minus(), dec.plus());
    Alternation {
        respects_arrows,
        alternating,
    }
}

pub fn is_alternate(
    rs: &RootSystem,
    diagram: Option<&SatakeDiagram>,
    dec: &Pi1Decomposition,
) -> bool {
    alternation(rs, diagram, dec).holds()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub plus: VertexSet,
    pub minus: VertexSet,
    pub alternation: Alternation,
    pub plus_abelian: AbelianVerdict,
    pub minus_abelian: AbelianVerdict,
    /// `pi1` admissible, both parts commutative and the split compatible
    /// with the arrows.
    pub paracr: bool,
}

impl DecompositionReport {
    pub fn decomposition(&self) -> Pi1Decomposition {
        Pi1Decomposition {
            plus: self.plus,
            minus: self.minus,
        }
    }

    pub fn alternate(&self) -> bool {
        self.alternation.holds()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealFormInfo {
    pub name: Option<String>,
    pub black: VertexSet,
    pub arrows: Vec<(usize, usize)>,
}

impl From<&SatakeDiagram> for RealFormInfo {
    fn from(sd: &SatakeDiagram) -> Self {
        RealFormInfo {
            name: sd.name().map(str::to_string),
            black: sd.black(),
            arrows: sd.arrows().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentInfo {
    pub vertex: usize,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub admissible: bool,
    /// Number of arrow-respecting splits examined (unordered).
    pub splits_checked: usize,
    pub alternate_exists: bool,
    pub paracr_feasible: bool,
    /// First split, in enumeration order, that gives a para-CR structure.
    pub paracr_witness: Option<Pi1Decomposition>,
    /// On every examined arrow-respecting split, "admissible and alternate"
    /// agreed with "both parts commutative".
    pub alternate_criterion_agrees: bool,
}

/// Everything known about one choice of algebra, real form and `pi1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub algebra: AlgebraType,
    pub real_form: Option<RealFormInfo>,
    pub pi1: VertexSet,
    pub labels: LabelVector,
    pub flags: GradationFlags,
    pub admissibility: Admissibility,
    pub depth: u32,
    pub components: Vec<ComponentInfo>,
    pub real_components: Option<RealComponentSet>,
    pub decompositions: Vec<DecompositionReport>,
    pub summary: Summary,
}

impl ClassificationReport {
    /// Number of irreducible submodules of `g^{-1}`, over the real form when
    /// one is attached.
    pub fn component_count(&self) -> usize {
        self.real_components
            .as_ref()
            .map_or(self.components.len(), RealComponentSet::count)
    }
}

/// Which decompositions a report should list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Splits {
    /// Only the summary; every split is still examined for it.
    SummaryOnly,
    Given(Pi1Decomposition),
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub max_rank: usize,
    pub all_decompositions: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            max_rank: 8,
            all_decompositions: false,
        }
    }
}

/// Classification of label-one sets for one algebra and optional real form.
#[derive(Debug, Clone, Copy)]
pub struct Classifier<'a> {
    rs: &'a RootSystem,
    diagram: Option<&'a SatakeDiagram>,
}

impl<'a> Classifier<'a> {
    pub fn new(rs: &'a RootSystem, diagram: Option<&'a SatakeDiagram>) -> Result<Self> {
        if let Some(sd) = diagram {
            if sd.algebra() != rs.algebra() {
                return Err(Error::InvalidDiagram(format!(
                    "diagram is for {}, root system for {}",
                    sd.algebra(),
                    rs.algebra()
                )));
            }
        }
        Ok(Classifier { rs, diagram })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn diagram(&self) -> Option<&'a SatakeDiagram> {
        self.diagram
    }

    /// Unordered arrow-respecting splits of `pi1`, the first arrow class
    /// always in the plus part.
    pub fn splits(&self, pi1: VertexSet) -> Vec<Pi1Decomposition> {
        let atoms = match self.diagram {
            Some(sd) => sd.atoms(pi1),
            None => pi1.iter().map(VertexSet::singleton).collect(),
        };
        if atoms.len() < 2 {
            return Vec::new();
        }
        let rest = atoms.len() - 1;
        (0..(1u64 << rest) - 1)
            .map(|mask| {
                let mut plus = atoms[0];
                for (i, atom) in atoms[1..].iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        plus = plus.union(*atom);
                    }
                }
                Pi1Decomposition {
                    plus,
                    minus: pi1.difference(plus),
                }
            })
            .collect()
    }

    fn decomposition_report(
        &self,
        g: &Gradation<'_>,
        admissible: bool,
        dec: Pi1Decomposition,
    ) -> Result<DecompositionReport> {
        let alternation = alternation(self.rs, self.diagram, &dec);
        let plus_abelian = check_abelian_part(g, dec.plus())?;
        let minus_abelian = check_abelian_part(g, dec.minus())?;
        let paracr = admissible
            && alternation.respects_arrows
            && plus_abelian.is_abelian()
            && minus_abelian.is_abelian();
        Ok(DecompositionReport {
            plus: dec.plus(),
            minus: dec.minus(),
            alternation,
            plus_abelian,
            minus_abelian,
            paracr,
        })
    }

    pub fn classify(&self, pi1: VertexSet, splits: Splits) -> Result<ClassificationReport> {
        let rank = self.rs.rank();
        if pi1.is_empty() {
            return Err(Error::EmptyPi1);
        }
        let g = Gradation::from_pi1(self.rs, pi1)?;
        if let Some(sd) = self.diagram {
            sd.check_real_type(g.labels())?;
        }
        if let Splits::Given(dec) = splits {
            if dec.pi1() != pi1 {
                return Err(Error::InvalidDecomposition(format!(
                    "parts {} and {} do not cover pi1 {pi1}",
                    dec.plus(),
                    dec.minus()
                )));
            }
        }

        let admissibility = check_admissible(&g, pi1)?;
        let admissible = admissibility.is_admissible();
        let components = g
            .irreducible_components()?
            .into_iter()
            .map(|c| ComponentInfo {
                vertex: c.vertex,
                dimension: c.dimension(),
            })
            .collect();
        let real_components = self.diagram.map(|sd| sd.real_components(&g)).transpose()?;

        let mut examined = Vec::new();
        for dec in self.splits(pi1) {
            examined.push(self.decomposition_report(&g, admissible, dec)?);
        }
        let agrees = |d: &DecompositionReport| {
            !d.alternation.respects_arrows
                || (admissible && d.alternate())
                    == (d.plus_abelian.is_abelian() && d.minus_abelian.is_abelian())
        };
        let paracr_witness = examined
            .iter()
            .find(|d| d.paracr)
            .map(DecompositionReport::decomposition);
        let mut summary = Summary {
            admissible,
            splits_checked: examined.len(),
            alternate_exists: examined.iter().any(DecompositionReport::alternate),
            paracr_feasible: paracr_witness.is_some(),
            paracr_witness,
            alternate_criterion_agrees: examined.iter().all(agrees),
        };

        let decompositions = match splits {
            Splits::SummaryOnly => Vec::new(),
            Splits::All => examined,
            Splits::Given(dec) => {
                let report = self.decomposition_report(&g, admissible, dec)?;
                summary.alternate_criterion_agrees &= agrees(&report);
                vec![report]
            }
        };

        Ok(ClassificationReport {
            algebra: self.rs.algebra(),
            real_form: self.diagram.map(RealFormInfo::from),
            pi1,
            labels: LabelVector::from_pi1(rank, pi1),
            flags: g.flags(),
            admissibility,
            depth: g.depth(),
            components,
            real_components,
            decompositions,
            summary,
        })
    }

    /// Label-one sets considered by [`Classifier::enumerate`]: white vertices
    /// only, closed under arrows, at least two elements, in table order.
    pub fn candidates(&self) -> Vec<VertexSet> {
        let white = self
            .diagram
            .map_or(VertexSet::full(self.rs.rank()), SatakeDiagram::white);
        let mut out: Vec<VertexSet> = white
            .subsets()
            .filter(|s| s.len() >= 2)
            .filter(|s| {
                self.diagram.is_none_or(|sd| {
                    s.iter()
                        .all(|v| sd.partner(v).is_none_or(|w| s.contains(w)))
                })
            })
            .collect();
        out.sort();
        out
    }

    /// Classifies every candidate `pi1`. Work is spread over the rayon pool;
    /// the output order does not depend on the number of workers.
    pub fn enumerate(&self, options: EnumerateOptions) -> Result<Vec<ClassificationReport>> {
        let rank = self.rs.rank();
        if rank > options.max_rank {
            return Err(Error::RankBound {
                rank,
                bound: options.max_rank,
            });
        }
        let splits = if options.all_decompositions {
            Splits::All
        } else {
            Splits::SummaryOnly
        };
        self.candidates()
            .into_par_iter()
            .map(|pi1| self.classify(pi1, splits))
            .collect()
    }
}

/// Convenience wrapper building the root system on the fly.
pub fn enumerate(
    algebra: AlgebraType,
    diagram: Option<&SatakeDiagram>,
    options: EnumerateOptions,
) -> Result<Vec<ClassificationReport>> {
    if algebra.rank() > options.max_rank {
        return Err(Error::RankBound {
            rank: algebra.rank(),
            bound: options.max_rank,
        });
    }
    let rs = RootSystem::build(algebra);
    Classifier::new(&rs, diagram)?.enumerate(options)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::satake::Catalog;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse::<AlgebraType>().unwrap())
    }

    fn set(rank: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(rank, v.iter().copied()).unwrap()
    }

    fn admissible(rs: &RootSystem, v: &[usize]) -> Admissibility {
        let pi1 = set(rs.rank(), v);
        check_admissible(&Gradation::from_pi1(rs, pi1).unwrap(), pi1).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(admissible(&rs("A4"), &[1, 3]).is_admissible());
        assert!(!admissible(&rs("C4"), &[1, 2]).is_admissible());
        assert!(admissible(&rs("C4"), &[1, 4]).is_admissible());
        let f4 = admissible(&rs("F4"), &[1, 3]);
        match &f4 {
            Admissibility::DoubledRoot { vertex, witness } => {
                assert_eq!(witness.coeff(*vertex), 2);
                assert_eq!(witness.coeff(if *vertex == 1 { 3 } else { 1 }), 0);
            }
            other => panic!("expected a witness, got {other:?}"),
        }
        assert!(admissible(&rs("G2"), &[1, 2]).is_admissible());
        assert_eq!(
            admissible(&rs("G2"), &[1]),
            Admissibility::TooSmall { size: 1 }
        );
    }

    #[test]
    fn admissibility_rejects_foreign_gradation() {
        let a3 = rs("A3");
        let g = Gradation::from_pi1(&a3, set(3, &[1, 2])).unwrap();
        assert!(matches!(
            check_admissible(&g, set(3, &[1, 3])),
            Err(Error::GradationMismatch { .. })
        ));
        let g = Gradation::from_pi1(&a3, set(3, &[1])).unwrap();
        let too_far = VertexSet::from_indices(8, [1, 7]).unwrap();
        assert!(matches!(
            check_admissible(&g, too_far),
            Err(Error::VertexOutOfRange { vertex: 7, rank: 3 })
        ));
    }

    #[test]
    fn abelian_examples() {
        let a3 = rs("A3");
        let g = Gradation::from_pi1(&a3, set(3, &[1, 3])).unwrap();
        assert!(check_abelian_part(&g, set(3, &[1])).unwrap().is_abelian());
        assert_eq!(
            check_abelian_part(&g, set(3, &[1, 3])).unwrap(),
            AbelianVerdict::NotAbelian {
                witness: Root::new(vec![1, 1, 1])
            }
        );
        // B3 has a1+a2+2a3 and a2+2a3, both with coefficient 2 at a3 and 1 at a2.
        let b3 = rs("B3");
        let g = Gradation::from_pi1(&b3, set(3, &[2, 3])).unwrap();
        assert!(check_abelian_part(&g, set(3, &[3])).unwrap().is_abelian());
        assert!(check_abelian_part(&g, set(3, &[1])).is_err());
    }

    #[test]
    fn alternate_examples() {
        let a5 = rs("A5");
        let dec = Pi1Decomposition::new(set(5, &[1, 5]), set(5, &[3])).unwrap();
        assert!(is_alternate(&a5, None, &dec));
        let dec = Pi1Decomposition::new(set(5, &[1, 3]), set(5, &[5])).unwrap();
        assert!(!is_alternate(&a5, None, &dec));

        let cat = Catalog::bundled();
        let su33 = cat.lookup("su(3,3)", None).unwrap();
        assert_eq!(su33.arrows(), &[(1, 5), (2, 4)]);
        let dec = Pi1Decomposition::new(set(5, &[1, 5]), set(5, &[3])).unwrap();
        assert!(is_alternate(&a5, Some(su33), &dec));
        let dec = Pi1Decomposition::new(set(5, &[1, 3]), set(5, &[5])).unwrap();
        let alt = alternation(&a5, Some(su33), &dec);
        assert!(!alt.respects_arrows);
    }

    #[test]
    fn decomposition_validation() {
        assert!(Pi1Decomposition::new(VertexSet::EMPTY, set(3, &[1])).is_err());
        assert!(Pi1Decomposition::new(set(3, &[1, 2]), set(3, &[2])).is_err());
    }

    #[test]
    fn classify_a3_split() {
        let a3 = rs("A3");
        let split = SatakeDiagram::split(a3.algebra());
        let c = Classifier::new(&a3, Some(&split)).unwrap();
        let dec = Pi1Decomposition::new(set(3, &[1]), set(3, &[3])).unwrap();
        let r = c.classify(set(3, &[1, 3]), Splits::Given(dec)).unwrap();
        assert!(r.summary.admissible);
        assert_eq!(r.depth, 2);
        assert_eq!(r.component_count(), 2);
        assert!(r.decompositions[0].paracr);
        assert!(r.summary.alternate_criterion_agrees);
    }

    #[test]
    fn classify_rejects_bad_input() {
        let cat = Catalog::bundled();
        let a3 = rs("A3");
        let su22 = cat.lookup("su(2,2)", None).unwrap();
        let c = Classifier::new(&a3, Some(su22)).unwrap();
        assert!(matches!(
            c.classify(set(3, &[1, 2]), Splits::SummaryOnly),
            Err(Error::RealType(_))
        ));
        let su13 = cat.lookup("su(1,3)", None).unwrap();
        let c = Classifier::new(&a3, Some(su13)).unwrap();
        assert!(matches!(
            c.classify(set(3, &[1, 2, 3]), Splits::SummaryOnly),
            Err(Error::RealType(_))
        ));
        let c = Classifier::new(&a3, None).unwrap();
        assert_eq!(
            c.classify(VertexSet::EMPTY, Splits::SummaryOnly),
            Err(Error::EmptyPi1)
        );
        assert!(Classifier::new(&rs("A4"), Some(su22)).is_err());
    }

    #[test]
    fn d_branches_block_paracr() {
        let d6 = rs("D6");
        let c = Classifier::new(&d6, None).unwrap();
        let r = c.classify(set(6, &[1, 5, 6]), Splits::All).unwrap();
        assert!(r.summary.admissible);
        assert!(!r.summary.paracr_feasible);
        assert_eq!(r.decompositions.len(), 3);
    }

    #[test]
    fn e6_iii_has_no_paracr() {
        let cat = Catalog::bundled();
        let sd = cat.lookup("E6 III", None).unwrap();
        let e6 = rs("E6");
        let c = Classifier::new(&e6, Some(sd)).unwrap();
        let reports = c.enumerate(EnumerateOptions::default()).unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| !r.summary.paracr_feasible));
    }

    #[test]
    fn rank_bound() {
        let a9: AlgebraType = "A9".parse().unwrap();
        assert_eq!(
            enumerate(a9, None, EnumerateOptions::default()).unwrap_err(),
            Error::RankBound { rank: 9, bound: 8 }
        );
    }
}
