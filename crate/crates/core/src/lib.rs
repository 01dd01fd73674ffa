//! Root systems, fundamental gradations, Satake diagrams and the
//! combinatorial classification of para-CR structures on flag manifolds.
//!
//! ```
//! use paracr::{AlgebraType, Classifier, RootSystem, Splits, VertexSet};
//!
//! let rs = RootSystem::build("A3".parse::<AlgebraType>().unwrap());
//! let pi1 = VertexSet::from_indices(3, [1, 3]).unwrap();
//! let report = Classifier::new(&rs, None).unwrap().classify(pi1, Splits::All).unwrap();
//! assert!(report.summary.paracr_feasible);
//! ```

pub mod dsl;
pub mod error;
pub mod grading;
pub mod paracr;
pub mod report;
pub mod rootsys;
pub mod satake;
pub mod vertex;

pub use dsl::{parse_catalog, parse_spec, Mode, RealForm, SpecDocument};
pub use error::{Error, Result};
pub use grading::{depth_by_marks, Gradation, GradationFlags, IrreducibleComponent, LabelVector};
pub use paracr::{
    check_abelian_part, check_admissible, enumerate, is_alternate, AbelianVerdict, Admissibility,
    ClassificationReport, Classifier, EnumerateOptions, Pi1Decomposition, Splits,
};
pub use report::{
    emit_report, ClassificationTable, OutputFormat, ReportDocument, ReportKind, REPORT_SCHEMA,
};
pub use rootsys::{AlgebraType, Family, Root, RootSystem};
pub use satake::{Catalog, RealComponentSet, RealTypeViolation, SatakeDiagram};
pub use vertex::VertexSet;
