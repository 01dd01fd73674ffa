//! Report documents and their text / JSON renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paracr::{Admissibility, ClassificationReport, DecompositionReport};
use crate::rootsys::AlgebraType;
use crate::vertex::VertexSet;

pub const SCHEMA_VERSION: &str = "paracr-report/1";

/// JSON schema describing [`ReportDocument`].
pub const REPORT_SCHEMA: &str = include_str!("../assets/report.schema.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportKind {
    Classify,
    Enumerate,
    Tables,
}

/// Aggregate of an enumeration over all candidate `pi1` of one algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationTable {
    pub algebra: AlgebraType,
    pub real_form: Option<String>,
    pub subsets_checked: usize,
    pub admissible: Vec<VertexSet>,
    pub non_admissible: Vec<VertexSet>,
    /// Sets admitting at least one para-CR split.
    pub paracr_feasible: Vec<VertexSet>,
    /// Admissible sets none of whose splits is alternate.
    pub admissible_without_alternate: Vec<VertexSet>,
}

impl ClassificationTable {
    pub fn from_reports(
        algebra: AlgebraType,
        real_form: Option<String>,
        reports: &[ClassificationReport],
    ) -> Self {
        let pick = |f: &dyn Fn(&ClassificationReport) -> bool| {
            reports
                .iter()
                .filter(|r| f(r))
                .map(|r| r.pi1)
                .collect::<Vec<_>>()
        };
        ClassificationTable {
            algebra,
            real_form,
            subsets_checked: reports.len(),
            admissible: pick(&|r| r.summary.admissible),
            non_admissible: pick(&|r| !r.summary.admissible),
            paracr_feasible: pick(&|r| r.summary.paracr_feasible),
            admissible_without_alternate: pick(&|r| {
                r.summary.admissible && !r.summary.alternate_exists
            }),
        }
    }

    fn title(&self) -> String {
        match &self.real_form {
            Some(name) => format!("{} ({name})", self.algebra),
            None => self.algebra.to_string(),
        }
    }
}

/// Top-level output of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub kind: ReportKind,
    pub reports: Vec<ClassificationReport>,
    pub tables: Vec<ClassificationTable>,
}

impl ReportDocument {
    pub fn new(
        kind: ReportKind,
        reports: Vec<ClassificationReport>,
        tables: Vec<ClassificationTable>,
    ) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            kind,
            reports,
            tables,
        }
    }
}

pub fn emit_report(doc: &ReportDocument, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => render_text(doc),
    }
}

/// Like [`emit_report`] with the format given by name.
pub fn emit_report_as(doc: &ReportDocument, format: &str) -> Result<String> {
    Ok(emit_report(doc, format.parse()?))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(sets: &[VertexSet]) -> String {
    sets.iter()
        .map(VertexSet::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn real_form_line(r: &ClassificationReport) -> String {
    match &r.real_form {
        None => "complex".to_string(),
        Some(info) => {
            let name = info.name.clone().unwrap_or_else(|| "custom".to_string());
            let arrows = info
                .arrows
                .iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect::<Vec<_>>()
                .join(",");
            format!("{name}  [black {} arrows {{{arrows}}}]", info.black)
        }
    }
}

fn admissibility_text(a: &Admissibility) -> String {
    match a {
        Admissibility::Admissible => "yes".to_string(),
        Admissibility::TooSmall { size } => {
            format!("no (size rule: {size} label-one vertex, at least 2 needed)")
        }
        Admissibility::DoubledRoot { vertex, witness } => {
            format!("no (root {witness} doubles a{vertex})")
        }
    }
}

fn decomposition_line(d: &DecompositionReport) -> String {
    let part = |v: &crate::paracr::AbelianVerdict| match v.witness() {
        None => "abelian".to_string(),
        Some(w) => format!("not abelian ({w})"),
    };
    let mut s = format!(
        "plus {} minus {}: alternate {}, plus {}, minus {}, para-CR {}",
        d.plus,
        d.minus,
        yes_no(d.alternate()),
        part(&d.plus_abelian),
        part(&d.minus_abelian),
        yes_no(d.paracr)
    );
    if !d.alternation.respects_arrows {
        s.push_str(" (splits an arrow pair)");
    }
    s
}

fn render_single(out: &mut String, r: &ClassificationReport) {
    let comps = match &r.real_components {
        Some(rc) => {
            let pairs = rc
                .pairs
                .iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect::<Vec<_>>()
                .join(", ");
            format!(
                "{} real (singles {}, pairs [{pairs}])",
                rc.count(),
                rc.singles
            )
        }
        None => {
            let parts = r
                .components
                .iter()
                .map(|c| format!("R(a{}) dim {}", c.vertex, c.dimension))
                .collect::<Vec<_>>()
                .join(", ");
            format!("{} ({parts})", r.components.len())
        }
    };
    let flags = [
        ("fundamental", r.flags.fundamental),
        ("effective", r.flags.effective),
        ("nondegenerate", r.flags.nondegenerate),
    ]
    .iter()
    .map(|(n, b)| {
        if *b {
            n.to_string()
        } else {
            format!("not {n}")
        }
    })
    .collect::<Vec<_>>()
    .join(", ");
    let _ = writeln!(out, "algebra      {}", r.algebra);
    let _ = writeln!(out, "real form    {}", real_form_line(r));
    let _ = writeln!(out, "pi1          {}", r.pi1);
    let _ = writeln!(out, "labels       {}", r.labels);
    let _ = writeln!(out, "flags        {flags}");
    let _ = writeln!(out, "depth        {}", r.depth);
    let _ = writeln!(out, "components   {comps}");
    let _ = writeln!(out, "admissible   {}", admissibility_text(&r.admissibility));
    let s = &r.summary;
    let verdict = match &s.paracr_witness {
        Some(d) => format!("yes (plus {} minus {})", d.plus(), d.minus()),
        None => "no".to_string(),
    };
    let _ = writeln!(
        out,
        "splits       {} checked, alternate split {}",
        s.splits_checked,
        if s.alternate_exists { "exists" } else { "none" }
    );
    let _ = writeln!(out, "para-CR      {verdict}");
    if !s.alternate_criterion_agrees {
        let _ = writeln!(
            out,
            "warning      alternate criterion disagrees with the Abelian test"
        );
    }
    for d in &r.decompositions {
        let _ = writeln!(out, "  {}", decomposition_line(d));
    }
}

fn render_rows(out: &mut String, reports: &[ClassificationReport]) {
    let width = reports
        .iter()
        .map(|r| r.pi1.to_string().len())
        .max()
        .unwrap_or(3)
        .max(3);
    let _ = writeln!(
        out,
        "  {:<width$}  depth  comps  admissible  alternate  para-CR  witness",
        "pi1"
    );
    for r in reports {
        let witness = match (&r.admissibility, &r.summary.paracr_witness) {
            (Admissibility::DoubledRoot { witness, .. }, _) => witness.to_string(),
            (_, Some(d)) => format!("plus {} minus {}", d.plus(), d.minus()),
            _ => "-".to_string(),
        };
        let _ = writeln!(
            out,
            "  {:<width$}  {:>5}  {:>5}  {:<10}  {:<9}  {:<7}  {witness}",
            r.pi1.to_string(),
            r.depth,
            r.component_count(),
            yes_no(r.summary.admissible),
            yes_no(r.summary.alternate_exists),
            yes_no(r.summary.paracr_feasible),
        );
        for d in &r.decompositions {
            let _ = writeln!(out, "  {:<width$}    {}", "", decomposition_line(d));
        }
    }
}

fn render_table(out: &mut String, t: &ClassificationTable) {
    let _ = writeln!(out, "{}", t.title());
    let _ = writeln!(
        out,
        "  sets with at least two vertices: {}",
        t.subsets_checked
    );
    if t.non_admissible.is_empty() {
        let _ = writeln!(out, "  admissible in all cases");
    } else {
        let _ = writeln!(
            out,
            "  admissible in all cases except the following {}: {}",
            t.non_admissible.len(),
            list(&t.non_admissible)
        );
    }
    let _ = writeln!(
        out,
        "  para-CR decomposition exists for {} of {} admissible sets",
        t.paracr_feasible.len(),
        t.admissible.len()
    );
    if !t.admissible_without_alternate.is_empty() {
        let _ = writeln!(
            out,
            "  no alternate decomposition: {}",
            list(&t.admissible_without_alternate)
        );
    }
}

fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    match doc.kind {
        ReportKind::Classify => {
            for (i, r) in doc.reports.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                render_single(&mut out, r);
            }
        }
        ReportKind::Enumerate => {
            for (i, t) in doc.tables.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let rows: Vec<_> = doc
                    .reports
                    .iter()
                    .filter(|r| {
                        r.algebra == t.algebra
                            && r.real_form.as_ref().and_then(|f| f.name.clone()) == t.real_form
                    })
                    .cloned()
                    .collect();
                render_table(&mut out, t);
                render_rows(&mut out, &rows);
            }
        }
        ReportKind::Tables => {
            for (i, t) in doc.tables.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                render_table(&mut out, t);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paracr::{enumerate, Classifier, EnumerateOptions, Splits};
    use crate::rootsys::RootSystem;

    #[test]
    fn format_names() {
        assert_eq!("text".parse::<OutputFormat>().unwrap(), OutputFormat::Text);
        assert_eq!("json".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert_eq!(
            "xml".parse::<OutputFormat>().unwrap_err(),
            Error::UnsupportedFormat("xml".into())
        );
    }

    #[test]
    fn e6_table_text() {
        let e6: AlgebraType = "E6".parse().unwrap();
        let reports = enumerate(e6, None, EnumerateOptions::default()).unwrap();
        let table = ClassificationTable::from_reports(e6, None, &reports);
        let doc = ReportDocument::new(ReportKind::Tables, Vec::new(), vec![table]);
        let text = emit_report(&doc, OutputFormat::Text);
        assert!(text.contains(
            "admissible in all cases except the following 5: {1,4}, {1,5}, {3,6}, {4,6}, {1,4,6}"
        ));
    }

    #[test]
    fn single_report_text_and_json() {
        let rs = RootSystem::build("F4".parse().unwrap());
        let pi1 = VertexSet::from_indices(4, [1, 3]).unwrap();
        let r = Classifier::new(&rs, None)
            .unwrap()
            .classify(pi1, Splits::All)
            .unwrap();
        let doc = ReportDocument::new(ReportKind::Classify, vec![r], Vec::new());
        let text = emit_report(&doc, OutputFormat::Text);
        assert!(text.contains("admissible   no (root"), "{text}");
        assert!(text.contains("depth        6"), "{text}");
        let json = emit_report(&doc, OutputFormat::Json);
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }
}
