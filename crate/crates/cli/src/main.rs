use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use paracr::{
    emit_report, parse_spec, AlgebraType, Catalog, ClassificationReport, ClassificationTable,
    Classifier, EnumerateOptions, Family, Mode, OutputFormat, ReportDocument, ReportKind,
    RootSystem, SatakeDiagram, SpecDocument, Splits,
};

/// Classify fundamental gradations of simple Lie algebras and their real
/// forms by the para-CR admissibility and alternate-decomposition tests.
#[derive(Debug, Parser)]
#[command(name = "paracr", version)]
struct Args {
    /// Read the problem from a spec file (use `-` for stdin).
    #[arg(long, value_name = "FILE", conflicts_with_all = ["algebra", "tables"])]
    input: Option<PathBuf>,

    /// Algebra such as `E6` or `B4`.
    #[arg(long)]
    algebra: Option<String>,

    /// Real form name from the Satake catalog.
    #[arg(long, requires = "algebra")]
    realform: Option<String>,

    /// Inline Satake diagram, e.g. `black {2} arrows {(1,3)}`.
    #[arg(long, requires = "algebra")]
    satake: Option<String>,

    /// Label-one vertices, e.g. `1,4,6` or `{1,4,6}`.
    #[arg(long, requires = "algebra")]
    pi1: Option<String>,

    /// Plus part of a split of pi1.
    #[arg(long, requires_all = ["pi1", "minus"])]
    plus: Option<String>,

    /// Minus part of a split of pi1.
    #[arg(long, requires_all = ["pi1", "plus"])]
    minus: Option<String>,

    /// classify, enumerate or tables.
    #[arg(long, requires = "algebra")]
    mode: Option<String>,

    /// Regenerate the admissibility tables for an algebra (`E6`), a whole
    /// family up to --max-rank (`B`), a catalog real form (`su(3,3)`) or
    /// `all`.
    #[arg(long, value_name = "TARGET", conflicts_with = "algebra")]
    tables: Option<String>,

    /// Output format: text or json.
    #[arg(long, default_value = "text")]
    format: String,

    /// Largest rank enumerated.
    #[arg(long, default_value_t = 8)]
    max_rank: usize,

    /// List every split of pi1, not only the summary.
    #[arg(long)]
    all_decompositions: bool,

    /// Exit with status 1 unless a para-CR decomposition was found.
    #[arg(long)]
    assert_paracr: bool,

    /// Satake catalog in the spec language, replacing the bundled one.
    #[arg(long, value_name = "FILE")]
    satake_catalog: Option<PathBuf>,

    /// Worker threads for enumeration (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,

    /// Print the real forms in the catalog and exit.
    #[arg(long)]
    list_realforms: bool,
}

struct Outcome {
    output: String,
    paracr: bool,
}

fn braced(set: &str) -> String {
    let t = set.trim();
    if t.starts_with('{') {
        t.to_string()
    } else {
        format!("{{{t}}}")
    }
}

/// Turns the inline flags into a spec document in the input language.
fn inline_spec(args: &Args) -> String {
    let mut text = String::new();
    if let Some(a) = &args.algebra {
        text.push_str(&format!("algebra {a}\n"));
    }
    if let Some(r) = &args.realform {
        text.push_str(&format!("realform {r}\n"));
    }
    if let Some(s) = &args.satake {
        text.push_str(&format!("satake {s}\n"));
    }
    if let Some(p) = &args.pi1 {
        text.push_str(&format!("pi1 {}\n", braced(p)));
    }
    if let (Some(p), Some(m)) = (&args.plus, &args.minus) {
        text.push_str(&format!("split plus {} minus {}\n", braced(p), braced(m)));
    }
    if let Some(m) = &args.mode {
        text.push_str(&format!("mode {m}\n"));
    }
    text
}

fn load_catalog(args: &Args) -> Result<Catalog, String> {
    match &args.satake_catalog {
        None => Ok(Catalog::bundled()),
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            Catalog::parse(&text).map_err(|e| format!("{}:{e}", path.display()))
        }
    }
}

fn enumerate_one(
    algebra: AlgebraType,
    diagram: Option<&SatakeDiagram>,
    options: EnumerateOptions,
) -> Result<(Vec<ClassificationReport>, ClassificationTable), String> {
    let reports = paracr::enumerate(algebra, diagram, options).map_err(|e| e.to_string())?;
    let name = diagram.and_then(|d| d.name().map(str::to_string));
    let table = ClassificationTable::from_reports(algebra, name, &reports);
    Ok((reports, table))
}

fn tables_targets(
    target: &str,
    catalog: &Catalog,
    max_rank: usize,
) -> Result<Vec<(AlgebraType, Option<SatakeDiagram>)>, String> {
    let t = target.trim();
    if t.eq_ignore_ascii_case("all") {
        return Ok(Family::ALL
            .iter()
            .flat_map(|&f| AlgebraType::all_up_to(f, max_rank))
            .map(|a| (a, None))
            .collect());
    }
    let mut chars = t.chars();
    if let (Some(c), None) = (chars.next(), chars.next()) {
        if let Some(f) = Family::from_letter(c.to_ascii_uppercase()) {
            let algebras = AlgebraType::all_up_to(f, max_rank);
            if algebras.is_empty() {
                return Err(format!(
                    "family {f} has no algebra of rank at most {max_rank}; raise it with --max-rank"
                ));
            }
            return Ok(algebras.into_iter().map(|a| (a, None)).collect());
        }
    }
    if let Ok(a) = t.parse::<AlgebraType>() {
        return Ok(vec![(a, None)]);
    }
    match catalog.lookup(t, None) {
        Ok(d) => Ok(vec![(d.algebra(), Some(d.clone()))]),
        Err(_) => Err(format!(
            "unknown tables target `{t}` (expected an algebra such as E6, a family letter, `all` or a catalog real form)"
        )),
    }
}

fn tables_document(
    targets: &[(AlgebraType, Option<SatakeDiagram>)],
    options: EnumerateOptions,
) -> Result<(ReportDocument, bool), String> {
    let mut tables = Vec::new();
    for (algebra, diagram) in targets {
        tables.push(enumerate_one(*algebra, diagram.as_ref(), options)?.1);
    }
    let paracr = tables.iter().any(|t| !t.paracr_feasible.is_empty());
    Ok((
        ReportDocument::new(ReportKind::Tables, Vec::new(), tables),
        paracr,
    ))
}

fn run_document(
    doc: &SpecDocument,
    options: EnumerateOptions,
) -> Result<(ReportDocument, bool), String> {
    let diagram = doc.real_form.as_ref().map(|r| r.diagram());
    match doc.mode {
        Mode::Classify => {
            let pi1 = doc.pi1.ok_or("mode classify needs pi1")?;
            let rs = RootSystem::build(doc.algebra);
            let classifier = Classifier::new(&rs, diagram).map_err(|e| e.to_string())?;
            let splits = match (doc.decomposition, options.all_decompositions) {
                (Some(dec), _) => Splits::Given(dec),
                (None, true) => Splits::All,
                (None, false) => Splits::SummaryOnly,
            };
            let report = classifier
                .classify(pi1, splits)
                .map_err(|e| e.to_string())?;
            let paracr = match doc.decomposition {
                Some(_) => report.decompositions.iter().all(|d| d.paracr),
                None => report.summary.paracr_feasible,
            };
            Ok((
                ReportDocument::new(ReportKind::Classify, vec![report], Vec::new()),
                paracr,
            ))
        }
        Mode::Enumerate => {
            let (reports, table) = enumerate_one(doc.algebra, diagram, options)?;
            let paracr = !table.paracr_feasible.is_empty();
            Ok((
                ReportDocument::new(ReportKind::Enumerate, reports, vec![table]),
                paracr,
            ))
        }
        Mode::Tables => {
            let (_, table) = enumerate_one(doc.algebra, diagram, options)?;
            let paracr = !table.paracr_feasible.is_empty();
            Ok((
                ReportDocument::new(ReportKind::Tables, Vec::new(), vec![table]),
                paracr,
            ))
        }
    }
}

fn list_realforms(catalog: &Catalog, algebra: Option<&str>) -> Result<String, String> {
    let filter = algebra
        .map(|a| a.parse::<AlgebraType>().map_err(|e| e.to_string()))
        .transpose()?;
    let mut out = String::new();
    for d in catalog.entries() {
        if filter.is_none_or(|a| a == d.algebra()) {
            out.push_str(&format!(
                "{:<4} {:<16} {d}\n",
                d.algebra().to_string(),
                d.name().unwrap_or("-")
            ));
        }
    }
    Ok(out)
}

fn run(args: &Args) -> Result<Outcome, String> {
    let format: OutputFormat = args
        .format
        .parse()
        .map_err(|e: paracr::Error| e.to_string())?;
    let catalog = load_catalog(args)?;
    if args.list_realforms {
        return Ok(Outcome {
            output: list_realforms(&catalog, args.algebra.as_deref())?,
            paracr: true,
        });
    }
    let options = EnumerateOptions {
        max_rank: args.max_rank,
        all_decompositions: args.all_decompositions,
    };

    if let Some(target) = &args.tables {
        let targets = tables_targets(target, &catalog, args.max_rank)?;
        let (doc, paracr) = tables_document(&targets, options)?;
        return Ok(Outcome {
            output: emit_report(&doc, format),
            paracr,
        });
    }

    let (text, origin) = match &args.input {
        Some(path) if path.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            (s, "<stdin>".to_string())
        }
        Some(path) => (
            fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?,
            path.display().to_string(),
        ),
        None if args.algebra.is_some() => (inline_spec(args), "<flags>".to_string()),
        None => {
            return Err(
                "nothing to do: give --input, --algebra or --tables (see --help)".to_string(),
            )
        }
    };
    let doc = parse_spec(&text, &catalog).map_err(|e| match e {
        paracr::Error::Parse { .. } => format!("{origin}:{e}"),
        other => other.to_string(),
    })?;
    let (report, paracr) = run_document(&doc, options)?;
    Ok(Outcome {
        output: emit_report(&report, format),
        paracr,
    })
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(jobs) = args.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&args) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            if args.assert_paracr && !outcome.paracr {
                eprintln!("para-CR assertion failed: no para-CR decomposition");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
