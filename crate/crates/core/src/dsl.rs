//! The line-oriented input language.
//!
//! ```text
//! # comment
//! algebra E6
//! realform E6 II                      # a catalog name, or
//! satake black {3,4,5} arrows {(1,6)} # an inline diagram
//! pi1 {1,4,6}
//! split plus {1,6} minus {4}
//! mode classify                       # classify | enumerate | tables
//! ```
//!
//! Every statement is one line starting with its keyword. The same language
//! stores the Satake catalog: each `realform <name>` line opens an entry that
//! carries its own `algebra` and `satake` lines.

use std::fmt;

use crate::error::{Error, Result};
use crate::paracr::Pi1Decomposition;
use crate::rootsys::AlgebraType;
use crate::satake::{Catalog, SatakeDiagram};
use crate::vertex::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Classify,
    Enumerate,
    Tables,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Classify => "classify",
            Mode::Enumerate => "enumerate",
            Mode::Tables => "tables",
        }
    }

    pub fn parse(word: &str) -> Option<Mode> {
        match word {
            "classify" => Some(Mode::Classify),
            "enumerate" => Some(Mode::Enumerate),
            "tables" => Some(Mode::Tables),
            _ => None,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where the real form of a document came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealForm {
    /// Looked up by name in the catalog.
    Catalog(SatakeDiagram),
    /// Given by a `satake` statement, optionally named by `realform`.
    Inline(SatakeDiagram),
}

impl RealForm {
    pub fn diagram(&self) -> &SatakeDiagram {
        match self {
            RealForm::Catalog(d) | RealForm::Inline(d) => d,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecDocument {
    pub algebra: AlgebraType,
    pub real_form: Option<RealForm>,
    pub pi1: Option<VertexSet>,
    pub decomposition: Option<Pi1Decomposition>,
    pub mode: Mode,
}

impl fmt::Display for SpecDocument {
    /// Canonical text; parsing it yields an equal document.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {}", self.algebra)?;
        match &self.real_form {
            Some(RealForm::Catalog(d)) => {
                writeln!(f, "realform {}", d.name().unwrap_or_default())?;
            }
            Some(RealForm::Inline(d)) => {
                if let Some(name) = d.name() {
                    writeln!(f, "realform {name}")?;
                }
                writeln!(f, "{d}")?;
            }
            None => {}
        }
        if let Some(pi1) = self.pi1 {
            writeln!(f, "pi1 {pi1}")?;
        }
        if let Some(dec) = &self.decomposition {
            writeln!(f, "split plus {} minus {}", dec.plus(), dec.minus())?;
        }
        writeln!(f, "mode {}", self.mode)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(usize),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
        }
    }
}

/// Integer with the column it started at.
#[derive(Debug, Clone, Copy)]
struct Spanned<T> {
    value: T,
    col: usize,
}

#[derive(Debug, Clone)]
enum Stmt {
    Algebra(String),
    RealForm(String),
    Satake {
        black: Vec<Spanned<usize>>,
        arrows: Vec<(Spanned<usize>, Spanned<usize>)>,
    },
    Pi1(Vec<Spanned<usize>>),
    Split {
        plus: Vec<Spanned<usize>>,
        minus: Vec<Spanned<usize>>,
    },
    Mode(String),
}

#[derive(Debug, Clone)]
struct Line {
    line: usize,
    /// Column of the first token after the keyword.
    arg_col: usize,
    stmt: Stmt,
}

fn perr(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        message: message.into(),
    }
}

struct Lexer<'a> {
    line: usize,
    chars: Vec<(usize, char)>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(line: usize, src: &'a str, start_col: usize) -> Self {
        Lexer {
            line,
            chars: src
                .chars()
                .enumerate()
                .map(|(i, c)| (start_col + i, c))
                .collect(),
            pos: 0,
            _src: src,
        }
    }

    fn end_col(&self) -> usize {
        self.chars.last().map_or(1, |&(c, _)| c + 1)
    }

    fn next(&mut self) -> Result<Option<Spanned<Tok>>> {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
        let Some(&(col, c)) = self.chars.get(self.pos) else {
            return Ok(None);
        };
        let single = match c {
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            self.pos += 1;
            return Ok(Some(Spanned { value: tok, col }));
        }
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
                self.pos += 1;
            }
            let text: String = self.chars[start..self.pos]
                .iter()
                .map(|&(_, c)| c)
                .collect();
            let n = text
                .parse()
                .map_err(|_| perr(self.line, col, format!("integer `{text}` is too large")))?;
            return Ok(Some(Spanned {
                value: Tok::Int(n),
                col,
            }));
        }
        if c.is_alphanumeric() || c == '_' {
            let start = self.pos;
            while self.pos < self.chars.len()
                && (self.chars[self.pos].1.is_alphanumeric() || self.chars[self.pos].1 == '_')
            {
                self.pos += 1;
            }
            let text: String = self.chars[start..self.pos]
                .iter()
                .map(|&(_, c)| c)
                .collect();
            return Ok(Some(Spanned {
                value: Tok::Word(text),
                col,
            }));
        }
        Err(perr(self.line, col, format!("unexpected character `{c}`")))
    }

    fn expect(&mut self, want: Tok, context: &str) -> Result<usize> {
        match self.next()? {
            Some(t) if t.value == want => Ok(t.col),
            Some(t) => Err(perr(
                self.line,
                t.col,
                format!("expected {want} {context}, found {}", t.value),
            )),
            None => Err(perr(
                self.line,
                self.end_col(),
                format!("expected {want} {context}, found end of line"),
            )),
        }
    }

    fn expect_int(&mut self, context: &str) -> Result<Spanned<usize>> {
        match self.next()? {
            Some(Spanned {
                value: Tok::Int(n),
                col,
            }) => Ok(Spanned { value: n, col }),
            Some(t) => Err(perr(
                self.line,
                t.col,
                format!("expected a vertex number {context}, found {}", t.value),
            )),
            None => Err(perr(
                self.line,
                self.end_col(),
                format!("expected a vertex number {context}, found end of line"),
            )),
        }
    }

    fn expect_keyword(&mut self, word: &str) -> Result<()> {
        match self.next()? {
            Some(Spanned {
                value: Tok::Word(w),
                ..
            }) if w == word => Ok(()),
            Some(t) => Err(perr(
                self.line,
                t.col,
                format!("expected `{word}`, found {}", t.value),
            )),
            None => Err(perr(
                self.line,
                self.end_col(),
                format!("expected `{word}`, found end of line"),
            )),
        }
    }

    /// `{ n, n, ... }`
    fn int_set(&mut self) -> Result<Vec<Spanned<usize>>> {
        self.expect(Tok::LBrace, "to open a vertex set")?;
        let mut out = Vec::new();
        loop {
            match self.next()? {
                Some(Spanned {
                    value: Tok::RBrace, ..
                }) if out.is_empty() => return Ok(out),
                Some(Spanned {
                    value: Tok::Int(n),
                    col,
                }) => out.push(Spanned { value: n, col }),
                Some(t) => {
                    return Err(perr(
                        self.line,
                        t.col,
                        format!("expected a vertex number, found {}", t.value),
                    ))
                }
                None => return Err(perr(self.line, self.end_col(), "unterminated vertex set")),
            }
            match self.next()? {
                Some(Spanned {
                    value: Tok::Comma, ..
                }) => {}
                Some(Spanned {
                    value: Tok::RBrace, ..
                }) => return Ok(out),
                Some(t) => {
                    return Err(perr(
                        self.line,
                        t.col,
                        format!("expected `,` or `}}` in vertex set, found {}", t.value),
                    ))
                }
                None => return Err(perr(self.line, self.end_col(), "unterminated vertex set")),
            }
        }
    }

    /// `{ (i,j), (i,j), ... }`
    fn pair_set(&mut self) -> Result<Vec<(Spanned<usize>, Spanned<usize>)>> {
        self.expect(Tok::LBrace, "to open the arrow list")?;
        let mut out = Vec::new();
        loop {
            match self.next()? {
                Some(Spanned {
                    value: Tok::RBrace, ..
                }) if out.is_empty() => return Ok(out),
                Some(Spanned {
                    value: Tok::LParen, ..
                }) => {
                    let a = self.expect_int("in arrow")?;
                    self.expect(Tok::Comma, "between arrow ends")?;
                    let b = self.expect_int("in arrow")?;
                    self.expect(Tok::RParen, "to close the arrow")?;
                    out.push((a, b));
                }
                Some(t) => {
                    return Err(perr(
                        self.line,
                        t.col,
                        format!("expected `(` to start an arrow, found {}", t.value),
                    ))
                }
                None => return Err(perr(self.line, self.end_col(), "unterminated arrow list")),
            }
            match self.next()? {
                Some(Spanned {
                    value: Tok::Comma, ..
                }) => {}
                Some(Spanned {
                    value: Tok::RBrace, ..
                }) => return Ok(out),
                Some(t) => {
                    return Err(perr(
                        self.line,
                        t.col,
                        format!("expected `,` or `}}` in arrow list, found {}", t.value),
                    ))
                }
                None => return Err(perr(self.line, self.end_col(), "unterminated arrow list")),
            }
        }
    }

    fn word(&mut self, what: &str) -> Result<String> {
        match self.next()? {
            Some(Spanned {
                value: Tok::Word(w),
                ..
            }) => Ok(w),
            Some(t) => Err(perr(
                self.line,
                t.col,
                format!("expected {what}, found {}", t.value),
            )),
            None => Err(perr(
                self.line,
                self.end_col(),
                format!("expected {what}, found end of line"),
            )),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.next()? {
            None => Ok(()),
            Some(t) => Err(perr(
                self.line,
                t.col,
                format!("unexpected {} at end of statement", t.value),
            )),
        }
    }
}

fn parse_lines(text: &str) -> Result<Vec<Line>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.chars().count() - trimmed.chars().count();
        let kw_len = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let keyword = &trimmed[..kw_len];
        let rest = &trimmed[kw_len..];
        let arg_col = indent + keyword.chars().count() + 1;
        let mut lx = Lexer::new(line, rest, arg_col);
        let stmt = match keyword {
            "algebra" => {
                let name = lx.word("an algebra name such as `E6`")?;
                lx.finish()?;
                Stmt::Algebra(name)
            }
            "realform" => {
                let name = rest.split_whitespace().collect::<Vec<_>>().join(" ");
                if name.is_empty() {
                    return Err(perr(line, arg_col, "expected a real form name"));
                }
                Stmt::RealForm(name)
            }
            "satake" => {
                let mut black = None;
                let mut arrows = None;
                while let Some(t) = lx.next()? {
                    match t.value {
                        Tok::Word(w) if w == "black" && black.is_none() => {
                            black = Some(lx.int_set()?)
                        }
                        Tok::Word(w) if w == "arrows" && arrows.is_none() => {
                            arrows = Some(lx.pair_set()?)
                        }
                        other => {
                            return Err(perr(
                                line,
                                t.col,
                                format!("expected `black {{...}}` or `arrows {{...}}`, found {other}"),
                            ))
                        }
                    }
                }
                if black.is_none() && arrows.is_none() {
                    return Err(perr(line, arg_col, "expected `black {...}` or `arrows {...}`"));
                }
                Stmt::Satake {
                    black: black.unwrap_or_default(),
                    arrows: arrows.unwrap_or_default(),
                }
            }
            "pi1" => {
                let s = lx.int_set()?;
                lx.finish()?;
                Stmt::Pi1(s)
            }
            "split" => {
                lx.expect_keyword("plus")?;
                let plus = lx.int_set()?;
                lx.expect_keyword("minus")?;
                let minus = lx.int_set()?;
                lx.finish()?;
                Stmt::Split { plus, minus }
            }
            "mode" => {
                let m = lx.word("a mode")?;
                lx.finish()?;
                Stmt::Mode(m)
            }
            other => {
                return Err(perr(
                    line,
                    indent + 1,
                    format!(
                        "unknown statement `{other}` (expected algebra, realform, satake, pi1, split or mode)"
                    ),
                ))
            }
        };
        out.push(Line {
            line,
            arg_col,
            stmt,
        });
    }
    Ok(out)
}

fn vertex_set(line: usize, rank: usize, items: &[Spanned<usize>]) -> Result<VertexSet> {
    let mut s = VertexSet::EMPTY;
    for it in items {
        if it.value == 0 || it.value > rank {
            return Err(perr(
                line,
                it.col,
                format!("index {} out of range 1..={rank}", it.value),
            ));
        }
        if s.contains(it.value) {
            return Err(perr(
                line,
                it.col,
                format!("vertex {} listed twice", it.value),
            ));
        }
        s.insert(it.value);
    }
    Ok(s)
}

fn diagram_from(
    line: &Line,
    algebra: AlgebraType,
    black: &[Spanned<usize>],
    arrows: &[(Spanned<usize>, Spanned<usize>)],
    name: Option<String>,
) -> Result<SatakeDiagram> {
    let rank = algebra.rank();
    let black_set = vertex_set(line.line, rank, black)?;
    for (a, b) in arrows {
        for end in [a, b] {
            if end.value == 0 || end.value > rank {
                return Err(perr(
                    line.line,
                    end.col,
                    format!("index {} out of range 1..={rank}", end.value),
                ));
            }
            if black_set.contains(end.value) {
                return Err(perr(
                    line.line,
                    end.col,
                    format!("arrow over black vertex {}", end.value),
                ));
            }
        }
    }
    SatakeDiagram::new(
        algebra,
        black_set,
        arrows.iter().map(|(a, b)| (a.value, b.value)),
        name,
    )
    .map_err(|e| perr(line.line, line.arg_col, e.to_string()))
}

fn algebra_from(line: &Line, name: &str) -> Result<AlgebraType> {
    name.parse::<AlgebraType>()
        .map_err(|e| perr(line.line, line.arg_col, e.to_string()))
}

fn once<'a>(slot: &mut Option<&'a Line>, line: &'a Line, keyword: &str) -> Result<()> {
    if let Some(prev) = slot {
        return Err(perr(
            line.line,
            1,
            format!(
                "duplicate `{keyword}` statement (first on line {})",
                prev.line
            ),
        ));
    }
    *slot = Some(line);
    Ok(())
}

/// Parses and validates a document, resolving catalog names in `catalog`.
pub fn parse_spec(text: &str, catalog: &Catalog) -> Result<SpecDocument> {
    let lines = parse_lines(text)?;
    let (mut algebra, mut realform, mut satake, mut pi1, mut split, mut mode) =
        (None, None, None, None, None, None);
    for l in &lines {
        match &l.stmt {
            Stmt::Algebra(_) => once(&mut algebra, l, "algebra")?,
            Stmt::RealForm(_) => once(&mut realform, l, "realform")?,
            Stmt::Satake { .. } => once(&mut satake, l, "satake")?,
            Stmt::Pi1(_) => once(&mut pi1, l, "pi1")?,
            Stmt::Split { .. } => once(&mut split, l, "split")?,
            Stmt::Mode(_) => once(&mut mode, l, "mode")?,
        }
    }

    let Some(alg_line) = algebra else {
        return Err(perr(
            lines.last().map_or(1, |l| l.line),
            1,
            "missing `algebra` statement",
        ));
    };
    let Stmt::Algebra(name) = &alg_line.stmt else {
        unreachable!()
    };
    let algebra = algebra_from(alg_line, name)?;
    let rank = algebra.rank();

    let name = realform.map(|l| match &l.stmt {
        Stmt::RealForm(n) => (l, n.clone()),
        _ => unreachable!(),
    });
    let real_form = match (satake, name) {
        (Some(l), name) => {
            let Stmt::Satake { black, arrows } = &l.stmt else {
                unreachable!()
            };
            Some(RealForm::Inline(diagram_from(
                l,
                algebra,
                black,
                arrows,
                name.map(|(_, n)| n),
            )?))
        }
        (None, Some((l, n))) => {
            let d = catalog
                .lookup(&n, Some(algebra))
                .map_err(|e| perr(l.line, l.arg_col, e.to_string()))?;
            Some(RealForm::Catalog(d.clone()))
        }
        (None, None) => None,
    };

    let pi1_set = match pi1 {
        Some(l) => {
            let Stmt::Pi1(items) = &l.stmt else {
                unreachable!()
            };
            let s = vertex_set(l.line, rank, items)?;
            if let Some(rf) = &real_form {
                let black = rf.diagram().black();
                if let Some(it) = items.iter().find(|it| black.contains(it.value)) {
                    return Err(perr(
                        l.line,
                        it.col,
                        format!("vertex {} of pi1 is black in the Satake diagram", it.value),
                    ));
                }
            }
            Some(s)
        }
        None => None,
    };

    let decomposition = match split {
        Some(l) => {
            let Stmt::Split { plus, minus } = &l.stmt else {
                unreachable!()
            };
            let p = vertex_set(l.line, rank, plus)?;
            let m = vertex_set(l.line, rank, minus)?;
            let dec =
                Pi1Decomposition::new(p, m).map_err(|e| perr(l.line, l.arg_col, e.to_string()))?;
            match pi1_set {
                None => return Err(perr(l.line, 1, "`split` needs a `pi1` statement")),
                Some(s) if s != dec.pi1() => {
                    return Err(perr(
                        l.line,
                        l.arg_col,
                        format!("parts {p} and {m} do not cover pi1 {s}"),
                    ))
                }
                Some(_) => {}
            }
            Some(dec)
        }
        None => None,
    };

    let mode = match mode {
        Some(l) => {
            let Stmt::Mode(word) = &l.stmt else {
                unreachable!()
            };
            Mode::parse(word).ok_or_else(|| {
                perr(
                    l.line,
                    l.arg_col + 1,
                    format!("unknown mode `{word}` (expected classify, enumerate or tables)"),
                )
            })?
        }
        None if pi1_set.is_some() => Mode::Classify,
        None => Mode::Enumerate,
    };
    if mode == Mode::Classify && pi1_set.is_none() {
        let line = lines.last().map_or(1, |l| l.line);
        return Err(perr(line, 1, "mode classify needs a `pi1` statement"));
    }

    Ok(SpecDocument {
        algebra,
        real_form,
        pi1: pi1_set,
        decomposition,
        mode,
    })
}

/// Parses a catalog: a sequence of `realform` / `algebra` / `satake` entries.
pub fn parse_catalog(text: &str) -> Result<Vec<SatakeDiagram>> {
    let lines = parse_lines(text)?;
    let mut entries = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let head = &lines[i];
        let Stmt::RealForm(name) = &head.stmt else {
            return Err(perr(
                head.line,
                1,
                "catalog entries start with `realform <name>`",
            ));
        };
        let mut algebra = None;
        let mut satake = None;
        i += 1;
        while i < lines.len() && !matches!(lines[i].stmt, Stmt::RealForm(_)) {
            let l = &lines[i];
            match &l.stmt {
                Stmt::Algebra(_) => once(&mut algebra, l, "algebra")?,
                Stmt::Satake { .. } => once(&mut satake, l, "satake")?,
                _ => {
                    return Err(perr(
                        l.line,
                        1,
                        "catalog entries hold only `algebra` and `satake` statements",
                    ))
                }
            }
            i += 1;
        }
        let alg_line =
            algebra.ok_or_else(|| perr(head.line, 1, format!("entry `{name}` has no algebra")))?;
        let Stmt::Algebra(alg_name) = &alg_line.stmt else {
            unreachable!()
        };
        let alg = algebra_from(alg_line, alg_name)?;
        let diagram = match satake {
            Some(l) => {
                let Stmt::Satake { black, arrows } = &l.stmt else {
                    unreachable!()
                };
                diagram_from(l, alg, black, arrows, Some(name.clone()))?
            }
            None => SatakeDiagram::split(alg).with_name(name.clone()),
        };
        if entries.iter().any(|d: &SatakeDiagram| {
            d.name().map(str::to_ascii_lowercase) == Some(name.to_ascii_lowercase())
        }) {
            return Err(perr(
                head.line,
                head.arg_col,
                format!("duplicate real form `{name}`"),
            ));
        }
        entries.push(diagram);
    }
    Ok(entries)
}
