//! The text format for presentations and morphisms.
//!
//! ```text
//! # Z/4
//! ring Z
//! matrix 1 1
//! 4
//! ```
//!
//! A morphism file holds the source block, the target block and a
//! `map <rows> <cols>` block with the datum. Lines starting with `#` and
//! empty lines are skipped.

use std::fmt::Write as _;

use freyd::arith::{Matrix, Ring};
use freyd::presentation::Presentation;

/// A syntax or shape error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// A morphism between presented modules, before witness computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismFile {
    pub source: Presentation,
    pub target: Presentation,
    pub datum: Matrix,
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    /// Splits on single spaces, with the 1-based column of each token.
    fn tokens(&self) -> Result<Vec<(usize, &str)>, ParseError> {
        let mut out = Vec::new();
        let mut column = 1;
        for token in self.text.split(' ') {
            if token.is_empty() {
                return Err(self.error(column, "expected a single space between entries"));
            }
            out.push((column, token));
            column += token.chars().count() + 1;
        }
        Ok(out)
    }

    fn error(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { line: self.number, column, message: message.into() }
    }
}

struct Lines<'a> {
    lines: Vec<Line<'a>>,
    next: usize,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let all: Vec<_> = text.lines().collect();
        let lines = all
            .iter()
            .enumerate()
            .map(|(i, t)| Line { number: i + 1, text: t.strip_suffix('\r').unwrap_or(t) })
            .filter(|l| !l.text.is_empty() && !l.text.starts_with('#'))
            .collect();
        Lines { lines, next: 0, last: all.len() + 1 }
    }

    fn next(&mut self, expected: &str) -> Result<&Line<'a>, ParseError> {
        match self.lines.get(self.next) {
            Some(_) => {
                self.next += 1;
                Ok(&self.lines[self.next - 1])
            }
            None => Err(ParseError { line: self.last, column: 1, message: format!("expected {expected}, found end of input") }),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.lines.get(self.next) {
            Some(l) => Err(l.error(1, "unexpected trailing line")),
            None => Ok(()),
        }
    }
}

fn parse_ring(lines: &mut Lines<'_>) -> Result<Ring, ParseError> {
    let line = lines.next("`ring <R>`")?;
    let tokens = line.tokens()?;
    match tokens.as_slice() {
        [(_, "ring"), (c, name)] => name.parse().map_err(|e| line.error(*c, format!("{e}"))),
        _ => Err(line.error(1, "expected `ring Z`, `ring Q` or `ring Z/<n>`")),
    }
}

fn parse_count(line: &Line<'_>, column: usize, token: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| line.error(column, format!("`{token}` is not a dimension")))
}

fn parse_block(lines: &mut Lines<'_>, ring: &Ring, keyword: &str) -> Result<(Matrix, usize), ParseError> {
    let header = lines.next(&format!("`{keyword} <rows> <cols>`"))?;
    let number = header.number;
    let tokens = header.tokens()?;
    let (rows, cols) = match tokens.as_slice() {
        [(_, k), (c1, r), (c2, c)] if *k == keyword => (parse_count(header, *c1, r)?, parse_count(header, *c2, c)?),
        _ => return Err(header.error(1, format!("expected `{keyword} <rows> <cols>`"))),
    };
    let mut entries = Vec::with_capacity(rows * cols);
    // Rows of width zero are implicit.
    for i in 0..if cols == 0 { 0 } else { rows } {
        let line = lines.next(&format!("row {} of {rows}", i + 1))?;
        let tokens = line.tokens()?;
        if tokens.len() != cols {
            let column = tokens.get(cols).map_or(line.text.chars().count() + 1, |t| t.0);
            return Err(line.error(column, format!("expected {cols} entries, found {}", tokens.len())));
        }
        for (c, t) in tokens {
            entries.push(ring.parse_elem(t).map_err(|e| line.error(c, e.to_string()))?);
        }
    }
    let m = Matrix::new(ring.clone(), rows, cols, entries).map_err(|e| ParseError { line: number, column: 1, message: e.to_string() })?;
    Ok((m, number))
}

/// Parses a presentation file.
///
/// ```
/// use freyd_cli::format::parse_presentation;
///
/// let p = parse_presentation("ring Z\nmatrix 1 1\n2\n").unwrap();
/// assert_eq!(p.canonical().unwrap().to_string(), "free 0; torsion 2");
/// let e = parse_presentation("ring Z\nmatrix 1 2\n2\n").unwrap_err();
/// assert_eq!((e.line, e.column), (3, 2));
/// ```
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut lines = Lines::new(text);
    let ring = parse_ring(&mut lines)?;
    let (m, _) = parse_block(&mut lines, &ring, "matrix")?;
    lines.finish()?;
    Ok(Presentation::new(m))
}

/// Parses a morphism file: source block, target block, then the datum.
pub fn parse_morphism(text: &str) -> Result<MorphismFile, ParseError> {
    let mut lines = Lines::new(text);
    let ring = parse_ring(&mut lines)?;
    let (source, _) = parse_block(&mut lines, &ring, "matrix")?;
    let (target, _) = parse_block(&mut lines, &ring, "matrix")?;
    let (datum, line) = parse_block(&mut lines, &ring, "map")?;
    if datum.rows() != source.cols() || datum.cols() != target.cols() {
        return Err(ParseError {
            line,
            column: 1,
            message: format!(
                "map is {}×{} but source and target have {} and {} generators",
                datum.rows(),
                datum.cols(),
                source.cols(),
                target.cols()
            ),
        });
    }
    lines.finish()?;
    Ok(MorphismFile { source: Presentation::new(source), target: Presentation::new(target), datum })
}

/// Renders a presentation in the file format.
pub fn render_presentation(p: &Presentation) -> String {
    let m = &p.relations;
    let mut out = format!("ring {}\nmatrix {} {}\n", p.ring(), m.rows(), m.cols());
    for i in 0..if m.cols() == 0 { 0 } else { m.rows() } {
        let row: Vec<String> = m.row(i).iter().map(|e| e.to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}
