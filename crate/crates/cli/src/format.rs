//! Text format for sequence sets and complete complementary codes.
//!
//! ```text
//! GZCZ 1
//! q 2
//! M 2
//! N 3
//! 0 0 1
//! 0 1 0
//! ```
//!
//! Rows hold phase exponents when `q >= 1`, or space-separated `re,im` tokens
//! when `q = 0`. A code file replaces the rows with `M` blocks, each opened by
//! a `SET k` line and holding `M` rows. Several documents may be concatenated;
//! each starts with its own `GZCZ 1` line. Blank lines are ignored.

use gzcz::seqcore::{ComplementarySet, CompleteComplementaryCode, PhaseSequence};
use num_complex::Complex64;
use thiserror::Error;

const MAGIC: &str = "GZCZ 1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        line,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Set(ComplementarySet),
    Code(CompleteComplementaryCode),
}

impl Document {
    pub fn modulus(&self) -> u32 {
        match self {
            Document::Set(s) => s.modulus(),
            Document::Code(c) => c.modulus(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Document::Set(s) => s.len(),
            Document::Code(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn write_row(out: &mut String, row: &PhaseSequence) {
    let tokens: Vec<String> = match row.exponents() {
        Some(e) => e.iter().map(u32::to_string).collect(),
        None => row
            .to_complex()
            .iter()
            .map(|z| format!("{:?},{:?}", z.re, z.im))
            .collect(),
    };
    out.push_str(&tokens.join(" "));
    out.push('\n');
}

pub fn serialize(doc: &Document) -> String {
    let m = match doc {
        Document::Set(s) => s.set_size(),
        Document::Code(c) => c.set_size(),
    };
    let mut out = format!("{MAGIC}\nq {}\nM {m}\nN {}\n", doc.modulus(), doc.len());
    match doc {
        Document::Set(s) => s.rows().iter().for_each(|r| write_row(&mut out, r)),
        Document::Code(c) => {
            for k in 0..m {
                out.push_str(&format!("SET {k}\n"));
                c.set(k).rows().iter().for_each(|r| write_row(&mut out, r));
            }
        }
    }
    out
}

pub fn serialize_all(docs: &[Document]) -> String {
    docs.iter().map(serialize).collect()
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)>> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty()),
        );
        Self {
            inner: it.peekable(),
            last: 0,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str), FormatError> {
        match self.inner.next() {
            Some(item) => {
                self.last = item.0;
                Ok(item)
            }
            None => fail(
                self.last + 1,
                format!("unexpected end of input, expected {what}"),
            ),
        }
    }

    fn peek(&mut self) -> Option<&'a str> {
        self.inner.peek().map(|&(_, l)| l)
    }

    fn keyed(&mut self, key: &str) -> Result<(usize, usize), FormatError> {
        let (no, line) = self.next(&format!("'{key} <value>'"))?;
        let value = line
            .strip_prefix(key)
            .filter(|rest| rest.starts_with(' '))
            .map(str::trim)
            .ok_or_else(|| FormatError {
                line: no,
                message: format!("expected '{key} <value>', found '{line}'"),
            })?;
        value
            .parse()
            .map(|v| (no, v))
            .or_else(|_| fail(no, format!("bad {key} value '{value}'")))
    }
}

fn parse_row(no: usize, line: &str, q: u32, n: usize) -> Result<PhaseSequence, FormatError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != n {
        return fail(no, format!("expected {n} entries, found {}", tokens.len()));
    }
    let seq = if q == 0 {
        let values = tokens
            .iter()
            .map(|t| {
                let (re, im) = t.split_once(',')?;
                Some(Complex64::new(re.parse().ok()?, im.parse().ok()?))
            })
            .collect::<Option<Vec<_>>>();
        match values {
            Some(v) => PhaseSequence::from_complex(v),
            None => return fail(no, "entries must be 're,im' pairs"),
        }
    } else {
        let exps = tokens
            .iter()
            .map(|t| t.parse::<u32>())
            .collect::<Result<Vec<_>, _>>();
        match exps {
            Ok(e) => PhaseSequence::new(q, e),
            Err(_) => return fail(no, "entries must be non-negative integers"),
        }
    };
    seq.or_else(|e| fail(no, e.to_string()))
}

fn parse_rows(
    lines: &mut Lines<'_>,
    q: u32,
    m: usize,
    n: usize,
) -> Result<Vec<PhaseSequence>, FormatError> {
    (0..m)
        .map(|_| {
            let (no, line) = lines.next("a sequence row")?;
            parse_row(no, line, q, n)
        })
        .collect()
}

fn parse_document(lines: &mut Lines<'_>) -> Result<Document, FormatError> {
    let (no, magic) = lines.next(MAGIC)?;
    if magic != MAGIC {
        return fail(no, format!("expected '{MAGIC}', found '{magic}'"));
    }
    let (_, q) = lines.keyed("q")?;
    let (no_m, m) = lines.keyed("M")?;
    let (no_n, n) = lines.keyed("N")?;
    let q = u32::try_from(q).or_else(|_| fail(no, "modulus too large"))?;
    if m == 0 {
        return fail(no_m, "M must be at least 1");
    }
    if n == 0 {
        return fail(no_n, "N must be at least 1");
    }
    let wrap = |r: gzcz::Result<Document>| r.or_else(|e| fail(no, e.to_string()));
    if lines.peek().is_some_and(|l| l.starts_with("SET")) {
        let mut sets = Vec::with_capacity(m);
        for k in 0..m {
            let (no, line) = lines.next(&format!("'SET {k}'"))?;
            if line != format!("SET {k}") {
                return fail(no, format!("expected 'SET {k}', found '{line}'"));
            }
            sets.push(parse_rows(lines, q, m, n)?);
        }
        wrap(CompleteComplementaryCode::from_rows(sets).map(Document::Code))
    } else {
        let rows = parse_rows(lines, q, m, n)?;
        wrap(ComplementarySet::new(rows).map(Document::Set))
    }
}

/// Parses every concatenated document in `text`.
pub fn parse_all(text: &str) -> Result<Vec<Document>, FormatError> {
    let mut lines = Lines::new(text);
    let mut docs = Vec::new();
    while lines.peek().is_some() {
        docs.push(parse_document(&mut lines)?);
    }
    Ok(docs)
}

/// Parses text holding exactly one document.
pub fn parse(text: &str) -> Result<Document, FormatError> {
    let mut docs = parse_all(text)?;
    match docs.len() {
        1 => Ok(docs.remove(0)),
        0 => fail(1, "empty input"),
        k => fail(1, format!("expected one document, found {k}")),
    }
}
