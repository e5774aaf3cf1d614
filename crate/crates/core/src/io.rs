//! Line-oriented matrix file format.
//!
//! ```text
//! ring rational            # rational | integer | float | polynomial | exterior:<n>
//! size 2
//! 0 1/2
//! -1/2 0
//! ```
//!
//! Entries are whitespace separated; an entry containing spaces is wrapped
//! in double quotes (exterior entries are always quoted). Blank lines and
//! lines starting with `#` are ignored. Curvature files may append a `gram`
//! section of `size` rational rows, plus optional `volume <float>` and
//! `euler_characteristic <int>` lines.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exterior::{EvenForm, FormElement};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::rational::{Rational, RationalizedInteger};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingTag {
    Rational,
    Integer,
    Float,
    Polynomial,
    /// Even forms over the rationals on this many covectors.
    Exterior(usize),
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Rational => f.write_str("rational"),
            RingTag::Integer => f.write_str("integer"),
            RingTag::Float => f.write_str("float"),
            RingTag::Polynomial => f.write_str("polynomial"),
            RingTag::Exterior(n) => write!(f, "exterior:{n}"),
        }
    }
}

impl FromStr for RingTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(RingTag::Rational),
            "integer" => Ok(RingTag::Integer),
            "float" => Ok(RingTag::Float),
            "polynomial" => Ok(RingTag::Polynomial),
            _ => s
                .strip_prefix("exterior:")
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|d| *d <= crate::exterior::MAX_DIMENSION)
                .map(RingTag::Exterior)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown ring tag `{s}`"))),
        }
    }
}

/// A matrix over whichever ring its file declared.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Rational(Matrix<Rational>),
    Integer(Matrix<RationalizedInteger>),
    Float(Matrix<f64>),
    Polynomial(Matrix<Poly>),
    Exterior(usize, Matrix<EvenForm<Rational>>),
}

impl AnyMatrix {
    pub fn tag(&self) -> RingTag {
        match self {
            AnyMatrix::Rational(_) => RingTag::Rational,
            AnyMatrix::Integer(_) => RingTag::Integer,
            AnyMatrix::Float(_) => RingTag::Float,
            AnyMatrix::Polynomial(_) => RingTag::Polynomial,
            AnyMatrix::Exterior(d, _) => RingTag::Exterior(*d),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyMatrix::Rational(m) => m.n(),
            AnyMatrix::Integer(m) => m.n(),
            AnyMatrix::Float(m) => m.n(),
            AnyMatrix::Polynomial(m) => m.n(),
            AnyMatrix::Exterior(_, m) => m.n(),
        }
    }

    /// Entries as text, row-major.
    pub fn entry_texts(&self) -> Vec<String> {
        fn texts<T: fmt::Display>(m: &Matrix<T>) -> Vec<String> {
            m.entries().iter().map(ToString::to_string).collect()
        }
        match self {
            AnyMatrix::Rational(m) => texts(m),
            AnyMatrix::Integer(m) => texts(m),
            AnyMatrix::Float(m) => texts(m),
            AnyMatrix::Polynomial(m) => texts(m),
            AnyMatrix::Exterior(_, m) => texts(m),
        }
    }
}

/// Contents of a matrix or curvature file.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixFile {
    pub matrix: AnyMatrix,
    pub gram: Option<Matrix<Rational>>,
    pub volume: Option<f64>,
    pub euler_characteristic: Option<i64>,
}

impl MatrixFile {
    pub fn new(matrix: AnyMatrix) -> Self {
        MatrixFile {
            matrix,
            gram: None,
            volume: None,
            euler_characteristic: None,
        }
    }
}

/// Splits a row into entries, honouring double quotes.
fn tokenize(line: &str, line_no: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut token = String::new();
        if c == '"' {
            chars.next();
            loop {
                match chars.next() {
                    Some('"') => break,
                    Some(ch) => token.push(ch),
                    None => return Err(Error::parse(line_no, "unterminated quote")),
                }
            }
        } else {
            while let Some(&ch) = chars.peek() {
                if ch.is_whitespace() {
                    break;
                }
                if ch == '"' {
                    return Err(Error::parse(line_no, "quote inside an unquoted entry"));
                }
                token.push(ch);
                chars.next();
            }
        }
        out.push(token);
    }
    Ok(out)
}

fn parse_entries<T>(
    n: usize,
    rows: &[(usize, Vec<String>)],
    mut parse: impl FnMut(&str) -> Result<T>,
) -> Result<Matrix<T>> {
    let mut data = Vec::with_capacity(n * n);
    for (line_no, row) in rows {
        for token in row {
            data.push(parse(token).map_err(|e| match e {
                Error::Parse { .. } => e,
                other => Error::parse(*line_no, other.to_string()),
            })?);
        }
    }
    Matrix::new(n, data)
}

fn parse_matrix(tag: RingTag, n: usize, rows: &[(usize, Vec<String>)]) -> Result<AnyMatrix> {
    Ok(match tag {
        RingTag::Rational => AnyMatrix::Rational(parse_entries(n, rows, str::parse)?),
        RingTag::Integer => AnyMatrix::Integer(parse_entries(n, rows, str::parse)?),
        RingTag::Float => {
            let m = parse_entries(n, rows, |s| {
                s.parse::<f64>()
                    .map_err(|_| Error::InvalidArgument(format!("not a float literal: `{s}`")))
            })?;
            m.check_finite()?;
            AnyMatrix::Float(m)
        }
        RingTag::Polynomial => AnyMatrix::Polynomial(parse_entries(n, rows, str::parse)?),
        RingTag::Exterior(d) => {
            // Parse everything first so syntax errors win over the even-degree check.
            let forms = parse_entries(n, rows, |s| FormElement::<Rational>::parse(d, s))?;
            AnyMatrix::Exterior(d, forms.try_map(|f| EvenForm::new(f.clone()))?)
        }
    })
}

/// Parses a matrix file. `ring_override` reinterprets the entries in another
/// ring than the one the header declares.
pub fn parse_matrix_file(text: &str, ring_override: Option<RingTag>) -> Result<MatrixFile> {
    // Errors at end of input point one past the last line.
    let eof = text.lines().count() + 1;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let mut header = |keyword: &str| -> Result<(usize, String)> {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(eof, format!("missing `{keyword}` line")))?;
        let value = line
            .strip_prefix(keyword)
            .filter(|rest| rest.starts_with(char::is_whitespace))
            .ok_or_else(|| Error::parse(no, format!("expected `{keyword} <value>`")))?;
        Ok((no, value.trim().to_string()))
    };
    let (ring_line, ring_text) = header("ring")?;
    let declared: RingTag = ring_text
        .parse()
        .map_err(|e: Error| Error::parse(ring_line, e.to_string()))?;
    let (size_line, size_text) = header("size")?;
    let n: usize = size_text
        .parse()
        .map_err(|_| Error::parse(size_line, format!("bad size `{size_text}`")))?;

    let mut read_rows = |what: &str| -> Result<Vec<(usize, Vec<String>)>> {
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let (no, line) = lines.next().ok_or_else(|| {
                Error::parse(eof, format!("{what}: expected {n} rows, found {r}"))
            })?;
            let tokens = tokenize(line, no)?;
            if tokens.len() != n {
                return Err(Error::parse(
                    no,
                    format!("{what}: expected {n} entries, found {}", tokens.len()),
                ));
            }
            rows.push((no, tokens));
        }
        Ok(rows)
    };
    let rows = read_rows("matrix")?;
    let tag = ring_override.unwrap_or(declared);
    let mut file = MatrixFile::new(parse_matrix(tag, n, &rows)?);

    while let Some((no, line)) = lines.next() {
        let mut parts = line.split_whitespace();
        match (parts.next(), parts.next(), parts.next()) {
            (Some("gram"), None, _) if file.gram.is_none() => {
                let mut gram_rows = Vec::with_capacity(n);
                for r in 0..n {
                    let (row_no, row) = lines.next().ok_or_else(|| {
                        Error::parse(eof, format!("gram: expected {n} rows, found {r}"))
                    })?;
                    let tokens = tokenize(row, row_no)?;
                    if tokens.len() != n {
                        return Err(Error::parse(row_no, "gram: wrong number of entries"));
                    }
                    gram_rows.push((row_no, tokens));
                }
                file.gram = Some(parse_entries(n, &gram_rows, str::parse)?);
            }
            (Some("volume"), Some(v), None) => {
                file.volume = Some(
                    v.parse()
                        .ok()
                        .filter(|x: &f64| x.is_finite())
                        .ok_or_else(|| Error::parse(no, format!("bad volume `{v}`")))?,
                );
            }
            (Some("euler_characteristic"), Some(v), None) => {
                file.euler_characteristic =
                    Some(v.parse().map_err(|_| {
                        Error::parse(no, format!("bad Euler characteristic `{v}`"))
                    })?);
            }
            _ => return Err(Error::parse(no, format!("unexpected line `{line}`"))),
        }
    }
    Ok(file)
}

fn quote_if_needed(entry: &str, always: bool) -> String {
    if always || entry.is_empty() || entry.contains(char::is_whitespace) {
        format!("\"{entry}\"")
    } else {
        entry.to_string()
    }
}

fn write_rows(out: &mut String, n: usize, entries: &[String], always_quote: bool) {
    for row in entries.chunks(n.max(1)).take(n) {
        let row: Vec<String> = row
            .iter()
            .map(|e| quote_if_needed(e, always_quote))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

/// Canonical text of a matrix file.
pub fn write_matrix_file(file: &MatrixFile) -> String {
    let m = &file.matrix;
    let n = m.n();
    let mut out = format!("ring {}\nsize {n}\n", m.tag());
    let always_quote = matches!(m, AnyMatrix::Exterior(..));
    write_rows(&mut out, n, &m.entry_texts(), always_quote);
    if let Some(g) = &file.gram {
        out.push_str("gram\n");
        let texts: Vec<String> = g.entries().iter().map(ToString::to_string).collect();
        write_rows(&mut out, n, &texts, false);
    }
    if let Some(v) = file.volume {
        out.push_str(&format!("volume {v}\n"));
    }
    if let Some(k) = file.euler_characteristic {
        out.push_str(&format!("euler_characteristic {k}\n"));
    }
    out
}

pub fn write_matrix(m: &AnyMatrix) -> String {
    write_matrix_file(&MatrixFile::new(m.clone()))
}
