//! The `teg` text format for evolving graphs.
//!
//! ```text
//! teg <n> <k> [undirected]
//! <tail> <head>
//! --
//! <tail> <head>
//! ```
//!
//! Steps are separated by a line containing exactly `--`, so a file with
//! `k >= 1` steps has `k - 1` separators. Lines starting with `#` are
//! comments. Line endings are LF and the last line must be terminated.

use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::graph::{check_vertex_count, normalize_step, Arc, EvolvingGraph, VertexId};

const SEPARATOR: &str = "--";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SyntaxError {
    #[error("missing `teg <n> <k>` header")]
    MissingHeader,
    #[error("malformed header `{0}`")]
    BadHeader(String),
    #[error("vertex count must be in [1, 2^32)")]
    BadVertexCount,
    #[error("malformed arc line `{0}`")]
    MalformedArc(String),
    #[error("vertex {label} out of declared range [0, {n})")]
    VertexOutOfRange { label: u64, n: usize },
    #[error("more than the declared {declared} steps")]
    TooManySteps { declared: usize },
    #[error("declared {declared} steps but found {found}")]
    TooFewSteps { declared: usize, found: usize },
    #[error("missing trailing newline")]
    MissingTrailingNewline,
}

#[derive(Debug, Error)]
pub enum TegError {
    #[error("line {line}: {kind}")]
    Syntax { line: usize, kind: SyntaxError },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl TegError {
    /// Line number of a syntax error, 1-based.
    pub fn line(&self) -> Option<usize> {
        match self {
            TegError::Syntax { line, .. } => Some(*line),
            TegError::Io(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TegHeader {
    pub n: usize,
    pub k: usize,
    pub undirected: bool,
}

enum Line {
    Arc(Arc),
    Separator,
    Eof,
}

/// Reads a `teg` stream one step at a time.
///
/// Nothing past the requested step is consumed from the underlying reader,
/// so a caller may stop early on a pipe.
pub struct TegReader<R> {
    reader: R,
    header: TegHeader,
    line_no: usize,
    steps_read: usize,
    dropped_loops: usize,
    buf: String,
}

impl<R: BufRead> TegReader<R> {
    pub fn new(mut reader: R) -> Result<Self, TegError> {
        let mut buf = String::new();
        let header = match read_line(&mut reader, &mut buf, 1)? {
            None => {
                return Err(TegError::Syntax {
                    line: 1,
                    kind: SyntaxError::MissingHeader,
                })
            }
            Some(text) => parse_header(text).map_err(|kind| TegError::Syntax { line: 1, kind })?,
        };
        Ok(TegReader {
            reader,
            header,
            line_no: 1,
            steps_read: 0,
            dropped_loops: 0,
            buf,
        })
    }

    pub fn header(&self) -> TegHeader {
        self.header
    }

    pub fn n(&self) -> usize {
        self.header.n
    }

    /// Number of steps read so far.
    pub fn steps_read(&self) -> usize {
        self.steps_read
    }

    /// Self-loops dropped so far.
    pub fn dropped_loops(&self) -> usize {
        self.dropped_loops
    }

    /// Reads the next step, normalized. Returns `None` after the last
    /// declared step, once the rest of the input has been checked.
    pub fn next_step(&mut self) -> Result<Option<Vec<Arc>>, TegError> {
        let declared = self.header.k;
        if self.steps_read == declared {
            // The final block is read up to EOF, so only `k = 0` has input
            // left to check here.
            if declared == 0 {
                if let Line::Arc(_) | Line::Separator = self.next_line()? {
                    return Err(self.syntax(SyntaxError::TooManySteps { declared }));
                }
            }
            return Ok(None);
        }
        let last = self.steps_read + 1 == declared;
        let mut arcs = Vec::new();
        loop {
            match self.next_line()? {
                Line::Arc(a) => arcs.push(a),
                Line::Separator if last => {
                    return Err(self.syntax(SyntaxError::TooManySteps { declared }))
                }
                Line::Separator => break,
                Line::Eof if last => break,
                Line::Eof => {
                    return Err(self.syntax(SyntaxError::TooFewSteps {
                        declared,
                        found: self.steps_read + 1,
                    }))
                }
            }
        }
        if self.header.undirected {
            let reversed: Vec<Arc> = arcs
                .iter()
                .filter(|a| !a.is_loop())
                .map(Arc::reversed)
                .collect();
            arcs.extend(reversed);
        }
        let n = self.header.n;
        let (step, dropped) = normalize_step(n, self.steps_read + 1, arcs)
            .expect("endpoints were range-checked while reading");
        self.dropped_loops += dropped;
        self.steps_read += 1;
        Ok(Some(step))
    }

    /// Reads every remaining step into a graph.
    pub fn read_graph(mut self) -> Result<EvolvingGraph, TegError> {
        let mut steps = Vec::with_capacity(self.header.k - self.steps_read);
        while let Some(step) = self.next_step()? {
            steps.push(step);
        }
        // Steps are already normalized; this only re-checks invariants.
        Ok(EvolvingGraph::new(self.header.n, steps).expect("steps validated during parse"))
    }

    fn syntax(&self, kind: SyntaxError) -> TegError {
        TegError::Syntax {
            line: self.line_no,
            kind,
        }
    }

    fn next_line(&mut self) -> Result<Line, TegError> {
        loop {
            self.line_no += 1;
            let text = match read_line(&mut self.reader, &mut self.buf, self.line_no)? {
                None => {
                    self.line_no -= 1;
                    return Ok(Line::Eof);
                }
                Some(t) => t,
            };
            if text.starts_with('#') {
                continue;
            }
            if text == SEPARATOR {
                return Ok(Line::Separator);
            }
            let n = self.header.n;
            let arc = parse_arc(text, n).map_err(|kind| TegError::Syntax {
                line: self.line_no,
                kind,
            })?;
            return Ok(Line::Arc(arc));
        }
    }
}

/// Reads one LF-terminated line, without the terminator.
fn read_line<'a, R: BufRead>(
    reader: &mut R,
    buf: &'a mut String,
    line_no: usize,
) -> Result<Option<&'a str>, TegError> {
    buf.clear();
    if reader.read_line(buf)? == 0 {
        return Ok(None);
    }
    match buf.strip_suffix('\n') {
        Some(text) => Ok(Some(text)),
        None => Err(TegError::Syntax {
            line: line_no,
            kind: SyntaxError::MissingTrailingNewline,
        }),
    }
}

fn parse_header(text: &str) -> Result<TegHeader, SyntaxError> {
    let bad = || SyntaxError::BadHeader(text.to_string());
    let mut fields = text.split(' ');
    if fields.next() != Some("teg") {
        return Err(SyntaxError::MissingHeader);
    }
    let n = fields.next().and_then(parse_uint).ok_or_else(bad)?;
    let k = fields.next().and_then(parse_uint).ok_or_else(bad)?;
    let undirected = match fields.next() {
        None => false,
        Some("undirected") => true,
        Some(_) => return Err(bad()),
    };
    if fields.next().is_some() {
        return Err(bad());
    }
    let n = usize::try_from(n).map_err(|_| SyntaxError::BadVertexCount)?;
    check_vertex_count(n).map_err(|_| SyntaxError::BadVertexCount)?;
    let k = usize::try_from(k).map_err(|_| bad())?;
    Ok(TegHeader { n, k, undirected })
}

fn parse_arc(text: &str, n: usize) -> Result<Arc, SyntaxError> {
    let malformed = || SyntaxError::MalformedArc(text.to_string());
    let (t, h) = text.split_once(' ').ok_or_else(malformed)?;
    let t = parse_uint(t).ok_or_else(malformed)?;
    let h = parse_uint(h).ok_or_else(malformed)?;
    for label in [t, h] {
        if label >= n as u64 {
            return Err(SyntaxError::VertexOutOfRange { label, n });
        }
    }
    Ok(Arc::new(VertexId(t as u32), VertexId(h as u32)))
}

/// Decimal digits only: no sign, no whitespace.
fn parse_uint(s: &str) -> Option<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn parse(text: &str) -> Result<EvolvingGraph, TegError> {
    parse_reader(text.as_bytes())
}

pub fn parse_reader<R: BufRead>(reader: R) -> Result<EvolvingGraph, TegError> {
    TegReader::new(reader)?.read_graph()
}

/// Renders `g` in canonical form: arcs in `(tail, head)` order, steps in
/// index order, no `undirected` flag.
pub fn serialize(g: &EvolvingGraph) -> String {
    let mut out = String::new();
    writeln!(out, "teg {} {}", g.n(), g.k()).unwrap();
    for (i, step) in g.steps().iter().enumerate() {
        if i > 0 {
            out.push_str(SEPARATOR);
            out.push('\n');
        }
        for a in step {
            writeln!(out, "{} {}", a.tail, a.head).unwrap();
        }
    }
    out
}

pub fn write_teg<W: Write>(g: &EvolvingGraph, mut w: W) -> io::Result<()> {
    w.write_all(serialize(g).as_bytes())?;
    w.flush()
}
