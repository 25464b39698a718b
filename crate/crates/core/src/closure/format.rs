//! The `tc` closure file format.
//!
//! ```text
//! tc <n> <arc-count>
//! # connected=<true|false> step=<t|->
//! <tail> <head>
//! ```
//!
//! Arcs are listed once each in lexicographic order, LF-terminated.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::closure::{ClosureGraph, ConnectivityReport};
use crate::graph::{Arc, VertexId};

#[derive(Debug, Error)]
pub enum ClosureFormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// A closure read back from disk, with its verdict line if present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureFile {
    pub closure: ClosureGraph,
    pub connected: Option<bool>,
    pub completed_at_step: Option<usize>,
}

pub fn write_closure<W: Write>(report: &ConnectivityReport, w: W) -> io::Result<()> {
    let mut w = io::BufWriter::new(w);
    let c = &report.closure;
    writeln!(w, "tc {} {}", c.n(), c.arc_count())?;
    match report.completed_at_step {
        Some(t) => writeln!(w, "# connected={} step={t}", report.connected)?,
        None => writeln!(w, "# connected={} step=-", report.connected)?,
    }
    for a in c.arcs() {
        writeln!(w, "{} {}", a.tail, a.head)?;
    }
    w.flush()
}

pub fn parse_closure<R: BufRead>(reader: R) -> Result<ClosureFile, ClosureFormatError> {
    let syntax = |line: usize, message: String| ClosureFormatError::Syntax { line, message };
    let mut lines = reader.split(b'\n').enumerate();

    let header = match lines.next() {
        Some((_, l)) => String::from_utf8_lossy(&l?).into_owned(),
        None => return Err(syntax(1, "missing `tc <n> <arc-count>` header".into())),
    };
    let fields: Vec<&str> = header.split(' ').collect();
    let (n, declared) = match fields.as_slice() {
        ["tc", n, m] => match (n.parse::<usize>(), m.parse::<usize>()) {
            (Ok(n), Ok(m)) if n >= 1 && n <= u32::MAX as usize => (n, m),
            _ => return Err(syntax(1, format!("malformed header `{header}`"))),
        },
        _ => return Err(syntax(1, format!("malformed header `{header}`"))),
    };

    let mut connected = None;
    let mut completed_at_step = None;
    let mut arcs: Vec<Arc> = Vec::new();
    for (i, line) in lines {
        let line_no = i + 1;
        let line = line?;
        let text = std::str::from_utf8(&line)
            .map_err(|_| syntax(line_no, "invalid UTF-8".into()))?;
        if let Some(comment) = text.strip_prefix('#') {
            if let Some((c, s)) = parse_verdict(comment.trim()) {
                connected = Some(c);
                completed_at_step = s;
            }
            continue;
        }
        let arc = text
            .split_once(' ')
            .and_then(|(t, h)| Some((t.parse::<u32>().ok()?, h.parse::<u32>().ok()?)))
            .ok_or_else(|| syntax(line_no, format!("malformed arc line `{text}`")))?;
        let arc = Arc::new(VertexId(arc.0), VertexId(arc.1));
        if arc.tail.index() >= n || arc.head.index() >= n || arc.is_loop() {
            return Err(syntax(line_no, format!("invalid arc `{text}` for n = {n}")));
        }
        if arcs.last().is_some_and(|last| *last >= arc) {
            return Err(syntax(line_no, "arcs out of lexicographic order".into()));
        }
        arcs.push(arc);
    }
    if arcs.len() != declared {
        return Err(syntax(
            1,
            format!("header declares {declared} arcs but {} were listed", arcs.len()),
        ));
    }
    Ok(ClosureFile {
        closure: ClosureGraph::from_arcs(n, arcs),
        connected,
        completed_at_step,
    })
}

fn parse_verdict(comment: &str) -> Option<(bool, Option<usize>)> {
    let (c, s) = comment.split_once(' ')?;
    let connected = c.strip_prefix("connected=")?.parse().ok()?;
    let step = match s.strip_prefix("step=")? {
        "-" => None,
        t => Some(t.parse().ok()?),
    };
    Some((connected, step))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::strict_closure;
    use crate::graph::EvolvingGraph;

    fn render(report: &ConnectivityReport) -> String {
        let mut out = Vec::new();
        write_closure(report, &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn writes_and_reads_back() {
        let g = EvolvingGraph::from_pairs(3, &[&[(0, 1)], &[(1, 2)]]).unwrap();
        let report = strict_closure(&g);
        let text = render(&report);
        assert_eq!(text, "tc 3 3\n# connected=false step=-\n0 1\n0 2\n1 2\n");
        let back = parse_closure(text.as_bytes()).unwrap();
        assert_eq!(back.closure, report.closure);
        assert_eq!(back.connected, Some(false));
        assert_eq!(back.completed_at_step, None);
    }

    #[test]
    fn complete_closure_lists_every_arc() {
        let g = EvolvingGraph::from_pairs(2, &[&[(0, 1)], &[(1, 0)]]).unwrap();
        let text = render(&strict_closure(&g));
        assert_eq!(text, "tc 2 2\n# connected=true step=2\n0 1\n1 0\n");
        let back = parse_closure(text.as_bytes()).unwrap();
        assert!(back.closure.is_complete());
        assert_eq!(back.completed_at_step, Some(2));
    }

    #[test]
    fn rejects_bad_files() {
        for bad in [
            "",
            "tc 3\n",
            "tc 3 1\n0 0\n",
            "tc 3 1\n0 5\n",
            "tc 3 2\n1 2\n0 1\n",
            "tc 3 2\n0 1\n",
            "tc 3 1\nzero one\n",
        ] {
            assert!(parse_closure(bad.as_bytes()).is_err(), "{bad:?}");
        }
    }
}
