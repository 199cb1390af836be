use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use super::HarnessError;
use crate::graph::{parse_graph6, to_graph6, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MalformedLine {
    /// 1-based.
    pub line: usize,
    pub text: String,
    pub error: String,
}

/// Graphs read from a graph6 file, in file order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    pub graphs: Vec<Graph>,
    pub malformed: Vec<MalformedLine>,
}

/// One graph per line; blank lines are skipped. In strict mode the first
/// malformed line is an error, otherwise it is recorded and reading goes on.
pub fn read_graph6<R: BufRead>(reader: R, strict: bool) -> Result<Corpus, HarnessError> {
    let mut corpus = Corpus::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim_end();
        if text.is_empty() {
            continue;
        }
        match parse_graph6(text) {
            Ok(g) => corpus.graphs.push(g),
            Err(e) if strict => {
                return Err(HarnessError::Malformed {
                    line: i + 1,
                    text: text.to_string(),
                    message: e.to_string(),
                })
            }
            Err(e) => corpus.malformed.push(MalformedLine {
                line: i + 1,
                text: text.to_string(),
                error: e.to_string(),
            }),
        }
    }
    Ok(corpus)
}

pub fn read_graph6_file(path: &Path, strict: bool) -> Result<Corpus, HarnessError> {
    read_graph6(BufReader::new(File::open(path)?), strict)
}

pub fn write_graph6<W: Write>(mut out: W, graphs: &[Graph]) -> Result<(), HarnessError> {
    for g in graphs {
        writeln!(out, "{}", to_graph6(g))?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_graph6_file(path: &Path, graphs: &[Graph]) -> Result<(), HarnessError> {
    write_graph6(BufWriter::new(File::create(path)?), graphs)
}
