//! Text formats: word listings, CSV tables, DOT graphs and JSON.
//!
//! Every writer emits items in the order given, and callers pass canonical
//! (sorted) orders, so identical inputs give byte-identical files.

use std::fmt::Display;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use hurwitz_core::{inversion_table, rank, FactorWord};
use serde::Serialize;

/// Buffered writer to `path`, or to stdout when `path` is `None`.
pub fn open_output(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Node label used in graph output: `12,23,34` while labels are single
/// digits, the full `1 2,2 3,3 4` form otherwise.
pub fn node_label(w: &FactorWord) -> String {
    if w.n() <= 9 {
        w.compact_label()
    } else {
        w.to_string()
    }
}

/// One item per line followed by `count=N`.
pub fn write_listing<T: Display>(out: &mut dyn Write, items: &[T]) -> io::Result<()> {
    for item in items {
        writeln!(out, "{item}")?;
    }
    writeln!(out, "count={}", items.len())
}

/// Reads a listing produced by [`write_listing`] back into words. A count
/// mismatch is an error. An empty line is the single word of `F_1`.
pub fn parse_listing(text: &str) -> Result<Vec<FactorWord>, String> {
    let mut words = Vec::new();
    let mut declared = None;
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(c) = line.strip_prefix("count=") {
            declared = Some(c.parse::<usize>().map_err(|e| format!("line {}: {e}", k + 1))?);
            continue;
        }
        words.push(line.parse::<FactorWord>().map_err(|e| format!("line {}: {e}", k + 1))?);
    }
    match declared {
        Some(c) if c != words.len() => Err(format!("count={c} but {} words listed", words.len())),
        _ => Ok(words),
    }
}

/// A row of the per-word statistics table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatsRow {
    pub word: String,
    pub rank: usize,
    pub inv_r: usize,
    pub inv_l: usize,
    pub inv_n: usize,
}

impl StatsRow {
    pub fn of(w: &FactorWord) -> Self {
        let (inv_r, inv_l, inv_n) = inversion_table(w).counts();
        Self { word: w.to_string(), rank: rank(w), inv_r, inv_l, inv_n }
    }
}

/// Quotes a CSV field when it holds a delimiter, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Writes a header and rows of already-formatted cells.
pub fn write_csv(out: &mut dyn Write, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> io::Result<()> {
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| csv_field(c)).collect();
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}

pub fn write_stats_csv(out: &mut dyn Write, rows: &[StatsRow]) -> io::Result<()> {
    write_csv(
        out,
        &["word", "rank", "inv_r", "inv_l", "inv_n"],
        rows.iter().map(|r| {
            vec![r.word.clone(), r.rank.to_string(), r.inv_r.to_string(), r.inv_l.to_string(), r.inv_n.to_string()]
        }),
    )
}

/// Undirected DOT graph. With `ranks`, nodes of equal rank share a
/// `rank=same` group so layout engines draw the diagram in layers.
pub fn write_dot(
    out: &mut dyn Write,
    name: &str,
    labels: &[String],
    edges: impl IntoIterator<Item = (u32, u32)>,
    ranks: Option<&[u32]>,
) -> io::Result<()> {
    writeln!(out, "graph {name} {{")?;
    writeln!(out, "  node [shape=plaintext];")?;
    for (k, label) in labels.iter().enumerate() {
        writeln!(out, "  v{k} [label=\"{label}\"];")?;
    }
    if let Some(ranks) = ranks {
        let top = ranks.iter().copied().max().unwrap_or(0);
        for r in 0..=top {
            let members: Vec<String> =
                (0..labels.len()).filter(|&k| ranks[k] == r).map(|k| format!("v{k}")).collect();
            if !members.is_empty() {
                writeln!(out, "  {{ rank=same; {}; }}", members.join("; "))?;
            }
        }
    }
    for (u, v) in edges {
        writeln!(out, "  v{u} -- v{v};")?;
    }
    writeln!(out, "}}")
}

/// Edges of a DOT file written by [`write_dot`], as label pairs.
pub fn parse_dot_edges(text: &str) -> Result<Vec<(String, String)>, String> {
    let mut labels = std::collections::HashMap::new();
    let mut edges = Vec::new();
    for line in text.lines().map(str::trim) {
        if let Some((id, rest)) = line.split_once(" [label=\"") {
            let label = rest.strip_suffix("\"];").ok_or_else(|| format!("bad node line {line:?}"))?;
            labels.insert(id.to_string(), label.to_string());
        } else if let Some((u, v)) = line.strip_suffix(';').and_then(|l| l.split_once(" -- ")) {
            let get = |id: &str| labels.get(id).cloned().ok_or_else(|| format!("unknown node {id}"));
            edges.push((get(u)?, get(v)?));
        }
    }
    Ok(edges)
}

/// Pretty JSON plus a trailing newline.
pub fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}
