// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Edge lists, metric reports and curve CSVs.
//!
//! Canonical edge-list form: a `# nodes: N` header, then one `i j` line per
//! edge with `i < j`, sorted by `i` then `j`, single space, LF endings.
//! The reader is more lenient: other `#` comments, blank lines, any
//! whitespace separator and either endpoint order are accepted.

use std::fmt::Write as _;
use std::fs::{self, File};
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{Analysis, MetricsReport};

const NODES_HEADER: &str = "# nodes:";

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    let mut buf = String::with_capacity(16 * g.edge_count() + 32);
    let _ = writeln!(buf, "{NODES_HEADER} {}", g.node_count());
    for (i, j) in g.sorted_edges() {
        let _ = writeln!(buf, "{i} {j}");
    }
    out.write_all(buf.as_bytes())?;
    Ok(())
}

pub fn edge_list_string(g: &Graph) -> String {
    let mut out = Vec::new();
    write_edge_list(g, &mut out).expect("writing to a Vec cannot fail");
    String::from_utf8(out).expect("edge list is ASCII")
}

pub fn write_edge_list_file(g: &Graph, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_edge_list(g, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn read_edge_list<R: Read>(input: R) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = FxHashSet::default();
    for (idx, line) in BufReader::new(input).lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let bad = |message: String| Error::Parse { line: lineno, message };
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        if let Some(rest) = text.strip_prefix(NODES_HEADER) {
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|e| bad(format!("bad node count '{}': {e}", rest.trim())))?;
            declared = Some(n);
            continue;
        }
        if text.starts_with('#') {
            continue;
        }
        let mut fields = text.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad(format!("expected two node ids, got '{text}'")));
        };
        let parse = |s: &str| s.parse::<usize>().map_err(|e| bad(format!("bad node id '{s}': {e}")));
        let (i, j) = (parse(a)?, parse(b)?);
        if i == j {
            return Err(bad(format!("self-loop on node {i}")));
        }
        let key = (i.min(j), i.max(j));
        if !seen.insert(key) {
            return Err(bad(format!("duplicate edge {} {}", key.0, key.1)));
        }
        if let Some(n) = declared {
            if key.1 >= n {
                return Err(bad(format!("node id {} exceeds declared node count {n}", key.1)));
            }
        }
        edges.push(key);
    }
    let max_id = edges.iter().map(|e| e.1 + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(0).max(max_id);
    Graph::from_edges(n, edges)
}

pub fn read_edge_list_file(path: &Path) -> Result<Graph> {
    read_edge_list(File::open(path)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    /// `key = value` lines.
    #[default]
    Text,
    /// JSON object.
    Structured,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "structured" | "json" => Ok(ReportFormat::Structured),
            other => Err(Error::param(format!("unknown format '{other}' (expected text or structured)"))),
        }
    }
}

impl ReportFormat {
    pub fn render(self, report: &MetricsReport) -> Result<String> {
        match self {
            ReportFormat::Text => Ok(report.to_text()),
            ReportFormat::Structured => Ok(serde_json::to_string_pretty(report)? + "\n"),
        }
    }

    pub fn parse(self, text: &str) -> Result<MetricsReport> {
        match self {
            ReportFormat::Text => MetricsReport::from_text(text),
            ReportFormat::Structured => Ok(serde_json::from_str(text)?),
        }
    }

    pub fn report_file_name(self) -> &'static str {
        match self {
            ReportFormat::Text => "metrics.txt",
            ReportFormat::Structured => "metrics.json",
        }
    }
}

/// A small CSV table: header row plus string cells.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    fn new(header: &[&str]) -> Self {
        CsvTable {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Long-format merge: a leading `graph` column labels each source table.
    pub fn stack(tables: &[(&str, &CsvTable)]) -> CsvTable {
        let mut header = vec!["graph".to_string()];
        if let Some((_, first)) = tables.first() {
            header.extend(first.header.iter().cloned());
        }
        let mut merged = CsvTable { header, rows: Vec::new() };
        for (label, table) in tables {
            for row in &table.rows {
                let mut r = vec![label.to_string()];
                r.extend(row.iter().cloned());
                merged.rows.push(r);
            }
        }
        merged
    }
}

/// Curves behind the metrics report, keyed by file name.
pub fn curve_tables(a: &Analysis) -> Vec<(&'static str, CsvTable)> {
    let n = a.histogram.node_count() as f64;
    let mut tables = Vec::new();

    let mut t = CsvTable::new(&["degree", "node_count", "fraction"]);
    for (k, c) in a.histogram.iter() {
        t.push(vec![k.to_string(), c.to_string(), (c as f64 / n).to_string()]);
    }
    tables.push(("degree_distribution.csv", t));

    let mut t = CsvTable::new(&["degree", "fraction_at_least"]);
    for (k, f) in a.histogram.ccdf() {
        t.push(vec![k.to_string(), f.to_string()]);
    }
    tables.push(("degree_ccdf.csv", t));

    if let Some(d) = &a.distances {
        let mut t = CsvTable::new(&["distance_hops", "ordered_pairs", "fraction_of_n2"]);
        for (dist, &c) in d.counts.iter().enumerate() {
            t.push(vec![dist.to_string(), c.to_string(), d.fraction(dist).to_string()]);
        }
        tables.push(("distance_distribution.csv", t));
    }

    let mut t = CsvTable::new(&["degree", "mean_local_clustering"]);
    for (k, c) in &a.clustering.by_degree {
        t.push(vec![k.to_string(), c.to_string()]);
    }
    tables.push(("clustering_by_degree.csv", t));

    let mut t = CsvTable::new(&["rank_fraction", "phi"]);
    for (x, phi) in &a.rich_club {
        t.push(vec![x.to_string(), phi.to_string()]);
    }
    tables.push(("rich_club.csv", t));

    if let Some(b) = &a.betweenness {
        let mut t = CsvTable::new(&["node", "degree", "normalized_betweenness"]);
        for (v, nb) in b.node_normalized().into_iter().enumerate() {
            t.push(vec![v.to_string(), a.degrees[v].to_string(), nb.to_string()]);
        }
        tables.push(("node_betweenness.csv", t));
    }
    tables
}

/// Writes the report and every curve into `dir`; returns the written paths.
pub fn write_analysis(dir: &Path, a: &Analysis, format: ReportFormat) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    let report_path = dir.join(format.report_file_name());
    fs::write(&report_path, format.render(&a.report)?)?;
    written.push(report_path);
    for (name, table) in curve_tables(a) {
        let path = dir.join(name);
        fs::write(&path, table.to_csv())?;
        written.push(path);
    }
    Ok(written)
}
