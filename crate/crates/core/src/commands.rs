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

//! Subcommand implementations behind the `topogen` binary.
//!
//! Each command writes its data to `out` and returns what it computed.
//! Diagnostics are the caller's business; nothing here prints to stderr
//! except through the returned values.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::evolve::{evolve_traced, EvolutionTrace, ModelParams, TraceConfig};
use crate::experiment::{run_experiment, ExperimentName, ExperimentReport};
use crate::graph::Graph;
use crate::io::{curve_tables, read_edge_list_file, write_analysis, write_edge_list, CsvTable, ReportFormat};
use crate::metrics::{analyze, Analysis, MetricsReport, ReportOptions};
use crate::theory::{eba_q_max, expected_avg_degree, gamma_eba, TheoryParams};

pub const EDGE_LIST_FILE: &str = "graph.edges";

#[derive(Debug, Clone)]
pub struct GenerateConfig {
    pub params: ModelParams,
    pub target_n: usize,
    pub seed: u64,
    pub out_dir: Option<PathBuf>,
    pub format: ReportFormat,
    pub report: ReportOptions,
}

#[derive(Debug)]
pub struct Generated {
    pub graph: Graph,
    pub trace: EvolutionTrace,
    pub analysis: Option<Analysis>,
    pub written: Vec<PathBuf>,
}

/// Without an output directory the canonical edge list goes to `out`.
/// With one, the edge list, report and curves are written there and the
/// report goes to `out`.
pub fn cmd_generate(cfg: &GenerateConfig, out: &mut dyn Write) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (graph, trace) = evolve_traced(&cfg.params, cfg.target_n, &mut rng, &TraceConfig::default())?;
    let Some(dir) = &cfg.out_dir else {
        write_edge_list(&graph, &mut *out)?;
        return Ok(Generated { graph, trace, analysis: None, written: Vec::new() });
    };
    fs::create_dir_all(dir)?;
    let edges_path = dir.join(EDGE_LIST_FILE);
    crate::io::write_edge_list_file(&graph, &edges_path)?;
    let analysis = analyze(&graph, &cfg.report);
    let mut written = vec![edges_path];
    written.extend(write_analysis(dir, &analysis, cfg.format)?);
    out.write_all(cfg.format.render(&analysis.report)?.as_bytes())?;
    Ok(Generated { graph, trace, analysis: Some(analysis), written })
}

pub fn cmd_analyze(
    path: &Path,
    out_dir: Option<&Path>,
    format: ReportFormat,
    opts: &ReportOptions,
    out: &mut dyn Write,
) -> Result<Analysis> {
    let g = read_edge_list_file(path)?;
    let analysis = analyze(&g, opts);
    if let Some(dir) = out_dir {
        write_analysis(dir, &analysis, format)?;
    }
    out.write_all(format.render(&analysis.report)?.as_bytes())?;
    Ok(analysis)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub labels: Vec<String>,
    pub reports: Vec<MetricsReport>,
}

impl Comparison {
    /// Aligned metric-per-row table with one column per graph.
    pub fn to_text(&self) -> String {
        let mut rows: Vec<Vec<String>> = vec![std::iter::once("metric".to_string()).chain(self.labels.iter().cloned()).collect()];
        let columns: Vec<_> = self.reports.iter().map(|r| r.rows()).collect();
        if let Some(first) = columns.first() {
            for (i, (key, _)) in first.iter().enumerate() {
                let mut row = vec![key.to_string()];
                row.extend(columns.iter().map(|c| c[i].1.clone()));
                rows.push(row);
            }
        }
        let ncol = rows[0].len();
        let widths: Vec<usize> = (0..ncol).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for row in rows {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        out
    }

    pub fn render(&self, format: ReportFormat) -> Result<String> {
        match format {
            ReportFormat::Text => Ok(self.to_text()),
            ReportFormat::Structured => Ok(serde_json::to_string_pretty(self)? + "\n"),
        }
    }
}

/// Column labels from file stems, numbered when they collide.
fn labels_for(paths: &[PathBuf]) -> Vec<String> {
    let stems: Vec<String> = paths
        .iter()
        .map(|p| p.file_stem().map_or_else(|| p.display().to_string(), |s| s.to_string_lossy().into_owned()))
        .collect();
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    for s in &stems {
        *seen.entry(s).or_default() += 1;
    }
    stems
        .iter()
        .enumerate()
        .map(|(i, s)| if seen[s.as_str()] > 1 { format!("{s}#{}", i + 1) } else { s.clone() })
        .collect()
}

pub fn cmd_compare(
    paths: &[PathBuf],
    out_dir: Option<&Path>,
    format: ReportFormat,
    opts: &ReportOptions,
    out: &mut dyn Write,
) -> Result<Comparison> {
    let labels = labels_for(paths);
    let analyses = paths
        .iter()
        .map(|p| read_edge_list_file(p).map(|g| analyze(&g, opts)))
        .collect::<Result<Vec<_>>>()?;
    let cmp = Comparison {
        labels: labels.clone(),
        reports: analyses.iter().map(|a| a.report.clone()).collect(),
    };
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)?;
        let name = match format {
            ReportFormat::Text => "compare.txt",
            ReportFormat::Structured => "compare.json",
        };
        fs::write(dir.join(name), cmp.render(format)?)?;
        for (name, tables) in overlay(&labels, &analyses) {
            fs::write(dir.join(format!("compare_{name}")), tables.to_csv())?;
        }
    }
    out.write_all(cmp.render(format)?.as_bytes())?;
    Ok(cmp)
}

/// Curves of all graphs stacked per curve name. Curves missing for some
/// graph (skipped all-pairs metrics) only list the graphs that have them.
fn overlay(labels: &[String], analyses: &[Analysis]) -> Vec<(&'static str, CsvTable)> {
    let per_graph: Vec<_> = analyses.iter().map(curve_tables).collect();
    let mut names: Vec<&'static str> = Vec::new();
    for tables in &per_graph {
        for (n, _) in tables {
            if !names.contains(n) {
                names.push(n);
            }
        }
    }
    names
        .into_iter()
        .map(|name| {
            let parts: Vec<(&str, &CsvTable)> = labels
                .iter()
                .zip(&per_graph)
                .filter_map(|(l, ts)| ts.iter().find(|(n, _)| *n == name).map(|(_, t)| (l.as_str(), t)))
                .collect();
            (name, CsvTable::stack(&parts))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoryOutput {
    pub gamma_ours: f64,
    /// Absent outside the EBA scale-free regime.
    pub gamma_eba: Option<f64>,
    pub expected_avg_degree: f64,
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
    #[serde(rename = "E")]
    pub e: f64,
}

impl TheoryOutput {
    pub fn to_text(&self) -> String {
        let eba = self.gamma_eba.map_or_else(
            || "NA".to_string(),
            |g| g.to_string(),
        );
        format!(
            "gamma_ours = {}\ngamma_eba = {eba}\nexpected_avg_degree = {}\nA = {}\nB = {}\nE = {}\n",
            self.gamma_ours, self.expected_avg_degree, self.a, self.b, self.e
        )
    }
}

pub fn theory_output(p: f64, q: f64, m: usize, eps: f64) -> Result<TheoryOutput> {
    let t = TheoryParams::new(p, q, m, eps)?;
    Ok(TheoryOutput {
        gamma_ours: t.gamma(),
        gamma_eba: (q < eba_q_max(p, m)).then(|| gamma_eba(p, q, m)).and_then(|r| r.ok()),
        expected_avg_degree: expected_avg_degree(p, q, m)?,
        a: t.a(),
        b: t.b(),
        e: t.e(),
    })
}

pub fn cmd_theory(p: f64, q: f64, m: usize, eps: f64, format: ReportFormat, out: &mut dyn Write) -> Result<TheoryOutput> {
    let t = theory_output(p, q, m, eps)?;
    let text = match format {
        ReportFormat::Text => t.to_text(),
        ReportFormat::Structured => serde_json::to_string_pretty(&t)? + "\n",
    };
    out.write_all(text.as_bytes())?;
    Ok(t)
}

pub fn cmd_experiment(
    name: &str,
    base_seed: u64,
    replicates: usize,
    out_dir: Option<&Path>,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<ExperimentReport> {
    let name: ExperimentName = name.parse()?;
    let report = run_experiment(name, base_seed, replicates)?;
    let text = match format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Structured => serde_json::to_string_pretty(&report)? + "\n",
    };
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)?;
        let ext = if format == ReportFormat::Text { "txt" } else { "json" };
        fs::write(dir.join(format!("{name}.{ext}")), &text)?;
        fs::write(dir.join(format!("{name}_replicates.csv")), report.replicate_table().to_csv())?;
    }
    out.write_all(text.as_bytes())?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theory_values() {
        let t = theory_output(0.0, 0.525, 1, -0.25).unwrap();
        assert!((t.gamma_ours - 1.7125).abs() < 1e-12);
        let t = theory_output(0.0, 0.0, 1, 0.0).unwrap();
        assert_eq!(t.gamma_ours, 3.0);
        assert_eq!(t.gamma_eba, Some(4.0));
        assert!(theory_output(0.0, 1.0, 1, 0.0).is_err());
        let t = theory_output(0.0, 0.9, 1, 0.0).unwrap();
        assert_eq!(t.gamma_eba, None);
        assert!(t.to_text().contains("gamma_eba = NA"));
    }

    #[test]
    fn labels_disambiguate() {
        let l = labels_for(&["a/x.edges".into(), "b/x.edges".into(), "y.txt".into()]);
        assert_eq!(l, vec!["x#1", "x#2", "y"]);
    }

    #[test]
    fn comparison_table_is_aligned() {
        let k5 = analyze(&Graph::complete(5).unwrap(), &ReportOptions::default()).report;
        let star = analyze(&crate::metrics::test_graphs::star(4), &ReportOptions::default()).report;
        let cmp = Comparison { labels: vec!["K5".into(), "S4".into()], reports: vec![k5, star] };
        let text = cmp.to_text();
        let clustering = text.lines().find(|l| l.starts_with("avg_clustering")).unwrap();
        let cells: Vec<&str> = clustering.split_whitespace().collect();
        assert_eq!(cells, vec!["avg_clustering", "1", "0"]);
        assert_eq!(text.lines().count(), 12);
    }
}
