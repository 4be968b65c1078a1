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

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use super::{
    betweenness, degree_histogram, distance_distribution, local_clustering_by_degree, rich_club, Betweenness,
    Clustering, DegreeHistogram, DistanceDistribution,
};
use crate::error::{Error, Result};
use crate::fit::{fit_degree_exponent, fit_rich_club_exponent, FitResult};
use crate::graph::Graph;

/// Graphs above this many nodes skip distance and betweenness by default.
pub const DEFAULT_ALL_PAIRS_LIMIT: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// Largest node count for which the `O(nm)` all-pairs metrics run.
    pub all_pairs_limit: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            all_pairs_limit: DEFAULT_ALL_PAIRS_LIMIT,
        }
    }
}

/// Summary row for one graph. Optional fields are absent when a fit has too
/// few points or the all-pairs metrics were skipped.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub n: usize,
    pub edge_count: usize,
    pub avg_degree: f64,
    pub max_degree: usize,
    pub degree_exponent: Option<f64>,
    pub degree_fit_r: Option<f64>,
    pub avg_distance: Option<f64>,
    pub normalized_avg_node_betweenness: Option<f64>,
    pub normalized_avg_edge_betweenness: Option<f64>,
    pub avg_clustering: f64,
    pub rich_club_exponent: Option<f64>,
}

/// Everything computed for a graph: the report plus the curves behind it.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub report: MetricsReport,
    pub histogram: DegreeHistogram,
    /// Degree of each node, indexed by id.
    pub degrees: Vec<usize>,
    pub degree_fit: Option<FitResult>,
    pub distances: Option<DistanceDistribution>,
    pub clustering: Clustering,
    pub betweenness: Option<Betweenness>,
    pub rich_club: Vec<(f64, f64)>,
    pub rich_club_fit: Option<FitResult>,
}

pub fn metrics_report(g: &Graph) -> MetricsReport {
    metrics_report_with(g, &ReportOptions::default())
}

pub fn metrics_report_with(g: &Graph, opts: &ReportOptions) -> MetricsReport {
    analyze(g, opts).report
}

pub fn analyze(g: &Graph, opts: &ReportOptions) -> Analysis {
    let n = g.node_count();
    let histogram = degree_histogram(g);
    let degree_fit = fit_degree_exponent(&histogram).ok();
    let all_pairs = n <= opts.all_pairs_limit;
    let distances = all_pairs.then(|| distance_distribution(g));
    let betweenness = (all_pairs && n >= 2).then(|| betweenness(g));
    let clustering = local_clustering_by_degree(g);
    let rich_club = rich_club(g);
    let rich_club_fit = fit_rich_club_exponent(&rich_club).ok();

    let report = MetricsReport {
        n,
        edge_count: g.edge_count(),
        avg_degree: g.mean_degree(),
        max_degree: g.max_degree(),
        degree_exponent: degree_fit.map(|f| f.exponent),
        degree_fit_r: degree_fit.map(|f| f.correlation),
        avg_distance: distances.as_ref().and_then(|d| d.avg_distance()),
        normalized_avg_node_betweenness: betweenness.as_ref().map(|b| b.avg_node_normalized()),
        normalized_avg_edge_betweenness: betweenness.as_ref().map(|b| b.avg_edge_normalized()),
        avg_clustering: clustering.average,
        rich_club_exponent: rich_club_fit.map(|f| f.exponent),
    };
    Analysis {
        report,
        histogram,
        degrees: g.nodes().map(|v| g.degree(v)).collect(),
        degree_fit,
        distances,
        clustering,
        betweenness,
        rich_club,
        rich_club_fit,
    }
}

const ABSENT: &str = "NA";

/// A report field rendered as text.
fn show(v: Option<f64>) -> String {
    v.map_or_else(|| ABSENT.to_string(), |x| x.to_string())
}

impl MetricsReport {
    /// Every field as an optional float, in display order.
    pub fn numeric_fields(&self) -> Vec<(&'static str, Option<f64>)> {
        vec![
            ("n", Some(self.n as f64)),
            ("edge_count", Some(self.edge_count as f64)),
            ("avg_degree", Some(self.avg_degree)),
            ("max_degree", Some(self.max_degree as f64)),
            ("degree_exponent", self.degree_exponent),
            ("degree_fit_r", self.degree_fit_r),
            ("avg_distance", self.avg_distance),
            ("normalized_avg_node_betweenness", self.normalized_avg_node_betweenness),
            ("normalized_avg_edge_betweenness", self.normalized_avg_edge_betweenness),
            ("avg_clustering", Some(self.avg_clustering)),
            ("rich_club_exponent", self.rich_club_exponent),
        ]
    }

    /// `(key, value)` rows in display order.
    pub fn rows(&self) -> Vec<(&'static str, String)> {
        vec![
            ("n", self.n.to_string()),
            ("edge_count", self.edge_count.to_string()),
            ("avg_degree", self.avg_degree.to_string()),
            ("max_degree", self.max_degree.to_string()),
            ("degree_exponent", show(self.degree_exponent)),
            ("degree_fit_r", show(self.degree_fit_r)),
            ("avg_distance", show(self.avg_distance)),
            ("normalized_avg_node_betweenness", show(self.normalized_avg_node_betweenness)),
            ("normalized_avg_edge_betweenness", show(self.normalized_avg_edge_betweenness)),
            ("avg_clustering", self.avg_clustering.to_string()),
            ("rich_club_exponent", show(self.rich_club_exponent)),
        ]
    }

    /// Line-oriented `key = value` form; floats use shortest round-trip notation.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.rows() {
            let _ = writeln!(out, "{k} = {v}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut r = MetricsReport {
            n: 0,
            edge_count: 0,
            avg_degree: 0.0,
            max_degree: 0,
            degree_exponent: None,
            degree_fit_r: None,
            avg_distance: None,
            normalized_avg_node_betweenness: None,
            normalized_avg_edge_betweenness: None,
            avg_clustering: 0.0,
            rich_club_exponent: None,
        };
        let mut seen = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: String| Error::Parse { line: idx + 1, message };
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| bad(format!("expected 'key = value', got '{line}'")))?;
            let int = || value.parse::<usize>().map_err(|e| bad(format!("{key}: {e}")));
            let float = || value.parse::<f64>().map_err(|e| bad(format!("{key}: {e}")));
            let opt = || if value == ABSENT { Ok(None) } else { float().map(Some) };
            match key {
                "n" => r.n = int()?,
                "edge_count" => r.edge_count = int()?,
                "avg_degree" => r.avg_degree = float()?,
                "max_degree" => r.max_degree = int()?,
                "degree_exponent" => r.degree_exponent = opt()?,
                "degree_fit_r" => r.degree_fit_r = opt()?,
                "avg_distance" => r.avg_distance = opt()?,
                "normalized_avg_node_betweenness" => r.normalized_avg_node_betweenness = opt()?,
                "normalized_avg_edge_betweenness" => r.normalized_avg_edge_betweenness = opt()?,
                "avg_clustering" => r.avg_clustering = float()?,
                "rich_club_exponent" => r.rich_club_exponent = opt()?,
                other => return Err(bad(format!("unknown key '{other}'"))),
            }
            seen += 1;
        }
        if seen < 11 {
            return Err(Error::Parse {
                line: text.lines().count(),
                message: format!("report has {seen} of 11 fields"),
            });
        }
        Ok(r)
    }
}

impl fmt::Display for MetricsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
