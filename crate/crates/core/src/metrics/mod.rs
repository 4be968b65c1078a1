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

//! Topology metrics for comparing AS-level graphs.

mod betweenness;
mod clustering;
mod distance;
mod report;
mod rich_club;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

pub use betweenness::{betweenness, Betweenness};
pub use clustering::{local_clustering_by_degree, Clustering};
pub use distance::{distance_distribution, DistanceDistribution};
pub use report::{analyze, metrics_report, metrics_report_with, Analysis, MetricsReport, ReportOptions, DEFAULT_ALL_PAIRS_LIMIT};
pub use rich_club::rich_club;

/// Degree -> number of nodes with that degree. Zero counts are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHistogram {
    entries: BTreeMap<usize, usize>,
    n: usize,
}

impl DegreeHistogram {
    pub fn from_counts(counts: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut h = DegreeHistogram::default();
        for (k, c) in counts {
            if c > 0 {
                *h.entries.entry(k).or_insert(0) += c;
                h.n += c;
            }
        }
        h
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn count(&self, k: usize) -> usize {
        self.entries.get(&k).copied().unwrap_or(0)
    }

    /// `(degree, count)` in increasing degree order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, usize)> + '_ {
        self.entries.iter().map(|(&k, &c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(degree, fraction of nodes with degree >= k)` for every present degree.
    pub fn ccdf(&self) -> Vec<(usize, f64)> {
        let mut out = Vec::with_capacity(self.entries.len());
        let mut at_least = self.n;
        for (k, c) in self.iter() {
            out.push((k, at_least as f64 / self.n as f64));
            at_least -= c;
        }
        out
    }
}

pub fn degree_histogram(g: &Graph) -> DegreeHistogram {
    DegreeHistogram::from_counts(g.degree_counts().iter().copied().enumerate())
}

pub fn ccdf(h: &DegreeHistogram) -> Vec<(usize, f64)> {
    h.ccdf()
}

#[cfg(test)]
pub(crate) mod test_graphs {
    use crate::graph::Graph;

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_graphs::*;
    use super::*;

    #[test]
    fn histograms_of_small_graphs() {
        let k5 = degree_histogram(&Graph::complete(5).unwrap());
        assert_eq!(k5.iter().collect::<Vec<_>>(), vec![(4, 5)]);
        let s4 = degree_histogram(&star(4));
        assert_eq!(s4.iter().collect::<Vec<_>>(), vec![(1, 4), (4, 1)]);
        let p3 = degree_histogram(&path(3));
        assert_eq!(p3.iter().collect::<Vec<_>>(), vec![(1, 2), (2, 1)]);
    }

    #[test]
    fn ccdf_examples() {
        assert_eq!(degree_histogram(&star(4)).ccdf(), vec![(1, 1.0), (4, 0.2)]);
        assert_eq!(degree_histogram(&Graph::complete(5).unwrap()).ccdf(), vec![(4, 1.0)]);
    }

    mod props {
        use super::*;
        use crate::evolve::{evolve, ModelParams};
        use proptest::prelude::*;
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn ccdf_non_increasing_and_handshake(seed in any::<u64>()) {
                let params = ModelParams::ours(0.3, 0.2, 2, 4, 0.1);
                let g = evolve(&params, 200, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
                let h = degree_histogram(&g);
                let c = h.ccdf();
                prop_assert_eq!(c[0].1, 1.0);
                prop_assert!(c.windows(2).all(|w| w[0].1 >= w[1].1));
                let handshake: usize = h.iter().map(|(k, n)| k * n).sum();
                prop_assert_eq!(handshake, 2 * g.edge_count());
                prop_assert_eq!(h.node_count(), g.node_count());
            }
        }
    }
}
