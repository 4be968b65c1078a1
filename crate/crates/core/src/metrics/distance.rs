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

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

const SOURCES_PER_TASK: usize = 64;

/// Ordered-pair counts by hop distance, self-pairs included at `d = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceDistribution {
    /// `counts[d]` = ordered pairs at distance `d`.
    pub counts: Vec<u64>,
    pub n: usize,
    pub unreachable_pairs: u64,
}

impl DistanceDistribution {
    /// `D(d)`: pair count over `n^2`.
    pub fn fraction(&self, d: usize) -> f64 {
        let n2 = (self.n as f64) * (self.n as f64);
        self.counts.get(d).map_or(0.0, |&c| c as f64 / n2)
    }

    pub fn reachable_pairs(&self) -> u64 {
        self.counts.iter().skip(1).sum()
    }

    /// Mean distance over reachable ordered pairs with `d >= 1`.
    pub fn avg_distance(&self) -> Option<f64> {
        let pairs = self.reachable_pairs();
        if pairs == 0 {
            return None;
        }
        let total: u64 = self.counts.iter().enumerate().map(|(d, &c)| d as u64 * c).sum();
        Some(total as f64 / pairs as f64)
    }

    pub fn diameter(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }
}

/// Breadth-first search from every node.
pub fn distance_distribution(g: &Graph) -> DistanceDistribution {
    let n = g.node_count();
    let sources: Vec<usize> = g.nodes().collect();
    let partials: Vec<(Vec<u64>, u64)> = sources
        .par_chunks(SOURCES_PER_TASK)
        .map(|chunk| {
            let mut counts = Vec::new();
            let mut unreachable = 0u64;
            let mut dist = vec![u32::MAX; n];
            let mut queue = VecDeque::new();
            for &s in chunk {
                let reached = bfs(g, s, &mut dist, &mut queue, &mut counts);
                unreachable += (n - reached) as u64;
            }
            (counts, unreachable)
        })
        .collect();

    let mut counts = Vec::new();
    let mut unreachable_pairs = 0;
    for (part, unreachable) in partials {
        if part.len() > counts.len() {
            counts.resize(part.len(), 0);
        }
        for (d, c) in part.into_iter().enumerate() {
            counts[d] += c;
        }
        unreachable_pairs += unreachable;
    }
    DistanceDistribution {
        counts,
        n,
        unreachable_pairs,
    }
}

/// Adds the distance counts from `s` into `counts`; returns the number of
/// nodes reached (including `s`). Leaves `dist` reset to `u32::MAX`.
fn bfs(g: &Graph, s: usize, dist: &mut [u32], queue: &mut VecDeque<usize>, counts: &mut Vec<u64>) -> usize {
    let mut visited = Vec::new();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        visited.push(v);
        let d = dist[v] as usize;
        if d >= counts.len() {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
        for w in g.neighbors(v) {
            if dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    for &v in &visited {
        dist[v] = u32::MAX;
    }
    visited.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::test_graphs::path;

    #[test]
    fn complete_graph() {
        let d = distance_distribution(&Graph::complete(4).unwrap());
        assert_eq!(d.fraction(0), 0.25);
        assert_eq!(d.fraction(1), 0.75);
        assert_eq!(d.avg_distance(), Some(1.0));
    }

    #[test]
    fn path_of_three() {
        let d = distance_distribution(&path(3));
        assert_eq!(d.counts, vec![3, 4, 2]);
        assert!((d.avg_distance().unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(d.unreachable_pairs, 0);
    }

    #[test]
    fn two_components() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = distance_distribution(&g);
        assert_eq!(d.unreachable_pairs, 8);
        assert_eq!(d.counts, vec![4, 4]);
        assert_eq!(d.counts.iter().sum::<u64>() + d.unreachable_pairs, 16);
    }

    #[test]
    fn isolated_node_has_no_average() {
        let d = distance_distribution(&Graph::with_nodes(1));
        assert_eq!(d.counts, vec![1]);
        assert_eq!(d.avg_distance(), None);
    }
}
