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

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Clustering {
    /// Local clustering per node; 0 for nodes of degree < 2.
    pub per_node: Vec<f64>,
    /// Mean local clustering over nodes of each degree.
    pub by_degree: BTreeMap<usize, f64>,
    /// Mean local clustering over all nodes.
    pub average: f64,
}

/// Triangles through each node, using the degree-ordered orientation so the
/// work is `O(m^1.5)` rather than `O(sum k^2)`.
pub(crate) fn triangles_per_node(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    let rank = |v: usize| (g.degree(v), v);
    let forward: Vec<Vec<usize>> = g
        .nodes()
        .map(|u| g.neighbors(u).filter(|&w| rank(w) > rank(u)).collect())
        .collect();
    let mut tri = vec![0u64; n];
    let mut mark = vec![false; n];
    for u in g.nodes() {
        for &v in &forward[u] {
            mark[v] = true;
        }
        for &v in &forward[u] {
            for &w in &forward[v] {
                if mark[w] {
                    tri[u] += 1;
                    tri[v] += 1;
                    tri[w] += 1;
                }
            }
        }
        for &v in &forward[u] {
            mark[v] = false;
        }
    }
    tri
}

pub fn local_clustering_by_degree(g: &Graph) -> Clustering {
    let tri = triangles_per_node(g);
    let per_node: Vec<f64> = g
        .nodes()
        .map(|v| {
            let k = g.degree(v) as f64;
            if k < 2.0 {
                0.0
            } else {
                tri[v] as f64 / (k * (k - 1.0) / 2.0)
            }
        })
        .collect();

    let mut sums: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for v in g.nodes() {
        let e = sums.entry(g.degree(v)).or_insert((0.0, 0));
        e.0 += per_node[v];
        e.1 += 1;
    }
    let by_degree = sums.into_iter().map(|(k, (s, c))| (k, s / c as f64)).collect();
    let average = if per_node.is_empty() {
        0.0
    } else {
        per_node.iter().sum::<f64>() / per_node.len() as f64
    };
    Clustering {
        per_node,
        by_degree,
        average,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::test_graphs::star;

    #[test]
    fn complete_graph_is_fully_clustered() {
        let c = local_clustering_by_degree(&Graph::complete(4).unwrap());
        assert_eq!(c.by_degree.get(&3), Some(&1.0));
        assert_eq!(c.average, 1.0);
    }

    #[test]
    fn star_has_no_triangles() {
        let c = local_clustering_by_degree(&star(4));
        assert!(c.per_node.iter().all(|&x| x == 0.0));
        assert_eq!(c.average, 0.0);
    }

    #[test]
    fn triangle_with_pendant() {
        // Triangle 0-1-2 with node 3 hanging off 2.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let c = local_clustering_by_degree(&g);
        assert_eq!(c.per_node[0], 1.0);
        assert_eq!(c.per_node[1], 1.0);
        assert!((c.per_node[2] - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(c.per_node[3], 0.0);
        assert!((c.average - 7.0 / 12.0).abs() < 1e-15);
    }
}
