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

//! Exact shortest-path betweenness (Brandes accumulation, unweighted).

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, NodeId};

const SOURCES_PER_TASK: usize = 32;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Betweenness {
    /// Raw node betweenness: over unordered pairs `{s, t}`, the fraction of
    /// shortest `s-t` paths through the node.
    pub node: Vec<f64>,
    /// Canonical edges `(i, j)`, `i < j`, aligned with `edge`.
    pub edges: Vec<(NodeId, NodeId)>,
    /// Raw edge betweenness, same convention as `node`.
    pub edge: Vec<f64>,
}

impl Betweenness {
    fn n(&self) -> usize {
        self.node.len()
    }

    /// Node values divided by `(n-1)(n-2)/2`; all zero for `n < 3`.
    pub fn node_normalized(&self) -> Vec<f64> {
        let n = self.n() as f64;
        let norm = (n - 1.0) * (n - 2.0) / 2.0;
        self.node.iter().map(|&b| if norm > 0.0 { b / norm } else { 0.0 }).collect()
    }

    /// Edge values divided by `n(n-1)/2`.
    pub fn edge_normalized(&self) -> Vec<f64> {
        let n = self.n() as f64;
        let norm = n * (n - 1.0) / 2.0;
        self.edge.iter().map(|&b| if norm > 0.0 { b / norm } else { 0.0 }).collect()
    }

    pub fn avg_node_normalized(&self) -> f64 {
        mean(&self.node_normalized())
    }

    pub fn avg_edge_normalized(&self) -> f64 {
        mean(&self.edge_normalized())
    }
}

fn mean(v: &[f64]) -> f64 {
    if v.is_empty() {
        0.0
    } else {
        v.iter().sum::<f64>() / v.len() as f64
    }
}

/// Compressed adjacency with an edge id per slot.
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
    edge_ids: Vec<usize>,
}

impl Csr {
    fn build(g: &Graph, edges: &[(NodeId, NodeId)]) -> Self {
        let n = g.node_count();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for v in g.nodes() {
            offsets.push(offsets[v] + g.degree(v));
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; offsets[n]];
        let mut edge_ids = vec![0; offsets[n]];
        for (id, &(a, b)) in edges.iter().enumerate() {
            for (x, y) in [(a, b), (b, a)] {
                targets[fill[x]] = y;
                edge_ids[fill[x]] = id;
                fill[x] += 1;
            }
        }
        Csr {
            offsets,
            targets,
            edge_ids,
        }
    }

    fn slots(&self, v: NodeId) -> std::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }
}

struct Workspace {
    dist: Vec<u32>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<NodeId>,
    queue: VecDeque<NodeId>,
}

pub fn betweenness(g: &Graph) -> Betweenness {
    let n = g.node_count();
    let edges = g.sorted_edges();
    let csr = Csr::build(g, &edges);
    let sources: Vec<NodeId> = g.nodes().collect();

    let partials: Vec<(Vec<f64>, Vec<f64>)> = sources
        .par_chunks(SOURCES_PER_TASK)
        .map(|chunk| {
            let mut node = vec![0.0; n];
            let mut edge = vec![0.0; edges.len()];
            let mut ws = Workspace {
                dist: vec![u32::MAX; n],
                sigma: vec![0.0; n],
                delta: vec![0.0; n],
                order: Vec::with_capacity(n),
                queue: VecDeque::new(),
            };
            for &s in chunk {
                accumulate(&csr, s, &mut ws, &mut node, &mut edge);
            }
            (node, edge)
        })
        .collect();

    let mut node = vec![0.0; n];
    let mut edge = vec![0.0; edges.len()];
    for (pn, pe) in partials {
        node.iter_mut().zip(pn).for_each(|(a, b)| *a += b);
        edge.iter_mut().zip(pe).for_each(|(a, b)| *a += b);
    }
    // Every unordered pair was visited from both ends.
    node.iter_mut().for_each(|b| *b /= 2.0);
    edge.iter_mut().for_each(|b| *b /= 2.0);
    Betweenness { node, edges, edge }
}

fn accumulate(csr: &Csr, s: NodeId, ws: &mut Workspace, node: &mut [f64], edge: &mut [f64]) {
    ws.order.clear();
    ws.dist[s] = 0;
    ws.sigma[s] = 1.0;
    ws.queue.push_back(s);
    while let Some(v) = ws.queue.pop_front() {
        ws.order.push(v);
        let next = ws.dist[v] + 1;
        for slot in csr.slots(v) {
            let w = csr.targets[slot];
            if ws.dist[w] == u32::MAX {
                ws.dist[w] = next;
                ws.queue.push_back(w);
            }
            if ws.dist[w] == next {
                ws.sigma[w] += ws.sigma[v];
            }
        }
    }
    for &w in ws.order.iter().rev() {
        let dw = ws.dist[w];
        if dw == 0 {
            continue;
        }
        let coeff = (1.0 + ws.delta[w]) / ws.sigma[w];
        for slot in csr.slots(w) {
            let v = csr.targets[slot];
            if ws.dist[v] + 1 == dw {
                let c = ws.sigma[v] * coeff;
                edge[csr.edge_ids[slot]] += c;
                ws.delta[v] += c;
            }
        }
        node[w] += ws.delta[w];
    }
    for &v in &ws.order {
        ws.dist[v] = u32::MAX;
        ws.sigma[v] = 0.0;
        ws.delta[v] = 0.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::test_graphs::{path, star};

    #[test]
    fn path_middle_node() {
        let b = betweenness(&path(3));
        assert_eq!(b.node, vec![0.0, 1.0, 0.0]);
        assert_eq!(b.node_normalized(), vec![0.0, 1.0, 0.0]);
        // Each edge carries its own pair plus the end-to-end pair.
        assert_eq!(b.edge, vec![2.0, 2.0]);
    }

    #[test]
    fn complete_graph_has_no_node_betweenness() {
        let b = betweenness(&Graph::complete(4).unwrap());
        assert!(b.node.iter().all(|&x| x == 0.0));
        assert!(b.edge.iter().all(|&x| x == 1.0));
    }

    #[test]
    fn star_centre_carries_every_pair() {
        let b = betweenness(&star(4));
        assert_eq!(b.node[0], 6.0);
        assert_eq!(b.node_normalized()[0], 1.0);
        assert!(b.node[1..].iter().all(|&x| x == 0.0));
    }

    #[test]
    fn square_splits_credit() {
        // 4-cycle: each node lies on one of the two shortest paths of the
        // opposite pair.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = betweenness(&g);
        assert!(b.node.iter().all(|&x| (x - 0.5).abs() < 1e-15));
    }
}
