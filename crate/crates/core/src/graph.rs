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

//! Undirected simple graph with dense node ids.
//!
//! Besides adjacency, the graph maintains the bookkeeping the evolution
//! engine samples from: the degree sum, a histogram of degrees, and a
//! Fenwick tree over node degrees so that a node can be drawn with
//! probability proportional to its degree (equivalently, a uniformly random
//! edge endpoint) in `O(log n)`.
//!
//! Node ids are assigned in creation order, so a node's id doubles as its
//! birth order.

use std::fmt;

use indexmap::IndexSet;
use rand::Rng;
use rustc_hash::FxBuildHasher;

use crate::error::{Error, Result};
use crate::fenwick::Fenwick;

pub type NodeId = usize;

type NeighborSet = IndexSet<NodeId, FxBuildHasher>;

#[derive(Clone, Default)]
pub struct Graph {
    adj: Vec<NeighborSet>,
    degree_sum: u64,
    edge_count: usize,
    /// `degree_counts[k]` = number of nodes with degree `k`.
    degree_counts: Vec<usize>,
    degree_tree: Fenwick,
}

impl Graph {
    pub fn new() -> Self {
        Graph {
            adj: Vec::new(),
            degree_sum: 0,
            edge_count: 0,
            degree_counts: Vec::new(),
            degree_tree: Fenwick::new(),
        }
    }

    /// Edgeless graph with `n` nodes.
    pub fn with_nodes(n: usize) -> Self {
        let mut g = Graph::new();
        for _ in 0..n {
            g.add_node();
        }
        g
    }

    /// Fully connected graph on `m0` nodes.
    pub fn complete(m0: usize) -> Result<Self> {
        if m0 < 2 {
            return Err(Error::param(format!("complete graph needs m0 >= 2, got {m0}")));
        }
        let mut g = Graph::with_nodes(m0);
        for i in 0..m0 {
            for j in i + 1..m0 {
                g.add_edge(i, j)?;
            }
        }
        Ok(g)
    }

    /// Builds a graph from an edge list, rejecting self-loops and duplicates.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (NodeId, NodeId)>) -> Result<Self> {
        let mut g = Graph::with_nodes(n);
        for (i, j) in edges {
            if !g.add_edge(i, j)? {
                return Err(Error::param(format!("edge {{{i},{j}}} is a self-loop or duplicate")));
            }
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree_sum(&self) -> u64 {
        self.degree_sum
    }

    /// Instantaneous mean degree `degree_sum / n` (0 for the empty graph).
    pub fn mean_degree(&self) -> f64 {
        if self.adj.is_empty() {
            0.0
        } else {
            self.degree_sum as f64 / self.adj.len() as f64
        }
    }

    #[inline]
    pub fn degree(&self, i: NodeId) -> usize {
        self.adj[i].len()
    }

    pub fn max_degree(&self) -> usize {
        self.degree_counts.len().saturating_sub(1)
    }

    /// Number of nodes whose degree is exactly `k`.
    pub fn nodes_with_degree(&self, k: usize) -> usize {
        self.degree_counts.get(k).copied().unwrap_or(0)
    }

    /// Degree histogram as a dense vector indexed by degree.
    pub fn degree_counts(&self) -> &[usize] {
        &self.degree_counts
    }

    pub fn neighbors(&self, i: NodeId) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        self.adj[i].iter().copied()
    }

    #[inline]
    pub fn has_edge(&self, i: NodeId, j: NodeId) -> bool {
        self.adj[i].contains(&j)
    }

    pub fn nodes(&self) -> std::ops::Range<NodeId> {
        0..self.adj.len()
    }

    /// All edges as `(i, j)` with `i < j`, sorted.
    pub fn sorted_edges(&self) -> Vec<(NodeId, NodeId)> {
        let mut edges = Vec::with_capacity(self.edge_count);
        for i in self.nodes() {
            let mut row: Vec<NodeId> = self.adj[i].iter().copied().filter(|&j| j > i).collect();
            row.sort_unstable();
            edges.extend(row.into_iter().map(|j| (i, j)));
        }
        edges
    }

    pub fn add_node(&mut self) -> NodeId {
        let id = self.adj.len();
        self.adj.push(NeighborSet::default());
        self.degree_tree.push(0);
        if self.degree_counts.is_empty() {
            self.degree_counts.push(0);
        }
        self.degree_counts[0] += 1;
        id
    }

    /// Adds `{i, j}`. Returns `Ok(false)` without mutating for a self-loop
    /// or an edge that is already present.
    pub fn add_edge(&mut self, i: NodeId, j: NodeId) -> Result<bool> {
        self.check_node(i)?;
        self.check_node(j)?;
        if i == j || self.adj[i].contains(&j) {
            return Ok(false);
        }
        self.adj[i].insert(j);
        self.adj[j].insert(i);
        self.bump_degree(i, 1);
        self.bump_degree(j, 1);
        self.edge_count += 1;
        self.degree_sum += 2;
        Ok(true)
    }

    /// Removes `{i, j}`. Returns `Ok(false)` if the edge was absent.
    pub fn remove_edge(&mut self, i: NodeId, j: NodeId) -> Result<bool> {
        self.check_node(i)?;
        self.check_node(j)?;
        if !self.adj[i].swap_remove(&j) {
            return Ok(false);
        }
        self.adj[j].swap_remove(&i);
        self.bump_degree(i, -1);
        self.bump_degree(j, -1);
        self.edge_count -= 1;
        self.degree_sum -= 2;
        Ok(true)
    }

    /// Uniformly random neighbor of `i`.
    pub fn random_incident_edge<R: Rng + ?Sized>(&self, i: NodeId, rng: &mut R) -> Result<NodeId> {
        self.check_node(i)?;
        let set = &self.adj[i];
        if set.is_empty() {
            return Err(Error::NoIncidentEdge(i));
        }
        Ok(set[rng.random_range(0..set.len())])
    }

    /// Node drawn with probability `degree / degree_sum`, i.e. the endpoint of
    /// a uniformly random edge. `None` when the graph has no edges.
    pub fn random_node_by_degree<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<NodeId> {
        let total = self.degree_tree.total();
        if total == 0 {
            return None;
        }
        Some(self.degree_tree.find(rng.random_range(0..total)))
    }

    /// Full structural audit; returns a description of the first violation.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let mut sum = 0u64;
        let mut counts = vec![0usize; self.degree_counts.len().max(1)];
        for i in self.nodes() {
            if self.adj[i].contains(&i) {
                return Err(format!("self-loop at {i}"));
            }
            for &j in &self.adj[i] {
                if j >= self.adj.len() || !self.adj[j].contains(&i) {
                    return Err(format!("asymmetric adjacency {i} -> {j}"));
                }
            }
            let k = self.adj[i].len();
            sum += k as u64;
            if k >= counts.len() {
                return Err(format!("degree {k} of node {i} beyond histogram"));
            }
            counts[k] += 1;
            let tree_k = self.degree_tree.prefix(i + 1) - self.degree_tree.prefix(i);
            if tree_k != k as u64 {
                return Err(format!("degree tree holds {tree_k} for node {i} of degree {k}"));
            }
        }
        if sum != self.degree_sum || sum != 2 * self.edge_count as u64 {
            return Err(format!(
                "degree sum {sum}, cached {}, edges {}",
                self.degree_sum, self.edge_count
            ));
        }
        if counts[..] != self.degree_counts[..counts.len().min(self.degree_counts.len())] {
            return Err("degree histogram out of sync".into());
        }
        if self.degree_counts.last().is_some_and(|&c| c == 0) && self.degree_counts.len() > 1 {
            return Err("degree histogram has trailing zero".into());
        }
        Ok(())
    }

    fn check_node(&self, i: NodeId) -> Result<()> {
        if i < self.adj.len() {
            Ok(())
        } else {
            Err(Error::InvalidNode {
                node: i,
                n: self.adj.len(),
            })
        }
    }

    // Called after adjacency has already changed.
    fn bump_degree(&mut self, i: NodeId, delta: i64) {
        let new = self.adj[i].len();
        let old = (new as i64 - delta) as usize;
        self.degree_counts[old] -= 1;
        if new >= self.degree_counts.len() {
            self.degree_counts.resize(new + 1, 0);
        }
        self.degree_counts[new] += 1;
        while self.degree_counts.len() > 1 && *self.degree_counts.last().unwrap() == 0 {
            self.degree_counts.pop();
        }
        self.degree_tree.add(i, delta);
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.node_count() == other.node_count()
            && self.edge_count == other.edge_count
            && self
                .nodes()
                .all(|i| self.adj[i].len() == other.adj[i].len() && self.adj[i].iter().all(|j| other.adj[i].contains(j)))
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("nodes", &self.node_count())
            .field("edges", &self.edge_count)
            .finish()
    }
}
