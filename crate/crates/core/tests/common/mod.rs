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

//! Brute-force reference implementations for tiny graphs.
//!
//! Everything here works from an adjacency matrix: Floyd-Warshall distances,
//! explicit enumeration of every shortest path, and direct neighbor-pair
//! checks. Slow and obviously correct is the point.

#![allow(dead_code, clippy::needless_range_loop)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topogen::metrics::{betweenness, distance_distribution, local_clustering_by_degree, rich_club};
use topogen::Graph;

const INF: usize = usize::MAX;

/// Raw node values and `((i, j), value)` per edge.
pub type RawBetweenness = (Vec<f64>, Vec<((usize, usize), f64)>);

pub struct Dense {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Dense {
    pub fn of(g: &Graph) -> Dense {
        let n = g.node_count();
        let mut adj = vec![vec![false; n]; n];
        for (i, j) in g.sorted_edges() {
            adj[i][j] = true;
            adj[j][i] = true;
        }
        Dense { n, adj }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    pub fn dist(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut d = vec![vec![INF; n]; n];
        for i in 0..n {
            d[i][i] = 0;
            for j in 0..n {
                if self.adj[i][j] {
                    d[i][j] = 1;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] != INF && d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        d
    }

    /// `(counts by distance over ordered pairs, unreachable ordered pairs)`.
    pub fn distance_counts(&self) -> (Vec<u64>, u64) {
        let d = self.dist();
        let mut counts = Vec::new();
        let mut unreachable = 0;
        for row in &d {
            for &x in row {
                if x == INF {
                    unreachable += 1;
                } else {
                    if counts.len() <= x {
                        counts.resize(x + 1, 0);
                    }
                    counts[x] += 1;
                }
            }
        }
        (counts, unreachable)
    }

    /// Local clustering as an exact fraction `(links among neighbors, pairs)`.
    pub fn clustering_fraction(&self, v: usize) -> (usize, usize) {
        let nb: Vec<usize> = (0..self.n).filter(|&w| self.adj[v][w]).collect();
        let k = nb.len();
        if k < 2 {
            return (0, 1);
        }
        let mut links = 0;
        for a in 0..k {
            for b in a + 1..k {
                if self.adj[nb[a]][nb[b]] {
                    links += 1;
                }
            }
        }
        (links, k * (k - 1) / 2)
    }

    /// Every shortest path between `s` and `t`, as node sequences.
    pub fn shortest_paths(&self, s: usize, t: usize, d: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if d[s][t] == INF || s == t {
            return out;
        }
        let mut path = vec![s];
        self.extend_paths(t, d, &mut path, &mut out);
        out
    }

    fn extend_paths(&self, t: usize, d: &[Vec<usize>], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let u = *path.last().unwrap();
        if u == t {
            out.push(path.clone());
            return;
        }
        for w in 0..self.n {
            if self.adj[u][w] && d[w][t] != INF && d[w][t] + 1 == d[u][t] {
                path.push(w);
                self.extend_paths(t, d, path, out);
                path.pop();
            }
        }
    }

    /// Raw node and edge betweenness over unordered pairs, by path enumeration.
    pub fn betweenness(&self) -> RawBetweenness {
        let n = self.n;
        let d = self.dist();
        let mut node = vec![0.0; n];
        let mut edge = vec![vec![0.0; n]; n];
        for s in 0..n {
            for t in s + 1..n {
                let paths = self.shortest_paths(s, t, &d);
                if paths.is_empty() {
                    continue;
                }
                let total = paths.len() as f64;
                let mut through = vec![0usize; n];
                let mut along = vec![vec![0usize; n]; n];
                for p in &paths {
                    for &v in &p[1..p.len() - 1] {
                        through[v] += 1;
                    }
                    for w in p.windows(2) {
                        let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                        along[a][b] += 1;
                    }
                }
                for v in 0..n {
                    node[v] += through[v] as f64 / total;
                    for u in v + 1..n {
                        edge[v][u] += along[v][u] as f64 / total;
                    }
                }
            }
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.adj[i][j] {
                    edges.push(((i, j), edge[i][j]));
                }
            }
        }
        (node, edges)
    }

    /// Rich-club curve with the top-`r` set chosen by sorting explicitly.
    pub fn rich_club(&self) -> Vec<(f64, f64)> {
        let n = self.n;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.degree(b).cmp(&self.degree(a)).then(a.cmp(&b)));
        (2..=n)
            .map(|r| {
                let top = &order[..r];
                let mut links = 0;
                for (x, &a) in top.iter().enumerate() {
                    for &b in &top[x + 1..] {
                        if self.adj[a][b] {
                            links += 1;
                        }
                    }
                }
                (r as f64 / n as f64, links as f64 / (r * (r - 1) / 2) as f64)
            })
            .collect()
    }
}

/// Erdos-Renyi-style graph with `n` in `1..=max_n` and a random density.
pub fn random_small_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.random_range(1..=max_n);
    let density: f64 = rng.random();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < density {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9
}

/// Compares every all-pairs metric of `g` with the brute-force oracle.
pub fn compare_with_oracle(g: &Graph) -> Result<(), String> {
    let o = Dense::of(g);

    let dd = distance_distribution(g);
    let (counts, unreachable) = o.distance_counts();
    if dd.counts != counts || dd.unreachable_pairs != unreachable {
        return Err(format!(
            "distance counts {:?}/{} vs oracle {:?}/{}",
            dd.counts, dd.unreachable_pairs, counts, unreachable
        ));
    }

    let c = local_clustering_by_degree(g);
    for v in 0..o.n {
        let (num, den) = o.clustering_fraction(v);
        // Both sides are a single integer division, so they must agree exactly.
        if c.per_node[v] != num as f64 / den as f64 {
            return Err(format!("clustering of node {v}: {} vs {num}/{den}", c.per_node[v]));
        }
    }

    if o.n >= 1 {
        let b = betweenness(g);
        let (node, edges) = o.betweenness();
        for v in 0..o.n {
            if !close(b.node[v], node[v]) {
                return Err(format!("node betweenness of {v}: {} vs {}", b.node[v], node[v]));
            }
        }
        let got: Vec<_> = b.edges.iter().copied().zip(b.edge.iter().copied()).collect();
        if got.len() != edges.len() {
            return Err(format!("edge count {} vs {}", got.len(), edges.len()));
        }
        for ((e1, x), (e2, y)) in got.iter().zip(&edges) {
            if e1 != e2 || !close(*x, *y) {
                return Err(format!("edge betweenness {e1:?}={x} vs {e2:?}={y}"));
            }
        }
    }

    let rc = rich_club(g);
    let orc = o.rich_club();
    if rc.len() != orc.len() || rc.iter().zip(&orc).any(|(a, b)| a.0 != b.0 || a.1 != b.1) {
        return Err(format!("rich club {rc:?} vs {orc:?}"));
    }
    Ok(())
}

/// Runs the oracle comparison on `count` random graphs with at most 8 nodes.
pub fn oracle_sweep(seed: u64, count: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let g = random_small_graph(&mut rng, 8);
        compare_with_oracle(&g).map_err(|e| format!("graph {i} ({:?}): {e}", g.sorted_edges()))?;
    }
    Ok(())
}
