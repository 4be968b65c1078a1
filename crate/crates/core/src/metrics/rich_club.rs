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

use crate::graph::Graph;

/// Rich-club connectivity `(r/n, phi(r))` for club sizes `r = 2..=n`.
///
/// Nodes are ranked by decreasing degree, ties by ascending id; `phi(r)` is
/// the number of links among the top `r` nodes over `r(r-1)/2`.
pub fn rich_club(g: &Graph) -> Vec<(f64, f64)> {
    let n = g.node_count();
    let mut order: Vec<usize> = g.nodes().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut rank = vec![0usize; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }

    let mut out = Vec::with_capacity(n.saturating_sub(1));
    let mut links = 0u64;
    for (r, &v) in order.iter().enumerate() {
        links += g.neighbors(v).filter(|&w| rank[w] < r).count() as u64;
        let size = (r + 1) as f64;
        if r >= 1 {
            out.push((size / n as f64, links as f64 / (size * (size - 1.0) / 2.0)));
        }
    }
    out
}
