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

mod common;

use common::{compare_with_oracle, oracle_sweep, random_small_graph, Dense};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use topogen::metrics::{betweenness, metrics_report};
use topogen::Graph;

#[test]
fn hundred_random_graphs_match() {
    oracle_sweep(2024, 100).unwrap();
}

#[test]
fn edge_cases_match() {
    for g in [
        Graph::with_nodes(1),
        Graph::with_nodes(2),
        Graph::with_nodes(8),
        Graph::complete(8).unwrap(),
        Graph::from_edges(8, (0..7).map(|i| (i, i + 1))).unwrap(),
        Graph::from_edges(8, (1..8).map(|i| (0, i))).unwrap(),
        Graph::from_edges(8, (0..8).map(|i| (i, (i + 1) % 8)).map(|(a, b)| (a.min(b), a.max(b)))).unwrap(),
    ] {
        compare_with_oracle(&g).unwrap();
    }
}

#[test]
fn oracle_self_check_on_cycle() {
    // C6: opposite nodes have two shortest paths.
    let g = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6)).map(|(a, b)| (a.min(b), a.max(b)))).unwrap();
    let (node, _) = Dense::of(&g).betweenness();
    // Each node lies on the only path of one distance-2 pair and on one of
    // the two paths of two opposite pairs: 1 + 2 * 1/2.
    for &b in &node {
        assert!((b - 2.0).abs() < 1e-12);
    }
    let b = betweenness(&g);
    assert!(b.node.iter().all(|&x| (x - 2.0).abs() < 1e-12));
}

#[test]
fn report_on_k5() {
    let r = metrics_report(&Graph::complete(5).unwrap());
    assert_eq!(r.avg_degree, 4.0);
    assert_eq!(r.avg_distance, Some(1.0));
    assert_eq!(r.avg_clustering, 1.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_graphs_match(seed in any::<u64>()) {
        let g = random_small_graph(&mut ChaCha8Rng::seed_from_u64(seed), 8);
        prop_assert_eq!(compare_with_oracle(&g), Ok(()));
    }
}
