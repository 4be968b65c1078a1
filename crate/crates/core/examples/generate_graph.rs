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

//! Grow a 419-node graph with a negative attachment offset and save it as a
//! canonical edge list.
//!
//! ```text
//! cargo run --example generate_graph
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use topogen::evolve::{evolve_traced, ModelParams, TraceConfig};
use topogen::io::{read_edge_list_file, write_edge_list_file};

pub fn run_example() -> topogen::Result<()> {
    let params = ModelParams::ours(0.462, 0.4, 1, 5, -0.25);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (graph, trace) = evolve_traced(&params, 419, &mut rng, &TraceConfig::default())?;

    println!("nodes {}, edges {}, mean degree {:.3}", graph.node_count(), graph.edge_count(), graph.mean_degree());
    println!(
        "{} events: {} link additions, {} rewires ({} skipped), {} new nodes",
        trace.events, trace.add_links_events, trace.rewire_events, trace.rewires_skipped, trace.add_node_events
    );
    if trace.clamp_warning() {
        println!("note: up to {:.0}% of nodes had their attachment weight clamped to zero", 100.0 * trace.max_clamped_fraction);
    }

    let dir = std::env::temp_dir().join("topogen-generate-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("graph.edges");
    write_edge_list_file(&graph, &path)?;
    assert_eq!(read_edge_list_file(&path)?, graph);
    println!("wrote {}", path.display());
    Ok(())
}

#[allow(dead_code)]
fn main() -> topogen::Result<()> {
    run_example()
}
