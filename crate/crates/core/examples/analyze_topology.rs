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

//! Full metric battery for one graph: the summary report and the curves
//! behind it.
//!
//! ```text
//! cargo run --example analyze_topology [EDGE_LIST]
//! ```
//!
//! Without an argument a 419-node graph is generated.

use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use topogen::evolve::{evolve, ModelParams};
use topogen::io::{curve_tables, read_edge_list_file};
use topogen::metrics::{analyze, ReportOptions};

pub fn run_example() -> topogen::Result<()> {
    run(None)
}

fn run(path: Option<&Path>) -> topogen::Result<()> {
    let graph = match path {
        Some(path) => read_edge_list_file(path)?,
        None => evolve(&ModelParams::ours(0.462, 0.4, 1, 5, -0.25), 419, &mut ChaCha8Rng::seed_from_u64(3))?,
    };
    let analysis = analyze(&graph, &ReportOptions::default());
    print!("{}", analysis.report);

    if let Some(d) = &analysis.distances {
        println!("\ndistance distribution (diameter {}):", d.diameter());
        for h in 1..d.counts.len() {
            println!("  {h} hops: {:.4}", d.fraction(h));
        }
    }
    if let Some(fit) = &analysis.degree_fit {
        println!(
            "\ndegree fit used {} bins, trimmed {} nodes ({:.2}%)",
            fit.points_used,
            fit.nodes_trimmed,
            100.0 * fit.trim_fraction
        );
    }
    println!("\ncurves available as CSV:");
    for (name, table) in curve_tables(&analysis) {
        println!("  {name:<28} {} rows, columns {}", table.rows.len(), table.header.join(","));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> topogen::Result<()> {
    run(std::env::args().nth(1).map(PathBuf::from).as_deref())
}
