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

//! Replicated runs with aggregate statistics. Runs the 419-node
//! configuration by default; pass `table5` or `section61` for the others.
//!
//! ```text
//! cargo run --release --example replicate_experiment [NAME] [REPLICATES]
//! ```

use topogen::experiment::{run_experiment, ExperimentName};

pub fn run_example() -> topogen::Result<()> {
    run(ExperimentName::Table6, 3)
}

fn run(name: ExperimentName, replicates: usize) -> topogen::Result<()> {
    let report = run_experiment(name, 1, replicates)?;
    for r in &report.results {
        let gamma = r.summary("degree_exponent");
        println!(
            "{:<10} theory gamma {:>6}  fitted {}  mean |R| {:.3}",
            r.config.label,
            r.theory_gamma.map_or("NA".into(), |g| format!("{g:.3}")),
            gamma.map_or("NA".into(), |s| s.to_string()),
            r.mean_abs_r().unwrap_or(f64::NAN),
        );
        for field in ["avg_degree", "max_degree", "avg_distance", "avg_clustering", "rich_club_exponent"] {
            if let Some(s) = r.summary(field) {
                println!("           {field:<20} {s}");
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> topogen::Result<()> {
    let mut args = std::env::args().skip(1);
    let name: ExperimentName = args.next().as_deref().unwrap_or("table6").parse()?;
    let replicates = match args.next() {
        Some(s) => s.parse().map_err(|e| topogen::Error::InvalidParameter(format!("replicates '{s}': {e}")))?,
        None => 5,
    };
    run(name, replicates)
}
