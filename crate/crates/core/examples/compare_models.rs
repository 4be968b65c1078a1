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

//! BA, EBA and the offset model grown to the same size, compared side by
//! side with overlaid degree distributions.
//!
//! ```text
//! cargo run --example compare_models
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use topogen::commands::Comparison;
use topogen::evolve::{evolve, ModelParams};
use topogen::io::{curve_tables, CsvTable};
use topogen::metrics::{analyze, ReportOptions};

pub fn run_example() -> topogen::Result<()> {
    let models = [
        ("ba", ModelParams::ba(4, 5)),
        ("eba", ModelParams::eba(0.4, 0.1, 2, 5)),
        ("offset", ModelParams::ours(0.462, 0.4, 1, 5, -0.25)),
    ];
    let mut analyses = Vec::new();
    for (name, params) in &models {
        let g = evolve(params, 419, &mut ChaCha8Rng::seed_from_u64(5))?;
        analyses.push((name.to_string(), analyze(&g, &ReportOptions::default())));
    }

    let cmp = Comparison {
        labels: analyses.iter().map(|(n, _)| n.clone()).collect(),
        reports: analyses.iter().map(|(_, a)| a.report.clone()).collect(),
    };
    print!("{}", cmp.to_text());

    let tables: Vec<_> = analyses.iter().map(|(n, a)| (n.as_str(), curve_tables(a))).collect();
    let ccdf: Vec<(&str, &CsvTable)> = tables
        .iter()
        .map(|(n, ts)| (*n, &ts.iter().find(|(name, _)| *name == "degree_ccdf.csv").unwrap().1))
        .collect();
    let overlay = CsvTable::stack(&ccdf);
    println!("\noverlaid CCDF: {} rows, first lines:", overlay.rows.len());
    for line in overlay.to_csv().lines().take(4) {
        println!("  {line}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> topogen::Result<()> {
    run_example()
}
