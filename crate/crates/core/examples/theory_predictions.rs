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

//! Continuum predictions: exponents, mean degree, and the degree trajectory
//! of individual nodes checked against a traced simulation.
//!
//! ```text
//! cargo run --example theory_predictions
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use topogen::evolve::{evolve_traced, ModelParams, TraceConfig};
use topogen::theory::{degree_trajectory, expected_avg_degree, gamma_eba, gamma_ours, TheoryParams};

pub fn run_example() -> topogen::Result<()> {
    for (q, eps) in [(0.525, -0.25), (0.4, -0.17), (0.0, 0.0), (0.2, 0.56)] {
        println!("q={q:<5} eps={eps:<5} gamma={:.4}", gamma_ours(q, eps)?);
    }
    let (p, q, m) = (0.2, 0.1, 2);
    let kbar = expected_avg_degree(p, q, m)?;
    println!(
        "\nEBA p={p} q={q} m={m}: mean degree {kbar:.3}, gamma {:.4} (= offset model with eps = 1/k: {:.4})",
        gamma_eba(p, q, m)?,
        gamma_ours(q, 1.0 / kbar)?
    );

    // Nodes born right after the seed clique sit below the continuum curve;
    // track later arrivals and average over runs.
    let params = ModelParams::ours(0.2, 0.1, 2, 5, 0.5);
    let theory = TheoryParams::new(params.p, params.q, params.m, params.eps)?;
    let tracked: Vec<usize> = (300..360).collect();
    let cfg = TraceConfig { tracked_nodes: tracked.clone(), sample_every: 2_000 };
    let runs = 8;
    let mut sums = std::collections::BTreeMap::<u64, (f64, f64, usize)>::new();
    for seed in 0..runs {
        let (_, trace) = evolve_traced(&params, 5_000, &mut ChaCha8Rng::seed_from_u64(seed), &cfg)?;
        for s in &trace.samples {
            if s.event <= s.birth_event {
                continue;
            }
            let predicted = degree_trajectory(s.event as f64, s.birth_event as f64, &theory)?;
            let e = sums.entry(s.event).or_default();
            e.0 += s.degree as f64;
            e.1 += predicted;
            e.2 += 1;
        }
    }
    println!("\nmean degree of nodes 300..360 (gamma {:.3}):", theory.gamma());
    for (event, (sim, pred, n)) in sums {
        println!("  event {event:>5}: simulated {:7.2}, continuum {:7.2}", sim / n as f64, pred / n as f64);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> topogen::Result<()> {
    run_example()
}
