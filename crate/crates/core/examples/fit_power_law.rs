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

//! Degree-exponent regression on a noiseless histogram and on a simulated
//! graph, and the rich-club slope.
//!
//! ```text
//! cargo run --example fit_power_law
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use topogen::evolve::{evolve, ModelParams};
use topogen::metrics::{degree_histogram, rich_club, DegreeHistogram};
use topogen::theory::gamma_ours;
use topogen::{fit_degree_exponent, fit_rich_club_exponent};

pub fn run_example() -> topogen::Result<()> {
    for gamma in [1.5, 2.5, 3.5] {
        let h = DegreeHistogram::from_counts(
            (1..=100usize)
                .map(|k| (k, (1e6 * (k as f64).powf(-gamma)).round() as usize))
                .filter(|&(_, c)| c > 0),
        );
        let fit = fit_degree_exponent(&h)?;
        println!("synthetic gamma {gamma}: fitted {:.4}, R {:.5}", fit.exponent, fit.correlation);
    }

    let (p, q, eps) = (0.35625, 0.525, -0.25);
    let graph = evolve(&ModelParams::ours(p, q, 1, 5, eps), 10_000, &mut ChaCha8Rng::seed_from_u64(11))?;
    let fit = fit_degree_exponent(&degree_histogram(&graph))?;
    println!(
        "\nsimulated (q={q}, eps={eps}): fitted {:.4} vs continuum {:.4}, R {:.4}, {} bins, {} nodes trimmed",
        fit.exponent,
        gamma_ours(q, eps)?,
        fit.correlation,
        fit.points_used,
        fit.nodes_trimmed
    );

    let rc = fit_rich_club_exponent(&rich_club(&graph))?;
    println!("rich-club slope {:.4} (R {:.4})", rc.exponent, rc.correlation);
    Ok(())
}

#[allow(dead_code)]
fn main() -> topogen::Result<()> {
    run_example()
}
