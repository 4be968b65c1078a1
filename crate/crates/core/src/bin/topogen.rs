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

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use topogen::commands::{cmd_analyze, cmd_compare, cmd_experiment, cmd_generate, cmd_theory, GenerateConfig};
use topogen::evolve::{Mode, CLAMP_WARNING_FRACTION};
use topogen::experiment::{DEFAULT_BASE_SEED, DEFAULT_REPLICATES};
use topogen::io::ReportFormat;
use topogen::metrics::{ReportOptions, DEFAULT_ALL_PAIRS_LIMIT};
use topogen::{ModelParams, Result};

#[derive(Parser)]
#[command(name = "topogen", version, about = "Scale-free topology generator and AS-topology metrics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Directory for artifacts (edge list, report, curve CSVs).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format.
    #[arg(long, default_value = "text")]
    format: ReportFormat,
}

#[derive(Args)]
struct Metrics {
    /// Skip distance and betweenness above this many nodes.
    #[arg(long, default_value_t = DEFAULT_ALL_PAIRS_LIMIT)]
    all_pairs_limit: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Grow a graph and write its edge list and metrics.
    Generate {
        #[arg(long, default_value = "ours")]
        model: Mode,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        q: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        eps: f64,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        m0: usize,
        /// Target node count.
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BASE_SEED)]
        seed: u64,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        metrics: Metrics,
    },
    /// Compute the metric report for an edge list.
    Analyze {
        path: PathBuf,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        metrics: Metrics,
    },
    /// Side-by-side metrics for several edge lists.
    Compare {
        #[arg(required = true, num_args = 1..)]
        paths: Vec<PathBuf>,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        metrics: Metrics,
    },
    /// Continuum-theory predictions for a parameter set.
    Theory {
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        q: f64,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        eps: f64,
        #[arg(long, default_value = "text")]
        format: ReportFormat,
    },
    /// Run a replicated reference experiment (table5, section61, table6).
    Experiment {
        name: String,
        #[arg(long, default_value_t = DEFAULT_BASE_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_REPLICATES)]
        replicates: usize,
        #[command(flatten)]
        output: Output,
    },
}

fn run(cli: Cli) -> Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Generate { model, p, q, eps, m, m0, n, seed, output, metrics } => {
            let cfg = GenerateConfig {
                params: ModelParams { p, q, m, m0, eps, mode: model },
                target_n: n,
                seed,
                out_dir: output.out,
                format: output.format,
                report: ReportOptions { all_pairs_limit: metrics.all_pairs_limit },
            };
            let generated = cmd_generate(&cfg, &mut out)?;
            if generated.trace.clamp_warning() {
                eprintln!(
                    "warning: up to {:.0}% of nodes had negative attachment weight (clamped to 0); above {:.0}% the continuum predictions are unreliable",
                    100.0 * generated.trace.max_clamped_fraction,
                    100.0 * CLAMP_WARNING_FRACTION
                );
            }
        }
        Command::Analyze { path, output, metrics } => {
            let opts = ReportOptions { all_pairs_limit: metrics.all_pairs_limit };
            cmd_analyze(&path, output.out.as_deref(), output.format, &opts, &mut out)?;
        }
        Command::Compare { paths, output, metrics } => {
            let opts = ReportOptions { all_pairs_limit: metrics.all_pairs_limit };
            cmd_compare(&paths, output.out.as_deref(), output.format, &opts, &mut out)?;
        }
        Command::Theory { p, q, m, eps, format } => {
            cmd_theory(p, q, m, eps, format, &mut out)?;
        }
        Command::Experiment { name, seed, replicates, output } => {
            cmd_experiment(&name, seed, replicates, output.out.as_deref(), output.format, &mut out)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
