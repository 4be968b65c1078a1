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

//! Scale-free topology generation and AS-level topology analysis.
//!
//! * [`graph`]: undirected simple graph with degree-weighted sampling.
//! * [`evolve`]: the evolving model (link addition, rewiring, node addition
//!   under the offset linear attachment rule), with BA and EBA as special cases.
//! * [`metrics`]: degree, distance, clustering, betweenness and rich-club metrics.
//! * [`fit`]: log-log regression for degree and rich-club exponents.
//! * [`theory`]: closed-form continuum predictions.
//! * [`io`], [`experiment`], [`commands`]: edge lists, CSV curves, experiment
//!   runner and the command-line front end.

pub mod commands;
pub mod error;
pub mod evolve;
pub mod experiment;
mod fenwick;
pub mod fit;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod theory;

pub use error::{Error, Result};
pub use evolve::{evolve, evolve_traced, EvolutionTrace, Mode, ModelParams, TraceConfig};
pub use fit::{fit_degree_exponent, fit_rich_club_exponent, FitResult};
pub use graph::{Graph, NodeId};
pub use metrics::{degree_histogram, metrics_report, DegreeHistogram, MetricsReport};
pub use theory::TheoryParams;
