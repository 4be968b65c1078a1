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

//! Evolving scale-free network model.
//!
//! Starting from a clique of `m0` nodes, every event performs one of
//!
//! * with probability `p`: add `m` links from uniformly chosen start nodes,
//! * with probability `q`: rewire `m` links, keeping the chosen node and
//!   re-targeting the far end,
//! * otherwise: add a node carrying `m` links.
//!
//! Every link end that is placed preferentially picks node `i` with
//! probability proportional to `max(0, k_i + eps * k_mean)`, where `k_mean`
//! is the mean degree at that instant. BA is the case `p = q = eps = 0`; EBA
//! is the case `eps = 1 / k_mean`.
//!
//! Sampling never creates self-loops or parallel edges: candidate targets
//! that would do so are excluded from the distribution, and the draw is made
//! from the renormalized remainder.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Above this fraction of clamped (zero-weight, negative before clamping)
/// nodes the linear attachment rule no longer tracks the continuum theory.
pub const CLAMP_WARNING_FRACTION: f64 = 0.15;

/// Rejection sampling is abandoned for an exact scan once the expected number
/// of proposals per accepted draw exceeds this.
const MAX_PROPOSALS_PER_DRAW: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Ours,
    Ba,
    Eba,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Ours => "ours",
            Mode::Ba => "ba",
            Mode::Eba => "eba",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ours" => Ok(Mode::Ours),
            "ba" => Ok(Mode::Ba),
            "eba" => Ok(Mode::Eba),
            other => Err(Error::param(format!("unknown model '{other}' (expected ours, ba or eba)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    /// Probability of a link-addition event.
    pub p: f64,
    /// Probability of a rewiring event.
    pub q: f64,
    /// Links per event.
    pub m: usize,
    /// Size of the initial clique.
    pub m0: usize,
    /// Attachment offset, in units of the current mean degree.
    pub eps: f64,
    pub mode: Mode,
}

impl ModelParams {
    pub fn ours(p: f64, q: f64, m: usize, m0: usize, eps: f64) -> Self {
        ModelParams { p, q, m, m0, eps, mode: Mode::Ours }
    }

    pub fn ba(m: usize, m0: usize) -> Self {
        ModelParams { p: 0.0, q: 0.0, m, m0, eps: 0.0, mode: Mode::Ba }
    }

    /// `eps` is ignored; the offset is `1 / k_mean` at every draw.
    pub fn eba(p: f64, q: f64, m: usize, m0: usize) -> Self {
        ModelParams { p, q, m, m0, eps: 0.0, mode: Mode::Eba }
    }

    /// Copy with the mode's forced values applied (BA zeroes `p`, `q`, `eps`).
    pub fn normalized(&self) -> Self {
        match self.mode {
            Mode::Ba => ModelParams { p: 0.0, q: 0.0, eps: 0.0, ..*self },
            _ => *self,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let s = self.normalized();
        if !(s.p.is_finite() && s.q.is_finite() && s.eps.is_finite()) {
            return Err(Error::param("p, q and eps must be finite"));
        }
        if s.p < 0.0 || s.q < 0.0 {
            return Err(Error::param(format!("p and q must be non-negative (p={}, q={})", s.p, s.q)));
        }
        if s.p + s.q >= 1.0 {
            return Err(Error::param(format!("p + q must be < 1 (p={}, q={})", s.p, s.q)));
        }
        if s.m == 0 {
            return Err(Error::param("m must be at least 1"));
        }
        if s.m0 < 2 {
            return Err(Error::param(format!("m0 must be at least 2, got {}", s.m0)));
        }
        if s.m >= s.m0 {
            return Err(Error::param(format!("m must be < m0 (m={}, m0={})", s.m, s.m0)));
        }
        Ok(())
    }

    /// Additive weight offset `eps * k_mean` for the current graph.
    pub fn attachment_offset(&self, g: &Graph) -> f64 {
        let mean = g.mean_degree();
        match self.mode {
            Mode::Ba => 0.0,
            Mode::Ours => self.eps * mean,
            Mode::Eba if mean > 0.0 => (1.0 / mean) * mean,
            Mode::Eba => 1.0,
        }
    }
}

/// Unnormalized attachment weights `max(0, k_i + eps * k_mean)`.
pub fn attachment_weights(g: &Graph, eps: f64) -> Result<Vec<f64>> {
    if g.node_count() == 0 {
        return Err(Error::param("attachment weights need at least one node"));
    }
    let degrees: Vec<usize> = g.nodes().map(|i| g.degree(i)).collect();
    let weights = weights_for_degrees(&degrees, eps);
    if weights.iter().all(|&w| w <= 0.0) {
        return Err(Error::NoAttachableNode);
    }
    Ok(weights)
}

fn weights_for_degrees(degrees: &[usize], eps: f64) -> Vec<f64> {
    let mean = degrees.iter().sum::<usize>() as f64 / degrees.len() as f64;
    degrees.iter().map(|&k| weight(k, eps * mean)).collect()
}

/// Draws a node outside `forbidden` with probability proportional to its
/// attachment weight.
pub fn sample_preferential<R: Rng + ?Sized>(
    g: &Graph,
    eps: f64,
    forbidden: &[NodeId],
    rng: &mut R,
) -> Result<NodeId> {
    let mut extra = forbidden.to_vec();
    extra.sort_unstable();
    extra.dedup();
    let offset = eps * g.mean_degree();
    draw(g, offset, &Exclusion { anchor: None, extra: &extra }, rng)
}

#[inline]
fn weight(degree: usize, offset: f64) -> f64 {
    (degree as f64 + offset).max(0.0)
}

/// Nodes excluded from a draw: optionally an anchor together with its whole
/// neighborhood, plus a sorted list of extra nodes.
struct Exclusion<'a> {
    anchor: Option<NodeId>,
    extra: &'a [NodeId],
}

impl Exclusion<'_> {
    fn contains(&self, g: &Graph, v: NodeId) -> bool {
        self.covered_by_anchor(g, v) || self.extra.binary_search(&v).is_ok()
    }

    fn covered_by_anchor(&self, g: &Graph, v: NodeId) -> bool {
        self.anchor.is_some_and(|a| a == v || g.has_edge(a, v))
    }

    fn weight(&self, g: &Graph, offset: f64) -> f64 {
        let mut total = 0.0;
        if let Some(a) = self.anchor {
            total += weight(g.degree(a), offset);
            total += g.neighbors(a).map(|v| weight(g.degree(v), offset)).sum::<f64>();
        }
        for &v in self.extra {
            if v < g.node_count() && !self.covered_by_anchor(g, v) {
                total += weight(g.degree(v), offset);
            }
        }
        total
    }
}

/// `sum_i max(0, k_i + offset)` from the degree histogram.
fn total_weight(g: &Graph, offset: f64) -> f64 {
    let linear = g.degree_sum() as f64 + offset * g.node_count() as f64;
    if offset >= 0.0 {
        return linear;
    }
    let mut clamped = 0.0;
    for (k, &count) in g.degree_counts().iter().enumerate() {
        let w = k as f64 + offset;
        if w > 0.0 {
            break;
        }
        clamped += count as f64 * w;
    }
    linear - clamped
}

/// Fraction of nodes whose unclamped weight `k + offset` is negative.
fn clamped_fraction(g: &Graph, offset: f64) -> f64 {
    if offset >= 0.0 || g.node_count() == 0 {
        return 0.0;
    }
    let negative: usize = g
        .degree_counts()
        .iter()
        .enumerate()
        .take_while(|(k, _)| (*k as f64) + offset < 0.0)
        .map(|(_, &c)| c)
        .sum();
    negative as f64 / g.node_count() as f64
}

fn draw<R: Rng + ?Sized>(g: &Graph, offset: f64, excl: &Exclusion<'_>, rng: &mut R) -> Result<NodeId> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::NoAttachableNode);
    }
    let degree_mass = g.degree_sum() as f64;
    let proposal_mass = if offset >= 0.0 {
        degree_mass + offset * n as f64
    } else {
        degree_mass
    };
    let eligible = total_weight(g, offset) - excl.weight(g, offset);
    if eligible.is_nan() || eligible <= 1e-9 * proposal_mass.max(1.0) || proposal_mass > MAX_PROPOSALS_PER_DRAW * eligible {
        return draw_by_scan(g, offset, excl, rng);
    }
    loop {
        let candidate = if offset >= 0.0 {
            // Mixture of degree-proportional and uniform gives k + offset exactly.
            if rng.random::<f64>() * proposal_mass < degree_mass {
                g.random_node_by_degree(rng).ok_or(Error::NoAttachableNode)?
            } else {
                rng.random_range(0..n)
            }
        } else {
            let v = g.random_node_by_degree(rng).ok_or(Error::NoAttachableNode)?;
            let k = g.degree(v) as f64;
            // Thin degree-proportional proposals down to k + offset.
            if rng.random::<f64>() * k >= k + offset {
                continue;
            }
            v
        };
        if !excl.contains(g, candidate) {
            return Ok(candidate);
        }
    }
}

fn draw_by_scan<R: Rng + ?Sized>(g: &Graph, offset: f64, excl: &Exclusion<'_>, rng: &mut R) -> Result<NodeId> {
    let mut candidates = Vec::new();
    let mut total = 0.0;
    for v in g.nodes() {
        let w = weight(g.degree(v), offset);
        if w > 0.0 && !excl.contains(g, v) {
            total += w;
            candidates.push((v, total));
        }
    }
    let Some(&(last, _)) = candidates.last() else {
        return Err(Error::NoAttachableNode);
    };
    let target = rng.random::<f64>() * total;
    let idx = candidates.partition_point(|&(_, cum)| cum <= target);
    Ok(candidates.get(idx).map_or(last, |&(v, _)| v))
}

/// Result of one multi-link event.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StepOutcome {
    pub applied: usize,
    pub skipped: usize,
}

/// Link-addition event: `m` times, pick a uniform start node and connect it
/// to a preferentially chosen node it is not yet adjacent to.
pub fn step_add_links<R: Rng + ?Sized>(g: &mut Graph, params: &ModelParams, rng: &mut R) -> Result<StepOutcome> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::param("link addition needs at least two nodes"));
    }
    let mut out = StepOutcome::default();
    for _ in 0..params.m {
        let start = rng.random_range(0..n);
        let offset = params.attachment_offset(g);
        match draw(g, offset, &Exclusion { anchor: Some(start), extra: &[] }, rng) {
            Ok(target) => {
                g.add_edge(start, target)?;
                out.applied += 1;
            }
            Err(Error::NoAttachableNode) => out.skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Rewiring event: `m` times, pick a uniform node `i` with at least one link
/// and a uniform incident link `{i, j}`, then move its far end from `j` to a
/// preferentially chosen `j'`. A rewire that would isolate `j` or that finds
/// no eligible `j'` is skipped and leaves the graph untouched.
pub fn step_rewire<R: Rng + ?Sized>(g: &mut Graph, params: &ModelParams, rng: &mut R) -> Result<StepOutcome> {
    let mut out = StepOutcome::default();
    for _ in 0..params.m {
        let n = g.node_count();
        if g.edge_count() == 0 || n == g.nodes_with_degree(0) {
            out.skipped += 1;
            continue;
        }
        let i = loop {
            let v = rng.random_range(0..n);
            if g.degree(v) > 0 {
                break v;
            }
        };
        let j = g.random_incident_edge(i, rng)?;
        if g.degree(j) == 1 {
            out.skipped += 1;
            continue;
        }
        g.remove_edge(i, j)?;
        let offset = params.attachment_offset(g);
        let extra = [j];
        match draw(g, offset, &Exclusion { anchor: Some(i), extra: &extra }, rng) {
            Ok(target) => {
                g.add_edge(i, target)?;
                out.applied += 1;
            }
            Err(Error::NoAttachableNode) => {
                g.add_edge(i, j)?;
                out.skipped += 1;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Node-addition event outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeOutcome {
    pub node: NodeId,
    /// Links actually attached; below `m` only if the eligible pool ran dry.
    pub links: usize,
}

/// Node-addition event: a new node linked to `m` distinct, preferentially
/// chosen existing nodes (drawn without replacement against the state
/// before any of the new links exist).
pub fn step_add_node<R: Rng + ?Sized>(g: &mut Graph, params: &ModelParams, rng: &mut R) -> Result<NodeOutcome> {
    let node = g.add_node();
    let mut targets: Vec<NodeId> = Vec::with_capacity(params.m);
    for _ in 0..params.m {
        let offset = params.attachment_offset(g);
        match draw(g, offset, &Exclusion { anchor: Some(node), extra: &targets }, rng) {
            Ok(t) => {
                let pos = targets.partition_point(|&x| x < t);
                targets.insert(pos, t);
            }
            Err(Error::NoAttachableNode) => break,
            Err(e) => return Err(e),
        }
    }
    for &t in &targets {
        g.add_edge(node, t)?;
    }
    Ok(NodeOutcome { node, links: targets.len() })
}

/// Degree of a tracked node at a given event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSample {
    pub node: NodeId,
    pub birth_event: u64,
    pub event: u64,
    pub degree: usize,
}

/// Which node degrees to record while evolving.
#[derive(Debug, Clone, Default)]
pub struct TraceConfig {
    pub tracked_nodes: Vec<NodeId>,
    /// Record tracked degrees every this many events (0 disables sampling).
    pub sample_every: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EvolutionTrace {
    pub events: u64,
    pub add_links_events: u64,
    pub rewire_events: u64,
    pub add_node_events: u64,
    pub links_added: u64,
    pub links_skipped: u64,
    pub rewires_applied: u64,
    pub rewires_skipped: u64,
    pub node_links_added: u64,
    pub node_links_missing: u64,
    /// Nodes left isolated at the end and re-attached preferentially.
    pub repaired_isolated: u64,
    /// Event index at which each node was created; 0 for the initial clique.
    pub birth_event: Vec<u64>,
    pub samples: Vec<DegreeSample>,
    /// Largest fraction of nodes with negative unclamped weight seen at any event.
    pub max_clamped_fraction: f64,
}

impl EvolutionTrace {
    /// Set when the clamped fraction ever exceeded [`CLAMP_WARNING_FRACTION`].
    pub fn clamp_warning(&self) -> bool {
        self.max_clamped_fraction > CLAMP_WARNING_FRACTION
    }
}

pub fn evolve<R: Rng + ?Sized>(params: &ModelParams, target_n: usize, rng: &mut R) -> Result<Graph> {
    evolve_traced(params, target_n, rng, &TraceConfig::default()).map(|(g, _)| g)
}

/// Runs the model until the graph has `target_n` nodes.
pub fn evolve_traced<R: Rng + ?Sized>(
    params: &ModelParams,
    target_n: usize,
    rng: &mut R,
    trace_cfg: &TraceConfig,
) -> Result<(Graph, EvolutionTrace)> {
    params.validate()?;
    let params = params.normalized();
    if target_n < params.m0 {
        return Err(Error::param(format!(
            "target node count {target_n} is below the initial clique size {}",
            params.m0
        )));
    }
    let mut g = Graph::complete(params.m0)?;
    let mut trace = EvolutionTrace {
        birth_event: vec![0; params.m0],
        ..Default::default()
    };
    let mut next_audit = 1u64;

    while g.node_count() < target_n {
        trace.events += 1;
        let t = trace.events;
        let u: f64 = rng.random();
        if u < params.p {
            let out = step_add_links(&mut g, &params, rng)?;
            trace.add_links_events += 1;
            trace.links_added += out.applied as u64;
            trace.links_skipped += out.skipped as u64;
        } else if u < params.p + params.q {
            let out = step_rewire(&mut g, &params, rng)?;
            trace.rewire_events += 1;
            trace.rewires_applied += out.applied as u64;
            trace.rewires_skipped += out.skipped as u64;
        } else {
            let out = step_add_node(&mut g, &params, rng)?;
            trace.add_node_events += 1;
            trace.node_links_added += out.links as u64;
            trace.node_links_missing += (params.m - out.links) as u64;
            trace.birth_event.push(t);
        }

        let clamped = clamped_fraction(&g, params.attachment_offset(&g));
        if clamped > trace.max_clamped_fraction {
            trace.max_clamped_fraction = clamped;
        }
        if trace_cfg.sample_every > 0 && t.is_multiple_of(trace_cfg.sample_every) {
            for &v in &trace_cfg.tracked_nodes {
                if v < g.node_count() {
                    trace.samples.push(DegreeSample {
                        node: v,
                        birth_event: trace.birth_event[v],
                        event: t,
                        degree: g.degree(v),
                    });
                }
            }
        }
        if cfg!(debug_assertions) && t == next_audit {
            next_audit *= 2;
            debug_assert_eq!(g.check_invariants(), Ok(()));
        }
    }

    for v in g.nodes() {
        if g.degree(v) == 0 {
            let offset = params.attachment_offset(&g);
            let target = draw(&g, offset, &Exclusion { anchor: Some(v), extra: &[] }, rng)?;
            g.add_edge(v, target)?;
            trace.repaired_isolated += 1;
        }
    }
    debug_assert_eq!(g.check_invariants(), Ok(()));
    Ok((g, trace))
}
