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

//! Continuum-theory predictions for the evolving model.
//!
//! Time is counted in events. With `N(t) = (1-p-q) t` nodes and
//! `sum k = 2(1-q) m t`, the degree of a node born at `t_i` grows as
//!
//! ```text
//! k_i(t) = (A + m + E) (t / t_i)^(1/B) - A - E
//! A = 2m(p-q)(1-q)(1+eps) / (1-p-q)
//! B = 2(1-q)(1+eps)
//! E = eps * k_mean = 2 eps (1-q) m / (1-p-q)
//! ```
//!
//! which gives `P(k) ~ (k + A + E)^-(B+1)` and a degree exponent `B + 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TheoryParams {
    pub p: f64,
    pub q: f64,
    pub m: usize,
    pub eps: f64,
}

impl TheoryParams {
    pub fn new(p: f64, q: f64, m: usize, eps: f64) -> Result<Self> {
        let t = TheoryParams { p, q, m, eps };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        check_growth(self.p, self.q, self.m)?;
        if !self.eps.is_finite() || self.eps <= -1.0 {
            return Err(Error::param(format!("eps must be > -1, got {}", self.eps)));
        }
        Ok(())
    }

    fn growth(&self) -> f64 {
        1.0 - self.p - self.q
    }

    pub fn a(&self) -> f64 {
        2.0 * self.m as f64 * (self.p - self.q) * (1.0 - self.q) * (1.0 + self.eps) / self.growth()
    }

    pub fn b(&self) -> f64 {
        2.0 * (1.0 - self.q) * (1.0 + self.eps)
    }

    pub fn e(&self) -> f64 {
        2.0 * self.eps * (1.0 - self.q) * self.m as f64 / self.growth()
    }

    /// Degree exponent `B + 1`.
    pub fn gamma(&self) -> f64 {
        self.b() + 1.0
    }

    /// `m + A + E`; the trajectory and `P(k)` need it positive.
    fn shift_at_birth(&self) -> Result<f64> {
        let s = self.m as f64 + self.a() + self.e();
        if s > 0.0 {
            Ok(s)
        } else {
            Err(Error::param(format!(
                "m + A + E = {s} is not positive; the continuum solution is undefined here"
            )))
        }
    }
}

fn check_growth(p: f64, q: f64, m: usize) -> Result<()> {
    if !(p.is_finite() && q.is_finite()) || p < 0.0 || q < 0.0 {
        return Err(Error::param(format!("p and q must be finite and non-negative (p={p}, q={q})")));
    }
    if p + q >= 1.0 {
        return Err(Error::param(format!("p + q must be < 1 (p={p}, q={q})")));
    }
    if m == 0 {
        return Err(Error::param("m must be at least 1"));
    }
    Ok(())
}

/// `2(1-q)(1+eps) + 1`.
pub fn gamma_ours(q: f64, eps: f64) -> Result<f64> {
    if !(q.is_finite() && (0.0..1.0).contains(&q)) {
        return Err(Error::param(format!("q must lie in [0, 1), got {q}")));
    }
    if !eps.is_finite() || eps <= -1.0 {
        return Err(Error::param(format!("eps must be > -1, got {eps}")));
    }
    Ok(2.0 * (1.0 - q) * (1.0 + eps) + 1.0)
}

/// Largest rewiring probability that keeps EBA scale-free for given `p`, `m`.
pub fn eba_q_max(p: f64, m: usize) -> f64 {
    let m = m as f64;
    (1.0 - p + m) / (1.0 + 2.0 * m)
}

/// EBA exponent `1 + (2m(1-q) + 1 - p - q) / m`, defined inside the
/// scale-free regime `q < (1 - p + m) / (1 + 2m)`.
pub fn gamma_eba(p: f64, q: f64, m: usize) -> Result<f64> {
    check_growth(p, q, m)?;
    if q >= eba_q_max(p, m) {
        return Err(Error::param(format!(
            "q = {q} is outside the EBA scale-free regime (q < {})",
            eba_q_max(p, m)
        )));
    }
    let m = m as f64;
    Ok(1.0 + (2.0 * m * (1.0 - q) + 1.0 - p - q) / m)
}

/// Mean degree `2(1-q)m / (1-p-q)` implied by node and degree growth.
pub fn expected_avg_degree(p: f64, q: f64, m: usize) -> Result<f64> {
    check_growth(p, q, m)?;
    Ok(2.0 * (1.0 - q) * m as f64 / (1.0 - p - q))
}

/// Link-addition probability that yields mean degree `target` for given `q`, `m`.
pub fn p_for_avg_degree(q: f64, m: usize, target: f64) -> Result<f64> {
    if !(q.is_finite() && (0.0..1.0).contains(&q)) {
        return Err(Error::param(format!("q must lie in [0, 1), got {q}")));
    }
    if m == 0 {
        return Err(Error::param("m must be at least 1"));
    }
    let p = 1.0 - q - 2.0 * (1.0 - q) * m as f64 / target;
    if !(p.is_finite() && p >= 0.0) {
        return Err(Error::param(format!(
            "mean degree {target} is unreachable with q={q}, m={m}"
        )));
    }
    Ok(p)
}

/// Continuum degree at event `t` of a node born at event `t_i`.
pub fn degree_trajectory(t: f64, t_i: f64, params: &TheoryParams) -> Result<f64> {
    params.validate()?;
    if !(t_i > 0.0 && t >= t_i && t.is_finite()) {
        return Err(Error::param(format!("need t >= t_i > 0 (t={t}, t_i={t_i})")));
    }
    let shift = params.shift_at_birth()?;
    let offset = params.a() + params.e();
    Ok(shift * (t / t_i).powf(1.0 / params.b()) - offset)
}

/// Continuum degree distribution at event `t` for an initial clique of `m0`.
pub fn pk_theoretical(k: f64, t: f64, m0: usize, params: &TheoryParams) -> Result<f64> {
    params.validate()?;
    if !(k >= params.m as f64 && k.is_finite()) {
        return Err(Error::param(format!("need k >= m (k={k}, m={})", params.m)));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::param(format!("need t > 0, got {t}")));
    }
    let shift = params.shift_at_birth()?;
    let b = params.b();
    let offset = params.a() + params.e();
    Ok(t * b * shift.powf(b) / (t + m0 as f64) * (k + offset).powf(-b - 1.0))
}
