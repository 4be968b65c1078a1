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

//! Power-law exponents from log-log least squares.
//!
//! Degree exponents are read off the frequency-degree plot, from the most
//! populated degree upward (below the mode the histogram rises and is not
//! part of the power-law tail). Before the regression the sparse high-degree
//! tail is trimmed: bins are dropped from the top end while their count is
//! below the median bin count, and never more than 5% of all nodes in total.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::DegreeHistogram;

/// Upper bound on the share of nodes the tail trim may discard.
pub const MAX_TRIM_FRACTION: f64 = 0.05;

const MIN_POINTS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    /// Positive `gamma` for `P(k) ~ k^-gamma`; the raw slope for rich-club fits.
    pub exponent: f64,
    /// Pearson correlation of the regressed points (negative for decaying laws).
    pub correlation: f64,
    pub intercept: f64,
    pub points_used: usize,
    pub nodes_trimmed: usize,
    pub trim_fraction: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    /// Pearson correlation; 0 when `y` is constant.
    pub r: f64,
}

/// Ordinary least squares of `y` on `x`.
pub fn least_squares(points: &[(f64, f64)]) -> Result<LinearFit> {
    if points.len() < 2 {
        return Err(Error::InsufficientData(format!("{} points for a line", points.len())));
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for &(x, y) in points {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == 0.0 {
        return Err(Error::InsufficientData("all x values coincide".into()));
    }
    let slope = sxy / sxx;
    let r = if syy == 0.0 { 0.0 } else { sxy / (sxx * syy).sqrt() };
    Ok(LinearFit {
        slope,
        intercept: mean_y - slope * mean_x,
        r,
    })
}

pub fn fit_degree_exponent(h: &DegreeHistogram) -> Result<FitResult> {
    let positive: Vec<(usize, usize)> = h.iter().filter(|&(k, c)| k >= 1 && c > 0).collect();
    let mode = positive
        .iter()
        .enumerate()
        .max_by_key(|&(i, &(_, c))| (c, std::cmp::Reverse(i)))
        .map_or(0, |(i, _)| i);
    let bins = &positive[mode..];
    if bins.len() < MIN_POINTS {
        return Err(Error::InsufficientData(format!(
            "{} positive-degree bins, need {MIN_POINTS}",
            bins.len()
        )));
    }
    let n = h.node_count();
    let budget = (MAX_TRIM_FRACTION * n as f64).floor() as usize;
    let median = median_count(bins);

    let mut keep = bins.len();
    let mut trimmed = 0usize;
    while keep > MIN_POINTS {
        let count = bins[keep - 1].1;
        if (count as f64) < median && trimmed + count <= budget {
            trimmed += count;
            keep -= 1;
        } else {
            break;
        }
    }

    let points: Vec<(f64, f64)> = bins[..keep]
        .iter()
        .map(|&(k, c)| ((k as f64).ln(), (c as f64 / n as f64).ln()))
        .collect();
    let line = least_squares(&points)?;
    Ok(FitResult {
        exponent: -line.slope,
        correlation: line.r,
        intercept: line.intercept,
        points_used: keep,
        nodes_trimmed: trimmed,
        trim_fraction: trimmed as f64 / n as f64,
    })
}

/// Slope of `log phi` against `log(r/n)`; sign preserved.
pub fn fit_rich_club_exponent(curve: &[(f64, f64)]) -> Result<FitResult> {
    let points: Vec<(f64, f64)> = curve
        .iter()
        .filter(|&&(x, phi)| x > 0.0 && phi > 0.0)
        .map(|&(x, phi)| (x.ln(), phi.ln()))
        .collect();
    if points.len() < MIN_POINTS {
        return Err(Error::InsufficientData(format!(
            "{} positive rich-club points, need {MIN_POINTS}",
            points.len()
        )));
    }
    let line = least_squares(&points)?;
    Ok(FitResult {
        exponent: line.slope,
        correlation: line.r,
        intercept: line.intercept,
        points_used: points.len(),
        nodes_trimmed: 0,
        trim_fraction: 0.0,
    })
}

fn median_count(bins: &[(usize, usize)]) -> f64 {
    let mut counts: Vec<usize> = bins.iter().map(|b| b.1).collect();
    counts.sort_unstable();
    let mid = counts.len() / 2;
    if counts.len() % 2 == 1 {
        counts[mid] as f64
    } else {
        (counts[mid - 1] + counts[mid]) as f64 / 2.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synthetic(gamma: f64, c: f64, kmax: usize) -> DegreeHistogram {
        DegreeHistogram::from_counts((1..=kmax).map(|k| (k, (c * (k as f64).powf(-gamma)).round() as usize)))
    }

    /// Textbook closed form, kept separate from `least_squares`.
    fn ols_oracle(points: &[(f64, f64)]) -> (f64, f64) {
        let n = points.len() as f64;
        let sx: f64 = points.iter().map(|p| p.0).sum();
        let sy: f64 = points.iter().map(|p| p.1).sum();
        let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
        let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        (slope, (sy - slope * sx) / n)
    }

    #[test]
    fn recovers_synthetic_exponent() {
        let h = synthetic(2.5, 1e6, 100);
        let fit = fit_degree_exponent(&h).unwrap();
        assert!((fit.exponent - 2.5).abs() < 0.05, "{fit:?}");
        assert!(fit.correlation < -0.99);
        assert!(fit.trim_fraction <= MAX_TRIM_FRACTION);
    }

    #[test]
    fn flat_histogram_has_zero_exponent() {
        let h = DegreeHistogram::from_counts([(1, 100), (2, 100), (3, 100)]);
        let fit = fit_degree_exponent(&h).unwrap();
        assert_eq!(fit.exponent, 0.0);
        assert_eq!(fit.points_used, 3);
        assert_eq!(fit.correlation, 0.0);
    }

    #[test]
    fn too_few_bins_is_an_error() {
        let h = DegreeHistogram::from_counts([(0, 4), (1, 10), (2, 5)]);
        assert!(matches!(fit_degree_exponent(&h), Err(Error::InsufficientData(_))));
    }

    #[test]
    fn trim_stops_at_budget() {
        // n = 158, budget 7; median bin count 2.5, so all eight singletons
        // qualify but only seven fit in the budget.
        let body = [40, 30, 20, 15, 10, 8, 7, 6, 5, 4, 3, 2];
        let mut bins: Vec<(usize, usize)> = body.iter().enumerate().map(|(i, &c)| (i + 1, c)).collect();
        bins.extend((13..=20).map(|k| (k, 1)));
        let h = DegreeHistogram::from_counts(bins);
        let n = h.node_count();
        let fit = fit_degree_exponent(&h).unwrap();
        assert_eq!(fit.nodes_trimmed, 7);
        assert_eq!(fit.points_used, 13);
        assert!(fit.nodes_trimmed as f64 <= 0.05 * n as f64);
    }

    #[test]
    fn trim_stops_at_populated_bin() {
        let h = DegreeHistogram::from_counts([(1, 50), (2, 30), (3, 20), (4, 12), (5, 1), (6, 15), (7, 1), (8, 1)]);
        let fit = fit_degree_exponent(&h).unwrap();
        // 8 and 7 go; 6 holds more than the median (13.5) and stops the trim.
        assert_eq!(fit.nodes_trimmed, 2);
        assert_eq!(fit.points_used, 6);
    }

    #[test]
    fn fit_starts_at_mode() {
        // Rising part below the peak at k = 4 is ignored.
        let mut bins = vec![(1, 5), (2, 20), (3, 60)];
        bins.extend((4..=40).map(|k| (k, (1e5 * (k as f64).powf(-2.5)).round() as usize)));
        let fit = fit_degree_exponent(&DegreeHistogram::from_counts(bins)).unwrap();
        assert!((fit.exponent - 2.5).abs() < 0.05, "{fit:?}");
    }

    #[test]
    fn rich_club_slope_recovered() {
        let curve: Vec<(f64, f64)> = (1..=20).map(|i| {
            let x = i as f64 / 20.0;
            (x, x.powf(-1.2))
        }).collect();
        let fit = fit_rich_club_exponent(&curve).unwrap();
        assert!((fit.exponent + 1.2).abs() < 0.01);
        let flat: Vec<(f64, f64)> = (1..=5).map(|i| (i as f64 / 5.0, 1.0)).collect();
        assert_eq!(fit_rich_club_exponent(&flat).unwrap().exponent, 0.0);
        assert!(fit_rich_club_exponent(&flat[..2]).is_err());
    }

    #[test]
    fn least_squares_matches_closed_form() {
        let pts: Vec<(f64, f64)> = (0..30)
            .map(|i| {
                let x = i as f64 * 0.37 + 0.1;
                (x, 2.0 - 1.3 * x + (i as f64 * 1.7).sin() * 0.2)
            })
            .collect();
        let line = least_squares(&pts).unwrap();
        let (slope, intercept) = ols_oracle(&pts);
        assert!(((line.slope - slope) / slope).abs() < 1e-12);
        assert!(((line.intercept - intercept) / intercept).abs() < 1e-12);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn scaling_counts_leaves_fit_unchanged(
                counts in proptest::collection::vec(1usize..500, 3..40),
                factor in 2usize..20,
            ) {
                let h = DegreeHistogram::from_counts(counts.iter().enumerate().map(|(i, &c)| (i + 1, c)));
                let scaled = DegreeHistogram::from_counts(counts.iter().enumerate().map(|(i, &c)| (i + 1, c * factor)));
                match (fit_degree_exponent(&h), fit_degree_exponent(&scaled)) {
                    (Ok(a), Ok(b)) => {
                        prop_assert!((a.exponent - b.exponent).abs() < 1e-9);
                        prop_assert!((a.correlation - b.correlation).abs() < 1e-9);
                    }
                    (Err(_), Err(_)) => {}
                    (a, b) => prop_assert!(false, "{a:?} vs {b:?}"),
                }
            }

            #[test]
            fn trim_never_exceeds_five_percent(counts in proptest::collection::vec(1usize..50, 3..200)) {
                let h = DegreeHistogram::from_counts(counts.iter().enumerate().map(|(i, &c)| (i + 1, c)));
                if let Ok(fit) = fit_degree_exponent(&h) {
                    prop_assert!(fit.nodes_trimmed as f64 <= MAX_TRIM_FRACTION * h.node_count() as f64);
                    prop_assert!(fit.points_used >= MIN_POINTS);
                }
            }

            #[test]
            fn least_squares_agrees_with_oracle(
                pts in proptest::collection::vec((-50.0f64..50.0, -50.0f64..50.0), 3..60)
            ) {
                let xs_distinct = pts.iter().any(|p| (p.0 - pts[0].0).abs() > 1e-3);
                prop_assume!(xs_distinct);
                let line = least_squares(&pts).unwrap();
                let (slope, intercept) = ols_oracle(&pts);
                prop_assert!((line.slope - slope).abs() <= 1e-9 * slope.abs().max(1.0));
                prop_assert!((line.intercept - intercept).abs() <= 1e-9 * intercept.abs().max(1.0));
            }
        }
    }
}
