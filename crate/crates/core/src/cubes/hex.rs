//! Consistency of the left hexagonator's paths: γ, γ' and δ must give the
//! same braid, and the straight-line homotopies γ → δ and δ → γ' must keep
//! the three points apart.

use rayon::prelude::*;

use super::{centers_at, extract_path_braid, CubeError, PathSpec, POINT_MARGIN};
use crate::braid::{are_equal, BraidWord};

#[derive(Clone, Debug, PartialEq)]
pub struct HexReport {
    pub gamma: BraidWord,
    pub gamma_prime: BraidWord,
    pub delta: BraidWord,
    /// Smallest point distance along γ → δ, with its `(s, t)`.
    pub gamma_delta: (f64, f64, f64),
    /// Smallest point distance along δ → γ', with its `(s, t)`.
    pub delta_gamma_prime: (f64, f64, f64),
}

/// Minimum pairwise point distance of `(1-s)·a(t) + s·b(t)` over a
/// `grid × grid` lattice of `(s, t)`, returned as `(distance, s, t)`.
pub fn interpolation_min_distance(a: &PathSpec, b: &PathSpec, grid: usize) -> Result<(f64, f64, f64), CubeError> {
    if grid < 2 {
        return Err(CubeError::TooFewSamples(grid));
    }
    let dur = a.duration().min(b.duration());
    let times: Vec<f64> = (0..grid).map(|k| dur * k as f64 / (grid - 1) as f64).collect();
    let pa = times.iter().map(|&t| centers_at(a, t)).collect::<Result<Vec<_>, _>>()?;
    let pb = times.iter().map(|&t| centers_at(b, t)).collect::<Result<Vec<_>, _>>()?;
    // rows are independent; the reduction picks the first minimum in row
    // order, so the result does not depend on scheduling
    let rows: Vec<(f64, f64, f64)> = (0..grid)
        .into_par_iter()
        .map(|i| {
            let s = i as f64 / (grid - 1) as f64;
            let mut best = (f64::INFINITY, s, 0.0);
            for (k, &t) in times.iter().enumerate() {
                let pts: Vec<[f64; 2]> = pa[k]
                    .iter()
                    .zip(&pb[k])
                    .map(|(p, q)| [(1.0 - s) * p[0] + s * q[0], (1.0 - s) * p[1] + s * q[1]])
                    .collect();
                for x in 0..pts.len() {
                    for y in x + 1..pts.len() {
                        let d = (pts[x][0] - pts[y][0]).hypot(pts[x][1] - pts[y][1]);
                        if d < best.0 {
                            best = (d, s, t);
                        }
                    }
                }
            }
            best
        })
        .collect();
    Ok(rows
        .into_iter()
        .fold((f64::INFINITY, 0.0, 0.0), |acc, r| if r.0 < acc.0 { r } else { acc }))
}

/// Runs the full check with `steps` samples for extraction and a
/// `grid × grid` lattice for the homotopies.
pub fn hex_paths_check(steps: usize, grid: usize) -> Result<HexReport, CubeError> {
    let gamma = extract_path_braid(&PathSpec::HexSource, steps)?;
    let gamma_prime = extract_path_braid(&PathSpec::HexTarget, steps)?;
    let delta = extract_path_braid(&PathSpec::HexDelta, steps)?;
    let same = |a: &BraidWord, b: &BraidWord| are_equal(a, b).unwrap_or(false);
    if !same(&gamma, &gamma_prime) || !same(&gamma, &delta) {
        return Err(CubeError::WordsDiffer {
            gamma: gamma.to_string(),
            gamma_prime: gamma_prime.to_string(),
            delta: delta.to_string(),
        });
    }
    let gamma_delta = interpolation_min_distance(&PathSpec::HexSource, &PathSpec::HexDelta, grid)?;
    let delta_gamma_prime = interpolation_min_distance(&PathSpec::HexDelta, &PathSpec::HexTarget, grid)?;
    for &(dist, s, t) in [&gamma_delta, &delta_gamma_prime] {
        if dist <= POINT_MARGIN {
            return Err(CubeError::PointsCollide { s, t, i: 0, j: 0, dist });
        }
    }
    Ok(HexReport { gamma, gamma_prime, delta, gamma_delta, delta_gamma_prime })
}
