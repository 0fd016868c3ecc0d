//! The named paths in configuration space of little 2-cubes.
//!
//! The hexagonator paths run over `t ∈ [0, 3]`, one unit per generating
//! 1-cell. Each unit segment is parameterized by its local time `s = t - k`
//! so consecutive segments join continuously.

use std::f64::consts::PI;
use std::io::Write;

use super::{CubeConfig, CubeError, LittleCube, DISJOINT_MARGIN};

/// Side of the cubes on the hexagonator paths, which the formulas leave
/// unspecified ("small enough").
pub const HEX_SIDE: f64 = 1.0 / 50.0;

#[derive(Clone, Debug, PartialEq)]
pub enum PathSpec {
    /// `(xy)z → x(yz)` in `C_2(3)`.
    Assoc,
    /// `xy → yx` in `C_2(2)`.
    Braid,
    /// Source of the left hexagonator, `γ`.
    HexSource,
    /// Target of the left hexagonator, `γ'`.
    HexTarget,
    /// The intermediate triple `δ`.
    HexDelta,
    /// Keyframes equally spaced over `t ∈ [0, 1]`, interpolated linearly.
    PiecewiseLinear(Vec<CubeConfig>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub config: CubeConfig,
}

fn circle(cx: f64, cy: f64, r: f64, angle: f64) -> [f64; 2] {
    [cx + r * angle.cos(), cy + r * angle.sin()]
}

fn on_line(x: f64) -> [f64; 2] {
    [x, 0.5]
}

fn hex_segment(t: f64) -> (usize, f64) {
    let k = (t.floor().max(0.0) as usize).min(2);
    (k, t - k as f64)
}

/// γ: braid x past y, reassociate, braid x past z.
fn gamma(t: f64) -> [[f64; 2]; 3] {
    let (k, s) = hex_segment(t);
    let r = 1.0 / 25.0;
    match k {
        0 => [
            circle(0.3, 0.5, r, PI + PI * s),
            circle(0.3, 0.5, r, PI * s),
            on_line(0.7),
        ],
        1 => [
            on_line((17.0 + 16.0 * s) / 50.0),
            on_line((13.0 + 2.0 * s) / 50.0),
            on_line((35.0 + 2.0 * s) / 50.0),
        ],
        _ => [
            circle(0.7, 0.5, r, PI + PI * s),
            on_line(0.3),
            circle(0.7, 0.5, r, PI * s),
        ],
    }
}

/// γ': reassociate, braid x past the block yz, reassociate.
fn gamma_prime(t: f64) -> [[f64; 2]; 3] {
    let (k, s) = hex_segment(t);
    let r = 1.0 / 5.0;
    match k {
        0 => [
            on_line((13.0 + 2.0 * s) / 50.0),
            on_line((17.0 + 16.0 * s) / 50.0),
            on_line((35.0 + 2.0 * s) / 50.0),
        ],
        1 => [
            circle(0.5, 0.5, r, PI + PI * s),
            circle(23.0 / 50.0, 0.5, r, PI * s),
            circle(27.0 / 50.0, 0.5, r, PI * s),
        ],
        _ => [
            on_line((35.0 + 2.0 * s) / 50.0),
            on_line((13.0 + 2.0 * s) / 50.0),
            on_line((17.0 + 16.0 * s) / 50.0),
        ],
    }
}

fn delta(t: f64) -> [[f64; 2]; 3] {
    let a = PI * t / 3.0;
    [
        circle(0.5, 0.5, 6.0 / 25.0, PI + a),
        circle(0.3, 0.5, 2.0 / 25.0, a),
        circle(17.0 / 25.0, 0.5, 1.0 / 50.0, a),
    ]
}

impl PathSpec {
    pub fn duration(&self) -> f64 {
        match self {
            PathSpec::HexSource | PathSpec::HexTarget | PathSpec::HexDelta => 3.0,
            _ => 1.0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PathSpec::Assoc => "assoc",
            PathSpec::Braid => "braid",
            PathSpec::HexSource => "hex-source",
            PathSpec::HexTarget => "hex-target",
            PathSpec::HexDelta => "hex-delta",
            PathSpec::PiecewiseLinear(_) => "piecewise-linear",
        }
    }

    /// The configuration at time `t`.
    pub fn at(&self, t: f64) -> Result<CubeConfig, CubeError> {
        let squares = |centers: &[[f64; 2]], sides: &[f64]| -> Result<CubeConfig, CubeError> {
            let cubes = centers
                .iter()
                .zip(sides)
                .map(|(c, &s)| LittleCube::centered(c, &[s, s]))
                .collect::<Result<Vec<_>, _>>()?;
            CubeConfig::new(2, cubes)
        };
        match self {
            PathSpec::Assoc => squares(
                &[
                    on_line((13.0 + 2.0 * t) / 50.0),
                    on_line((17.0 + 16.0 * t) / 50.0),
                    on_line((35.0 + 2.0 * t) / 50.0),
                ],
                &[(1.0 + 4.0 * t) / 25.0, 1.0 / 25.0, (5.0 - 4.0 * t) / 25.0],
            ),
            PathSpec::Braid => squares(
                &[circle(0.5, 0.5, 0.2, PI + PI * t), circle(0.5, 0.5, 0.2, PI * t)],
                &[0.2, 0.2],
            ),
            PathSpec::HexSource => squares(&gamma(t), &[HEX_SIDE; 3]),
            PathSpec::HexTarget => squares(&gamma_prime(t), &[HEX_SIDE; 3]),
            PathSpec::HexDelta => squares(&delta(t), &[HEX_SIDE; 3]),
            PathSpec::PiecewiseLinear(keys) => piecewise(keys, t),
        }
    }
}

fn piecewise(keys: &[CubeConfig], t: f64) -> Result<CubeConfig, CubeError> {
    let first = keys.first().ok_or(CubeError::TooFewSamples(0))?;
    if keys.iter().any(|k| k.len() != first.len() || k.dim() != first.dim()) {
        return Err(CubeError::Ragged);
    }
    if keys.len() == 1 {
        return Ok(first.clone());
    }
    let x = t.clamp(0.0, 1.0) * (keys.len() - 1) as f64;
    let i = (x.floor() as usize).min(keys.len() - 2);
    let s = x - i as f64;
    let cubes = keys[i]
        .cubes()
        .iter()
        .zip(keys[i + 1].cubes())
        .map(|(a, b)| {
            LittleCube::new(
                a.intervals()
                    .iter()
                    .zip(b.intervals())
                    .map(|(&(alo, ahi), &(blo, bhi))| (alo + s * (blo - alo), ahi + s * (bhi - ahi)))
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    CubeConfig::new(first.dim(), cubes)
}

/// Cube centers at time `t`, as planar points (1-cubes sit on `y = 1/2`).
pub fn centers_at(p: &PathSpec, t: f64) -> Result<Vec<[f64; 2]>, CubeError> {
    Ok(p.at(t)?
        .cubes()
        .iter()
        .map(|c| {
            let v = c.center();
            [v[0], v.get(1).copied().unwrap_or(0.5)]
        })
        .collect())
}

/// Samples `steps` uniform times across the path's domain, failing on the
/// first frame whose cubes are closer than the disjointness margin.
pub fn sample_path(p: &PathSpec, steps: usize) -> Result<Vec<Sample>, CubeError> {
    if steps < 2 {
        return Err(CubeError::TooFewSamples(steps));
    }
    let d = p.duration();
    (0..steps)
        .map(|k| {
            let t = d * k as f64 / (steps - 1) as f64;
            let config = p.at(t)?;
            if let Some((i, j, gap)) = config.worst_pair() {
                if gap < DISJOINT_MARGIN {
                    return Err(CubeError::Overlap { t, i, j, gap });
                }
            }
            Ok(Sample { t, config })
        })
        .collect()
}

/// One row per cube per sample: `t,cube_index,center_x[,center_y],half_width[,half_height]`.
pub fn write_csv<W: Write>(out: &mut W, samples: &[Sample]) -> Result<(), CubeError> {
    let io = |e: std::io::Error| CubeError::Io(e.to_string());
    let dim = samples.first().map(|s| s.config.dim()).unwrap_or(1);
    if dim == 2 {
        writeln!(out, "t,cube_index,center_x,center_y,half_width,half_height").map_err(io)?;
    } else {
        writeln!(out, "t,cube_index,center_x,half_width").map_err(io)?;
    }
    for s in samples {
        for (i, c) in s.config.cubes().iter().enumerate() {
            let mut fields = vec![format!("{:.16e}", s.t), i.to_string()];
            fields.extend(c.center().iter().map(|v| format!("{v:.16e}")));
            fields.extend(c.sides().iter().map(|v| format!("{:.16e}", v / 2.0)));
            writeln!(out, "{}", fields.join(",")).map_err(io)?;
        }
    }
    Ok(())
}
