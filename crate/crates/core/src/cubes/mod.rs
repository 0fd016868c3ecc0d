//! Little 1- and 2-cubes: configurations, operad composition, the named
//! configuration paths, and reading braids off point paths.

mod extract;
mod hex;
mod paths;

use thiserror::Error;

pub use extract::{extract_braid, extract_path_braid, PointConfigPath};
pub use hex::{hex_paths_check, interpolation_min_distance, HexReport};
pub use paths::{centers_at, sample_path, write_csv, PathSpec, Sample};

/// Margin required between sampled cubes.
pub const DISJOINT_MARGIN: f64 = 1e-9;
/// Minimum distance required between sampled points.
pub const POINT_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CubeError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("unsupported dimension {0}")]
    BadDim(usize),
    #[error("invalid interval ({lo}, {hi}) on axis {axis}")]
    InvalidInterval { axis: usize, lo: f64, hi: f64 },
    #[error("expected {expected} inner configurations, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("cubes {i} and {j} overlap at t={t} (gap {gap:e})")]
    Overlap { t: f64, i: usize, j: usize, gap: f64 },
    #[error("points {i} and {j} too close at s={s}, t={t} (distance {dist:e})")]
    PointsCollide { s: f64, t: f64, i: usize, j: usize, dist: f64 },
    #[error("non-generic point path at frame {frame}")]
    NonGeneric { frame: usize },
    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(usize),
    #[error("hexagonator paths extract different braids: {gamma} / {gamma_prime} / {delta}")]
    WordsDiffer { gamma: String, gamma_prime: String, delta: String },
    #[error("frames disagree on the number of points")]
    Ragged,
    #[error("io: {0}")]
    Io(String),
}

/// An axis-parallel box `Π (lo_i, hi_i)` inside the unit cube.
#[derive(Clone, Debug, PartialEq)]
pub struct LittleCube {
    intervals: Vec<(f64, f64)>,
}

impl LittleCube {
    pub fn new(intervals: Vec<(f64, f64)>) -> Result<Self, CubeError> {
        if !(1..=2).contains(&intervals.len()) {
            return Err(CubeError::BadDim(intervals.len()));
        }
        for (axis, &(lo, hi)) in intervals.iter().enumerate() {
            if !(0.0 <= lo && lo < hi && hi <= 1.0) {
                return Err(CubeError::InvalidInterval { axis, lo, hi });
            }
        }
        Ok(LittleCube { intervals })
    }

    /// The whole unit cube, the operad identity.
    pub fn unit(dim: usize) -> Self {
        LittleCube { intervals: vec![(0.0, 1.0); dim] }
    }

    /// A cube from its center and per-axis side lengths.
    pub fn centered(center: &[f64], sides: &[f64]) -> Result<Self, CubeError> {
        LittleCube::new(
            center
                .iter()
                .zip(sides)
                .map(|(&c, &s)| (c - s / 2.0, c + s / 2.0))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn center(&self) -> Vec<f64> {
        self.intervals.iter().map(|(lo, hi)| (lo + hi) / 2.0).collect()
    }

    pub fn sides(&self) -> Vec<f64> {
        self.intervals.iter().map(|(lo, hi)| hi - lo).collect()
    }

    /// Image of `inner` under this cube's affine embedding.
    pub fn embed(&self, inner: &LittleCube) -> LittleCube {
        LittleCube {
            intervals: self
                .intervals
                .iter()
                .zip(&inner.intervals)
                .map(|(&(lo, hi), &(u, v))| (lo + (hi - lo) * u, lo + (hi - lo) * v))
                .collect(),
        }
    }
}

/// Largest separation along any axis; open boxes are disjoint iff this is
/// non-negative.
pub fn separation(a: &LittleCube, b: &LittleCube) -> Result<f64, CubeError> {
    if a.dim() != b.dim() {
        return Err(CubeError::DimMismatch(a.dim(), b.dim()));
    }
    Ok(a
        .intervals
        .iter()
        .zip(&b.intervals)
        .map(|(&(alo, ahi), &(blo, bhi))| (blo - ahi).max(alo - bhi))
        .fold(f64::NEG_INFINITY, f64::max))
}

pub fn disjoint(a: &LittleCube, b: &LittleCube) -> Result<bool, CubeError> {
    separation(a, b).map(|g| g >= 0.0)
}

/// An ordered tuple of little cubes of one dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct CubeConfig {
    dim: usize,
    cubes: Vec<LittleCube>,
}

impl CubeConfig {
    pub fn new(dim: usize, cubes: Vec<LittleCube>) -> Result<Self, CubeError> {
        if !(1..=2).contains(&dim) {
            return Err(CubeError::BadDim(dim));
        }
        if let Some(c) = cubes.iter().find(|c| c.dim() != dim) {
            return Err(CubeError::DimMismatch(dim, c.dim()));
        }
        Ok(CubeConfig { dim, cubes })
    }

    pub fn identity(dim: usize) -> Self {
        CubeConfig { dim, cubes: vec![LittleCube::unit(dim)] }
    }

    /// The binary tensor element `m`: `(1/5,2/5)` and `(3/5,4/5)`, crossed
    /// with `(2/5,3/5)` in dimension 2.
    pub fn m(dim: usize) -> Self {
        let cube = |lo: f64, hi: f64| {
            let mut iv = vec![(lo, hi)];
            if dim == 2 {
                iv.push((0.4, 0.6));
            }
            LittleCube { intervals: iv }
        };
        CubeConfig { dim, cubes: vec![cube(0.2, 0.4), cube(0.6, 0.8)] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cubes(&self) -> &[LittleCube] {
        &self.cubes
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    /// Smallest pairwise separation, `+∞` for fewer than two cubes.
    pub fn min_separation(&self) -> f64 {
        self.worst_pair().map(|(_, _, g)| g).unwrap_or(f64::INFINITY)
    }

    pub(crate) fn worst_pair(&self) -> Option<(usize, usize, f64)> {
        let mut worst: Option<(usize, usize, f64)> = None;
        for i in 0..self.cubes.len() {
            for j in i + 1..self.cubes.len() {
                let g = separation(&self.cubes[i], &self.cubes[j]).expect("same dim");
                if worst.is_none_or(|(_, _, w)| g < w) {
                    worst = Some((i, j, g));
                }
            }
        }
        worst
    }
}

pub fn config_valid(c: &CubeConfig) -> bool {
    c.min_separation() >= 0.0
}

/// Operad composition: the `i`-th inner configuration is substituted into
/// the `i`-th outer cube.
pub fn operad_compose(outer: &CubeConfig, inners: &[CubeConfig]) -> Result<CubeConfig, CubeError> {
    if inners.len() != outer.len() {
        return Err(CubeError::ArityMismatch { expected: outer.len(), got: inners.len() });
    }
    let mut cubes = Vec::new();
    for (o, inner) in outer.cubes.iter().zip(inners) {
        if inner.dim != outer.dim {
            return Err(CubeError::DimMismatch(outer.dim, inner.dim));
        }
        cubes.extend(inner.cubes.iter().map(|c| o.embed(c)));
    }
    Ok(CubeConfig { dim: outer.dim, cubes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12
    }

    #[test]
    fn disjointness() {
        let m = CubeConfig::m(1);
        assert!(disjoint(&m.cubes()[0], &m.cubes()[1]).unwrap());
        assert!(!disjoint(&m.cubes()[0], &m.cubes()[0]).unwrap());
        let a = LittleCube::new(vec![(0.1, 0.5), (0.1, 0.3)]).unwrap();
        let b = LittleCube::new(vec![(0.1, 0.5), (0.4, 0.6)]).unwrap();
        assert!(disjoint(&a, &b).unwrap());
        // touching faces are fine for open boxes
        let c = LittleCube::new(vec![(0.1, 0.5), (0.3, 0.6)]).unwrap();
        assert!(disjoint(&a, &c).unwrap());
        assert!(disjoint(&a, &m.cubes()[0]).is_err());
    }

    #[test]
    fn cube_validation() {
        assert!(LittleCube::new(vec![(0.5, 0.5)]).is_err());
        assert!(LittleCube::new(vec![(-0.1, 0.5)]).is_err());
        assert!(LittleCube::new(vec![(0.0, 1.0), (0.2, 1.1)]).is_err());
        assert!(LittleCube::new(vec![]).is_err());
    }

    #[test]
    fn compose_m_m_id() {
        let m = CubeConfig::m(1);
        let c = operad_compose(&m, &[m.clone(), CubeConfig::identity(1)]).unwrap();
        let centers: Vec<f64> = c.cubes().iter().map(|q| q.center()[0]).collect();
        let sides: Vec<f64> = c.cubes().iter().map(|q| q.sides()[0]).collect();
        for (got, want) in centers.iter().zip([13.0 / 50.0, 17.0 / 50.0, 35.0 / 50.0]) {
            assert!(close(*got, want), "{got} vs {want}");
        }
        for (got, want) in sides.iter().zip([1.0 / 25.0, 1.0 / 25.0, 1.0 / 5.0]) {
            assert!(close(*got, want));
        }
        assert!(config_valid(&c));
    }

    #[test]
    fn unit_law_and_arity() {
        let m = CubeConfig::m(2);
        let c = operad_compose(&CubeConfig::identity(2), std::slice::from_ref(&m)).unwrap();
        assert_eq!(c, m);
        assert!(operad_compose(&m, std::slice::from_ref(&m)).is_err());
        assert!(operad_compose(&m, &[CubeConfig::m(1), m.clone()]).is_err());
        // an empty inner configuration deletes its slot
        let e = CubeConfig::new(2, vec![]).unwrap();
        assert_eq!(operad_compose(&m, &[e, CubeConfig::identity(2)]).unwrap().len(), 1);
    }
}
