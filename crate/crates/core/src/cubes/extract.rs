//! Reading a braid word off a sampled path of planar points.
//!
//! Strands are ordered by x-coordinate. Between consecutive frames every pair
//! whose x-order flips contributes one crossing, located by linear
//! interpolation; crossings are then replayed in time order. The viewer
//! sits at `y = -∞`, so at a crossing the strand with the smaller `y` is in
//! front: if the strand moving rightwards is in front the letter is
//! positive.

use super::{paths::PathSpec, CubeError, POINT_MARGIN};
use crate::braid::{BraidWord, Letter};

/// Below this, an x-difference or y-difference counts as a tie.
const TIE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Default)]
pub struct PointConfigPath {
    pub frames: Vec<Vec<[f64; 2]>>,
}

impl PointConfigPath {
    pub fn new(frames: Vec<Vec<[f64; 2]>>) -> Result<Self, CubeError> {
        if let Some(first) = frames.first() {
            if frames.iter().any(|f| f.len() != first.len()) {
                return Err(CubeError::Ragged);
            }
        }
        Ok(PointConfigPath { frames })
    }

    /// Cube centers of `steps` uniform samples of `p`.
    pub fn from_spec(p: &PathSpec, steps: usize) -> Result<Self, CubeError> {
        let samples = super::sample_path(p, steps)?;
        let frames = samples
            .iter()
            .map(|s| {
                s.config
                    .cubes()
                    .iter()
                    .map(|c| {
                        let v = c.center();
                        [v[0], v.get(1).copied().unwrap_or(0.5)]
                    })
                    .collect()
            })
            .collect();
        PointConfigPath::new(frames)
    }

    /// Smallest pairwise distance over all frames, with its frame index.
    pub fn min_distance(&self) -> (f64, usize) {
        let mut best = (f64::INFINITY, 0);
        for (k, f) in self.frames.iter().enumerate() {
            for i in 0..f.len() {
                for j in i + 1..f.len() {
                    let d = (f[i][0] - f[j][0]).hypot(f[i][1] - f[j][1]);
                    if d < best.0 {
                        best = (d, k);
                    }
                }
            }
        }
        best
    }
}

struct Crossing {
    time: f64,
    a: usize,
    b: usize,
    /// y of `a` minus y of `b` at the crossing
    dy: f64,
}

pub fn extract_braid(path: &PointConfigPath) -> Result<BraidWord, CubeError> {
    let Some(first) = path.frames.first() else {
        return Ok(BraidWord::identity(0));
    };
    let n = first.len();
    let (d, frame) = path.min_distance();
    if d <= POINT_MARGIN {
        return Err(CubeError::NonGeneric { frame });
    }
    // order[p] = strand at position p
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| first[i][0].total_cmp(&first[j][0]));

    let mut letters = Vec::new();
    for (k, pair) in path.frames.windows(2).enumerate() {
        let (f0, f1) = (&pair[0], &pair[1]);
        let mut crossings = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let d0 = f0[a][0] - f0[b][0];
                let d1 = f1[a][0] - f1[b][0];
                if d0.abs() < TIE || d1.abs() < TIE {
                    return Err(CubeError::NonGeneric { frame: k });
                }
                if (d0 < 0.0) != (d1 < 0.0) {
                    let time = d0 / (d0 - d1);
                    let ya = f0[a][1] + time * (f1[a][1] - f0[a][1]);
                    let yb = f0[b][1] + time * (f1[b][1] - f0[b][1]);
                    if (ya - yb).abs() < TIE {
                        return Err(CubeError::NonGeneric { frame: k });
                    }
                    crossings.push(Crossing { time, a, b, dy: ya - yb });
                }
            }
        }
        crossings.sort_by(|p, q| p.time.total_cmp(&q.time));
        for w in crossings.windows(2) {
            let shares = w[0].a == w[1].a || w[0].a == w[1].b || w[0].b == w[1].a || w[0].b == w[1].b;
            if shares && (w[1].time - w[0].time).abs() < TIE {
                return Err(CubeError::NonGeneric { frame: k });
            }
        }
        for c in crossings {
            let pa = order.iter().position(|&s| s == c.a).unwrap();
            let pb = order.iter().position(|&s| s == c.b).unwrap();
            if pa.abs_diff(pb) != 1 {
                return Err(CubeError::NonGeneric { frame: k });
            }
            let (left, p) = if pa < pb { (c.a, pa) } else { (c.b, pb) };
            // y of the left strand minus y of the right one
            let dy = if left == c.a { c.dy } else { -c.dy };
            letters.push(if dy < 0.0 { Letter::pos(p + 1) } else { Letter::neg(p + 1) });
            order.swap(p, p + 1);
        }
    }
    Ok(BraidWord::new(n, letters).expect("adjacent positions are in range"))
}

/// Samples and extracts, retrying with perturbed sample counts when a
/// sample lands on a non-generic instant.
pub fn extract_path_braid(p: &PathSpec, steps: usize) -> Result<BraidWord, CubeError> {
    let mut last = None;
    for bump in [0usize, 1, 3, 7, 13, 29, 61, 127] {
        let path = PointConfigPath::from_spec(p, steps + bump)?;
        match extract_braid(&path) {
            Ok(w) => return Ok(w),
            Err(e @ CubeError::NonGeneric { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_path_is_trivial() {
        let f = vec![[0.2, 0.5], [0.8, 0.5]];
        let p = PointConfigPath::new(vec![f.clone(); 10]).unwrap();
        assert!(extract_braid(&p).unwrap().is_empty());
    }

    #[test]
    fn calibration_braid_path_is_positive() {
        let w = extract_path_braid(&PathSpec::Braid, 200).unwrap();
        assert_eq!(w.to_ints(), vec![1]);
    }

    #[test]
    fn mirror_gives_inverse() {
        let p = PointConfigPath::from_spec(&PathSpec::Braid, 200).unwrap();
        let mirrored = PointConfigPath::new(
            p.frames.iter().map(|f| f.iter().map(|q| [q[0], 1.0 - q[1]]).collect()).collect(),
        )
        .unwrap();
        assert_eq!(extract_braid(&mirrored).unwrap().to_ints(), vec![-1]);
    }

    #[test]
    fn assoc_path_is_trivial() {
        assert!(extract_path_braid(&PathSpec::Assoc, 200).unwrap().is_empty());
    }

    #[test]
    fn sample_on_a_tie_is_retried() {
        // 201 samples hit t = 1/2 exactly, where both centers share x = 1/2
        let direct = PointConfigPath::from_spec(&PathSpec::Braid, 201).unwrap();
        assert!(matches!(extract_braid(&direct), Err(CubeError::NonGeneric { .. })));
        assert_eq!(extract_path_braid(&PathSpec::Braid, 201).unwrap().to_ints(), vec![1]);
    }

    #[test]
    fn colliding_points_are_rejected() {
        let p = PointConfigPath::new(vec![vec![[0.2, 0.5], [0.2, 0.5]]]).unwrap();
        assert!(extract_braid(&p).is_err());
        assert!(PointConfigPath::new(vec![vec![[0.0, 0.0]], vec![]]).is_err());
    }
}
