use num_complex::Complex64;
use rayon::prelude::*;

use super::simple::ring_tags;
use super::sign::{Sign, SignSeq};
use crate::error::{Error, Result};
use crate::mp::principal_sqrt;

/// Default cap on radical-tree nodes visited by [`approx_zero_cloud`].
pub const DEFAULT_BUDGET: u128 = 1 << 24;

/// Relative distance to a ring boundary below which a point gets both tags.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// Subtrees below this many levels are walked sequentially.
const SPLIT_LEVELS: usize = 10;

const PHI: f64 = 1.618_033_988_749_895;
const TWO_PHI: f64 = 3.236_067_977_499_79;

/// An approximate simple zero `(2φ)ⁿ(y(s) − φ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CloudPoint {
    pub z: Complex64,
    pub ring: i32,
    /// Neighbouring ring when `|z|` sits on a boundary.
    pub alt_ring: Option<i32>,
    /// Address of the primitive zero of `P_n` the point came from.
    pub address: SignSeq,
}

impl CloudPoint {
    pub fn in_ring(&self, ring: i32) -> bool {
        self.ring == ring || self.alt_ring == Some(ring)
    }
}

/// Radical-tree nodes for addresses of length `n − 1`.
pub fn cloud_nodes(n: usize) -> u128 {
    (1u128 << n) - 2
}

struct Walk {
    n: usize,
    target: i32,
    scale: f64,
}

impl Walk {
    fn leaf(&self, y: Complex64, path: u64, out: &mut Vec<CloudPoint>) {
        let z = (y - PHI) * self.scale;
        let r = z.norm();
        if r == 0.0 || !r.is_finite() {
            return;
        }
        let (ring, alt) = ring_tags(r, BOUNDARY_TOL);
        if ring != self.target && alt != Some(self.target) {
            return;
        }
        // level j (0-based, innermost first) holds s_{n−1−j}
        let len = self.n - 1;
        let word = (1..=len)
            .map(|i| {
                if path >> (len - i) & 1 == 1 {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            })
            .collect();
        out.push(CloudPoint {
            z,
            ring,
            alt_ring: alt,
            address: SignSeq::address(word),
        });
    }

    /// Depth-first walk from a node holding `v` after `level` signs are chosen.
    fn descend(&self, v: Complex64, level: usize, path: u64, out: &mut Vec<CloudPoint>) {
        if level == self.n - 1 {
            self.leaf(v, path, out);
            return;
        }
        let root = principal_sqrt(v + 1.0);
        self.descend(root, level + 1, path, out);
        self.descend(-root, level + 1, path | 1 << level, out);
    }
}

/// Approximate simple zeros in ring `S_{n−n1}` from the primitive zeros
/// of `P_n` lying in `φ + S_{−n1}`.
///
/// The addresses form a binary tree of nested radicals; it is walked
/// depth-first with one square root per node, and disjoint subtrees are
/// evaluated in parallel. Output is sorted by real, then imaginary part.
pub fn approx_zero_cloud(n: usize, n1: usize, budget: u128) -> Result<Vec<CloudPoint>> {
    if !(n1 >= 2 && n >= n1) {
        return Err(Error::InvalidArgument(format!(
            "need n >= n1 >= 2, got n = {n}, n1 = {n1}"
        )));
    }
    if n > 62 {
        return Err(Error::InvalidArgument(format!("n = {n} is too deep")));
    }
    let needed = cloud_nodes(n);
    if needed > budget {
        return Err(Error::Budget { needed, budget });
    }
    let walk = Walk {
        n,
        target: n as i32 - n1 as i32,
        scale: TWO_PHI.powi(n as i32),
    };

    // Breadth-first over the first levels to get independent subtrees.
    let split = SPLIT_LEVELS.min(n - 1);
    let sqrt2 = 2f64.sqrt();
    let mut frontier = vec![(Complex64::new(sqrt2, 0.0), 0u64), (Complex64::new(-sqrt2, 0.0), 1u64)];
    for level in 1..split {
        frontier = frontier
            .into_iter()
            .flat_map(|(v, path)| {
                let root = principal_sqrt(v + 1.0);
                [(root, path), (-root, path | 1 << level)]
            })
            .collect();
    }
    let mut points: Vec<CloudPoint> = frontier
        .into_par_iter()
        .flat_map_iter(|(v, path)| {
            let mut out = Vec::new();
            walk.descend(v, split, path, &mut out);
            out
        })
        .collect();
    points.sort_by(|a, b| a.z.re.total_cmp(&b.z.re).then(a.z.im.total_cmp(&b.z.im)));
    Ok(points)
}
