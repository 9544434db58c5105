//! Shape corpus: dense outlines, index-uniform sampling with ground-truth
//! adjacency, builtin generators and the on-disk shape database.

mod builtin;
mod db;
mod kanizsa;

pub use builtin::{builtin_db, builtin_shape, BuiltinShape, BUILTIN_DB_SHAPES, CANVAS_SIZE};
pub use db::{load_db, read_shape_file, save_db, DbEntry, ShapeDb, ShapeFile};
pub use kanizsa::{kanizsa_dots, KanizsaStimulus};

use std::collections::BTreeSet;
use std::path::PathBuf;

use thiserror::Error;

use crate::geometry::{Edge, Point2};

#[derive(Debug, Error)]
pub enum ShapeError {
    #[error("K must be at least 3, got {0}")]
    KTooSmall(usize),
    #[error("K = {k} exceeds the {available} outline points")]
    KExceedsOutline { k: usize, available: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("invalid outline: {0}")]
    InvalidOutline(String),
    #[error("{}: malformed shape file: {reason}", .path.display())]
    MalformedFile { path: PathBuf, reason: String },
    #[error("duplicate shape name {0:?}")]
    DuplicateName(String),
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Ordered closed sequence of points tracing a simple outline.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOutline {
    name: String,
    points: Vec<Point2>,
}

impl DenseOutline {
    /// Validates finiteness, distinct consecutive points (with wraparound)
    /// and absence of self-intersection.
    pub fn new(name: impl Into<String>, points: Vec<Point2>) -> Result<Self, ShapeError> {
        let name = name.into();
        if name.is_empty() {
            return Err(ShapeError::InvalidOutline("empty name".into()));
        }
        if points.len() < 3 {
            return Err(ShapeError::InvalidOutline(format!(
                "{name}: needs at least 3 points, got {}",
                points.len()
            )));
        }
        if let Some(i) = points.iter().position(|p| !p.is_finite()) {
            return Err(ShapeError::InvalidOutline(format!(
                "{name}: point {i} is not finite"
            )));
        }
        let n = points.len();
        for i in 0..n {
            if points[i] == points[(i + 1) % n] {
                return Err(ShapeError::InvalidOutline(format!(
                    "{name}: consecutive points {i} and {} coincide",
                    (i + 1) % n
                )));
            }
        }
        if let Some((i, j)) = first_self_intersection(&points) {
            return Err(ShapeError::InvalidOutline(format!(
                "{name}: segments {i} and {j} intersect"
            )));
        }
        Ok(Self { name, points })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `K` points drawn from an outline in its cyclic order, with the ground
/// truth adjacency `{i, (i + 1) mod K}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledShape {
    pub source: String,
    pub points: Vec<Point2>,
}

impl SampledShape {
    pub fn k(&self) -> usize {
        self.points.len()
    }

    /// Ground-truth edges in cycle order.
    pub fn truth_edges(&self) -> Vec<Edge> {
        cycle_edges(self.points.len())
    }

    pub fn truth_set(&self) -> BTreeSet<Edge> {
        self.truth_edges().into_iter().collect()
    }
}

pub(crate) fn cycle_edges(k: usize) -> Vec<Edge> {
    (0..k).map(|i| Edge::new(i, (i + 1) % k)).collect()
}

/// Indices `floor(j N / K)` for `j = 0..K`.
pub fn sample_indices(n: usize, k: usize) -> Vec<usize> {
    (0..k).map(|j| j * n / k).collect()
}

/// Samples `k` points from `outline`, evenly spaced by index.
pub fn sample_uniform(outline: &DenseOutline, k: usize) -> Result<SampledShape, ShapeError> {
    if k < 3 {
        return Err(ShapeError::KTooSmall(k));
    }
    let n = outline.len();
    if k > n {
        return Err(ShapeError::KExceedsOutline { k, available: n });
    }
    Ok(SampledShape {
        source: outline.name.clone(),
        points: sample_indices(n, k)
            .into_iter()
            .map(|i| outline.points[i])
            .collect(),
    })
}

fn first_self_intersection(points: &[Point2]) -> Option<(usize, usize)> {
    let n = points.len();
    let seg = |i: usize| (points[i], points[(i + 1) % n]);
    let boxes: Vec<[f64; 4]> = (0..n)
        .map(|i| {
            let (a, b) = seg(i);
            [a.x.min(b.x), a.x.max(b.x), a.y.min(b.y), a.y.max(b.y)]
        })
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let (bi, bj) = (&boxes[i], &boxes[j]);
            if bi[1] < bj[0] || bj[1] < bi[0] || bi[3] < bj[2] || bj[3] < bi[2] {
                continue;
            }
            let (a, b) = seg(i);
            let (c, d) = seg(j);
            if adjacent {
                if n > 3 && adjacent_segments_overlap(a, b, c, d) {
                    return Some((i, j));
                }
            } else if segments_intersect(&a, &b, &c, &d) {
                return Some((i, j));
            }
        }
    }
    None
}

// Adjacent segments share exactly one endpoint; they only conflict when they
// fold back onto each other.
fn adjacent_segments_overlap(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let (shared, p, q) = if b == c {
        (b, a, d)
    } else if d == a {
        (a, b, c)
    } else {
        return segments_intersect(&a, &b, &c, &d);
    };
    let u = (p.x - shared.x, p.y - shared.y);
    let v = (q.x - shared.x, q.y - shared.y);
    let cross = u.0 * v.1 - u.1 * v.0;
    let dot = u.0 * v.0 + u.1 * v.1;
    cross == 0.0 && dot > 0.0
}

fn orient(a: &Point2, b: &Point2, c: &Point2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn on_segment(a: &Point2, b: &Point2, p: &Point2) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

pub(crate) fn segments_intersect(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(c, d, a))
        || (d2 == 0.0 && on_segment(c, d, b))
        || (d3 == 0.0 && on_segment(a, b, c))
        || (d4 == 0.0 && on_segment(a, b, d))
}
