//! Planar geometry kernel: points, tolerance-aware predicates, Delaunay
//! triangulation and the boundary-aware triangulated graph that the surface
//! grouping carves.

mod delaunay;
mod graph;

pub use delaunay::delaunay;
pub use graph::TriangulatedGraph;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Two input points closer than this are rejected as duplicates.
pub const DUPLICATE_TOLERANCE: f64 = 1e-9;

/// Relative tolerance applied to normalized orientation and in-circle
/// determinants. Adequate for a few thousand points in pixel coordinates;
/// this is not an exact-arithmetic kernel.
pub const PREDICATE_EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("at least 3 points are required, got {0}")]
    TooFewPoints(usize),
    #[error("all points are collinear")]
    DegenerateInput,
    #[error("points {0} and {1} are duplicates")]
    DuplicatePoints(usize, usize),
    #[error("point {0} has a non-finite coordinate")]
    NonFinitePoint(usize),
    #[error("({}, {}) is not a boundary edge", .0.a, .0.b)]
    NotBoundaryEdge(Edge),
    #[error("({}, {}) is not removable: its opposite vertex is on the boundary", .0.a, .0.b)]
    NotRemovable(Edge),
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: &Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn distance_squared(&self, other: &Point2) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Self { x, y }
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

/// Undirected edge between two vertex indices, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Edge {
    pub a: usize,
    pub b: usize,
}

impl Edge {
    pub fn new(i: usize, j: usize) -> Self {
        if i <= j {
            Self { a: i, b: j }
        } else {
            Self { a: j, b: i }
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }
}

impl From<[usize; 2]> for Edge {
    fn from([i, j]: [usize; 2]) -> Self {
        Edge::new(i, j)
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.a, e.b]
    }
}

/// Sign of a predicate after applying the relative tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Sign {
    Negative,
    Zero,
    Positive,
}

/// Twice the signed area of `abc`; positive when counterclockwise.
pub(crate) fn cross(a: &Point2, b: &Point2, c: &Point2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Orientation of `c` relative to the directed line `a -> b`. The
/// determinant is normalized by `|b - a| |c - a|`, so the tolerance is on
/// the sine of the angle at `a`.
pub(crate) fn orientation(a: &Point2, b: &Point2, c: &Point2) -> Sign {
    let det = cross(a, b, c);
    let scale = a.distance(b) * a.distance(c);
    classify(det, scale)
}

/// In-circle test for `d` against the circumcircle of the counterclockwise
/// triangle `abc`; positive when `d` lies strictly inside.
#[cfg(test)]
pub(crate) fn in_circle(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> Sign {
    let (det, scale) = in_circle_raw(a, b, c, d);
    classify(det, scale)
}

/// Raw in-circle determinant and its normalization (squared sum of the
/// squared distances to `d`, so both scale as length^4). The determinant is
/// antisymmetric under any swap of two arguments.
pub(crate) fn in_circle_raw(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> (f64, f64) {
    let (adx, ady) = (a.x - d.x, a.y - d.y);
    let (bdx, bdy) = (b.x - d.x, b.y - d.y);
    let (cdx, cdy) = (c.x - d.x, c.y - d.y);
    let ad = adx * adx + ady * ady;
    let bd = bdx * bdx + bdy * bdy;
    let cd = cdx * cdx + cdy * cdy;
    let det =
        adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
    let scale = (ad + bd + cd) * (ad + bd + cd);
    (det, scale)
}

fn classify(det: f64, scale: f64) -> Sign {
    if det.abs() <= PREDICATE_EPSILON * scale {
        Sign::Zero
    } else if det > 0.0 {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Centroid of a triangle.
pub fn triangle_centroid(a: &Point2, b: &Point2, c: &Point2) -> Point2 {
    Point2::new((a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0)
}
