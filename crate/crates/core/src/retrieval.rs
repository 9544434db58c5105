//! Shape signatures and retrieval.
//!
//! A signature is the magnitude spectrum of the centroid-distance sequence,
//! bins 1 through 10, each divided by the DC bin. Dividing by DC removes
//! scale; magnitudes discard the starting point and traversal direction;
//! centroid distances are unaffected by translation and rotation.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::Point2;
use crate::grouping::{group_surface, grouping_score, GroupingError, Method};
use crate::shapes::{sample_uniform, DenseOutline, ShapeDb, ShapeError};

pub const DESCRIPTOR_LEN: usize = 10;

/// Shortest sequence that yields ten non-DC coefficients.
pub const MIN_SEQUENCE_LEN: usize = 2 * DESCRIPTOR_LEN + 1;

pub const RETRIEVAL_START: usize = 30;
pub const RETRIEVAL_STEP: usize = 10;
pub const DEFAULT_RETRIEVAL_CAP: usize = 500;

/// Required ratio between the runner-up distance and the correct one.
pub const RETRIEVAL_MARGIN: f64 = 3.0;

pub const DEFAULT_M_THRESHOLD: f64 = 0.8;

#[derive(Debug, Error)]
pub enum RetrievalError {
    #[error("a descriptor needs at least {MIN_SEQUENCE_LEN} points, got {0}")]
    SequenceTooShort(usize),
    #[error("all points coincide with their centroid")]
    ZeroDc,
    #[error("descriptor component {index} is {value}; components must be finite and non-negative")]
    InvalidComponent { index: usize, value: f64 },
    #[error("unknown shape {0:?}")]
    UnknownShape(String),
    #[error("retrieval needs at least 2 shapes in the database, got {0}")]
    TooFewShapes(usize),
    #[error(transparent)]
    Grouping(#[from] GroupingError),
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// Ten DC-normalized Fourier magnitudes of a centroid-distance sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; DESCRIPTOR_LEN]", into = "[f64; DESCRIPTOR_LEN]")]
pub struct Descriptor([f64; DESCRIPTOR_LEN]);

impl Descriptor {
    pub fn new(values: [f64; DESCRIPTOR_LEN]) -> Result<Self, RetrievalError> {
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v >= 0.0))
        {
            return Err(RetrievalError::InvalidComponent { index, value });
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[f64; DESCRIPTOR_LEN] {
        &self.0
    }
}

impl TryFrom<[f64; DESCRIPTOR_LEN]> for Descriptor {
    type Error = RetrievalError;

    fn try_from(values: [f64; DESCRIPTOR_LEN]) -> Result<Self, Self::Error> {
        Descriptor::new(values)
    }
}

impl From<Descriptor> for [f64; DESCRIPTOR_LEN] {
    fn from(d: Descriptor) -> Self {
        d.0
    }
}

/// Computes the descriptor of a closed sequence of points.
pub fn descriptor(sequence: &[Point2]) -> Result<Descriptor, RetrievalError> {
    let n = sequence.len();
    if n < MIN_SEQUENCE_LEN {
        return Err(RetrievalError::SequenceTooShort(n));
    }
    let (sx, sy) = sequence
        .iter()
        .fold((0.0, 0.0), |(sx, sy), p| (sx + p.x, sy + p.y));
    let centroid = Point2::new(sx / n as f64, sy / n as f64);
    let dist: Vec<f64> = sequence.iter().map(|p| p.distance(&centroid)).collect();

    let dc: f64 = dist.iter().sum();
    if dc.is_nan() || dc <= 0.0 {
        return Err(RetrievalError::ZeroDc);
    }
    let mut values = [0.0; DESCRIPTOR_LEN];
    for (slot, k) in values.iter_mut().zip(1..) {
        let (mut re, mut im) = (0.0, 0.0);
        for (j, d) in dist.iter().enumerate() {
            // Reduce k * j modulo n before scaling to keep the angle exact.
            let angle = TAU * ((k * j) % n) as f64 / n as f64;
            re += d * angle.cos();
            im -= d * angle.sin();
        }
        *slot = re.hypot(im) / dc;
    }
    Descriptor::new(values)
}

/// Euclidean distance between descriptors.
pub fn distance(a: &Descriptor, b: &Descriptor) -> f64 {
    a.0.iter()
        .zip(&b.0)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Log entry for one sample size tried by [`retrieve`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RetrievalStep {
    pub n: usize,
    /// Points on the reconstructed boundary.
    pub boundary_len: usize,
    /// Distance to every database entry, in database order; empty when the
    /// boundary was too short for a descriptor.
    pub distances: Vec<f64>,
    /// The correct shape is the nearest entry.
    pub nearest: bool,
    /// Every other entry is more than three times farther away.
    pub margin: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RetrievalOutcome {
    pub id: String,
    /// Sample size at which the shape became retrievable; `None` when the
    /// cap was reached first.
    pub n: Option<usize>,
    pub cap: usize,
    pub steps: Vec<RetrievalStep>,
}

impl RetrievalOutcome {
    pub fn succeeded(&self) -> bool {
        self.n.is_some()
    }
}

/// Finds the smallest sample size `n = 30, 40, ...` at which the surface
/// reconstruction of shape `id` is nearest to its own database entry by a
/// factor of more than three.
///
/// The loop ends at `cap` or at the outline's own point count, whichever is
/// smaller.
pub fn retrieve(db: &ShapeDb, id: &str, cap: usize) -> Result<RetrievalOutcome, RetrievalError> {
    if db.len() < 2 {
        return Err(RetrievalError::TooFewShapes(db.len()));
    }
    let target = db
        .position(id)
        .ok_or_else(|| RetrievalError::UnknownShape(id.to_string()))?;
    let outline = &db.entries()[target].outline;
    let limit = cap.min(outline.len());

    let mut steps = Vec::new();
    let mut n = RETRIEVAL_START;
    while n <= limit {
        let sample = sample_uniform(outline, n)?;
        let grouping = group_surface(&sample.points)?;
        let boundary: Vec<Point2> = grouping
            .boundary
            .iter()
            .map(|&i| sample.points[i])
            .collect();
        let mut step = RetrievalStep {
            n,
            boundary_len: boundary.len(),
            distances: Vec::new(),
            nearest: false,
            margin: false,
        };
        if boundary.len() >= MIN_SEQUENCE_LEN {
            let query = descriptor(&boundary)?;
            step.distances = db
                .entries()
                .iter()
                .map(|e| distance(&query, &e.descriptor))
                .collect();
            let own = step.distances[target];
            let others = step
                .distances
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != target);
            step.nearest = step.distances.iter().all(|&s| own <= s);
            step.margin =
                others.map(|(_, &s)| s / own).fold(f64::INFINITY, f64::min) > RETRIEVAL_MARGIN;
        }
        let done = step.nearest && step.margin;
        steps.push(step);
        if done {
            return Ok(RetrievalOutcome {
                id: id.to_string(),
                n: Some(n),
                cap,
                steps,
            });
        }
        n += RETRIEVAL_STEP;
    }
    Ok(RetrievalOutcome {
        id: id.to_string(),
        n: None,
        cap,
        steps,
    })
}

/// `K = 10, 20, ..., 200`.
pub fn default_grid() -> Vec<usize> {
    (10..=200).step_by(10).collect()
}

/// Smallest grid value from which every score stays at or above
/// `threshold`. `trace` must be sorted by `K`.
pub fn m_from_trace(trace: &[(usize, f64)], threshold: f64) -> Option<usize> {
    let mut m = None;
    for &(k, xi) in trace.iter().rev() {
        if xi >= threshold {
            m = Some(k);
        } else {
            break;
        }
    }
    m
}

/// Grouping score at each grid size and the resulting m value.
#[derive(Debug, Clone, PartialEq)]
pub struct MMetric {
    pub m: Option<usize>,
    pub trace: Vec<(usize, f64)>,
}

/// Scores `method` on `outline` at every grid size and reports the point
/// after which the score never drops below `threshold`.
pub fn m_metric(
    outline: &DenseOutline,
    method: Method,
    threshold: f64,
    grid: &[usize],
) -> Result<MMetric, RetrievalError> {
    let mut trace = Vec::with_capacity(grid.len());
    for &k in grid {
        let sample = sample_uniform(outline, k)?;
        let result = method.group(&sample.points)?;
        trace.push((k, grouping_score(&result, &sample)?));
    }
    Ok(MMetric {
        m: m_from_trace(&trace, threshold),
        trace,
    })
}
