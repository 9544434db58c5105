use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;
use std::str::FromStr;

use super::{DenseOutline, ShapeDb, ShapeError};
use crate::geometry::Point2;

/// Side of the square canvas the builtins are centered in.
pub const CANVAS_SIZE: f64 = 512.0;

const CENTER: f64 = CANVAS_SIZE / 2.0;

/// Synthetic outline families. All are simple, counterclockwise in a y-up
/// frame, and start at a fixed vertex so output is reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinShape {
    Circle,
    Ellipse,
    Square,
    Star5,
    L,
    U,
    Comb,
}

/// The five-shape reference database used by the examples and tests.
pub const BUILTIN_DB_SHAPES: [BuiltinShape; 5] = [
    BuiltinShape::Circle,
    BuiltinShape::Star5,
    BuiltinShape::Square,
    BuiltinShape::Ellipse,
    BuiltinShape::L,
];

impl BuiltinShape {
    pub const ALL: [BuiltinShape; 7] = [
        BuiltinShape::Circle,
        BuiltinShape::Ellipse,
        BuiltinShape::Square,
        BuiltinShape::Star5,
        BuiltinShape::L,
        BuiltinShape::U,
        BuiltinShape::Comb,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BuiltinShape::Circle => "circle",
            BuiltinShape::Ellipse => "ellipse",
            BuiltinShape::Square => "square",
            BuiltinShape::Star5 => "star5",
            BuiltinShape::L => "L",
            BuiltinShape::U => "U",
            BuiltinShape::Comb => "comb",
        }
    }

    fn polygon(&self) -> Option<Vec<Point2>> {
        let p = |x: f64, y: f64| Point2::new(x, y);
        let poly = match self {
            BuiltinShape::Square => vec![
                p(56.0, 56.0),
                p(456.0, 56.0),
                p(456.0, 456.0),
                p(56.0, 456.0),
            ],
            BuiltinShape::Star5 => (0..10)
                .map(|i| {
                    let r = if i % 2 == 0 { 200.0 } else { 80.0 };
                    let t = FRAC_PI_2 + i as f64 * PI / 5.0;
                    p(CENTER + r * t.cos(), CENTER + r * t.sin())
                })
                .collect(),
            BuiltinShape::L => vec![
                p(106.0, 56.0),
                p(406.0, 56.0),
                p(406.0, 176.0),
                p(226.0, 176.0),
                p(226.0, 456.0),
                p(106.0, 456.0),
            ],
            // Two uprights joined by a base; the slot between them is the
            // deep concavity.
            BuiltinShape::U => vec![
                p(96.0, 56.0),
                p(416.0, 56.0),
                p(416.0, 456.0),
                p(336.0, 456.0),
                p(336.0, 136.0),
                p(176.0, 136.0),
                p(176.0, 456.0),
                p(96.0, 456.0),
            ],
            BuiltinShape::Comb => {
                // Base bar with four teeth 60 wide separated by 40-wide gaps.
                let mut v = vec![p(76.0, 56.0), p(436.0, 56.0)];
                for tooth in (0..4).rev() {
                    let left = 76.0 + 100.0 * tooth as f64;
                    let right = left + 60.0;
                    v.push(p(right, 456.0));
                    v.push(p(left, 456.0));
                    if tooth > 0 {
                        v.push(p(left, 156.0));
                        v.push(p(left - 40.0, 156.0));
                    }
                }
                v
            }
            BuiltinShape::Circle | BuiltinShape::Ellipse => return None,
        };
        Some(poly)
    }
}

impl fmt::Display for BuiltinShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinShape {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BuiltinShape::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ShapeError::BadParameter(format!("unknown builtin shape {s:?}")))
    }
}

/// Generates a dense outline of `n` points, spaced evenly by arc length,
/// centered in the 512 x 512 canvas.
pub fn builtin_shape(kind: BuiltinShape, n: usize) -> Result<DenseOutline, ShapeError> {
    if n < 50 {
        return Err(ShapeError::BadParameter(format!(
            "builtin outlines need at least 50 points, got {n}"
        )));
    }
    let points = match kind {
        BuiltinShape::Circle => (0..n)
            .map(|j| {
                let t = TAU * j as f64 / n as f64;
                Point2::new(CENTER + 200.0 * t.cos(), CENTER + 200.0 * t.sin())
            })
            .collect(),
        BuiltinShape::Ellipse => ellipse(200.0, 100.0, n),
        _ => resample_polygon(&kind.polygon().unwrap(), n),
    };
    DenseOutline::new(kind.name(), points)
}

/// Dense outlines of [`BUILTIN_DB_SHAPES`] with 1000 points each.
pub fn builtin_db() -> ShapeDb {
    let outlines = BUILTIN_DB_SHAPES
        .iter()
        .map(|&kind| builtin_shape(kind, 1000).expect("builtin parameters are valid"))
        .collect();
    ShapeDb::from_outlines(outlines).expect("builtin outlines are valid and distinct")
}

fn resample_polygon(vertices: &[Point2], n: usize) -> Vec<Point2> {
    let m = vertices.len();
    let mut cumulative = Vec::with_capacity(m + 1);
    cumulative.push(0.0);
    for i in 0..m {
        let len = vertices[i].distance(&vertices[(i + 1) % m]);
        cumulative.push(cumulative[i] + len);
    }
    let perimeter = cumulative[m];
    let mut edge = 0;
    (0..n)
        .map(|j| {
            let s = perimeter * j as f64 / n as f64;
            while edge + 1 < m && cumulative[edge + 1] <= s {
                edge += 1;
            }
            let (a, b) = (vertices[edge], vertices[(edge + 1) % m]);
            let t = (s - cumulative[edge]) / (cumulative[edge + 1] - cumulative[edge]);
            Point2::new(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)
        })
        .collect()
}

fn ellipse(a: f64, b: f64, n: usize) -> Vec<Point2> {
    // Tabulate arc length on a fine parameter grid and invert it linearly.
    let fine = 64 * n;
    let at = |t: f64| Point2::new(CENTER + a * t.cos(), CENTER + b * t.sin());
    let mut cumulative = Vec::with_capacity(fine + 1);
    cumulative.push(0.0);
    let mut prev = at(0.0);
    for i in 1..=fine {
        let p = at(TAU * i as f64 / fine as f64);
        cumulative.push(cumulative[i - 1] + prev.distance(&p));
        prev = p;
    }
    let total = cumulative[fine];
    let mut i = 0;
    (0..n)
        .map(|j| {
            let s = total * j as f64 / n as f64;
            while cumulative[i + 1] <= s {
                i += 1;
            }
            let frac = (s - cumulative[i]) / (cumulative[i + 1] - cumulative[i]);
            at(TAU * (i as f64 + frac) / fine as f64)
        })
        .collect()
}
