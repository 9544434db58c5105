//! SVG stimuli: dots alone, every Delaunay triangle, only the triangles
//! inside the source outline, and grouping results drawn over the dots.

use std::fmt::Write;
use std::str::FromStr;

use crate::geometry::{triangle_centroid, Edge, Point2, TriangulatedGraph};
use crate::shapes::CANVAS_SIZE;

pub const DOT_RADIUS: f64 = 10.0;
pub const BACKGROUND: &str = "#CCCCCC";
pub const DOT_FILL: &str = "#CC0000";
pub const TRIANGLE_FILL: &str = "#D9D9D9";
pub const TRIANGLE_STROKE: &str = "#B3B3B3";
pub const EDGE_STROKE: &str = "#0000CC";

/// Points within this distance of the outline count as inside.
pub const BOUNDARY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    Points,
    AllTriangles,
    Triangles,
    Grouping,
}

impl FromStr for RenderMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "points" => Ok(RenderMode::Points),
            "all-triangles" => Ok(RenderMode::AllTriangles),
            "triangles" => Ok(RenderMode::Triangles),
            "grouping" => Ok(RenderMode::Grouping),
            other => Err(format!(
                "unknown mode {other:?} (expected points, all-triangles, triangles or grouping)"
            )),
        }
    }
}

/// Even-odd containment test; points on the outline (within
/// [`BOUNDARY_TOLERANCE`]) are inside.
pub fn point_in_polygon(p: &Point2, polygon: &[Point2]) -> bool {
    let n = polygon.len();
    let mut inside = false;
    for i in 0..n {
        let a = &polygon[i];
        let b = &polygon[(i + 1) % n];
        if segment_distance(p, a, b) <= BOUNDARY_TOLERANCE {
            return true;
        }
        if (a.y > p.y) != (b.y > p.y) {
            let x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if p.x < x {
                inside = !inside;
            }
        }
    }
    inside
}

fn segment_distance(p: &Point2, a: &Point2, b: &Point2) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0)
    };
    p.distance(&Point2::new(a.x + t * dx, a.y + t * dy))
}

/// Alive triangles whose centroid lies inside `outline`.
pub fn inside_triangles(graph: &TriangulatedGraph, outline: &[Point2]) -> Vec<[usize; 3]> {
    let v = graph.vertices();
    graph
        .alive_triangles()
        .filter(|t| point_in_polygon(&triangle_centroid(&v[t[0]], &v[t[1]], &v[t[2]]), outline))
        .collect()
}

/// Minimal SVG writer on the 512 x 512 canvas. The y axis points up, so
/// coordinates are flipped on output.
pub struct Svg {
    body: String,
}

impl Default for Svg {
    fn default() -> Self {
        Self::new()
    }
}

impl Svg {
    pub fn new() -> Self {
        let size = CANVAS_SIZE;
        let mut body = String::new();
        writeln!(
            body,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
        )
        .unwrap();
        writeln!(
            body,
            r#"<rect x="0" y="0" width="{size}" height="{size}" fill="{BACKGROUND}"/>"#
        )
        .unwrap();
        Self { body }
    }

    fn y(y: f64) -> f64 {
        CANVAS_SIZE - y
    }

    pub fn triangle(&mut self, a: &Point2, b: &Point2, c: &Point2) {
        writeln!(
            self.body,
            r#"<polygon points="{:.3},{:.3} {:.3},{:.3} {:.3},{:.3}" fill="{TRIANGLE_FILL}" stroke="{TRIANGLE_STROKE}" stroke-width="1"/>"#,
            a.x,
            Self::y(a.y),
            b.x,
            Self::y(b.y),
            c.x,
            Self::y(c.y)
        )
        .unwrap();
    }

    pub fn line(&mut self, a: &Point2, b: &Point2) {
        writeln!(
            self.body,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{EDGE_STROKE}" stroke-width="3"/>"#,
            a.x,
            Self::y(a.y),
            b.x,
            Self::y(b.y)
        )
        .unwrap();
    }

    pub fn dot(&mut self, p: &Point2) {
        writeln!(
            self.body,
            r#"<circle cx="{:.3}" cy="{:.3}" r="{DOT_RADIUS}" fill="{DOT_FILL}"/>"#,
            p.x,
            Self::y(p.y)
        )
        .unwrap();
    }

    pub fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

pub fn render_points(points: &[Point2]) -> String {
    let mut svg = Svg::new();
    points.iter().for_each(|p| svg.dot(p));
    svg.finish()
}

/// Triangles under the dots.
pub fn render_triangles(points: &[Point2], triangles: &[[usize; 3]]) -> String {
    let mut svg = Svg::new();
    for t in triangles {
        svg.triangle(&points[t[0]], &points[t[1]], &points[t[2]]);
    }
    points.iter().for_each(|p| svg.dot(p));
    svg.finish()
}

/// Selected edges in blue under the dots.
pub fn render_grouping(points: &[Point2], edges: &[Edge]) -> String {
    let mut svg = Svg::new();
    for e in edges {
        svg.line(&points[e.a], &points[e.b]);
    }
    points.iter().for_each(|p| svg.dot(p));
    svg.finish()
}
