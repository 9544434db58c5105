use std::f64::consts::{FRAC_PI_6, TAU};

use crate::geometry::Point2;

/// Edge dots of a Kanizsa triangle: three pac-man outlines whose 60° mouths
/// face the centre of an equilateral triangle.
#[derive(Debug, Clone)]
pub struct KanizsaStimulus {
    pub points: Vec<Point2>,
    /// Index of the pac-man each point belongs to.
    pub cluster: Vec<usize>,
    /// Disk centres, which are also the illusory triangle's corners.
    pub centers: [Point2; 3],
}

/// Pac-man outlines of radius `radius` on the corners of an equilateral
/// triangle with side `side`, centred on the 512 canvas. Dots are spaced
/// roughly `spacing` apart along each outline.
pub fn kanizsa_dots(side: f64, radius: f64, spacing: f64) -> KanizsaStimulus {
    let h = side * 3f64.sqrt() / 2.0;
    let centroid = Point2::new(256.0, 256.0);
    let centers = [
        Point2::new(centroid.x - side / 2.0, centroid.y - h / 3.0),
        Point2::new(centroid.x + side / 2.0, centroid.y - h / 3.0),
        Point2::new(centroid.x, centroid.y + 2.0 * h / 3.0),
    ];
    let mut points = Vec::new();
    let mut cluster = Vec::new();
    for (c, center) in centers.iter().enumerate() {
        let facing = (centroid.y - center.y).atan2(centroid.x - center.x);
        let at = |r: f64, t: f64| Point2::new(center.x + r * t.cos(), center.y + r * t.sin());
        let before = points.len();

        points.push(*center);
        let radial = (radius / spacing).round().max(1.0) as usize;
        for i in 1..=radial {
            points.push(at(radius * i as f64 / radial as f64, facing - FRAC_PI_6));
        }
        let sweep = TAU - 2.0 * FRAC_PI_6;
        let arc = (sweep * radius / spacing).round().max(2.0) as usize;
        for i in 1..arc {
            points.push(at(
                radius,
                facing - FRAC_PI_6 - sweep * i as f64 / arc as f64,
            ));
        }
        for i in (1..=radial).rev() {
            points.push(at(radius * i as f64 / radial as f64, facing + FRAC_PI_6));
        }
        cluster.extend(std::iter::repeat_n(c, points.len() - before));
    }
    KanizsaStimulus {
        points,
        cluster,
        centers,
    }
}
