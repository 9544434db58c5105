//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use dotgroup::geometry::Point2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_points(seed: u64, k: usize) -> Vec<Point2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..k)
        .map(|_| Point2::new(rng.gen_range(0.0..512.0), rng.gen_range(0.0..512.0)))
        .collect()
}

fn cross(o: &Point2, a: &Point2, b: &Point2) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Number of strict convex hull corners (Andrew's monotone chain).
pub fn hull_size(points: &[Point2]) -> usize {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    let mut hull: Vec<Point2> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        for p in &pts {
            while hull.len() >= start + 2
                && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 0.0
            {
                hull.pop();
            }
            hull.push(*p);
        }
        hull.pop();
        if pass == 0 {
            pts.reverse();
        }
    }
    hull.len()
}

/// Circumcircle centre and squared radius.
pub fn circumcircle(a: &Point2, b: &Point2, c: &Point2) -> (Point2, f64) {
    let d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    let sa = a.x * a.x + a.y * a.y;
    let sb = b.x * b.x + b.y * b.y;
    let sc = c.x * c.x + c.y * c.y;
    let ux = (sa * (b.y - c.y) + sb * (c.y - a.y) + sc * (a.y - b.y)) / d;
    let uy = (sa * (c.x - b.x) + sb * (a.x - c.x) + sc * (b.x - a.x)) / d;
    let center = Point2::new(ux, uy);
    (center, center.distance_squared(a))
}

/// Index of a point strictly inside some triangle's circumcircle, if any.
pub fn empty_circle_violation(
    points: &[Point2],
    triangles: &[[usize; 3]],
) -> Option<([usize; 3], usize)> {
    for t in triangles {
        let (center, r2) = circumcircle(&points[t[0]], &points[t[1]], &points[t[2]]);
        for (i, p) in points.iter().enumerate() {
            if !t.contains(&i) && center.distance_squared(p) < r2 * (1.0 - 1e-9) {
                return Some((*t, i));
            }
        }
    }
    None
}

/// Total weight of a minimum spanning tree by Prim's algorithm on the dense
/// distance matrix.
pub fn prim_weight(points: &[Point2]) -> f64 {
    let n = points.len();
    let mut in_tree = vec![false; n];
    let mut best = vec![f64::INFINITY; n];
    best[0] = 0.0;
    let mut total = 0.0;
    for _ in 0..n {
        let u = (0..n)
            .filter(|&i| !in_tree[i])
            .min_by(|&a, &b| best[a].total_cmp(&best[b]))
            .unwrap();
        in_tree[u] = true;
        total += best[u];
        for v in 0..n {
            if !in_tree[v] {
                best[v] = best[v].min(points[u].distance(&points[v]));
            }
        }
    }
    total
}

/// Winding number of `polygon` around `p`.
pub fn winding_number(p: &Point2, polygon: &[Point2]) -> i32 {
    let mut wn = 0;
    for i in 0..polygon.len() {
        let a = &polygon[i];
        let b = &polygon[(i + 1) % polygon.len()];
        if a.y <= p.y {
            if b.y > p.y && cross(a, b, p) > 0.0 {
                wn += 1;
            }
        } else if b.y <= p.y && cross(a, b, p) < 0.0 {
            wn -= 1;
        }
    }
    wn
}

/// Distance from `p` to the closest polygon edge.
pub fn distance_to_outline(p: &Point2, polygon: &[Point2]) -> f64 {
    (0..polygon.len())
        .map(|i| {
            let a = polygon[i];
            let b = polygon[(i + 1) % polygon.len()];
            let (dx, dy) = (b.x - a.x, b.y - a.y);
            let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy)).clamp(0.0, 1.0);
            p.distance(&Point2::new(a.x + t * dx, a.y + t * dy))
        })
        .fold(f64::INFINITY, f64::min)
}

/// Triangles connected through shared edges, by breadth-first search.
pub fn edge_connected(triangles: &[[usize; 3]]) -> bool {
    if triangles.is_empty() {
        return true;
    }
    let shares_edge =
        |s: &[usize; 3], t: &[usize; 3]| s.iter().filter(|v| t.contains(v)).count() == 2;
    let mut seen = vec![false; triangles.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..triangles.len() {
            if !seen[j] && shares_edge(&triangles[i], &triangles[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Edges of a minimum spanning tree by Prim's algorithm, as `(parent, child)`.
pub fn prim_edges(points: &[Point2]) -> Vec<(usize, usize)> {
    let n = points.len();
    let mut in_tree = vec![false; n];
    let mut best = vec![(f64::INFINITY, 0usize); n];
    best[0].0 = 0.0;
    let mut edges = Vec::new();
    for step in 0..n {
        let u = (0..n)
            .filter(|&i| !in_tree[i])
            .min_by(|&a, &b| best[a].0.total_cmp(&best[b].0))
            .unwrap();
        in_tree[u] = true;
        if step > 0 {
            edges.push((best[u].1, u));
        }
        for v in 0..n {
            let d = points[u].distance(&points[v]);
            if !in_tree[v] && d < best[v].0 {
                best[v] = (d, u);
            }
        }
    }
    edges
}

/// Sum of edge lengths taken in ascending order, so equal trees give
/// bit-identical totals.
pub fn sorted_weight(points: &[Point2], edges: impl IntoIterator<Item = (usize, usize)>) -> f64 {
    let mut w: Vec<f64> = edges
        .into_iter()
        .map(|(a, b)| points[a].distance(&points[b]))
        .collect();
    w.sort_by(f64::total_cmp);
    w.into_iter().sum()
}
