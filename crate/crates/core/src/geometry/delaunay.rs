use super::{in_circle_raw, orientation, GeometryError, Point2, Sign, TriangulatedGraph};
use super::{DUPLICATE_TOLERANCE, PREDICATE_EPSILON};

const NONE: usize = usize::MAX;

/// Builds the Delaunay triangulation of `points`.
///
/// Points are inserted incrementally in input order with Lawson flips.
/// Cocircular quadrilaterals keep the diagonal that contains the smallest
/// vertex index of the four, which is equivalent to a symbolic lifting
/// perturbation, so the result does not depend on insertion order and is
/// reproducible bit for bit.
pub fn delaunay(points: &[Point2]) -> Result<TriangulatedGraph, GeometryError> {
    validate(points)?;
    let mut builder = Builder::new(points)?;
    builder.run()?;
    Ok(TriangulatedGraph::from_triangles(
        points.to_vec(),
        builder.into_triangles(),
    ))
}

fn validate(points: &[Point2]) -> Result<(), GeometryError> {
    if points.len() < 3 {
        return Err(GeometryError::TooFewPoints(points.len()));
    }
    if let Some(i) = points.iter().position(|p| !p.is_finite()) {
        return Err(GeometryError::NonFinitePoint(i));
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| {
        points[i]
            .x
            .total_cmp(&points[j].x)
            .then(points[i].y.total_cmp(&points[j].y))
            .then(i.cmp(&j))
    });
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            if points[j].x - points[i].x >= DUPLICATE_TOLERANCE {
                break;
            }
            if points[i].distance(&points[j]) < DUPLICATE_TOLERANCE {
                return Err(GeometryError::DuplicatePoints(i.min(j), i.max(j)));
            }
        }
    }
    Ok(())
}

enum Location {
    Inside(usize),
    OnEdge(usize, usize),
    /// Hull edge `k` of the triangle is visible from the point.
    Outside(usize, usize),
}

struct Builder<'a> {
    pts: &'a [Point2],
    tris: Vec<[usize; 3]>,
    // nbrs[t][k] is the triangle across the directed edge tris[t][k] -> tris[t][k + 1].
    nbrs: Vec<[usize; 3]>,
    hull_next: Vec<usize>,
    hull_prev: Vec<usize>,
    // Triangle holding the hull edge v -> hull_next[v].
    hull_tri: Vec<usize>,
    seed: usize,
    last: usize,
}

impl<'a> Builder<'a> {
    fn new(pts: &'a [Point2]) -> Result<Self, GeometryError> {
        let seed = (2..pts.len())
            .find(|&k| orientation(&pts[0], &pts[1], &pts[k]) != Sign::Zero)
            .ok_or(GeometryError::DegenerateInput)?;
        let n = pts.len();
        let mut b = Builder {
            pts,
            tris: Vec::with_capacity(2 * n),
            nbrs: Vec::with_capacity(2 * n),
            hull_next: vec![NONE; n],
            hull_prev: vec![NONE; n],
            hull_tri: vec![NONE; n],
            seed,
            last: 0,
        };
        let tri = if orientation(&pts[0], &pts[1], &pts[seed]) == Sign::Positive {
            [0, 1, seed]
        } else {
            [1, 0, seed]
        };
        b.tris.push(tri);
        b.nbrs.push([NONE; 3]);
        for k in 0..3 {
            let (u, w) = (tri[k], tri[(k + 1) % 3]);
            b.hull_next[u] = w;
            b.hull_prev[w] = u;
            b.hull_tri[u] = 0;
        }
        Ok(b)
    }

    fn run(&mut self) -> Result<(), GeometryError> {
        for p in 2..self.pts.len() {
            if p != self.seed {
                self.insert(p)?;
            }
        }
        Ok(())
    }

    fn into_triangles(self) -> Vec<[usize; 3]> {
        self.tris
    }

    fn point(&self, v: usize) -> &Point2 {
        &self.pts[v]
    }

    fn insert(&mut self, p: usize) -> Result<(), GeometryError> {
        match self.locate(p)? {
            Location::Inside(t) => self.split_triangle(t, p),
            Location::OnEdge(t, k) => self.split_edge(t, k, p),
            Location::Outside(t, k) => self.extend_hull(t, k, p),
        }
        Ok(())
    }

    fn classify_in(&self, t: usize, p: usize) -> Result<Option<Location>, usize> {
        let tri = self.tris[t];
        let q = self.point(p);
        let mut zero = None;
        for k in 0..3 {
            match orientation(self.point(tri[k]), self.point(tri[(k + 1) % 3]), q) {
                Sign::Negative => return Err(k),
                Sign::Zero => {
                    if zero.is_none() {
                        zero = Some(k);
                    }
                }
                Sign::Positive => {}
            }
        }
        Ok(Some(match zero {
            Some(k) => Location::OnEdge(t, k),
            None => Location::Inside(t),
        }))
    }

    fn locate(&self, p: usize) -> Result<Location, GeometryError> {
        let mut t = self.last;
        let max_steps = 4 * self.tris.len() + 16;
        for _ in 0..max_steps {
            match self.classify_in(t, p) {
                Ok(Some(loc)) => return self.reject_vertex_hit(loc, p),
                Ok(None) => unreachable!(),
                Err(k) => {
                    let n = self.nbrs[t][k];
                    if n == NONE {
                        return Ok(Location::Outside(t, k));
                    }
                    t = n;
                }
            }
        }
        // The walk cycled on a near-degenerate configuration; fall back to a scan.
        for t in 0..self.tris.len() {
            if let Ok(Some(loc)) = self.classify_in(t, p) {
                return self.reject_vertex_hit(loc, p);
            }
        }
        let q = self.point(p);
        for t in 0..self.tris.len() {
            for k in 0..3 {
                let tri = self.tris[t];
                if self.nbrs[t][k] == NONE
                    && orientation(self.point(tri[k]), self.point(tri[(k + 1) % 3]), q)
                        == Sign::Negative
                {
                    return Ok(Location::Outside(t, k));
                }
            }
        }
        Err(GeometryError::DegenerateInput)
    }

    fn reject_vertex_hit(&self, loc: Location, p: usize) -> Result<Location, GeometryError> {
        let t = match loc {
            Location::Inside(t) | Location::OnEdge(t, _) | Location::Outside(t, _) => t,
        };
        let q = self.point(p);
        for &v in &self.tris[t] {
            if self.point(v).distance(q) < DUPLICATE_TOLERANCE {
                return Err(GeometryError::DuplicatePoints(v.min(p), v.max(p)));
            }
        }
        Ok(loc)
    }

    fn push_triangle(&mut self, tri: [usize; 3], nbrs: [usize; 3]) -> usize {
        self.tris.push(tri);
        self.nbrs.push(nbrs);
        self.tris.len() - 1
    }

    fn replace_neighbor(&mut self, t: usize, old: usize, new: usize) {
        if t == NONE {
            return;
        }
        if let Some(slot) = self.nbrs[t].iter_mut().find(|n| **n == old) {
            *slot = new;
        }
    }

    /// Records `t` as the holder of hull edge `v -> ..` when the edge at
    /// index `k` of `t` has no neighbor.
    fn note_hull(&mut self, t: usize, k: usize) {
        if self.nbrs[t][k] == NONE {
            self.hull_tri[self.tris[t][k]] = t;
        }
    }

    fn split_triangle(&mut self, t: usize, p: usize) {
        let [a, b, c] = self.tris[t];
        let [n_ab, n_bc, n_ca] = self.nbrs[t];
        let t1 = self.tris.len();
        let t2 = t1 + 1;
        self.tris[t] = [a, b, p];
        self.nbrs[t] = [n_ab, t1, t2];
        self.push_triangle([b, c, p], [n_bc, t2, t]);
        self.push_triangle([c, a, p], [n_ca, t, t1]);
        self.replace_neighbor(n_bc, t, t1);
        self.replace_neighbor(n_ca, t, t2);
        self.note_hull(t1, 0);
        self.note_hull(t2, 0);
        self.last = t2;
        self.legalize(vec![(t, 0), (t1, 0), (t2, 0)]);
    }

    fn split_edge(&mut self, t: usize, k: usize, p: usize) {
        let tri = self.tris[t];
        let (a, b, c) = (tri[k], tri[(k + 1) % 3], tri[(k + 2) % 3]);
        let n = self.nbrs[t][k];
        let n_bc = self.nbrs[t][(k + 1) % 3];
        let n_ca = self.nbrs[t][(k + 2) % 3];
        let t1 = self.tris.len();
        self.push_triangle([b, c, p], [n_bc, t, NONE]);
        self.tris[t] = [c, a, p];
        self.nbrs[t] = [n_ca, NONE, t1];
        self.replace_neighbor(n_bc, t, t1);
        self.note_hull(t, 0);
        self.note_hull(t1, 0);
        let mut stack = vec![(t, 0), (t1, 0)];
        if n == NONE {
            self.hull_next[a] = p;
            self.hull_prev[p] = a;
            self.hull_next[p] = b;
            self.hull_prev[b] = p;
            self.hull_tri[a] = t;
            self.hull_tri[p] = t1;
        } else {
            let j = self.index_of(n, b);
            let d = self.tris[n][(j + 2) % 3];
            let n_ad = self.nbrs[n][(j + 1) % 3];
            let n_db = self.nbrs[n][(j + 2) % 3];
            let n1 = self.tris.len();
            self.tris[n] = [a, d, p];
            self.nbrs[n] = [n_ad, n1, t];
            self.push_triangle([d, b, p], [n_db, t1, n]);
            self.replace_neighbor(n_db, n, n1);
            self.nbrs[t][1] = n;
            self.nbrs[t1][2] = n1;
            self.note_hull(n, 0);
            self.note_hull(n1, 0);
            stack.push((n, 0));
            stack.push((n1, 0));
        }
        self.last = t1;
        self.legalize(stack);
    }

    fn extend_hull(&mut self, t: usize, k: usize, p: usize) {
        let q = *self.point(p);
        let visible = |s: &Self, u: usize, w: usize| {
            orientation(s.point(u), s.point(w), &q) == Sign::Negative
        };
        let mut start = self.tris[t][k];
        let mut end = self.tris[t][(k + 1) % 3];
        while visible(self, self.hull_prev[start], start) {
            start = self.hull_prev[start];
        }
        while visible(self, end, self.hull_next[end]) {
            end = self.hull_next[end];
        }

        let mut stack = Vec::new();
        let mut prev_new = NONE;
        let mut u = start;
        while u != end {
            let w = self.hull_next[u];
            let outer = self.hull_tri[u];
            let nt = self.push_triangle([w, u, p], [outer, prev_new, NONE]);
            let ko = self.index_of(outer, u);
            self.nbrs[outer][ko] = nt;
            if prev_new == NONE {
                self.hull_tri[u] = nt;
            } else {
                self.nbrs[prev_new][2] = nt;
            }
            stack.push((nt, 0));
            prev_new = nt;
            if u != start {
                self.hull_next[u] = NONE;
                self.hull_prev[u] = NONE;
            }
            u = w;
        }
        self.hull_next[start] = p;
        self.hull_prev[p] = start;
        self.hull_next[p] = end;
        self.hull_prev[end] = p;
        self.hull_tri[p] = prev_new;
        self.last = prev_new;
        self.legalize(stack);
    }

    fn index_of(&self, t: usize, v: usize) -> usize {
        self.tris[t]
            .iter()
            .position(|&x| x == v)
            .expect("vertex belongs to triangle")
    }

    /// Restores the Delaunay property around edges whose entry `(t, k)` names
    /// the edge at index `k` of `t`, opposite the freshly inserted vertex.
    fn legalize(&mut self, mut stack: Vec<(usize, usize)>) {
        while let Some((t, k)) = stack.pop() {
            let n = self.nbrs[t][k];
            if n == NONE {
                continue;
            }
            let tri = self.tris[t];
            let (a, b, c) = (tri[k], tri[(k + 1) % 3], tri[(k + 2) % 3]);
            let j = self.index_of(n, b);
            let d = self.tris[n][(j + 2) % 3];
            if !self.should_flip(a, b, c, d) {
                continue;
            }
            let n_bc = self.nbrs[t][(k + 1) % 3];
            let n_ca = self.nbrs[t][(k + 2) % 3];
            let n_ad = self.nbrs[n][(j + 1) % 3];
            let n_db = self.nbrs[n][(j + 2) % 3];
            self.tris[t] = [c, a, d];
            self.nbrs[t] = [n_ca, n_ad, n];
            self.tris[n] = [d, b, c];
            self.nbrs[n] = [n_db, n_bc, t];
            self.replace_neighbor(n_ad, n, t);
            self.replace_neighbor(n_bc, t, n);
            self.note_hull(t, 0);
            self.note_hull(t, 1);
            self.note_hull(n, 0);
            self.note_hull(n, 1);
            stack.push((t, 1));
            stack.push((n, 0));
        }
    }

    /// `abc` is counterclockwise and `d` lies across `ab`.
    fn should_flip(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let flip = match quad_in_circle(self.pts, [a, b, c, d]) {
            Sign::Positive => true,
            Sign::Negative => false,
            Sign::Zero => {
                let lowest = a.min(b).min(c).min(d);
                lowest == c || lowest == d
            }
        };
        flip && orientation(self.point(c), self.point(a), self.point(d)) == Sign::Positive
            && orientation(self.point(d), self.point(b), self.point(c)) == Sign::Positive
    }
}

/// In-circle sign for `d` against the circumcircle of counterclockwise
/// `abc`, evaluated on the four points in ascending index order and
/// corrected by the permutation parity. Both diagonals of a quadrilateral
/// therefore see the same magnitude and tolerance band, so a flip is never
/// undone by the reverse test.
fn quad_in_circle(pts: &[Point2], verts: [usize; 4]) -> Sign {
    let mut sorted = verts;
    let mut parity = false;
    for i in 0..4 {
        for j in 0..3 - i {
            if sorted[j] > sorted[j + 1] {
                sorted.swap(j, j + 1);
                parity = !parity;
            }
        }
    }
    let (det, scale) = in_circle_raw(
        &pts[sorted[0]],
        &pts[sorted[1]],
        &pts[sorted[2]],
        &pts[sorted[3]],
    );
    let det = if parity { -det } else { det };
    if det.abs() <= PREDICATE_EPSILON * scale {
        Sign::Zero
    } else if det > 0.0 {
        Sign::Positive
    } else {
        Sign::Negative
    }
}
