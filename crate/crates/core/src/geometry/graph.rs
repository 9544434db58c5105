use std::collections::BTreeMap;

use super::{Edge, GeometryError, Point2};

const NONE: usize = usize::MAX;

/// Alive triangles incident to an edge; the second slot is `NONE` on the
/// boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Incidence([usize; 2]);

impl Incidence {
    fn count(&self) -> usize {
        self.0.iter().filter(|&&t| t != NONE).count()
    }

    fn single(&self) -> Option<usize> {
        match self.0 {
            [t, NONE] | [NONE, t] if t != NONE => Some(t),
            _ => None,
        }
    }

    fn remove(&mut self, t: usize) {
        for slot in &mut self.0 {
            if *slot == t {
                *slot = NONE;
            }
        }
    }
}

/// A triangulated region whose boundary is a single simple cycle. Outer
/// triangles can be peeled off one at a time, exposing their opposite
/// vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangulatedGraph {
    vertices: Vec<Point2>,
    // Counterclockwise, smallest index first.
    triangles: Vec<[usize; 3]>,
    alive: Vec<bool>,
    alive_count: usize,
    edges: BTreeMap<Edge, Incidence>,
    on_boundary: Vec<bool>,
    // Counterclockwise successor along the boundary, NONE for internal vertices.
    boundary_next: Vec<usize>,
    boundary_len: usize,
}

impl TriangulatedGraph {
    pub(crate) fn from_triangles(vertices: Vec<Point2>, mut triangles: Vec<[usize; 3]>) -> Self {
        for t in &mut triangles {
            let lowest = (0..3).min_by_key(|&k| t[k]).unwrap();
            t.rotate_left(lowest);
        }
        triangles.sort_unstable();

        let n = vertices.len();
        let mut edges: BTreeMap<Edge, Incidence> = BTreeMap::new();
        for (ti, t) in triangles.iter().enumerate() {
            for k in 0..3 {
                let slot = edges
                    .entry(Edge::new(t[k], t[(k + 1) % 3]))
                    .or_insert(Incidence([NONE; 2]));
                if slot.0[0] == NONE {
                    slot.0[0] = ti;
                } else {
                    slot.0[1] = ti;
                }
            }
        }

        let mut on_boundary = vec![false; n];
        let mut boundary_next = vec![NONE; n];
        let mut boundary_len = 0;
        for (ti, t) in triangles.iter().enumerate() {
            for k in 0..3 {
                let (u, w) = (t[k], t[(k + 1) % 3]);
                if edges[&Edge::new(u, w)].single() == Some(ti) {
                    on_boundary[u] = true;
                    boundary_next[u] = w;
                    boundary_len += 1;
                }
            }
        }

        let count = triangles.len();
        TriangulatedGraph {
            vertices,
            triangles,
            alive: vec![true; count],
            alive_count: count,
            edges,
            on_boundary,
            boundary_next,
            boundary_len,
        }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn triangle_count(&self) -> usize {
        self.alive_count
    }

    /// Alive triangles, counterclockwise with the smallest index first, in
    /// ascending order.
    pub fn alive_triangles(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        self.triangles
            .iter()
            .zip(&self.alive)
            .filter(|(_, &alive)| alive)
            .map(|(t, _)| *t)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges incident to at least one alive triangle, in ascending order.
    pub fn alive_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.keys().copied()
    }

    pub fn is_boundary_edge(&self, edge: Edge) -> bool {
        self.edges.get(&edge).is_some_and(|inc| inc.count() == 1)
    }

    /// Boundary edges in ascending order.
    pub fn boundary_edges(&self) -> Vec<Edge> {
        self.edges
            .iter()
            .filter(|(_, inc)| inc.count() == 1)
            .map(|(e, _)| *e)
            .collect()
    }

    pub fn is_boundary_vertex(&self, v: usize) -> bool {
        self.on_boundary[v]
    }

    pub fn boundary_vertex_count(&self) -> usize {
        self.boundary_len
    }

    fn boundary_triangle(&self, edge: Edge) -> Result<usize, GeometryError> {
        self.edges
            .get(&edge)
            .and_then(Incidence::single)
            .ok_or(GeometryError::NotBoundaryEdge(edge))
    }

    /// Third vertex of the triangle owning a boundary edge.
    pub fn opposite(&self, edge: Edge) -> Result<usize, GeometryError> {
        let t = self.triangles[self.boundary_triangle(edge)?];
        Ok(t.into_iter().find(|&v| !edge.contains(v)).unwrap())
    }

    /// Edge length minus the shortest side of the owning triangle.
    pub fn flatness(&self, edge: Edge) -> Result<f64, GeometryError> {
        let opp = self.opposite(edge)?;
        let (x, y, xy) = (
            &self.vertices[edge.a],
            &self.vertices[edge.b],
            &self.vertices[opp],
        );
        let len = x.distance(y);
        let shortest = len.min(x.distance(xy)).min(y.distance(xy));
        Ok(len - shortest)
    }

    pub fn is_removable(&self, edge: Edge) -> Result<bool, GeometryError> {
        Ok(!self.on_boundary[self.opposite(edge)?])
    }

    /// Boundary edges whose opposite vertex is internal, ascending.
    pub fn removable_edges(&self) -> Vec<Edge> {
        self.boundary_edges()
            .into_iter()
            .filter(|&e| self.is_removable(e).unwrap_or(false))
            .collect()
    }

    /// Removes the triangle owning a removable boundary edge and returns the
    /// two edges it exposes, `(x, xy)` then `(y, xy)`.
    pub fn remove_triangle(&mut self, edge: Edge) -> Result<[Edge; 2], GeometryError> {
        let ti = self.boundary_triangle(edge)?;
        let t = self.triangles[ti];
        let k = (0..3)
            .find(|&k| Edge::new(t[k], t[(k + 1) % 3]) == edge)
            .unwrap();
        // Boundary runs x -> y in triangle order.
        let (x, y, xy) = (t[k], t[(k + 1) % 3], t[(k + 2) % 3]);
        if self.on_boundary[xy] {
            return Err(GeometryError::NotRemovable(edge));
        }

        self.alive[ti] = false;
        self.alive_count -= 1;
        self.edges.remove(&edge);
        let exposed = [Edge::new(edge.a, xy), Edge::new(edge.b, xy)];
        for e in exposed {
            self.edges.get_mut(&e).expect("triangle edge").remove(ti);
        }
        self.on_boundary[xy] = true;
        self.boundary_next[x] = xy;
        self.boundary_next[xy] = y;
        self.boundary_len += 1;
        Ok(exposed)
    }

    /// Boundary cycle, counterclockwise, starting at its lowest vertex index.
    pub fn boundary_sequence(&self) -> Vec<usize> {
        let Some(start) = self.on_boundary.iter().position(|&b| b) else {
            return Vec::new();
        };
        let mut seq = Vec::with_capacity(self.boundary_len);
        let mut v = start;
        loop {
            seq.push(v);
            v = self.boundary_next[v];
            if v == start || v == NONE || seq.len() > self.boundary_len {
                break;
            }
        }
        seq
    }

    /// Checks the structural invariants: edge incidences match the alive
    /// triangles, every alive edge has one or two triangles, the boundary
    /// edges form one simple cycle through exactly the flagged vertices.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut expected: BTreeMap<Edge, usize> = BTreeMap::new();
        for t in self.alive_triangles() {
            for k in 0..3 {
                *expected.entry(Edge::new(t[k], t[(k + 1) % 3])).or_default() += 1;
            }
        }
        if expected.len() != self.edges.len() {
            return Err(format!(
                "edge table has {} entries, alive triangles span {}",
                self.edges.len(),
                expected.len()
            ));
        }
        for (e, &count) in &expected {
            let stored = self.edges.get(e).map(Incidence::count);
            if stored != Some(count) || count > 2 {
                return Err(format!(
                    "edge {e:?}: {count} triangles, table says {stored:?}"
                ));
            }
        }

        let boundary: Vec<Edge> = self.boundary_edges();
        let seq = self.boundary_sequence();
        if seq.len() != boundary.len() || seq.len() != self.boundary_len {
            return Err(format!(
                "boundary walk visits {} vertices, {} boundary edges, {} flagged",
                seq.len(),
                boundary.len(),
                self.boundary_len
            ));
        }
        let mut seen = vec![false; self.vertices.len()];
        for (i, &v) in seq.iter().enumerate() {
            if seen[v] || !self.on_boundary[v] {
                return Err(format!("boundary vertex {v} repeated or unflagged"));
            }
            seen[v] = true;
            let w = seq[(i + 1) % seq.len()];
            if !self.is_boundary_edge(Edge::new(v, w)) {
                return Err(format!("walk step ({v}, {w}) is not a boundary edge"));
            }
        }
        if self.on_boundary.iter().filter(|&&b| b).count() != seq.len() {
            return Err("flagged boundary vertices missing from the cycle".into());
        }
        Ok(())
    }
}
