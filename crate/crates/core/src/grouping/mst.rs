use super::{GroupingError, GroupingResult, Method};
use crate::geometry::{Edge, GeometryError, Point2};

/// Union-find with path halving and union by rank.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Kruskal's algorithm over the complete Euclidean graph. Equal weights are
/// ordered by `(min index, max index)`.
pub fn group_mst(points: &[Point2]) -> Result<GroupingResult, GroupingError> {
    let k = points.len();
    if k < 2 {
        return Err(GroupingError::TooFewPoints { needed: 2, got: k });
    }
    if let Some(i) = points.iter().position(|p| !p.is_finite()) {
        return Err(GeometryError::NonFinitePoint(i).into());
    }

    let mut candidates: Vec<(f64, Edge)> = Vec::with_capacity(k * (k - 1) / 2);
    for i in 0..k {
        for j in i + 1..k {
            candidates.push((points[i].distance(&points[j]), Edge::new(i, j)));
        }
    }
    candidates.sort_unstable_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));

    let mut sets = DisjointSet::new(k);
    let mut tree = Vec::with_capacity(k - 1);
    for (_, edge) in candidates {
        if sets.union(edge.a, edge.b) {
            tree.push(edge);
            if tree.len() == k - 1 {
                break;
            }
        }
    }
    tree.sort_unstable();
    Ok(GroupingResult {
        method: Method::Mst,
        k,
        hamiltonian: false,
        selected_edges: tree,
        boundary: Vec::new(),
        removals: Vec::new(),
    })
}
