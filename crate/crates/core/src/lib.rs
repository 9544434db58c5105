//! Shape boundary reconstruction from isolated, non-directional dots.
//!
//! The surface method triangulates the dots and greedily peels flat outer
//! triangles until every dot is exposed on a single boundary cycle. The
//! contour method is a Euclidean minimum spanning tree. Both are scored
//! against the true outline adjacency, and reconstructed boundaries can be
//! matched against a shape database with centroid-distance Fourier
//! descriptors.

pub mod cli;
pub mod geometry;
pub mod grouping;
pub mod io;
pub mod render;
pub mod retrieval;
pub mod shapes;
pub mod sweep;
