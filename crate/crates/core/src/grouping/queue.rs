use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::geometry::Edge;

/// A boundary edge waiting for removal, with the values it was ranked by
/// when inserted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QueueEntry {
    pub edge: Edge,
    pub opposite: usize,
    pub flatness: f64,
    pub length: f64,
}

impl Eq for QueueEntry {}

impl Ord for QueueEntry {
    /// Flatter first, then longer, then the lexicographically smaller edge.
    fn cmp(&self, other: &Self) -> Ordering {
        self.flatness
            .total_cmp(&other.flatness)
            .then(self.length.total_cmp(&other.length))
            .then(other.edge.cmp(&self.edge))
            .then(other.opposite.cmp(&self.opposite))
    }
}

impl PartialOrd for QueueEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Max-priority queue of boundary edges keyed by flatness.
#[derive(Debug, Default)]
pub struct RemovalQueue {
    heap: BinaryHeap<QueueEntry>,
}

impl RemovalQueue {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, entry: QueueEntry) {
        self.heap.push(entry);
    }

    pub fn pop(&mut self) -> Option<QueueEntry> {
        self.heap.pop()
    }

    pub fn peek(&self) -> Option<&QueueEntry> {
        self.heap.peek()
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }
}
