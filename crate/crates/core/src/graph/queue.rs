use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// Bucket queue keyed by current degree; ties resolve to the smallest vertex id.
///
/// Degrees only decrease, so each vertex enters a given bucket at most once and
/// stale entries are discarded lazily on pop.
pub(crate) struct MinDegreeQueue {
    buckets: Vec<BinaryHeap<Reverse<usize>>>,
    degree: Vec<usize>,
    removed: Vec<bool>,
    cursor: usize,
}

impl MinDegreeQueue {
    pub fn new(degree: Vec<usize>) -> Self {
        let max = degree.iter().copied().max().unwrap_or(0);
        let mut buckets: Vec<BinaryHeap<Reverse<usize>>> = (0..=max).map(|_| BinaryHeap::new()).collect();
        for (v, &d) in degree.iter().enumerate() {
            buckets[d].push(Reverse(v));
        }
        let removed = vec![false; degree.len()];
        Self {
            buckets,
            degree,
            removed,
            cursor: 0,
        }
    }

    pub fn is_removed(&self, v: usize) -> bool {
        self.removed[v]
    }

    pub fn remove(&mut self, v: usize) {
        self.removed[v] = true;
    }

    pub fn decrement(&mut self, v: usize) {
        debug_assert!(!self.removed[v] && self.degree[v] > 0);
        self.degree[v] -= 1;
        let d = self.degree[v];
        self.buckets[d].push(Reverse(v));
        self.cursor = self.cursor.min(d);
    }

    /// Removes and returns a live vertex of minimum current degree.
    pub fn pop_min(&mut self) -> Option<(usize, usize)> {
        while self.cursor < self.buckets.len() {
            let d = self.cursor;
            match self.buckets[d].pop() {
                Some(Reverse(v)) if !self.removed[v] && self.degree[v] == d => {
                    self.removed[v] = true;
                    return Some((v, d));
                }
                Some(_) => {}
                None => self.cursor += 1,
            }
        }
        None
    }
}
