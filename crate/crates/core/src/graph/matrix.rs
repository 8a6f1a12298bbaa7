//! Row-major bit-packed adjacency matrix.

/// Bits per storage word.
pub const WORD_BITS: usize = u64::BITS as usize;

/// Square bit matrix with one row per vertex; bit `(u, v)` is set iff `uv` is an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(WORD_BITS);
        Self {
            n,
            words_per_row,
            words: vec![0; words_per_row * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    /// Bytes held by the packed rows.
    pub fn byte_len(&self) -> usize {
        self.words.len() * std::mem::size_of::<u64>()
    }

    /// Sets both `(u, v)` and `(v, u)`.
    pub fn set_symmetric(&mut self, u: usize, v: usize) {
        self.set(u, v);
        self.set(v, u);
    }

    fn set(&mut self, u: usize, v: usize) {
        let idx = u * self.words_per_row + v / WORD_BITS;
        self.words[idx] |= 1u64 << (v % WORD_BITS);
    }

    #[inline]
    pub fn contains(&self, u: usize, v: usize) -> bool {
        let idx = u * self.words_per_row + v / WORD_BITS;
        (self.words[idx] >> (v % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        let start = u * self.words_per_row;
        &self.words[start..start + self.words_per_row]
    }

    /// `|N(u) ∩ N(v)|` by popcount over the AND of the two rows.
    pub fn common_count(&self, u: usize, v: usize) -> u64 {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| u64::from((a & b).count_ones()))
            .sum()
    }

    /// Smallest common neighbour of `u` and `v`.
    pub fn first_common(&self, u: usize, v: usize) -> Option<usize> {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .enumerate()
            .find_map(|(w, (a, b))| {
                let x = a & b;
                (x != 0).then(|| w * WORD_BITS + x.trailing_zeros() as usize)
            })
    }

    /// Calls `f` on every common neighbour of `u` and `v` strictly greater than `after`,
    /// in increasing order.
    pub fn for_each_common_after(&self, u: usize, v: usize, after: usize, mut f: impl FnMut(usize)) {
        let start = after + 1;
        if start >= self.n {
            return;
        }
        let ru = self.row(u);
        let rv = self.row(v);
        let first_word = start / WORD_BITS;
        for w in first_word..self.words_per_row {
            let mut x = ru[w] & rv[w];
            if w == first_word {
                x &= u64::MAX << (start % WORD_BITS);
            }
            while x != 0 {
                let bit = x.trailing_zeros() as usize;
                f(w * WORD_BITS + bit);
                x &= x - 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_packing_spans_words() {
        let mut m = BitMatrix::new(130);
        m.set_symmetric(0, 129);
        m.set_symmetric(1, 129);
        m.set_symmetric(0, 64);
        m.set_symmetric(1, 64);
        assert_eq!(m.words_per_row(), 3);
        assert!(m.contains(129, 0));
        assert!(!m.contains(0, 1));
        assert_eq!(m.common_count(0, 1), 2);
        assert_eq!(m.first_common(0, 1), Some(64));
        let mut seen = vec![];
        m.for_each_common_after(0, 1, 64, |w| seen.push(w));
        assert_eq!(seen, vec![129]);
        seen.clear();
        m.for_each_common_after(0, 1, 0, |w| seen.push(w));
        assert_eq!(seen, vec![64, 129]);
    }
}
