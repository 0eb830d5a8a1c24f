//! Word-level helpers for the flat `u64` bitset rows used by the graph types.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn set_bit(row: &mut [u64], i: usize) {
    row[i / 64] |= 1u64 << (i % 64);
}

#[inline]
pub(crate) fn clear_bit(row: &mut [u64], i: usize) {
    row[i / 64] &= !(1u64 << (i % 64));
}

#[inline]
pub(crate) fn test_bit(row: &[u64], i: usize) -> bool {
    (row[i / 64] >> (i % 64)) & 1 != 0
}

#[inline]
pub(crate) fn count_ones(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// Iterates the set bit positions of a row in ascending order.
pub(crate) struct BitIter<'a> {
    row: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(row: &'a [u64]) -> Self {
        let current = row.first().copied().unwrap_or(0);
        BitIter {
            row,
            word_idx: 0,
            current,
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + bit)
    }
}

/// Iterates positions set in both rows (rows must have equal length).
pub(crate) struct AndIter<'a> {
    a: &'a [u64],
    b: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> AndIter<'a> {
    pub(crate) fn new(a: &'a [u64], b: &'a [u64]) -> Self {
        debug_assert_eq!(a.len(), b.len());
        let current = match (a.first(), b.first()) {
            (Some(x), Some(y)) => x & y,
            _ => 0,
        };
        AndIter {
            a,
            b,
            word_idx: 0,
            current,
        }
    }
}

impl Iterator for AndIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.a.len() {
                return None;
            }
            self.current = self.a[self.word_idx] & self.b[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_iter_walks_all_words() {
        let mut row = vec![0u64; 3];
        for i in [0, 5, 63, 64, 100, 130] {
            set_bit(&mut row, i);
        }
        let got: Vec<usize> = BitIter::new(&row).collect();
        assert_eq!(got, vec![0, 5, 63, 64, 100, 130]);
        assert_eq!(count_ones(&row), 6);
        clear_bit(&mut row, 64);
        assert!(!test_bit(&row, 64));
        assert!(test_bit(&row, 100));
    }

    #[test]
    fn and_iter_intersects() {
        let mut a = vec![0u64; 2];
        let mut b = vec![0u64; 2];
        for i in [1, 3, 70] {
            set_bit(&mut a, i);
        }
        for i in [3, 70, 90] {
            set_bit(&mut b, i);
        }
        let got: Vec<usize> = AndIter::new(&a, &b).collect();
        assert_eq!(got, vec![3, 70]);
    }
}
