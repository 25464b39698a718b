//! Fixed-width vertex sets stored as rows of one flat word arena.

/// Rows of `width` bits each, with a cached cardinality per row.
///
/// Union is linear in the word count and cardinality lookup is O(1).
#[derive(Clone, Debug, Default)]
pub(crate) struct BitRows {
    words_per_row: usize,
    words: Vec<u64>,
    counts: Vec<usize>,
}

impl BitRows {
    pub(crate) fn new(width: usize) -> Self {
        BitRows {
            words_per_row: width.div_ceil(64),
            words: Vec::new(),
            counts: Vec::new(),
        }
    }

    pub(crate) fn rows(&self) -> usize {
        self.counts.len()
    }

    /// Appends an empty row and returns its index.
    pub(crate) fn push_empty(&mut self) -> usize {
        self.words.resize(self.words.len() + self.words_per_row, 0);
        self.counts.push(0);
        self.counts.len() - 1
    }

    #[inline]
    fn span(&self, row: usize) -> std::ops::Range<usize> {
        row * self.words_per_row..(row + 1) * self.words_per_row
    }

    #[inline]
    pub(crate) fn row(&self, row: usize) -> &[u64] {
        &self.words[self.span(row)]
    }

    #[inline]
    pub(crate) fn count(&self, row: usize) -> usize {
        self.counts[row]
    }

    #[inline]
    pub(crate) fn contains(&self, row: usize, bit: usize) -> bool {
        (self.words[row * self.words_per_row + bit / 64] >> (bit % 64)) & 1 == 1
    }

    #[inline]
    pub(crate) fn insert(&mut self, row: usize, bit: usize) {
        let w = &mut self.words[row * self.words_per_row + bit / 64];
        let mask = 1u64 << (bit % 64);
        self.counts[row] += (*w & mask == 0) as usize;
        *w |= mask;
    }

    /// `row |= src`, where `src` is a row of a `BitRows` of the same width.
    #[inline]
    pub(crate) fn union_from(&mut self, row: usize, src: &[u64]) {
        let span = self.span(row);
        let mut count = 0;
        for (a, b) in self.words[span].iter_mut().zip(src) {
            *a |= *b;
            count += a.count_ones() as usize;
        }
        self.counts[row] = count;
    }

    /// `row |= other[src]`, then empties `other[src]`, in one pass.
    pub(crate) fn drain_from(&mut self, row: usize, other: &mut BitRows, src: usize) {
        if other.counts[src] == 0 {
            return;
        }
        let (span, other_span) = (self.span(row), other.span(src));
        let mut count = 0;
        for (a, b) in self.words[span].iter_mut().zip(&mut other.words[other_span]) {
            *a |= std::mem::take(b);
            count += a.count_ones() as usize;
        }
        self.counts[row] = count;
        other.counts[src] = 0;
    }

    /// Members of `row` in increasing order.
    pub(crate) fn ones(&self, row: usize) -> Ones<'_> {
        Ones::new(self.row(row))
    }
}

/// Set bits of a word slice, ascending.
pub(crate) struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Ones<'a> {
    fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.index * 64 + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_union_iterate() {
        let mut rows = BitRows::new(130);
        let a = rows.push_empty();
        let b = rows.push_empty();
        rows.insert(a, 3);
        rows.insert(a, 3);
        rows.insert(a, 129);
        rows.insert(b, 64);
        rows.insert(b, 3);
        assert_eq!(rows.count(a), 2);
        let src = rows.row(b).to_vec();
        rows.union_from(a, &src);
        assert_eq!(rows.count(a), 3);
        assert_eq!(rows.ones(a).collect::<Vec<_>>(), vec![3, 64, 129]);
        assert!(rows.contains(a, 64) && !rows.contains(a, 65));
        let mut other = BitRows::new(130);
        let c = other.push_empty();
        other.insert(c, 7);
        rows.drain_from(b, &mut other, c);
        assert_eq!(rows.ones(b).collect::<Vec<_>>(), vec![3, 7, 64]);
        assert_eq!(other.count(c), 0);
        assert_eq!(other.ones(c).count(), 0);
        assert_eq!(rows.rows(), 2);
    }

    #[test]
    fn empty_width() {
        let mut rows = BitRows::new(0);
        let r = rows.push_empty();
        assert_eq!(rows.ones(r).count(), 0);
    }
}
