use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// An `m x n` binary matrix, bit-packed row-major into 64-bit words.
///
/// Dimensions are fixed at construction and must both be at least 1. Unused
/// high bits of each row's last word are kept zero, so derived equality and
/// hashing over the raw words are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        let words_per_row = cols.div_ceil(WORD_BITS);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            words: vec![0; rows * words_per_row],
        }
    }

    /// Build from `'0'`/`'1'` row strings of equal length.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::params("a matrix needs at least one row"));
        }
        let cols = rows[0].as_ref().len();
        if cols == 0 {
            return Err(Error::params("a matrix needs at least one column"));
        }
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::params(format!(
                    "row {i} has length {}, expected {cols}",
                    row.len()
                )));
            }
            for (j, ch) in row.bytes().enumerate() {
                match ch {
                    b'0' => {}
                    b'1' => m.set(i, j, true),
                    _ => {
                        return Err(Error::params(format!(
                            "row {i} contains {:?}; only '0' and '1' are allowed",
                            ch as char
                        )))
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        let w = row * self.words_per_row + col / WORD_BITS;
        self.words[w] >> (col % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        let w = row * self.words_per_row + col / WORD_BITS;
        let mask = 1u64 << (col % WORD_BITS);
        if value {
            self.words[w] |= mask;
        } else {
            self.words[w] &= !mask;
        }
    }

    pub fn row_string(&self, row: usize) -> String {
        (0..self.cols)
            .map(|j| if self.get(row, j) { '1' } else { '0' })
            .collect()
    }

    /// Up to 64 bits of `row` starting at column `start`, low bit first.
    /// Bits past `start + len` are masked off; `len` must be in `1..=64`.
    fn load_bits(&self, row: usize, start: usize, len: usize) -> u64 {
        debug_assert!((1..=WORD_BITS).contains(&len));
        debug_assert!(start + len <= self.cols);
        let base = row * self.words_per_row;
        let w = start / WORD_BITS;
        let r = start % WORD_BITS;
        let mut v = self.words[base + w] >> r;
        if r > 0 && w + 1 < self.words_per_row {
            v |= self.words[base + w + 1] << (WORD_BITS - r);
        }
        if len < WORD_BITS {
            v &= (1u64 << len) - 1;
        }
        v
    }

    /// Word-wise comparison of two row segments of length `len`.
    pub(crate) fn segment_eq(
        &self,
        row: usize,
        start: usize,
        other: &BitMatrix,
        other_row: usize,
        other_start: usize,
        len: usize,
    ) -> bool {
        let mut off = 0;
        while off < len {
            let chunk = (len - off).min(WORD_BITS);
            if self.load_bits(row, start + off, chunk)
                != other.load_bits(other_row, other_start + off, chunk)
            {
                return false;
            }
            off += chunk;
        }
        true
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row_string(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix({}x{}, {})", self.rows, self.cols, self)
    }
}
