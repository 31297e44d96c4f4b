//! Sparse binary matrices stored by row support.

use crate::{Error, Result};

/// A sparse matrix over GF(2), stored as the sorted column indices of the
/// ones in each row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseBinaryMatrix {
    rows: usize,
    cols: usize,
    row_support: Vec<Vec<usize>>,
}

impl SparseBinaryMatrix {
    /// An all-zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            row_support: vec![Vec::new(); rows],
        }
    }

    /// Builds a matrix from per-row supports. Supports are sorted and
    /// validated: indices must be in range and free of duplicates.
    pub fn from_row_support(cols: usize, mut row_support: Vec<Vec<usize>>) -> Result<Self> {
        for (i, support) in row_support.iter_mut().enumerate() {
            support.sort_unstable();
            if support.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Construction(format!("duplicate column in row {i}")));
            }
            if support.last().is_some_and(|&c| c >= cols) {
                return Err(Error::Construction(format!(
                    "column index out of range in row {i} (cols = {cols})"
                )));
            }
        }
        Ok(Self {
            rows: row_support.len(),
            cols,
            row_support,
        })
    }

    /// Builds from dense 0/1 rows. Test and fixture convenience.
    pub fn from_dense_rows(rows: &[&[u8]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let support = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(_, &v)| v != 0)
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        Self::from_row_support(cols, support)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Sorted column indices of the ones in row `i`.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.row_support[i]
    }

    pub fn row_supports(&self) -> &[Vec<usize>] {
        &self.row_support
    }

    pub fn nnz(&self) -> usize {
        self.row_support.iter().map(Vec::len).sum()
    }

    pub fn row_degrees(&self) -> Vec<usize> {
        self.row_support.iter().map(Vec::len).collect()
    }

    pub fn col_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.cols];
        for support in &self.row_support {
            for &c in support {
                deg[c] += 1;
            }
        }
        deg
    }

    /// Per-column sorted row indices (the transpose's row supports).
    pub fn col_supports(&self) -> Vec<Vec<usize>> {
        let mut cols = vec![Vec::new(); self.cols];
        for (i, support) in self.row_support.iter().enumerate() {
            for &c in support {
                cols[c].push(i);
            }
        }
        cols
    }

    /// The submatrix made of rows `0..r`.
    pub fn prefix_rows(&self, r: usize) -> SparseBinaryMatrix {
        assert!(r <= self.rows);
        SparseBinaryMatrix {
            rows: r,
            cols: self.cols,
            row_support: self.row_support[..r].to_vec(),
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.row_support[i].binary_search(&j).is_ok()
    }

    /// True when every row has exactly `d_c` ones and every column exactly
    /// `d_s` ones.
    pub fn is_regular(&self, d_s: usize, d_c: usize) -> bool {
        self.row_support.iter().all(|r| r.len() == d_c)
            && self.col_degrees().iter().all(|&d| d == d_s)
    }

    /// Parity (mod 2) of `h . x` for an integer vector `x`.
    pub fn row_dot_parity(&self, i: usize, x: &[i64]) -> u8 {
        (self.row_support[i]
            .iter()
            .map(|&c| x[c] & 1)
            .sum::<i64>()
            & 1) as u8
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_bookkeeping_matches() {
        let m = SparseBinaryMatrix::from_row_support(4, vec![vec![0, 2], vec![1, 2, 3], vec![]])
            .unwrap();
        assert_eq!(m.nnz(), 5);
        assert_eq!(m.row_degrees().iter().sum::<usize>(), 5);
        assert_eq!(m.col_degrees().iter().sum::<usize>(), 5);
        assert_eq!(m.col_degrees(), vec![1, 1, 2, 1]);
    }

    #[test]
    fn rejects_out_of_range_and_duplicates() {
        assert!(SparseBinaryMatrix::from_row_support(2, vec![vec![0, 2]]).is_err());
        assert!(SparseBinaryMatrix::from_row_support(3, vec![vec![1, 1]]).is_err());
    }

    #[test]
    fn unsorted_input_is_normalized() {
        let m = SparseBinaryMatrix::from_row_support(4, vec![vec![3, 0, 1]]).unwrap();
        assert_eq!(m.row(0), &[0, 1, 3]);
    }
}
