//! Bit-packed GF(2) linear algebra: rank, row reduction, nullspace.

use crate::sparse::SparseBinaryMatrix;

const WORD_BITS: usize = 64;

/// A dense GF(2) matrix with rows packed into `u64` words.
#[derive(Debug, Clone)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(WORD_BITS).max(1);
        Self {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn from_sparse(m: &SparseBinaryMatrix) -> Self {
        let mut out = Self::zero(m.rows(), m.cols());
        for i in 0..m.rows() {
            for &c in m.row(i) {
                out.set(i, c, true);
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / WORD_BITS] >> (j % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = i * self.words + j / WORD_BITS;
        let bit = 1u64 << (j % WORD_BITS);
        if v {
            self.data[w] |= bit;
        } else {
            self.data[w] &= !bit;
        }
    }

    fn xor_rows(&mut self, target: usize, source: usize) {
        let (t, s) = (target * self.words, source * self.words);
        for k in 0..self.words {
            let v = self.data[s + k];
            self.data[t + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words {
            self.data.swap(a * self.words + k, b * self.words + k);
        }
    }

    fn row_is_zero(&self, i: usize) -> bool {
        self.data[i * self.words..(i + 1) * self.words]
            .iter()
            .all(|&w| w == 0)
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pivot) = (r..self.rows).find(|&i| self.get(i, col)) else {
                continue;
            };
            self.swap_rows(r, pivot);
            for i in 0..self.rows {
                if i != r && self.get(i, col) {
                    self.xor_rows(i, r);
                }
            }
            pivots.push(col);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of `{x : M x = 0}`, one vector per returned `Vec<usize>`
    /// support list. Basis size is `cols - rank`.
    pub fn nullspace(&self) -> Vec<Vec<usize>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut support = vec![free];
            for (r, &c) in pivots.iter().enumerate() {
                if m.get(r, free) {
                    support.push(c);
                }
            }
            support.sort_unstable();
            basis.push(support);
        }
        basis
    }

    /// True when `v` (given by support) lies in the row space.
    pub fn rowspace_contains(&self, support: &[usize]) -> bool {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut v = vec![0u64; self.words];
        for &c in support {
            v[c / WORD_BITS] ^= 1 << (c % WORD_BITS);
        }
        for (r, &c) in pivots.iter().enumerate() {
            if v[c / WORD_BITS] >> (c % WORD_BITS) & 1 == 1 {
                for k in 0..self.words {
                    v[k] ^= m.data[r * self.words + k];
                }
            }
        }
        v.iter().all(|&w| w == 0)
    }

    /// Removes zero rows; used after reduction.
    pub fn drop_zero_rows(&mut self) {
        let mut keep = Vec::new();
        for i in 0..self.rows {
            if !self.row_is_zero(i) {
                keep.extend_from_slice(&self.data[i * self.words..(i + 1) * self.words]);
            }
        }
        self.rows = keep.len() / self.words;
        self.data = keep;
    }

    pub fn row_support(&self, i: usize) -> Vec<usize> {
        (0..self.cols).filter(|&j| self.get(i, j)).collect()
    }

    pub fn to_sparse(&self) -> SparseBinaryMatrix {
        let support = (0..self.rows).map(|i| self.row_support(i)).collect();
        SparseBinaryMatrix::from_row_support(self.cols, support).expect("valid by construction")
    }
}

/// Rank over GF(2) of a sparse matrix.
pub fn rank(m: &SparseBinaryMatrix) -> usize {
    BitMatrix::from_sparse(m).rank()
}

/// Basis (as support lists) of the right nullspace of `m`: the codewords of
/// the code whose parity-check matrix is `m`.
pub fn nullspace(m: &SparseBinaryMatrix) -> Vec<Vec<usize>> {
    BitMatrix::from_sparse(m).nullspace()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sparse(cols: usize, rows: Vec<Vec<usize>>) -> SparseBinaryMatrix {
        SparseBinaryMatrix::from_row_support(cols, rows).unwrap()
    }

    #[test]
    fn rank_of_identity() {
        let m = sparse(3, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn rank_detects_dependent_rows() {
        // Example 1's dual basis: 0110, 1010, 1100 — third is the sum of the
        // first two.
        let m = sparse(4, vec![vec![1, 2], vec![0, 2], vec![0, 1]]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn nullspace_of_repetition_check() {
        // H = [1 1]: nullspace = {11}.
        let m = sparse(2, vec![vec![0, 1]]);
        assert_eq!(nullspace(&m), vec![vec![0, 1]]);
    }

    #[test]
    fn nullspace_dimension() {
        let m = sparse(6, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 4);
        // every basis vector is annihilated by every row
        for v in &ns {
            for i in 0..m.rows() {
                let dot = m.row(i).iter().filter(|c| v.contains(c)).count();
                assert_eq!(dot % 2, 0);
            }
        }
    }

    #[test]
    fn rowspace_membership() {
        let m = sparse(4, vec![vec![1, 2], vec![0, 2]]);
        assert!(BitMatrix::from_sparse(&m).rowspace_contains(&[0, 1]));
        assert!(!BitMatrix::from_sparse(&m).rowspace_contains(&[3]));
        assert!(BitMatrix::from_sparse(&m).rowspace_contains(&[]));
    }
}
