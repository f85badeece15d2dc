use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{IntegerMatrix, LinalgError};

/// Row-major sparse integer matrix. Each row lists its nonzero entries by
/// increasing column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    cols: usize,
    data: Vec<Vec<(usize, BigInt)>>,
}

impl SparseMatrix {
    pub fn new(cols: usize) -> Self {
        SparseMatrix { cols, data: Vec::new() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    /// Appends a row given as `(column, value)` pairs in any order; repeated
    /// columns are summed and zeros dropped.
    pub fn push_row<I, T>(&mut self, entries: I) -> Result<(), LinalgError>
    where
        I: IntoIterator<Item = (usize, T)>,
        T: Into<BigInt>,
    {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (j, v) in entries {
            if j >= self.cols {
                return Err(LinalgError::Dimension(format!(
                    "column {j} out of range for {} columns",
                    self.cols
                )));
            }
            *acc.entry(j).or_default() += v.into();
        }
        self.data.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        Ok(())
    }

    pub fn from_dense(m: &IntegerMatrix) -> Self {
        SparseMatrix {
            cols: m.cols(),
            data: (0..m.rows()).map(|i| m.sparse_row(i)).collect(),
        }
    }

    pub fn to_dense(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.rows(), self.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                m[(i, *j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.data.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, BigInt)] {
        &self.data[i]
    }

    pub fn row_data(&self) -> &[Vec<(usize, BigInt)>] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut data = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        SparseMatrix {
            cols: self.rows(),
            data,
        }
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        if self.cols != rhs.rows() {
            return Err(LinalgError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows(),
                self.cols,
                rhs.rows(),
                rhs.cols
            )));
        }
        let mut out = SparseMatrix::new(rhs.cols);
        for row in &self.data {
            let terms = row
                .iter()
                .flat_map(|(k, a)| rhs.data[*k].iter().map(move |(j, b)| (*j, a * b)));
            out.push_row(terms)?;
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Dimension(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(self
            .data
            .iter()
            .map(|row| row.iter().map(|(j, a)| a * &v[*j]).sum())
            .collect())
    }
}

impl From<&IntegerMatrix> for SparseMatrix {
    fn from(m: &IntegerMatrix) -> Self {
        SparseMatrix::from_dense(m)
    }
}
