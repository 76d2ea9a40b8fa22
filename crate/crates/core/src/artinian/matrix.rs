use std::sync::Arc;

use super::algebra::{ArtinianAlgebra, IdealSubspace};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Vector;

/// A matrix whose entries are elements of an [`ArtinianAlgebra`]; it
/// represents a map `R^cols -> R^rows`.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix<F: Field> {
    algebra: Arc<ArtinianAlgebra<F>>,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Vector<F>>>,
}

impl<F: Field> RMatrix<F> {
    pub fn zero(algebra: &Arc<ArtinianAlgebra<F>>, rows: usize, cols: usize) -> Self {
        Self {
            algebra: Arc::clone(algebra),
            rows,
            cols,
            entries: vec![vec![algebra.zero(); cols]; rows],
        }
    }

    pub fn identity(algebra: &Arc<ArtinianAlgebra<F>>, n: usize) -> Self {
        let mut m = Self::zero(algebra, n, n);
        for i in 0..n {
            m.entries[i][i] = algebra.one();
        }
        m
    }

    pub fn from_entries(
        algebra: &Arc<ArtinianAlgebra<F>>,
        entries: Vec<Vec<Vector<F>>>,
    ) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        for row in &entries {
            if row.len() != cols {
                return Err(Error::DimensionMismatch("ragged matrix".into()));
            }
            if row.iter().any(|e| e.len() != algebra.dim()) {
                return Err(Error::DimensionMismatch(
                    "entry is not an element of the algebra".into(),
                ));
            }
        }
        Ok(Self {
            algebra: Arc::clone(algebra),
            rows,
            cols,
            entries,
        })
    }

    /// Builds the matrix whose columns are the given free-module vectors,
    /// each of length `rows * dim(R)` in block layout.
    pub fn from_columns(
        algebra: &Arc<ArtinianAlgebra<F>>,
        rows: usize,
        columns: &[Vector<F>],
    ) -> Self {
        let l = algebra.dim();
        let mut m = Self::zero(algebra, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows * l);
            for r in 0..rows {
                m.entries[r][c] = col[r * l..(r + 1) * l].to_vec();
            }
        }
        m
    }

    pub fn algebra(&self) -> &Arc<ArtinianAlgebra<F>> {
        &self.algebra
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Vector<F> {
        &self.entries[r][c]
    }

    pub fn entries(&self) -> &[Vec<Vector<F>>] {
        &self.entries
    }

    /// Column `c` as a free-module vector in block layout.
    pub fn column(&self, c: usize) -> Vector<F> {
        (0..self.rows)
            .flat_map(|r| self.entries[r][c].iter().cloned())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| self.algebra.is_zero(e))
    }

    /// Every entry lies in the maximal ideal.
    pub fn is_minimal(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|e| self.algebra.in_maximal_ideal(e))
    }

    /// `self * other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let a = &self.algebra;
        let mut out = Self::zero(a, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = a.zero();
                for k in 0..self.cols {
                    acc = a.add(&acc, &a.mul(&self.entries[i][k], &other.entries[k][j]));
                }
                out.entries[i][j] = acc;
            }
        }
        Ok(out)
    }

    /// The ideal generated by all entries.
    pub fn ideal(&self) -> IdealSubspace<F> {
        self.algebra
            .ideal_generated(self.entries.iter().flatten().cloned())
    }

    pub fn render(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| self.algebra.render(e)).collect())
            .collect()
    }
}
