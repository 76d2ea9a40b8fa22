//! Symbolic Koszul complex on `n` variables.
//!
//! Basis subsets of each exterior power are listed in colex order and
//! `∂(e_T) = Σ_{j ∈ T} (-1)^{pos(j, T)} x_j e_{T \ {j}}`, where `pos` is the
//! 0-based position of `j` in the sorted subset `T`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::artinian::{ArtinianAlgebra, RMatrix};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Vector;

pub const MAX_VARIABLES: usize = 10;

/// A nonzero entry `sign · x_var` at `(row, col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub negative: bool,
    pub var: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulComplex {
    n: usize,
    /// `differentials[i - 1]` is `∂_i : K_i -> K_{i-1}`.
    differentials: Vec<Vec<Entry>>,
}

/// All `k`-subsets of `0..n` in colex order.
pub fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    // colex: compare from the largest element down
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

impl KoszulComplex {
    pub fn build(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("Koszul complex needs a variable".into()));
        }
        if n > MAX_VARIABLES {
            return Err(Error::EnumerationBound {
                what: "Koszul variables",
                got: n,
                limit: MAX_VARIABLES,
            });
        }
        let mut differentials = Vec::with_capacity(n);
        for i in 1..=n {
            let sources = colex_subsets(n, i);
            let targets = colex_subsets(n, i - 1);
            let index: BTreeMap<&[usize], usize> = targets
                .iter()
                .enumerate()
                .map(|(r, t)| (t.as_slice(), r))
                .collect();
            let mut entries = Vec::new();
            for (col, t) in sources.iter().enumerate() {
                for (pos, &j) in t.iter().enumerate() {
                    let rest: Vec<usize> = t.iter().copied().filter(|&x| x != j).collect();
                    entries.push(Entry {
                        row: index[rest.as_slice()],
                        col,
                        negative: pos % 2 == 1,
                        var: j,
                    });
                }
            }
            entries.sort_by_key(|e| (e.row, e.col));
            differentials.push(entries);
        }
        Ok(Self { n, differentials })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entries of `∂_i`, `1 ≤ i ≤ n`.
    pub fn differential(&self, i: usize) -> &[Entry] {
        &self.differentials[i - 1]
    }

    /// Shape `(rows, cols)` of `∂_i`.
    pub fn shape(&self, i: usize) -> (usize, usize) {
        (binomial(self.n, i - 1), binomial(self.n, i))
    }

    /// Ranks `C(n, i)` for `i = 0..=n`.
    pub fn betti(&self) -> Vec<usize> {
        (0..=self.n).map(|i| binomial(self.n, i)).collect()
    }

    /// `∂_{i-1} ∘ ∂_i = 0` as matrices over the polynomial ring, for every
    /// `2 ≤ i ≤ n`.
    pub fn verify_complex(&self) -> bool {
        (2..=self.n).all(|i| {
            let mut by_col: BTreeMap<usize, Vec<&Entry>> = BTreeMap::new();
            for e in self.differential(i - 1) {
                by_col.entry(e.col).or_default().push(e);
            }
            // (row, col, var pair) -> signed coefficient
            let mut product: BTreeMap<(usize, usize, usize, usize), i64> = BTreeMap::new();
            for b in self.differential(i) {
                for a in by_col.get(&b.row).into_iter().flatten() {
                    let sign = if a.negative == b.negative { 1 } else { -1 };
                    let vars = (a.var.min(b.var), a.var.max(b.var));
                    *product.entry((a.row, b.col, vars.0, vars.1)).or_default() += sign;
                }
            }
            product.values().all(|&c| c == 0)
        })
    }

    /// Variables occurring in `∂_i`, sorted.
    pub fn variable_ideal(&self, i: usize) -> Vec<usize> {
        let mut vars: Vec<usize> = self.differential(i).iter().map(|e| e.var).collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// Dense rendering of `∂_i` with entries like `x1`, `-x2`, `0`.
    pub fn render(&self, i: usize) -> Vec<Vec<String>> {
        let (rows, cols) = self.shape(i);
        let mut out = vec![vec!["0".to_string(); cols]; rows];
        for e in self.differential(i) {
            let sign = if e.negative { "-" } else { "" };
            out[e.row][e.col] = format!("{sign}x{}", e.var + 1);
        }
        out
    }

    /// Substitutes `x_j ↦ images[j]` and returns `∂_1, …, ∂_n` over the
    /// algebra.
    pub fn specialize<F: Field>(
        &self,
        algebra: &Arc<ArtinianAlgebra<F>>,
        images: &[Vector<F>],
    ) -> Result<Vec<RMatrix<F>>> {
        if images.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.n
            )));
        }
        if images.iter().any(|v| v.len() != algebra.dim()) {
            return Err(Error::DimensionMismatch(
                "image is not an element of the algebra".into(),
            ));
        }
        (1..=self.n)
            .map(|i| {
                let (rows, cols) = self.shape(i);
                let mut entries = vec![vec![algebra.zero(); cols]; rows];
                for e in self.differential(i) {
                    let v = &images[e.var];
                    entries[e.row][e.col] = if e.negative { algebra.neg(v) } else { v.clone() };
                }
                RMatrix::from_entries(algebra, entries)
            })
            .collect()
    }
}
