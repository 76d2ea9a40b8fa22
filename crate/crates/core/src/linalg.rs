//! Dense exact linear algebra over a [`Field`].
//!
//! Subspaces are kept in fully reduced row echelon form. That form is
//! canonical, so two subspaces are equal iff their row lists are equal, and
//! a vector `v` of the span has coordinates `v[pivot_i]` with respect to the
//! rows.

use crate::field::Field;

pub type Vector<F> = Vec<<F as Field>::Elem>;

/// Row-major dense matrix.
pub type Matrix<F> = Vec<Vector<F>>;

#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vector<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows == other.rows
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Self {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        let rows = (0..ambient).map(|i| unit_vector(field, ambient, i)).collect();
        Self {
            field: field.clone(),
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn spanned_by<I>(field: &F, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector<F>>,
    {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vector<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that carry no pivot; the corresponding standard basis vectors
    /// span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        let mut it = self.pivots.iter().peekable();
        for c in 0..self.ambient {
            if it.peek() == Some(&&c) {
                it.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Remainder of `v` after elimination against the rows.
    pub fn reduce(&self, v: &[F::Elem]) -> Vector<F> {
        debug_assert_eq!(v.len(), self.ambient);
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = &self.field;
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    /// Coordinates of `v` with respect to the rows. Only meaningful for
    /// vectors of the span.
    pub fn coords(&self, v: &[F::Elem]) -> Vector<F> {
        debug_assert!(self.contains(v));
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector<F>) -> bool {
        let f = self.field.clone();
        let mut v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]);
        for x in v.iter_mut().skip(p) {
            *x = f.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v).skip(p) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }
}

pub fn zero_vector<F: Field>(field: &F, n: usize) -> Vector<F> {
    vec![field.zero(); n]
}

pub fn unit_vector<F: Field>(field: &F, n: usize, i: usize) -> Vector<F> {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector<F: Field>(field: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| field.is_zero(x))
}

/// `A v` for a row-major matrix `A`.
pub fn mat_vec<F: Field>(field: &F, a: &Matrix<F>, v: &[F::Elem]) -> Vector<F> {
    a.iter()
        .map(|row| {
            let mut acc = field.zero();
            for (x, y) in row.iter().zip(v) {
                if !field.is_zero(x) && !field.is_zero(y) {
                    field.add_mul(&mut acc, x, y);
                }
            }
            acc
        })
        .collect()
}

pub fn mat_mul<F: Field>(field: &F, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = zero_vector(field, cols);
            for (x, brow) in row.iter().zip(b) {
                if field.is_zero(x) {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(brow) {
                    if !field.is_zero(y) {
                        field.add_mul(o, x, y);
                    }
                }
            }
            out
        })
        .collect()
}

/// Basis of `{ v : A v = 0 }` where `A` has `ncols` columns.
///
/// The basis is returned in the canonical reduced form of the kernel.
pub fn kernel<F: Field>(field: &F, a: &[Vector<F>], ncols: usize) -> Vec<Vector<F>> {
    let rowspace = Subspace::spanned_by(field, ncols, a.iter().cloned());
    let mut basis = Vec::new();
    for free in rowspace.non_pivots() {
        let mut v = zero_vector(field, ncols);
        v[free] = field.one();
        for (row, &p) in rowspace.rows().iter().zip(rowspace.pivots()) {
            v[p] = field.neg(&row[free]);
        }
        basis.push(v);
    }
    // canonicalize
    Subspace::spanned_by(field, ncols, basis).rows().to_vec()
}

pub fn rank<F: Field>(field: &F, a: &[Vector<F>], ncols: usize) -> usize {
    Subspace::spanned_by(field, ncols, a.iter().cloned()).dim()
}
