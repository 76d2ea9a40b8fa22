//! Finitely generated modules as representations: a vector space with one
//! commuting action matrix per variable of the algebra.

use std::sync::Arc;

use super::algebra::{ArtinianAlgebra, IdealSubspace};
use super::matrix::RMatrix;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix, Subspace, Vector};

#[derive(Clone, Debug, PartialEq)]
pub struct PresentedModule<F: Field> {
    algebra: Arc<ArtinianAlgebra<F>>,
    dim: usize,
    /// `actions[j]` is the `dim × dim` matrix of `x_j`, acting on column
    /// vectors.
    actions: Vec<Matrix<F>>,
}

/// Action of `x_j` on the free module `R^rank` in block layout.
pub(crate) fn free_act<F: Field>(
    algebra: &ArtinianAlgebra<F>,
    j: usize,
    v: &[F::Elem],
) -> Vector<F> {
    let l = algebra.dim();
    let x = algebra.var_matrix(j);
    v.chunks(l)
        .flat_map(|block| linalg::mat_vec(algebra.field(), x, block))
        .collect()
}

/// Smallest subspace containing `gens` and stable under every action.
pub(crate) fn invariant_closure<F: Field>(
    field: &F,
    ambient: usize,
    gens: impl IntoIterator<Item = Vector<F>>,
    nvars: usize,
    act: impl Fn(usize, &[F::Elem]) -> Vector<F>,
) -> Subspace<F> {
    let mut space = Subspace::zero(field, ambient);
    let mut queue: Vec<Vector<F>> = gens.into_iter().collect();
    while let Some(v) = queue.pop() {
        if space.insert(v.clone()) {
            for j in 0..nvars {
                queue.push(act(j, &v));
            }
        }
    }
    space
}

/// Action matrices of an invariant subspace in the coordinates of its
/// reduced basis.
pub(crate) fn restricted_actions<F: Field>(
    sub: &Subspace<F>,
    nvars: usize,
    act: impl Fn(usize, &[F::Elem]) -> Vector<F>,
) -> Vec<Matrix<F>> {
    let f = sub.field();
    let d = sub.dim();
    (0..nvars)
        .map(|j| {
            let mut mat = vec![linalg::zero_vector(f, d); d];
            for (c, row) in sub.rows().iter().enumerate() {
                let image = act(j, row);
                for (r, x) in sub.coords(&image).into_iter().enumerate() {
                    mat[r][c] = x;
                }
            }
            mat
        })
        .collect()
}

/// Action matrices on `V / sub`, in the coordinates given by the non-pivot
/// standard basis vectors.
pub(crate) fn quotient_actions<F: Field>(
    sub: &Subspace<F>,
    nvars: usize,
    act: impl Fn(usize, &[F::Elem]) -> Vector<F>,
) -> Vec<Matrix<F>> {
    let f = sub.field();
    let free = sub.non_pivots();
    let d = free.len();
    (0..nvars)
        .map(|j| {
            let mut mat = vec![linalg::zero_vector(f, d); d];
            for (c, &col) in free.iter().enumerate() {
                let e = linalg::unit_vector(f, sub.ambient(), col);
                let image = sub.reduce(&act(j, &e));
                for (r, &row) in free.iter().enumerate() {
                    mat[r][c] = image[row].clone();
                }
            }
            mat
        })
        .collect()
}

impl<F: Field> PresentedModule<F> {
    /// Checks that the actions are square of one size, commute, and kill
    /// every defining relation.
    pub fn new(algebra: &Arc<ArtinianAlgebra<F>>, actions: Vec<Matrix<F>>) -> Result<Self> {
        if actions.len() != algebra.num_vars() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for {} variables",
                actions.len(),
                algebra.num_vars()
            )));
        }
        let dim = actions.first().map_or(0, Vec::len);
        if actions
            .iter()
            .any(|a| a.len() != dim || a.iter().any(|row| row.len() != dim))
        {
            return Err(Error::DimensionMismatch("action matrices are not square of one size".into()));
        }
        let module = Self {
            algebra: Arc::clone(algebra),
            dim,
            actions,
        };
        module.validate()?;
        Ok(module)
    }

    fn validate(&self) -> Result<()> {
        let f = self.algebra.field();
        for (i, a) in self.actions.iter().enumerate() {
            for b in &self.actions[i + 1..] {
                if linalg::mat_mul(f, a, b) != linalg::mat_mul(f, b, a) {
                    return Err(Error::Precondition("action matrices do not commute".into()));
                }
            }
        }
        for rel in self.algebra.relations() {
            for c in 0..self.dim {
                let e = linalg::unit_vector(f, self.dim, c);
                if !linalg::is_zero_vector(f, &self.act_monomial(rel, &e)) {
                    let name = self.algebra.render_monomial(rel);
                    return Err(Error::Precondition(format!(
                        "relation {name} does not vanish on the module"
                    )));
                }
            }
        }
        Ok(())
    }

    fn from_parts(algebra: &Arc<ArtinianAlgebra<F>>, dim: usize, actions: Vec<Matrix<F>>) -> Self {
        let module = Self {
            algebra: Arc::clone(algebra),
            dim,
            actions,
        };
        debug_assert!(module.validate().is_ok());
        module
    }

    pub fn zero(algebra: &Arc<ArtinianAlgebra<F>>) -> Self {
        Self::from_parts(algebra, 0, vec![Vec::new(); algebra.num_vars()])
    }

    /// `k = R / m`.
    pub fn residue_field(algebra: &Arc<ArtinianAlgebra<F>>) -> Self {
        let zero = algebra.field().zero();
        Self::from_parts(algebra, 1, vec![vec![vec![zero]]; algebra.num_vars()])
    }

    pub fn free(algebra: &Arc<ArtinianAlgebra<F>>, rank: usize) -> Self {
        let l = algebra.dim();
        let f = algebra.field();
        let n = rank * l;
        let actions = (0..algebra.num_vars())
            .map(|j| {
                let x = algebra.var_matrix(j);
                let mut mat = vec![linalg::zero_vector(f, n); n];
                for b in 0..rank {
                    for r in 0..l {
                        for c in 0..l {
                            mat[b * l + r][b * l + c] = x[r][c].clone();
                        }
                    }
                }
                mat
            })
            .collect();
        Self::from_parts(algebra, n, actions)
    }

    pub fn regular(algebra: &Arc<ArtinianAlgebra<F>>) -> Self {
        Self::free(algebra, 1)
    }

    /// Submodule of `R^rank` generated by `gens` (block layout), with its
    /// embedding.
    pub fn submodule_of_free(
        algebra: &Arc<ArtinianAlgebra<F>>,
        rank: usize,
        gens: impl IntoIterator<Item = Vector<F>>,
    ) -> (Self, Subspace<F>) {
        let nvars = algebra.num_vars();
        let act = |j: usize, v: &[F::Elem]| free_act(algebra, j, v);
        let sub = invariant_closure(algebra.field(), rank * algebra.dim(), gens, nvars, act);
        let actions = restricted_actions(&sub, nvars, act);
        (Self::from_parts(algebra, sub.dim(), actions), sub)
    }

    /// The ideal generated by `gens`, as a module.
    pub fn ideal(algebra: &Arc<ArtinianAlgebra<F>>, gens: impl IntoIterator<Item = Vector<F>>) -> Self {
        Self::submodule_of_free(algebra, 1, gens).0
    }

    /// An ideal viewed as a module.
    pub fn from_ideal(algebra: &Arc<ArtinianAlgebra<F>>, ideal: &IdealSubspace<F>) -> Self {
        Self::ideal(algebra, ideal.basis().iter().cloned())
    }

    /// The image of `A : R^cols -> R^rows`, as a submodule of `R^rows`.
    pub fn image(matrix: &RMatrix<F>) -> Self {
        let cols = (0..matrix.cols()).map(|c| matrix.column(c));
        Self::submodule_of_free(matrix.algebra(), matrix.rows(), cols).0
    }

    /// The cokernel of `A : R^cols -> R^rows`.
    pub fn cokernel(matrix: &RMatrix<F>) -> Self {
        let algebra = matrix.algebra();
        let nvars = algebra.num_vars();
        let act = |j: usize, v: &[F::Elem]| free_act(algebra, j, v);
        let cols = (0..matrix.cols()).map(|c| matrix.column(c));
        let sub = invariant_closure(
            algebra.field(),
            matrix.rows() * algebra.dim(),
            cols,
            nvars,
            act,
        );
        let actions = quotient_actions(&sub, nvars, act);
        Self::from_parts(algebra, sub.ambient() - sub.dim(), actions)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::Precondition("modules over different algebras".into()));
        }
        let f = self.algebra.field();
        let n = self.dim + other.dim;
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| {
                let mut mat = vec![linalg::zero_vector(f, n); n];
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        mat[r][c] = a[r][c].clone();
                    }
                }
                for r in 0..other.dim {
                    for c in 0..other.dim {
                        mat[self.dim + r][self.dim + c] = b[r][c].clone();
                    }
                }
                mat
            })
            .collect();
        Ok(Self::from_parts(&self.algebra, n, actions))
    }

    pub fn algebra(&self) -> &Arc<ArtinianAlgebra<F>> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.actions
    }

    pub fn act(&self, j: usize, v: &[F::Elem]) -> Vector<F> {
        linalg::mat_vec(self.algebra.field(), &self.actions[j], v)
    }

    /// `x^exps · v`.
    pub fn act_monomial(&self, exps: &[u32], v: &[F::Elem]) -> Vector<F> {
        let mut out = v.to_vec();
        for (j, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                out = self.act(j, &out);
            }
        }
        out
    }

    /// `β · v` for every basis monomial `β` of the algebra, in basis order.
    pub fn monomial_images(&self, v: &[F::Elem]) -> Vec<Vector<F>> {
        let steps = self.algebra.monomial_steps();
        let mut out: Vec<Vector<F>> = Vec::with_capacity(steps.len());
        for step in steps {
            let image = match step {
                None => v.to_vec(),
                Some((j, prev)) => self.act(j, &out[prev]),
            };
            out.push(image);
        }
        out
    }

    /// `r · v` for an algebra element `r`.
    pub fn act_element(&self, r: &[F::Elem], v: &[F::Elem]) -> Vector<F> {
        let f = self.algebra.field();
        let mut out = linalg::zero_vector(f, self.dim);
        for (c, img) in r.iter().zip(self.monomial_images(v)) {
            if f.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(&img) {
                f.add_mul(o, c, x);
            }
        }
        out
    }

    /// `m M`.
    pub fn radical(&self) -> Subspace<F> {
        let f = self.algebra.field();
        let images = self
            .actions
            .iter()
            .flat_map(|a| (0..self.dim).map(move |c| a.iter().map(|row| row[c].clone()).collect::<Vector<F>>()));
        Subspace::spanned_by(f, self.dim, images)
    }

    /// A minimal generating set: the standard basis vectors outside the
    /// pivots of `m M`, i.e. the first preimages in basis order.
    pub fn minimal_generators(&self) -> Vec<Vector<F>> {
        let f = self.algebra.field();
        self.radical()
            .non_pivots()
            .into_iter()
            .map(|c| linalg::unit_vector(f, self.dim, c))
            .collect()
    }

    /// `μ(M) = dim_k M / m M`.
    pub fn mu(&self) -> usize {
        self.dim - self.radical().dim()
    }

    /// Basis of `Hom_R(M, R)` as `ℓ × dim` matrices `f` with
    /// `f · A_j = X_j · f` for every variable.
    pub fn hom_to_ring(&self) -> Vec<Matrix<F>> {
        let f = self.algebra.field();
        let l = self.algebra.dim();
        let d = self.dim;
        let unknowns = l * d;
        // unknown (a, c) <-> f[a][c] at index a * d + c
        let mut rowspace = Subspace::zero(f, unknowns);
        for (a_j, x_j) in self.actions.iter().zip(self.algebra.var_matrices()) {
            for a in 0..l {
                for c in 0..d {
                    let mut eq = linalg::zero_vector(f, unknowns);
                    for t in 0..d {
                        if !f.is_zero(&a_j[t][c]) {
                            eq[a * d + t] = f.add(&eq[a * d + t], &a_j[t][c]);
                        }
                    }
                    for t in 0..l {
                        if !f.is_zero(&x_j[a][t]) {
                            eq[t * d + c] = f.sub(&eq[t * d + c], &x_j[a][t]);
                        }
                    }
                    rowspace.insert(eq);
                }
            }
        }
        let mut basis = Vec::new();
        for free in rowspace.non_pivots() {
            let mut v = linalg::zero_vector(f, unknowns);
            v[free] = f.one();
            for (row, &p) in rowspace.rows().iter().zip(rowspace.pivots()) {
                v[p] = f.neg(&row[free]);
            }
            basis.push(v);
        }
        basis
            .into_iter()
            .map(|v| v.chunks(d.max(1)).take(l).map(<[F::Elem]>::to_vec).collect())
            .map(|m: Matrix<F>| if d == 0 { vec![Vec::new(); l] } else { m })
            .collect()
    }

    /// `tr(M)`: the span of `f(v)` over a basis of `Hom(M, R)` and a basis
    /// of `M`. The span is an ideal, so finitely many maps realize the trace.
    pub fn trace(&self) -> IdealSubspace<F> {
        let f = self.algebra.field();
        let l = self.algebra.dim();
        let homs = self.hom_to_ring();
        let columns = homs
            .iter()
            .flat_map(|h| (0..self.dim).map(move |c| h.iter().map(|row| row[c].clone()).collect::<Vector<F>>()));
        let trace = IdealSubspace(Subspace::spanned_by(f, l, columns));
        assert!(
            trace.is_ideal_of(&self.algebra),
            "span of hom images is not an ideal"
        );
        trace
    }

    /// `(0 :_R M)`.
    pub fn annihilator(&self) -> IdealSubspace<F> {
        let f = self.algebra.field();
        let l = self.algebra.dim();
        // column t of the system: the action of basis monomial t, flattened
        let mut per_monomial: Vec<Vec<Vector<F>>> = vec![Vec::new(); l];
        for c in 0..self.dim {
            let e = linalg::unit_vector(f, self.dim, c);
            for (t, img) in self.monomial_images(&e).into_iter().enumerate() {
                per_monomial[t].push(img);
            }
        }
        let rows: Vec<Vector<F>> = (0..self.dim * self.dim)
            .map(|idx| {
                let (c, r) = (idx / self.dim, idx % self.dim);
                per_monomial.iter().map(|imgs| imgs[c][r].clone()).collect()
            })
            .collect();
        let ker = linalg::kernel(f, &rows, l);
        IdealSubspace(Subspace::spanned_by(f, l, ker))
    }

    /// `m M = 0` and `M ≠ 0`: the dimension-zero Ulrich condition.
    pub fn is_ulrich(&self) -> bool {
        self.dim > 0 && self.radical().is_zero()
    }

    pub fn is_full_trace(&self) -> bool {
        self.trace() == self.algebra.maximal_ideal()
    }

    pub fn has_free_summand(&self) -> bool {
        self.trace() == self.algebra.whole()
    }

    /// A split surjection onto `R`, if one exists: a hom `f` and a basis
    /// vector index `c` with `f(e_c)` a unit. The splitting `r ↦ r u⁻¹ e_c`
    /// is checked before returning.
    pub fn free_summand_certificate(&self) -> Option<(Matrix<F>, usize)> {
        let f = self.algebra.field();
        let alg = &self.algebra;
        for hom in self.hom_to_ring() {
            for c in 0..self.dim {
                let image: Vector<F> = hom.iter().map(|row| row[c].clone()).collect();
                if alg.in_maximal_ideal(&image) {
                    continue;
                }
                let u_inv = unit_inverse(alg, &image);
                let e = linalg::unit_vector(f, self.dim, c);
                // f(r u^{-1} e_c) = r for every basis monomial r
                let split_ok = alg.basis().iter().all(|b| {
                    let r = alg.monomial(b);
                    let v = self.act_element(&alg.mul(&r, &u_inv), &e);
                    linalg::mat_vec(f, &hom, &v) == r
                });
                assert!(split_ok, "unit image did not split");
                return Some((hom, c));
            }
        }
        None
    }

    /// Coarse isomorphism invariants: dimension, `μ`, and annihilator. They
    /// decide isomorphism among cyclic modules and among `k`-vector spaces.
    pub fn same_class(&self, other: &Self) -> bool {
        self.dim == other.dim && self.mu() == other.mu() && self.annihilator() == other.annihilator()
    }
}

/// Inverse of a unit `u = c (1 - n)` with `n` nilpotent.
pub(crate) fn unit_inverse<F: Field>(alg: &ArtinianAlgebra<F>, u: &[F::Elem]) -> Vector<F> {
    let f = alg.field();
    let c_inv = f.inv(&u[0]);
    let normalized: Vector<F> = u.iter().map(|x| f.mul(x, &c_inv)).collect();
    let nil = alg.sub(&alg.one(), &normalized);
    // 1/(1 - n) = 1 + n + n^2 + ... (finite)
    let mut acc = alg.one();
    let mut power = alg.one();
    loop {
        power = alg.mul(&power, &nil);
        if alg.is_zero(&power) {
            break;
        }
        acc = alg.add(&acc, &power);
    }
    acc.iter().map(|x| f.mul(x, &c_inv)).collect()
}

/// `I(A) ⊆ tr(im A)`.
pub fn check_lemma_matrix_trace<F: Field>(matrix: &RMatrix<F>) -> bool {
    let image = PresentedModule::image(matrix);
    matrix.ideal().is_subset(&image.trace())
}
