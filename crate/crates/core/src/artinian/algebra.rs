use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix, Subspace, Vector};

/// Largest vector-space dimension accepted for an algebra.
pub const MAX_ALGEBRA_DIM: usize = 200;

/// Below this dimension the multiplication table is checked for
/// commutativity and associativity on construction.
const TABLE_CHECK_DIM: usize = 60;

/// A local Artinian algebra `k[x_1..x_n] / (monomials)`.
///
/// The basis is the set of standard monomials ordered by degree, then by
/// exponent vector in descending lexicographic order (so `x` precedes `y`
/// and `x^2` precedes `x*y`). The unit is always basis element 0.
#[derive(Clone)]
pub struct ArtinianAlgebra<F: Field> {
    field: F,
    var_names: Vec<String>,
    relations: Vec<Vec<u32>>,
    basis: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    /// `table[i][j]` is the index of `basis[i] * basis[j]`, or `None` when
    /// the product vanishes.
    table: Vec<Vec<Option<usize>>>,
    var_matrices: Vec<Matrix<F>>,
}

impl<F: Field> PartialEq for ArtinianAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.var_names == other.var_names
            && self.basis == other.basis
    }
}

impl<F: Field> fmt::Debug for ArtinianAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for ArtinianAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| self.render_monomial(r))
            .collect();
        let p = self.field.characteristic();
        let k = if p == 0 { "Q".to_string() } else { format!("GF({p})") };
        write!(f, "{k}[{}]/({})", self.var_names.join(","), rels.join(","))
    }
}

impl<F: Field> ArtinianAlgebra<F> {
    /// The quotient of the polynomial ring by monomial relations, each given
    /// as an exponent vector. Every variable needs a pure power among the
    /// relations.
    pub fn monomial_quotient(
        field: F,
        var_names: Vec<String>,
        relations: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let n = var_names.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        if let Some(r) = relations.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "relation has {} exponents for {n} variables",
                r.len()
            )));
        }
        if relations.iter().any(|r| r.iter().all(|&e| e == 0)) {
            return Err(Error::InvalidAlgebra("the unit is a relation".into()));
        }
        let mut bounds = Vec::with_capacity(n);
        for (j, name) in var_names.iter().enumerate() {
            let pure = relations
                .iter()
                .filter(|r| r.iter().enumerate().all(|(i, &e)| i == j || e == 0))
                .map(|r| r[j])
                .min();
            match pure {
                Some(a) => bounds.push(a),
                None => return Err(Error::NotArtinian(name.clone())),
            }
        }
        let box_size: u64 = bounds.iter().map(|&b| b as u64).product();
        if box_size > 1_000_000 {
            return Err(Error::SizeGuard(format!(
                "monomial box of size {box_size}"
            )));
        }

        let divides = |r: &[u32], m: &[u32]| r.iter().zip(m).all(|(a, b)| a <= b);
        let is_standard = |m: &[u32]| {
            m.iter().zip(&bounds).all(|(e, b)| e < b)
                && !relations.iter().any(|r| divides(r, m))
        };

        let mut basis = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            if is_standard(&exps) {
                basis.push(exps.clone());
            }
            // odometer over the box
            let mut j = 0;
            while j < n {
                exps[j] += 1;
                if exps[j] < bounds[j] {
                    break;
                }
                exps[j] = 0;
                j += 1;
            }
            if j == n {
                break;
            }
        }
        if basis.len() > MAX_ALGEBRA_DIM {
            return Err(Error::SizeGuard(format!(
                "algebra dimension {} exceeds {MAX_ALGEBRA_DIM}",
                basis.len()
            )));
        }
        basis.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        let index: HashMap<Vec<u32>, usize> =
            basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let table: Vec<Vec<Option<usize>>> = basis
            .iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| {
                        let prod: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        index.get(&prod).copied()
                    })
                    .collect()
            })
            .collect();

        let dim = basis.len();
        let var_matrices = (0..n)
            .map(|j| {
                let mut unit = vec![0u32; n];
                unit[j] = 1;
                let mut mat = vec![linalg::zero_vector(&field, dim); dim];
                if let Some(&vj) = index.get(&unit) {
                    for c in 0..dim {
                        if let Some(r) = table[vj][c] {
                            mat[r][c] = field.one();
                        }
                    }
                }
                mat
            })
            .collect();

        let algebra = Self {
            field,
            var_names,
            relations,
            basis,
            index,
            table,
            var_matrices,
        };
        if dim <= TABLE_CHECK_DIM {
            algebra.check_table()?;
        }
        Ok(algebra)
    }

    fn check_table(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                if self.table[i][j] != self.table[j][i] {
                    return Err(Error::InvalidAlgebra("table is not commutative".into()));
                }
                for k in 0..d {
                    let left = self.table[i][j].and_then(|ij| self.table[ij][k]);
                    let right = self.table[j][k].and_then(|jk| self.table[i][jk]);
                    if left != right {
                        return Err(Error::InvalidAlgebra("table is not associative".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Vector-space dimension, which is the length `ℓ(R)`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn relations(&self) -> &[Vec<u32>] {
        &self.relations
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn basis_index(&self, exps: &[u32]) -> Option<usize> {
        self.index.get(exps).copied()
    }

    /// Left multiplication by `x_j` on the basis.
    pub fn var_matrix(&self, j: usize) -> &Matrix<F> {
        &self.var_matrices[j]
    }

    pub fn var_matrices(&self) -> &[Matrix<F>] {
        &self.var_matrices
    }

    /// For every non-unit basis monomial, a variable `x_j` and the index of
    /// the basis monomial `β'` with `β = x_j β'`; entries follow basis order,
    /// so each `β'` precedes its `β`.
    pub fn monomial_steps(&self) -> Vec<Option<(usize, usize)>> {
        self.basis
            .iter()
            .map(|b| {
                let j = b.iter().position(|&e| e > 0)?;
                let mut prev = b.clone();
                prev[j] -= 1;
                Some((j, self.index[&prev]))
            })
            .collect()
    }

    pub fn zero(&self) -> Vector<F> {
        linalg::zero_vector(&self.field, self.dim())
    }

    pub fn one(&self) -> Vector<F> {
        linalg::unit_vector(&self.field, self.dim(), 0)
    }

    /// The monomial with the given exponents; zero if it is not standard.
    pub fn monomial(&self, exps: &[u32]) -> Vector<F> {
        match self.index.get(exps) {
            Some(&i) => linalg::unit_vector(&self.field, self.dim(), i),
            None => self.zero(),
        }
    }

    pub fn var(&self, j: usize) -> Vector<F> {
        let mut e = vec![0; self.num_vars()];
        e[j] = 1;
        self.monomial(&e)
    }

    pub fn scalar(&self, c: F::Elem) -> Vector<F> {
        let mut v = self.zero();
        v[0] = c;
        v
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn neg(&self, a: &[F::Elem]) -> Vector<F> {
        a.iter().map(|x| self.field.neg(x)).collect()
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                if let Some(k) = self.table[i][j] {
                    f.add_mul(&mut out[k], x, y);
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[F::Elem], n: u32) -> Vector<F> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn is_zero(&self, a: &[F::Elem]) -> bool {
        linalg::is_zero_vector(&self.field, a)
    }

    /// An element lies in the maximal ideal iff its constant term vanishes.
    pub fn in_maximal_ideal(&self, a: &[F::Elem]) -> bool {
        self.field.is_zero(&a[0])
    }

    /// `ℓ × ℓ` matrix of multiplication by `a`.
    pub fn mult_matrix(&self, a: &[F::Elem]) -> Matrix<F> {
        let d = self.dim();
        let f = &self.field;
        let mut mat = vec![self.zero(); d];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (c, entry) in self.table[i].iter().enumerate() {
                if let Some(r) = *entry {
                    mat[r][c] = f.add(&mat[r][c], x);
                }
            }
        }
        mat
    }

    /// Smallest ideal containing `gens`.
    pub fn ideal_generated<I>(&self, gens: I) -> IdealSubspace<F>
    where
        I: IntoIterator<Item = Vector<F>>,
    {
        let mut space = Subspace::zero(&self.field, self.dim());
        let mut queue: Vec<Vector<F>> = gens.into_iter().collect();
        while let Some(v) = queue.pop() {
            if space.insert(v.clone()) {
                for x in &self.var_matrices {
                    queue.push(linalg::mat_vec(&self.field, x, &v));
                }
            }
        }
        IdealSubspace(space)
    }

    pub fn whole(&self) -> IdealSubspace<F> {
        IdealSubspace(Subspace::full(&self.field, self.dim()))
    }

    pub fn zero_ideal(&self) -> IdealSubspace<F> {
        IdealSubspace(Subspace::zero(&self.field, self.dim()))
    }

    /// Span of the non-unit basis monomials.
    pub fn maximal_ideal(&self) -> IdealSubspace<F> {
        let d = self.dim();
        let rows = (1..d).map(|i| linalg::unit_vector(&self.field, d, i));
        IdealSubspace(Subspace::spanned_by(&self.field, d, rows))
    }

    pub fn maximal_ideal_power(&self, n: u32) -> IdealSubspace<F> {
        let d = self.dim();
        let rows = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, b)| b.iter().sum::<u32>() >= n)
            .map(|(i, _)| linalg::unit_vector(&self.field, d, i));
        IdealSubspace(Subspace::spanned_by(&self.field, d, rows))
    }

    /// `(0 : m)`.
    pub fn socle(&self) -> IdealSubspace<F> {
        let rows: Vec<Vector<F>> = self.var_matrices.iter().flatten().cloned().collect();
        let ker = linalg::kernel(&self.field, &rows, self.dim());
        IdealSubspace(Subspace::spanned_by(&self.field, self.dim(), ker))
    }

    /// `dim_k m / m^2`.
    pub fn embedding_dimension(&self) -> usize {
        self.maximal_ideal().dim() - self.maximal_ideal_power(2).dim()
    }

    /// A local Artinian ring is regular only when it is a field.
    pub fn is_regular(&self) -> bool {
        self.dim() == 1
    }

    /// The maximal ideal is principal.
    pub fn is_pir(&self) -> bool {
        self.embedding_dimension() <= 1
    }

    /// In dimension zero, minimal multiplicity means `m^2 = 0`.
    pub fn has_minimal_multiplicity(&self) -> bool {
        self.maximal_ideal_power(2).is_zero()
    }

    pub fn render_monomial(&self, exps: &[u32]) -> String {
        let parts: Vec<String> = exps
            .iter()
            .zip(&self.var_names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Renders an element as `2*x*y + x^2 + 1`, terms in basis order.
    pub fn render(&self, a: &[F::Elem]) -> String {
        let f = &self.field;
        let terms: Vec<String> = a
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| !f.is_zero(c))
            .map(|(c, b)| {
                let mono = self.render_monomial(b);
                if b.iter().all(|&e| e == 0) {
                    f.render(c)
                } else if f.is_one(c) {
                    mono
                } else {
                    format!("{}*{mono}", f.render(c))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// An ideal of an [`ArtinianAlgebra`], stored as a canonical subspace of the
/// regular representation.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealSubspace<F: Field>(pub(crate) Subspace<F>);

impl<F: Field> IdealSubspace<F> {
    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn basis(&self) -> &[Vector<F>] {
        self.0.rows()
    }

    pub fn subspace(&self) -> &Subspace<F> {
        &self.0
    }

    pub fn contains(&self, a: &[F::Elem]) -> bool {
        self.0.contains(a)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subspace_of(&other.0)
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self(self.0.sum(&other.0))
    }

    /// Whether the subspace is closed under multiplication by every variable.
    pub fn is_ideal_of(&self, algebra: &ArtinianAlgebra<F>) -> bool {
        self.0.rows().iter().all(|r| {
            algebra
                .var_matrices()
                .iter()
                .all(|x| self.0.contains(&linalg::mat_vec(algebra.field(), x, r)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn alg(p: u64, vars: &[&str], rels: &[&[u32]]) -> ArtinianAlgebra<PrimeField> {
        ArtinianAlgebra::monomial_quotient(
            PrimeField::new(p).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
            rels.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn truncated_polynomial_ring() {
        let r = alg(5, &["x"], &[&[3]]);
        assert_eq!(r.basis(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(r.dim(), 3);
        assert!(r.is_pir());
        assert!(!r.has_minimal_multiplicity());
        let x = r.var(0);
        assert!(r.is_zero(&r.pow(&x, 3)));
        assert!(!r.is_zero(&r.pow(&x, 2)));
    }

    #[test]
    fn square_zero_plane() {
        let r = alg(2, &["x", "y"], &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(r.dim(), 3);
        assert!(r.maximal_ideal_power(2).is_zero());
        assert!(r.has_minimal_multiplicity());
        assert!(!r.is_pir());
        assert_eq!(r.socle(), r.maximal_ideal());
    }

    #[test]
    fn complete_intersection_socle() {
        let r = alg(101, &["x", "y"], &[&[2, 0], &[0, 2]]);
        assert_eq!(r.dim(), 4);
        assert_eq!(r.basis(), &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        let xy = r.monomial(&[1, 1]);
        assert_eq!(r.socle(), r.ideal_generated([xy]));
        assert_eq!(r.socle().dim(), 1);
    }

    #[test]
    fn construction_errors() {
        let f = PrimeField::new(3).unwrap();
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(
            ArtinianAlgebra::monomial_quotient(f, names.clone(), vec![vec![2, 0], vec![1, 1]]),
            Err(Error::NotArtinian("y".into()))
        );
        assert!(matches!(
            ArtinianAlgebra::monomial_quotient(f, names, vec![vec![20, 0], vec![0, 20]]),
            Err(Error::SizeGuard(_))
        ));
    }

    #[test]
    fn rendering() {
        let r = alg(7, &["x", "y"], &[&[2, 0], &[0, 2]]);
        let e = r.add(&r.scalar(3), &r.mul(&r.var(0), &r.var(1)));
        assert_eq!(r.render(&e), "3 + x*y");
        assert_eq!(r.render(&r.zero()), "0");
        assert_eq!(r.to_string(), "GF(7)[x,y]/(x^2,y^2)");
    }

    #[test]
    fn ideals_are_closed() {
        let r = alg(3, &["x", "y"], &[&[3, 0], &[1, 1], &[0, 3]]);
        let i = r.ideal_generated([r.var(1)]);
        assert!(i.is_ideal_of(&r));
        assert_eq!(i.dim(), 2);
        assert!(r.socle().is_ideal_of(&r));
        assert!(r.maximal_ideal_power(2).is_ideal_of(&r));
    }
}
