//! Minimal free resolutions by repeated minimal covers.

use std::sync::Arc;

use super::algebra::{ArtinianAlgebra, IdealSubspace};
use super::matrix::RMatrix;
use super::module::{free_act, restricted_actions, PresentedModule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Subspace, Vector};

pub const MAX_STEPS: usize = 12;
pub const MAX_FREE_DIM: usize = 100_000;

#[derive(Clone, Debug)]
pub struct FreeResolution<F: Field> {
    /// `betti[i]` is the rank of the `i`-th free module.
    pub betti: Vec<usize>,
    /// `differentials[i]` is `φ_{i+1} : R^{b_{i+1}} -> R^{b_i}`.
    pub differentials: Vec<RMatrix<F>>,
    /// `syzygies[i]` is `Ω^i(M)`, with `syzygies[0] = M`.
    pub syzygies: Vec<PresentedModule<F>>,
    /// True when a zero syzygy was reached before running out of steps.
    pub finite: bool,
}

impl<F: Field> FreeResolution<F> {
    pub fn matrix_ideals(&self) -> Vec<IdealSubspace<F>> {
        self.differentials.iter().map(RMatrix::ideal).collect()
    }

    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(RMatrix::is_minimal)
    }

    /// Consecutive differentials compose to zero.
    pub fn is_complex(&self) -> bool {
        self.differentials
            .windows(2)
            .all(|w| w[0].compose(&w[1]).is_ok_and(|m| m.is_zero()))
    }
}

struct Cover<F: Field> {
    generators: Vec<Vector<F>>,
    kernel: Subspace<F>,
}

/// Minimal cover `R^b -> M` sending `e_i` to the `i`-th minimal generator,
/// together with its kernel in block layout.
fn minimal_cover<F: Field>(module: &PresentedModule<F>) -> Result<Cover<F>> {
    let alg = module.algebra();
    let f = alg.field();
    let l = alg.dim();
    let generators = module.minimal_generators();
    let width = generators.len() * l;
    if width > MAX_FREE_DIM {
        return Err(Error::SizeGuard(format!(
            "free module of dimension {width} exceeds {MAX_FREE_DIM}"
        )));
    }
    // column i*l + t is β_t · g_i
    let columns: Vec<Vector<F>> = generators
        .iter()
        .flat_map(|g| module.monomial_images(g))
        .collect();
    let rows: Vec<Vector<F>> = (0..module.dim())
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let kernel = Subspace::spanned_by(f, width, linalg::kernel(f, &rows, width));
    Ok(Cover { generators, kernel })
}

/// Resolves `M` through `steps` syzygies, or until one vanishes.
pub fn minimal_resolution<F: Field>(
    module: &PresentedModule<F>,
    steps: usize,
) -> Result<FreeResolution<F>> {
    if steps > MAX_STEPS {
        return Err(Error::SizeGuard(format!("{steps} steps exceeds {MAX_STEPS}")));
    }
    let alg = Arc::clone(module.algebra());
    let f = alg.field();
    let nvars = alg.num_vars();
    let mut betti = Vec::new();
    let mut differentials = Vec::new();
    let mut syzygies = vec![module.clone()];
    // embedding of the current syzygy into the previous free module
    let mut embedding: Option<(Subspace<F>, usize)> = None;
    let mut finite = false;
    loop {
        let current = syzygies.last().expect("nonempty");
        let cover = minimal_cover(current)?;
        let b = cover.generators.len();
        betti.push(b);
        if let Some((sub, prev_rank)) = &embedding {
            let columns: Vec<Vector<F>> = cover
                .generators
                .iter()
                .map(|g| lift(f, sub, g))
                .collect();
            differentials.push(RMatrix::from_columns(&alg, *prev_rank, &columns));
        }
        if b == 0 {
            finite = true;
            break;
        }
        if syzygies.len() > steps {
            break;
        }
        let kernel = cover.kernel;
        if kernel.is_zero() {
            finite = true;
            break;
        }
        let actions = restricted_actions(&kernel, nvars, |j, v| free_act(&alg, j, v));
        syzygies.push(PresentedModule::new(&alg, actions)?);
        embedding = Some((kernel, b));
    }
    Ok(FreeResolution {
        betti,
        differentials,
        syzygies,
        finite,
    })
}

/// The ambient vector of a point given in the coordinates of `sub`.
fn lift<F: Field>(f: &F, sub: &Subspace<F>, coords: &[F::Elem]) -> Vector<F> {
    let mut out = linalg::zero_vector(f, sub.ambient());
    for (c, row) in coords.iter().zip(sub.rows()) {
        if f.is_zero(c) {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            f.add_mul(o, c, x);
        }
    }
    out
}

/// Ideal generated by the entries of a matrix.
pub fn matrix_ideal<F: Field>(matrix: &RMatrix<F>) -> IdealSubspace<F> {
    matrix.ideal()
}

/// Trace computed from a minimal presentation `R^{b1} -> R^{b0} -> M -> 0`:
/// `Hom(M, R)` is the set of rows `v` with `v φ₁ = 0`, and the trace is the
/// ideal generated by all entries of a basis of those rows.
pub fn trace_via_presentation<F: Field>(module: &PresentedModule<F>) -> Result<IdealSubspace<F>> {
    let alg = module.algebra();
    let f = alg.field();
    let l = alg.dim();
    let res = minimal_resolution(module, 1)?;
    let b0 = res.betti[0];
    let n = b0 * l;
    let mut equations: Vec<Vector<F>> = Vec::new();
    if let Some(phi) = res.differentials.first() {
        for c in 0..phi.cols() {
            // Σ_i v_i φ[i][c] = 0, one scalar equation per output coordinate
            let blocks: Vec<_> = (0..b0).map(|i| alg.mult_matrix(phi.entry(i, c))).collect();
            for a in 0..l {
                let mut eq = linalg::zero_vector(f, n);
                for (i, m) in blocks.iter().enumerate() {
                    for t in 0..l {
                        eq[i * l + t] = m[a][t].clone();
                    }
                }
                equations.push(eq);
            }
        }
    }
    let solutions = linalg::kernel(f, &equations, n);
    let entries = solutions
        .iter()
        .flat_map(|v| v.chunks(l).map(<[F::Elem]>::to_vec).collect::<Vec<_>>());
    Ok(alg.ideal_generated(entries))
}

/// `Ω^i(k)` for `i = 0..=steps`, via the resolution of the residue field.
pub fn residue_field_resolution<F: Field>(
    algebra: &Arc<ArtinianAlgebra<F>>,
    steps: usize,
) -> Result<FreeResolution<F>> {
    minimal_resolution(&PresentedModule::residue_field(algebra), steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn alg(p: u64, vars: &[&str], rels: &[&[u32]]) -> Arc<ArtinianAlgebra<PrimeField>> {
        Arc::new(
            ArtinianAlgebra::monomial_quotient(
                PrimeField::new(p).unwrap(),
                vars.iter().map(|s| s.to_string()).collect(),
                rels.iter().map(|r| r.to_vec()).collect(),
            )
            .unwrap(),
        )
    }

    #[test]
    fn principal_ideal_ring_pattern() {
        let r = alg(5, &["x"], &[&[3]]);
        let res = residue_field_resolution(&r, 4).unwrap();
        assert_eq!(res.betti, vec![1, 1, 1, 1, 1]);
        assert!(res.is_minimal());
        assert!(res.is_complex());
        let x = r.var(0);
        let x2 = r.monomial(&[2]);
        assert_eq!(res.differentials[0].entry(0, 0), &x);
        assert_eq!(res.differentials[1].entry(0, 0), &x2);
        assert_eq!(res.differentials[2].entry(0, 0), &x);
        assert_eq!(res.syzygies[1].trace(), r.maximal_ideal());
        assert_eq!(res.syzygies[2].trace(), r.maximal_ideal_power(2));
    }

    #[test]
    fn betti_doubles_when_square_of_maximal_ideal_vanishes() {
        let r = alg(2, &["x", "y"], &[&[2, 0], &[1, 1], &[0, 2]]);
        let res = residue_field_resolution(&r, 4).unwrap();
        assert_eq!(res.betti, vec![1, 2, 4, 8, 16]);
        assert!(res.is_minimal());
        assert!(res.is_complex());
        assert_eq!(matrix_ideal(&res.differentials[0]), r.maximal_ideal());
    }

    #[test]
    fn free_module_resolution_stops() {
        let r = alg(101, &["x", "y"], &[&[2, 0], &[0, 2]]);
        let res = minimal_resolution(&PresentedModule::regular(&r), 5).unwrap();
        assert_eq!(res.betti, vec![1]);
        assert!(res.finite);
        assert!(res.differentials.is_empty());
    }

    #[test]
    fn complete_intersection_traces() {
        let r = alg(101, &["x", "y"], &[&[2, 0], &[0, 2]]);
        let res = residue_field_resolution(&r, 3).unwrap();
        assert_eq!(res.betti, vec![1, 2, 3, 4]);
        for omega in &res.syzygies[1..] {
            assert_eq!(omega.trace(), r.maximal_ideal());
        }
        assert_eq!(res.syzygies[0].trace(), r.socle());
    }

    #[test]
    fn presentation_trace_agrees() {
        let r = alg(3, &["x", "y"], &[&[2, 0], &[0, 3]]);
        let k = PresentedModule::residue_field(&r);
        assert_eq!(trace_via_presentation(&k).unwrap(), k.trace());
        let i = PresentedModule::ideal(&r, [r.var(1)]);
        assert_eq!(trace_via_presentation(&i).unwrap(), i.trace());
        let free = PresentedModule::free(&r, 2);
        assert_eq!(trace_via_presentation(&free).unwrap(), r.whole());
    }

    #[test]
    fn step_guard() {
        let r = alg(2, &["x"], &[&[2]]);
        assert!(residue_field_resolution(&r, 13).unwrap_err().is_guard());
    }
}
