//! Independent computations used to cross-check the main routes, and random
//! instance generators.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::catalog::Algebra;
use crate::artinian::{PresentedModule, RMatrix};
use crate::field::{Field, PrimeField};
use crate::ideal::ValueIdeal;
use crate::linalg::Vector;
use crate::semigroup::NumericalSemigroup;

/// Trace of `ideal` by direct scan: collect `D = {d : d + I ⊆ S}` and the
/// sums `I + D`, using only membership queries. Returns the members of the
/// trace in `[0, top)`.
pub fn window_scan_trace(ideal: &ValueIdeal, top: i64) -> Vec<i64> {
    let s = ideal.semigroup();
    let lo = ideal.min();
    let c = ideal.conductor();
    let f = s.frobenius();
    let e = s.multiplicity();
    // d + I ⊆ S needs d + min(I) ≥ 0; once d + min(I) > F it always holds
    let d_lo = -lo;
    let d_hi = f + 1 - lo;
    let v_top = c + f + 2 * e + 2;
    let in_dual = |d: i64| {
        d >= d_lo && (d > d_hi || (lo..v_top).all(|v| !ideal.contains(v) || s.contains(d + v)))
    };
    (0..top)
        .filter(|&t| (lo..=t + lo).any(|a| ideal.contains(a) && in_dual(t - a)))
        .collect()
}

/// Members of `ideal` in `[0, top)`.
pub fn members(ideal: &ValueIdeal, top: i64) -> Vec<i64> {
    ideal.members_in(0, top).collect()
}

/// Window for comparing traces: past every conductor involved, plus `2e`.
pub fn comparison_window(ideal: &ValueIdeal) -> i64 {
    let s = ideal.semigroup();
    (ideal.conductor() - ideal.min()).max(0) + s.conductor() + 2 * s.multiplicity()
}

/// A random fractional ideal generated by one to three values.
pub fn random_ideal(rng: &mut ChaCha8Rng, s: &Arc<NumericalSemigroup>) -> ValueIdeal {
    let count = rng.gen_range(1..=3);
    let values: Vec<i64> = (0..count).map(|_| rng.gen_range(-5..=15)).collect();
    ValueIdeal::from_values(s, &values).expect("non-empty values")
}

/// A random algebra element; each coefficient is zero with probability 1/2.
pub fn random_element(rng: &mut ChaCha8Rng, alg: &Algebra, in_maximal_ideal: bool) -> Vector<PrimeField> {
    let f = alg.field();
    let p = f.modulus();
    (0..alg.dim())
        .map(|i| {
            if (i == 0 && in_maximal_ideal) || rng.gen_bool(0.5) {
                f.zero()
            } else {
                f.from_i64(rng.gen_range(0..p) as i64)
            }
        })
        .collect()
}

/// A random matrix with up to `max_rows × max_cols` entries.
pub fn random_matrix(
    rng: &mut ChaCha8Rng,
    alg: &Algebra,
    max_rows: usize,
    max_cols: usize,
    in_maximal_ideal: bool,
) -> RMatrix<PrimeField> {
    let rows = rng.gen_range(1..=max_rows);
    let cols = rng.gen_range(1..=max_cols);
    let entries = (0..rows)
        .map(|_| (0..cols).map(|_| random_element(rng, alg, in_maximal_ideal)).collect())
        .collect();
    RMatrix::from_entries(alg, entries).expect("well-formed random matrix")
}

/// How a random module was built, for reproducers.
#[derive(Clone, Debug)]
pub enum ModuleRecipe {
    ResidueField,
    Ideal(Vec<Vector<PrimeField>>),
    Cokernel(RMatrix<PrimeField>),
    Image(RMatrix<PrimeField>),
    Sum(Box<ModuleRecipe>, Box<ModuleRecipe>),
}

impl ModuleRecipe {
    pub fn build(&self, alg: &Algebra) -> PresentedModule<PrimeField> {
        match self {
            Self::ResidueField => PresentedModule::residue_field(alg),
            Self::Ideal(gens) => PresentedModule::ideal(alg, gens.iter().cloned()),
            Self::Cokernel(m) => PresentedModule::cokernel(m),
            Self::Image(m) => PresentedModule::image(m),
            Self::Sum(a, b) => a.build(alg).direct_sum(&b.build(alg)).expect("same algebra"),
        }
    }

    pub fn render(&self, alg: &Algebra) -> String {
        let elems = |v: &[Vector<PrimeField>]| -> Vec<String> { v.iter().map(|e| alg.render(e)).collect() };
        match self {
            Self::ResidueField => "k".into(),
            Self::Ideal(gens) => format!("ideal{:?}", elems(gens)),
            Self::Cokernel(m) => format!("coker{:?}", m.render()),
            Self::Image(m) => format!("image{:?}", m.render()),
            Self::Sum(a, b) => format!("({}) + ({})", a.render(alg), b.render(alg)),
        }
    }
}

fn random_leaf(rng: &mut ChaCha8Rng, alg: &Algebra) -> ModuleRecipe {
    match rng.gen_range(0..4) {
        0 => ModuleRecipe::ResidueField,
        1 => {
            let n = rng.gen_range(1..=2);
            ModuleRecipe::Ideal((0..n).map(|_| random_element(rng, alg, false)).collect())
        }
        2 => ModuleRecipe::Cokernel(random_matrix(rng, alg, 2, 2, false)),
        _ => ModuleRecipe::Image(random_matrix(rng, alg, 2, 2, false)),
    }
}

/// A random module: a leaf, or a direct sum of two leaves.
pub fn random_module(rng: &mut ChaCha8Rng, alg: &Algebra) -> ModuleRecipe {
    if rng.gen_bool(0.25) {
        ModuleRecipe::Sum(Box::new(random_leaf(rng, alg)), Box::new(random_leaf(rng, alg)))
    } else {
        random_leaf(rng, alg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn sg(g: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(g).unwrap())
    }

    #[test]
    fn scan_examples() {
        let s = sg(&[3, 4, 5]);
        let m = ValueIdeal::maximal_ideal(&s);
        assert_eq!(window_scan_trace(&m, 8), vec![3, 4, 5, 6, 7]);
        let p = ValueIdeal::principal(&s, -4);
        assert_eq!(window_scan_trace(&p, 6), vec![0, 3, 4, 5]);
        let t = sg(&[1]);
        assert_eq!(window_scan_trace(&ValueIdeal::maximal_ideal(&t), 3), vec![0, 1, 2]);
    }

    #[test]
    fn random_modules_build() {
        let alg = super::super::catalog::monomial_algebra(3, &["x", "y"], &[&[2, 0], &[0, 2]]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let recipe = random_module(&mut rng, &alg);
            let m = recipe.build(&alg);
            assert!(m.dim() <= 4 * 4);
            assert!(!recipe.render(&alg).is_empty());
        }
    }
}
