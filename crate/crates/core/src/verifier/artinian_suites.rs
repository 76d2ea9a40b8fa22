//! Suites over the Artinian catalog.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::catalog::{artinian_catalog, truncated_polynomial, Algebra, CATALOG_PRIMES};
use super::oracles::{random_element, random_matrix, random_module, ModuleRecipe};
use super::report::{run_suite, Outcome, SuiteReport};
use super::SuiteConfig;
use crate::artinian::{
    check_lemma_matrix_trace, matrix_ideal, residue_field_resolution, trace_via_presentation,
    PresentedModule, RMatrix,
};
use crate::field::PrimeField;
use crate::koszul::KoszulComplex;
use crate::Result;

fn par_algebras(
    algebras: Vec<Algebra>,
    per_algebra: impl Fn(usize, &Algebra) -> Result<Outcome> + Sync + Send,
) -> Result<Outcome> {
    let parts: Vec<Result<Outcome>> = algebras
        .par_iter()
        .enumerate()
        .map(|(i, a)| per_algebra(i, a))
        .collect();
    Ok(Outcome::merge_all(parts.into_iter().collect::<Result<Vec<_>>>()?))
}

fn render_matrix(alg: &Algebra, m: &RMatrix<PrimeField>) -> String {
    format!("{{\"algebra\":\"{alg}\",\"matrix\":{:?}}}", m.render())
}

/// Resolution of `k` over `GF(p)[x]/(x^n)`.
pub fn suite_pir(config: &SuiteConfig) -> SuiteReport {
    run_suite(
        "pir",
        "over k[x]/(x^n) the resolution of k has Betti numbers 1 with differentials alternating x and x^(n-1); \
         odd syzygies are m with trace m, even syzygies are m^(n-1) with trace m^(n-1)",
        || {
            let rings: Vec<Algebra> = CATALOG_PRIMES
                .iter()
                .flat_map(|&p| (2..=config.pir_n_max).map(move |n| truncated_polynomial(p, n)))
                .collect();
            let steps = config.pir_steps;
            par_algebras(rings, |_, r| {
                let mut out = Outcome::instance();
                let n = r.relations()[0][0];
                let inst = || r.to_string();
                let res = residue_field_resolution(r, steps)?;
                let m = r.maximal_ideal();
                let top = r.maximal_ideal_power(n - 1);
                out.check(res.betti == vec![1; steps + 1], inst, format!("{:?}", vec![1; steps + 1]), format!("{:?}", res.betti));
                out.check(res.is_minimal() && res.is_complex(), inst, "minimal complex", "not minimal or not a complex");
                let m_module = PresentedModule::ideal(r, [r.var(0)]);
                let top_module = PresentedModule::ideal(r, [r.monomial(&[n - 1])]);
                for (i, omega) in res.syzygies.iter().enumerate().skip(1) {
                    let (ideal, module) = if i % 2 == 1 { (&m, &m_module) } else { (&top, &top_module) };
                    let tr = omega.trace();
                    out.check(&tr == ideal, inst, format!("tr(syzygy {i}) = {:?}", ideal.basis()), format!("{:?}", tr.basis()));
                    out.check(omega.same_class(module), inst, format!("syzygy {i} isomorphic to its ideal"), "different class");
                    let phi = matrix_ideal(&res.differentials[i - 1]);
                    out.check(&phi == ideal, inst, format!("I(phi_{i})"), format!("{:?}", phi.basis()));
                }
                for (i, omega) in res.syzygies.iter().enumerate() {
                    let full = omega.is_full_trace();
                    if n == 2 {
                        out.check(full, inst, format!("syzygy {i} full-trace"), "not full-trace");
                    } else if i % 2 == 0 && i > 0 {
                        out.check(!full, inst, format!("syzygy {i} not full-trace"), "full-trace");
                    }
                }
                Ok(out)
            })
        },
    )
}

/// `tr(Ω^i(k)) = m` for `i ≥ 1` over non-regular rings that are not
/// principal ideal rings.
pub fn suite_syzygy_full_trace(config: &SuiteConfig) -> SuiteReport {
    run_suite(
        "syzygy_full_trace",
        "over a non-regular local ring that is not a principal ideal ring, every syzygy of k of order at least 1 \
         is full-trace, and m lies in the ideal of every differential",
        || {
            let algebras: Vec<Algebra> = artinian_catalog().into_iter().filter(|a| !a.is_pir()).collect();
            let steps = config.syzygy_steps;
            par_algebras(algebras, |_, r| {
                let mut out = Outcome::instance();
                let inst = || r.to_string();
                let res = residue_field_resolution(r, steps)?;
                let m = r.maximal_ideal();
                out.check(res.is_minimal() && res.is_complex(), inst, "minimal complex", "not minimal or not a complex");
                for (i, omega) in res.syzygies.iter().enumerate().skip(1) {
                    out.check(omega.is_full_trace(), inst, format!("tr(syzygy {i}) = m"), format!("{:?}", omega.trace().basis()));
                    let phi = matrix_ideal(&res.differentials[i - 1]);
                    out.check(m.is_subset(&phi), inst, format!("m in I(phi_{i})"), format!("{:?}", phi.basis()));
                }
                let k_trace = res.syzygies[0].trace();
                let value = if k_trace == m {
                    "m"
                } else if k_trace == r.socle() {
                    "the socle"
                } else {
                    "neither m nor the socle"
                };
                let expected = if r.has_minimal_multiplicity() { "m" } else { "the socle" };
                out.note(format!(
                    "{r}: tr(k) is {value} (expected {expected}); Betti {:?}",
                    res.betti
                ));
                Ok(out)
            })
        },
    )
}

/// `I(φ) ⊆ tr(im φ)` on random matrices and specialized Koszul
/// differentials.
pub fn suite_matrix_lemma(config: &SuiteConfig) -> SuiteReport {
    run_suite(
        "matrix_lemma",
        "the ideal generated by the entries of a matrix lies in the trace of its image",
        || {
            let trials = config.trials;
            let seed = config.seed;
            par_algebras(artinian_catalog(), |idx, r| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(idx as u64);
                let mut out = Outcome::default();
                for _ in 0..trials {
                    out = out.merge(Outcome::instance());
                    let in_m = rng.gen_bool(0.5);
                    let a = random_matrix(&mut rng, r, 2, 3, in_m);
                    out.check(check_lemma_matrix_trace(&a), || render_matrix(r, &a), "I(A) in tr(im A)", "not contained");
                }
                let vars: Vec<_> = (0..r.num_vars()).map(|j| r.var(j)).collect();
                let mut extended = vars.clone();
                extended.push(random_element(&mut rng, r, true));
                for images in [vars, extended] {
                    let koszul = KoszulComplex::build(images.len())?;
                    let diffs = koszul.specialize(r, &images)?;
                    for pair in diffs.windows(2) {
                        let zero = pair[0].compose(&pair[1])?.is_zero();
                        out.check(zero, || render_matrix(r, &pair[1]), "composition zero", "nonzero");
                    }
                    for d in &diffs {
                        out = out.merge(Outcome::instance());
                        out.check(check_lemma_matrix_trace(d), || render_matrix(r, d), "I(A) in tr(im A)", "not contained");
                    }
                }
                Ok(out)
            })
        },
    )
}

/// Symbolic Koszul certificates.
pub fn suite_koszul(config: &SuiteConfig) -> SuiteReport {
    run_suite(
        "koszul",
        "the Koszul complex on n variables is a complex and each differential involves every variable",
        || {
            let mut out = Outcome::default();
            for n in 1..=config.koszul_n_max {
                out = out.merge(Outcome::instance());
                let k = KoszulComplex::build(n)?;
                out.check(k.verify_complex(), || format!("n = {n}"), "d^2 = 0", "nonzero square");
                let all: Vec<usize> = (0..n).collect();
                for i in 1..=n {
                    let vars = k.variable_ideal(i);
                    out.check(vars == all, || format!("n = {n}, i = {i}"), format!("{all:?}"), format!("{vars:?}"));
                }
            }
            Ok(out)
        },
    )
}

/// Artinian side of the minimal multiplicity equivalence. Ulrich modules
/// are the nonzero `k`-vector spaces, whose trace is `tr(k)` by additivity.
pub(crate) fn min_mult_equiv_artinian() -> Outcome {
    let parts: Vec<Outcome> = artinian_catalog()
        .par_iter()
        .map(|r| {
            let mut out = Outcome::instance();
            let inst = || r.to_string();
            let k = PresentedModule::residue_field(r);
            let kk = k.direct_sum(&k).expect("same algebra");
            let minmult = r.has_minimal_multiplicity();
            out.check(k.is_ulrich() && kk.is_ulrich(), inst, "k and k^2 Ulrich", "not Ulrich");
            out.check(kk.trace() == k.trace(), inst, "tr(k^2) = tr(k)", "differs");
            out.check(k.is_full_trace() == minmult, inst, format!("k full-trace is {minmult}"), k.is_full_trace());
            out.check((r.socle() == r.maximal_ideal()) == minmult, inst, format!("socle = m is {minmult}"), "differs");
            out
        })
        .collect();
    Outcome::merge_all(parts)
}

fn random_instance(seed: u64, i: usize) -> (ChaCha8Rng, Algebra) {
    let catalog = artinian_catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1_000_000 + i as u64);
    let alg = catalog[rng.gen_range(0..catalog.len())].clone();
    (rng, alg)
}

fn describe_module(alg: &Algebra, recipe: &ModuleRecipe) -> String {
    format!("{{\"algebra\":\"{alg}\",\"module\":\"{}\"}}", recipe.render(alg))
}

/// Intertwiner trace against the presentation trace on random modules.
pub(crate) fn oracle_cross_artinian(config: &SuiteConfig) -> Result<Outcome> {
    let parts: Vec<Result<Outcome>> = (0..config.oracle_instances)
        .into_par_iter()
        .map(|i| {
            let (mut rng, r) = random_instance(config.seed, i);
            let recipe = random_module(&mut rng, &r);
            let module = recipe.build(&r);
            let mut out = Outcome::instance();
            let a = module.trace();
            let b = trace_via_presentation(&module)?;
            out.check(a == b, || describe_module(&r, &recipe), format!("{:?}", b.basis()), format!("{:?}", a.basis()));
            Ok(out)
        })
        .collect();
    Ok(Outcome::merge_all(parts.into_iter().collect::<Result<Vec<_>>>()?))
}

/// Trace calculus on random modules.
pub(crate) fn trace_calculus_artinian(config: &SuiteConfig) -> Result<Outcome> {
    let parts: Vec<Outcome> = (0..config.oracle_instances)
        .into_par_iter()
        .map(|i| {
            let (mut rng, r) = random_instance(config.seed ^ 0x5eed, i);
            let recipe = random_module(&mut rng, &r);
            let other = random_module(&mut rng, &r);
            let m = recipe.build(&r);
            let n = other.build(&r);
            let inst = || describe_module(&r, &ModuleRecipe::Sum(Box::new(recipe.clone()), Box::new(other.clone())));
            let mut out = Outcome::instance();
            let tm = m.trace();
            let sum = m.direct_sum(&n).expect("same algebra").trace();
            out.check(sum == tm.sum(&n.trace()), inst, "tr(M + N) = tr(M) + tr(N)", format!("{:?}", sum.basis()));
            let free = m.free_summand_certificate().is_some();
            out.check((tm == r.whole()) == free, inst, format!("tr(M) = R is {free}"), format!("{:?}", tm.basis()));
            let tt = PresentedModule::from_ideal(&r, &tm).trace();
            out.check(tt == tm, inst, "tr(tr(M)) = tr(M)", format!("{:?}", tt.basis()));
            if let ModuleRecipe::Ideal(gens) = &recipe {
                let ideal = r.ideal_generated(gens.iter().cloned());
                out.check(ideal.is_subset(&tm), inst, "I in tr(I)", format!("{:?}", tm.basis()));
            }
            out
        })
        .collect();
    Ok(Outcome::merge_all(parts))
}
