//! Suites over numerical semigroup rings.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::oracles::{comparison_window, members, random_ideal, window_scan_trace};
use super::report::{run_suite, Outcome, SuiteReport};
use super::SuiteConfig;
use crate::ideal::{
    endomorphism_ring, enumerate_normalized_ideals, is_nearly_gorenstein, trace_over_endomorphisms,
    ModuleSum, ValueIdeal,
};
use crate::semigroup::{enumerate_semigroups, NumericalSemigroup};
use crate::Result;

fn semigroups(bound: i64) -> Result<Vec<Arc<NumericalSemigroup>>> {
    Ok(enumerate_semigroups(bound)?.into_iter().map(Arc::new).collect())
}

fn describe(ideal: &ValueIdeal) -> String {
    format!(
        "{{\"semigroup\":{{\"generators\":{:?}}},\"values\":{:?}}}",
        ideal.semigroup().generators(),
        ideal.minimal_generators()
    )
}

/// Runs `per_semigroup` on every semigroup with Frobenius number at most
/// the bound, in parallel, merging outcomes in enumeration order.
fn over_semigroups(
    bound: i64,
    per_semigroup: impl Fn(&Arc<NumericalSemigroup>) -> Result<Outcome> + Sync + Send,
) -> Result<Outcome> {
    let parts: Vec<Result<Outcome>> = semigroups(bound)?.par_iter().map(per_semigroup).collect();
    Ok(Outcome::merge_all(parts.into_iter().collect::<Result<Vec<_>>>()?))
}

/// Full-trace Ulrich ideals exist exactly over minimal multiplicity.
pub fn suite_min_mult_equiv(config: &SuiteConfig) -> SuiteReport {
    run_suite(
        "min_mult_equiv",
        "over a non-regular ring, a full-trace Ulrich module exists iff the ring has minimal multiplicity; \
         the maximal ideal is a witness",
        || {
            let semigroup_side = over_semigroups(config.frobenius_bound, |s| {
                let mut out = Outcome::instance();
                if s.is_regular() {
                    return Ok(Outcome::default());
                }
                let witnesses: Vec<ValueIdeal> = enumerate_normalized_ideals(s)?
                    .into_iter()
                    .filter(|i| i.is_ulrich() && i.is_full_trace())
                    .collect();
                let minmult = s.has_minimal_multiplicity();
                out.check(
                    witnesses.is_empty() != minmult,
                    || format!("{{\"generators\":{:?}}}", s.generators()),
                    format!("full-trace Ulrich exists = {minmult}"),
                    format!("{} witnesses", witnesses.len()),
                );
                if minmult {
                    let m = ValueIdeal::maximal_ideal(s).normalized();
                    out.check(
                        witnesses.contains(&m),
                        || format!("{{\"generators\":{:?}}}", s.generators()),
                        "witnesses include m",
                        format!("{:?}", witnesses.iter().map(ToString::to_string).collect::<Vec<_>>()),
                    );
                }
                Ok(out)
            })?;
            let artinian_side = super::artinian_suites::min_mult_equiv_artinian();
            Ok(semigroup_side.merge(artinian_side))
        },
    )
}

/// Over the discrete valuation ring every ideal is principal, so none is
/// full-trace.
pub fn suite_dvr(_config: &SuiteConfig) -> SuiteReport {
    run_suite(
        "dvr",
        "over a discrete valuation ring there is no full-trace module",
        || {
            let s = Arc::new(NumericalSemigroup::from_generators(&[1])?);
            let mut out = Outcome::instance();
            let ideals = enumerate_normalized_ideals(&s)?;
            let ring = ValueIdeal::ring(&s);
            out.check(
                ideals == [ring.clone()],
                || "{\"generators\":[1]}".into(),
                "[{0,1,2,...}]",
                format!("{:?}", ideals.iter().map(ToString::to_string).collect::<Vec<_>>()),
            );
            for i in &ideals {
                out.check(!i.is_full_trace(), || describe(i), "not full-trace", i.trace());
            }
            let m = ValueIdeal::maximal_ideal(&s);
            out.check(m.trace() == ring, || describe(&m), ring.to_string(), m.trace());
            Ok(out)
        },
    )
}

/// `m tr(M) = q tr(M)` and the trace of an Ulrich ideal is Ulrich.
pub fn suite_ulrich_reduction(config: &SuiteConfig) -> SuiteReport {
    run_suite(
        "ulrich_reduction",
        "for an Ulrich module M, m tr(M) = q tr(M) with q the minimal reduction of m, and tr(M) is Ulrich",
        || {
            over_semigroups(config.frobenius_bound, |s| {
                let m = ValueIdeal::maximal_ideal(s);
                let e = s.multiplicity();
                let mut out = Outcome::default();
                for ideal in enumerate_normalized_ideals(s)?.into_iter().filter(ValueIdeal::is_ulrich) {
                    out = out.merge(Outcome::instance());
                    let t = ideal.trace();
                    let mt = m.multiply(&t)?;
                    out.check(mt == t.shift(e), || describe(&ideal), t.shift(e), &mt);
                    out.check(t.is_ulrich(), || describe(&ideal), "Ulrich trace", format!("mu = {}", t.mu()));
                }
                Ok(out)
            })
        },
    )
}

/// `E = (m : m)` is a ring, `m² = a m`, and `tr_R(M) = a tr_E(M)`.
pub fn suite_endo(config: &SuiteConfig) -> SuiteReport {
    run_suite(
        "endo",
        "with minimal multiplicity, (m : m) is a ring E, m^2 = a m, and tr_R(M) = a tr_E(M) for Ulrich M",
        || {
            over_semigroups(config.frobenius_bound, |s| {
                let mut out = Outcome::default();
                if s.is_regular() || !s.has_minimal_multiplicity() {
                    return Ok(out);
                }
                let e = s.multiplicity();
                let inst = || format!("{{\"generators\":{:?}}}", s.generators());
                let m = ValueIdeal::maximal_ideal(s);
                match endomorphism_ring(s) {
                    Ok(_) => {}
                    Err(err) => out.check(false, inst, "(m : m) closed under addition", err),
                }
                let m2 = m.multiply(&m)?;
                out.check(m2 == m.shift(e), inst, m.shift(e), &m2);
                for ideal in enumerate_normalized_ideals(s)?.into_iter().filter(ValueIdeal::is_ulrich) {
                    out = out.merge(Outcome::instance());
                    let module = ModuleSum::new(vec![ideal.clone()])?;
                    let over_e = trace_over_endomorphisms(&module)?;
                    let tr = ideal.trace();
                    out.check(
                        tr.same_values(&over_e.shift(e)),
                        || describe(&ideal),
                        &tr,
                        over_e.shift(e),
                    );
                }
                Ok(out)
            })
        },
    )
}

/// Full-trace Ulrich sums over minimal multiplicity split off `m`.
pub fn suite_decomposition(config: &SuiteConfig) -> SuiteReport {
    run_suite(
        "decomposition",
        "with minimal multiplicity, a full-trace Ulrich module has a summand isomorphic to m \
         whose complement is zero or Ulrich",
        || {
            let pool: Vec<(Arc<NumericalSemigroup>, Vec<ValueIdeal>)> = semigroups(config.frobenius_bound)?
                .into_iter()
                .filter(|s| !s.is_regular() && s.has_minimal_multiplicity())
                .map(|s| {
                    let ulrich = enumerate_normalized_ideals(&s)?
                        .into_iter()
                        .filter(ValueIdeal::is_ulrich)
                        .collect();
                    Ok((s, ulrich))
                })
                .collect::<Result<_>>()?;
            let mut out = Outcome::default();
            if pool.is_empty() {
                out.note("no non-regular minimal multiplicity semigroup in range");
                return Ok(out);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let mut attempts = 0;
            let cap = config.decomposition_samples * 50;
            while out.instances < config.decomposition_samples && attempts < cap {
                attempts += 1;
                let (_, ulrich) = &pool[rng.gen_range(0..pool.len())];
                let rank = rng.gen_range(1..=config.rank_cap);
                let summands: Vec<ValueIdeal> = (0..rank)
                    .map(|_| ulrich[rng.gen_range(0..ulrich.len())].shift(rng.gen_range(-3..=3)))
                    .collect();
                let module = ModuleSum::new(summands)?;
                if !(module.is_ulrich() && module.is_full_trace()) {
                    continue;
                }
                out = out.merge(Outcome::instance());
                let inst = || {
                    let parts: Vec<String> = module.summands().iter().map(describe).collect();
                    format!("{{\"summands\":[{}]}}", parts.join(","))
                };
                match module.split_maximal() {
                    None => out.check(false, inst, "summand isomorphic to m", "none"),
                    Some(split) => {
                        let ok = split.complement.iter().all(ValueIdeal::is_ulrich);
                        out.check(ok, inst, "complement zero or Ulrich", format!("{:?}", split.complement));
                    }
                }
            }
            out.note(format!("{attempts} samples drawn, {} full-trace Ulrich", out.instances));
            out.check(
                out.instances == config.decomposition_samples,
                || "sampler".into(),
                format!("{} full-trace Ulrich samples", config.decomposition_samples),
                out.instances,
            );
            Ok(out)
        },
    )
}

/// `tr(ω) = R` exactly for symmetric semigroups.
pub fn suite_gorenstein(config: &SuiteConfig) -> SuiteReport {
    run_suite(
        "gorenstein",
        "the trace of the canonical module is the ring iff the ring is Gorenstein",
        || {
            let mut out = over_semigroups(config.frobenius_bound, |s| {
                let mut out = Outcome::instance();
                let omega = ValueIdeal::canonical(s);
                let full = omega.trace() == ValueIdeal::ring(s);
                out.check(
                    full == s.is_symmetric(),
                    || format!("{{\"generators\":{:?}}}", s.generators()),
                    format!("tr(omega) = R is {}", s.is_symmetric()),
                    omega.trace(),
                );
                if s.has_minimal_multiplicity() && !s.is_symmetric() {
                    let ng = is_nearly_gorenstein(s);
                    out.note(if ng { "ng" } else { "not ng" });
                }
                Ok(out)
            })?;
            // replace per-semigroup markers by a summary
            let ng = out.notes.iter().filter(|n| *n == "ng").count();
            let total = out.notes.len();
            out.notes = vec![format!(
                "{total} non-symmetric semigroups with minimal multiplicity, {ng} nearly Gorenstein"
            )];
            Ok(out)
        },
    )
}

/// Colon route against window scan on random ideals.
pub(crate) fn oracle_cross_semigroups(config: &SuiteConfig) -> Result<Outcome> {
    let pool = semigroups(config.frobenius_bound)?;
    let parts: Vec<Outcome> = (0..config.oracle_instances)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(i as u64);
            let s = &pool[rng.gen_range(0..pool.len())];
            let ideal = random_ideal(&mut rng, s);
            let mut out = Outcome::instance();
            let top = comparison_window(&ideal);
            let tr = ideal.trace();
            for window in [top, top + s.multiplicity()] {
                let scan = window_scan_trace(&ideal, window);
                out.check(scan == members(&tr, window), || describe(&ideal), format!("{scan:?}"), &tr);
            }
            out
        })
        .collect();
    Ok(Outcome::merge_all(parts))
}

/// Trace calculus on rank-one ideals.
pub(crate) fn trace_calculus_semigroups(config: &SuiteConfig) -> Result<Outcome> {
    over_semigroups(config.frobenius_bound, |s| {
        let ring = ValueIdeal::ring(s);
        let m = ValueIdeal::maximal_ideal(s);
        let omega = ValueIdeal::canonical(s);
        let mut out = Outcome::default();
        for ideal in enumerate_normalized_ideals(s)? {
            out = out.merge(Outcome::instance());
            let inst = || describe(&ideal);
            let tr = ideal.trace();
            // least shift landing inside R
            let integral = (0..=s.conductor())
                .map(|a| ideal.shift(a))
                .find(|i| i.is_subset(&ring))
                .expect("shift by the conductor is integral");
            out.check(integral.is_subset(&integral.trace()), inst, "I ⊆ tr(I)", integral.trace());
            out.check(tr.trace() == tr, inst, &tr, tr.trace());
            out.check(
                (tr == ring) == ideal.has_free_summand(),
                inst,
                format!("free summand {}", ideal.has_free_summand()),
                &tr,
            );
            for other in [&m, &omega] {
                let sum = ModuleSum::new(vec![ideal.clone(), other.clone()])?;
                let top = comparison_window(&ideal).max(comparison_window(other));
                let mut expected = window_scan_trace(&ideal, top);
                expected.extend(window_scan_trace(other, top));
                expected.sort_unstable();
                expected.dedup();
                let got = members(&sum.trace(), top);
                out.check(got == expected, inst, format!("{expected:?}"), format!("{got:?}"));
                out.check(
                    (sum.trace() == ring) == sum.has_free_summand(),
                    inst,
                    format!("free summand {}", sum.has_free_summand()),
                    sum.trace(),
                );
            }
        }
        Ok(out)
    })
}
