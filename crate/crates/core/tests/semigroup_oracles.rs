//! Value-ideal arithmetic against plain set computations on a bounded
//! window.

use std::collections::BTreeSet;
use std::sync::Arc;

use tracelab_core::ideal::{
    endomorphism_ring, enumerate_normalized_ideals, trace_over_endomorphisms, ModuleSum, ValueIdeal,
};
use tracelab_core::semigroup::{enumerate_semigroups, NumericalSemigroup};

/// Window large enough for every set below: all values involved lie in
/// `[-W, W)` or are forced by cofiniteness past `W`.
const W: i64 = 60;

fn members(s: &NumericalSemigroup) -> BTreeSet<i64> {
    // coin search, independent of the Apéry-based membership
    let mut reach = vec![false; (2 * W) as usize];
    reach[0] = true;
    for n in 1..2 * W {
        reach[n as usize] = s.generators().iter().any(|&g| n >= g && reach[(n - g) as usize]);
    }
    (0..2 * W).filter(|&n| reach[n as usize]).collect()
}

fn set_of(ideal: &ValueIdeal) -> BTreeSet<i64> {
    (-W..W).filter(|&x| ideal.contains(x)).collect()
}

/// `{x : x + I ⊆ S}` restricted to `[-W, W/2)`, where `I` is a finite set
/// whose closure under `S` is the ideal (values above `W` are in `S`).
fn colon_set(s: &BTreeSet<i64>, ideal: &BTreeSet<i64>) -> BTreeSet<i64> {
    let inside = |x: i64| x >= 2 * W || s.contains(&x);
    (-W..W / 2)
        .filter(|&d| ideal.iter().all(|&v| inside(d + v)))
        .collect()
}

fn sumset(a: &BTreeSet<i64>, b: &BTreeSet<i64>, lo: i64, hi: i64) -> BTreeSet<i64> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x + y))
        .filter(|&z| (lo..hi).contains(&z))
        .collect()
}

#[test]
fn trace_matches_set_computation() {
    for s in enumerate_semigroups(8).unwrap() {
        let sset = members(&s);
        let s = Arc::new(s);
        for ideal in enumerate_normalized_ideals(&s).unwrap() {
            let i = set_of(&ideal);
            let dual = colon_set(&sset, &i);
            let window = 0..W / 2;
            let expected: BTreeSet<i64> = sumset(&i, &dual, 0, W / 2);
            let got: BTreeSet<i64> = window.filter(|&x| ideal.trace().contains(x)).collect();
            assert_eq!(got, expected, "{ideal:?}");
        }
    }
}

#[test]
fn colon_and_product_match_set_computation() {
    for s in enumerate_semigroups(6).unwrap() {
        let s = Arc::new(s);
        let ideals = enumerate_normalized_ideals(&s).unwrap();
        for a in &ideals {
            for b in &ideals {
                let b = b.shift(2);
                let sa = set_of(a);
                let sb = set_of(&b);
                let colon: BTreeSet<i64> = (-W / 2..W / 2)
                    .filter(|&x| sb.iter().all(|&v| x + v >= W || sa.contains(&(x + v))))
                    .collect();
                let got: BTreeSet<i64> = (-W / 2..W / 2).filter(|&x| a.colon(&b).unwrap().contains(x)).collect();
                assert_eq!(got, colon, "({a:?} : {b:?})");
                let product = sumset(&sa, &sb, -W, W / 2);
                let got: BTreeSet<i64> = (-W..W / 2).filter(|&x| a.multiply(&b).unwrap().contains(x)).collect();
                assert_eq!(got, product, "{a:?} * {b:?}");
            }
        }
    }
}

#[test]
fn minimal_generators_match_set_difference() {
    for s in enumerate_semigroups(7).unwrap() {
        let nonzero: BTreeSet<i64> = members(&s).into_iter().filter(|&x| x > 0).collect();
        let s = Arc::new(s);
        for ideal in enumerate_normalized_ideals(&s).unwrap() {
            let i = set_of(&ideal);
            let shifted = sumset(&nonzero, &i, -W, W);
            let gens: Vec<i64> = i.iter().copied().filter(|x| *x < W / 2 && !shifted.contains(x)).collect();
            assert_eq!(ideal.minimal_generators(), gens, "{ideal:?}");
        }
    }
}

#[test]
fn endomorphism_identity_on_sums() {
    // rank-two sums of Ulrich ideals: tr_R(M) = e + tr_E(M)
    for s in enumerate_semigroups(9).unwrap() {
        if s.is_regular() || !s.has_minimal_multiplicity() {
            continue;
        }
        let s = Arc::new(s);
        let e = s.multiplicity();
        let ring = endomorphism_ring(&s).unwrap();
        let m = ValueIdeal::maximal_ideal(&s);
        assert!(ValueIdeal::ring(&Arc::new(ring)).same_values(&m.colon(&m).unwrap()));
        let ulrich: Vec<_> = enumerate_normalized_ideals(&s)
            .unwrap()
            .into_iter()
            .filter(ValueIdeal::is_ulrich)
            .collect();
        for a in &ulrich {
            for b in &ulrich {
                let module = ModuleSum::new(vec![a.clone(), b.shift(1)]).unwrap();
                let over_e = trace_over_endomorphisms(&module).unwrap();
                assert!(module.trace().same_values(&over_e.shift(e)));
            }
        }
    }
}

#[test]
fn semigroup_counts_by_frobenius_number() {
    // counts of numerical semigroups with Frobenius number exactly F, by a
    // direct search over gap sets
    let direct = |f: i64| -> usize {
        let below: Vec<i64> = (1..f).collect();
        (0u32..1 << below.len())
            .filter(|mask| {
                let inside = |x: i64| x == 0 || x > f || (x > 0 && x < f && mask >> (x - 1) & 1 == 1);
                (1..f).all(|a| (1..f).all(|b| !(inside(a) && inside(b)) || inside(a + b)))
            })
            .count()
    };
    let all = enumerate_semigroups(10).unwrap();
    for f in 1..=10 {
        let ours = all.iter().filter(|s| s.frobenius() == f).count();
        assert_eq!(ours, direct(f), "F = {f}");
    }
}
