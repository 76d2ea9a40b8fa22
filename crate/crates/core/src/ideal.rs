//! Fractional monomial ideals over a numerical semigroup ring.
//!
//! A monomial fractional ideal of `k[[S]]` is determined by its value set: a
//! bounded-below set of integers `I` with `I + S ⊆ I`. Isomorphism classes
//! of these ideals are integer shifts of one another, so every class has a
//! normalized representative with minimum `0`.
//!
//! Hom-modules reduce to colons, `Hom(I, J) ≅ (J : I)`, so the trace of `I`
//! is `I + (S : I)`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Largest genus accepted by [`enumerate_normalized_ideals`].
pub const MAX_ENUMERATION_GENUS: usize = 20;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ValueIdeal {
    semigroup: Arc<NumericalSemigroup>,
    /// Members below the conductor, sorted.
    sporadic: Vec<i64>,
    /// Least `c` with `[c, ∞) ⊆ I` and `c - 1 ∉ I`.
    conductor: i64,
}

impl ValueIdeal {
    /// The closure `values + S`.
    pub fn from_values(semigroup: &Arc<NumericalSemigroup>, values: &[i64]) -> Result<Self> {
        let lo = *values.iter().min().ok_or(Error::EmptyInput)?;
        let hi = lo + semigroup.conductor();
        Ok(Self::from_window(semigroup, lo, hi, |x| {
            values.iter().any(|&v| semigroup.contains(x - v))
        }))
    }

    /// The set `{x in [lo, hi) : member(x)} ∪ [hi, ∞)`, stored canonically.
    /// Callers guarantee the set is closed under adding `S`.
    pub(crate) fn from_window(
        semigroup: &Arc<NumericalSemigroup>,
        lo: i64,
        hi: i64,
        member: impl Fn(i64) -> bool,
    ) -> Self {
        let mut conductor = hi;
        while conductor > lo && member(conductor - 1) {
            conductor -= 1;
        }
        let sporadic = (lo..conductor).filter(|&x| member(x)).collect();
        let ideal = Self {
            semigroup: Arc::clone(semigroup),
            sporadic,
            conductor,
        };
        debug_assert!(ideal.is_closed(), "window set not S-closed: {ideal:?}");
        ideal
    }

    /// `a + S`.
    pub fn principal(semigroup: &Arc<NumericalSemigroup>, a: i64) -> Self {
        Self::from_window(semigroup, a, a + semigroup.conductor(), |x| {
            semigroup.contains(x - a)
        })
    }

    /// The ring itself, value set `S`.
    pub fn ring(semigroup: &Arc<NumericalSemigroup>) -> Self {
        Self::principal(semigroup, 0)
    }

    /// The maximal ideal, value set `S \ {0}`.
    pub fn maximal_ideal(semigroup: &Arc<NumericalSemigroup>) -> Self {
        Self::from_window(semigroup, 1, semigroup.conductor().max(1), |x| {
            semigroup.contains(x)
        })
    }

    /// `n`-fold product of the maximal ideal.
    pub fn maximal_ideal_power(semigroup: &Arc<NumericalSemigroup>, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("power must be positive".into()));
        }
        let m = Self::maximal_ideal(semigroup);
        let mut acc = m.clone();
        for _ in 1..n {
            acc = acc.multiply(&m)?;
        }
        Ok(acc)
    }

    /// `{x : F - x ∉ S}`.
    pub fn canonical(semigroup: &Arc<NumericalSemigroup>) -> Self {
        let f = semigroup.frobenius();
        Self::from_window(semigroup, 0, f + 1, |x| !semigroup.contains(f - x))
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    pub fn min(&self) -> i64 {
        self.sporadic.first().copied().unwrap_or(self.conductor)
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn sporadic(&self) -> &[i64] {
        &self.sporadic
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.conductor || self.sporadic.binary_search(&x).is_ok()
    }

    /// Members in `[lo, hi)`.
    pub fn members_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo..hi).filter(move |&x| self.contains(x))
    }

    /// `I + S ⊆ I`, checked on the window `[min, conductor + 2e]`.
    pub fn is_closed(&self) -> bool {
        let top = self.conductor + 2 * self.semigroup.multiplicity();
        self.members_in(self.min(), top + 1).all(|v| {
            self.semigroup
                .generators()
                .iter()
                .all(|&s| self.contains(v + s))
        })
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.semigroup == other.semigroup {
            Ok(())
        } else {
            Err(Error::SemigroupMismatch)
        }
    }

    /// Same value set, regardless of the ring the sets are viewed over.
    pub fn same_values(&self, other: &Self) -> bool {
        self.sporadic == other.sporadic && self.conductor == other.conductor
    }

    /// Value-set inclusion.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.min() >= other.min()
            && self.members_in(self.min(), other.conductor).all(|x| other.contains(x))
    }

    /// `a + I`.
    pub fn shift(&self, a: i64) -> Self {
        Self {
            semigroup: Arc::clone(&self.semigroup),
            sporadic: self.sporadic.iter().map(|x| x + a).collect(),
            conductor: self.conductor + a,
        }
    }

    /// The representative of the isomorphism class with minimum 0.
    pub fn normalized(&self) -> Self {
        self.shift(-self.min())
    }

    /// Sum of ideals: union of the value sets.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let lo = self.min().min(other.min());
        let hi = self.conductor.min(other.conductor);
        Ok(Self::from_window(&self.semigroup, lo, hi, |x| {
            self.contains(x) || other.contains(x)
        }))
    }

    /// Product of ideals: pairwise sums of values.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mine = self.minimal_generators();
        let theirs = other.minimal_generators();
        let values: Vec<i64> = mine
            .iter()
            .flat_map(|a| theirs.iter().map(move |b| a + b))
            .collect();
        Self::from_values(&self.semigroup, &values)
    }

    /// `(self : other) = {x : x + other ⊆ self}`.
    ///
    /// Since `other` is generated by its minimal generators, membership of
    /// `x` only needs `x + g ∈ self` for each generator `g`. Every `x` below
    /// `min(self) - min(other)` fails and every `x` from
    /// `conductor(self) - min(other)` on succeeds, so the window is exact.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let gens = other.minimal_generators();
        let lo = self.min() - other.min();
        let hi = self.conductor - other.min();
        Ok(Self::from_window(&self.semigroup, lo, hi, |x| {
            gens.iter().all(|g| self.contains(x + g))
        }))
    }

    /// `tr(I) = I · (S : I)`.
    pub fn trace(&self) -> Self {
        let ring = Self::ring(&self.semigroup);
        let dual = ring.colon(self).expect("same semigroup");
        self.multiply(&dual).expect("same semigroup")
    }

    /// `I \ ((S \ {0}) + I)`.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let gens = self.semigroup.generators();
        let top = self.conductor + self.semigroup.multiplicity();
        self.members_in(self.min(), top)
            .filter(|&x| !gens.iter().any(|&s| self.contains(x - s)))
            .collect()
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.minimal_generators().len()
    }

    /// A rank-one module is Ulrich iff `μ(I) = e(S)`.
    pub fn is_ulrich(&self) -> bool {
        self.mu() as i64 == self.semigroup.multiplicity()
    }

    pub fn is_full_trace(&self) -> bool {
        self.trace() == Self::maximal_ideal(&self.semigroup)
    }

    /// The shift `a` with `other = a + self`, if there is one.
    pub fn isomorphic(&self, other: &Self) -> Option<i64> {
        if self.semigroup != other.semigroup {
            return None;
        }
        let a = other.min() - self.min();
        (self.shift(a) == *other).then_some(a)
    }

    pub fn has_free_summand(&self) -> bool {
        self.isomorphic(&Self::ring(&self.semigroup)).is_some()
    }

    /// The same value set viewed over a larger semigroup `over`; fails if the
    /// set is not closed under `over`.
    pub fn over(&self, over: &Arc<NumericalSemigroup>) -> Result<Self> {
        let ideal = Self {
            semigroup: Arc::clone(over),
            sporadic: self.sporadic.clone(),
            conductor: self.conductor,
        };
        if ideal.is_closed() {
            Ok(ideal)
        } else {
            Err(Error::Precondition(format!(
                "value set is not closed under {over}"
            )))
        }
    }
}

impl fmt::Debug for ValueIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.semigroup)
    }
}

/// Renders as `{0,1,3,4,5,...}`: sporadic values, then the conductor and
/// its next two successors.
impl fmt::Display for ValueIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.conductor;
        let items: Vec<String> = self
            .sporadic
            .iter()
            .copied()
            .chain([c, c + 1, c + 2])
            .map(|x| x.to_string())
            .collect();
        write!(f, "{{{},...}}", items.join(","))
    }
}

/// A finite direct sum of rank-one monomial modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSum {
    summands: Vec<ValueIdeal>,
}

/// A summand shift-isomorphic to the maximal ideal, and what is left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalSplitting {
    pub index: usize,
    pub shift: i64,
    pub complement: Vec<ValueIdeal>,
}

impl ModuleSum {
    pub fn new(summands: Vec<ValueIdeal>) -> Result<Self> {
        let first = summands.first().ok_or(Error::EmptyInput)?;
        if summands.iter().any(|s| s.semigroup != first.semigroup) {
            return Err(Error::SemigroupMismatch);
        }
        Ok(Self { summands })
    }

    pub fn summands(&self) -> &[ValueIdeal] {
        &self.summands
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        self.summands[0].semigroup()
    }

    /// Sum of the summand traces.
    pub fn trace(&self) -> ValueIdeal {
        self.summands
            .iter()
            .map(ValueIdeal::trace)
            .reduce(|a, b| a.add(&b).expect("common semigroup"))
            .expect("non-empty")
    }

    pub fn mu(&self) -> usize {
        self.summands.iter().map(ValueIdeal::mu).sum()
    }

    pub fn is_ulrich(&self) -> bool {
        self.summands.iter().all(ValueIdeal::is_ulrich)
    }

    pub fn is_full_trace(&self) -> bool {
        self.trace() == ValueIdeal::maximal_ideal(self.semigroup())
    }

    pub fn has_free_summand(&self) -> bool {
        self.summands.iter().any(ValueIdeal::has_free_summand)
    }

    /// Splits off the first summand isomorphic to the maximal ideal.
    pub fn split_maximal(&self) -> Option<MaximalSplitting> {
        let m = ValueIdeal::maximal_ideal(self.semigroup());
        self.summands.iter().enumerate().find_map(|(index, s)| {
            m.isomorphic(s).map(|shift| MaximalSplitting {
                index,
                shift,
                complement: self
                    .summands
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != index)
                    .map(|(_, t)| t.clone())
                    .collect(),
            })
        })
    }
}

/// Whether the ring is Gorenstein-adjacent: `m ⊆ tr(ω)`.
pub fn is_nearly_gorenstein(semigroup: &Arc<NumericalSemigroup>) -> bool {
    let m = ValueIdeal::maximal_ideal(semigroup);
    m.is_subset(&ValueIdeal::canonical(semigroup).trace())
}

/// The endomorphism ring `(m : m)` of the maximal ideal, as a numerical
/// semigroup.
pub fn endomorphism_ring(semigroup: &Arc<NumericalSemigroup>) -> Result<NumericalSemigroup> {
    let m = ValueIdeal::maximal_ideal(semigroup);
    let e = m.colon(&m)?;
    if e.min() != 0 {
        return Err(Error::NotARing(format!("(m : m) has minimum {}", e.min())));
    }
    // members below 2c + 2 include every minimal generator
    let top = 2 * e.conductor() + 2;
    let elements: Vec<i64> = e.members_in(1, top).collect();
    for &a in &elements {
        for &b in &elements {
            if !e.contains(a + b) {
                return Err(Error::NotARing(format!("{a} + {b} escapes (m : m)")));
            }
        }
    }
    let ring = NumericalSemigroup::from_generators(&elements)?;
    debug_assert!(ValueIdeal::ring(&Arc::new(ring.clone())).same_values(&e));
    Ok(ring)
}

/// Trace of `module` as a module over `E = (m : m)`, as a value set over
/// `E`. Requires minimal multiplicity and every summand Ulrich, which makes
/// each summand an `E`-module.
pub fn trace_over_endomorphisms(module: &ModuleSum) -> Result<ValueIdeal> {
    let s = module.semigroup();
    if !s.has_minimal_multiplicity() {
        return Err(Error::Precondition(format!("{s} lacks minimal multiplicity")));
    }
    if !module.is_ulrich() {
        return Err(Error::Precondition("module is not Ulrich".into()));
    }
    let e_ring = Arc::new(endomorphism_ring(s)?);
    let mut total: Option<ValueIdeal> = None;
    for summand in module.summands() {
        let t = summand.over(&e_ring)?.trace();
        total = Some(match total {
            None => t,
            Some(acc) => acc.add(&t)?,
        });
    }
    Ok(total.expect("non-empty"))
}

/// Every normalized ideal: value sets `E` with `min(E) = 0` and `E + S ⊆ E`,
/// i.e. `S` together with a subset of the gaps closed under adding
/// generators. Ordered lexicographically by the added gaps.
pub fn enumerate_normalized_ideals(semigroup: &Arc<NumericalSemigroup>) -> Result<Vec<ValueIdeal>> {
    let gaps = semigroup.gaps();
    if gaps.len() > MAX_ENUMERATION_GENUS {
        return Err(Error::EnumerationBound {
            what: "genus",
            got: gaps.len(),
            limit: MAX_ENUMERATION_GENUS,
        });
    }
    let gens = semigroup.generators();
    let index = |x: i64| gaps.binary_search(&x).ok();
    let mut found: Vec<(Vec<i64>, ValueIdeal)> = Vec::new();
    for mask in 0u32..(1u32 << gaps.len()) {
        let chosen = |x: i64| match index(x) {
            Some(i) => mask & (1 << i) != 0,
            None => semigroup.contains(x),
        };
        let closed = gaps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .all(|(_, &g)| gens.iter().all(|&s| chosen(g + s)));
        if !closed {
            continue;
        }
        let added: Vec<i64> = gaps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &g)| g)
            .collect();
        let ideal =
            ValueIdeal::from_window(semigroup, 0, semigroup.conductor().max(0), chosen);
        found.push((added, ideal));
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found.into_iter().map(|(_, i)| i).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::enumerate_semigroups;

    fn sg(g: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(g).unwrap())
    }

    fn ideal(s: &Arc<NumericalSemigroup>, v: &[i64]) -> ValueIdeal {
        ValueIdeal::from_values(s, v).unwrap()
    }

    #[test]
    fn maximal_ideal_examples() {
        let m = ValueIdeal::maximal_ideal(&sg(&[2, 3]));
        assert_eq!((m.min(), m.conductor()), (2, 2));
        let m = ValueIdeal::maximal_ideal(&sg(&[3, 4, 5]));
        assert_eq!((m.min(), m.conductor()), (3, 3));
        let m = ValueIdeal::maximal_ideal(&sg(&[1]));
        assert_eq!((m.min(), m.conductor()), (1, 1));
        let m = ValueIdeal::maximal_ideal(&sg(&[3, 7]));
        assert_eq!(m.sporadic(), &[3, 6, 7, 9, 10]);
        assert_eq!(m.conductor(), 12);
    }

    /// x + {values of J} ⊆ I, scanned on a wide window.
    fn brute_colon_member(i: &ValueIdeal, j: &ValueIdeal, x: i64) -> bool {
        let top = j.conductor() + i.conductor() + 50;
        j.members_in(j.min(), top).all(|y| i.contains(x + y))
    }

    #[test]
    fn colon_examples() {
        let s = sg(&[3, 4, 5]);
        let r = ValueIdeal::ring(&s);
        let m = ValueIdeal::maximal_ideal(&s);
        let c = r.colon(&m).unwrap();
        for x in -10..=10 {
            assert_eq!(c.contains(x), brute_colon_member(&r, &m, x), "{x}");
            assert_eq!(c.contains(x), x >= 0);
        }
        let s23 = sg(&[2, 3]);
        let m23 = ValueIdeal::maximal_ideal(&s23);
        let sq = m23.multiply(&m23).unwrap();
        assert_eq!((sq.min(), sq.conductor()), (4, 4));
        for i in enumerate_normalized_ideals(&s).unwrap() {
            assert!(i.colon(&i).unwrap().contains(0));
        }
    }

    #[test]
    fn mismatched_semigroups() {
        let a = ValueIdeal::ring(&sg(&[2, 3]));
        let b = ValueIdeal::ring(&sg(&[3, 4, 5]));
        assert_eq!(a.add(&b), Err(Error::SemigroupMismatch));
        assert_eq!(a.multiply(&b), Err(Error::SemigroupMismatch));
        assert_eq!(a.colon(&b), Err(Error::SemigroupMismatch));
        assert!(ModuleSum::new(vec![a, b]).is_err());
    }

    #[test]
    fn colon_matches_brute_force() {
        for s in enumerate_semigroups(8).unwrap() {
            let s = Arc::new(s);
            let ideals = enumerate_normalized_ideals(&s).unwrap();
            for i in &ideals {
                for j in &ideals {
                    let j = j.shift(s.multiplicity());
                    let c = i.colon(&j).unwrap();
                    for x in -20..30 {
                        assert_eq!(c.contains(x), brute_colon_member(i, &j, x));
                    }
                }
            }
        }
    }

    #[test]
    fn trace_examples() {
        let s = sg(&[3, 4, 5]);
        let m = ValueIdeal::maximal_ideal(&s);
        assert_eq!(m.trace(), m);
        let p = ValueIdeal::principal(&s, 7);
        assert_eq!(p.trace(), ValueIdeal::ring(&s));
        assert!(!p.is_full_trace());
        let dvr = sg(&[1]);
        assert_eq!(
            ValueIdeal::maximal_ideal(&dvr).trace(),
            ValueIdeal::ring(&dvr)
        );
    }

    #[test]
    fn generator_examples() {
        let s = sg(&[3, 4, 5]);
        let m = ValueIdeal::maximal_ideal(&s);
        assert_eq!(m.minimal_generators(), vec![3, 4, 5]);
        assert_eq!(m.mu(), 3);
        assert_eq!(ValueIdeal::ring(&s).minimal_generators(), vec![0]);
        let e = ideal(&s, &[0, 1]);
        assert_eq!(e.sporadic(), &[0, 1]);
        assert_eq!(e.conductor(), 3);
        assert_eq!(e.minimal_generators(), vec![0, 1]);
    }

    #[test]
    fn ulrich_examples() {
        assert!(ValueIdeal::maximal_ideal(&sg(&[3, 4, 5])).is_ulrich());
        assert!(!ValueIdeal::maximal_ideal(&sg(&[3, 7])).is_ulrich());
        assert!(!ValueIdeal::ring(&sg(&[2, 3])).is_ulrich());
    }

    #[test]
    fn full_trace_examples() {
        for s in enumerate_semigroups(9).unwrap() {
            let s = Arc::new(s);
            let m = ValueIdeal::maximal_ideal(&s);
            assert_eq!(m.is_full_trace(), !s.is_regular(), "{s}");
        }
        let s = sg(&[3, 4, 5]);
        let m = ValueIdeal::maximal_ideal(&s);
        let m2 = ValueIdeal::maximal_ideal_power(&s, 2).unwrap();
        let sum = ModuleSum::new(vec![m, m2]).unwrap();
        assert!(sum.is_full_trace());
        assert!(sum.is_ulrich());
    }

    #[test]
    fn power_and_isomorphism_examples() {
        let s = sg(&[3, 4, 5]);
        let m = ValueIdeal::maximal_ideal(&s);
        let m2 = ValueIdeal::maximal_ideal_power(&s, 2).unwrap();
        assert_eq!(m.isomorphic(&m2), Some(3));

        let t = sg(&[2, 5]);
        let mt = ValueIdeal::maximal_ideal(&t);
        let mt2 = ValueIdeal::maximal_ideal_power(&t, 2).unwrap();
        assert_eq!(mt2.sporadic(), &[4]);
        assert_eq!(mt2.conductor(), 6);
        // <2,5> has minimal multiplicity, so m^2 = 2 + m
        assert_eq!(mt.isomorphic(&mt2), Some(2));

        // without minimal multiplicity the power changes class
        let u = sg(&[3, 7]);
        let mu = ValueIdeal::maximal_ideal(&u);
        let mu2 = ValueIdeal::maximal_ideal_power(&u, 2).unwrap();
        assert_eq!(mu.isomorphic(&mu2), None);
        assert_eq!(m.isomorphic(&m), Some(0));
        assert!(ValueIdeal::maximal_ideal_power(&s, 0).is_err());
    }

    #[test]
    fn canonical_examples() {
        let s = sg(&[2, 3]);
        let w = ValueIdeal::canonical(&s);
        assert!(w.has_free_summand());
        assert_eq!(w.trace(), ValueIdeal::ring(&s));
        assert!(is_nearly_gorenstein(&s));

        let t = sg(&[3, 4, 5]);
        let w = ValueIdeal::canonical(&t);
        assert_eq!(w.sporadic(), &[0, 1]);
        assert_eq!(w.trace(), ValueIdeal::maximal_ideal(&t));
        assert!(is_nearly_gorenstein(&t));

        let u = sg(&[3, 7]);
        assert!(u.is_symmetric());
        assert!(ValueIdeal::canonical(&u).has_free_summand());
        let v = sg(&[4, 5, 11]);
        let tv = ValueIdeal::canonical(&v).trace();
        assert!(!v.is_symmetric());
        assert_eq!(is_nearly_gorenstein(&v), ValueIdeal::maximal_ideal(&v).is_subset(&tv));
    }

    #[test]
    fn endomorphism_examples() {
        assert_eq!(endomorphism_ring(&sg(&[3, 4, 5])).unwrap().generators(), &[1]);
        assert_eq!(endomorphism_ring(&sg(&[2, 3])).unwrap().generators(), &[1]);
        // without minimal multiplicity: x + {3, 7} ⊆ m by hand gives <3,7,11>
        assert_eq!(endomorphism_ring(&sg(&[3, 7])).unwrap().generators(), &[3, 7, 11]);

        let s = sg(&[3, 4, 5]);
        let m = ValueIdeal::maximal_ideal(&s);
        let module = ModuleSum::new(vec![m.clone()]).unwrap();
        let te = trace_over_endomorphisms(&module).unwrap();
        assert!(te.shift(3).same_values(&m.trace()));
        assert!(te.same_values(&ValueIdeal::ring(te.semigroup())));

        let bad = ModuleSum::new(vec![ValueIdeal::maximal_ideal(&sg(&[3, 7]))]).unwrap();
        assert!(trace_over_endomorphisms(&bad).is_err());
    }

    #[test]
    fn normalized_enumeration_examples() {
        let one = enumerate_normalized_ideals(&sg(&[1])).unwrap();
        assert_eq!(one, vec![ValueIdeal::ring(&sg(&[1]))]);
        let s = sg(&[2, 3]);
        let two = enumerate_normalized_ideals(&s).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0], ValueIdeal::ring(&s));
        assert_eq!((two[1].min(), two[1].conductor()), (0, 0));
        assert_eq!(enumerate_normalized_ideals(&sg(&[3, 4, 5])).unwrap().len(), 4);
        let big = sg(&(22..44).collect::<Vec<_>>());
        assert!(matches!(
            enumerate_normalized_ideals(&big),
            Err(Error::EnumerationBound { .. })
        ));
    }

    /// Brute-force count: subsets of the gaps closed under adding S.
    #[test]
    fn normalized_enumeration_is_complete() {
        for s in enumerate_semigroups(9).unwrap() {
            let s = Arc::new(s);
            let got = enumerate_normalized_ideals(&s).unwrap();
            let g = s.gaps().to_vec();
            let top = s.frobenius() + 1;
            let mut expected = 0;
            for mask in 0u32..(1 << g.len()) {
                let member = |x: i64| {
                    s.contains(x) || g.iter().position(|&y| y == x).is_some_and(|i| mask & (1 << i) != 0)
                };
                let closed = (0..top).all(|x| {
                    !member(x) || s.members_in(0, top + 1).all(|t| member(x + t))
                });
                if closed {
                    expected += 1;
                }
            }
            assert_eq!(got.len(), expected, "{s}");
            for i in &got {
                assert_eq!(i.min(), 0);
                assert!(i.is_closed());
            }
        }
    }

    #[test]
    fn display_format() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(ValueIdeal::maximal_ideal(&s).to_string(), "{3,4,5,...}");
        assert_eq!(ideal(&s, &[0, 1]).to_string(), "{0,1,3,4,5,...}");
    }
}
