//! Numerical semigroups: cofinite additive submonoids of the nonnegative
//! integers, given by their minimal generators.

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest Frobenius bound accepted by [`enumerate_semigroups`].
pub const MAX_ENUMERATION_FROBENIUS: i64 = 30;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    gaps: Vec<i64>,
    /// Membership over `[0, frobenius + 2 * multiplicity]`; everything beyond
    /// is a member.
    members: Vec<bool>,
}

/// On-disk form: `{"generators": [3, 4, 5]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSpec {
    pub generators: Vec<i64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`. The minimal generating set
    /// is recomputed, so redundant generators are accepted.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let g = gens.iter().fold(0u64, |acc, &x| gcd(acc, x as u64));
        if g != 1 {
            return Err(Error::NotCofinite(g));
        }
        let m = *gens.iter().min().unwrap();
        let apery = apery_by_shortest_paths(m, gens);
        let frobenius = apery.iter().max().unwrap() - m;
        let bound = (frobenius + 2 * m).max(0) as usize;
        let members: Vec<bool> = (0..=bound as i64)
            .map(|n| apery[n.rem_euclid(m) as usize] <= n)
            .collect();
        let gaps = (1..=frobenius.max(0)).filter(|&n| !members[n as usize]).collect();

        let mut sg = Self {
            generators: Vec::new(),
            frobenius,
            gaps,
            members,
        };
        // n is a minimal generator iff it is a nonzero member that is not the
        // sum of two nonzero members.
        let mut sorted: Vec<i64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sg.generators = sorted
            .into_iter()
            .filter(|&n| !(1..n).any(|a| sg.contains(a) && sg.contains(n - a)))
            .collect();
        Ok(sg)
    }

    /// The semigroup whose gap set is exactly `gaps`, if that set is
    /// closed in the required sense.
    pub fn from_gaps(gaps: &[i64]) -> Result<Self> {
        let mut gaps = gaps.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.iter().any(|&g| g <= 0) {
            return Err(Error::Precondition("gaps must be positive".into()));
        }
        let f = gaps.last().copied().unwrap_or(-1);
        let is_member = |n: i64| n >= 0 && gaps.binary_search(&n).is_err();
        for a in 1..=f {
            for b in a..=f - a {
                if is_member(a) && is_member(b) && !is_member(a + b) {
                    return Err(Error::Precondition(format!(
                        "{a} + {b} is listed as a gap"
                    )));
                }
            }
        }
        // members up to 2f+1 generate the semigroup
        let gens: Vec<i64> = (1..=2 * f + 2).filter(|&n| is_member(n)).collect();
        let sg = Self::from_generators(&gens)?;
        debug_assert_eq!(sg.gaps, gaps);
        Ok(sg)
    }

    pub fn spec(&self) -> SemigroupSpec {
        SemigroupSpec {
            generators: self.generators.clone(),
        }
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// The conductor `F + 1`.
    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn is_regular(&self) -> bool {
        self.generators == [1]
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        match self.members.get(n as usize) {
            Some(&b) => b,
            None => true,
        }
    }

    /// For each residue `r` mod `n`, the least member congruent to `r`;
    /// indexed by residue.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::InvalidAperyBase(n));
        }
        let mut out = vec![None; n as usize];
        let mut found = 0;
        let mut s = 0;
        while found < n {
            if self.contains(s) {
                let slot = &mut out[(s % n) as usize];
                if slot.is_none() {
                    *slot = Some(s);
                    found += 1;
                }
            }
            s += 1;
        }
        Ok(out.into_iter().map(Option::unwrap).collect())
    }

    /// Multiplicity equals embedding dimension (the dimension-one form of
    /// `e(R) = edim(R) - dim(R) + 1`).
    pub fn has_minimal_multiplicity(&self) -> bool {
        self.multiplicity() as usize == self.embedding_dimension()
    }

    /// Exactly one of `x`, `F - x` is a member for every integer `x`.
    pub fn is_symmetric(&self) -> bool {
        2 * self.gaps.len() as i64 == self.frobenius + 1
    }

    /// Every shifted tail `{t - s : t in S, t >= s}` is closed under
    /// addition. Tails at `s > F` are all of the nonnegative integers, so only
    /// members up to `F + e` are checked.
    pub fn is_arf(&self) -> bool {
        let f = self.frobenius;
        let top = f + self.multiplicity();
        (0..=top).filter(|&s| self.contains(s)).all(|s| {
            let tail = |x: i64| self.contains(x + s);
            // sums with a summand beyond F - s land beyond F
            (0..=f - s).all(|a| {
                !tail(a) || (a..=f - s).all(|b| !tail(b) || tail(a + b))
            })
        })
    }

    /// Members in `[lo, hi)`.
    pub fn members_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo..hi).filter(move |&n| self.contains(n))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(i64::to_string).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

/// Dijkstra over residues mod `m`; entry `r` is the least combination of
/// `gens` congruent to `r`.
fn apery_by_shortest_paths(m: i64, gens: &[i64]) -> Vec<i64> {
    let mut dist = vec![i64::MAX; m as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let nd = d + g;
            let nr = (nd % m) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

/// All numerical semigroups with Frobenius number at most `max_frobenius`,
/// ordered lexicographically by their sorted gap lists.
///
/// Walks the semigroup tree: the children of `S` remove one minimal
/// generator larger than `F(S)`, which becomes the new Frobenius number.
pub fn enumerate_semigroups(max_frobenius: i64) -> Result<Vec<NumericalSemigroup>> {
    if max_frobenius > MAX_ENUMERATION_FROBENIUS {
        return Err(Error::EnumerationBound {
            what: "frobenius bound",
            got: max_frobenius as usize,
            limit: MAX_ENUMERATION_FROBENIUS as usize,
        });
    }
    let root = NumericalSemigroup::from_generators(&[1])?;
    let mut out = Vec::new();
    let mut stack = vec![root];
    while let Some(s) = stack.pop() {
        for &g in s.generators() {
            if g > s.frobenius() && g <= max_frobenius {
                let mut gaps = s.gaps().to_vec();
                gaps.push(g);
                stack.push(NumericalSemigroup::from_gaps(&gaps)?);
            }
        }
        out.push(s);
    }
    out.sort_by(|a, b| a.gaps().cmp(b.gaps()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    /// Coin-combination search, independent of the Apéry machinery.
    fn brute_contains(gens: &[i64], n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let mut reach = vec![false; n as usize + 1];
        reach[0] = true;
        for i in 1..=n as usize {
            reach[i] = gens.iter().any(|&g| g as usize <= i && reach[i - g as usize]);
        }
        reach[n as usize]
    }

    #[test]
    fn construction_examples() {
        let full = sg(&[1]);
        assert_eq!(full.generators(), &[1]);
        assert_eq!(full.frobenius(), -1);
        assert!(full.gaps().is_empty());

        let s = sg(&[3, 4, 5]);
        assert_eq!(s.frobenius(), 2);
        assert_eq!(s.gaps(), &[1, 2]);

        let mc = sg(&[6, 9, 20]);
        assert_eq!(mc.frobenius(), 43);
        let brute_f = (0..=120).filter(|&n| !brute_contains(&[6, 9, 20], n)).max();
        assert_eq!(brute_f, Some(43));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(Error::EmptyInput));
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NotCofinite(2))
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 1]),
            Err(Error::NonPositiveGenerator(0))
        );
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let s = sg(&[3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(s.generators(), &[3, 4, 5]);
        let t = sg(&[2, 4, 3, 3]);
        assert_eq!(t.generators(), &[2, 3]);
    }

    #[test]
    fn membership_examples() {
        let s = sg(&[3, 4, 5]);
        assert!(!s.contains(2));
        assert!(s.contains(0));
        assert!(!s.contains(-3));
        assert!(sg(&[2, 3]).contains(7));
    }

    #[test]
    fn apery_examples() {
        assert_eq!(sg(&[2, 3]).apery_set(2).unwrap(), vec![0, 3]);
        assert_eq!(sg(&[1]).apery_set(1).unwrap(), vec![0]);
        assert_eq!(sg(&[3, 4, 5]).apery_set(3).unwrap(), vec![0, 4, 5]);
        assert_eq!(sg(&[3, 4, 5]).apery_set(2), Err(Error::InvalidAperyBase(2)));
        assert_eq!(sg(&[3, 4, 5]).apery_set(0), Err(Error::InvalidAperyBase(0)));
    }

    #[test]
    fn classification_examples() {
        assert!(sg(&[3, 4, 5]).has_minimal_multiplicity());
        assert!(sg(&[1]).has_minimal_multiplicity());
        assert!(!sg(&[4, 5, 6]).has_minimal_multiplicity());

        assert!(sg(&[2, 3]).is_symmetric());
        assert!(!sg(&[3, 4, 5]).is_symmetric());
        assert!(sg(&[1]).is_symmetric());

        assert!(sg(&[3, 4, 5]).is_arf());
        assert!(sg(&[1]).is_arf());
        assert!(!sg(&[4, 5, 6]).is_arf());
    }

    /// Arf via the triple condition `x + y - z in S` for members
    /// `x >= y >= z`, scanned on a window past the conductor.
    fn brute_arf(s: &NumericalSemigroup) -> bool {
        let top = s.frobenius() + 2 * s.multiplicity() + 2;
        let mem: Vec<i64> = s.members_in(0, top).collect();
        mem.iter().all(|&x| {
            mem.iter()
                .filter(|&&y| y <= x)
                .all(|&y| mem.iter().filter(|&&z| z <= y).all(|&z| s.contains(x + y - z)))
        })
    }

    #[test]
    fn multiplicity_two_semigroups_are_arf() {
        // <2,5>: the triple condition holds, and every tail is a semigroup.
        let s = sg(&[2, 5]);
        assert!(brute_arf(&s));
        assert!(s.is_arf());
    }

    #[test]
    fn arf_agrees_with_triple_condition() {
        for s in enumerate_semigroups(12).unwrap() {
            assert_eq!(s.is_arf(), brute_arf(&s), "{s}");
        }
    }

    #[test]
    fn enumeration_examples() {
        let e0 = enumerate_semigroups(0).unwrap();
        assert_eq!(e0, vec![sg(&[1])]);
        let e1 = enumerate_semigroups(1).unwrap();
        assert_eq!(e1, vec![sg(&[1]), sg(&[2, 3])]);
        // <2,5> has Frobenius number 3, so it first appears at bound 3.
        let e2 = enumerate_semigroups(2).unwrap();
        assert_eq!(e2, vec![sg(&[1]), sg(&[2, 3]), sg(&[3, 4, 5])]);
        let e3 = enumerate_semigroups(3).unwrap();
        assert!(e3.contains(&sg(&[2, 5])));
        assert!(e3.contains(&sg(&[4, 5, 6, 7])));
        assert_eq!(e3.len(), 5);
        assert!(matches!(
            enumerate_semigroups(31),
            Err(Error::EnumerationBound { .. })
        ));
    }

    /// Counts of semigroups by Frobenius number, by closure-filtering every
    /// subset of `[1, F-1]` together with `F`.
    #[test]
    fn enumeration_is_complete() {
        for bound in 0..=10i64 {
            let mut expected = 1usize; // the full monoid
            for f in 1..=bound {
                for mask in 0u32..(1 << (f - 1)) {
                    let mut gaps: Vec<i64> =
                        (1..f).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                    gaps.push(f);
                    let member = |n: i64| n >= 0 && !gaps.contains(&n);
                    let closed = (1..=f).all(|a| {
                        (1..=f).all(|b| !(member(a) && member(b)) || member(a + b))
                    });
                    if closed {
                        expected += 1;
                    }
                }
            }
            let got = enumerate_semigroups(bound).unwrap();
            assert_eq!(got.len(), expected, "bound {bound}");
            let mut gap_lists: Vec<_> = got.iter().map(|s| s.gaps().to_vec()).collect();
            let sorted = gap_lists.clone();
            gap_lists.dedup();
            assert_eq!(gap_lists, sorted);
        }
    }

    #[test]
    fn enumerated_invariants() {
        for s in enumerate_semigroups(14).unwrap() {
            let e = s.multiplicity();
            for n in 0..=s.frobenius() + 2 * e {
                assert_eq!(s.contains(n), brute_contains(s.generators(), n), "{s} {n}");
            }
            let ap = s.apery_set(e).unwrap();
            assert_eq!(ap.len() as i64, e);
            for (r, &w) in ap.iter().enumerate() {
                assert_eq!(w.rem_euclid(e), r as i64);
                assert!(s.contains(w));
                assert!(!s.contains(w - e));
            }
            let all_gens = ap
                .iter()
                .filter(|&&w| w != 0)
                .all(|w| s.generators().contains(w));
            assert_eq!(s.has_minimal_multiplicity(), all_gens, "{s}");
            assert!(s.gaps().iter().all(|&g| g <= s.frobenius()));
        }
    }

    #[test]
    fn arf_implies_minimal_multiplicity() {
        for s in enumerate_semigroups(25).unwrap() {
            if s.is_arf() {
                assert!(s.has_minimal_multiplicity(), "{s}");
            }
        }
    }

    proptest! {
        #[test]
        fn membership_matches_coin_search(gens in prop::collection::vec(2i64..20, 1..4)) {
            let mut gens = gens;
            gens.push(gens[0] + 1);
            let s = NumericalSemigroup::from_generators(&gens).unwrap();
            for n in 0..=s.frobenius() + 2 * s.multiplicity() + 3 {
                prop_assert_eq!(s.contains(n), brute_contains(&gens, n));
            }
            for &g in s.generators() {
                let others: Vec<i64> = s.generators().iter().copied().filter(|&h| h != g).collect();
                prop_assert!(others.is_empty() || !brute_contains(&others, g));
            }
        }
    }
}
