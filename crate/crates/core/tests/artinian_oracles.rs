//! Artinian engine against exhaustive search over GF(2) and against closed
//! forms for Betti numbers.

use std::sync::Arc;

use tracelab_core::artinian::{
    minimal_resolution, residue_field_resolution, trace_via_presentation, ArtinianAlgebra,
    PresentedModule, RMatrix,
};
use tracelab_core::field::{Field, PrimeField, Rationals};
use tracelab_core::linalg::{mat_vec, Matrix, Subspace};

fn gf2_algebra(vars: &[&str], rels: &[&[u32]]) -> Arc<ArtinianAlgebra<PrimeField>> {
    Arc::new(
        ArtinianAlgebra::monomial_quotient(
            PrimeField::new(2).unwrap(),
            vars.iter().map(|v| v.to_string()).collect(),
            rels.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap(),
    )
}

/// All intertwiners `M -> R` by trying every `ℓ × d` matrix over GF(2);
/// returns the span of their images.
fn brute_trace(m: &PresentedModule<PrimeField>) -> Subspace<PrimeField> {
    let alg = m.algebra();
    let f = alg.field();
    let (l, d) = (alg.dim(), m.dim());
    let mut images = Subspace::zero(f, l);
    for bits in 0u64..1 << (l * d) {
        let map: Matrix<PrimeField> = (0..l)
            .map(|a| (0..d).map(|c| (bits >> (a * d + c)) & 1).collect())
            .collect();
        let intertwines = (0..alg.num_vars()).all(|j| {
            (0..d).all(|c| {
                let e: Vec<u64> = (0..d).map(|t| u64::from(t == c)).collect();
                let lhs = mat_vec(f, &map, &m.act(j, &e));
                let rhs = mat_vec(f, alg.var_matrix(j), &mat_vec(f, &map, &e));
                lhs == rhs
            })
        });
        if intertwines {
            for c in 0..d {
                images.insert(map.iter().map(|row| row[c]).collect());
            }
        }
    }
    images
}

fn gf2_catalog() -> Vec<Arc<ArtinianAlgebra<PrimeField>>> {
    vec![
        gf2_algebra(&["x"], &[&[2]]),
        gf2_algebra(&["x"], &[&[3]]),
        gf2_algebra(&["x"], &[&[4]]),
        gf2_algebra(&["x", "y"], &[&[2, 0], &[1, 1], &[0, 2]]),
        gf2_algebra(&["x", "y"], &[&[2, 0], &[0, 2]]),
    ]
}

#[test]
fn trace_matches_exhaustive_hom_search() {
    for alg in gf2_catalog() {
        let l = alg.dim();
        let mut modules = vec![
            PresentedModule::residue_field(&alg),
            PresentedModule::regular(&alg),
            PresentedModule::ideal(&alg, [alg.var(0)]),
        ];
        for j in 0..alg.num_vars() {
            let a = RMatrix::from_entries(&alg, vec![vec![alg.var(j)]]).unwrap();
            modules.push(PresentedModule::cokernel(&a));
        }
        let k = PresentedModule::residue_field(&alg);
        modules.push(k.direct_sum(&k).unwrap());
        for m in modules {
            if l * m.dim() > 16 {
                continue;
            }
            let expected = brute_trace(&m);
            assert_eq!(m.trace().subspace(), &expected, "{alg}, dim {}", m.dim());
            assert_eq!(trace_via_presentation(&m).unwrap().subspace(), &expected);
        }
    }
}

#[test]
fn hom_dimension_of_residue_field_is_socle_dimension() {
    for alg in gf2_catalog() {
        let k = PresentedModule::residue_field(&alg);
        assert_eq!(k.hom_to_ring().len(), alg.socle().dim(), "{alg}");
    }
}

#[test]
fn betti_numbers_match_closed_forms() {
    // k[x]/(x^n): all ones; (x^a, y^b): i + 1; m^2 = 0 in e variables: e^i
    for n in 2..=5 {
        let alg = gf2_algebra(&["x"], &[&[n]]);
        assert_eq!(residue_field_resolution(&alg, 6).unwrap().betti, vec![1; 7]);
    }
    for (a, b) in [(2, 2), (2, 3), (3, 3)] {
        let alg = gf2_algebra(&["x", "y"], &[&[a, 0], &[0, b]]);
        let betti = residue_field_resolution(&alg, 5).unwrap().betti;
        assert_eq!(betti, (1..=6).collect::<Vec<_>>());
    }
    let alg = gf2_algebra(&["x", "y", "z"], &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]);
    let betti = residue_field_resolution(&alg, 4).unwrap().betti;
    assert_eq!(betti, vec![1, 3, 9, 27, 81]);
}

#[test]
fn rational_coefficients() {
    let alg = Arc::new(
        ArtinianAlgebra::monomial_quotient(
            Rationals,
            vec!["x".into(), "y".into()],
            vec![vec![2, 0], vec![0, 2]],
        )
        .unwrap(),
    );
    let res = residue_field_resolution(&alg, 4).unwrap();
    assert_eq!(res.betti, vec![1, 2, 3, 4, 5]);
    assert!(res.is_minimal());
    assert!(res.is_complex());
    for omega in &res.syzygies[1..] {
        assert!(omega.is_full_trace());
    }
    assert_eq!(res.syzygies[0].trace(), alg.socle());
    let two = Rationals.from_i64(2);
    let half = Rationals.inv(&two);
    let u = alg.add(&alg.scalar(half), &alg.var(0));
    let m = PresentedModule::ideal(&alg, [u]);
    assert!(m.has_free_summand());
}

#[test]
fn resolution_of_free_module_and_guard() {
    let alg = gf2_algebra(&["x"], &[&[3]]);
    let free = PresentedModule::free(&alg, 3);
    let res = minimal_resolution(&free, 4).unwrap();
    assert_eq!(res.betti, vec![3]);
    assert!(minimal_resolution(&free, 40).unwrap_err().is_guard());
}
