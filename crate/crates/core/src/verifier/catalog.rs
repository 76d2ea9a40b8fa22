//! Fixed instance catalogs.

use std::sync::Arc;

use crate::artinian::ArtinianAlgebra;
use crate::field::PrimeField;

pub const CATALOG_PRIMES: [u64; 2] = [2, 101];

pub type Algebra = Arc<ArtinianAlgebra<PrimeField>>;

/// `GF(p)[vars] / (relations)`; the relations must define an Artinian
/// algebra.
pub fn monomial_algebra(p: u64, vars: &[&str], relations: &[&[u32]]) -> Algebra {
    let field = PrimeField::new(p).expect("catalog primes are prime");
    Arc::new(
        ArtinianAlgebra::monomial_quotient(
            field,
            vars.iter().map(|v| v.to_string()).collect(),
            relations.iter().map(|r| r.to_vec()).collect(),
        )
        .expect("catalog algebras are valid"),
    )
}

/// `GF(p)[x] / (x^n)`.
pub fn truncated_polynomial(p: u64, n: u32) -> Algebra {
    monomial_algebra(p, &["x"], &[&[n]])
}

/// Relations of the catalog algebras, one entry per algebra.
fn catalog_shapes() -> Vec<(Vec<&'static str>, Vec<Vec<u32>>)> {
    let mut shapes: Vec<(Vec<&str>, Vec<Vec<u32>>)> =
        (2..=6).map(|n| (vec!["x"], vec![vec![n]])).collect();
    let xy = vec!["x", "y"];
    shapes.push((xy.clone(), vec![vec![2, 0], vec![1, 1], vec![0, 2]]));
    shapes.push((xy.clone(), vec![vec![2, 0], vec![0, 2]]));
    shapes.push((xy.clone(), vec![vec![2, 0], vec![0, 3]]));
    shapes.push((xy, vec![vec![3, 0], vec![1, 1], vec![0, 3]]));
    let mut quadrics = Vec::new();
    for i in 0..3 {
        for j in i..3 {
            let mut e = vec![0; 3];
            e[i] += 1;
            e[j] += 1;
            quadrics.push(e);
        }
    }
    shapes.push((vec!["x", "y", "z"], quadrics));
    shapes
}

/// Every catalog algebra at every catalog prime, prime-major.
pub fn artinian_catalog() -> Vec<Algebra> {
    let shapes = catalog_shapes();
    CATALOG_PRIMES
        .iter()
        .flat_map(|&p| {
            shapes.iter().map(move |(vars, rels)| {
                let rels: Vec<&[u32]> = rels.iter().map(Vec::as_slice).collect();
                monomial_algebra(p, vars, &rels)
            })
        })
        .collect()
}
