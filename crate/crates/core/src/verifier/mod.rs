//! Property suites: each checks one statement over a catalog of instances
//! and returns a [`SuiteReport`].
//!
//! Suites are deterministic in their configuration. Randomized suites draw
//! from ChaCha8 streams derived from the seed and the instance index, so
//! results do not depend on the number of worker threads.

mod artinian_suites;
pub mod catalog;
pub mod oracles;
mod report;
mod semigroup_suites;

use serde::{Deserialize, Serialize};

pub use artinian_suites::{suite_koszul, suite_matrix_lemma, suite_pir, suite_syzygy_full_trace};
pub use report::{Failure, Status, SuiteReport};
pub use semigroup_suites::{
    suite_decomposition, suite_dvr, suite_endo, suite_gorenstein, suite_min_mult_equiv,
    suite_ulrich_reduction,
};

use report::run_suite;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub frobenius_bound: i64,
    pub pir_n_max: u32,
    pub pir_steps: usize,
    pub syzygy_steps: usize,
    /// Random matrices per catalog algebra.
    pub trials: usize,
    pub koszul_n_max: usize,
    pub decomposition_samples: usize,
    pub rank_cap: usize,
    /// Random instances per side in the cross-oracle and trace calculus
    /// suites.
    pub oracle_instances: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            frobenius_bound: 12,
            pir_n_max: 6,
            pir_steps: 8,
            syzygy_steps: 4,
            trials: 200,
            koszul_n_max: 6,
            decomposition_samples: 500,
            rank_cap: 3,
            oracle_instances: 100,
        }
    }
}

/// Two independent trace computations agree.
pub fn suite_oracle_cross(config: &SuiteConfig) -> SuiteReport {
    run_suite(
        "oracle_cross",
        "trace via colon equals trace via window scan, and trace via intertwiners equals trace via \
         the kernel of the transposed presentation",
        || {
            let a = semigroup_suites::oracle_cross_semigroups(config)?;
            let b = artinian_suites::oracle_cross_artinian(config)?;
            Ok(a.merge(b))
        },
    )
}

/// Basic trace identities.
pub fn suite_trace_calculus(config: &SuiteConfig) -> SuiteReport {
    run_suite(
        "trace_calculus",
        "I lies in tr(I) for ideals, tr(M + N) = tr(M) + tr(N), trace ideals are their own traces, \
         and tr(M) = R iff M has a free summand",
        || {
            let a = semigroup_suites::trace_calculus_semigroups(config)?;
            let b = artinian_suites::trace_calculus_artinian(config)?;
            Ok(a.merge(b))
        },
    )
}

pub const SUITE_IDS: [&str; 12] = [
    "pir",
    "syzygy_full_trace",
    "matrix_lemma",
    "koszul",
    "min_mult_equiv",
    "dvr",
    "ulrich_reduction",
    "endo",
    "decomposition",
    "gorenstein",
    "oracle_cross",
    "trace_calculus",
];

/// Runs the suite with the given id.
pub fn run(id: &str, config: &SuiteConfig) -> Option<SuiteReport> {
    let report = match id {
        "pir" => suite_pir(config),
        "syzygy_full_trace" => suite_syzygy_full_trace(config),
        "matrix_lemma" => suite_matrix_lemma(config),
        "koszul" => suite_koszul(config),
        "min_mult_equiv" => suite_min_mult_equiv(config),
        "dvr" => suite_dvr(config),
        "ulrich_reduction" => suite_ulrich_reduction(config),
        "endo" => suite_endo(config),
        "decomposition" => suite_decomposition(config),
        "gorenstein" => suite_gorenstein(config),
        "oracle_cross" => suite_oracle_cross(config),
        "trace_calculus" => suite_trace_calculus(config),
        _ => return None,
    };
    Some(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: SuiteConfig,
    pub suites: Vec<SuiteReport>,
}

impl VerificationReport {
    /// No suite failed; skipped suites do not count as failures.
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.status != Status::Fail)
    }
}

/// Every suite, in canonical order.
pub fn run_all(config: &SuiteConfig) -> VerificationReport {
    let suites = SUITE_IDS
        .iter()
        .map(|id| run(id, config).expect("known id"))
        .collect();
    VerificationReport {
        config: config.clone(),
        suites,
    }
}
