//! Acceptance criteria 1–12. Each criterion prints one PASS/FAIL line.
//! All comparisons are exact; the only tolerances are the runtime limits.

use std::process::ExitCode;
use std::time::Duration;

use tracelab_core::verifier::{self, Status, SuiteConfig, SuiteReport};

struct Criterion {
    number: u32,
    suite: &'static str,
    /// `None` when the criterion states no runtime bound.
    limit: Option<Duration>,
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

const CRITERIA: [Criterion; 12] = [
    Criterion { number: 1, suite: "pir", limit: secs(2) },
    Criterion { number: 2, suite: "syzygy_full_trace", limit: secs(60) },
    Criterion { number: 3, suite: "matrix_lemma", limit: secs(60) },
    Criterion { number: 4, suite: "koszul", limit: secs(1) },
    Criterion { number: 5, suite: "min_mult_equiv", limit: secs(120) },
    Criterion { number: 6, suite: "dvr", limit: secs(1) },
    Criterion { number: 7, suite: "ulrich_reduction", limit: None },
    Criterion { number: 8, suite: "endo", limit: None },
    Criterion { number: 9, suite: "decomposition", limit: None },
    Criterion { number: 10, suite: "gorenstein", limit: None },
    Criterion { number: 11, suite: "oracle_cross", limit: None },
    Criterion { number: 12, suite: "trace_calculus", limit: None },
];

fn verdict(c: &Criterion, report: &SuiteReport) -> bool {
    let in_time = c.limit.is_none_or(|l| report.wall_time < l);
    report.status == Status::Pass && in_time
}

fn main() -> ExitCode {
    let config = SuiteConfig::default();
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let report = verifier::run(c.suite, &config).expect("known suite");
        let ok = verdict(c, &report);
        let limit = c
            .limit
            .map_or("none".to_string(), |l| format!("{}s", l.as_secs()));
        println!(
            "criterion {:>2} {} suite={} instances={} failures={} time={:.2}s limit={}",
            c.number,
            if ok { "PASS" } else { "FAIL" },
            c.suite,
            report.instances,
            report.failures.len(),
            report.wall_time.as_secs_f64(),
            limit,
        );
        for note in &report.notes {
            println!("    note: {note}");
        }
        for f in report.failures.iter().take(5) {
            println!("    failure: {} expected {} got {}", f.instance, f.expected, f.got);
        }
        if let Some(reason) = &report.skipped {
            println!("    skipped: {reason}");
        }
        if !ok {
            failed.push(c.number);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
