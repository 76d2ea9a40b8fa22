//! Command implementations. Each builds the table and the machine block
//! from the same computed values.

use serde_json::{json, Value};
use tracelab_core::artinian::{residue_field_resolution, minimal_resolution, IdealSubspace, PresentedModule};
use tracelab_core::field::PrimeField;
use tracelab_core::ideal::{
    endomorphism_ring, enumerate_normalized_ideals, is_nearly_gorenstein, ModuleSum, ValueIdeal,
};
use tracelab_core::koszul::KoszulComplex;
use tracelab_core::semigroup::NumericalSemigroup;
use tracelab_core::verifier::{self, Status, SuiteConfig, SUITE_IDS};

use crate::error::CliError;
use crate::input::{self, Algebra, AlgebraFile, ArtModuleFile, SemigroupModuleFile};
use crate::{ArtCommand, KoszulArgs, Rendered, SgpCommand, SuiteCommand};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn joined<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn semigroup_json(s: &NumericalSemigroup) -> Value {
    json!({ "generators": s.generators() })
}

/// Re-parses as an ideal file; `window` carries the stored value set.
pub fn ideal_json(i: &ValueIdeal) -> Value {
    json!({
        "semigroup": semigroup_json(i.semigroup()),
        "values": i.minimal_generators(),
        "window": { "min": i.min(), "sporadic": i.sporadic(), "conductor": i.conductor() },
    })
}

/// `(= R)` or `(= m)` when the ideal is one of those.
fn ideal_label(i: &ValueIdeal) -> &'static str {
    let s = i.semigroup();
    if *i == ValueIdeal::ring(s) {
        " (= R)"
    } else if *i == ValueIdeal::maximal_ideal(s) {
        " (= m)"
    } else {
        ""
    }
}

pub fn sgp(cmd: &SgpCommand) -> Result<Rendered, CliError> {
    match cmd {
        SgpCommand::Info { semigroup } => {
            let s = input::semigroup(&input::read_json(semigroup)?)?;
            let flags = [
                ("minimal multiplicity", "minimal_multiplicity", s.has_minimal_multiplicity()),
                ("symmetric", "symmetric", s.is_symmetric()),
                ("arf", "arf", s.is_arf()),
                ("regular", "regular", s.is_regular()),
            ];
            let mut lines = vec![
                format!("semigroup             {s}"),
                format!("generators            {}", joined(s.generators())),
                format!("frobenius             {}", s.frobenius()),
                format!("gaps                  {}", joined(s.gaps())),
                format!("multiplicity          {}", s.multiplicity()),
                format!("embedding dimension   {}", s.embedding_dimension()),
            ];
            lines.extend(flags.iter().map(|(label, _, v)| format!("{label:<22}{}", yes(*v))));
            let flag_json: serde_json::Map<String, Value> =
                flags.iter().map(|(_, k, v)| (k.to_string(), json!(v))).collect();
            let machine = json!({
                "semigroup": semigroup_json(&s),
                "frobenius": s.frobenius(),
                "gaps": s.gaps(),
                "multiplicity": s.multiplicity(),
                "embedding_dimension": s.embedding_dimension(),
                "flags": flag_json,
            });
            Ok(Rendered { lines, machine, failed: false })
        }
        SgpCommand::Trace { module } => {
            let file: SemigroupModuleFile = input::read_json(module)?;
            let m = input::module_sum(&file)?;
            Ok(module_trace(&m))
        }
        SgpCommand::EnumFtu { semigroup } => {
            let s = input::semigroup(&input::read_json(semigroup)?)?;
            let ideals = enumerate_normalized_ideals(&s)?;
            let witnesses: Vec<&ValueIdeal> =
                ideals.iter().filter(|i| i.is_ulrich() && i.is_full_trace()).collect();
            let m = ValueIdeal::maximal_ideal(&s);
            let mut lines = vec![
                format!("semigroup              {s}"),
                format!("minimal multiplicity   {}", yes(s.has_minimal_multiplicity())),
                format!("normalized ideals      {}", ideals.len()),
                format!("full-trace Ulrich      {}", witnesses.len()),
            ];
            lines.extend(witnesses.iter().map(|w| {
                let tag = if m.isomorphic(w).is_some() { " (~ m)" } else { "" };
                format!("  {w}{tag}")
            }));
            let machine = json!({
                "semigroup": semigroup_json(&s),
                "minimal_multiplicity": s.has_minimal_multiplicity(),
                "normalized_ideals": ideals.len(),
                "full_trace_ulrich": witnesses.iter().map(|w| ideal_json(w)).collect::<Vec<_>>(),
            });
            Ok(Rendered { lines, machine, failed: false })
        }
        SgpCommand::Canonical { semigroup } => {
            let s = input::semigroup(&input::read_json(semigroup)?)?;
            let omega = ValueIdeal::canonical(&s);
            let tr = omega.trace();
            let ng = is_nearly_gorenstein(&s);
            let mut lines = vec![
                format!("semigroup          {s}"),
                format!("canonical          {omega}"),
                format!("trace              {tr}{}", ideal_label(&tr)),
                format!("symmetric          {}", yes(s.is_symmetric())),
                format!("nearly Gorenstein  {}", yes(ng)),
            ];
            let mut machine = json!({
                "semigroup": semigroup_json(&s),
                "canonical": ideal_json(&omega),
                "trace": ideal_json(&tr),
                "symmetric": s.is_symmetric(),
                "nearly_gorenstein": ng,
            });
            if !s.is_regular() {
                let e = endomorphism_ring(&s)?;
                lines.push(format!("(m : m)            {e}"));
                machine["endomorphism_ring"] = semigroup_json(&e);
            }
            Ok(Rendered { lines, machine, failed: false })
        }
    }
}

fn module_trace(m: &ModuleSum) -> Rendered {
    let tr = m.trace();
    let full = m.is_full_trace();
    let mut lines: Vec<String> = m.summands().iter().map(|i| format!("summand {i}")).collect();
    lines.push(format!("trace = {tr}{} full-trace: {}", ideal_label(&tr), yes(full)));
    lines.push(format!(
        "mu = {}  Ulrich: {}  free summand: {}",
        m.mu(),
        yes(m.is_ulrich()),
        yes(m.has_free_summand())
    ));
    let machine = json!({
        "summands": m.summands().iter().map(ideal_json).collect::<Vec<_>>(),
        "trace": ideal_json(&tr),
        "full_trace": full,
        "ulrich": m.is_ulrich(),
        "mu": m.mu(),
        "free_summand": m.has_free_summand(),
    });
    Rendered { lines, machine, failed: false }
}

fn render_ideal(alg: &Algebra, ideal: &IdealSubspace<PrimeField>) -> Vec<String> {
    ideal.basis().iter().map(|v| alg.render(v)).collect()
}

fn ideal_name(alg: &Algebra, ideal: &IdealSubspace<PrimeField>) -> &'static str {
    if *ideal == alg.whole() {
        " (= R)"
    } else if *ideal == alg.maximal_ideal() {
        " (= m)"
    } else if ideal.is_zero() {
        " (= 0)"
    } else if *ideal == alg.socle() {
        " (= socle)"
    } else {
        ""
    }
}

fn span(items: &[String]) -> String {
    format!("span({})", items.join(", "))
}

fn algebra_json(file: &AlgebraFile) -> Value {
    serde_json::to_value(file).expect("algebra file serializes")
}

fn load_algebra(path: &std::path::Path) -> Result<(AlgebraFile, Algebra), CliError> {
    let file: AlgebraFile = input::read_json(path)?;
    let alg = input::algebra(&file)?;
    Ok((file, alg))
}

pub fn art(cmd: &ArtCommand) -> Result<Rendered, CliError> {
    match cmd {
        ArtCommand::Resolve { algebra, module, steps } => {
            let (file, alg) = load_algebra(algebra)?;
            let m = match module {
                Some(path) => input::art_module(&input::read_json::<ArtModuleFile>(path)?, &alg)?,
                None => PresentedModule::residue_field(&alg),
            };
            let res = minimal_resolution(&m, *steps)?;
            let mut lines = vec![format!("algebra  {alg}"), format!("Betti    {}", joined(&res.betti))];
            let mut diffs = Vec::new();
            for (i, d) in res.differentials.iter().enumerate() {
                let rendered = d.render();
                let rows: Vec<String> = rendered.iter().map(|r| format!("[{}]", r.join(", "))).collect();
                lines.push(format!("phi_{}    {}", i + 1, rows.join(" ")));
                diffs.push(rendered);
            }
            let mut syz = Vec::new();
            for (i, omega) in res.syzygies.iter().enumerate() {
                let tr = omega.trace();
                let basis = render_ideal(&alg, &tr);
                lines.push(format!(
                    "syzygy {i}  dim {}  trace {}{}  full-trace: {}",
                    omega.dim(),
                    span(&basis),
                    ideal_name(&alg, &tr),
                    yes(tr == alg.maximal_ideal())
                ));
                syz.push(json!({ "index": i, "dim": omega.dim(), "trace": basis, "full_trace": tr == alg.maximal_ideal() }));
            }
            let machine = json!({
                "algebra": algebra_json(&file),
                "betti": res.betti,
                "differentials": diffs,
                "syzygies": syz,
                "finite": res.finite,
            });
            Ok(Rendered { lines, machine, failed: false })
        }
        ArtCommand::Trace { algebra, module } => {
            let (file, alg) = load_algebra(algebra)?;
            let m = input::art_module(&input::read_json(module)?, &alg)?;
            let tr = m.trace();
            let basis = render_ideal(&alg, &tr);
            let homs = m.hom_to_ring().len();
            let lines = vec![
                format!("algebra       {alg}"),
                format!("dim           {}", m.dim()),
                format!("mu            {}", m.mu()),
                format!("dim Hom(M,R)  {homs}"),
                format!("trace         {}{}", span(&basis), ideal_name(&alg, &tr)),
                format!("full-trace    {}", yes(m.is_full_trace())),
                format!("Ulrich        {}", yes(m.is_ulrich())),
                format!("free summand  {}", yes(m.has_free_summand())),
            ];
            let machine = json!({
                "algebra": algebra_json(&file),
                "dim": m.dim(),
                "mu": m.mu(),
                "hom_dim": homs,
                "trace": basis,
                "full_trace": m.is_full_trace(),
                "ulrich": m.is_ulrich(),
                "free_summand": m.has_free_summand(),
            });
            Ok(Rendered { lines, machine, failed: false })
        }
        ArtCommand::Check { algebra, steps } => {
            let (file, alg) = load_algebra(algebra)?;
            check_algebra(&file, &alg, *steps)
        }
    }
}

/// Predicted full-trace status of `Ω^i(k)`, or `None` where no prediction is
/// made.
fn predicted_full_trace(alg: &Algebra, i: usize) -> Option<bool> {
    if alg.is_regular() {
        return None;
    }
    if alg.is_pir() {
        return Some(alg.has_minimal_multiplicity() || i % 2 == 1);
    }
    // the i = 0 case is reported only
    (i >= 1).then_some(true)
}

fn check_algebra(file: &AlgebraFile, alg: &Algebra, steps: usize) -> Result<Rendered, CliError> {
    let socle = render_ideal(alg, &alg.socle());
    let mut lines = vec![
        format!("algebra               {alg}"),
        format!("length                {}", alg.dim()),
        format!("embedding dimension   {}", alg.embedding_dimension()),
        format!("regular               {}", yes(alg.is_regular())),
        format!("principal ideal ring  {}", yes(alg.is_pir())),
        format!("minimal multiplicity  {}", yes(alg.has_minimal_multiplicity())),
        format!("socle                 {}", span(&socle)),
    ];
    let res = residue_field_resolution(alg, steps)?;
    lines.push(format!("Betti                 {}", joined(&res.betti)));
    let mut failed = false;
    let mut rows = Vec::new();
    for (i, omega) in res.syzygies.iter().enumerate() {
        let full = omega.is_full_trace();
        let predicted = predicted_full_trace(alg, i);
        let verdict = match predicted {
            Some(p) if p == full => "agrees",
            Some(_) => {
                failed = true;
                "DISAGREES"
            }
            None => "reported",
        };
        lines.push(format!("syzygy {i}  full-trace: {}  {verdict}", yes(full)));
        rows.push(json!({ "index": i, "full_trace": full, "predicted": predicted }));
    }
    let machine = json!({
        "algebra": algebra_json(file),
        "length": alg.dim(),
        "embedding_dimension": alg.embedding_dimension(),
        "regular": alg.is_regular(),
        "pir": alg.is_pir(),
        "minimal_multiplicity": alg.has_minimal_multiplicity(),
        "socle": socle,
        "betti": res.betti,
        "syzygies": rows,
    });
    Ok(Rendered { lines, machine, failed })
}

pub fn koszul(args: &KoszulArgs) -> Result<Rendered, CliError> {
    let k = KoszulComplex::build(args.n)?;
    let n = k.n();
    let mut lines = vec![format!("Betti  {}", joined(&k.betti()))];
    let mut machine = json!({ "n": n, "betti": k.betti() });
    let mut failed = false;
    if args.check {
        let complex = k.verify_complex();
        lines.push(format!("d^2 = 0: {}", yes(complex)));
        let mut ideals = Vec::new();
        for i in 1..=n {
            let vars: Vec<String> = k.variable_ideal(i).iter().map(|j| format!("x{}", j + 1)).collect();
            let all = vars.len() == n;
            failed |= !all;
            lines.push(format!("d_{i} variables: {}  all: {}", vars.join(" "), yes(all)));
            ideals.push(vars);
        }
        failed |= !complex;
        machine["complex"] = json!(complex);
        machine["variable_ideals"] = json!(ideals);
    } else {
        let mut diffs = Vec::new();
        for i in 1..=n {
            let rendered = k.render(i);
            lines.push(format!("d_{i}:"));
            lines.extend(rendered.iter().map(|r| format!("  [{}]", r.join(", "))));
            diffs.push(rendered);
        }
        machine["differentials"] = json!(diffs);
    }
    Ok(Rendered { lines, machine, failed })
}

pub fn suite(cmd: &SuiteCommand, seed: u64) -> Result<Rendered, CliError> {
    match cmd {
        SuiteCommand::List => Ok(Rendered {
            lines: SUITE_IDS.iter().map(|s| s.to_string()).collect(),
            machine: json!(SUITE_IDS),
            failed: false,
        }),
        SuiteCommand::Run { all, ids } => {
            let config = SuiteConfig { seed, ..SuiteConfig::default() };
            let selected: Vec<&str> = if *all {
                SUITE_IDS.to_vec()
            } else if ids.is_empty() {
                return Err(CliError::Usage("name suites to run or pass --all".into()));
            } else {
                ids.iter().map(String::as_str).collect()
            };
            let mut suites = Vec::new();
            for id in selected {
                let report = verifier::run(id, &config)
                    .ok_or_else(|| CliError::Usage(format!("unknown suite `{id}`")))?;
                suites.push(report);
            }
            let report = verifier::VerificationReport { config, suites };
            let mut lines = Vec::new();
            for s in &report.suites {
                let status = match s.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                lines.push(format!(
                    "{status}  {:<18} instances={:<6} failures={}  {:.2}s",
                    s.id,
                    s.instances,
                    s.failures.len(),
                    s.wall_time.as_secs_f64()
                ));
                for f in &s.failures {
                    lines.push(format!("      {} expected {} got {}", f.instance, f.expected, f.got));
                }
                if let Some(reason) = &s.skipped {
                    lines.push(format!("      skipped: {reason}"));
                }
            }
            let passed = report.passed();
            lines.push(format!("overall: {}", if passed { "pass" } else { "FAIL" }));
            let machine = serde_json::to_value(&report).expect("report serializes");
            Ok(Rendered { lines, machine, failed: !passed })
        }
    }
}
