//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.

mod common;

use std::time::{Duration, Instant};

use gmdeg::algebra::groebner::GroebnerConfig;
use gmdeg::cli;
use gmdeg::fibration::census::strata_census;
use gmdeg::fibration::geometry::ConicRank;
use gmdeg::fibration::instance::sample_instance;
use gmdeg::fibration::strata::{strata_ideal_analysis, BudgetStatus};
use gmdeg::report::Report;
use rayon::prelude::*;

const FAST: Duration = Duration::from_secs(1);
const INSTANCE_BUDGET: Duration = Duration::from_secs(600);
const EXACT_INSTANCES: u64 = 20;
const EXACT_REQUIRED: usize = 18;
const SAMPLES: u64 = 1_000_000;
const SCALING_FACTOR: f64 = 3.0;

struct Outcome {
    pass: bool,
    detail: String,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn failures(reports: &[&Report]) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| r.failures().map(|x| format!("{}/{}", r.command, x.label)))
        .collect()
}

/// Every record of the reports passes within the time limit.
fn reports_within(reports: &[&Report], elapsed: Duration) -> Outcome {
    let bad = failures(reports);
    let checks: usize = reports.iter().map(|r| r.records.len()).sum();
    Outcome {
        pass: bad.is_empty() && elapsed < FAST && checks > 0,
        detail: format!(
            "{checks} checks, {} failed {bad:?}, {:.3}s (limit 1s)",
            bad.len(),
            elapsed.as_secs_f64()
        ),
    }
}

fn chow() -> Outcome {
    let (r, t) = timed(cli::chow_verify);
    reports_within(&[&r], t)
}

fn gin() -> Outcome {
    let ((e, s), t) = timed(|| (cli::gin_enumerate(6).unwrap(), cli::gin_theorem_sextic()));
    let mut o = reports_within(&[&e, &s], t);
    let listed = &e.data["arrangements"];
    let want = serde_json::json!([[6], [5, 1], [4, 2], [3, 2, 1]]);
    o.pass &= *listed == want;
    o.detail = format!("arrangements {listed}; {}", o.detail);
    o
}

fn lattice() -> Outcome {
    let ((a, b, c), t) = timed(|| {
        (
            cli::lattice_sextic(),
            cli::lattice_splittings(4),
            cli::lattice_splittings(5),
        )
    });
    reports_within(&[&a, &b, &c], t)
}

fn config() -> Outcome {
    let ((a, b), t) = timed(|| (cli::config_verify(), cli::config_exclude(None).unwrap()));
    reports_within(&[&a, &b], t)
}

fn contact() -> Outcome {
    let (r, t) = timed(cli::fibration_contact);
    reports_within(&[&r], t)
}

fn exact_strata() -> Outcome {
    let cfg = GroebnerConfig::from_env();
    let runs: Vec<(u64, bool, String, Duration)> = (1..=EXACT_INSTANCES)
        .into_par_iter()
        .map(|seed| {
            let (res, t) = timed(|| {
                let inst = sample_instance(32003, seed)?;
                strata_ideal_analysis(&inst, 0, &cfg)
            });
            match res {
                Ok(s) => {
                    let budget = [&s.rank_le_3, &s.rank_le_2, &s.rank_le_1]
                        .iter()
                        .all(|x| x.budget_status == BudgetStatus::Ok);
                    let ok = s.is_generic()
                        && s.factorization.factor_degrees == [2, 6]
                        && budget
                        && t < INSTANCE_BUDGET;
                    let sig = format!(
                        "{}/{}/{}",
                        s.rank_le_3.dim_degree.map_or("?".into(), |d| d.to_string()),
                        s.rank_le_2.dim_degree.map_or("?".into(), |d| d.to_string()),
                        s.rank_le_1.dim_degree.map_or("?".into(), |d| d.to_string()),
                    );
                    (seed, ok, sig, t)
                }
                Err(e) => (seed, false, e.to_string(), t),
            }
        })
        .collect();
    let good = runs.iter().filter(|r| r.1).count();
    let slowest = runs.iter().map(|r| r.3).max().unwrap_or_default();
    let misses: Vec<String> = runs
        .iter()
        .filter(|r| !r.1)
        .map(|r| format!("seed {}: {}", r.0, r.2))
        .collect();
    Outcome {
        pass: good >= EXACT_REQUIRED,
        detail: format!(
            "{good}/{EXACT_INSTANCES} instances at p=32003 give (3, 6)/(1, 40)/EMPTY with factors [2, 6] \
             (need {EXACT_REQUIRED}); slowest {:.2}s (limit 600s); misses {misses:?}",
            slowest.as_secs_f64()
        ),
    }
}

fn statistical() -> Outcome {
    let mut scaled = Vec::new();
    let mut detail = Vec::new();
    let mut pass = true;
    for p in [101u32, 1009] {
        let inst = sample_instance(p, 1).unwrap();
        let c = strata_census(&inst, SAMPLES, 1);
        let s = c.conic_fraction_at_most(2) * f64::from(p);
        scaled.push(s);
        pass &= c.conic[0] == 0 && c.quadric_at_most(1) == 0;
        detail.push(format!(
            "p={p}: p*frac(rank<=2)={s:.3}, conic rank0={}, quadric rank<=1={}, conic rank1={} (reported only)",
            c.conic[0],
            c.quadric_at_most(1),
            c.conic[1]
        ));
    }
    let ratio = scaled[0] / scaled[1];
    pass &= (1.0 / SCALING_FACTOR..=SCALING_FACTOR).contains(&ratio);
    detail.push(format!(
        "ratio {ratio:.3} (tolerance factor {SCALING_FACTOR})"
    ));
    for seed in 1..=3 {
        let inst = sample_instance(7, seed).unwrap();
        let (bad, seen) = common::oracle_disagreements(&inst);
        pass &= bad == 0 && seen.contains(&ConicRank::Rank(2));
        detail.push(format!("F_7 seed {seed}: {bad} oracle disagreements"));
    }
    Outcome {
        pass,
        detail: detail.join("; "),
    }
}

fn composition() -> Outcome {
    let settings = concat!(env!("CARGO_MANIFEST_DIR"), "/../../gmdeg.toml");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        ["gmdeg", "--quiet", "paper", "--config", settings],
        &mut out,
        &mut err,
    );
    let wiring = cli::wiring();
    let bad = failures(&[&wiring]);
    Outcome {
        pass: code == cli::EXIT_PASS && bad.is_empty(),
        detail: format!(
            "paper exit code {code}; wiring: {} checks, failed {bad:?} (genus bound 5 and the missing complete \
             intersection both turn IMPOSSIBLE into UNDECIDED)",
            wiring.records.len()
        ),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("chow pipeline exactness", chow),
        ("gin enumeration and sextic theorem", gin),
        ("lattice uniqueness", lattice),
        ("configuration and exclusion", config),
        ("contact identities", contact),
        ("rank strata, exact", exact_strata),
        ("rank strata, statistical", statistical),
        ("cross-module composition", composition),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        let mark = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {} [{mark}] {name}: {}", i + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
