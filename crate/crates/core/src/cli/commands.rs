use serde_json::{json, Value};

use super::{CliError, PaperSettings};
use crate::algebra::groebner::GroebnerConfig;
use crate::algebra::ring::PrimeField;
use crate::chow::contact_curve_invariants;
use crate::config::{
    exclusion_report, exclusion_report_with, verify, verify_configuration, ExclusionInputs,
    ExclusionVerdict, GridConfig, IncidenceRule, LINE_COUNTS,
};
use crate::fibration::census::{strata_census, trial_point};
use crate::fibration::contact::contact_identities;
use crate::fibration::discriminant::{discriminant, zero_set_mismatches};
use crate::fibration::instance::{sample_instance, FibrationInstance};
use crate::fibration::strata::{strata_ideal_analysis, BudgetStatus};
use crate::gin::{enumerate_arrangements, sextic_theorem_report, Diagram, GinError, Verdict};
use crate::lattice::{
    enumerate_cubic_splittings, sextic_candidate_count, solve_sextic_multiplicities,
    SexticConstraints, NODES,
};
use crate::report::{Provenance, Report};

/// A quintic of genus 2 on a quadric: circles with `λ = (4, 1)` and one
/// numeric entry.
const QUINTIC_EXAMPLE: &str = "o\no o\n* 1 o\n* * * o\n* * * * *\n";

pub fn chow_verify() -> Report {
    let mut r = Report::new("chow verify");
    match contact_curve_invariants() {
        Ok(c) => {
            for s in &c.steps {
                r.record(
                    &s.label,
                    &s.computed,
                    &s.expected,
                    Provenance::Reference,
                    s.matches,
                );
            }
            r.check("twist a", c.twist, 5, Provenance::Reference);
            r.check("deg C", c.degree, 12, Provenance::Reference);
            r.check("p_a(C)", c.genus, 15, Provenance::Reference);
            r.data("contact_curve", &c);
        }
        Err(e) => r.record(
            "pipeline",
            e.to_string(),
            "no error",
            Provenance::Plumbing,
            false,
        ),
    }
    r
}

fn parse_diagram(text: &str) -> Result<Diagram, CliError> {
    text.parse()
        .map_err(|e: GinError| CliError::Input(e.to_string()))
}

fn violation_json(d: &Diagram) -> Value {
    match d.validate() {
        Ok(()) => Value::Null,
        Err(v) => json!({ "message": v.to_string(), "cells": v.cells() }),
    }
}

pub fn gin_validate(text: &str) -> Result<Report, CliError> {
    let d = parse_diagram(text)?;
    let mut r = Report::new("gin validate");
    let computed = d
        .validate()
        .map_or_else(|v| v.to_string(), |()| "valid".to_string());
    r.check("diagram conditions", computed, "valid", Provenance::Trivial);
    r.data("support", d.support());
    r.data("violation", violation_json(&d));
    Ok(r)
}

fn diagram_invariants(d: &Diagram) -> Result<Value, GinError> {
    let h = d.hyperplane_section();
    Ok(json!({
        "degree": d.degree()?,
        "genus": d.genus()?,
        "lambda": d.lambda_sequence()?,
        "numeric_sum": d.numeric_sum(),
        "min_hypersurface_degrees": d.min_hypersurface_degrees()?,
        "min_hypersurface_degree": d.min_hypersurface_degree()?,
        "hyperplane_section": h.to_text(),
        "hyperplane_section_genus": h.genus()?,
    }))
}

pub fn gin_invariants(text: &str) -> Result<Report, CliError> {
    let d = parse_diagram(text)?;
    let mut r = Report::new("gin invariants");
    match diagram_invariants(&d) {
        Ok(inv) => {
            let lambda_sum: u64 = inv["lambda"]
                .as_array()
                .expect("array")
                .iter()
                .map(|x| x.as_u64().unwrap_or(0))
                .sum();
            r.check(
                "circle counts sum to the degree",
                lambda_sum,
                &inv["degree"],
                Provenance::Trivial,
            );
            let (g, gh) = (
                inv["genus"].as_i64().expect("int"),
                inv["hyperplane_section_genus"].as_i64().expect("int"),
            );
            r.record(
                "section genus bounds the genus",
                gh,
                format!(">= {g}"),
                Provenance::Trivial,
                gh >= g,
            );
            r.data("invariants", inv);
        }
        Err(e) => {
            r.record(
                "diagram conditions",
                e.to_string(),
                "valid",
                Provenance::Trivial,
                false,
            );
            r.data("violation", violation_json(&d));
        }
    }
    Ok(r)
}

/// Partitions of `n` into distinct parts, counted by a subset-sum table.
fn distinct_partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for s in (part..=n).rev() {
            ways[s] += ways[s - part];
        }
    }
    ways[n]
}

pub fn gin_enumerate(degree: u32) -> Result<Report, CliError> {
    let list = enumerate_arrangements(degree).map_err(|e| CliError::Input(e.to_string()))?;
    let mut r = Report::new("gin enumerate");
    r.input("degree", degree);
    r.check(
        "arrangement count",
        list.len() as u64,
        distinct_partition_count(degree),
        Provenance::Derived,
    );
    let all_valid = list.iter().all(|a| a.to_diagram().validate().is_ok());
    r.check(
        "arrangement diagrams are valid",
        all_valid,
        true,
        Provenance::Trivial,
    );
    r.data("arrangements", &list);
    Ok(r)
}

pub fn gin_theorem_sextic() -> Report {
    let mut r = Report::new("gin theorem-sextic");
    let report = sextic_theorem_report();
    let expected = [
        (vec![6], Verdict::SecantContradiction { length: 6 }),
        (vec![5, 1], Verdict::SecantContradiction { length: 5 }),
        (vec![4, 2], Verdict::GenusBound { max_genus: 4 }),
        (vec![3, 2, 1], Verdict::GenusBound { max_genus: 3 }),
    ];
    let computed: Vec<Vec<u32>> = report
        .arrangements
        .iter()
        .map(|a| a.arrangement.parts().to_vec())
        .collect();
    let wanted: Vec<Vec<u32>> = expected.iter().map(|(p, _)| p.clone()).collect();
    r.check(
        "degree 6 arrangements",
        computed,
        wanted,
        Provenance::Reference,
    );
    for a in &report.arrangements {
        if let Some((_, v)) = expected
            .iter()
            .find(|(p, _)| p.as_slice() == a.arrangement.parts())
        {
            r.check(
                &format!("verdict {}", a.arrangement),
                a.verdict,
                v,
                Provenance::Reference,
            );
        }
    }
    r.check(
        "max genus on an irreducible cubic",
        report.max_genus_on_cubic,
        4,
        Provenance::Reference,
    );
    r.check(
        "complete intersection type",
        report.complete_intersection,
        Some((2, 3)),
        Provenance::Reference,
    );

    let example: Diagram = QUINTIC_EXAMPLE.parse().expect("valid text");
    match diagram_invariants(&example) {
        Ok(inv) => {
            let got = json!([
                inv["degree"],
                inv["genus"],
                inv["lambda"],
                inv["min_hypersurface_degree"]
            ]);
            r.check(
                "quintic example (degree, genus, lambda, quadric)",
                got,
                json!([5, 2, [4, 1], 2]),
                Provenance::Reference,
            );
            r.data("quintic_example", inv);
        }
        Err(e) => r.record(
            "quintic example",
            e.to_string(),
            "valid",
            Provenance::Reference,
            false,
        ),
    }
    r.data("sextic", &report);
    r
}

pub fn lattice_sextic() -> Report {
    let mut r = Report::new("lattice sextic");
    let solutions = solve_sextic_multiplicities(SexticConstraints::default());
    let counts: Vec<&Vec<u32>> = solutions.iter().map(|s| &s.counts).collect();
    r.check(
        "multiplicity counts (n0, n1, n2)",
        &counts,
        [[0, 16, 0]],
        Provenance::Reference,
    );
    if let [s] = solutions.as_slice() {
        let chow_genus = contact_curve_invariants().map(|c| c.genus).ok();
        r.check(
            "genus agrees with Riemann-Roch",
            s.genus,
            chow_genus,
            Provenance::Derived,
        );
    }
    let relaxed = solve_sextic_multiplicities(SexticConstraints {
        singular_node_drop: false,
        ..Default::default()
    });
    r.record(
        "dropping the singular-node constraint enlarges the solutions",
        relaxed.len(),
        format!("> {}", solutions.len()),
        Provenance::Trivial,
        relaxed.len() > solutions.len(),
    );
    r.data(
        "candidates",
        sextic_candidate_count(SexticConstraints::default().multiplicity_cap),
    );
    r.data("solutions", &solutions);
    r.data("solutions_without_singular_node_drop", &relaxed);
    r
}

pub fn lattice_splittings(genus_bound: i64) -> Report {
    let mut r = Report::new("lattice splittings");
    r.input("genus_bound", genus_bound);
    let list = enumerate_cubic_splittings(genus_bound);
    let tuples: Vec<(u32, i64, u32, i64)> = list.iter().map(|s| s.as_tuple()).collect();
    let expected: Option<Vec<(u32, i64, u32, i64)>> = match genus_bound {
        4 => Some(vec![(10, 3, 6, 4)]),
        5 => Some(vec![(10, 3, 6, 4), (2, 5, 14, 2)]),
        _ => None,
    };
    if let Some(e) = expected {
        r.check(
            "splittings (|I|, genus, |J|, genus)",
            &tuples,
            e,
            Provenance::Reference,
        );
    }
    let covers = list.iter().all(|s| (s.i_size + s.j_size) as usize == NODES);
    r.check(
        "each splitting uses every node once",
        covers,
        true,
        Provenance::Trivial,
    );
    r.data("splittings", &list);
    r
}

pub fn config_verify() -> Report {
    let mut r = Report::new("config verify");
    let report = verify_configuration();
    let c = &report.census;
    r.check(
        "nodes per trope",
        &c.nodes_per_trope,
        json!({"6": 16}),
        Provenance::Reference,
    );
    r.check(
        "tropes per node",
        &c.tropes_per_node,
        json!({"6": 16}),
        Provenance::Reference,
    );
    r.check(
        "common nodes per trope pair",
        &c.common_nodes_per_trope_pair,
        json!({"2": 120}),
        Provenance::Reference,
    );
    r.check(
        "tropes per node pair",
        &c.tropes_per_node_pair,
        json!({"2": 120}),
        Provenance::Reference,
    );
    let transposed = verify(&GridConfig::default().transposed());
    r.check(
        "census invariant under transposition",
        &transposed.census,
        c,
        Provenance::Trivial,
    );
    let control = verify(&GridConfig::with_rule(IncidenceRule::SameRowOnly));
    r.check(
        "same-row rule fails the census",
        control.ok(),
        false,
        Provenance::Trivial,
    );
    r.data("census", &report);
    r.data("negative_control", &control);
    r
}

pub fn config_exclude(lines: Option<u32>) -> Result<Report, CliError> {
    let mut r = Report::new("config exclude");
    let cases: Vec<u32> = match lines {
        Some(l) => vec![l],
        None => LINE_COUNTS.to_vec(),
    };
    r.input("lines", &cases);
    let mut traces = Vec::new();
    for l in cases {
        let t = exclusion_report(l).map_err(|e| CliError::Input(e.to_string()))?;
        r.check(
            &format!("verdict for {l} lines"),
            t.verdict,
            ExclusionVerdict::Impossible,
            Provenance::Reference,
        );
        if l == 9 {
            let find = |k: &str| t.steps.iter().find_map(|s| s.numbers.get(k));
            r.check(
                "other tropes",
                find("other_tropes"),
                Some(15),
                Provenance::Reference,
            );
            r.check(
                "lines on two tropes (at least)",
                find("double_lines"),
                Some(6),
                Provenance::Reference,
            );
            r.check(
                "nodes on the cubic (at least)",
                find("nodes_on_s"),
                Some(7),
                Provenance::Reference,
            );
        }
        traces.push(t);
    }
    r.data("traces", &traces);
    Ok(r)
}

fn instance(p: u32, seed: u64) -> Result<Result<FibrationInstance, String>, CliError> {
    PrimeField::new(p).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(sample_instance(p, seed).map_err(|e| e.to_string()))
}

fn instance_json(inst: &FibrationInstance) -> Value {
    json!({ "p": inst.p, "seed": inst.seed, "retries": inst.retries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrataOptions {
    pub prime: u32,
    pub seed: u64,
    pub trials: u64,
    pub exact: bool,
}

pub fn fibration_strata(o: &StrataOptions) -> Result<Report, CliError> {
    let mut r = Report::new("fibration strata");
    r.input("prime", o.prime);
    r.input("seed", o.seed);
    r.input("trials", o.trials);
    r.input("exact", o.exact);
    if o.trials == 0 {
        return Err(CliError::Input("--trials must be positive".into()));
    }
    let inst = match instance(o.prime, o.seed)? {
        Ok(i) => i,
        Err(e) => {
            r.record(
                "instance",
                e,
                "a generic instance",
                Provenance::Plumbing,
                false,
            );
            return Ok(r);
        }
    };
    r.data("instance", instance_json(&inst));

    let c = strata_census(&inst, o.trials, o.seed);
    r.check("conic rank 0 count", c.conic[0], 0, Provenance::Reference);
    r.check(
        "fibre quadric rank <= 1 count",
        c.quadric_at_most(1),
        0,
        Provenance::Reference,
    );
    // the excluded point of the fibration, hit at most once by a sample
    r.record(
        "degenerate fibres",
        c.degenerate,
        "<= 1",
        Provenance::Reference,
        c.degenerate <= 1,
    );
    let p = f64::from(o.prime);
    // only meaningful when the stratum is expected to be hit often
    if o.trials as f64 / p >= 10.0 {
        let frac = c.conic_fraction_at_most(2);
        let (lo, hi) = (1.0 / (3.0 * p), 30.0 / p);
        r.record(
            "conic rank <= 2 fraction in the codimension-1 band",
            frac,
            json!([lo, hi]),
            Provenance::Derived,
            (lo..=hi).contains(&frac),
        );
    }
    r.data(
        "census",
        json!({
            "rank0": c.conic[0], "rank1": c.conic[1], "rank2": c.conic[2], "rank3": c.conic[3],
            "degenerate": c.degenerate, "trials": c.trials,
        }),
    );
    r.data("quadric_census", c.quadric);
    let [e0, e1, e2] = c.conic_codim_estimates();
    let [q1, q2, q3] = c.quadric_codim_estimates();
    r.data(
        "codim_estimates",
        json!({
            "conic": { "rank_le_0": e0, "rank_le_1": e1, "rank_le_2": e2 },
            "quadric": { "rank_le_1": q1, "rank_le_2": q2, "rank_le_3": q3 },
        }),
    );

    if o.exact {
        match strata_ideal_analysis(&inst, 0, &GroebnerConfig::from_env()) {
            Ok(s) => {
                let dd = |x| serde_json::to_value(x).expect("serializes")["dim_degree"].clone();
                r.check(
                    "rank <= 3 stratum",
                    dd(&s.rank_le_3),
                    json!({"dim": 3, "degree": 6}),
                    Provenance::Reference,
                );
                r.check(
                    "rank <= 2 stratum",
                    dd(&s.rank_le_2),
                    json!({"dim": 1, "degree": 40}),
                    Provenance::Reference,
                );
                r.check(
                    "rank <= 1 stratum",
                    dd(&s.rank_le_1),
                    "EMPTY",
                    Provenance::Reference,
                );
                r.check(
                    "determinant factor degrees",
                    &s.factorization.factor_degrees,
                    [2, 6],
                    Provenance::Derived,
                );
                let budget_ok = [&s.rank_le_3, &s.rank_le_2, &s.rank_le_1]
                    .iter()
                    .all(|x| x.budget_status == BudgetStatus::Ok);
                r.check("groebner budget", budget_ok, true, Provenance::Plumbing);
                r.data(
                    "exact",
                    json!({ "rank_le_3": s.rank_le_3, "rank_le_2": s.rank_le_2, "rank_le_1": s.rank_le_1 }),
                );
                r.data("factors", &s.factorization.factor_degrees);
                r.data("factorization", &s.factorization);
            }
            Err(e) => r.record(
                "exact strata",
                e.to_string(),
                "no error",
                Provenance::Plumbing,
                false,
            ),
        }
    }
    Ok(r)
}

pub fn fibration_discriminant(prime: u32, seed: u64, points: u64) -> Result<Report, CliError> {
    let mut r = Report::new("fibration discriminant");
    r.input("prime", prime);
    r.input("seed", seed);
    r.input("points", points);
    let inst = match instance(prime, seed)? {
        Ok(i) => i,
        Err(e) => {
            r.record(
                "instance",
                e,
                "a generic instance",
                Provenance::Plumbing,
                false,
            );
            return Ok(r);
        }
    };
    r.data("instance", instance_json(&inst));
    let disc = match discriminant(&inst) {
        Ok(d) => d,
        Err(e) => {
            r.record(
                "discriminant",
                e.to_string(),
                "a sextic",
                Provenance::Reference,
                false,
            );
            return Ok(r);
        }
    };
    let summary = disc.summary();
    r.check("degree", summary.degree, 6, Provenance::Reference);
    r.check(
        "bordered determinant factor degrees",
        &summary.factor_degrees,
        [2, 6],
        Provenance::Derived,
    );
    let sample: Vec<[u32; 4]> = (0..points).map(|i| trial_point(seed, i, prime)).collect();
    match zero_set_mismatches(&inst, &disc, &sample) {
        Ok(bad) => {
            r.check(
                "zero set equals conic rank <= 2 on sampled points",
                bad.len(),
                0,
                Provenance::Derived,
            );
            r.data("mismatches", &bad);
        }
        Err(e) => r.record(
            "zero set comparison",
            e.to_string(),
            "no error",
            Provenance::Plumbing,
            false,
        ),
    }
    r.data("discriminant", &summary);
    Ok(r)
}

pub fn fibration_contact() -> Report {
    let mut r = Report::new("fibration contact");
    match contact_identities() {
        Ok(c) => {
            for check in &c.checks {
                r.record(
                    &check.name,
                    &check.computed,
                    &check.expected,
                    Provenance::Reference,
                    check.holds,
                );
            }
            r.data("identities", &c);
        }
        Err(e) => r.record(
            "identities",
            e.to_string(),
            "no error",
            Provenance::Plumbing,
            false,
        ),
    }
    r
}

/// Checks that the exclusion depends on each upstream input: the genus
/// bound from the diagram analysis, and the complete intersection flag.
pub fn wiring() -> Report {
    let mut r = Report::new("wiring");
    let derived = ExclusionInputs::from_sextic_report();
    r.check(
        "genus bound from the diagram analysis",
        derived.sextic_genus_bound,
        4,
        Provenance::Reference,
    );
    let split: Vec<_> = enumerate_cubic_splittings(derived.sextic_genus_bound)
        .iter()
        .map(|s| s.as_tuple())
        .collect();
    r.check(
        "splitting under that bound",
        split,
        [(10, 3, 6, 4)],
        Provenance::Reference,
    );
    let verdicts = |inputs| -> Vec<ExclusionVerdict> {
        LINE_COUNTS
            .iter()
            .map(|&l| {
                exclusion_report_with(l, inputs)
                    .expect("admissible line count")
                    .verdict
            })
            .collect()
    };
    let impossible = vec![ExclusionVerdict::Impossible; LINE_COUNTS.len()];
    let undecided = vec![ExclusionVerdict::Undecided; LINE_COUNTS.len()];
    r.check(
        "exclusion with derived inputs",
        verdicts(derived),
        &impossible,
        Provenance::Reference,
    );
    let loose = ExclusionInputs {
        sextic_genus_bound: 5,
        ..derived
    };
    r.check(
        "splittings under genus bound 5",
        enumerate_cubic_splittings(5).len(),
        2,
        Provenance::Reference,
    );
    r.check(
        "exclusion with genus bound 5",
        verdicts(loose),
        &undecided,
        Provenance::Derived,
    );
    let no_ci = ExclusionInputs {
        extremal_is_complete_intersection: false,
        ..derived
    };
    r.check(
        "exclusion without the complete intersection",
        verdicts(no_ci),
        &undecided,
        Provenance::Derived,
    );
    r
}

pub fn paper(settings: &PaperSettings) -> Result<Report, CliError> {
    let mut r = Report::new("paper");
    r.input("prime", settings.prime);
    r.input("seed", settings.seed);
    r.input("trials", settings.trials);
    r.input("exact", settings.exact);
    let strata = StrataOptions {
        prime: settings.prime,
        seed: settings.seed,
        trials: settings.trials,
        exact: settings.exact,
    };
    // independent checks run concurrently; records keep declaration order
    let ((chow, gin), (rest, fib)) = rayon::join(
        || (chow_verify(), gin_theorem_sextic()),
        || {
            rayon::join(
                || {
                    (
                        lattice_sextic(),
                        lattice_splittings(4),
                        config_verify(),
                        config_exclude(None),
                        fibration_contact(),
                        wiring(),
                    )
                },
                || fibration_strata(&strata),
            )
        },
    );
    let (lattice, splittings, config, exclude, contact, wires) = rest;
    r.absorb("chow verify", chow);
    r.absorb("gin theorem-sextic", gin);
    r.absorb("lattice sextic", lattice);
    r.absorb("lattice splittings", splittings);
    r.absorb("config verify", config);
    r.absorb("config exclude", exclude?);
    r.absorb("fibration contact", contact);
    r.absorb("fibration strata", fib?);
    r.absorb("wiring", wires);
    Ok(r)
}
