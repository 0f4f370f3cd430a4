mod common;

use std::collections::HashSet;

use gmdeg::algebra::groebner::GroebnerConfig;
use gmdeg::algebra::ring::{add_mod, mul_mod};
use gmdeg::fibration::census::{exhaustive_census, projective_points, strata_census, trial_point};
use gmdeg::fibration::discriminant::{discriminant, zero_set_mismatches};
use gmdeg::fibration::geometry::{fibre_data, ranks_at_w, ConicRank};
use gmdeg::fibration::instance::{
    random_matrix, sample_instance, skew_matrix, FibrationInstance, DIM_L2W, DIM_W,
};
use gmdeg::fibration::strata::{
    squarefree_along_lines, strata_ideal_analysis, BudgetStatus, ExactStrata,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{all_vectors, oracle_disagreements};

#[test]
fn conic_rank_matches_brute_force_on_all_of_p3_f7() {
    for seed in 1..=3 {
        let inst = sample_instance(7, seed).unwrap();
        let (bad, seen) = oracle_disagreements(&inst);
        assert_eq!(bad, 0, "seed {seed}");
        // the comparison must exercise the singular conics too
        assert!(seen.contains(&ConicRank::Rank(2)), "seed {seed}");
    }
}

#[test]
fn linear_form_is_the_skew_form_against_v() {
    let inst = sample_instance(101, 4).unwrap();
    let p = inst.p;
    let skew = skew_matrix(&inst.h, p);
    for i in 0..50u64 {
        let y = trial_point(9, i, p);
        let w = inst.point_of_v(&y);
        let k = w.iter().position(|&x| x != 0).unwrap();
        let (_, ell) = fibre_data(&inst, &w);
        let basis = (0..DIM_W).filter(|&j| j != k);
        for (l, j) in ell.iter().zip(basis) {
            // h(w ∧ e_j) = Σ_a w_a H[a][j]
            let expected = (0..DIM_W).fold(0, |s, a| add_mod(s, mul_mod(w[a], skew[a][j], p), p));
            assert_eq!(*l, expected);
        }
    }
    // ℓ vanishes identically exactly at the vertex
    assert_eq!(
        ranks_at_w(&inst, &inst.vertex).conic,
        ConicRank::DegenerateFiber
    );
    assert!(fibre_data(&inst, &inst.vertex).1.iter().all(|&x| x == 0));
}

#[test]
fn degenerate_fibres_only_at_the_vertex() {
    for seed in 1..=3 {
        let inst = sample_instance(7, seed).unwrap();
        assert_eq!(exhaustive_census(&inst).degenerate, 0, "vertex is off P(V)");
        let all_w = all_vectors(7, DIM_W);
        let degenerate: Vec<_> = all_w
            .iter()
            .filter(|w| w.iter().any(|&x| x != 0))
            .filter(|w| ranks_at_w(&inst, w).conic == ConicRank::DegenerateFiber)
            .collect();
        // the nonzero multiples of the vertex
        assert_eq!(degenerate.len(), 6, "seed {seed}");
        for w in degenerate {
            let mut m = vec![w.clone(), inst.vertex.clone()];
            assert_eq!(gmdeg::algebra::matrix::rank_mod_p(&mut m, 7), 1);
        }
    }
}

#[test]
fn rank_one_quadric_gives_rank_at_most_one_fibres() {
    let p = 101;
    let base = sample_instance(p, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let u = random_matrix(&mut rng, 1, DIM_L2W, p).remove(0);
    let q: Vec<Vec<u32>> = (0..DIM_L2W)
        .map(|i| (0..DIM_L2W).map(|j| mul_mod(u[i], u[j], p)).collect())
        .collect();
    let inst = FibrationInstance::from_parts(p, 2, q, base.h.clone(), base.v.clone()).unwrap();
    let c = strata_census(&inst, 20_000, 5);
    assert_eq!(c.quadric_at_most(1), c.trials);
    assert_eq!(c.conic_at_most(1), c.trials);
    assert!(c.quadric[1] > c.trials / 2);
}

#[test]
fn instances_and_sample_streams_do_not_collide() {
    let mut instances = HashSet::new();
    let mut first_points = HashSet::new();
    for seed in 0..100 {
        let inst = sample_instance(32003, seed).unwrap();
        assert!(instances.insert((inst.q, inst.h, inst.v)), "seed {seed}");
        let stream: Vec<[u32; 4]> = (0..4).map(|i| trial_point(seed, i, 32003)).collect();
        assert!(first_points.insert(stream), "seed {seed}");
    }
}

#[test]
fn discriminant_is_squarefree_along_random_lines() {
    for seed in [1, 2, 3] {
        let inst = sample_instance(32003, seed).unwrap();
        let disc = discriminant(&inst).unwrap();
        assert_eq!(disc.summary().degree, 6);
        assert_eq!(disc.factor_degrees, vec![2, 6]);
        let good = squarefree_along_lines(&disc.poly, 50, seed).unwrap();
        assert_eq!(good, 50, "seed {seed}");
    }
}

#[test]
fn discriminant_zero_set_is_the_singular_conics_over_f13() {
    let mut checked = 0;
    for seed in 1..=6 {
        let inst = sample_instance(13, seed).unwrap();
        // over a tiny field the chart coordinate can divide the sextic too
        let Ok(disc) = discriminant(&inst) else {
            continue;
        };
        let pts = projective_points(13);
        let bad = zero_set_mismatches(&inst, &disc, &pts).unwrap();
        assert!(bad.is_empty(), "seed {seed}: {bad:?}");
        checked += 1;
    }
    assert!(checked >= 3);
}

fn signature(s: &ExactStrata) -> [Option<serde_json::Value>; 3] {
    let f = |r: &gmdeg::fibration::strata::StratumResult| {
        assert_eq!(r.budget_status, BudgetStatus::Ok);
        Some(serde_json::to_value(r).unwrap()["dim_degree"].clone())
    };
    [f(&s.rank_le_3), f(&s.rank_le_2), f(&s.rank_le_1)]
}

#[test]
fn strata_do_not_depend_on_chart_or_coordinates() {
    let cfg = GroebnerConfig::default();
    let inst = sample_instance(32003, 11).unwrap();
    let reference = strata_ideal_analysis(&inst, 0, &cfg).unwrap();
    assert!(reference.is_generic());
    for chart in 1..DIM_W {
        let s = strata_ideal_analysis(&inst, chart, &cfg).unwrap();
        assert_eq!(signature(&s), signature(&reference), "chart {chart}");
        assert_eq!(s.factorization.factor_degrees, vec![2, 6]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut changes = 0;
    while changes < 3 {
        let a = random_matrix(&mut rng, DIM_W, DIM_W, inst.p);
        let Ok(moved) = inst.transformed(&a) else {
            continue;
        };
        changes += 1;
        assert_ne!(moved.q, inst.q);
        let s = strata_ideal_analysis(&moved, 0, &cfg).unwrap();
        assert_eq!(signature(&s), signature(&reference), "change {changes}");
    }
}

#[test]
fn small_prime_fractions_scale_like_one_over_p() {
    for p in [7u32, 11, 13] {
        for seed in 1..=3 {
            let inst = sample_instance(p, seed).unwrap();
            let c = exhaustive_census(&inst);
            assert_eq!(c.trials as usize, projective_points(p).len());
            let scaled = c.conic_fraction_at_most(2) * f64::from(p);
            assert!(
                (1.0 / 3.0..=3.0).contains(&scaled),
                "p={p} seed={seed}: {scaled}"
            );
            assert_eq!(c.conic[0], 0);
            assert_eq!(c.quadric_at_most(1), 0);
        }
    }
}

#[test]
fn census_is_independent_of_thread_count() {
    let inst = sample_instance(101, 6).unwrap();
    let a = strata_census(&inst, 30_000, 8);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let b = pool.install(|| strata_census(&inst, 30_000, 8));
    assert_eq!(a, b);
}
