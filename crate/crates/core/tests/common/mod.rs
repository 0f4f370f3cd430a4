//! Brute-force oracles shared by the integration tests.

use std::collections::HashSet;

use gmdeg::algebra::ring::{add_mod, mul_mod};
use gmdeg::fibration::census::projective_points;
use gmdeg::fibration::geometry::{conic_rank_at, fibre_ranks, ConicRank};
use gmdeg::fibration::instance::{wedge, FibrationInstance, DIM_W};

pub fn all_vectors(p: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn dot(a: &[u32], b: &[u32], p: u32) -> u32 {
    a.iter()
        .zip(b)
        .fold(0, |s, (&x, &y)| add_mod(s, mul_mod(x, y, p), p))
}

fn log_p(mut n: usize, p: u32) -> u8 {
    let mut k = 0;
    while n > 1 {
        assert_eq!(n % p as usize, 0);
        n /= p as usize;
        k += 1;
    }
    k
}

/// Size of the radical of `q` restricted to the subspace `space` (given as
/// the full list of its vectors).
fn radical_size(q: &[Vec<u32>], space: &[Vec<u32>], p: u32) -> usize {
    space
        .iter()
        .filter(|x| {
            let qx: Vec<u32> = q.iter().map(|row| dot(row, x, p)).collect();
            space.iter().all(|y| dot(y, &qx, p) == 0)
        })
        .count()
}

/// Ranks by brute force: enumerate the plane `w ∧ W` in `Λ²W`, cut it with
/// `h`, and count the radical of `q` on each piece.
pub fn brute_force_ranks(
    inst: &FibrationInstance,
    w: &[u32],
    all_u: &[Vec<u32>],
) -> (u8, ConicRank) {
    let p = inst.p;
    let plane: HashSet<Vec<u32>> = all_u.iter().map(|u| wedge(w, u, p).to_vec()).collect();
    let plane: Vec<Vec<u32>> = plane.into_iter().collect();
    assert_eq!(plane.len(), (p as usize).pow(4));
    let quadric = 4 - log_p(radical_size(&inst.q, &plane, p), p);
    let kernel: Vec<Vec<u32>> = plane
        .into_iter()
        .filter(|x| dot(&inst.h, x, p) == 0)
        .collect();
    if kernel.len() == (p as usize).pow(4) {
        return (quadric, ConicRank::DegenerateFiber);
    }
    assert_eq!(kernel.len(), (p as usize).pow(3));
    let conic = 3 - log_p(radical_size(&inst.q, &kernel, p), p);
    (quadric, ConicRank::Rank(conic))
}

/// Compares `conic_rank_at` and the fibre quadric rank with the brute-force
/// ranks on every point of `P³(F_p)`. Returns the number of disagreements
/// and the set of conic ranks seen.
pub fn oracle_disagreements(inst: &FibrationInstance) -> (usize, HashSet<ConicRank>) {
    let all_u = all_vectors(inst.p, DIM_W);
    let mut bad = 0;
    let mut seen = HashSet::new();
    for y in projective_points(inst.p) {
        let w = inst.point_of_v(&y);
        let (quadric, conic) = brute_force_ranks(inst, &w, &all_u);
        if conic_rank_at(inst, &y).unwrap() != conic
            || fibre_ranks(inst, &y).unwrap().quadric != quadric
        {
            bad += 1;
        }
        seen.insert(conic);
    }
    (bad, seen)
}
