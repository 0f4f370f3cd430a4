//! Monte Carlo census of fibre ranks over `P(V)(F_p)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::geometry::{ranks_at_w, ConicRank};
use super::instance::FibrationInstance;

/// Counts of sampled points by conic rank and by fibre-quadric rank.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Census {
    pub p: u32,
    pub seed: u64,
    pub trials: u64,
    /// Conic rank 0, 1, 2, 3.
    pub conic: [u64; 4],
    /// Points with `ℓ_v = 0`.
    pub degenerate: u64,
    /// Fibre-quadric rank 0..=4.
    pub quadric: [u64; 5],
}

/// `-ln(fraction) / ln p` for a stratum observed `count` times, the
/// codimension suggested by `fraction ≈ c / p^codim`.
pub fn codim_estimate(count: u64, trials: u64, p: u32) -> Option<f64> {
    if count == 0 || trials == 0 {
        return None;
    }
    let frac = count as f64 / trials as f64;
    Some(-frac.ln() / (p as f64).ln())
}

impl Census {
    /// Points whose conic has rank at most `r`.
    pub fn conic_at_most(&self, r: usize) -> u64 {
        self.conic[..=r.min(3)].iter().sum()
    }

    pub fn quadric_at_most(&self, r: usize) -> u64 {
        self.quadric[..=r.min(4)].iter().sum()
    }

    pub fn conic_fraction_at_most(&self, r: usize) -> f64 {
        self.conic_at_most(r) as f64 / self.trials as f64
    }

    /// Codimension estimates for the conic strata rank ≤ 0, 1, 2.
    pub fn conic_codim_estimates(&self) -> [Option<f64>; 3] {
        [0, 1, 2].map(|r| codim_estimate(self.conic_at_most(r), self.trials, self.p))
    }

    /// Codimension estimates for the fibre-quadric strata rank ≤ 1, 2, 3.
    pub fn quadric_codim_estimates(&self) -> [Option<f64>; 3] {
        [1, 2, 3].map(|r| codim_estimate(self.quadric_at_most(r), self.trials, self.p))
    }

    fn empty(p: u32, seed: u64) -> Self {
        Census {
            p,
            seed,
            trials: 0,
            conic: [0; 4],
            degenerate: 0,
            quadric: [0; 5],
        }
    }

    fn merge(mut self, o: Census) -> Census {
        self.trials += o.trials;
        self.degenerate += o.degenerate;
        for i in 0..4 {
            self.conic[i] += o.conic[i];
        }
        for i in 0..5 {
            self.quadric[i] += o.quadric[i];
        }
        self
    }
}

/// Uniform point of `P^3(F_p)` for trial `index`: the generator is keyed by
/// `(seed, index)`, so results do not depend on scheduling.
pub fn trial_point(seed: u64, index: u64, p: u32) -> [u32; 4] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    loop {
        let y = [0; 4].map(|_: u32| rng.gen_range(0..p));
        if y.iter().any(|&c| c != 0) {
            return y;
        }
    }
}

/// Samples `trials` uniform points of `P(V)` and tabulates ranks.
pub fn strata_census(inst: &FibrationInstance, trials: u64, seed: u64) -> Census {
    let p = inst.p;
    (0..trials)
        .into_par_iter()
        .fold(
            || Census::empty(p, seed),
            |mut acc, i| {
                let y = trial_point(seed, i, p);
                let w = inst.point_of_v(&y);
                let r = ranks_at_w(inst, &w);
                acc.trials += 1;
                acc.quadric[r.quadric as usize] += 1;
                match r.conic {
                    ConicRank::Rank(c) => acc.conic[c as usize] += 1,
                    ConicRank::DegenerateFiber => acc.degenerate += 1,
                }
                acc
            },
        )
        .reduce(|| Census::empty(p, seed), Census::merge)
}

/// Exhaustive version over all of `P^3(F_p)`; intended for small `p`.
pub fn exhaustive_census(inst: &FibrationInstance) -> Census {
    let p = inst.p;
    projective_points(p)
        .into_par_iter()
        .fold(
            || Census::empty(p, 0),
            |mut acc, y| {
                let r = ranks_at_w(inst, &inst.point_of_v(&y));
                acc.trials += 1;
                acc.quadric[r.quadric as usize] += 1;
                match r.conic {
                    ConicRank::Rank(c) => acc.conic[c as usize] += 1,
                    ConicRank::DegenerateFiber => acc.degenerate += 1,
                }
                acc
            },
        )
        .reduce(|| Census::empty(p, 0), Census::merge)
}

/// All points of `P^3(F_p)`, normalised so the first nonzero coordinate is 1.
pub fn projective_points(p: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for lead in 0..4 {
        let free = 3 - lead;
        let total = (p as u64).pow(free as u32);
        for idx in 0..total {
            let mut y = [0u32; 4];
            y[lead] = 1;
            let mut r = idx;
            for c in y.iter_mut().skip(lead + 1) {
                *c = (r % p as u64) as u32;
                r /= p as u64;
            }
            out.push(y);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::instance::sample_instance;

    #[test]
    fn projective_space_has_the_right_size() {
        assert_eq!(projective_points(7).len(), 1 + 7 + 49 + 343);
    }

    #[test]
    fn census_is_reproducible_and_complete() {
        let inst = sample_instance(101, 4).unwrap();
        let a = strata_census(&inst, 2000, 11);
        let b = strata_census(&inst, 2000, 11);
        assert_eq!(a, b);
        assert_eq!(a.conic.iter().sum::<u64>() + a.degenerate, 2000);
        assert_eq!(a.quadric.iter().sum::<u64>(), 2000);
    }

    #[test]
    fn codim_of_a_hypersurface_fraction() {
        let c = codim_estimate(100, 10_000, 100).unwrap();
        assert!((c - 1.0).abs() < 1e-12);
        assert_eq!(codim_estimate(0, 10, 101), None);
    }
}
