//! Genus arithmetic for classes `½(dH − Σ aᵢEᵢ)` on the minimal resolution of
//! a Kummer quartic, with `H² = 4`, `Eᵢ² = −2` and all other products zero.

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algebra::ring::{rat, Rational};

/// Number of nodes of a Kummer quartic.
pub const NODES: usize = 16;

/// Degree of the contact sextic class `½(6H − ΣaᵢEᵢ)`.
pub const SEXTIC_HYPERPLANE_DEGREE: u32 = 6;

/// Arithmetic genus of the contact sextic before resolving the nodes.
pub const SEXTIC_GENUS_CAP: i64 = 15;

/// Largest node multiplicity allowed for the sextic.
pub const DEFAULT_MULTIPLICITY_CAP: u32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("hyperplane degree must be positive")]
    ZeroDegree,
}

/// The class `½(dH − Σ aᵢEᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorClass {
    d: u32,
    multiplicities: [u32; NODES],
}

impl DivisorClass {
    pub fn new(d: u32, multiplicities: [u32; NODES]) -> Result<DivisorClass, LatticeError> {
        if d == 0 {
            return Err(LatticeError::ZeroDegree);
        }
        Ok(DivisorClass { d, multiplicities })
    }

    /// `d` with the first `ones` multiplicities equal to 1 and the rest 0.
    pub fn with_ones(d: u32, ones: usize) -> Result<DivisorClass, LatticeError> {
        let mut a = [0; NODES];
        a[..ones].fill(1);
        DivisorClass::new(d, a)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn multiplicities(&self) -> &[u32; NODES] {
        &self.multiplicities
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.multiplicities
            .iter()
            .map(|&a| u64::from(a) * u64::from(a))
            .sum()
    }

    /// Self-intersection `(d²H² − Σaᵢ²·2) / 4`.
    pub fn self_intersection(&self) -> Rational {
        let d = i64::from(self.d);
        rat(4 * d * d - 2 * self.sum_of_squares() as i64, 4)
    }

    pub fn genus(&self) -> Rational {
        class_genus(self.d, self.sum_of_squares())
    }
}

/// `p_a = D²/2 + 1 = d²/2 − Σaᵢ²/4 + 1` (the canonical class is trivial).
pub fn class_genus(d: u32, sum_of_squares: u64) -> Rational {
    let d = i64::from(d);
    rat(2 * d * d - sum_of_squares as i64 + 4, 4)
}

fn integral_genus(d: u32, sum_of_squares: u64) -> Option<i64> {
    let g = class_genus(d, sum_of_squares);
    g.is_integer()
        .then(|| g.to_integer().to_i64().expect("small"))
}

/// Values of `Σaᵢ²` that give an integral genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralityFilter {
    pub d: u32,
    /// `Σaᵢ² ≡ residue (mod 4)`.
    pub residue: u32,
    /// Attainable sums over 16 nodes with the allowed multiplicities that
    /// satisfy the congruence.
    pub admissible_sums: Vec<u64>,
}

pub fn integrality_filter(d: u32, allowed: &[u32]) -> IntegralityFilter {
    // 2d² − Σ + 4 ≡ 0 mod 4
    let residue = ((2 * u64::from(d) * u64::from(d)) % 4) as u32;
    let mut reachable = std::collections::BTreeSet::from([0u64]);
    for _ in 0..NODES {
        reachable = reachable
            .iter()
            .flat_map(|s| {
                allowed
                    .iter()
                    .map(move |&a| s + u64::from(a) * u64::from(a))
            })
            .collect();
    }
    let admissible_sums = reachable
        .into_iter()
        .filter(|s| integral_genus(d, *s).is_some())
        .collect();
    IntegralityFilter {
        d,
        residue,
        admissible_sums,
    }
}

/// How many of the 16 nodes carry each multiplicity `0..=cap`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityCounts {
    pub counts: Vec<u32>,
    pub sum_of_squares: u64,
    pub genus: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SexticConstraints {
    pub genus_cap: i64,
    pub multiplicity_cap: u32,
    /// Every node of multiplicity at least 2 lowers the genus of the strict
    /// transform by at least one.
    pub singular_node_drop: bool,
}

impl Default for SexticConstraints {
    fn default() -> Self {
        SexticConstraints {
            genus_cap: SEXTIC_GENUS_CAP,
            multiplicity_cap: DEFAULT_MULTIPLICITY_CAP,
            singular_node_drop: true,
        }
    }
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// All multiplicity distributions for the contact sextic class compatible
/// with the constraints.
pub fn solve_sextic_multiplicities(c: SexticConstraints) -> Vec<MultiplicityCounts> {
    let cap = c.multiplicity_cap as usize;
    compositions(NODES as u32, cap + 1)
        .into_iter()
        .filter_map(|counts| {
            let sum_of_squares: u64 = counts
                .iter()
                .enumerate()
                .map(|(a, &n)| (a * a) as u64 * u64::from(n))
                .sum();
            let genus = integral_genus(SEXTIC_HYPERPLANE_DEGREE, sum_of_squares)?;
            let singular = i64::from(counts.iter().skip(2).sum::<u32>());
            let cap_here = if c.singular_node_drop {
                c.genus_cap - singular
            } else {
                c.genus_cap
            };
            (genus <= c.genus_cap && genus <= cap_here).then_some(MultiplicityCounts {
                counts,
                sum_of_squares,
                genus,
            })
        })
        .collect()
}

/// Number of candidate distributions examined by
/// [`solve_sextic_multiplicities`].
pub fn sextic_candidate_count(multiplicity_cap: u32) -> usize {
    compositions(NODES as u32, multiplicity_cap as usize + 1).len()
}

/// A split `½(3H − Σ_I Eᵢ) + ½(3H − Σ_J Eⱼ)` of the contact sextic class with
/// `I ⊔ J` all nodes, oriented so the first member has odd genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CubicSplitting {
    pub i_size: u32,
    pub genus1: i64,
    pub j_size: u32,
    pub genus2: i64,
}

impl CubicSplitting {
    pub fn as_tuple(&self) -> (u32, i64, u32, i64) {
        (self.i_size, self.genus1, self.j_size, self.genus2)
    }
}

/// Node counts `|I|` for which `½(3H − Σ_I Eᵢ)` has integral genus, with
/// that genus.
pub fn cubic_member_genera() -> Vec<(u32, i64)> {
    (0..=NODES as u32)
        .filter_map(|n| integral_genus(3, u64::from(n)).map(|g| (n, g)))
        .collect()
}

/// Splittings whose members both have genus at most `sextic_genus_bound`,
/// ordered by their larger genus.
pub fn enumerate_cubic_splittings(sextic_genus_bound: i64) -> Vec<CubicSplitting> {
    let members = cubic_member_genera();
    let mut out = Vec::new();
    for &(i, g1) in &members {
        for &(j, g2) in &members {
            if i + j != NODES as u32
                || g1.is_even()
                || g1 > sextic_genus_bound
                || g2 > sextic_genus_bound
            {
                continue;
            }
            out.push(CubicSplitting {
                i_size: i,
                genus1: g1,
                j_size: j,
                genus2: g2,
            });
        }
    }
    out.sort_by_key(|s| (s.genus1.max(s.genus2), std::cmp::Reverse(s.i_size)));
    out
}
