//! Ideal-theoretic rank strata of the quadric fibration over `P(W) = P^4`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::geometry::{fibration_matrix, full_fibration_matrix};
use super::instance::{FibrationInstance, DIM_W};
use super::FibrationError;
use crate::algebra::groebner::{
    groebner_with_stats, saturate_last_variable, GroebnerConfig, IdealBasis,
};
use crate::algebra::hilbert::{hilbert_dim_degree, DimDegree};
use crate::algebra::poly::{Monomial, MultiPoly};
use crate::algebra::ring::PrimeField;
use crate::algebra::univariate::squarefree_part;
use crate::algebra::AlgebraError;

type Poly = MultiPoly<PrimeField>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetStatus {
    Ok,
    Exhausted,
}

/// Result for one rank stratum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StratumResult {
    /// `None` when the Gröbner budget ran out.
    #[serde(serialize_with = "ser_dim_degree")]
    pub dim_degree: Option<DimDegree>,
    pub budget_status: BudgetStatus,
    pub pairs: usize,
    /// Hilbert data before removing the chart locus, when that changed it.
    #[serde(serialize_with = "ser_dim_degree")]
    pub before_saturation: Option<DimDegree>,
    /// Whether saturating by the chart coordinate changed the ideal.
    pub chart_component: bool,
}

fn ser_dim_degree<S: serde::Serializer>(d: &Option<DimDegree>, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    match d {
        None => s.serialize_none(),
        Some(DimDegree::Empty) => s.serialize_str("EMPTY"),
        Some(DimDegree::Variety { dim, degree }) => {
            let mut st = s.serialize_struct("DimDegree", 2)?;
            st.serialize_field("dim", dim)?;
            st.serialize_field("degree", degree)?;
            st.end()
        }
    }
}

/// How the degree-8 chart determinant splits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DetFactorization {
    pub chart: usize,
    /// Exponent of the chart coordinate dividing the determinant.
    pub chart_power: u32,
    /// Degrees of the factors found: the chart power, then the residual.
    pub factor_degrees: Vec<u32>,
    /// Random lines on which the residual stayed squarefree of full degree.
    pub squarefree_lines: usize,
    pub lines_tested: usize,
}

/// Exact strata of one instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExactStrata {
    pub rank_le_3: StratumResult,
    pub rank_le_2: StratumResult,
    pub rank_le_1: StratumResult,
    pub factorization: DetFactorization,
}

impl ExactStrata {
    /// Whether the three strata are (3, 6), (1, 40) and empty.
    pub fn is_generic(&self) -> bool {
        self.rank_le_3.dim_degree == Some(DimDegree::Variety { dim: 3, degree: 6 })
            && self.rank_le_2.dim_degree == Some(DimDegree::Variety { dim: 1, degree: 40 })
            && self.rank_le_1.dim_degree == Some(DimDegree::Empty)
    }
}

/// Permutation exchanging `chart` with the last variable.
fn chart_last(chart: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..DIM_W).collect();
    perm.swap(chart, DIM_W - 1);
    perm
}

/// Highest power of `x_var` dividing `f`, and the cofactor.
pub fn strip_variable(f: &Poly, var: usize) -> (u32, Poly) {
    let k = f.terms().map(|(m, _)| m.exps()[var]).min().unwrap_or(0);
    if k == 0 {
        return (0, f.clone());
    }
    let mut out = Poly::zero(*f.ring(), f.nvars());
    for (m, c) in f.terms() {
        let mut e = m.exps().to_vec();
        e[var] -= k;
        out.add_term(Monomial::new(e), *c);
    }
    (k, out)
}

/// Restricts a form to `lines` random affine lines `a + t b` and counts the
/// lines on which the restriction is squarefree of full degree.
pub fn squarefree_along_lines(f: &Poly, lines: usize, seed: u64) -> Result<usize, FibrationError> {
    let field = *f.ring();
    let p = field.modulus();
    let n = f.nvars();
    let deg = f.total_degree().unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut good = 0;
    for _ in 0..lines {
        let images: Vec<Poly> = (0..n)
            .map(|_| {
                let a = field.elem(rng.gen_range(0..p) as i64);
                let b = field.elem(rng.gen_range(0..p) as i64);
                MultiPoly::from_terms(field, 1, [(vec![0], a), (vec![1], b)])
            })
            .collect();
        let g = f.substitute(&images)?;
        if g.total_degree() != Some(deg) {
            continue;
        }
        if squarefree_part(&g)?.total_degree() == Some(deg) {
            good += 1;
        }
    }
    Ok(good)
}

fn stratum(
    field: PrimeField,
    gens: Vec<Poly>,
    config: &GroebnerConfig,
    saturate: bool,
) -> Result<StratumResult, FibrationError> {
    let ideal = IdealBasis::new(field, DIM_W, gens)?;
    let exhausted = |pairs| StratumResult {
        dim_degree: None,
        budget_status: BudgetStatus::Exhausted,
        pairs,
        before_saturation: None,
        chart_component: false,
    };
    let (gb, stats) = match groebner_with_stats(&ideal, config) {
        Ok(r) => r,
        Err(AlgebraError::GroebnerBudgetExhausted { pairs, .. }) => return Ok(exhausted(pairs)),
        Err(e) => return Err(e.into()),
    };
    let before = hilbert_dim_degree(&gb)?;
    if !saturate {
        return Ok(StratumResult {
            dim_degree: Some(before),
            budget_status: BudgetStatus::Ok,
            pairs: stats.pairs_reduced,
            before_saturation: None,
            chart_component: false,
        });
    }
    let (sat, changed) = match saturate_last_variable(&gb, config) {
        Ok(r) => r,
        Err(AlgebraError::GroebnerBudgetExhausted { pairs, .. }) => {
            return Ok(exhausted(stats.pairs_reduced + pairs))
        }
        Err(e) => return Err(e.into()),
    };
    Ok(StratumResult {
        dim_degree: Some(hilbert_dim_degree(&sat)?),
        budget_status: BudgetStatus::Ok,
        pairs: stats.pairs_reduced,
        before_saturation: changed.then_some(before),
        chart_component: changed,
    })
}

fn nonzero_minors(
    m: &crate::algebra::matrix::PolyMatrix<PrimeField>,
    r: usize,
    perm: &[usize],
) -> Result<Vec<Poly>, FibrationError> {
    let mut out: Vec<Poly> = Vec::new();
    for f in m.minors(r)? {
        if f.is_zero() {
            continue;
        }
        let g = f.permute_vars(perm, DIM_W).monic();
        if !out.contains(&g) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Rank strata of the fibre quadric `Q_v` over `P(W)` computed in the chart
/// `x_chart ≠ 0`: the determinant with its chart factor removed (rank ≤ 3),
/// 3×3 minors (rank ≤ 2) and 2×2 minors (rank ≤ 1), saturated by the chart
/// coordinate when that changes the ideal.
pub fn strata_ideal_analysis(
    inst: &FibrationInstance,
    chart: usize,
    config: &GroebnerConfig,
) -> Result<ExactStrata, FibrationError> {
    let field = inst.field();
    let m = fibration_matrix(field, &inst.q, chart)?;
    let perm = chart_last(chart);

    let det = m.determinant()?.permute_vars(&perm, DIM_W);
    let (power, residual) = strip_variable(&det, DIM_W - 1);
    let residual_degree = residual.total_degree().unwrap_or(0);
    let lines = 50;
    let squarefree_lines = squarefree_along_lines(&residual, lines, inst.seed ^ 0x5eed)?;
    let factorization = DetFactorization {
        chart,
        chart_power: power,
        factor_degrees: vec![power, residual_degree],
        squarefree_lines,
        lines_tested: lines,
    };
    let rank_le_3 = stratum(field, vec![residual.monic()], config, false)?;
    let rank_le_2 = stratum(field, nonzero_minors(&m, 3, &perm)?, config, true)?;
    let rank_le_1 = stratum(field, nonzero_minors(&m, 2, &perm)?, config, true)?;
    Ok(ExactStrata {
        rank_le_3,
        rank_le_2,
        rank_le_1,
        factorization,
    })
}

/// The same strata from the chart-free 5×5 matrix `q(v ∧ e_i, v ∧ e_j)`:
/// 4×4, 3×3 and 2×2 minors, no saturation.
pub fn strata_chart_free(
    inst: &FibrationInstance,
    config: &GroebnerConfig,
) -> Result<[StratumResult; 3], FibrationError> {
    let field = inst.field();
    let m = full_fibration_matrix(field, &inst.q);
    let id: Vec<usize> = (0..DIM_W).collect();
    Ok([
        stratum(field, nonzero_minors(&m, 4, &id)?, config, false)?,
        stratum(field, nonzero_minors(&m, 3, &id)?, config, false)?,
        stratum(field, nonzero_minors(&m, 2, &id)?, config, false)?,
    ])
}
