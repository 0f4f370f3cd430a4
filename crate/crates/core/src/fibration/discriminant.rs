//! The sextic discriminant of the conic bundle over `P(V)`.

use serde::Serialize;

use super::geometry::{bordered_matrix, conic_rank_at, ConicRank};
use super::instance::FibrationInstance;
use super::strata::strip_variable;
use super::FibrationError;
use crate::algebra::poly::MultiPoly;
use crate::algebra::ring::{Fp, PrimeField};

/// Discriminant together with the factorization that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct Discriminant {
    pub poly: MultiPoly<PrimeField>,
    pub chart: usize,
    /// Exponent of the chart coordinate removed from the bordered determinant.
    pub chart_power: u32,
    pub factor_degrees: Vec<u32>,
}

/// Summary suitable for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscriminantSummary {
    pub chart: usize,
    pub degree: u32,
    pub chart_power: u32,
    pub factor_degrees: Vec<u32>,
    pub terms: usize,
}

impl Discriminant {
    pub fn summary(&self) -> DiscriminantSummary {
        DiscriminantSummary {
            chart: self.chart,
            degree: self.poly.total_degree().unwrap_or(0),
            chart_power: self.chart_power,
            factor_degrees: self.factor_degrees.clone(),
            terms: self.poly.num_terms(),
        }
    }

    pub fn vanishes_at(&self, y: &[u32]) -> bool {
        let p = self.poly.ring().modulus();
        let pt: Vec<Fp> = y.iter().map(|&c| Fp::new(c as i64, p)).collect();
        self.poly.eval(&pt).expect("four coordinates").is_zero()
    }
}

/// Determinant of the bordered matrix over the chart `y_chart ≠ 0` (degree
/// 8) with the power of `y_chart` divided out. Fails unless a sextic is
/// left.
pub fn discriminant_in_chart(
    inst: &FibrationInstance,
    chart: usize,
) -> Result<Discriminant, FibrationError> {
    let b = bordered_matrix(inst, chart)?;
    let det = b.matrix.determinant()?;
    let full = det.total_degree().unwrap_or(0);
    let (power, residual) = strip_variable(&det, chart);
    let rdeg = residual.total_degree().unwrap_or(0);
    let factor_degrees = if power > 0 {
        vec![power, rdeg]
    } else {
        vec![full]
    };
    if det.is_zero() || rdeg != 6 {
        return Err(FibrationError::DiscriminantFactor { factor_degrees });
    }
    Ok(Discriminant {
        poly: residual.monic(),
        chart,
        chart_power: power,
        factor_degrees,
    })
}

/// Discriminant over chart 0.
pub fn discriminant(inst: &FibrationInstance) -> Result<Discriminant, FibrationError> {
    discriminant_in_chart(inst, 0)
}

/// Points among `points` where the discriminant vanishing disagrees with the
/// conic having rank at most 2.
pub fn zero_set_mismatches(
    inst: &FibrationInstance,
    disc: &Discriminant,
    points: &[[u32; 4]],
) -> Result<Vec<[u32; 4]>, FibrationError> {
    let mut bad = Vec::new();
    for y in points {
        let singular = match conic_rank_at(inst, y)? {
            ConicRank::Rank(r) => r <= 2,
            ConicRank::DegenerateFiber => true,
        };
        if singular != disc.vanishes_at(y) {
            bad.push(*y);
        }
    }
    Ok(bad)
}
