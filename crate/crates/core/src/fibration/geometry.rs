//! The quadric fibration over `P(W)` and the conic bundle over `P(V)`.
//!
//! For `v ∈ W` and a basis `b_0..b_3` of a complement of `v`, the fibre
//! quadric is `Q_v(i, j) = q(v ∧ b_i, v ∧ b_j)` and the hyperplane
//! restricts to `ℓ_v(i) = h(v ∧ b_i)`. The conic is `Q_v` restricted to
//! `ker ℓ_v`, whose rank is the rank of the bordered matrix
//! `[[Q_v, ℓ_vᵀ], [ℓ_v, 0]]` minus 2.

use serde::Serialize;

use super::instance::{bilinear, dot, wedge, FibrationInstance, DIM_L2W, DIM_W, PLUCKER};
use super::FibrationError;
use crate::algebra::matrix::{rank_mod_p, PolyMatrix};
use crate::algebra::poly::MultiPoly;
use crate::algebra::ring::PrimeField;

type Poly = MultiPoly<PrimeField>;

/// Plücker coordinates of `v ∧ b` for symbolic `v` and constant `b`.
fn wedge_poly(v: &[Poly], b: &[u32], field: PrimeField) -> Vec<Poly> {
    PLUCKER
        .iter()
        .map(|&(a, c)| {
            let x = v[a].scale(&field.elem(b[c] as i64));
            let y = v[c].scale(&field.elem(b[a] as i64));
            &x - &y
        })
        .collect()
}

fn gram(q: &[Vec<u32>], ws: &[Vec<Poly>], field: PrimeField) -> PolyMatrix<PrimeField> {
    let nvars = ws[0][0].nvars();
    // q w_j, linear forms
    let qw: Vec<Vec<Poly>> = ws
        .iter()
        .map(|w| {
            (0..DIM_L2W)
                .map(|a| {
                    let mut s = Poly::zero(field, nvars);
                    for (b, wb) in w.iter().enumerate() {
                        if q[a][b] != 0 && !wb.is_zero() {
                            s = &s + &wb.scale(&field.elem(q[a][b] as i64));
                        }
                    }
                    s
                })
                .collect()
        })
        .collect();
    let n = ws.len();
    let mut rows = vec![vec![Poly::zero(field, nvars); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut s = Poly::zero(field, nvars);
            for a in 0..DIM_L2W {
                if !ws[i][a].is_zero() && !qw[j][a].is_zero() {
                    s = &s + &(&ws[i][a] * &qw[j][a]);
                }
            }
            rows[j][i] = s.clone();
            rows[i][j] = s;
        }
    }
    PolyMatrix::from_rows(rows).expect("square")
}

fn unit(k: usize) -> Vec<u32> {
    let mut e = vec![0u32; DIM_W];
    e[k] = 1;
    e
}

/// The 4×4 fibre quadric over the chart `x_chart ≠ 0` of `P(W)`, in the
/// five coordinates of `W`, using the complement basis `{e_j : j ≠ chart}`.
/// Its determinant has degree 8.
pub fn fibration_matrix(
    field: PrimeField,
    q: &[Vec<u32>],
    chart: usize,
) -> Result<PolyMatrix<PrimeField>, FibrationError> {
    if chart >= DIM_W {
        return Err(FibrationError::InvalidChart(chart));
    }
    let v: Vec<Poly> = (0..DIM_W).map(|i| Poly::var(field, DIM_W, i)).collect();
    let ws: Vec<Vec<Poly>> = (0..DIM_W)
        .filter(|&j| j != chart)
        .map(|j| wedge_poly(&v, &unit(j), field))
        .collect();
    Ok(gram(q, &ws, field))
}

/// The 5×5 matrix `q(v ∧ e_i, v ∧ e_j)`. It annihilates `v`, and its rank
/// at `v` equals the rank of the fibre quadric.
pub fn full_fibration_matrix(field: PrimeField, q: &[Vec<u32>]) -> PolyMatrix<PrimeField> {
    let v: Vec<Poly> = (0..DIM_W).map(|i| Poly::var(field, DIM_W, i)).collect();
    let ws: Vec<Vec<Poly>> = (0..DIM_W)
        .map(|j| wedge_poly(&v, &unit(j), field))
        .collect();
    gram(q, &ws, field)
}

/// Symmetric 5×5 matrix `[[Q_v, ℓ_vᵀ], [ℓ_v, 0]]` over a chart of `P(V)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BorderedMatrix {
    pub chart: usize,
    pub matrix: PolyMatrix<PrimeField>,
}

impl BorderedMatrix {
    pub fn quadric_entry(&self, i: usize, j: usize) -> &Poly {
        self.matrix.get(i, j)
    }

    pub fn linear_entry(&self, i: usize) -> &Poly {
        self.matrix.get(4, i)
    }
}

/// The bordered matrix over `P(V)` in the coordinates `y` of
/// `v = Σ y_i V_i`. The complement basis is `{V_j : j ≠ chart} ∪ {u}` with
/// `u` the first standard vector completing `V`, so the basis degenerates
/// exactly where `y_chart = 0`.
pub fn bordered_matrix(
    inst: &FibrationInstance,
    chart: usize,
) -> Result<BorderedMatrix, FibrationError> {
    if chart >= 4 {
        return Err(FibrationError::InvalidChart(chart));
    }
    let field = inst.field();
    let v: Vec<Poly> = (0..DIM_W)
        .map(|c| {
            let coeffs: Vec<_> = (0..4).map(|i| field.elem(inst.v[i][c] as i64)).collect();
            Poly::linear(field, &coeffs)
        })
        .collect();
    let mut basis: Vec<Vec<u32>> = (0..4)
        .filter(|&j| j != chart)
        .map(|j| inst.v[j].clone())
        .collect();
    basis.push(unit(inst.complement_vector()));
    let ws: Vec<Vec<Poly>> = basis.iter().map(|b| wedge_poly(&v, b, field)).collect();
    let qv = gram(&inst.q, &ws, field);
    let ell: Vec<Poly> = ws
        .iter()
        .map(|w| {
            let mut s = Poly::zero(field, 4);
            for (a, wa) in w.iter().enumerate() {
                if inst.h[a] != 0 {
                    s = &s + &wa.scale(&field.elem(inst.h[a] as i64));
                }
            }
            s
        })
        .collect();
    let mut rows: Vec<Vec<Poly>> = (0..4)
        .map(|i| {
            let mut r: Vec<Poly> = (0..4).map(|j| qv.get(i, j).clone()).collect();
            r.push(ell[i].clone());
            r
        })
        .collect();
    let mut last = ell.clone();
    last.push(Poly::zero(field, 4));
    rows.push(last);
    Ok(BorderedMatrix {
        chart,
        matrix: PolyMatrix::from_rows(rows).expect("square"),
    })
}

/// Rank of the conic over a point of `P(V)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ConicRank {
    Rank(u8),
    /// `ℓ_v = 0`: the whole plane of lines lies in the hyperplane.
    DegenerateFiber,
}

/// Numeric fibre data at a point of `P(W)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FibreRanks {
    /// Rank of the fibre quadric `Q_v` (0..=4).
    pub quadric: u8,
    pub conic: ConicRank,
}

/// Gram matrix `Q_v` and `ℓ_v` at a nonzero `w ∈ W`, with the complement
/// basis `{e_j : j ≠ k}` for the first `k` with `w_k ≠ 0`.
pub fn fibre_data(inst: &FibrationInstance, w: &[u32]) -> (Vec<Vec<u32>>, Vec<u32>) {
    let p = inst.p;
    let k = w.iter().position(|&x| x != 0).expect("nonzero point");
    let xs: Vec<[u32; DIM_L2W]> = (0..DIM_W)
        .filter(|&j| j != k)
        .map(|j| wedge(w, &unit(j), p))
        .collect();
    let mut qm = vec![vec![0u32; 4]; 4];
    for i in 0..4 {
        for j in i..4 {
            let s = bilinear(&inst.q, &xs[i], &xs[j], p);
            qm[i][j] = s;
            qm[j][i] = s;
        }
    }
    let ell = xs.iter().map(|x| dot(&inst.h, x, p)).collect();
    (qm, ell)
}

/// Ranks at the point `Σ y_i V_i` of `P(V)`.
pub fn fibre_ranks(inst: &FibrationInstance, y: &[u32]) -> Result<FibreRanks, FibrationError> {
    if y.len() != 4 || y.iter().any(|&c| c >= inst.p) || y.iter().all(|&c| c == 0) {
        return Err(FibrationError::InvalidPoint);
    }
    let w = inst.point_of_v(y);
    Ok(ranks_at_w(inst, &w))
}

/// Ranks at a point of `P(W)`.
pub fn ranks_at_w(inst: &FibrationInstance, w: &[u32]) -> FibreRanks {
    let p = inst.p;
    let (qm, ell) = fibre_data(inst, w);
    let quadric = rank_mod_p(&mut qm.clone(), p) as u8;
    if ell.iter().all(|&x| x == 0) {
        return FibreRanks {
            quadric,
            conic: ConicRank::DegenerateFiber,
        };
    }
    let mut b: Vec<Vec<u32>> = qm
        .iter()
        .zip(&ell)
        .map(|(r, &l)| {
            let mut r = r.clone();
            r.push(l);
            r
        })
        .collect();
    let mut last = ell.clone();
    last.push(0);
    b.push(last);
    let conic = ConicRank::Rank((rank_mod_p(&mut b, p) - 2) as u8);
    FibreRanks { quadric, conic }
}

/// Rank of the conic over the point `Σ y_i V_i` of `P(V)`.
pub fn conic_rank_at(inst: &FibrationInstance, y: &[u32]) -> Result<ConicRank, FibrationError> {
    Ok(fibre_ranks(inst, y)?.conic)
}

/// Rank of the conic from explicit `Q` and `ℓ` via the bordered matrix.
pub fn bordered_conic_rank(qm: &[Vec<u32>], ell: &[u32], p: u32) -> ConicRank {
    if ell.iter().all(|&x| x == 0) {
        return ConicRank::DegenerateFiber;
    }
    let n = ell.len();
    let mut b: Vec<Vec<u32>> = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| match (i < n, j < n) {
                    (true, true) => qm[i][j],
                    (true, false) => ell[i],
                    (false, true) => ell[j],
                    (false, false) => 0,
                })
                .collect()
        })
        .collect();
    ConicRank::Rank((rank_mod_p(&mut b, p) - 2) as u8)
}

/// Evaluates a polynomial matrix at a point given by residues.
pub fn eval_residues(m: &PolyMatrix<PrimeField>, y: &[u32]) -> Vec<Vec<u32>> {
    let field = *m.ring();
    let pt: Vec<_> = y.iter().map(|&c| field.elem(c as i64)).collect();
    m.eval(&pt)
        .expect("point length matches")
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.value()).collect())
        .collect()
}
