//! Hilbert series of monomial ideals and the dimension and degree of
//! projective schemes cut out by homogeneous ideals.

use super::groebner::IdealBasis;
use super::poly::Monomial;
use super::AlgebraError;

/// Projective dimension and degree of `V(I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimDegree {
    /// The ideal contains a power of the irrelevant ideal.
    Empty,
    Variety {
        dim: usize,
        degree: u64,
    },
}

impl DimDegree {
    pub fn dim(&self) -> Option<usize> {
        match self {
            DimDegree::Empty => None,
            DimDegree::Variety { dim, .. } => Some(*dim),
        }
    }

    pub fn degree(&self) -> Option<u64> {
        match self {
            DimDegree::Empty => None,
            DimDegree::Variety { degree, .. } => Some(*degree),
        }
    }
}

impl std::fmt::Display for DimDegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimDegree::Empty => write!(f, "EMPTY"),
            DimDegree::Variety { dim, degree } => write!(f, "({dim}, {degree})"),
        }
    }
}

/// Hilbert series `h(t) / (1-t)^k` of `S/I` with `h(1) != 0`, where `k` is
/// the Krull dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Vec<i64>,
    pub krull_dim: usize,
}

impl HilbertSeries {
    pub fn degree(&self) -> i64 {
        self.numerator.iter().sum()
    }

    pub fn dim_degree(&self) -> DimDegree {
        if self.krull_dim == 0 {
            DimDegree::Empty
        } else {
            DimDegree::Variety {
                dim: self.krull_dim - 1,
                degree: self.degree() as u64,
            }
        }
    }

    /// Arithmetic genus `1 - P(0)` of a one-dimensional projective scheme.
    pub fn arithmetic_genus(&self) -> Option<i64> {
        if self.krull_dim != 2 {
            return None;
        }
        // P(t) = h(1) t + h(1) - h'(1)
        let h1 = self.degree();
        let dh1: i64 = self
            .numerator
            .iter()
            .enumerate()
            .map(|(k, c)| k as i64 * c)
            .sum();
        Some(1 - h1 + dh1)
    }
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^n` of `S/(M)` for a
/// monomial ideal generated by `gens` in `n` variables.
pub fn monomial_numerator(gens: &[Monomial], n: usize) -> Vec<i64> {
    let gens: Vec<Vec<u32>> = gens.iter().map(|m| m.exps().to_vec()).collect();
    for g in &gens {
        assert_eq!(g.len(), n, "monomial has wrong number of variables");
    }
    numerator(minimalize(gens))
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    gens.dedup();
    let mut out: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// Pivot recursion `N(I) = N(I + (p)) + t^{deg p} N(I : p)` on a minimal
/// generating set.
fn numerator(gens: Vec<Vec<u32>>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    let n = gens[0].len();
    let pairwise_coprime = (0..n).all(|v| gens.iter().filter(|g| g[v] > 0).count() <= 1);
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.iter().sum::<u32>() as usize;
            let mut f = vec![0i64; d + 1];
            f[0] = 1;
            f[d] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return trim(acc);
    }
    // pivot on the variable occurring in most generators
    let var = (0..n)
        .max_by_key(|&v| {
            (
                gens.iter().filter(|g| g[v] > 0).count(),
                std::cmp::Reverse(v),
            )
        })
        .expect("nonempty");
    let mut exps: Vec<u32> = gens.iter().map(|g| g[var]).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pivot = vec![0u32; n];
    pivot[var] = e;

    let mut sum: Vec<Vec<u32>> = gens.iter().filter(|g| g[var] < e).cloned().collect();
    sum.push(pivot.clone());
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[var] = h[var].saturating_sub(e);
            h
        })
        .collect();
    let mut out = numerator(minimalize(sum));
    let b = numerator(minimalize(colon));
    poly_add_shifted(&mut out, &b, e as usize);
    trim(out)
}

/// Hilbert series of `S/I` read off the leading monomials of a Gröbner
/// basis.
pub fn hilbert_series(gb: &IdealBasis) -> Result<HilbertSeries, AlgebraError> {
    if !gb.is_groebner() {
        return Err(AlgebraError::NotGroebner);
    }
    let n = gb.nvars();
    let mut num = monomial_numerator(&gb.leading_monomials(), n);
    if num.iter().all(|&c| c == 0) {
        // unit ideal
        return Ok(HilbertSeries {
            numerator: vec![0],
            krull_dim: 0,
        });
    }
    let mut k = n;
    // divide by (1 - t) while t = 1 is a root
    while k > 0 && num.iter().sum::<i64>() == 0 {
        let mut q = vec![0i64; num.len() - 1];
        let mut carry = 0i64;
        for i in 0..q.len() {
            carry += num[i];
            q[i] = carry;
        }
        num = trim(q);
        k -= 1;
    }
    Ok(HilbertSeries {
        numerator: num,
        krull_dim: k,
    })
}

/// Projective dimension and degree of the scheme defined by a Gröbner basis.
pub fn hilbert_dim_degree(gb: &IdealBasis) -> Result<DimDegree, AlgebraError> {
    Ok(hilbert_series(gb)?.dim_degree())
}
