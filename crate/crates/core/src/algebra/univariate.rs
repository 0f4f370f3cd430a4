//! Univariate polynomials over `F_p` in dense form.

use super::poly::{Monomial, MultiPoly};
use super::ring::{inv_mod, mul_mod, sub_mod, PrimeField};
use super::AlgebraError;

/// Dense univariate polynomial over `F_p`, lowest degree first, no trailing
/// zeros (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl DensePoly {
    pub fn new(p: u32, mut coeffs: Vec<u32>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        DensePoly { p, coeffs }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = inv_mod(lc, self.p);
                DensePoly::new(
                    self.p,
                    self.coeffs
                        .iter()
                        .map(|&c| mul_mod(c, inv, self.p))
                        .collect(),
                )
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, (i as u64 % p as u64) as u32, p))
            .collect();
        DensePoly::new(p, coeffs)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &DensePoly) -> (DensePoly, DensePoly) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = inv_mod(d.coeffs[dd], p);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (DensePoly::new(p, vec![]), self.clone());
        }
        let mut q = vec![0u32; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = mul_mod(r[i], inv, p);
            if c == 0 {
                continue;
            }
            q[i - dd] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                let k = i - dd + j;
                r[k] = sub_mod(r[k], mul_mod(c, dc, p), p);
            }
        }
        (DensePoly::new(p, q), DensePoly::new(p, r))
    }

    pub fn mul(&self, o: &DensePoly) -> DensePoly {
        if self.is_zero() || o.is_zero() {
            return DensePoly::new(self.p, vec![]);
        }
        let p = self.p as u64;
        let mut out = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        DensePoly::new(self.p, out.into_iter().map(|c| c as u32).collect())
    }

    /// Monic greatest common divisor (Euclid).
    pub fn gcd(&self, o: &DensePoly) -> DensePoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: u32) -> u32 {
        let p = self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
    }
}

/// Index of the only variable occurring in `f`, if at most one occurs.
fn univariate_var(f: &MultiPoly<PrimeField>) -> Result<usize, AlgebraError> {
    let mut var = None;
    for (m, _) in f.terms() {
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                match var {
                    None => var = Some(i),
                    Some(v) if v != i => return Err(AlgebraError::NotUnivariate),
                    _ => {}
                }
            }
        }
    }
    Ok(var.unwrap_or(0))
}

/// Dense form of a polynomial in which at most one variable occurs, with the
/// index of that variable.
pub fn to_dense(f: &MultiPoly<PrimeField>) -> Result<(DensePoly, usize), AlgebraError> {
    let var = univariate_var(f)?;
    let p = f.ring().modulus();
    let deg = f.degree_in(var).unwrap_or(0) as usize;
    let mut coeffs = vec![0u32; deg + 1];
    for (m, c) in f.terms() {
        let e = if f.nvars() == 0 {
            0
        } else {
            m.exps()[var] as usize
        };
        coeffs[e] = c.value();
    }
    Ok((DensePoly::new(p, coeffs), var))
}

pub fn from_dense(
    g: &DensePoly,
    field: PrimeField,
    nvars: usize,
    var: usize,
) -> MultiPoly<PrimeField> {
    let mut out = MultiPoly::zero(field, nvars);
    for (i, &c) in g.coeffs().iter().enumerate() {
        if c != 0 {
            let mut e = vec![0u32; nvars];
            if nvars > 0 {
                e[var] = i as u32;
            }
            out.add_term(Monomial::new(e), field.elem(c as i64));
        }
    }
    out
}

/// `f / gcd(f, f')`, made monic.
pub fn squarefree_part(f: &MultiPoly<PrimeField>) -> Result<MultiPoly<PrimeField>, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let (d, var) = to_dense(f)?;
    let p = f.ring().modulus();
    let deg = d.degree().expect("nonzero");
    if p as usize <= deg {
        return Err(AlgebraError::CharacteristicTooSmall {
            p,
            degree: deg as u32,
        });
    }
    let g = d.gcd(&d.derivative());
    let (q, _) = d.div_rem(&g);
    Ok(from_dense(&q.monic(), *f.ring(), f.nvars(), var))
}
