//! Sparse multivariate polynomials over a [`Ring`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::Ring;
use super::AlgebraError;

/// Exponent vector ordered by graded reverse lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Graded reverse lexicographic comparison.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A polynomial in `nvars` variables stored as a map from exponent vectors to
/// nonzero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<R: Ring> {
    ring: R,
    nvars: usize,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(ring: R, nvars: usize) -> Self {
        MultiPoly {
            ring,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: R, nvars: usize, c: R::Elem) -> Self {
        let mut p = Self::zero(ring, nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(ring: R, nvars: usize) -> Self {
        let c = ring.one();
        Self::constant(ring, nvars, c)
    }

    pub fn var(ring: R, nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range");
        let c = ring.one();
        Self::term(ring, Monomial::var(nvars, i), c)
    }

    pub fn term(ring: R, mono: Monomial, c: R::Elem) -> Self {
        let nvars = mono.nvars();
        let mut p = Self::zero(ring, nvars);
        p.add_term(mono, c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining
    /// repeated monomials.
    pub fn from_terms<I>(ring: R, nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, R::Elem)>,
    {
        let mut p = Self::zero(ring, nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear(ring: R, coeffs: &[R::Elem]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(ring, n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> R::Elem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &R::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn add_term(&mut self, m: Monomial, c: R::Elem) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = self.ring.add(old, &c);
                if self.ring.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.ring != other.ring || self.nvars != other.nvars {
            return Err(AlgebraError::IncompatibleRings);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.compatible(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.compatible(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), self.ring.neg(c));
        }
        Ok(r)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.compatible(other)?;
        let mut r = Self::zero(self.ring.clone(), self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                r.add_term(ma.mul(mb), self.ring.mul(ca, cb));
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut r = Self::zero(self.ring.clone(), self.nvars);
        if self.ring.is_zero(c) {
            return r;
        }
        for (m, a) in &self.terms {
            let v = self.ring.mul(a, c);
            if !self.ring.is_zero(&v) {
                r.terms.insert(m.clone(), v);
            }
        }
        r
    }

    pub fn mul_term(&self, m: &Monomial, c: &R::Elem) -> Self {
        let mut r = Self::zero(self.ring.clone(), self.nvars);
        for (a, x) in &self.terms {
            let v = self.ring.mul(x, c);
            if !self.ring.is_zero(&v) {
                r.terms.insert(a.mul(m), v);
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(self.ring.clone(), self.nvars);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Scales so that the leading coefficient is one. Requires an invertible
    /// leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self
                    .ring
                    .inv(c)
                    .expect("leading coefficient is not invertible");
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, point: &[R::Elem]) -> Result<R::Elem, AlgebraError> {
        if point.len() != self.nvars {
            return Err(AlgebraError::DimensionMismatch(format!(
                "point has length {}, polynomial has {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut acc = self.ring.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = self.ring.mul(&t, x);
                }
            }
            acc = self.ring.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` for `x_i`. All images share a ring and variable
    /// count, which become those of the result.
    pub fn substitute(&self, images: &[MultiPoly<R>]) -> Result<MultiPoly<R>, AlgebraError> {
        if images.len() != self.nvars {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars
            )));
        }
        let (ring, n) = match images.first() {
            Some(f) => (f.ring.clone(), f.nvars),
            None => (self.ring.clone(), 0),
        };
        for img in images {
            if img.ring != ring || img.nvars != n {
                return Err(AlgebraError::IncompatibleRings);
            }
        }
        if ring != self.ring {
            return Err(AlgebraError::IncompatibleRings);
        }
        let maxdeg: Vec<u32> = (0..self.nvars)
            .map(|i| self.degree_in(i).unwrap_or(0))
            .collect();
        let powers: Vec<Vec<MultiPoly<R>>> = images
            .iter()
            .zip(&maxdeg)
            .map(|(img, &d)| {
                let mut v = vec![MultiPoly::one(ring.clone(), n)];
                for k in 1..=d as usize {
                    let next = &v[k - 1] * img;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut r = MultiPoly::zero(ring.clone(), n);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(ring.clone(), n, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            r = &r + &t;
        }
        Ok(r)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut r = Self::zero(self.ring.clone(), self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            r.add_term(m2, self.ring.mul(c, &self.ring.from_i64(e as i64)));
        }
        r
    }

    /// Division with remainder by a list of divisors (generalized division
    /// algorithm in grevlex). Returns `(quotients, remainder)`.
    pub fn divide_by(
        &self,
        divisors: &[MultiPoly<R>],
    ) -> Result<(Vec<MultiPoly<R>>, MultiPoly<R>), AlgebraError> {
        for d in divisors {
            self.compatible(d)?;
            if d.is_zero() {
                return Err(AlgebraError::DivisionByZero);
            }
        }
        let mut quotients: Vec<MultiPoly<R>> = divisors
            .iter()
            .map(|_| Self::zero(self.ring.clone(), self.nvars))
            .collect();
        let lead_inv: Vec<R::Elem> = divisors
            .iter()
            .map(|d| {
                self.ring
                    .inv(d.leading_term().expect("nonzero").1)
                    .ok_or(AlgebraError::NotInvertible)
            })
            .collect::<Result<_, _>>()?;
        let mut rem = Self::zero(self.ring.clone(), self.nvars);
        let mut work = self.clone();
        while let Some((m, c)) = work.terms.pop_last() {
            let mut reduced = false;
            for (k, d) in divisors.iter().enumerate() {
                let lm = d.leading_monomial().expect("nonzero");
                if lm.divides(&m) {
                    let q = lm.quotient_of(&m);
                    let f = self.ring.mul(&c, &lead_inv[k]);
                    quotients[k].add_term(q.clone(), f.clone());
                    for (dm, dc) in d.terms.iter().rev().skip(1) {
                        work.add_term(dm.mul(&q), self.ring.neg(&self.ring.mul(dc, &f)));
                    }
                    reduced = true;
                    break;
                }
            }
            if !reduced {
                rem.terms.insert(m, c);
            }
        }
        Ok((quotients, rem))
    }

    /// Exact quotient `self / d`; errors when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly<R>) -> Result<MultiPoly<R>, AlgebraError> {
        let (mut q, r) = self.divide_by(std::slice::from_ref(d))?;
        if !r.is_zero() {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(q.pop().expect("one quotient"))
    }

    /// Applies a ring homomorphism to every coefficient.
    pub fn map_ring<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> MultiPoly<S> {
        let mut r = MultiPoly::zero(target, self.nvars);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c));
        }
        r
    }

    /// Renames variables: `x_i` becomes `x_{perm[i]}` in a ring with
    /// `new_nvars` variables.
    pub fn permute_vars(&self, perm: &[usize], new_nvars: usize) -> Self {
        let mut r = Self::zero(self.ring.clone(), new_nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; new_nvars];
            for (i, &x) in m.0.iter().enumerate() {
                e[perm[i]] += x;
            }
            r.add_term(Monomial(e), c.clone());
        }
        r
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let mut cs = self.ring.fmt_elem(c);
            let neg = cs.starts_with('-');
            if neg {
                cs.remove(0);
            }
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                let name = names
                    .get(i)
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| format!("x{i}"));
                match e {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                out.push_str(&cs);
            } else {
                if cs != "1" {
                    out.push_str(&cs);
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&[]))
    }
}

/// Exact `a op b`; errors with [`AlgebraError::IncompatibleRings`] when the
/// operands live in different rings.
pub fn poly_arith<R: Ring>(
    a: &MultiPoly<R>,
    b: &MultiPoly<R>,
    op: ArithOp,
) -> Result<MultiPoly<R>, AlgebraError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

// Operator sugar; panics on incompatible rings. Use the checked methods or
// `poly_arith` when operands come from untrusted input.
impl<'a, R: Ring> Add<&'a MultiPoly<R>> for &'a MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn add(self, rhs: &'a MultiPoly<R>) -> MultiPoly<R> {
        self.checked_add(rhs).expect("incompatible rings")
    }
}

impl<'a, R: Ring> Sub<&'a MultiPoly<R>> for &'a MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn sub(self, rhs: &'a MultiPoly<R>) -> MultiPoly<R> {
        self.checked_sub(rhs).expect("incompatible rings")
    }
}

impl<'a, R: Ring> Mul<&'a MultiPoly<R>> for &'a MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn mul(self, rhs: &'a MultiPoly<R>) -> MultiPoly<R> {
        self.checked_mul(rhs).expect("incompatible rings")
    }
}

impl<R: Ring> Neg for &MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn neg(self) -> MultiPoly<R> {
        let mut r = MultiPoly::zero(self.ring.clone(), self.nvars);
        for (m, c) in &self.terms {
            r.terms.insert(m.clone(), self.ring.neg(c));
        }
        r
    }
}
