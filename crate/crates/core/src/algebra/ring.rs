//! Coefficient rings: the rationals and prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds the rational `num / den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An element of the prime field `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: i64, modulus: u32) -> Self {
        let m = modulus as i64;
        Fp {
            value: value.rem_euclid(m) as u32,
            modulus,
        }
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: Fp) -> Result<(), AlgebraError> {
        if self.modulus != other.modulus {
            return Err(AlgebraError::IncompatibleRings);
        }
        Ok(())
    }

    pub fn checked_add(self, other: Fp) -> Result<Fp, AlgebraError> {
        self.check(other)?;
        Ok(Fp {
            value: add_mod(self.value, other.value, self.modulus),
            modulus: self.modulus,
        })
    }

    pub fn checked_mul(self, other: Fp) -> Result<Fp, AlgebraError> {
        self.check(other)?;
        Ok(Fp {
            value: mul_mod(self.value, other.value, self.modulus),
            modulus: self.modulus,
        })
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Fp> {
        if self.value == 0 {
            None
        } else {
            Some(Fp {
                value: inv_mod(self.value, self.modulus),
                modulus: self.modulus,
            })
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[inline]
pub fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    if s >= p as u64 {
        (s - p as u64) as u32
    } else {
        s as u32
    }
}

#[inline]
pub fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

#[inline]
pub fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow_mod(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut r = 1u32 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue by the extended Euclidean algorithm.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(p as i64) as u32
}

/// Deterministic primality test, good for all `u32`.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    for small in [
        2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
    ] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let n64 = n as u64;
    let mut d = n64 - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        let mut x = modpow64(a % n64, d, n64);
        if x == 1 || x == n64 - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n64;
            if x == n64 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn modpow64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    r
}

/// A commutative coefficient ring with field division where available.
///
/// The ring value is a descriptor (for example the modulus of `F_p`); elements
/// are plain values. Polynomials carry their ring so that mismatched operands
/// are detected.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, AlgebraError>;
    /// Short name used in messages and reports.
    fn name(&self) -> String;
}

/// The field of rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn fmt_elem(&self, a: &Rational) -> String {
        fmt_rational(a)
    }
    fn parse_elem(&self, s: &str) -> Result<Rational, AlgebraError> {
        parse_rational(s)
    }
    fn name(&self) -> String {
        "QQ".to_string()
    }
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_rational(a: &Rational) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let bad = || AlgebraError::Parse(format!("invalid rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(s.trim()).map_err(|_| bad())?,
        )),
    }
}

/// Reduces a rational into `F_p`; `None` if `p` divides the denominator.
pub fn rational_to_fp(a: &Rational, p: u32) -> Option<Fp> {
    let pb = BigInt::from(p);
    let n = (a.numer() % &pb + &pb) % &pb;
    let d = (a.denom() % &pb + &pb) % &pb;
    let n = n.to_u32()?;
    let d = d.to_u32()?;
    if d == 0 {
        return None;
    }
    Some(Fp {
        value: mul_mod(n, inv_mod(d, p), p),
        modulus: p,
    })
}

/// The prime field `F_p` for an odd prime `p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if p == 2 || p >= 1 << 31 || !is_prime(p) {
            return Err(AlgebraError::NotAnOddPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn elem(&self, v: i64) -> Fp {
        Fp::new(v, self.p)
    }
}

impl Ring for PrimeField {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        Fp {
            value: 0,
            modulus: self.p,
        }
    }
    fn one(&self) -> Fp {
        Fp {
            value: 1,
            modulus: self.p,
        }
    }
    fn from_i64(&self, n: i64) -> Fp {
        Fp::new(n, self.p)
    }
    fn is_zero(&self, a: &Fp) -> bool {
        a.value == 0
    }
    fn add(&self, a: &Fp, b: &Fp) -> Fp {
        Fp {
            value: add_mod(a.value, b.value, self.p),
            modulus: self.p,
        }
    }
    fn sub(&self, a: &Fp, b: &Fp) -> Fp {
        Fp {
            value: sub_mod(a.value, b.value, self.p),
            modulus: self.p,
        }
    }
    fn mul(&self, a: &Fp, b: &Fp) -> Fp {
        Fp {
            value: mul_mod(a.value, b.value, self.p),
            modulus: self.p,
        }
    }
    fn neg(&self, a: &Fp) -> Fp {
        Fp {
            value: sub_mod(0, a.value, self.p),
            modulus: self.p,
        }
    }
    fn inv(&self, a: &Fp) -> Option<Fp> {
        a.inv()
    }
    fn fmt_elem(&self, a: &Fp) -> String {
        a.value.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<Fp, AlgebraError> {
        let s = s.trim();
        if s.contains('/') {
            let r = parse_rational(s)?;
            return rational_to_fp(&r, self.p).ok_or_else(|| {
                AlgebraError::Parse(format!("denominator of '{s}' vanishes mod {}", self.p))
            });
        }
        let n = BigInt::from_str(s)
            .map_err(|_| AlgebraError::Parse(format!("invalid integer '{s}'")))?;
        let pb = BigInt::from(self.p);
        let r = ((n % &pb) + &pb) % &pb;
        Ok(Fp {
            value: r.abs().to_u32().unwrap_or(0),
            modulus: self.p,
        })
    }
    fn name(&self) -> String {
        format!("ZZ/{}", self.p)
    }
}
