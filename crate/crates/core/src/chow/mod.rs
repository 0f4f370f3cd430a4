//! Chern characters, Todd classes and Riemann–Roch in the rational Chow
//! ring `Q[h]/(h⁴)` of `P³`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::ring::{fmt_rational, rat, Rational};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ChowError {
    #[error("rank {0} is not a non-negative integer")]
    NonIntegralRank(String),
    #[error("{label}: computed {computed}, expected {expected}")]
    Mismatch {
        label: String,
        computed: String,
        expected: String,
    },
}

/// `c0 + c1 h + c2 h² + c3 h³`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChowClass {
    coeffs: [Rational; 4],
}

impl ChowClass {
    pub fn new(coeffs: [Rational; 4]) -> Self {
        ChowClass { coeffs }
    }

    /// From `(numerator, denominator)` pairs.
    pub fn from_fracs(c: [(i64, i64); 4]) -> Self {
        ChowClass::new(c.map(|(n, d)| rat(n, d)))
    }

    pub fn zero() -> Self {
        ChowClass::new([0, 0, 0, 0].map(|_| Rational::zero()))
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        let mut z = Self::zero();
        z.coeffs[0] = c;
        z
    }

    /// The hyperplane class.
    pub fn h() -> Self {
        let mut z = Self::zero();
        z.coeffs[1] = Rational::one();
        z
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ChowClass::new(self.coeffs.clone().map(|x| x * c))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Truncated exponential `Σ_k x^k / k!`; `x` must have no constant term.
    pub fn exp(&self) -> Self {
        debug_assert!(self.coeffs[0].is_zero());
        let mut out = Self::one();
        let mut term = Self::one();
        for k in 1..=3 {
            term = (&term * self).scale(&rat(1, k));
            out = &out + &term;
        }
        out
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            let mag = fmt_rational(&a);
            let body = match i {
                0 => mag,
                _ => {
                    let var = if i == 1 {
                        "h".to_string()
                    } else {
                        format!("h^{i}")
                    };
                    if a.is_one() {
                        var
                    } else {
                        format!("{mag}{var}")
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if neg { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {body}", if neg { "-" } else { "+" }));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl Add for &ChowClass {
    type Output = ChowClass;
    fn add(self, o: &ChowClass) -> ChowClass {
        ChowClass::new([0, 1, 2, 3].map(|i| &self.coeffs[i] + &o.coeffs[i]))
    }
}

impl Sub for &ChowClass {
    type Output = ChowClass;
    fn sub(self, o: &ChowClass) -> ChowClass {
        ChowClass::new([0, 1, 2, 3].map(|i| &self.coeffs[i] - &o.coeffs[i]))
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        ChowClass::new(self.coeffs.clone().map(|x| -x))
    }
}

impl Mul for &ChowClass {
    type Output = ChowClass;
    fn mul(self, o: &ChowClass) -> ChowClass {
        let mut out = ChowClass::zero();
        for i in 0..4 {
            for j in 0..4 - i {
                out.coeffs[i + j] += &self.coeffs[i] * &o.coeffs[j];
            }
        }
        out
    }
}

/// Rank and Chern classes `c1 h, c2 h², c3 h³`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernVector {
    pub rank: u64,
    pub c1: Rational,
    pub c2: Rational,
    pub c3: Rational,
}

impl ChernVector {
    pub fn new(rank: u64, c1: Rational, c2: Rational, c3: Rational) -> Self {
        ChernVector { rank, c1, c2, c3 }
    }

    pub fn integers(rank: u64, c1: i64, c2: i64, c3: i64) -> Self {
        ChernVector::new(rank, rat(c1, 1), rat(c2, 1), rat(c3, 1))
    }
}

/// A class in K-theory, recorded by its Chern character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheafClass {
    pub ch: ChowClass,
}

impl SheafClass {
    pub fn new(ch: ChowClass) -> Self {
        SheafClass { ch }
    }

    /// `ch(O(m)) = exp(m h)`.
    pub fn line_bundle(m: i64) -> Self {
        SheafClass::new(ChowClass::h().scale(&rat(m, 1)).exp())
    }

    /// `n` copies.
    pub fn times(&self, n: i64) -> Self {
        SheafClass::new(self.ch.scale(&rat(n, 1)))
    }
}

/// `r + c1 + (c1² − 2c2)/2 + (c1³ − 3c1c2 + 3c3)/6`.
pub fn chern_to_char(v: &ChernVector) -> SheafClass {
    let (c1, c2, c3) = (&v.c1, &v.c2, &v.c3);
    let ch2 = (c1 * c1 - rat(2, 1) * c2) / rat(2, 1);
    let ch3 = (c1 * c1 * c1 - rat(3, 1) * c1 * c2 + rat(3, 1) * c3) / rat(6, 1);
    SheafClass::new(ChowClass::new([
        rat(v.rank as i64, 1),
        c1.clone(),
        ch2,
        ch3,
    ]))
}

/// Inverse of [`chern_to_char`] by Newton's identities.
pub fn char_to_chern(s: &SheafClass) -> Result<ChernVector, ChowError> {
    let [r, ch1, ch2, ch3] = s.ch.coeffs().clone();
    if !r.is_integer() || r < Rational::zero() {
        return Err(ChowError::NonIntegralRank(fmt_rational(&r)));
    }
    let rank = r
        .to_integer()
        .try_into()
        .map_err(|_| ChowError::NonIntegralRank(fmt_rational(&r)))?;
    let c1 = ch1;
    let c2 = (&c1 * &c1 - rat(2, 1) * ch2) / rat(2, 1);
    let c3 = (rat(6, 1) * ch3 - &c1 * &c1 * &c1 + rat(3, 1) * &c1 * &c2) / rat(3, 1);
    Ok(ChernVector { rank, c1, c2, c3 })
}

/// Signed sum of Chern characters along an exact sequence.
pub fn sequence_combine(terms: &[(i8, &SheafClass)]) -> SheafClass {
    let mut acc = ChowClass::zero();
    for (sign, s) in terms {
        acc = if *sign >= 0 {
            &acc + &s.ch
        } else {
            &acc - &s.ch
        };
    }
    SheafClass::new(acc)
}

/// `s ⊗ O(m)`.
pub fn char_of_twist(s: &SheafClass, m: i64) -> SheafClass {
    SheafClass::new(&s.ch * &SheafClass::line_bundle(m).ch)
}

/// `1 + c1/2 + (c1² + c2)/12 + c1 c2/24`.
pub fn todd(v: &ChernVector) -> ChowClass {
    let (c1, c2) = (&v.c1, &v.c2);
    ChowClass::new([
        Rational::one(),
        c1 / rat(2, 1),
        (c1 * c1 + c2) / rat(12, 1),
        c1 * c2 / rat(24, 1),
    ])
}

/// `ch(T_{P³})` from the Euler sequence `0 → O → O(1)⁴ → T → 0`.
pub fn tangent_class() -> SheafClass {
    sequence_combine(&[
        (1, &SheafClass::line_bundle(1).times(4)),
        (-1, &SheafClass::line_bundle(0)),
    ])
}

/// Todd class of `P³`, from the Chern classes of the tangent sheaf.
pub fn todd_p3() -> ChowClass {
    todd(&char_to_chern(&tangent_class()).expect("rank 3"))
}

/// `χ = deg(ch · td(P³))_3`.
pub fn euler_characteristic(s: &SheafClass) -> Rational {
    (&s.ch * &todd_p3()).coeff(3).clone()
}

/// One class of the contact-curve computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChowStep {
    pub label: String,
    pub computed: String,
    pub expected: String,
    pub method: String,
    pub matches: bool,
}

/// Invariants of the contact curve with the intermediate classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContactCurve {
    pub twist: i64,
    pub degree: i64,
    pub genus: i64,
    pub steps: Vec<ChowStep>,
}

fn step(label: &str, computed: &ChowClass, expected: ChowClass, method: &str) -> ChowStep {
    ChowStep {
        label: label.to_string(),
        computed: computed.to_string(),
        expected: expected.to_string(),
        method: method.to_string(),
        matches: *computed == expected,
    }
}

fn integral(x: &Rational, label: &str) -> Result<i64, ChowError> {
    if !x.is_integer() {
        return Err(ChowError::Mismatch {
            label: label.to_string(),
            computed: fmt_rational(x),
            expected: "an integer".to_string(),
        });
    }
    Ok(x.to_integer().try_into().expect("small"))
}

/// Runs the contact curve computation: `0 → N^∨ → E → I_C(a) → 0` with
/// `0 → O → O(1) ⊕ Ω¹(2) → E → 0` and `0 → N^∨ → T(−2) → O → 0`, then reads
/// off `a`, `deg C` and `p_a(C) = χ(I_C)`.
pub fn contact_curve_invariants() -> Result<ContactCurve, ChowError> {
    let o = |m| SheafClass::line_bundle(m);
    let t = tangent_class();
    let td = todd_p3();
    let omega2 = sequence_combine(&[(1, &o(1).times(4)), (-1, &o(2))]);
    let e = sequence_combine(&[(1, &o(1)), (1, &omega2), (-1, &o(0))]);
    let t_minus_2 = sequence_combine(&[(1, &o(-1).times(4)), (-1, &o(-2))]);
    let n_dual = sequence_combine(&[(1, &t_minus_2), (-1, &o(0))]);
    let ideal_a = sequence_combine(&[(1, &e), (-1, &n_dual)]);
    let chern = char_to_chern(&ideal_a)?;
    let a = integral(&chern.c1, "twist a")?;
    // c2(O_C(a)) = −deg(C) h², and c1(O_C(a)) = 0
    let oc = sequence_combine(&[(1, &o(a)), (-1, &ideal_a)]);
    let degree = integral(&-char_to_chern(&oc)?.c2, "deg C")?;
    let product = &char_of_twist(&ideal_a, -a).ch * &td;
    let genus = integral(product.coeff(3), "p_a")?;

    let steps = vec![
        step(
            "ch(T)",
            &t.ch,
            ChowClass::from_fracs([(3, 1), (4, 1), (2, 1), (2, 3)]),
            "4 ch(O(1)) - ch(O)",
        ),
        step(
            "td(T_P3)",
            &td,
            ChowClass::from_fracs([(1, 1), (2, 1), (11, 6), (1, 1)]),
            "Todd polynomial in c(T)",
        ),
        step(
            "ch(E)",
            &e.ch,
            ChowClass::from_fracs([(3, 1), (3, 1), (1, 2), (-1, 2)]),
            "ch(O(1)) + ch(Omega(2)) - ch(O)",
        ),
        step(
            "ch(N^dual)",
            &n_dual.ch,
            ChowClass::from_fracs([(2, 1), (-2, 1), (0, 1), (2, 3)]),
            "ch(T(-2)) - ch(O)",
        ),
        step(
            "ch(I_C(a))",
            &ideal_a.ch,
            ChowClass::from_fracs([(1, 1), (5, 1), (1, 2), (-7, 6)]),
            "ch(E) - ch(N^dual)",
        ),
        step(
            "ch(I_C(a)) ch(O(-a)) td",
            &product,
            ChowClass::from_fracs([(1, 1), (2, 1), (-61, 6), (15, 1)]),
            "Riemann-Roch",
        ),
    ];
    if let Some(bad) = steps.iter().find(|s| !s.matches) {
        return Err(ChowError::Mismatch {
            label: bad.label.clone(),
            computed: bad.computed.clone(),
            expected: bad.expected.clone(),
        });
    }
    Ok(ContactCurve {
        twist: a,
        degree,
        genus,
        steps,
    })
}
