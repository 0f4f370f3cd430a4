//! Exact polynomial algebra over `Q` and `F_p`.

pub mod groebner;
pub mod hilbert;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod scs;
pub mod univariate;

use groebner::IdealBasis;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("incompatible rings")]
    IncompatibleRings,
    #[error("{0} is not an odd prime below 2^31")]
    NotAnOddPrime(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("leading coefficient is not invertible")]
    NotInvertible,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("minor size {size} out of range for a {rows}x{cols} matrix")]
    MinorSizeOutOfRange {
        size: usize,
        rows: usize,
        cols: usize,
    },
    #[error("generator is not homogeneous")]
    NotHomogeneous,
    #[error("{0} variables requested, at most 6 supported")]
    TooManyVariables(usize),
    #[error("exponent too large for packed monomials")]
    ExponentOverflow,
    #[error("groebner budget exhausted after {pairs} pairs")]
    GroebnerBudgetExhausted {
        pairs: usize,
        partial: Box<IdealBasis>,
    },
    #[error("basis is not a Groebner basis")]
    NotGroebner,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("characteristic {p} is not larger than degree {degree}")]
    CharacteristicTooSmall { p: u32, degree: u32 },
}
