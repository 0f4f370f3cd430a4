//! Diagram calculus for generic initial ideals of one-dimensional schemes in
//! `P^3` and their plane sections.
//!
//! A diagram is a function `f(i, j)` with values in `N ∪ {∞}`, drawn as a
//! triangle whose row `r` holds `f(r, 0), f(r - 1, 1), ..., f(0, r)`.

mod arrangement;
mod diagram;

pub use arrangement::{
    enumerate_arrangements, secant_test, sextic_theorem_report, ArrangementVerdict,
    CircleArrangement, SexticReport, Verdict, MAX_ENUMERATION_DEGREE,
};
pub use diagram::{gin_to_diagram, BorelMove, Cell, Diagram, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GinError {
    #[error("invalid diagram: {0}")]
    Invalid(Violation),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("row {row} has {found} cells, expected {expected}")]
    Shape {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("parts {0:?} are not strictly decreasing and positive")]
    NotStrictPartition(Vec<u32>),
    #[error("degree {0} out of range 1..={max}", max = MAX_ENUMERATION_DEGREE)]
    DegreeOutOfRange(u32),
    #[error("Borel move {mv} fails: {from} is in the ideal but {to} is not")]
    NotBorelFixed {
        mv: BorelMove,
        from: String,
        to: String,
    },
    #[error("ideal has unbounded support: no power of x1 lies in it")]
    UnboundedSupport,
}
