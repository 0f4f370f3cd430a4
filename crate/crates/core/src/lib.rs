pub mod algebra;
pub mod chow;
pub mod cli;
pub mod config;
pub mod fibration;
pub mod gin;
pub mod lattice;
pub mod report;
