//! Exact Weingarten calculus for real Grassmannians, bt-monotone Hurwitz
//! numbers, Jack symmetric functions and b-deformed Jucys-Murphy operators.

pub mod exactnum;
pub mod partitions;
pub mod pairings;
pub mod memo;
pub mod symfunc;
pub mod weingarten;
pub mod hurwitz;
pub mod jmops;
pub mod analysis;
pub mod cli;
