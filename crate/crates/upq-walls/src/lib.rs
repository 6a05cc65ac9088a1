//! Exact wall-and-chamber analysis of the α-stability parameter line for
//! twisted U(p,q)-Higgs bundle types.
//!
//! Everything is computed in exact rational arithmetic: slopes, Toledo
//! invariants, Euler characteristics, Milnor–Wood bounds, critical values
//! (walls), chamber decompositions and theorem-applicability verdicts. An
//! independent brute-force oracle re-derives walls and decompositions from
//! the defining equations for cross-checking.

pub mod error;
pub mod interval;
pub mod invariants;
pub mod oracle;
pub mod parameter_space;
pub mod rational;
pub mod report;
pub mod theorem_engine;
pub mod types;

pub use error::{Error, Result};
pub use interval::{Endpoint, ExtendedInterval};
pub use rational::{rat, rint, Rational};
pub use types::{CurveData, HiggsType};
