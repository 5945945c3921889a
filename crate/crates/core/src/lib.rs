//! Exact enumeration of standard Young tableaux of skew and shifted skew
//! shapes, tableau generating functions, and the product formulas that
//! evaluate them, each paired with a brute-force oracle.

pub mod cli;
pub mod error;
pub mod excited;
pub mod formulas;
pub mod oracle;
pub mod qalg;
pub mod qcalculus;
pub mod shapes;
pub mod verify;

pub use error::{Error, Result};
