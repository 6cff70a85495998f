//! Frobenius-splitting invariants of quotients of polynomial rings over
//! prime fields, with a monomial fast path and a general Gröbner path.

pub mod cli;
pub mod error;
pub mod finvariants;
pub mod groebner;
pub mod monomial;
pub mod oracle;
pub mod polyring;

pub use error::{Error, Result};
