//! Exact q-difference raising and lowering operators for Macdonald
//! polynomials, with the Jack limit and (q,t)-Kostka tables.

pub mod arith;
pub mod error;
pub mod jack;
pub mod macdonald;
pub mod output;
pub mod par;
pub mod partition;
pub mod qdiff;
pub mod report;
pub mod symmetric;

pub use error::{Error, Result};
