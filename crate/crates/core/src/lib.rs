//! Exact Grothendieck–Witt invariants, Chow-form matrices and the arithmetic
//! writhe of rational space curves over ℚ.

pub mod chow;
pub mod error;
pub mod field;
pub mod gw;
pub mod isotopy;
pub mod json;
pub mod numfield;
pub mod writhe;

pub use error::{Error, Result};
