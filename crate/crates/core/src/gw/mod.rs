//! Symmetric bilinear forms over ℚ and their Grothendieck–Witt classes.

mod bezout;
mod class;
mod form;
mod hilbert;

pub use bezout::{bezout_matrix, hankel_coefficients, hankel_matrix};
pub use class::{gw_equal, gw_from_matrix, trace_form, GWClass, GWInvariants};
pub use form::{diagonalize, SymBilForm};
pub use hilbert::{hilbert_symbol, Place};
