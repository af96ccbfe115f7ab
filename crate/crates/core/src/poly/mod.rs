//! Exact sparse multivariate polynomials over the integers.

mod gcd;
mod polynomial;
mod pseudo;
mod term;
mod text;
mod variable;

pub use gcd::{content_in, gcd, primitive_part_in, split_factors, square_free_part};
pub use polynomial::Polynomial;
pub use pseudo::{pseudo_divide, PseudoDivision};
pub use term::Term;
pub use text::parse_polynomial;
pub use variable::{VarClass, Variable};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("divisor is the zero polynomial")]
    DivisorZero,
    #[error("divisor does not contain {0}")]
    DivisorFree(Variable),
    #[error("no value for variable {0}")]
    MissingVariable(Variable),
    #[error("polynomial text: expected {expected} at offset {pos}")]
    Parse { pos: usize, expected: String },
}
