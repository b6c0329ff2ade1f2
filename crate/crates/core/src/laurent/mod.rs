//! Exact Laurent polynomials in `q, a` and trace values with `(1 - q^2)`-power
//! denominators.

mod poly;
mod text;
mod value;

pub use poly::{LaurentPoly, Monomial};
pub use value::TraceValue;
