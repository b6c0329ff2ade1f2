//! Exact Jones–Ocneanu trace on Hecke algebras, and the HOMFLY and Jones
//! polynomials of braid closures.
//!
//! Links are given as braid words. A word is pushed into the Hecke algebra
//! `H_n` (basis `T_w` indexed by permutations), traced by rank reduction over
//! the coset normal form, and normalized into a link invariant.
//!
//! ```
//! use braidtrace::{braid::BraidWord, invariants};
//!
//! let hopf = BraidWord::parse("1 1", None).unwrap();
//! let v = invariants::jones_of_braid(&hopf).unwrap();
//! assert_eq!(v.to_string(), "-t^(1/2) - t^(5/2)");
//! ```

pub mod braid;
pub mod cli;
pub mod error;
pub mod hecke;
pub mod invariants;
pub mod laurent;
pub mod trace;

pub use error::{Error, Result};
