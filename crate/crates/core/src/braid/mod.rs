//! Braid words, permutations, braid families and closure combinatorics.

mod perm;
mod rewrite;
mod word;

pub use perm::Permutation;
pub use rewrite::Rewrite;
pub use word::{BraidWord, Sign};
