//! Link invariants computed from the trace: HOMFLY, its Jones
//! specialization, and the looped coxeter checks.

mod checks;
mod homfly;
mod jones;
mod lcb;

pub use checks::{markov_suite, skein_suite, split_union_suite, SuiteReport};
pub use homfly::{homfly_from_trace, homfly_of_braid, normalization_factor, writhe_sign, HomflyValue};
pub use jones::{hopf_reference, jones_of_braid, mirror_branch, specialize, JonesValue, MirrorBranch};
pub use lcb::{lcb_homfly_check, lcb_recursion_rhs, lcb_trace, verify_lcb_recursion, CheckRecord};
