use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::laurent::{LaurentPoly, TraceValue};
use crate::trace::trace_of_braid;

/// HOMFLY polynomial of a braid closure together with the data used to
/// normalize it.
///
/// Equality compares the polynomial only: two words with equivalent closures
/// give equal values even though their strand counts and writhes differ.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HomflyValue {
    pub value: TraceValue,
    pub source_word: BraidWord,
    pub strand_count: usize,
    pub writhe: i64,
    pub epsilon: i32,
}

impl PartialEq for HomflyValue {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for HomflyValue {}

impl fmt::Display for HomflyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// The unit `(q a^-1)^n (-a)^(eps * w)`.
pub fn normalization_factor(strands: usize, writhe: i64, epsilon: i32) -> LaurentPoly {
    let n = strands as i32;
    let e = epsilon * writhe as i32;
    let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
    LaurentPoly::term(sign, n, e - n)
}

fn normalize(trace: &TraceValue, strands: usize, writhe: i64, epsilon: i32) -> TraceValue {
    trace.scale_unit(&normalization_factor(strands, writhe, epsilon))
}

/// Sign `ε` of the writhe exponent in `(q a^-1)^n (-a)^(ε w) Tr`.
///
/// Chosen once, as the unique sign for which the one-strand unknot and its
/// positive stabilization `σ_1` on two strands normalize to the same value.
/// With the kink factors `z+ = -q^-1`, `z- = -q^-1 a^2` this is `+1`.
pub fn writhe_sign() -> i32 {
    static EPSILON: OnceLock<i32> = OnceLock::new();
    *EPSILON.get_or_init(|| {
        let unknot = BraidWord::identity(1).expect("rank 1");
        let stabilized = BraidWord::new(2, vec![1]).expect("rank 2");
        let t0 = trace_of_braid(&unknot);
        let t1 = trace_of_braid(&stabilized);
        let candidates: Vec<i32> = [1, -1]
            .into_iter()
            .filter(|&eps| normalize(&t0, 1, 0, eps) == normalize(&t1, 2, 1, eps))
            .collect();
        assert_eq!(
            candidates.len(),
            1,
            "exactly one writhe sign must make HOMFLY stabilization-invariant"
        );
        candidates[0]
    })
}

/// HOMFLY polynomial of the closure of `w`.
pub fn homfly_of_braid(w: &BraidWord) -> HomflyValue {
    let epsilon = writhe_sign();
    let trace = trace_of_braid(w);
    HomflyValue {
        value: normalize(&trace, w.rank(), w.writhe(), epsilon),
        source_word: w.clone(),
        strand_count: w.rank(),
        writhe: w.writhe(),
        epsilon,
    }
}

/// HOMFLY polynomial from an already computed trace.
pub fn homfly_from_trace(trace: &TraceValue, strands: usize, writhe: i64) -> TraceValue {
    normalize(trace, strands, writhe, writhe_sign())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::Sign;

    fn word(s: &str, rank: usize) -> BraidWord {
        BraidWord::parse(s, Some(rank)).unwrap()
    }

    #[test]
    fn calibrated_sign_is_positive() {
        assert_eq!(writhe_sign(), 1);
    }

    #[test]
    fn unknot_value() {
        let h = homfly_of_braid(&word("", 1));
        // (a^-1 - a) / (q^-1 - q) = q (a^-1 - a) / (1 - q^2)
        let expected = TraceValue::new(LaurentPoly::from_terms([(1, 1, -1), (-1, 1, 1)]), 1);
        assert_eq!(h.value, expected);
        assert_eq!(h.value.to_string(), "(q*a^-1 - q*a) / (1 - q^2)^1");
    }

    #[test]
    fn stabilizations_of_unknot() {
        let u = homfly_of_braid(&word("", 1));
        assert_eq!(homfly_of_braid(&word("1", 2)), u);
        assert_eq!(homfly_of_braid(&word("-1", 2)), u);
        assert_eq!(homfly_of_braid(&word("1 2 -3", 4)), u);
    }

    #[test]
    fn factor_parity() {
        assert_eq!(normalization_factor(2, 1, 1), LaurentPoly::term(-1, 2, -1));
        assert_eq!(normalization_factor(1, 0, 1), LaurentPoly::term(1, 1, -1));
        assert_eq!(normalization_factor(3, -3, 1), LaurentPoly::term(-1, 3, -6));
    }

    #[test]
    fn trefoil_is_chiral() {
        let right = homfly_of_braid(&word("1 1 1", 2));
        let left = homfly_of_braid(&word("-1 -1 -1", 2));
        assert_ne!(right, left);
        assert_eq!(homfly_of_braid(&word("1 1 1", 2).stabilize(Sign::Negative)), right);
    }
}
