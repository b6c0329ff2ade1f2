//! The Jones–Ocneanu trace `Tr: H_n -> Q(q, a)`.
//!
//! The trace is fixed by three rules: a closed strand contributes
//! `δ = (1 - a^2)/(1 - q^2)`, removing a positive kink contributes `-q^-1`,
//! removing a negative kink contributes `-q^-1 a^2`. On the permutation basis
//! this becomes a rank recursion. Every `w ∈ S_n` factors uniquely as
//! `w = u · s_{n-1} s_{n-2} ... s_k` with `u ∈ S_{n-1}` and lengths adding, so
//!
//! ```text
//! Tr_n(T_w) = δ · Tr_{n-1}(T_w)                          if w(n) = n
//! Tr_n(T_w) = z+ · Tr_{n-1}(T_u T_{n-2} ... T_k)         otherwise
//! Tr_1(T_e) = δ
//! ```
//!
//! The second line uses cyclicity to move `T_{n-2} ... T_k` in front of the
//! single `T_{n-1}`, then the positive Markov rule.
//!
//! Internally a basis trace on `n` strands is stored multiplied by
//! `(1 - q^2)^n`, which is always a Laurent polynomial, so the recursion never
//! divides. Only the final sum is canonicalized.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{BraidWord, Permutation};
use crate::hecke::HeckeElement;
use crate::laurent::{LaurentPoly, TraceValue};

/// The three evaluation constants of the trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceConstants {
    /// Closed strand, `(1 - a^2)/(1 - q^2)`.
    pub delta: TraceValue,
    /// Positive kink, `-q^-1`.
    pub z_pos: LaurentPoly,
    /// Negative kink, `-q^-1 a^2`.
    pub z_neg: LaurentPoly,
}

impl TraceConstants {
    pub fn standard() -> Self {
        TraceConstants {
            delta: TraceValue::delta(),
            z_pos: LaurentPoly::term(-1, -1, 0),
            z_neg: LaurentPoly::term(-1, -1, 2),
        }
    }

    /// `z+ - z- = (q - q^-1) δ`, forced by tracing `T_i - T_i^{-1} = q - q^-1`
    /// against a Markov generator. It fixes which kink factor is which.
    pub fn skein_consistent(&self) -> bool {
        let lhs = TraceValue::from_poly(&self.z_pos - &self.z_neg);
        let rhs = self.delta.scale(&LaurentPoly::q_minus_q_inv());
        lhs == rhs
    }
}

/// `(1 - a^2)`, the numerator of `δ`.
fn one_minus_a2() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 0, 0), (-1, 0, 2)])
}

/// Coset normal form of a permutation relative to `S_{n-1} ⊂ S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalForm {
    /// `w(n) = n`; the coset representative is the identity.
    FixesTop,
    /// `w = u · s_{n-1} s_{n-2} ... s_k` with `u(n) = n` and
    /// `l(w) = l(u) + (n - k)`.
    Coset { u: Permutation, k: usize },
}

/// Splits `w` into its `S_{n-1}` part and its minimal coset representative.
pub fn normal_form_decompose(w: &Permutation) -> NormalForm {
    let n = w.rank();
    let k = w.position_of_max();
    if k == n {
        NormalForm::FixesTop
    } else {
        NormalForm::Coset {
            u: w.remove_max_at(k).embed(),
            k,
        }
    }
}

/// Trace evaluator with a shared memo of basis traces.
///
/// The memo maps a permutation to `Tr_n(T_w) · (1 - q^2)^n`; inserts are
/// idempotent, so concurrent callers may race on a fill without changing any
/// result.
#[derive(Debug)]
pub struct TraceEngine {
    constants: TraceConstants,
    memo: RwLock<HashMap<Permutation, LaurentPoly>>,
}

impl Default for TraceEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl TraceEngine {
    pub fn new() -> Self {
        let constants = TraceConstants::standard();
        assert!(
            constants.skein_consistent(),
            "kink factors are inconsistent with the Hecke skein relation"
        );
        TraceEngine {
            constants,
            memo: RwLock::new(HashMap::new()),
        }
    }

    /// Process-wide engine.
    pub fn shared() -> &'static TraceEngine {
        static ENGINE: OnceLock<TraceEngine> = OnceLock::new();
        ENGINE.get_or_init(TraceEngine::new)
    }

    pub fn constants(&self) -> &TraceConstants {
        &self.constants
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().map(|m| m.len()).unwrap_or(0)
    }

    /// `Tr_n(T_w) · (1 - q^2)^n`.
    fn scaled_basis_trace(&self, w: &Permutation) -> LaurentPoly {
        if let Some(v) = self.memo.read().ok().and_then(|m| m.get(w).cloned()) {
            return v;
        }
        let n = w.rank();
        let value = if n == 1 {
            one_minus_a2()
        } else {
            let k = w.position_of_max();
            let below = w.remove_max_at(k);
            if k == n {
                &one_minus_a2() * &self.scaled_basis_trace(&below)
            } else {
                let mut x = HeckeElement::basis(below);
                for i in (k..n - 1).rev() {
                    x = x.mul_generator_unchecked(i);
                }
                let inner = self.scaled_combination(&x);
                let factor = &self.constants.z_pos * &LaurentPoly::one_minus_q2();
                &factor * &inner
            }
        };
        if let Ok(mut m) = self.memo.write() {
            m.entry(w.clone()).or_insert_with(|| value.clone());
        }
        value
    }

    fn scaled_combination(&self, x: &HeckeElement) -> LaurentPoly {
        x.terms()
            .map(|(w, c)| c * &self.scaled_basis_trace(w))
            .sum()
    }

    /// Trace of a Hecke algebra element, in canonical form.
    pub fn trace(&self, x: &HeckeElement) -> TraceValue {
        TraceValue::new(self.scaled_combination(x), x.rank() as u32)
    }

    /// Trace of the image of a braid word.
    pub fn trace_of_braid(&self, w: &BraidWord) -> TraceValue {
        self.trace(&HeckeElement::from_braid_word(w))
    }
}

/// `Tr(x)` using the shared engine.
pub fn ocneanu_trace(x: &HeckeElement) -> TraceValue {
    TraceEngine::shared().trace(x)
}

/// `Tr` of the closure of `w` using the shared engine.
pub fn trace_of_braid(w: &BraidWord) -> TraceValue {
    TraceEngine::shared().trace_of_braid(w)
}

/// Outcome of [`axiom_check`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub samples: usize,
    pub constants_consistent: bool,
    pub commutativity_checked: usize,
    pub markov_positive_checked: usize,
    pub markov_negative_checked: usize,
    pub inclusion_checked: usize,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.constants_consistent && self.failures.is_empty()
    }
}

/// A random element of `H_n`: a combination of two random braid images
/// with small random Laurent coefficients.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, rank: usize, max_len: usize) -> HeckeElement {
    let mut x = HeckeElement::zero(rank);
    for _ in 0..2 {
        let len = rng.gen_range(0..=max_len);
        let w = BraidWord::random(rng, rank, len);
        let c = LaurentPoly::term(rng.gen_range(-3i64..=3), rng.gen_range(-2..=2), rng.gen_range(-1..=1));
        x = &x + &HeckeElement::from_braid_word(&w).scale(&c);
    }
    x
}

/// Checks the trace axioms on `samples` random elements of rank below
/// `n_max` (so Markov moves stay within rank `n_max`):
/// cyclicity `Tr(xy) = Tr(yx)`, both Markov rules, and the inclusion rule
/// `Tr(ι x) = δ Tr(x)`.
pub fn axiom_check(n_max: usize, samples: usize, seed: u64) -> AxiomReport {
    assert!(n_max >= 2, "need n_max >= 2 for Markov checks");
    let engine = TraceEngine::shared();
    let consts = engine.constants().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AxiomReport {
        samples,
        constants_consistent: consts.skein_consistent(),
        ..Default::default()
    };
    for s in 0..samples {
        let n = rng.gen_range(1..n_max);
        let x = random_element(&mut rng, n, 6);
        let y = random_element(&mut rng, n, 6);
        let tx = engine.trace(&x);

        let xy = engine.trace(&x.mul(&y).expect("equal ranks"));
        let yx = engine.trace(&y.mul(&x).expect("equal ranks"));
        report.commutativity_checked += 1;
        if xy != yx {
            report.failures.push(format!("sample {s}: Tr(xy) != Tr(yx) at rank {n}: {xy} vs {yx}"));
        }

        let lifted = x.embed();
        let pos = engine.trace(&lifted.mul_by_generator(n).expect("index n valid in rank n+1"));
        report.markov_positive_checked += 1;
        if pos != tx.scale(&consts.z_pos) {
            report.failures.push(format!("sample {s}: positive Markov rule fails at rank {n}"));
        }

        let neg = engine.trace(&lifted.mul_by_inverse_generator(n).expect("index n valid"));
        report.markov_negative_checked += 1;
        if neg != tx.scale(&consts.z_neg) {
            report.failures.push(format!("sample {s}: negative Markov rule fails at rank {n}"));
        }

        report.inclusion_checked += 1;
        if engine.trace(&lifted) != &tx * &consts.delta {
            report.failures.push(format!("sample {s}: inclusion rule fails at rank {n}"));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::Sign;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    fn delta() -> TraceValue {
        TraceValue::delta()
    }

    #[test]
    fn constants_are_skein_consistent() {
        assert!(TraceConstants::standard().skein_consistent());
        let swapped = TraceConstants {
            z_pos: LaurentPoly::term(-1, -1, 2),
            z_neg: LaurentPoly::term(-1, -1, 0),
            ..TraceConstants::standard()
        };
        assert!(!swapped.skein_consistent());
    }

    #[test]
    fn basis_trace_examples() {
        assert_eq!(ocneanu_trace(&HeckeElement::identity(1)), delta());
        let s1 = HeckeElement::basis(perm(&[2, 1]));
        assert_eq!(ocneanu_trace(&s1), delta().scale(&LaurentPoly::term(-1, -1, 0)));
        assert_eq!(ocneanu_trace(&HeckeElement::identity(2)), &delta() * &delta());
        let neg = HeckeElement::generator(2, 1, Sign::Negative).unwrap();
        assert_eq!(ocneanu_trace(&neg), delta().scale(&LaurentPoly::term(-1, -1, 2)));
    }

    /// The closed form obtained by inverting one skein step on the two-strand
    /// unlink: `(1/(q - q^-1)) (z+ δ - z- δ)`. Cross-multiplied to stay in the
    /// `(1 - q^2)`-denominator world.
    #[test]
    fn two_strand_unlink_matches_inverted_skein() {
        let c = TraceConstants::standard();
        let rhs = delta().scale(&(&c.z_pos - &c.z_neg));
        let lhs = ocneanu_trace(&HeckeElement::identity(2)).scale(&LaurentPoly::q_minus_q_inv());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn braid_trace_examples() {
        let w = |s: &str, r| BraidWord::parse(s, Some(r)).unwrap();
        assert_eq!(trace_of_braid(&w("", 1)), delta());
        assert_eq!(trace_of_braid(&w("1", 2)), delta().scale(&LaurentPoly::term(-1, -1, 0)));
        // [1,1] = (q - q^-1) T_s1 + T_e
        let expected = &delta().scale(&(&LaurentPoly::q_minus_q_inv() * &LaurentPoly::term(-1, -1, 0)))
            + &(&delta() * &delta());
        assert_eq!(trace_of_braid(&w("1 1", 2)), expected);
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(normal_form_decompose(&Permutation::identity(3)), NormalForm::FixesTop);
        let s2 = perm(&[1, 3, 2]);
        assert_eq!(
            normal_form_decompose(&s2),
            NormalForm::Coset { u: Permutation::identity(3), k: 2 }
        );
        let s1s2 = perm(&[2, 3, 1]);
        assert_eq!(
            normal_form_decompose(&s1s2),
            NormalForm::Coset { u: perm(&[2, 1, 3]), k: 2 }
        );
    }

    /// Brute force over S_1..S_5: rebuild `w` from `u` and the cycle word and
    /// check length additivity.
    #[test]
    fn normal_form_table_brute_force() {
        for n in 1..=5usize {
            let mut count = 0;
            let mut stack = vec![Vec::<usize>::new()];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == n {
                    count += 1;
                    let w = perm(&prefix);
                    match normal_form_decompose(&w) {
                        NormalForm::FixesTop => assert_eq!(w.apply(n), n),
                        NormalForm::Coset { u, k } => {
                            assert_eq!(u.apply(n), n);
                            assert!(k < n);
                            let cycle = (k..n).rev().fold(Permutation::identity(n), |p, i| p.mul_simple(i));
                            assert_eq!(u.compose(&cycle), w);
                            assert_eq!(w.length(), u.length() + (n - k));
                        }
                    }
                    continue;
                }
                for v in 1..=n {
                    if !prefix.contains(&v) {
                        let mut p = prefix.clone();
                        p.push(v);
                        stack.push(p);
                    }
                }
            }
            assert_eq!(count, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn trace_is_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let n = rng.gen_range(1..5);
            let x = random_element(&mut rng, n, 5);
            let y = random_element(&mut rng, n, 5);
            let c1 = LaurentPoly::from_terms([(2, 1, 0), (-1, 0, 1)]);
            let c2 = LaurentPoly::term(3, -2, 0);
            let combo = &x.scale(&c1) + &y.scale(&c2);
            let lhs = ocneanu_trace(&combo);
            let rhs = &ocneanu_trace(&x).scale(&c1) + &ocneanu_trace(&y).scale(&c2);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn axiom_examples() {
        let s1 = HeckeElement::basis(perm(&[2, 1]));
        let g = HeckeElement::generator(2, 1, Sign::Positive).unwrap();
        let ginv = HeckeElement::generator(2, 1, Sign::Negative).unwrap();
        let conj = g.mul(&s1).unwrap().mul(&ginv).unwrap();
        assert_eq!(ocneanu_trace(&conj), ocneanu_trace(&s1));

        let stab = HeckeElement::identity(1).embed().mul_by_generator(1).unwrap();
        let c = TraceConstants::standard();
        assert_eq!(ocneanu_trace(&stab), delta().scale(&c.z_pos));
    }

    #[test]
    fn axiom_check_small_run() {
        let report = axiom_check(4, 25, 5);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.commutativity_checked, 25);
    }

    #[test]
    fn conjugation_and_disjoint_shift() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..30 {
            let n = rng.gen_range(2..5);
            let w = BraidWord::random(&mut rng, n, 7);
            let t = trace_of_braid(&w);
            let g = rng.gen_range(1..n as i32) * if rng.gen_bool(0.5) { 1 } else { -1 };
            assert_eq!(trace_of_braid(&w.conjugate(g).unwrap()), t);
            assert_eq!(trace_of_braid(&w.shift_disjoint()), &delta() * &t);
        }
    }

    #[test]
    fn fresh_engine_agrees_with_shared() {
        let engine = TraceEngine::new();
        let w = BraidWord::parse("1 -2 3 2 -1 3", None).unwrap();
        assert_eq!(engine.trace_of_braid(&w), trace_of_braid(&w));
        assert!(engine.memo_len() > 0);
    }

    #[test]
    fn hecke_image_never_involves_a() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let w = BraidWord::random(&mut rng, 4, 9);
            assert!(!HeckeElement::from_braid_word(&w).involves_a());
        }
    }
}
