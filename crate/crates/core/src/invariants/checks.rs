//! Seeded property suites over random braids: Markov invariance, the split
//! union law and the skein relations. Used by the `selftest` command and the
//! acceptance tests.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::homfly::{homfly_of_braid, writhe_sign};
use super::jones::{jones_of_braid, JonesValue};
use crate::braid::{BraidWord, Sign};
use crate::laurent::{LaurentPoly, TraceValue};
use crate::trace::trace_of_braid;

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub samples: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str, samples: usize) -> Self {
        SuiteReport {
            name: name.to_string(),
            samples,
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(
            f,
            "{}: {status} ({} samples, {} checks, {} failures)",
            self.name,
            self.samples,
            self.checks,
            self.failures.len()
        )?;
        for fail in &self.failures {
            write!(f, "\n  {fail}")?;
        }
        Ok(())
    }
}

fn random_index<R: Rng>(rng: &mut R, rank: usize) -> i32 {
    let i = rng.gen_range(1..rank as i32);
    if rng.gen_bool(0.5) {
        i
    } else {
        -i
    }
}

/// HOMFLY invariance under conjugation, both stabilizations, free reduction
/// and braid relation rewrites, for random words of rank 2..=`max_rank` and
/// length up to `max_len`. Jones invariance is checked on the same moves.
pub fn markov_suite(seed: u64, samples: usize, max_rank: usize, max_len: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("markov-invariance", samples);
    for _ in 0..samples {
        let rank = rng.gen_range(2..=max_rank);
        let len = rng.gen_range(0..=max_len);
        let w = BraidWord::random(&mut rng, rank, len);
        let h = homfly_of_braid(&w);
        let v = jones_of_braid(&w);

        let g = random_index(&mut rng, rank);
        let moved = [
            ("conjugation", w.conjugate(g).expect("index in range")),
            ("positive stabilization", w.stabilize(Sign::Positive)),
            ("negative stabilization", w.stabilize(Sign::Negative)),
            ("free reduction", w.free_reduce()),
            ("relation rewrite", w.scramble(&mut rng, 8)),
        ];
        for (what, m) in moved {
            report.check(homfly_of_braid(&m) == h, || {
                format!("HOMFLY changed under {what}: [{w}] (rank {rank}) -> [{m}] (rank {})", m.rank())
            });
            report.check(jones_of_braid(&m) == v, || {
                format!("Jones changed under {what}: [{w}] -> [{m}]")
            });
        }
    }
    report
}

/// Adding a disjoint strand multiplies the trace by `δ` and the Jones
/// polynomial by `(t - t^-1)/(t^{-1/2} - t^{1/2})`.
pub fn split_union_suite(seed: u64, samples: usize, max_rank: usize, max_len: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("split-union", samples);
    let factor = JonesValue::split_unknot_factor();
    for _ in 0..samples {
        let rank = rng.gen_range(1..=max_rank);
        let len = rng.gen_range(0..=max_len);
        let w = BraidWord::random(&mut rng, rank, len);
        let split = w.shift_disjoint();
        report.check(
            trace_of_braid(&split) == &trace_of_braid(&w) * &TraceValue::delta(),
            || format!("trace split-union law fails for [{w}] at rank {rank}"),
        );
        let ok = match (jones_of_braid(&split), jones_of_braid(&w)) {
            (Ok(vs), Ok(v)) => vs == v.mul(&factor),
            _ => false,
        };
        report.check(ok, || format!("Jones split-union law fails for [{w}] at rank {rank}"));
    }
    report
}

/// Skein relations at crossing `±i` inserted between random words `u`, `v`:
///
/// ```text
/// a^{-ε} H(u σ_i v) - a^{ε} H(u σ_i^-1 v) = (q^-1 - q) H(u v)
/// t^-1 V(u σ_i v) - t V(u σ_i^-1 v) + (t^{-1/2} - t^{1/2}) V(u v) = 0
/// ```
pub fn skein_suite(seed: u64, samples: usize, max_rank: usize, max_len: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("skein", samples);
    let eps = writhe_sign();
    for _ in 0..samples {
        let rank = rng.gen_range(2..=max_rank);
        let (lu, lv) = (rng.gen_range(0..=max_len / 2), rng.gen_range(0..=max_len / 2));
        let u = BraidWord::random(&mut rng, rank, lu);
        let v = BraidWord::random(&mut rng, rank, lv);
        let i = rng.gen_range(1..rank as i32);
        let join = |mid: &[i32]| {
            let mut l = u.letters().to_vec();
            l.extend_from_slice(mid);
            l.extend_from_slice(v.letters());
            BraidWord::new(rank, l).expect("letters in range")
        };
        let (plus, minus, zero) = (join(&[i]), join(&[-i]), join(&[]));

        let hp = homfly_of_braid(&plus).value;
        let hm = homfly_of_braid(&minus).value;
        let h0 = homfly_of_braid(&zero).value;
        let lhs = &hp.scale(&LaurentPoly::a_pow(-eps)) - &hm.scale(&LaurentPoly::a_pow(eps));
        let rhs = h0.scale(&-LaurentPoly::q_minus_q_inv());
        report.check(lhs == rhs, || format!("HOMFLY skein fails for [{plus}] / [{minus}] / [{zero}]"));

        let ok = match (jones_of_braid(&plus), jones_of_braid(&minus), jones_of_braid(&zero)) {
            (Ok(vp), Ok(vm), Ok(v0)) => {
                let sum = vp.mul(&JonesValue::term(1, -2)).as_poly()
                    - vm.mul(&JonesValue::term(1, 2)).as_poly()
                    + v0.mul(&JonesValue::from_terms([(1, -1), (-1, 1)])).as_poly();
                sum.is_zero()
            }
            _ => false,
        };
        report.check(ok, || format!("Jones skein fails for [{plus}] / [{minus}] / [{zero}]"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let m = markov_suite(1, 15, 4, 6);
        assert!(m.passed(), "{m}");
        assert_eq!(m.checks, 15 * 10);
        let s = split_union_suite(1, 15, 3, 6);
        assert!(s.passed(), "{s}");
        let k = skein_suite(1, 15, 4, 6);
        assert!(k.passed(), "{k}");
    }

    #[test]
    fn report_display() {
        let mut r = SuiteReport::new("demo", 1);
        r.check(false, || "broken".into());
        assert_eq!(r.to_string(), "demo: FAIL (1 samples, 1 checks, 1 failures)\n  broken");
    }
}
