//! Traces of looped coxeter braids and the three-term recursion they satisfy:
//!
//! ```text
//! Tr(LCB_n) = (-q - q^-3) Tr(LCB_{n-1}) - q^-2 Tr(LCB_{n-2}),   n >= 4
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use serde::Serialize;

use super::homfly::{homfly_of_braid, normalization_factor, writhe_sign};
use super::jones::mirror_branch;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, TraceValue};
use crate::trace::trace_of_braid;

/// One verified identity, in the shape shared by text and JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckRecord {
    pub name: String,
    pub n: usize,
    pub pass: bool,
    pub lhs: TraceValue,
    pub rhs: TraceValue,
    pub epsilon: i32,
    pub mirror_branch: String,
}

impl CheckRecord {
    fn new(name: &str, n: usize, lhs: TraceValue, rhs: TraceValue) -> Self {
        CheckRecord {
            name: name.to_string(),
            n,
            pass: lhs == rhs,
            lhs,
            rhs,
            epsilon: writhe_sign(),
            mirror_branch: mirror_branch().name().to_string(),
        }
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "pass" } else { "FAIL" };
        write!(f, "{} n={}: {status}", self.name, self.n)?;
        if !self.pass {
            write!(f, "\n  lhs = {}\n  rhs = {}", self.lhs, self.rhs)?;
        }
        Ok(())
    }
}

static LCB_TRACES: Mutex<BTreeMap<usize, TraceValue>> = Mutex::new(BTreeMap::new());

/// `Tr(LCB_n)`, computed from the braid word and cached per `n`.
pub fn lcb_trace(n: usize) -> Result<TraceValue> {
    if n < 2 {
        return Err(Error::Domain("looped coxeter braids start at n = 2".into()));
    }
    if let Some(v) = LCB_TRACES.lock().ok().and_then(|m| m.get(&n).cloned()) {
        return Ok(v);
    }
    let v = trace_of_braid(&BraidWord::looped_coxeter(n)?);
    if let Ok(mut m) = LCB_TRACES.lock() {
        m.entry(n).or_insert_with(|| v.clone());
    }
    Ok(v)
}

/// Right-hand side of the recursion from the two previous traces.
pub fn lcb_recursion_rhs(prev: &TraceValue, prev2: &TraceValue) -> TraceValue {
    let c1 = LaurentPoly::from_terms([(-1, 1, 0), (-1, -3, 0)]);
    let c2 = LaurentPoly::term(-1, -2, 0);
    &prev.scale(&c1) + &prev2.scale(&c2)
}

/// Checks the recursion for every `n` in `n_min..=n_max`.
///
/// Ranks are traced concurrently; records come back in ascending `n`.
pub fn verify_lcb_recursion(n_min: usize, n_max: usize) -> Result<Vec<CheckRecord>> {
    if n_min < 4 {
        return Err(Error::Domain(format!(
            "the recursion is stated for n >= 4, got n_min = {n_min}"
        )));
    }
    if n_max < n_min {
        return Err(Error::Domain(format!("empty range {n_min}..={n_max}")));
    }
    // resolve the calibrations before spawning
    writhe_sign();
    mirror_branch();
    let traces: Vec<Result<TraceValue>> = std::thread::scope(|s| {
        let handles: Vec<_> = (n_min - 2..=n_max)
            .map(|n| s.spawn(move || lcb_trace(n)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("trace worker panicked"))
            .collect()
    });
    let traces = traces.into_iter().collect::<Result<Vec<_>>>()?;
    Ok((n_min..=n_max)
        .map(|n| {
            let i = n - (n_min - 2);
            let rhs = lcb_recursion_rhs(&traces[i - 1], &traces[i - 2]);
            CheckRecord::new("lcb-recursion", n, traces[i].clone(), rhs)
        })
        .collect())
}

/// Compares the HOMFLY of the looped coxeter closure with
/// `(q a^-1)^n (-a)^(ε(3n - 4)) Tr(LCB_n)`.
pub fn lcb_homfly_check(n: usize) -> Result<CheckRecord> {
    let word = BraidWord::looped_coxeter(n)?;
    let lhs = homfly_of_braid(&word).value;
    let writhe = 3 * n as i64 - 4;
    let rhs = lcb_trace(n)?.scale(&normalization_factor(n, writhe, writhe_sign()));
    Ok(CheckRecord::new("lcb-homfly", n, lhs, rhs))
}
