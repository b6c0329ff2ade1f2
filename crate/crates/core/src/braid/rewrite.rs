//! Rewrites by the defining relations of the braid group. Every rewrite
//! yields a word for the same braid, so it must leave any invariant fixed.

use rand::seq::SliceRandom;
use rand::Rng;

use super::BraidWord;

/// A single relation rewrite at a position in a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rewrite {
    /// `σ_i^{±1} σ_j^{±1} -> σ_j^{±1} σ_i^{±1}` at `pos` with `|i - j| >= 2`.
    FarCommute { pos: usize },
    /// `σ_i σ_j σ_i -> σ_j σ_i σ_j` at `pos` with `|i - j| = 1`, all letters
    /// of one sign.
    BraidMove { pos: usize },
    /// Insert `g, -g` before `pos`.
    InsertPair { pos: usize, g: i32 },
    /// Delete a cancelling pair starting at `pos`.
    CancelPair { pos: usize },
}

impl BraidWord {
    /// All rewrites applicable to this word, excluding pair insertions.
    pub fn relation_sites(&self) -> Vec<Rewrite> {
        let l = self.letters();
        let mut sites = Vec::new();
        for pos in 0..l.len().saturating_sub(1) {
            let (x, y) = (l[pos], l[pos + 1]);
            if x.abs().abs_diff(y.abs()) >= 2 {
                sites.push(Rewrite::FarCommute { pos });
            }
            if x == -y {
                sites.push(Rewrite::CancelPair { pos });
            }
            if pos + 2 < l.len() {
                let z = l[pos + 2];
                if x == z && x.signum() == y.signum() && x.abs().abs_diff(y.abs()) == 1 {
                    sites.push(Rewrite::BraidMove { pos });
                }
            }
        }
        sites
    }

    /// Applies a rewrite. Returns `None` when it does not fit the word.
    pub fn apply_rewrite(&self, rw: Rewrite) -> Option<BraidWord> {
        let mut l = self.letters().to_vec();
        match rw {
            Rewrite::FarCommute { pos } => {
                let (x, y) = (*l.get(pos)?, *l.get(pos + 1)?);
                if x.abs().abs_diff(y.abs()) < 2 {
                    return None;
                }
                l.swap(pos, pos + 1);
            }
            Rewrite::BraidMove { pos } => {
                let (x, y, z) = (*l.get(pos)?, *l.get(pos + 1)?, *l.get(pos + 2)?);
                if x != z || x.signum() != y.signum() || x.abs().abs_diff(y.abs()) != 1 {
                    return None;
                }
                l[pos] = y;
                l[pos + 1] = x;
                l[pos + 2] = y;
            }
            Rewrite::InsertPair { pos, g } => {
                if pos > l.len() || g == 0 || g.unsigned_abs() as usize >= self.rank() {
                    return None;
                }
                l.splice(pos..pos, [g, -g]);
            }
            Rewrite::CancelPair { pos } => {
                if *l.get(pos)? != -*l.get(pos + 1)? {
                    return None;
                }
                l.drain(pos..pos + 2);
            }
        }
        self.with_letters(l).ok()
    }

    /// Applies `steps` random relation rewrites, inserting cancelling pairs
    /// when nothing else applies. The result is a word for the same braid.
    pub fn scramble<R: Rng + ?Sized>(&self, rng: &mut R, steps: usize) -> BraidWord {
        let mut w = self.clone();
        if w.rank() < 2 {
            return w;
        }
        for _ in 0..steps {
            let sites = w.relation_sites();
            let rw = match sites.choose(rng) {
                Some(&site) if rng.gen_bool(0.75) => site,
                _ => {
                    let i = rng.gen_range(1..w.rank() as i32);
                    let g = if rng.gen_bool(0.5) { i } else { -i };
                    Rewrite::InsertPair { pos: rng.gen_range(0..=w.len()), g }
                }
            };
            w = w.apply_rewrite(rw).expect("site was computed for this word");
        }
        w
    }
}
