//! The Hecke algebra `H_n` over `Z[q, q^-1]`, presented by braid generators
//! subject to the skein relation `σ_i - σ_i^{-1} = (q - q^{-1})`.
//!
//! Elements are stored in the permutation basis `{T_w : w ∈ S_n}`. Right
//! multiplication by a generator follows
//!
//! ```text
//! T_w T_i = T_{w s_i}                          if l(w s_i) > l(w)
//! T_w T_i = (q - q^-1) T_w + T_{w s_i}         otherwise
//! ```
//!
//! which is the quadratic relation `T_i^2 = (q - q^-1) T_i + 1` pushed through
//! the basis.

use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::braid::{BraidWord, Permutation, Sign};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    rank: usize,
    combo: BTreeMap<Permutation, LaurentPoly>,
}

/// Reduced word of `p` (smallest-descent rule).
pub fn reduced_word(p: &Permutation) -> Vec<usize> {
    p.reduced_word()
}

pub fn perm_length(p: &Permutation) -> usize {
    p.length()
}

fn add_into(map: &mut BTreeMap<Permutation, LaurentPoly>, w: Permutation, c: &LaurentPoly) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl HeckeElement {
    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1, "Hecke algebra rank must be at least 1");
        HeckeElement {
            rank,
            combo: BTreeMap::new(),
        }
    }

    /// `T_e`.
    pub fn identity(rank: usize) -> Self {
        Self::basis(Permutation::identity(rank))
    }

    /// `T_w`.
    pub fn basis(w: Permutation) -> Self {
        let rank = w.rank();
        let mut combo = BTreeMap::new();
        combo.insert(w, LaurentPoly::one());
        HeckeElement { rank, combo }
    }

    /// `T_{s_i}` or its inverse `T_{s_i} - (q - q^-1)`.
    pub fn generator(rank: usize, i: usize, sign: Sign) -> Result<Self> {
        check_index(rank, i)?;
        let mut x = Self::basis(Permutation::identity(rank).mul_simple(i));
        if sign == Sign::Negative {
            add_into(
                &mut x.combo,
                Permutation::identity(rank),
                &-LaurentPoly::q_minus_q_inv(),
            );
        }
        Ok(x)
    }

    /// Builds an element from `(permutation, coefficient)` pairs.
    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Permutation, LaurentPoly)>) -> Result<Self> {
        let mut x = Self::zero(rank);
        for (w, c) in terms {
            if w.rank() != rank {
                return Err(Error::RankMismatch(rank, w.rank()));
            }
            add_into(&mut x.combo, w, &c);
        }
        Ok(x)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.combo.is_empty()
    }

    pub fn len(&self) -> usize {
        self.combo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.combo.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &LaurentPoly)> + '_ {
        self.combo.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.combo.get(w).cloned().unwrap_or_default()
    }

    pub fn involves_a(&self) -> bool {
        self.combo.values().any(LaurentPoly::involves_a)
    }

    /// `self * T_{s_i}`.
    pub fn mul_by_generator(&self, i: usize) -> Result<Self> {
        check_index(self.rank, i)?;
        Ok(self.mul_generator_unchecked(i))
    }

    pub(crate) fn mul_generator_unchecked(&self, i: usize) -> Self {
        let z = LaurentPoly::q_minus_q_inv();
        let mut combo = BTreeMap::new();
        for (w, c) in &self.combo {
            let ws = w.mul_simple(i);
            if w.has_right_descent(i) {
                add_into(&mut combo, w.clone(), &(&z * c));
            }
            add_into(&mut combo, ws, c);
        }
        HeckeElement {
            rank: self.rank,
            combo,
        }
    }

    /// `self * T_{s_i}^{-1} = self * T_{s_i} - (q - q^-1) self`.
    pub fn mul_by_inverse_generator(&self, i: usize) -> Result<Self> {
        check_index(self.rank, i)?;
        Ok(self.mul_inverse_unchecked(i))
    }

    fn mul_inverse_unchecked(&self, i: usize) -> Self {
        let z = LaurentPoly::q_minus_q_inv();
        let mut out = self.mul_generator_unchecked(i);
        for (w, c) in &self.combo {
            add_into(&mut out.combo, w.clone(), &-(&z * c));
        }
        out
    }

    /// `self * T_w`, expanding `T_w` along its reduced word.
    pub fn mul_basis(&self, w: &Permutation) -> Self {
        w.reduced_word()
            .into_iter()
            .fold(self.clone(), |acc, i| acc.mul_generator_unchecked(i))
    }

    /// Algebra product.
    pub fn mul(&self, other: &HeckeElement) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let mut out = Self::zero(self.rank);
        for (w, c) in &other.combo {
            let part = self.mul_basis(w);
            for (v, d) in part.combo {
                add_into(&mut out.combo, v, &(&d * c));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, d) in &self.combo {
            add_into(&mut out.combo, w.clone(), &(d * c));
        }
        out
    }

    /// Image under `H_n -> H_{n+1}`.
    pub fn embed(&self) -> Self {
        HeckeElement {
            rank: self.rank + 1,
            combo: self.combo.iter().map(|(w, c)| (w.embed(), c.clone())).collect(),
        }
    }

    /// Image of a braid word under the quotient map from the braid group.
    pub fn from_braid_word(word: &BraidWord) -> Self {
        word.letters()
            .iter()
            .fold(Self::identity(word.rank()), |acc, &l| {
                let i = l.unsigned_abs() as usize;
                if l > 0 {
                    acc.mul_generator_unchecked(i)
                } else {
                    acc.mul_inverse_unchecked(i)
                }
            })
    }

    /// Sorted `(one-line permutation, explicit coefficient text)` pairs.
    pub fn debug_entries(&self) -> Vec<(String, String)> {
        self.combo
            .iter()
            .map(|(w, c)| (w.one_line(), c.to_canonical_string()))
            .collect()
    }
}

fn check_index(rank: usize, i: usize) -> Result<()> {
    if i == 0 || i >= rank {
        return Err(Error::IndexOutOfRange {
            index: i as i32,
            rank,
        });
    }
    Ok(())
}

impl Add<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.combo {
            add_into(&mut out.combo, w.clone(), c);
        }
        out
    }
}

impl Sub<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self + &rhs.scale(&LaurentPoly::constant(-1))
    }
}

impl Serialize for HeckeElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = self.debug_entries();
        let mut seq = s.serialize_seq(Some(entries.len()))?;
        for e in &entries {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}
