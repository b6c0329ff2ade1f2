use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
///
/// Products compose right to left as functions: `(p * r)(j) = p(r(j))`, so
/// right multiplication by the simple transposition `s_i` swaps the entries
/// in positions `i` and `i + 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // zero-based images
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "rank {n} too large");
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from one-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::Domain(format!("rank {n} too large")));
        }
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Domain(format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// One-based image of the one-based point `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] as usize + 1
    }

    /// One-based images in order.
    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&v| v as usize + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self * s_i` for `1 <= i < n`.
    pub fn mul_simple(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// True if `length(self * s_i) < length(self)`, i.e. `self(i) > self(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Reduced word, extracting the smallest right descent at each step.
    ///
    /// The returned word `[i_1, ..., i_l]` satisfies
    /// `self = s_{i_1} ... s_{i_l}` with `l = self.length()`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut word = Vec::with_capacity(p.length());
        while let Some(i) = (1..p.rank()).find(|&i| p.has_right_descent(i)) {
            word.push(i);
            p = p.mul_simple(i);
        }
        word.reverse();
        word
    }

    /// Function composition `self * other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.rank(), other.rank());
        Permutation {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_type().len()
    }

    /// Conjugacy in `S_n` is equality of cycle types.
    pub fn is_conjugate_to(&self, other: &Permutation) -> bool {
        self.rank() == other.rank() && self.cycle_type() == other.cycle_type()
    }

    /// Image under the inclusion `S_n -> S_{n+1}` fixing the new point.
    pub fn embed(&self) -> Permutation {
        let mut images = self.images.clone();
        images.push(images.len() as u8);
        Permutation { images }
    }

    /// One-based position holding the value `n`, i.e. `self^{-1}(n)`.
    pub fn position_of_max(&self) -> usize {
        let top = (self.images.len() - 1) as u8;
        self.images.iter().position(|&v| v == top).map_or(0, |p| p + 1)
    }

    /// Removes the entry at one-based position `k` (which must hold `n`) and
    /// returns the remaining one-line sequence as a permutation of `{1..n-1}`.
    pub(crate) fn remove_max_at(&self, k: usize) -> Permutation {
        debug_assert_eq!(self.images[k - 1] as usize, self.images.len() - 1);
        let mut images = self.images.clone();
        images.remove(k - 1);
        Permutation { images }
    }

    /// `n`-strand one-line text, e.g. `[2 3 1]`.
    pub fn one_line(&self) -> String {
        let parts: Vec<String> = self.images().map(|v| v.to_string()).collect();
        format!("[{}]", parts.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.images())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Permutation::from_images(&images).map_err(serde::de::Error::custom)
    }
}
