use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::error::{Error, Result};

/// A braid on `rank` strands as a word in the Artin generators.
///
/// A letter `i > 0` is the positive crossing `σ_i`, `-i` its inverse. Letters
/// are read left to right, which is bottom to top in the braid diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBraidWord")]
pub struct BraidWord {
    rank: usize,
    letters: Vec<i32>,
}

#[derive(Deserialize)]
struct RawBraidWord {
    rank: usize,
    letters: Vec<i32>,
}

impl TryFrom<RawBraidWord> for BraidWord {
    type Error = Error;
    fn try_from(raw: RawBraidWord) -> Result<Self> {
        BraidWord::new(raw.rank, raw.letters)
    }
}

/// Crossing sign for stabilization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn apply(self, index: i32) -> i32 {
        match self {
            Sign::Positive => index,
            Sign::Negative => -index,
        }
    }
}

impl BraidWord {
    pub fn new(rank: usize, letters: Vec<i32>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Domain("braid rank must be at least 1".into()));
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::Parse("zero is not a braid letter".into()));
            }
            if l.unsigned_abs() as usize >= rank {
                return Err(Error::Rank { letter: l, rank });
            }
        }
        Ok(BraidWord { rank, letters })
    }

    /// The empty braid on `rank` strands.
    pub fn identity(rank: usize) -> Result<Self> {
        Self::new(rank, Vec::new())
    }

    /// Parses comma- or whitespace-separated nonzero integers.
    ///
    /// Without a hint the rank is one more than the largest generator index,
    /// or 1 for the empty word.
    pub fn parse(text: &str, rank_hint: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let l: i32 = token
                .parse()
                .map_err(|_| Error::Parse(format!("`{token}` is not an integer")))?;
            if l == 0 {
                return Err(Error::Parse("zero is not a braid letter".into()));
            }
            letters.push(l);
        }
        let rank = match rank_hint {
            Some(r) => r,
            None => letters
                .iter()
                .map(|l| l.unsigned_abs() as usize + 1)
                .max()
                .unwrap_or(1),
        };
        Self::new(rank, letters)
    }

    /// `σ_1 σ_2 ... σ_{n-1}`, whose closure is the unknot.
    pub fn coxeter(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain("coxeter braid needs n >= 1".into()));
        }
        Self::new(n, (1..n as i32).collect())
    }

    /// The coxeter braid on the first `n - 1` strands followed by the last
    /// strand looping positively around all the others:
    /// `[1..n-2] ++ [n-1, ..., 1] ++ [1, ..., n-1]`, with `3n - 4` letters.
    pub fn looped_coxeter(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(
                "looped coxeter braid needs n >= 2 (there is none of rank 1)".into(),
            ));
        }
        let top = n as i32 - 1;
        let mut letters: Vec<i32> = (1..top).collect();
        letters.extend((1..=top).rev());
        letters.extend(1..=top);
        Self::new(n, letters)
    }

    /// Uniform random word with `length` letters drawn from `±1..±(rank-1)`.
    /// Rank 1 has no generators, so the result is empty.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, rank: usize, length: usize) -> Self {
        assert!(rank >= 1);
        if rank == 1 {
            return BraidWord { rank, letters: Vec::new() };
        }
        let letters = (0..length)
            .map(|_| {
                let i = rng.gen_range(1..rank as i32);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord { rank, letters }
    }

    /// Reproducible random word from a seed.
    pub fn random_seeded(seed: u64, rank: usize, length: usize) -> Self {
        Self::random(&mut ChaCha8Rng::seed_from_u64(seed), rank, length)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Positive letters minus negative letters.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Underlying permutation: `s_{|e_1|} s_{|e_2|} ...`, signs ignored.
    pub fn permutation(&self) -> Permutation {
        self.letters
            .iter()
            .fold(Permutation::identity(self.rank), |p, &l| {
                p.mul_simple(l.unsigned_abs() as usize)
            })
    }

    /// Number of link components of the closure.
    pub fn closure_component_count(&self) -> usize {
        self.permutation().cycle_count()
    }

    fn check_index(&self, g: i32) -> Result<()> {
        if g == 0 || g.unsigned_abs() as usize >= self.rank {
            return Err(Error::IndexOutOfRange { index: g, rank: self.rank });
        }
        Ok(())
    }

    /// `[g] ++ self ++ [-g]`.
    pub fn conjugate(&self, g: i32) -> Result<Self> {
        self.check_index(g)?;
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        letters.push(-g);
        Ok(BraidWord { rank: self.rank, letters })
    }

    /// Markov stabilization: append `σ_n^{±1}` on a new strand `n + 1`.
    pub fn stabilize(&self, sign: Sign) -> Self {
        let mut letters = self.letters.clone();
        letters.push(sign.apply(self.rank as i32));
        BraidWord { rank: self.rank + 1, letters }
    }

    /// The same word on one more strand; the closure gains a split unknot.
    pub fn shift_disjoint(&self) -> Self {
        BraidWord {
            rank: self.rank + 1,
            letters: self.letters.clone(),
        }
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord { rank: self.rank, letters: stack }
    }

    /// Concatenation `self` then `other`.
    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { rank: self.rank, letters })
    }

    /// Replaces the letters, keeping the rank.
    pub fn with_letters(&self, letters: Vec<i32>) -> Result<Self> {
        Self::new(self.rank, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let w = BraidWord::parse("1 2 3", None).unwrap();
        assert_eq!((w.rank(), w.letters()), (4, &[1, 2, 3][..]));
        let w = BraidWord::parse("1 -1", Some(3)).unwrap();
        assert_eq!((w.rank(), w.letters()), (3, &[1, -1][..]));
        assert!(matches!(BraidWord::parse("0", None), Err(Error::Parse(_))));
    }

    #[test]
    fn parse_separators_and_errors() {
        let w = BraidWord::parse(" 1,-2 ,\t3 ", None).unwrap();
        assert_eq!(w.letters(), &[1, -2, 3]);
        assert_eq!(BraidWord::parse("", None).unwrap().rank(), 1);
        assert!(matches!(BraidWord::parse("1 x", None), Err(Error::Parse(_))));
        assert!(matches!(BraidWord::parse("1 3", Some(3)), Err(Error::Rank { letter: 3, rank: 3 })));
        assert!(BraidWord::parse("", Some(0)).is_err());
    }

    #[test]
    fn coxeter_examples() {
        assert_eq!(BraidWord::coxeter(4).unwrap().letters(), &[1, 2, 3]);
        assert!(BraidWord::coxeter(1).unwrap().is_empty());
        assert_eq!(BraidWord::coxeter(2).unwrap().letters(), &[1]);
        assert!(BraidWord::coxeter(0).is_err());
    }

    #[test]
    fn looped_coxeter_examples() {
        let w = BraidWord::looped_coxeter(2).unwrap();
        assert_eq!(w.letters(), &[1, 1]);
        assert_eq!(w.closure_component_count(), 2);
        let w = BraidWord::looped_coxeter(5).unwrap();
        assert_eq!(w.len(), 11);
        assert_eq!(w.letters(), &[1, 2, 3, 4, 3, 2, 1, 1, 2, 3, 4]);
        assert_eq!(w.writhe(), 11);
        assert!(matches!(BraidWord::looped_coxeter(1), Err(Error::Domain(_))));
    }

    #[test]
    fn looped_coxeter_shape() {
        for n in 2..=12 {
            let w = BraidWord::looped_coxeter(n).unwrap();
            assert_eq!(w.len(), 3 * n - 4);
            assert!(w.letters().iter().all(|&l| l > 0));
            assert_eq!(w.closure_component_count(), 2);
        }
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(BraidWord::parse("1 2 3", None).unwrap().writhe(), 3);
        assert_eq!(BraidWord::parse("1 -1", None).unwrap().writhe(), 0);
    }

    #[test]
    fn permutation_examples() {
        let w = BraidWord::parse("1", Some(2)).unwrap();
        assert_eq!(w.permutation(), Permutation::from_images(&[2, 1]).unwrap());
        assert!(BraidWord::parse("1 -1", None).unwrap().permutation().is_identity());
        for n in 1..=7 {
            let c = BraidWord::coxeter(n).unwrap().permutation();
            assert_eq!(c.cycle_type(), vec![n]);
            let images: Vec<usize> = c.images().collect();
            let expected: Vec<usize> = (2..=n).chain(std::iter::once(1)).collect();
            if n > 1 {
                assert_eq!(images, expected);
            }
        }
    }

    #[test]
    fn component_counts() {
        for n in 1..=7 {
            assert_eq!(BraidWord::coxeter(n).unwrap().closure_component_count(), 1);
        }
        assert_eq!(BraidWord::identity(3).unwrap().closure_component_count(), 3);
    }

    #[test]
    fn moves_examples() {
        let w = BraidWord::parse("1 -1", None).unwrap();
        assert!(w.free_reduce().is_empty());
        let w = BraidWord::parse("1", Some(2)).unwrap();
        let s = w.stabilize(Sign::Positive);
        assert_eq!((s.rank(), s.letters()), (3, &[1, 2][..]));
        let d = w.shift_disjoint();
        assert_eq!((d.rank(), d.letters()), (3, &[1][..]));
        let c = w.conjugate(-1).unwrap();
        assert_eq!(c.letters(), &[-1, 1, 1]);
        assert!(w.conjugate(2).is_err());
        assert!(w.conjugate(0).is_err());
    }

    #[test]
    fn free_reduce_nested() {
        let w = BraidWord::parse("2 1 -1 -2 3 1 -3 3 -1", None).unwrap();
        assert_eq!(w.free_reduce().letters(), &[3]);
    }

    #[test]
    fn json_shape() {
        let w = BraidWord::parse("1 -2", None).unwrap();
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"rank":3,"letters":[1,-2]}"#);
        assert_eq!(serde_json::from_str::<BraidWord>(&json).unwrap(), w);
        assert!(serde_json::from_str::<BraidWord>(r#"{"rank":2,"letters":[2]}"#).is_err());
    }

    #[test]
    fn random_is_reproducible() {
        let a = BraidWord::random_seeded(7, 4, 10);
        assert_eq!(a, BraidWord::random_seeded(7, 4, 10));
        assert_eq!(a.len(), 10);
        assert!(BraidWord::random_seeded(7, 1, 10).is_empty());
    }
}
