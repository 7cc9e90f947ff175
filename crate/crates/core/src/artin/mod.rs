//! Braid words and their action on the free group.
//!
//! The generator `σ_i` acts on `F` by
//!
//! ```text
//! σ_i:    x_i ↦ x_i x_{i+1} x_i⁻¹    x_{i+1} ↦ x_i          x_j ↦ x_j  (j ∉ {i, i+1})
//! σ_i⁻¹:  x_i ↦ x_{i+1}              x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}
//! ```
//!
//! A [`BraidWord`] is read left to right and its first letter acts first, so
//! `apply(b1 ++ b2, w) = apply(b2, apply(b1, w))`. Two braid words denote the
//! same element of `B` exactly when they induce the same automorphism.

mod compressed;

use std::fmt;

use crate::error::{Error, Result};
use crate::freeword::{FreeWord, Reducer};

pub use compressed::{braid_eq_compressed, Automorphism, CompressedWord};

/// Default bound on the number of syllables an image may reach.
pub const DEFAULT_SYLLABLE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// `σ_index` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    index: usize,
    sign: Sign,
}

impl BraidLetter {
    /// # Panics
    /// If `index == 0`.
    pub fn new(index: usize, sign: Sign) -> Self {
        assert!(index >= 1, "braid generator index must be at least 1");
        BraidLetter { index, sign }
    }

    pub fn pos(index: usize) -> Self {
        Self::new(index, Sign::Plus)
    }

    pub fn neg(index: usize) -> Self {
        Self::new(index, Sign::Minus)
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> Self {
        BraidLetter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    pub fn shifted(self, k: usize) -> Self {
        let index = self
            .index
            .checked_add(k)
            .expect("braid generator index overflow");
        BraidLetter {
            index,
            sign: self.sign,
        }
    }

    /// Signed form: `i` for `σ_i`, `-i` for `σ_i⁻¹`.
    pub fn signed(self) -> i64 {
        let i = self.index as i64;
        match self.sign {
            Sign::Plus => i,
            Sign::Minus => -i,
        }
    }
}

/// A literal word in the Artin generators. Never normalized implicitly.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn identity() -> Self {
        BraidWord::default()
    }

    pub fn new(letters: Vec<BraidLetter>) -> Self {
        BraidWord { letters }
    }

    /// Builds a word from signed indices, `[1, -2]` being `σ1 σ2⁻¹`.
    ///
    /// # Panics
    /// On a zero entry.
    pub fn from_signed<I: IntoIterator<Item = i64>>(signed: I) -> Self {
        let letters = signed
            .into_iter()
            .map(|s| {
                let index = usize::try_from(s.unsigned_abs()).expect("index out of range");
                if s > 0 {
                    BraidLetter::pos(index)
                } else {
                    BraidLetter::neg(index)
                }
            })
            .collect();
        BraidWord { letters }
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.index).max().unwrap_or(0)
    }

    pub fn push(&mut self, letter: BraidLetter) {
        self.letters.push(letter);
    }

    pub fn extend_from(&mut self, other: &BraidWord) {
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    /// The shift endomorphism applied `k` times: `σ_i^{±1} ↦ σ_{i+k}^{±1}`.
    pub fn shift(&self, k: usize) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().map(|l| l.shifted(k)).collect(),
        }
    }

    /// The group inverse: letters reversed, signs flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Contains `σ1` at least once and `σ1⁻¹` never. A property of the
    /// literal word only; an element may have other, non-positive spellings.
    pub fn is_sigma1_positive(&self) -> bool {
        let mut seen = false;
        for l in &self.letters {
            if l.index == 1 {
                match l.sign {
                    Sign::Plus => seen = true,
                    Sign::Minus => return false,
                }
            }
        }
        seen
    }

    /// Splits a σ1-positive word `α1 σ1 α2 σ1 ... σ1 αn` into its blocks
    /// `α1, ..., αn`, each free of `σ1^{±1}` (possibly empty).
    pub fn decompose_sigma1(&self) -> Result<Vec<BraidWord>> {
        if !self.is_sigma1_positive() {
            return Err(Error::NotSigma1Positive);
        }
        Ok(self
            .letters
            .split(|l| l.index == 1)
            .map(|block| BraidWord {
                letters: block.to_vec(),
            })
            .collect())
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` pairs. Only ever called explicitly.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<BraidLetter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { letters: out }
    }
}

impl FromIterator<BraidLetter> for BraidWord {
    fn from_iter<T: IntoIterator<Item = BraidLetter>>(iter: T) -> Self {
        BraidWord {
            letters: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (pos, l) in self.letters.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            match l.sign {
                Sign::Plus => write!(f, "s{}", l.index)?,
                Sign::Minus => write!(f, "s{}^-1", l.index)?,
            }
        }
        Ok(())
    }
}

/// Evaluates the action of braid words on free words under a syllable cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArtinAction {
    pub syllable_cap: usize,
}

impl Default for ArtinAction {
    fn default() -> Self {
        ArtinAction {
            syllable_cap: DEFAULT_SYLLABLE_CAP,
        }
    }
}

impl ArtinAction {
    pub fn with_cap(syllable_cap: usize) -> Self {
        ArtinAction { syllable_cap }
    }

    fn check(&self, len: usize) -> Result<()> {
        if len > self.syllable_cap {
            return Err(Error::SyllableCap {
                len,
                cap: self.syllable_cap,
            });
        }
        Ok(())
    }

    pub fn letter_action(&self, letter: BraidLetter, w: &FreeWord) -> Result<FreeWord> {
        let i = letter.index;
        let mut out = Reducer::with_capacity(w.len() + 4);
        for s in w.syllables() {
            let (j, k) = (s.index(), s.exponent());
            match (letter.sign, j) {
                (Sign::Plus, j) if j == i => {
                    out.push(i, 1)?;
                    out.push(i + 1, k)?;
                    out.push(i, -1)?;
                }
                (Sign::Plus, j) if j == i + 1 => out.push(i, k)?,
                (Sign::Minus, j) if j == i => out.push(i + 1, k)?,
                (Sign::Minus, j) if j == i + 1 => {
                    out.push(i + 1, -1)?;
                    out.push(i, k)?;
                    out.push(i + 1, 1)?;
                }
                _ => out.push(j, k)?,
            }
        }
        self.check(out.len())?;
        Ok(out.finish())
    }

    /// Image of `w` under `b`, first letter acting first.
    pub fn apply(&self, b: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
        self.check(w.len())?;
        let mut cur = w.clone();
        for &l in b.letters() {
            cur = self.letter_action(l, &cur)?;
        }
        Ok(cur)
    }

    /// Equality in `B`: both words move only `x1 .. x_{M+1}`, where `M` is the
    /// largest index present, so comparing those images decides equality.
    ///
    /// Images are compared in compressed form, so the syllable cap does not
    /// apply here.
    pub fn braid_eq(&self, a: &BraidWord, b: &BraidWord) -> Result<bool> {
        braid_eq_compressed(a, b)
    }

    /// [`ArtinAction::braid_eq`] computed on explicit images under the cap.
    pub fn braid_eq_flat(&self, a: &BraidWord, b: &BraidWord) -> Result<bool> {
        if a == b {
            return Ok(true);
        }
        let top = a.max_index().max(b.max_index()) + 1;
        for j in 1..=top {
            let x = FreeWord::generator(j);
            if self.apply(a, &x)? != self.apply(b, &x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn letter_action(letter: BraidLetter, w: &FreeWord) -> Result<FreeWord> {
    ArtinAction::default().letter_action(letter, w)
}

pub fn apply(b: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
    ArtinAction::default().apply(b, w)
}

pub fn braid_eq(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    ArtinAction::default().braid_eq(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(pairs: &[(usize, i64)]) -> FreeWord {
        FreeWord::reduce(pairs.iter().copied()).unwrap()
    }

    fn bw(signed: &[i64]) -> BraidWord {
        BraidWord::from_signed(signed.iter().copied())
    }

    #[test]
    fn letter_action_examples() {
        let x1 = FreeWord::generator(1);
        assert_eq!(
            letter_action(BraidLetter::pos(1), &x1).unwrap(),
            fw(&[(1, 1), (2, 1), (1, -1)])
        );
        assert_eq!(
            letter_action(BraidLetter::pos(2), &FreeWord::power(2, 3)).unwrap(),
            fw(&[(2, 1), (3, 3), (2, -1)])
        );
        assert_eq!(
            letter_action(BraidLetter::neg(1), &x1).unwrap(),
            FreeWord::generator(2)
        );
        assert_eq!(letter_action(BraidLetter::pos(3), &x1).unwrap(), x1);
        assert_eq!(
            letter_action(BraidLetter::neg(1), &FreeWord::generator(2)).unwrap(),
            fw(&[(2, -1), (1, 1), (2, 1)])
        );
    }

    #[test]
    fn apply_examples() {
        let x1 = FreeWord::generator(1);
        assert_eq!(
            apply(&bw(&[1, 1]), &x1).unwrap(),
            fw(&[(1, 1), (2, 1), (1, 1), (2, -1), (1, -1)])
        );
        let w = fw(&[(3, 2), (1, -1), (2, 5)]);
        assert_eq!(apply(&BraidWord::identity(), &w).unwrap(), w);
        assert_eq!(apply(&bw(&[1, -1]), &w).unwrap(), w);
    }

    #[test]
    fn apply_is_left_to_right() {
        // σ1 then σ2 on x2: x2 ↦ x1 ↦ x1.  σ2 then σ1: x2 ↦ x2 x3 x2⁻¹ ↦ x1 x3 x1⁻¹.
        let x2 = FreeWord::generator(2);
        assert_eq!(apply(&bw(&[1, 2]), &x2).unwrap(), FreeWord::generator(1));
        assert_eq!(
            apply(&bw(&[2, 1]), &x2).unwrap(),
            fw(&[(1, 1), (3, 1), (1, -1)])
        );
    }

    #[test]
    fn shift_and_inverse_examples() {
        assert_eq!(bw(&[1, -2]).shift(1), bw(&[2, -3]));
        assert_eq!(BraidWord::identity().shift(1), BraidWord::identity());
        assert_eq!(bw(&[1]).shift(2), bw(&[3]));

        assert_eq!(bw(&[1, -2]).inverse(), bw(&[2, -1]));
        assert_eq!(BraidWord::identity().inverse(), BraidWord::identity());
        assert_eq!(bw(&[1]).inverse(), bw(&[-1]));
    }

    #[test]
    fn braid_eq_examples() {
        assert!(braid_eq(&bw(&[1, 2, 1]), &bw(&[2, 1, 2])).unwrap());
        assert!(braid_eq(&bw(&[1, 3]), &bw(&[3, 1])).unwrap());
        assert!(!braid_eq(&bw(&[1]), &bw(&[2])).unwrap());
        assert!(braid_eq(&BraidWord::identity(), &BraidWord::identity()).unwrap());
        assert!(braid_eq(&bw(&[2, -2]), &BraidWord::identity()).unwrap());
        assert!(!braid_eq(&bw(&[1, 2]), &bw(&[2, 1])).unwrap());
    }

    #[test]
    fn sigma1_positivity() {
        assert!(bw(&[-2, 1, 3]).is_sigma1_positive());
        assert!(!bw(&[2, 3]).is_sigma1_positive());
        assert!(!bw(&[1, -1]).is_sigma1_positive());
        assert!(!BraidWord::identity().is_sigma1_positive());
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            bw(&[2, 1, -3, 1]).decompose_sigma1().unwrap(),
            vec![bw(&[2]), bw(&[-3]), bw(&[])]
        );
        assert_eq!(bw(&[1]).decompose_sigma1().unwrap(), vec![bw(&[]), bw(&[])]);
        assert_eq!(
            bw(&[1, 2]).decompose_sigma1().unwrap(),
            vec![bw(&[]), bw(&[2])]
        );
        assert_eq!(
            bw(&[2, -1, 1]).decompose_sigma1(),
            Err(Error::NotSigma1Positive)
        );
    }

    #[test]
    fn free_reduce_cancels_pairs() {
        assert_eq!(bw(&[1, 2, -2, -1, 3]).free_reduce(), bw(&[3]));
        assert_eq!(bw(&[1, 1]).free_reduce(), bw(&[1, 1]));
    }

    #[test]
    fn cap_is_enforced() {
        let action = ArtinAction::with_cap(4);
        let b = bw(&[1, 2, 1, 2, 1, 2]);
        let err = action.apply(&b, &FreeWord::generator(1)).unwrap_err();
        assert!(matches!(err, Error::SyllableCap { cap: 4, .. }));
        assert!(err.is_resource());
    }

    #[test]
    fn display() {
        assert_eq!(bw(&[2, -1]).to_string(), "s2 s1^-1");
        assert_eq!(BraidWord::identity().to_string(), "1");
    }
}
