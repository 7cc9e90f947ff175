//! Reduced words in the free group on `x1, x2, x3, ...`.
//!
//! Words are stored run-length encoded: a word is a sequence of syllables
//! `x_i^k` with `k != 0` and no two neighbouring syllables on the same
//! generator. Every group element has exactly one such representation, so
//! equality of elements is structural equality of [`FreeWord`] values.

use std::fmt;

use crate::error::{Error, Result};

/// A power `x_index^exponent` of a single generator.
///
/// `index >= 1`, `exponent != 0` and `exponent != i64::MIN`, so a syllable
/// can always be inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    index: usize,
    exponent: i64,
}

impl Syllable {
    pub fn new(index: usize, exponent: i64) -> Option<Self> {
        (index >= 1 && exponent != 0 && exponent != i64::MIN)
            .then_some(Syllable { index, exponent })
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn exponent(self) -> i64 {
        self.exponent
    }

    pub fn inverse(self) -> Self {
        Syllable {
            index: self.index,
            exponent: -self.exponent,
        }
    }
}

/// Incremental free reduction over a stack of syllables.
///
/// The stack is reduced after every push, so appending a syllable touches at
/// most the top element.
#[derive(Debug, Default, Clone)]
pub(crate) struct Reducer {
    stack: Vec<Syllable>,
}

impl Reducer {
    pub(crate) fn with_capacity(n: usize) -> Self {
        Reducer {
            stack: Vec::with_capacity(n),
        }
    }

    pub(crate) fn push(&mut self, index: usize, exponent: i64) -> Result<()> {
        if index == 0 {
            return Err(Error::ZeroIndex);
        }
        if exponent == 0 {
            return Ok(());
        }
        match self.stack.last_mut() {
            Some(top) if top.index == index => {
                let merged = top
                    .exponent
                    .checked_add(exponent)
                    .filter(|&e| e != i64::MIN)
                    .ok_or(Error::ExponentOverflow { index })?;
                if merged == 0 {
                    self.stack.pop();
                } else {
                    top.exponent = merged;
                }
            }
            _ => {
                if exponent == i64::MIN {
                    return Err(Error::ExponentOverflow { index });
                }
                self.stack.push(Syllable { index, exponent });
            }
        }
        Ok(())
    }

    pub(crate) fn push_syllable(&mut self, s: Syllable) -> Result<()> {
        self.push(s.index, s.exponent)
    }

    pub(crate) fn extend(&mut self, word: &FreeWord) -> Result<()> {
        word.syllables
            .iter()
            .try_for_each(|&s| self.push_syllable(s))
    }

    pub(crate) fn len(&self) -> usize {
        self.stack.len()
    }

    pub(crate) fn finish(self) -> FreeWord {
        FreeWord {
            syllables: self.stack,
        }
    }
}

/// A reduced element of the free group `F`. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    syllables: Vec<Syllable>,
}

/// The three shapes a member of `W` can take, split around its `x1` syllables.
///
/// `u` and `v` never contain `x1`; `z` is whatever lies strictly between the
/// first and the last `x1` syllable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WShape {
    /// No `x1` at all: the word lies in `G⁻`.
    GMinus,
    /// `u · x1^m · v`.
    Single { u: FreeWord, m: i64, v: FreeWord },
    /// `u · x1^m · z · x1^n · v`.
    Double {
        u: FreeWord,
        m: i64,
        z: FreeWord,
        n: i64,
        v: FreeWord,
    },
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    /// The generator `x_index`.
    ///
    /// # Panics
    /// If `index == 0`.
    pub fn generator(index: usize) -> Self {
        Self::power(index, 1)
    }

    /// `x_index^exponent`; the identity when `exponent == 0`.
    ///
    /// # Panics
    /// If `index == 0` or `exponent == i64::MIN`.
    pub fn power(index: usize, exponent: i64) -> Self {
        assert!(index >= 1, "generator index must be at least 1");
        if exponent == 0 {
            return Self::identity();
        }
        let s = Syllable::new(index, exponent).expect("exponent out of range");
        FreeWord { syllables: vec![s] }
    }

    /// Freely reduces an arbitrary sequence of `(index, exponent)` pairs.
    ///
    /// Zero exponents are dropped and equal neighbours merged, cascading until
    /// the result is reduced.
    pub fn reduce<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut r = Reducer::default();
        for (index, exponent) in raw {
            r.push(index, exponent)?;
        }
        Ok(r.finish())
    }

    pub fn mul(&self, other: &FreeWord) -> Result<Self> {
        let mut r = Reducer::with_capacity(self.len() + other.len());
        r.extend(self)?;
        r.extend(other)?;
        Ok(r.finish())
    }

    pub fn inv(&self) -> Self {
        FreeWord {
            syllables: self.syllables.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// `x1 · self · x1^-1`.
    pub fn conjugate_by_x1(&self) -> Result<Self> {
        let mut r = Reducer::with_capacity(self.len() + 2);
        r.push(1, 1)?;
        r.extend(self)?;
        r.push(1, -1)?;
        Ok(r.finish())
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Length counted in letters `x_i^{±1}`.
    pub fn letter_len(&self) -> u128 {
        self.syllables
            .iter()
            .map(|s| u128::from(s.exponent.unsigned_abs()))
            .sum()
    }

    pub fn max_index(&self) -> usize {
        self.syllables.iter().map(|s| s.index).max().unwrap_or(0)
    }

    fn ends(&self) -> Option<(Syllable, Syllable)> {
        Some((*self.syllables.first()?, *self.syllables.last()?))
    }

    /// Membership in `W`: nontrivial, neither beginning nor ending with `x1^{±k}`.
    pub fn in_w(&self) -> bool {
        self.ends()
            .is_some_and(|(first, last)| first.index != 1 && last.index != 1)
    }

    /// Membership in `G⁻`: nontrivial and built from `x2, x3, ...` only.
    pub fn in_g_minus(&self) -> bool {
        !self.is_identity() && self.syllables.iter().all(|s| s.index >= 2)
    }

    /// Membership in the subgroup generated by `x1` and `x2`.
    pub fn in_f2(&self) -> bool {
        self.syllables.iter().all(|s| s.index <= 2)
    }

    /// Membership in `Z`: nontrivial, first and last syllables on `x3` or above.
    /// A one-syllable word qualifies iff its index is at least 3.
    pub fn in_z(&self) -> bool {
        self.ends()
            .is_some_and(|(first, last)| first.index >= 3 && last.index >= 3)
    }

    /// If `self = x1 · w · x1^-1` with `w ∈ W`, returns `w`.
    ///
    /// Since `w` neither starts nor ends on `x1`, the product is already
    /// reduced and the test only has to look at the outer syllables.
    pub fn strip_x1_conjugate(&self) -> Option<FreeWord> {
        let n = self.syllables.len();
        if n < 3 {
            return None;
        }
        let (first, last) = self.ends()?;
        if first != Syllable::new(1, 1)? || last != Syllable::new(1, -1)? {
            return None;
        }
        let inner = FreeWord {
            syllables: self.syllables[1..n - 1].to_vec(),
        };
        inner.in_w().then_some(inner)
    }

    /// Splits a member of `W` around its first and last `x1` syllables.
    /// Returns `None` when `self` is not in `W`.
    pub fn w_shape(&self) -> Option<WShape> {
        if !self.in_w() {
            return None;
        }
        let slice = |r: std::ops::Range<usize>| FreeWord {
            syllables: self.syllables[r].to_vec(),
        };
        let mut ones = self
            .syllables
            .iter()
            .enumerate()
            .filter(|(_, s)| s.index == 1)
            .map(|(p, _)| p);
        let Some(first) = ones.next() else {
            return Some(WShape::GMinus);
        };
        let last = ones.next_back().unwrap_or(first);
        let end = self.syllables.len();
        let m = self.syllables[first].exponent;
        if first == last {
            return Some(WShape::Single {
                u: slice(0..first),
                m,
                v: slice(first + 1..end),
            });
        }
        Some(WShape::Double {
            u: slice(0..first),
            m,
            z: slice(first + 1..last),
            n: self.syllables[last].exponent,
            v: slice(last + 1..end),
        })
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        for (pos, s) in self.syllables.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            match s.exponent {
                1 => write!(f, "x{}", s.index)?,
                k => write!(f, "x{}^{}", s.index, k)?,
            }
        }
        Ok(())
    }
}
