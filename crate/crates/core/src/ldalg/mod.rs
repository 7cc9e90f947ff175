//! The left self-distributive operation on braid words and the
//! irreflexivity check built on it.
//!
//! `a * b = a · s(b) · σ1 · s(a⁻¹)` where `s` shifts every generator index up
//! by one. The operation satisfies `a * (b * c) = (a * b) * (a * c)` in `B`,
//! and a left fold `((a * b1) * b2) * ... * bk` always equals `a` followed by
//! a word with at least one `σ1` and no `σ1⁻¹`, which therefore moves `x1`.

mod oracle;

use std::fmt;

pub use oracle::{ld_equiv_oracle, LdOracle, OracleBounds, Refutation, Verdict};

use crate::artin::{ArtinAction, Automorphism, BraidLetter, BraidWord, CompressedWord};
use crate::error::{Error, Result};
use crate::freeword::FreeWord;

/// A term over one generator `x` and a binary operation `*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LdTerm {
    Leaf,
    Node(Box<LdTerm>, Box<LdTerm>),
}

impl LdTerm {
    pub fn leaf() -> Self {
        LdTerm::Leaf
    }

    /// `left * right`.
    pub fn op(left: LdTerm, right: LdTerm) -> Self {
        LdTerm::Node(Box::new(left), Box::new(right))
    }

    /// Number of leaves.
    pub fn size(&self) -> usize {
        match self {
            LdTerm::Leaf => 1,
            LdTerm::Node(l, r) => l.size() + r.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            LdTerm::Leaf => 0,
            LdTerm::Node(l, r) => 1 + l.depth().max(r.depth()),
        }
    }
}

impl fmt::Display for LdTerm {
    /// Minimal parentheses: `*` associates to the left, so only a compound
    /// right operand is bracketed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LdTerm::Leaf => f.write_str("x"),
            LdTerm::Node(l, r) => {
                write!(f, "{l}*")?;
                match **r {
                    LdTerm::Leaf => f.write_str("x"),
                    LdTerm::Node(..) => write!(f, "({r})"),
                }
            }
        }
    }
}

/// `a · s(b) · σ1 · s(a⁻¹)` as a literal word of length `2|a| + |b| + 1`.
pub fn star(a: &BraidWord, b: &BraidWord) -> BraidWord {
    let mut out = BraidWord::new(Vec::with_capacity(2 * a.len() + b.len() + 1));
    out.extend_from(a);
    out.extend_from(&b.shift(1));
    out.push(BraidLetter::pos(1));
    out.extend_from(&a.inverse().shift(1));
    out
}

/// Result of folding `*` over a list of right operands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fold {
    pub result: BraidWord,
    /// `result` with the literal prefix `a` removed.
    pub suffix: BraidWord,
}

/// `((a * bs[0]) * bs[1]) * ...`, together with the part after the prefix `a`.
///
/// Each application keeps its left operand as a literal prefix, so `a` is a
/// prefix of the result and the suffix is obtained by slicing.
pub fn fold_star(a: &BraidWord, bs: &[BraidWord]) -> Result<Fold> {
    if bs.is_empty() {
        return Err(Error::EmptyBetas);
    }
    let result = bs.iter().fold(a.clone(), |acc, b| star(&acc, b));
    debug_assert_eq!(&result.letters()[..a.len()], a.letters());
    let suffix = BraidWord::new(result.letters()[a.len()..].to_vec());
    Ok(Fold { result, suffix })
}

/// A free word reported by a certificate: written out when it fits under the
/// syllable cap, otherwise its length and its first and last letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Image {
    Explicit(FreeWord),
    Summary {
        letters: u64,
        head: FreeWord,
        tail: FreeWord,
    },
}

/// Letters kept at each end of a summarized image.
pub const SUMMARY_LETTERS: u64 = 8;

impl Image {
    fn capture(w: &CompressedWord<'_>, cap: usize) -> Result<Image> {
        match w.to_free_word(cap) {
            Ok(word) => Ok(Image::Explicit(word)),
            Err(Error::SyllableCap { .. }) => Ok(Image::Summary {
                letters: w.letter_len(),
                head: w.head(SUMMARY_LETTERS),
                tail: w.tail(SUMMARY_LETTERS),
            }),
            Err(e) => Err(e),
        }
    }

    pub fn explicit(&self) -> Option<&FreeWord> {
        match self {
            Image::Explicit(w) => Some(w),
            Image::Summary { .. } => None,
        }
    }
}

impl fmt::Display for Image {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Image::Explicit(w) => write!(f, "{w}"),
            Image::Summary {
                letters,
                head,
                tail,
            } => write!(f, "{head} ... {tail} ({letters} letters)"),
        }
    }
}

/// Audit record for one instance of `a ≠ ((a * b1) * ...) * bk`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreflexivityCertificate {
    pub alpha: BraidWord,
    pub betas: Vec<BraidWord>,
    pub result: BraidWord,
    pub suffix: BraidWord,
    pub sigma1_positive: bool,
    /// Image of `x1` under the suffix.
    pub image_of_x1: Image,
    /// `w ∈ W` with `image_of_x1 = x1 w x1⁻¹`, when it exists.
    pub stripped: Option<Image>,
    pub distinct_from_alpha: bool,
}

impl IrreflexivityCertificate {
    pub fn passes(&self) -> bool {
        self.sigma1_positive && self.stripped.is_some() && self.distinct_from_alpha
    }
}

/// Builds the certificate for `a` and `bs`.
///
/// The image of `x1` is computed in compressed form and written out only when
/// it fits under the action's syllable cap. A certificate that does not pass
/// means the implementation is wrong; it is returned as is so the caller can
/// report it.
pub fn verify_irreflexivity(
    action: &ArtinAction,
    a: &BraidWord,
    bs: &[BraidWord],
) -> Result<IrreflexivityCertificate> {
    let Fold { result, suffix } = fold_star(a, bs)?;
    let sigma1_positive = suffix.is_sigma1_positive();
    let images = Automorphism::of(&suffix, 2)?;
    let x1 = images.image(1).expect("rank is at least 2");
    let image_of_x1 = Image::capture(&x1, action.syllable_cap)?;
    let stripped = match &image_of_x1 {
        Image::Explicit(w) => w.strip_x1_conjugate().map(Image::Explicit),
        Image::Summary { .. } if x1.is_x1_conjugate_of_w() => {
            Some(Image::capture(&x1.trimmed(1, 1), action.syllable_cap)?)
        }
        Image::Summary { .. } => None,
    };
    let distinct_from_alpha = !action.braid_eq(a, &result)?;
    Ok(IrreflexivityCertificate {
        alpha: a.clone(),
        betas: bs.to_vec(),
        result,
        suffix,
        sigma1_positive,
        image_of_x1,
        stripped,
        distinct_from_alpha,
    })
}

/// Interprets `x` as `base` and `*` as [`star`].
pub fn eval_term(t: &LdTerm, base: &BraidWord) -> BraidWord {
    match t {
        LdTerm::Leaf => base.clone(),
        LdTerm::Node(l, r) => star(&eval_term(l, base), &eval_term(r, base)),
    }
}

/// Checks `a * (b * c) = (a * b) * (a * c)` in `B`.
pub fn check_distributivity(
    action: &ArtinAction,
    a: &BraidWord,
    b: &BraidWord,
    c: &BraidWord,
) -> Result<bool> {
    let lhs = star(a, &star(b, c));
    let rhs = star(&star(a, b), &star(a, c));
    action.braid_eq(&lhs, &rhs)
}

/// Checks a claimed witness `bs` for `a < b`, i.e. `b = ((a * bs[0]) * ...)`.
/// Does not search for witnesses.
pub fn check_laver_witness(
    action: &ArtinAction,
    a: &BraidWord,
    b: &BraidWord,
    bs: &[BraidWord],
) -> Result<bool> {
    let fold = fold_star(a, bs)?;
    action.braid_eq(b, &fold.result)
}
