//! Letter-by-letter reference implementation of the Artin action.
//!
//! Works on plain sequences of `x_j^{±1}` and reduces by rescanning for an
//! adjacent cancelling pair until none is left. Quadratic, and deliberately
//! shares nothing with the syllable engine in [`crate::artin`].

use crate::artin::{BraidLetter, Sign};
use crate::freeword::FreeWord;

/// `(j, +1)` is `x_j`, `(j, -1)` is `x_j⁻¹`.
pub type Letter = (usize, i8);

fn generator_image(letter: BraidLetter, j: usize) -> Vec<Letter> {
    let i = letter.index();
    match letter.sign() {
        Sign::Plus if j == i => vec![(i, 1), (i + 1, 1), (i, -1)],
        Sign::Plus if j == i + 1 => vec![(i, 1)],
        Sign::Minus if j == i => vec![(i + 1, 1)],
        Sign::Minus if j == i + 1 => vec![(i + 1, -1), (i, 1), (i + 1, 1)],
        _ => vec![(j, 1)],
    }
}

fn naive_reduce(mut w: Vec<Letter>) -> Vec<Letter> {
    loop {
        let hit = w
            .windows(2)
            .position(|p| p[0].0 == p[1].0 && p[0].1 == -p[1].1);
        match hit {
            Some(k) => {
                w.drain(k..k + 2);
            }
            None => return w,
        }
    }
}

pub fn naive_letter_action(letter: BraidLetter, w: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::new();
    for &(j, e) in w {
        let image = generator_image(letter, j);
        if e > 0 {
            out.extend(image);
        } else {
            out.extend(image.into_iter().rev().map(|(g, s)| (g, -s)));
        }
    }
    naive_reduce(out)
}

pub fn naive_apply(letters: &[BraidLetter], w: &[Letter]) -> Vec<Letter> {
    letters.iter().fold(naive_reduce(w.to_vec()), |acc, &l| {
        naive_letter_action(l, &acc)
    })
}

/// Expands syllables into single letters.
pub fn to_letters(w: &FreeWord) -> Vec<Letter> {
    let mut out = Vec::new();
    for s in w.syllables() {
        let sign = if s.exponent() > 0 { 1 } else { -1 };
        let count =
            usize::try_from(s.exponent().unsigned_abs()).expect("exponent too large to expand");
        out.extend(std::iter::repeat_n((s.index(), sign), count));
    }
    out
}

pub fn to_free_word(w: &[Letter]) -> FreeWord {
    FreeWord::reduce(w.iter().map(|&(j, e)| (j, i64::from(e))))
        .expect("letters have unit exponents")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            naive_letter_action(BraidLetter::pos(1), &[(1, 1)]),
            vec![(1, 1), (2, 1), (1, -1)]
        );
        assert_eq!(
            naive_letter_action(BraidLetter::pos(2), &[(1, 1)]),
            vec![(1, 1)]
        );
        assert_eq!(
            naive_letter_action(BraidLetter::neg(1), &[(2, 1)]),
            vec![(2, -1), (1, 1), (2, 1)]
        );
    }

    #[test]
    fn inverse_letters_round_trip() {
        let w = vec![(2, 1), (1, -1), (3, 1), (2, 1), (2, 1)];
        for i in 1..=3 {
            let there = naive_letter_action(BraidLetter::pos(i), &w);
            assert_eq!(naive_letter_action(BraidLetter::neg(i), &there), w);
            let back = naive_letter_action(BraidLetter::neg(i), &w);
            assert_eq!(naive_letter_action(BraidLetter::pos(i), &back), w);
        }
    }

    #[test]
    fn two_sigma1_on_x1() {
        let b = [BraidLetter::pos(1), BraidLetter::pos(1)];
        assert_eq!(
            naive_apply(&b, &[(1, 1)]),
            vec![(1, 1), (2, 1), (1, 1), (2, -1), (1, -1)]
        );
    }

    #[test]
    fn conversions() {
        let w = FreeWord::reduce([(1, 2), (3, -1)]).unwrap();
        assert_eq!(to_letters(&w), vec![(1, 1), (1, 1), (3, -1)]);
        assert_eq!(to_free_word(&to_letters(&w)), w);
    }
}
