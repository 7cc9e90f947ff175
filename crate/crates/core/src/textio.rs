//! Text formats for free words, braid words and LD terms.
//!
//! ```text
//! free word   x2 x1^3 x3^-2        "1" or empty input is the identity
//! braid word  s1 s2^-1 s1          "1" or empty input is the empty word
//! LD term     x*(x*x)              '*' associates to the left
//! ```
//!
//! Free words are reduced when parsed; braid words are kept letter for
//! letter, and only `^-1` is accepted as an exponent so that the parsed word
//! is exactly the word written.

use std::fmt;

use thiserror::Error;

use crate::artin::{BraidLetter, BraidWord};
use crate::error::Error as WordError;
use crate::freeword::FreeWord;
use crate::ldalg::LdTerm;

/// Byte range `start..end` in the parsed input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        SourceSpan { start, end }
    }

    fn offset(self, by: usize) -> Self {
        SourceSpan {
            start: self.start + by,
            end: self.end + by,
        }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at bytes {span}")]
pub struct ParseError {
    pub message: String,
    pub span: SourceSpan,
}

impl ParseError {
    fn new(message: impl Into<String>, start: usize, end: usize) -> Self {
        ParseError {
            message: message.into(),
            span: SourceSpan::new(start, end),
        }
    }
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split(|c: char| c.is_whitespace())
        .scan(0usize, |pos, tok| {
            let start = *pos;
            // Each separator is one whitespace char; account for its width.
            let sep = text[start + tok.len()..]
                .chars()
                .next()
                .map_or(0, char::len_utf8);
            *pos = start + tok.len() + sep;
            Some((start, tok))
        })
        .filter(|(_, tok)| !tok.is_empty())
}

fn is_identity_literal(text: &str) -> bool {
    matches!(text.trim(), "" | "1")
}

/// Parses the decimal index following the leading letter of `tok`.
/// Returns the index and the remainder of the token.
fn parse_index(tok: &str, start: usize, letter: char) -> Result<(usize, &str), ParseError> {
    let Some(rest) = tok.strip_prefix(letter) else {
        return Err(ParseError::new(
            format!("expected '{letter}<index>', found '{tok}'"),
            start,
            start + tok.len(),
        ));
    };
    let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
    if digits == 0 {
        return Err(ParseError::new(
            format!("missing index after '{letter}'"),
            start,
            start + tok.len(),
        ));
    }
    let span_end = start + 1 + digits;
    let index: u32 = rest[..digits]
        .parse()
        .map_err(|_| ParseError::new("index out of range", start + 1, span_end))?;
    if index == 0 {
        return Err(ParseError::new(
            "index must be at least 1",
            start + 1,
            span_end,
        ));
    }
    Ok((index as usize, &rest[digits..]))
}

pub fn parse_free_word(text: &str) -> Result<FreeWord, ParseError> {
    if is_identity_literal(text) {
        return Ok(FreeWord::identity());
    }
    let mut raw = Vec::new();
    for (start, tok) in tokens(text) {
        let end = start + tok.len();
        let (index, rest) = parse_index(tok, start, 'x')?;
        let exponent = match rest {
            "" => 1,
            _ => {
                let exp_start = end - rest.len();
                let Some(num) = rest.strip_prefix('^') else {
                    return Err(ParseError::new(
                        format!("unexpected '{rest}'"),
                        exp_start,
                        end,
                    ));
                };
                let valid = num.strip_prefix(['+', '-']).unwrap_or(num);
                if valid.is_empty() || !valid.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(ParseError::new("malformed exponent", exp_start, end));
                }
                let k: i64 = num
                    .parse()
                    .ok()
                    .filter(|&k| k != i64::MIN)
                    .ok_or_else(|| ParseError::new("exponent out of range", exp_start, end))?;
                if k == 0 {
                    return Err(ParseError::new("exponent must be nonzero", exp_start, end));
                }
                k
            }
        };
        raw.push((index, exponent, start, end));
    }
    let mut word = FreeWord::identity();
    for (index, exponent, start, end) in raw {
        word = word
            .mul(&FreeWord::power(index, exponent))
            .map_err(|e| match e {
                WordError::ExponentOverflow { .. } => {
                    ParseError::new("exponent overflow while reducing", start, end)
                }
                other => ParseError::new(other.to_string(), start, end),
            })?;
    }
    Ok(word)
}

pub fn parse_braid_word(text: &str) -> Result<BraidWord, ParseError> {
    if is_identity_literal(text) {
        return Ok(BraidWord::identity());
    }
    let mut letters = Vec::new();
    for (start, tok) in tokens(text) {
        let end = start + tok.len();
        let (index, rest) = parse_index(tok, start, 's')?;
        let letter = match rest {
            "" => BraidLetter::pos(index),
            "^-1" => BraidLetter::neg(index),
            _ => {
                return Err(ParseError::new(
                    "only '^-1' is allowed as a braid exponent; write powers out",
                    end - rest.len(),
                    end,
                ))
            }
        };
        letters.push(letter);
    }
    Ok(BraidWord::new(letters))
}

struct TermParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TermParser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error_here(&self, message: &str) -> ParseError {
        let end = (self.pos + 1).min(self.src.len());
        ParseError::new(message, self.pos, end)
    }

    fn term(&mut self) -> Result<LdTerm, ParseError> {
        let mut acc = self.atom()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.atom()?;
            acc = LdTerm::op(acc, rhs);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<LdTerm, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(LdTerm::Leaf)
            }
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                let inner = self.term()?;
                if self.peek() != Some(b')') {
                    return Err(ParseError::new("unbalanced '('", open, open + 1));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.error_here("expected 'x' or '('")),
            None => Err(self.error_here("unexpected end of input")),
        }
    }
}

pub fn parse_ld_term(text: &str) -> Result<LdTerm, ParseError> {
    let mut p = TermParser {
        src: text.as_bytes(),
        pos: 0,
    };
    let t = p.term()?;
    if p.peek().is_some() {
        return Err(p.error_here("unexpected token"));
    }
    Ok(t)
}

pub fn print_free_word(w: &FreeWord) -> String {
    w.to_string()
}

pub fn print_braid_word(b: &BraidWord) -> String {
    b.to_string()
}

pub fn print_ld_term(t: &LdTerm) -> String {
    t.to_string()
}

/// Parses a fixture file: one value per line, `#` starts a comment, blank
/// lines are skipped. Spans in errors are offsets into the whole file.
pub fn parse_lines<T>(
    text: &str,
    parse: impl Fn(&str) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("");
        if !content.trim().is_empty() {
            let value = parse(content).map_err(|e| ParseError {
                span: e.span.offset(offset),
                ..e
            })?;
            out.push(value);
        }
        offset += line.len();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(pairs: &[(usize, i64)]) -> FreeWord {
        FreeWord::reduce(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn free_word_examples() {
        assert_eq!(
            parse_free_word("x2 x1^3 x3").unwrap(),
            fw(&[(2, 1), (1, 3), (3, 1)])
        );
        assert_eq!(parse_free_word("1").unwrap(), FreeWord::identity());
        assert_eq!(parse_free_word("").unwrap(), FreeWord::identity());
        assert_eq!(parse_free_word("x1 x1^-1").unwrap(), FreeWord::identity());
        assert_eq!(
            parse_free_word("  x4^+2\tx4 ").unwrap(),
            FreeWord::power(4, 3)
        );
    }

    #[test]
    fn free_word_errors() {
        let e = parse_free_word("x1 x0").unwrap_err();
        assert_eq!(e.span, SourceSpan { start: 4, end: 5 });
        let e = parse_free_word("x2^0").unwrap_err();
        assert_eq!(e.span, SourceSpan { start: 2, end: 4 });
        assert!(parse_free_word("x").is_err());
        assert!(parse_free_word("y1").is_err());
        assert!(parse_free_word("x1^").is_err());
        assert!(parse_free_word("x1^-").is_err());
        assert!(parse_free_word("x1 1").is_err());
        assert!(parse_free_word("x1^2x").is_err());
        assert!(parse_free_word("x1^-9223372036854775808").is_err());
        assert!(parse_free_word("x1^9223372036854775807 x1").is_err());
    }

    #[test]
    fn braid_word_examples() {
        assert_eq!(
            parse_braid_word("s1 s2^-1").unwrap(),
            BraidWord::from_signed([1, -2])
        );
        assert_eq!(parse_braid_word("1").unwrap(), BraidWord::identity());
        assert_eq!(parse_braid_word("s1 s1^-1").unwrap().len(), 2);
    }

    #[test]
    fn braid_word_errors() {
        let e = parse_braid_word("s1 s2^2").unwrap_err();
        assert_eq!(e.span, SourceSpan { start: 5, end: 7 });
        assert!(parse_braid_word("s1^1").is_err());
        assert!(parse_braid_word("s0").is_err());
        assert!(parse_braid_word("x1").is_err());
        assert!(parse_braid_word("s99999999999").is_err());
    }

    #[test]
    fn ld_term_examples() {
        let x = || LdTerm::Leaf;
        assert_eq!(
            parse_ld_term("x*(x*x)").unwrap(),
            LdTerm::op(x(), LdTerm::op(x(), x()))
        );
        assert_eq!(
            parse_ld_term("x*x*x").unwrap(),
            LdTerm::op(LdTerm::op(x(), x()), x())
        );
        assert_eq!(parse_ld_term("x").unwrap(), x());
        assert_eq!(parse_ld_term(" ( x * x ) ").unwrap(), LdTerm::op(x(), x()));
    }

    #[test]
    fn ld_term_errors() {
        assert_eq!(
            parse_ld_term("(x*x").unwrap_err().span,
            SourceSpan { start: 0, end: 1 }
        );
        assert_eq!(
            parse_ld_term("x*x)").unwrap_err().span,
            SourceSpan { start: 3, end: 4 }
        );
        assert!(parse_ld_term("").is_err());
        assert!(parse_ld_term("x*").is_err());
        assert!(parse_ld_term("x x").is_err());
        assert!(parse_ld_term("()").is_err());
    }

    #[test]
    fn printing() {
        assert_eq!(print_free_word(&fw(&[(1, 1), (2, 3)])), "x1 x2^3");
        assert_eq!(
            print_braid_word(&BraidWord::from_signed([2, -1])),
            "s2 s1^-1"
        );
        assert_eq!(print_ld_term(&parse_ld_term("x*(x*x)").unwrap()), "x*(x*x)");
        assert_eq!(
            print_ld_term(&parse_ld_term("((x*x)*x)*(x*x)").unwrap()),
            "x*x*x*(x*x)"
        );
    }

    #[test]
    fn fixture_lines() {
        let text = "# braids\ns1 s2\n\n1   # identity\ns3^-1\n";
        let words = parse_lines(text, parse_braid_word).unwrap();
        assert_eq!(
            words,
            vec![
                BraidWord::from_signed([1, 2]),
                BraidWord::identity(),
                BraidWord::from_signed([-3])
            ]
        );
        let err = parse_lines("s1\ns2 q\n", parse_braid_word).unwrap_err();
        assert_eq!(err.span, SourceSpan { start: 6, end: 7 });
    }
}
