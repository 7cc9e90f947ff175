//! Generator images kept as a shared DAG of slices.
//!
//! Images of `x1` under short σ1-positive words can run to tens of millions of
//! syllables while the braid word has a few hundred letters. Here the image of
//! every generator is a node whose value is a reduced word given as a list of
//! slices of earlier nodes (or their inverses). A product of reduced words is
//! reduced by cancelling at the junctions only, so the stored words are exactly
//! the reduced images; nothing is approximated. Letters can be read at any
//! position and streamed in order, which is all that equality and the `x1`
//! conjugate test need.

use std::iter::FusedIterator;

use crate::artin::{BraidWord, Sign};
use crate::error::{Error, Result};
use crate::freeword::{FreeWord, Reducer};

/// `+j` is `x_j`, `-j` is `x_j⁻¹`.
type Letter = i64;

const FLAT_LIMIT: u64 = 32;

/// Letters compared one by one before switching to fingerprints.
const DIRECT_PROBE: u64 = 4;

const MODULUS: u64 = (1 << 61) - 1;
const BASES: [u64; 2] = [0x0F3A_C5D7_9B2E_4F61, 0x1B7D_2E49_A3C1_0E93];

fn mul_mod(a: u64, b: u64) -> u64 {
    let p = u128::from(a) * u128::from(b);
    let r = (p as u64 & MODULUS) + (p >> 61) as u64;
    let r = (r & MODULUS) + (r >> 61);
    if r >= MODULUS {
        r - MODULUS
    } else {
        r
    }
}

fn add_mod(a: u64, b: u64) -> u64 {
    let r = a + b;
    if r >= MODULUS {
        r - MODULUS
    } else {
        r
    }
}

/// Polynomial fingerprint of a letter sequence under two bases, together with
/// `base^len` so that fingerprints of adjacent pieces combine without powering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Print {
    hash: [u64; 2],
    power: [u64; 2],
}

impl Print {
    const EMPTY: Print = Print {
        hash: [0, 0],
        power: [1, 1],
    };

    fn letter(l: Letter) -> Print {
        let code = 2 * l.unsigned_abs() + u64::from(l < 0) + 1;
        Print {
            hash: [code, code],
            power: BASES,
        }
    }

    /// Fingerprint of `self` followed by `next`.
    fn then(self, next: Print) -> Print {
        let mut out = Print::EMPTY;
        for k in 0..2 {
            out.hash[k] = add_mod(mul_mod(self.hash[k], next.power[k]), next.hash[k]);
            out.power[k] = mul_mod(self.power[k], next.power[k]);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Slice {
    node: u32,
    inv: bool,
    start: u64,
    end: u64,
}

impl Slice {
    fn len(&self) -> u64 {
        self.end - self.start
    }
}

#[derive(Debug, Clone)]
enum Node {
    Flat(Vec<Letter>),
    /// `prints[p]` holds the fingerprints of piece `p` read forwards and of its inverse.
    Cat {
        pieces: Vec<Slice>,
        offsets: Vec<u64>,
        prints: Vec<[Print; 2]>,
    },
}

#[derive(Debug, Clone, Default)]
struct Dag {
    nodes: Vec<Node>,
    lens: Vec<u64>,
    /// Fingerprints of each node's value and of its inverse.
    prints: Vec<[Print; 2]>,
}

impl Dag {
    fn push(&mut self, node: Node, len: u64, prints: [Print; 2]) -> Slice {
        let id = u32::try_from(self.nodes.len()).expect("node count fits in u32");
        self.nodes.push(node);
        self.lens.push(len);
        self.prints.push(prints);
        Slice {
            node: id,
            inv: false,
            start: 0,
            end: len,
        }
    }

    fn flat(&mut self, letters: Vec<Letter>) -> Slice {
        let len = letters.len() as u64;
        let fwd = letters
            .iter()
            .fold(Print::EMPTY, |acc, &l| acc.then(Print::letter(l)));
        let bwd = letters
            .iter()
            .rev()
            .fold(Print::EMPTY, |acc, &l| acc.then(Print::letter(-l)));
        self.push(Node::Flat(letters), len, [fwd, bwd])
    }

    fn inverse(&self, s: Slice) -> Slice {
        let n = self.lens[s.node as usize];
        Slice {
            node: s.node,
            inv: !s.inv,
            start: n - s.end,
            end: n - s.start,
        }
    }

    fn letter(&self, s: Slice, k: u64) -> Letter {
        let (mut node, mut inv, mut idx) = (s.node as usize, s.inv, s.start + k);
        let mut neg = false;
        loop {
            if inv {
                idx = self.lens[node] - 1 - idx;
                neg = !neg;
            }
            match &self.nodes[node] {
                Node::Flat(v) => {
                    let l = v[idx as usize];
                    return if neg { -l } else { l };
                }
                Node::Cat {
                    pieces, offsets, ..
                } => {
                    let p = offsets.partition_point(|&o| o <= idx) - 1;
                    let piece = pieces[p];
                    idx = piece.start + (idx - offsets[p]);
                    node = piece.node as usize;
                    inv = piece.inv;
                }
            }
        }
    }

    fn letters(&self, s: Slice) -> Letters<'_> {
        let mut stack = Vec::new();
        if s.len() > 0 {
            stack.push(s);
        }
        Letters {
            dag: self,
            stack,
            remaining: s.len(),
        }
    }

    /// Fingerprint of a slice.
    fn print(&self, s: Slice) -> Print {
        let node = s.node as usize;
        let n = self.lens[node];
        if s.start == s.end {
            return Print::EMPTY;
        }
        if s.start == 0 && s.end == n {
            return self.prints[node][usize::from(s.inv)];
        }
        // Work in the node's own coordinates.
        let (lo, hi) = if s.inv {
            (n - s.end, n - s.start)
        } else {
            (s.start, s.end)
        };
        match &self.nodes[node] {
            Node::Flat(v) => {
                let v = &v[lo as usize..hi as usize];
                if s.inv {
                    v.iter()
                        .rev()
                        .fold(Print::EMPTY, |acc, &l| acc.then(Print::letter(-l)))
                } else {
                    v.iter()
                        .fold(Print::EMPTY, |acc, &l| acc.then(Print::letter(l)))
                }
            }
            Node::Cat {
                pieces,
                offsets,
                prints,
            } => {
                let first = offsets.partition_point(|&o| o <= lo) - 1;
                let last = offsets.partition_point(|&o| o < hi) - 1;
                let part = |p: usize| -> Print {
                    let piece = pieces[p];
                    let (off, plen) = (offsets[p], piece.len());
                    let (a, b) = (lo.max(off) - off, hi.min(off + plen) - off);
                    if a == 0 && b == plen {
                        return prints[p][usize::from(s.inv)];
                    }
                    let sub = Slice {
                        start: piece.start + a,
                        end: piece.start + b,
                        ..piece
                    };
                    if s.inv {
                        self.print(self.inverse(sub))
                    } else {
                        self.print(sub)
                    }
                };
                if s.inv {
                    (first..=last)
                        .rev()
                        .fold(Print::EMPTY, |acc, p| acc.then(part(p)))
                } else {
                    (first..=last).fold(Print::EMPTY, |acc, p| acc.then(part(p)))
                }
            }
        }
    }

    /// Reduced product of reduced words.
    fn product(&mut self, parts: &[Slice]) -> Result<Slice> {
        let mut stack: Vec<Slice> = Vec::with_capacity(parts.len());
        for &part in parts {
            let mut p = part;
            while p.len() > 0 {
                let Some(&top) = stack.last() else { break };
                let cancelled = self.junction(top, p);
                if cancelled == 0 {
                    break;
                }
                let last = stack.len() - 1;
                stack[last].end -= cancelled;
                p.start += cancelled;
                if stack[last].len() == 0 {
                    stack.pop();
                }
            }
            if p.len() > 0 {
                stack.push(p);
            }
        }
        let mut total: u64 = 0;
        for s in &stack {
            total = total.checked_add(s.len()).ok_or(Error::LengthOverflow)?;
        }
        if stack.len() == 1 {
            return Ok(stack[0]);
        }
        if total <= FLAT_LIMIT {
            let mut letters = Vec::with_capacity(total as usize);
            for s in &stack {
                letters.extend(self.letters(*s));
            }
            return Ok(self.flat(letters));
        }
        let parts: Vec<Slice> = stack.into_iter().map(|s| self.whole(s)).collect();
        Ok(self.cat(parts))
    }

    /// Concatenation node over whole nodes that do not cancel.
    fn cat(&mut self, pieces: Vec<Slice>) -> Slice {
        let mut offsets = Vec::with_capacity(pieces.len());
        let mut prints = Vec::with_capacity(pieces.len());
        let mut at = 0;
        for s in &pieces {
            offsets.push(at);
            at += s.len();
            let both = self.prints[s.node as usize];
            prints.push(if s.inv { [both[1], both[0]] } else { both });
        }
        let fwd = prints.iter().fold(Print::EMPTY, |acc, p| acc.then(p[0]));
        let bwd = prints
            .iter()
            .rev()
            .fold(Print::EMPTY, |acc, p| acc.then(p[1]));
        self.push(
            Node::Cat {
                pieces,
                offsets,
                prints,
            },
            at,
            [fwd, bwd],
        )
    }

    /// The same word as `s`, as the whole of a node. Creates nodes along the
    /// paths to the two cut points only, so later fingerprint queries on it
    /// stay one-sided.
    fn whole(&mut self, s: Slice) -> Slice {
        let node = s.node as usize;
        let n = self.lens[node];
        if s.start == 0 && s.end == n {
            return s;
        }
        if s.len() <= FLAT_LIMIT {
            let letters = self.letters(s).collect();
            return self.flat(letters);
        }
        let (lo, hi) = if s.inv {
            (n - s.end, n - s.start)
        } else {
            (s.start, s.end)
        };
        let parts: Vec<Slice> = match &self.nodes[node] {
            Node::Flat(v) => {
                let v = v[lo as usize..hi as usize].to_vec();
                let fresh = self.flat(v);
                return Slice {
                    inv: s.inv,
                    ..fresh
                };
            }
            Node::Cat {
                pieces, offsets, ..
            } => {
                let first = offsets.partition_point(|&o| o <= lo) - 1;
                let last = offsets.partition_point(|&o| o < hi) - 1;
                (first..=last)
                    .map(|p| {
                        let (piece, off) = (pieces[p], offsets[p]);
                        let (a, b) = (lo.max(off) - off, hi.min(off + piece.len()) - off);
                        Slice {
                            start: piece.start + a,
                            end: piece.start + b,
                            ..piece
                        }
                    })
                    .collect()
            }
        };
        let fresh = if parts.len() == 1 {
            self.whole(parts[0])
        } else {
            let parts = parts.into_iter().map(|p| self.whole(p)).collect();
            self.cat(parts)
        };
        if s.inv {
            self.inverse(fresh)
        } else {
            fresh
        }
    }

    /// Number of letters that cancel between the end of `a` and the start of `b`,
    /// that is the longest common prefix of `a⁻¹` and `b`.
    fn junction(&self, a: Slice, b: Slice) -> u64 {
        let limit = a.len().min(b.len());
        let u = self.inverse(a);
        if u.node == b.node && u.inv == b.inv && u.start == b.start {
            return limit;
        }
        let mut k = 0;
        while k < limit.min(DIRECT_PROBE) {
            if self.letter(u, k) != self.letter(b, k) {
                return k;
            }
            k += 1;
        }
        if k == limit {
            return k;
        }
        let agree = |m: u64| {
            self.print(Slice {
                end: u.start + m,
                ..u
            }) == self.print(Slice {
                end: b.start + m,
                ..b
            })
        };
        // Gallop to bracket the first disagreement, then bisect.
        let (mut good, mut step) = (k, k);
        let bad = loop {
            let probe = (good + step).min(limit);
            if !agree(probe) {
                break probe;
            }
            if probe == limit {
                return limit;
            }
            good = probe;
            step *= 2;
        };
        let (mut lo, mut hi) = (good, bad);
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if agree(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    fn power(&mut self, s: Slice, e: i64) -> Result<Slice> {
        let base = if e < 0 { self.inverse(s) } else { s };
        let mut n = e.unsigned_abs();
        let mut acc = self.flat(Vec::new());
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.product(&[acc, sq])?;
            }
            n >>= 1;
            if n > 0 {
                sq = self.product(&[sq, sq])?;
            }
        }
        Ok(acc)
    }
}

/// In-order letters of a slice.
struct Letters<'a> {
    dag: &'a Dag,
    stack: Vec<Slice>,
    remaining: u64,
}

impl Iterator for Letters<'_> {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        loop {
            let top = self.stack.last_mut()?;
            let s = *top;
            let node = s.node as usize;
            let n = self.dag.lens[node];
            match &self.dag.nodes[node] {
                Node::Flat(v) => {
                    top.start += 1;
                    if top.start == top.end {
                        self.stack.pop();
                    }
                    self.remaining -= 1;
                    return Some(if s.inv {
                        -v[(n - 1 - s.start) as usize]
                    } else {
                        v[s.start as usize]
                    });
                }
                Node::Cat {
                    pieces, offsets, ..
                } => {
                    // Split off the part of `s` inside the piece where it starts.
                    let (child, taken) = if !s.inv {
                        let p = offsets.partition_point(|&o| o <= s.start) - 1;
                        let piece = pieces[p];
                        let hi = s.end.min(offsets[p] + piece.len());
                        let from = piece.start + (s.start - offsets[p]);
                        let child = Slice {
                            node: piece.node,
                            inv: piece.inv,
                            start: from,
                            end: from + (hi - s.start),
                        };
                        (child, hi - s.start)
                    } else {
                        let c0 = n - 1 - s.start;
                        let floor = n - s.end;
                        let p = offsets.partition_point(|&o| o <= c0) - 1;
                        let piece = pieces[p];
                        let lo = offsets[p].max(floor);
                        let a = piece.start + (lo - offsets[p]);
                        let b = piece.start + (c0 + 1 - offsets[p]);
                        let m = self.dag.lens[piece.node as usize];
                        let child = Slice {
                            node: piece.node,
                            inv: !piece.inv,
                            start: m - b,
                            end: m - a,
                        };
                        (child, c0 + 1 - lo)
                    };
                    top.start += taken;
                    if top.start == top.end {
                        self.stack.pop();
                    }
                    self.stack.push(child);
                }
            }
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, usize::try_from(self.remaining).ok())
    }
}

impl FusedIterator for Letters<'_> {}

/// The automorphism of `F` induced by a braid word, restricted to
/// `x1 .. x_rank`, with images stored compressed.
#[derive(Debug, Clone)]
pub struct Automorphism {
    dag: Dag,
    images: Vec<Slice>,
}

impl Automorphism {
    /// Images of `x1 .. x_rank` under `b`, first letter acting first.
    /// `rank` is raised to `b.max_index() + 1` if smaller.
    pub fn of(b: &BraidWord, rank: usize) -> Result<Self> {
        let rank = rank.max(b.max_index() + 1);
        let mut dag = Dag::default();
        let mut images: Vec<Slice> = (1..=rank).map(|j| dag.flat(vec![j as Letter])).collect();
        // Compose from the last letter back: with Φ = ℓ_L ∘ … ∘ ℓ_1,
        // (ℓ_L ∘ … ∘ ℓ_t)(x_j) is the tail composite applied to ℓ_t(x_j).
        for l in b.letters().iter().rev() {
            let i = l.index() - 1;
            let (xi, xn) = (images[i], images[i + 1]);
            match l.sign() {
                Sign::Plus => {
                    let inv = dag.inverse(xi);
                    images[i] = dag.product(&[xi, xn, inv])?;
                    images[i + 1] = xi;
                }
                Sign::Minus => {
                    let inv = dag.inverse(xn);
                    images[i] = xn;
                    images[i + 1] = dag.product(&[inv, xi, xn])?;
                }
            }
        }
        Ok(Automorphism { dag, images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Image of `x_j` for `1 <= j <= rank`.
    pub fn image(&self, j: usize) -> Option<CompressedWord<'_>> {
        let &slice = self.images.get(j.checked_sub(1)?)?;
        Some(CompressedWord {
            dag: &self.dag,
            slice,
        })
    }

    /// Image of an arbitrary word.
    pub fn apply(&mut self, w: &FreeWord) -> Result<CompressedWord<'_>> {
        let mut parts = Vec::with_capacity(w.len());
        for y in w.syllables() {
            let base = match self.images.get(y.index() - 1) {
                Some(&s) => s,
                None => self.dag.flat(vec![y.index() as Letter]),
            };
            parts.push(self.dag.power(base, y.exponent())?);
        }
        let s = self.dag.product(&parts)?;
        Ok(CompressedWord {
            dag: &self.dag,
            slice: s,
        })
    }

    /// True when every generator is fixed.
    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &s)| s.len() == 1 && self.dag.letter(s, 0) == k as Letter + 1)
    }
}

/// A reduced word held in an [`Automorphism`]'s DAG.
#[derive(Debug, Clone, Copy)]
pub struct CompressedWord<'a> {
    dag: &'a Dag,
    slice: Slice,
}

impl CompressedWord<'_> {
    /// Length in letters.
    pub fn letter_len(&self) -> u64 {
        self.slice.len()
    }

    /// The letter at position `k` as `(index, ±1)`.
    pub fn letter(&self, k: u64) -> (usize, i8) {
        assert!(k < self.letter_len(), "letter position out of range");
        split(self.dag.letter(self.slice, k))
    }

    /// All letters in order.
    pub fn letters(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.dag.letters(self.slice).map(split)
    }

    /// Expands the word, failing once it exceeds `cap` syllables.
    pub fn to_free_word(&self, cap: usize) -> Result<FreeWord> {
        let mut r = Reducer::with_capacity(0);
        for l in self.dag.letters(self.slice) {
            r.push(l.unsigned_abs() as usize, l.signum())?;
            if r.len() > cap {
                return Err(Error::SyllableCap { len: r.len(), cap });
            }
        }
        Ok(r.finish())
    }

    /// The word with `front` letters dropped from the start and `back` from the end.
    pub fn trimmed(&self, front: u64, back: u64) -> Self {
        let mut slice = self.slice;
        slice.start = (slice.start + front).min(slice.end);
        slice.end = slice.end.saturating_sub(back).max(slice.start);
        CompressedWord {
            dag: self.dag,
            slice,
        }
    }

    /// The first `n` letters as a word.
    pub fn head(&self, n: u64) -> FreeWord {
        let n = n.min(self.letter_len());
        FreeWord::reduce((0..n).map(|k| self.dag.letter(self.slice, k)).map(pair))
            .expect("unit exponents")
    }

    /// The last `n` letters as a word.
    pub fn tail(&self, n: u64) -> FreeWord {
        let len = self.letter_len();
        let n = n.min(len);
        FreeWord::reduce(
            (len - n..len)
                .map(|k| self.dag.letter(self.slice, k))
                .map(pair),
        )
        .expect("unit exponents")
    }

    /// True when the word is `x1 w x1⁻¹` with `w ∈ W`: it starts with the
    /// syllable `x1`, ends with `x1⁻¹`, and the letters just inside avoid `x1`.
    pub fn is_x1_conjugate_of_w(&self) -> bool {
        let n = self.letter_len();
        if n < 3 {
            return false;
        }
        let at = |k| self.dag.letter(self.slice, k);
        at(0) == 1 && at(n - 1) == -1 && at(1).abs() != 1 && at(n - 2).abs() != 1
    }
}

impl PartialEq for CompressedWord<'_> {
    fn eq(&self, other: &Self) -> bool {
        // Differing fingerprints settle inequality; agreement is confirmed letter by letter.
        self.letter_len() == other.letter_len()
            && self.dag.print(self.slice) == other.dag.print(other.slice)
            && self
                .dag
                .letters(self.slice)
                .eq(other.dag.letters(other.slice))
    }
}

impl Eq for CompressedWord<'_> {}

fn split(l: Letter) -> (usize, i8) {
    (l.unsigned_abs() as usize, if l > 0 { 1 } else { -1 })
}

fn pair(l: Letter) -> (usize, i64) {
    (l.unsigned_abs() as usize, l.signum())
}

/// Equality in `B` through compressed images, after removing the common
/// literal prefix and suffix of the two words.
pub fn braid_eq_compressed(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    let (x, y) = (a.letters(), b.letters());
    let pre = x.iter().zip(y).take_while(|(p, q)| p == q).count();
    let (x, y) = (&x[pre..], &y[pre..]);
    let suf = x
        .iter()
        .rev()
        .zip(y.iter().rev())
        .take_while(|(p, q)| p == q)
        .count();
    let (x, y) = (&x[..x.len() - suf], &y[..y.len() - suf]);
    if x == y {
        return Ok(true);
    }
    let (x, y) = (BraidWord::new(x.to_vec()), BraidWord::new(y.to_vec()));
    let rank = x.max_index().max(y.max_index()) + 1;
    let fa = Automorphism::of(&x, rank)?;
    let fb = Automorphism::of(&y, rank)?;
    for j in 1..=rank {
        if fa.image(j) != fb.image(j) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::ArtinAction;

    fn bw(signed: &[i64]) -> BraidWord {
        BraidWord::from_signed(signed.iter().copied())
    }

    #[test]
    fn matches_flat_engine() {
        let words = [
            vec![1],
            vec![-1],
            vec![1, 1],
            vec![1, 2, 1],
            vec![2, 1, 2],
            vec![1, -2, 3, -1, 2, 2, -3, 1],
            vec![1, 2, -1, -2, 1, 3, 1, 2, 1, -3, -2, 1],
        ];
        let flat = ArtinAction::default();
        for signed in &words {
            let b = bw(signed);
            let mut f = Automorphism::of(&b, 5).unwrap();
            for j in 1..=5 {
                let want = flat.apply(&b, &FreeWord::generator(j)).unwrap();
                let got = f.image(j).unwrap().to_free_word(usize::MAX).unwrap();
                assert_eq!(got, want, "{b} on x{j}");
            }
            let w = FreeWord::reduce([(2, 3), (1, -2), (4, 1), (1, 5)]).unwrap();
            let want = flat.apply(&b, &w).unwrap();
            assert_eq!(f.apply(&w).unwrap().to_free_word(usize::MAX).unwrap(), want);
        }
    }

    #[test]
    fn matches_flat_engine_on_long_words() {
        use crate::harness::{SampleConfig, Sampler};
        let flat = ArtinAction::with_cap(200_000);
        let mut s = Sampler::new(SampleConfig {
            seed: 5,
            max_index: 3,
            max_len: 60,
            ..SampleConfig::default()
        });
        let mut compared = 0;
        for _ in 0..300 {
            let b = s.gen_braid_word();
            let f = Automorphism::of(&b, 4).unwrap();
            for j in 1..=4 {
                let Ok(want) = flat.apply(&b, &FreeWord::generator(j)) else {
                    continue;
                };
                let got = f.image(j).unwrap();
                assert_eq!(u128::from(got.letter_len()), want.letter_len());
                assert_eq!(got.to_free_word(usize::MAX).unwrap(), want, "{b} on x{j}");
                compared += 1;
            }
        }
        assert!(compared > 1000);
    }

    #[test]
    fn letters_agree_with_random_access() {
        let b = bw(&[1, 2, 1, -3, 2, 1, 1, -2, 3, 1, 2, 1, 1]);
        let f = Automorphism::of(&b, 4).unwrap();
        for j in 1..=4 {
            let w = f.image(j).unwrap();
            let seq: Vec<_> = w.letters().collect();
            assert_eq!(seq.len() as u64, w.letter_len());
            for (k, &l) in seq.iter().enumerate() {
                assert_eq!(w.letter(k as u64), l);
            }
            let rev = f.dag.inverse(w.slice);
            let inv = CompressedWord {
                dag: &f.dag,
                slice: rev,
            };
            let back: Vec<_> = inv.letters().collect();
            let expect: Vec<_> = seq.iter().rev().map(|&(g, e)| (g, -e)).collect();
            assert_eq!(back, expect);
        }
    }

    #[test]
    fn braid_relations_hold() {
        assert!(braid_eq_compressed(&bw(&[1, 2, 1]), &bw(&[2, 1, 2])).unwrap());
        assert!(braid_eq_compressed(&bw(&[1, 3]), &bw(&[3, 1])).unwrap());
        assert!(braid_eq_compressed(&bw(&[1, -1, 2]), &bw(&[2])).unwrap());
        assert!(!braid_eq_compressed(&bw(&[1, 2]), &bw(&[2, 1])).unwrap());
        assert!(!braid_eq_compressed(&bw(&[1]), &bw(&[])).unwrap());
        assert!(Automorphism::of(&bw(&[2, 1, -1, -2]), 3)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn conjugate_test() {
        let f = Automorphism::of(&bw(&[1]), 2).unwrap();
        assert!(f.image(1).unwrap().is_x1_conjugate_of_w());
        assert!(!f.image(2).unwrap().is_x1_conjugate_of_w());
        let g = Automorphism::of(&bw(&[1, 1]), 2).unwrap();
        let w = g.image(1).unwrap();
        assert!(w.is_x1_conjugate_of_w());
        assert_eq!(w.head(2).to_string(), "x1 x2");
        assert_eq!(w.tail(2).to_string(), "x2^-1 x1^-1");
    }
}
