//! Seeded samplers, brute-force oracles and the randomized property suites.
//!
//! Sampling uses ChaCha8 seeded from a `u64`. Each suite trial draws from
//! its own stream (`set_stream`) derived from the suite and the trial number,
//! so results do not depend on how trials are scheduled across threads.

mod naive;
mod suites;

pub use naive::{naive_apply, naive_letter_action, to_free_word, to_letters, Letter};
pub use suites::{run_suite, Outcome, Suite, SuiteConfig, SuiteReport, TrialResult, GENERATOR};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::artin::{BraidLetter, BraidWord, Sign};
use crate::freeword::FreeWord;
use crate::ldalg::LdTerm;

/// Bounds for the samplers. All bounds are at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleConfig {
    pub seed: u64,
    /// Largest generator index drawn.
    pub max_index: usize,
    /// Longest word drawn, in syllables for free words and letters for braid words.
    pub max_len: usize,
    /// Largest exponent magnitude in free words.
    pub max_exp: i64,
    /// Most leaves in a sampled LD term.
    pub max_term_size: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            seed: 0,
            max_index: 6,
            max_len: 16,
            max_exp: 5,
            max_term_size: 4,
        }
    }
}

impl SampleConfig {
    fn validated(mut self) -> Self {
        self.max_index = self.max_index.max(1);
        self.max_len = self.max_len.max(1);
        self.max_exp = self.max_exp.max(1);
        self.max_term_size = self.max_term_size.max(1);
        self
    }
}

/// A deterministic stream of samples.
#[derive(Debug, Clone)]
pub struct Sampler {
    cfg: SampleConfig,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(cfg: SampleConfig) -> Self {
        let cfg = cfg.validated();
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            cfg,
        }
    }

    /// An independent stream under the same seed.
    pub fn fork(&self, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        rng.set_stream(stream);
        Sampler { cfg: self.cfg, rng }
    }

    pub fn config(&self) -> &SampleConfig {
        &self.cfg
    }

    /// Changes the index and length bounds for subsequent draws.
    pub fn set_bounds(&mut self, max_index: usize, max_len: usize) {
        self.cfg.max_index = max_index.max(1);
        self.cfg.max_len = max_len.max(1);
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    fn exponent(&mut self) -> i64 {
        // Half the draws are ±1 so single-letter powers stay common.
        let magnitude = if self.rng.random_bool(0.5) {
            1
        } else {
            self.rng.random_range(1..=self.cfg.max_exp)
        };
        if self.rng.random_bool(0.5) {
            magnitude
        } else {
            -magnitude
        }
    }

    /// Uniform index in `lo..=hi` other than `avoid`; `hi - lo >= 1` whenever
    /// `avoid` lies in the range.
    fn index_avoiding(&mut self, lo: usize, hi: usize, avoid: Option<usize>) -> usize {
        match avoid {
            Some(a) if (lo..=hi).contains(&a) => {
                let k = self.range(lo, hi - 1);
                if k >= a {
                    k + 1
                } else {
                    k
                }
            }
            _ => self.range(lo, hi),
        }
    }

    /// A reduced word of at most `max_len` syllables on `x1 .. x_max_index`.
    pub fn gen_free_word(&mut self) -> FreeWord {
        let hi = self.cfg.max_index;
        let len = if hi == 1 {
            self.range(0, 1)
        } else {
            self.range(0, self.cfg.max_len)
        };
        let mut raw = Vec::with_capacity(len);
        let mut prev = None;
        for _ in 0..len {
            let i = self.index_avoiding(1, hi, prev);
            raw.push((i, self.exponent()));
            prev = Some(i);
        }
        FreeWord::reduce(raw).expect("sampled exponents are small")
    }

    /// A member of `W`, built directly: first and last syllables avoid `x1`.
    pub fn gen_w_word(&mut self) -> FreeWord {
        let hi = self.cfg.max_index.max(2);
        let mut len = self.range(1, self.cfg.max_len);
        let mut raw = Vec::with_capacity(len);
        if hi == 2 {
            // Only x1 and x2 are available, so the word alternates x2 x1 ... x2.
            if len.is_multiple_of(2) {
                len -= 1;
            }
            for p in 0..len {
                raw.push((if p % 2 == 0 { 2 } else { 1 }, self.exponent()));
            }
        } else {
            let mut prev = None;
            for p in 0..len {
                let lo = if p == 0 || p + 1 == len { 2 } else { 1 };
                let i = self.index_avoiding(lo, hi, prev);
                raw.push((i, self.exponent()));
                prev = Some(i);
            }
        }
        let w = FreeWord::reduce(raw).expect("sampled exponents are small");
        debug_assert!(w.in_w());
        w
    }

    /// A member of `W` drawn by rejection from [`Sampler::gen_free_word`].
    /// Slower; kept to compare against the constructive sampler.
    pub fn gen_w_word_by_rejection(&mut self) -> FreeWord {
        loop {
            let w = self.gen_free_word();
            if w.in_w() {
                return w;
            }
        }
    }

    fn letter_in(&mut self, lo: usize, hi: usize) -> BraidLetter {
        let sign = if self.rng.random_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        BraidLetter::new(self.range(lo, hi), sign)
    }

    pub fn gen_letter(&mut self) -> BraidLetter {
        self.letter_in(1, self.cfg.max_index)
    }

    /// A braid word of at most `max_len` letters on `σ1 .. σ_max_index`.
    pub fn gen_braid_word(&mut self) -> BraidWord {
        let len = self.range(0, self.cfg.max_len);
        (0..len).map(|_| self.gen_letter()).collect()
    }

    /// A word with at least one `σ1` and no `σ1⁻¹`, of at most `max_len` letters.
    pub fn gen_sigma1_positive(&mut self) -> BraidWord {
        let len = self.range(1, self.cfg.max_len);
        let forced = self.range(0, len - 1);
        let hi = self.cfg.max_index;
        (0..len)
            .map(|p| {
                if p == forced || hi == 1 || self.rng.random_bool(0.3) {
                    BraidLetter::pos(1)
                } else {
                    self.letter_in(2, hi)
                }
            })
            .collect()
    }

    fn tree(&mut self, leaves: usize) -> LdTerm {
        if leaves == 1 {
            return LdTerm::Leaf;
        }
        let left = self.range(1, leaves - 1);
        LdTerm::op(self.tree(left), self.tree(leaves - left))
    }

    /// An LD term with between 1 and `max_term_size` leaves.
    pub fn gen_ld_term(&mut self) -> LdTerm {
        let leaves = self.range(1, self.cfg.max_term_size);
        self.tree(leaves)
    }
}

/// All LD terms with exactly `size` leaves, without repetition.
/// There are `Catalan(size - 1)` of them.
pub fn enumerate_ld_terms(size: usize) -> Vec<LdTerm> {
    match size {
        0 => Vec::new(),
        1 => vec![LdTerm::Leaf],
        _ => {
            let mut out = Vec::new();
            for left in 1..size {
                let rights = enumerate_ld_terms(size - left);
                for l in enumerate_ld_terms(left) {
                    for r in &rights {
                        out.push(LdTerm::op(l.clone(), r.clone()));
                    }
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn sampler(seed: u64) -> Sampler {
        Sampler::new(SampleConfig {
            seed,
            ..SampleConfig::default()
        })
    }

    #[test]
    fn generators_meet_their_contracts() {
        let mut s = sampler(11);
        for _ in 0..2000 {
            assert!(s.gen_w_word().in_w());
            assert!(s.gen_sigma1_positive().is_sigma1_positive());
            let w = s.gen_free_word();
            assert!(w.len() <= 16 && w.max_index() <= 6);
            assert!(s.gen_braid_word().len() <= 16);
            assert!((1..=4).contains(&s.gen_ld_term().size()));
        }
    }

    #[test]
    fn small_bounds() {
        let cfg = SampleConfig {
            seed: 3,
            max_index: 1,
            max_len: 1,
            max_exp: 1,
            max_term_size: 1,
        };
        let mut s = Sampler::new(cfg);
        for _ in 0..100 {
            assert_eq!(s.gen_ld_term(), LdTerm::Leaf);
            assert!(s.gen_w_word().in_w());
            assert_eq!(s.gen_sigma1_positive(), BraidWord::from_signed([1]));
        }
        let mut s = Sampler::new(SampleConfig {
            max_index: 2,
            max_len: 6,
            ..cfg
        });
        for _ in 0..100 {
            let w = s.gen_w_word();
            assert!(w.in_w() && w.max_index() <= 2);
        }
    }

    #[test]
    fn boundary_shapes_occur() {
        let mut s = sampler(5);
        let mut single = false;
        let mut unit_exp = false;
        let mut empty_block = false;
        for _ in 0..500 {
            let w = s.gen_w_word();
            single |= w.len() == 1;
            unit_exp |= w.syllables().iter().any(|y| y.exponent().abs() == 1);
            let b = s.gen_sigma1_positive();
            empty_block |= b
                .decompose_sigma1()
                .unwrap()
                .iter()
                .any(|blk| blk.is_empty());
        }
        assert!(single && unit_exp && empty_block);
    }

    #[test]
    fn same_seed_same_stream() {
        let (mut a, mut b) = (sampler(42), sampler(42));
        for _ in 0..200 {
            assert_eq!(a.gen_free_word(), b.gen_free_word());
            assert_eq!(a.gen_braid_word(), b.gen_braid_word());
            assert_eq!(a.gen_ld_term(), b.gen_ld_term());
        }
        let (mut f, mut g) = (a.fork(9), b.fork(9));
        assert_eq!(f.gen_braid_word(), g.gen_braid_word());
        let mut h = a.fork(10);
        let differ = (0..20).any(|_| f.gen_free_word() != h.gen_free_word());
        assert!(differ);
    }

    #[test]
    fn rejection_sampler_agrees_on_support() {
        // Both samplers produce W members and both reach words containing x1
        // as well as words inside G⁻.
        let mut s = sampler(8);
        let (mut x1_a, mut g_a, mut x1_b, mut g_b) = (0, 0, 0, 0);
        for _ in 0..1000 {
            let a = s.gen_w_word();
            let b = s.gen_w_word_by_rejection();
            assert!(a.in_w() && b.in_w());
            if a.in_g_minus() {
                g_a += 1
            } else {
                x1_a += 1
            }
            if b.in_g_minus() {
                g_b += 1
            } else {
                x1_b += 1
            }
        }
        assert!(x1_a > 100 && g_a > 100 && x1_b > 100 && g_b > 100);
    }

    #[test]
    fn catalan_counts() {
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for (size, &c) in (1..=7).zip(catalan.iter()) {
            let terms = enumerate_ld_terms(size);
            assert_eq!(terms.len(), c);
            assert!(terms.iter().all(|t| t.size() == size));
            assert_eq!(terms.iter().collect::<HashSet<_>>().len(), c);
        }
        assert_eq!(enumerate_ld_terms(1), vec![LdTerm::Leaf]);
    }
}
