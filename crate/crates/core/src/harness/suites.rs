use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;

use super::{
    enumerate_ld_terms, naive_letter_action, to_free_word, to_letters, SampleConfig, Sampler,
};
use crate::artin::{ArtinAction, Automorphism, BraidLetter, BraidWord, DEFAULT_SYLLABLE_CAP};
use crate::error::Result;
use crate::freeword::FreeWord;
use crate::ldalg::{
    check_distributivity, eval_term, verify_irreflexivity, LdOracle, LdTerm, OracleBounds,
};

/// Identity of the pseudo-random generator, printed in report headers.
pub const GENERATOR: &str = "chacha8";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Lemma3,
    Lemma4,
    Lemma5,
    Lemma6,
    Theorem,
    Relations,
    Automorphism,
    Engines,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Lemma3,
        Suite::Lemma4,
        Suite::Lemma5,
        Suite::Lemma6,
        Suite::Theorem,
        Suite::Relations,
        Suite::Automorphism,
        Suite::Engines,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma3 => "lemma3",
            Suite::Lemma4 => "lemma4",
            Suite::Lemma5 => "lemma5",
            Suite::Lemma6 => "lemma6",
            Suite::Theorem => "theorem",
            Suite::Relations => "relations",
            Suite::Automorphism => "automorphism",
            Suite::Engines => "engines",
            Suite::Oracle => "oracle",
        }
    }

    fn tag(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).unwrap() as u64 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_index: usize,
    pub max_len: usize,
    pub max_exp: i64,
    pub syllable_cap: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            trials: 500,
            max_index: 6,
            max_len: 16,
            max_exp: 5,
            syllable_cap: DEFAULT_SYLLABLE_CAP,
        }
    }
}

impl SuiteConfig {
    fn sample_config(&self) -> SampleConfig {
        SampleConfig {
            seed: self.seed,
            max_index: self.max_index,
            max_len: self.max_len,
            max_exp: self.max_exp,
            max_term_size: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    /// The checked property was violated; carries the inputs.
    Fail(String),
    /// A resource limit was hit before the check completed.
    Overflow(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialResult {
    pub trial: usize,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub results: Vec<TrialResult>,
}

impl SuiteReport {
    pub fn trials(&self) -> usize {
        self.results.len()
    }

    pub fn ok_count(&self) -> usize {
        self.results
            .iter()
            .filter(|r| r.outcome == Outcome::Ok)
            .count()
    }

    pub fn failures(&self) -> impl Iterator<Item = (usize, &str)> {
        self.results.iter().filter_map(|r| match &r.outcome {
            Outcome::Fail(m) => Some((r.trial, m.as_str())),
            _ => None,
        })
    }

    pub fn overflows(&self) -> impl Iterator<Item = (usize, &str)> {
        self.results.iter().filter_map(|r| match &r.outcome {
            Outcome::Overflow(m) => Some((r.trial, m.as_str())),
            _ => None,
        })
    }

    /// No trial failed. Overflows are reported but do not count as failures.
    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {}: seed {}, trials {}, rng {}",
            self.suite,
            self.seed,
            self.trials(),
            GENERATOR
        );
        for (trial, msg) in self.failures() {
            let _ = writeln!(out, "FAIL trial {trial}: {msg}");
        }
        for (trial, msg) in self.overflows() {
            let _ = writeln!(out, "OVERFLOW trial {trial}: {msg}");
        }
        let failed = self.failures().count();
        let overflowed = self.overflows().count();
        let _ = write!(out, "{}/{} ok", self.ok_count(), self.trials());
        if failed + overflowed > 0 {
            let _ = write!(out, " ({failed} failed, {overflowed} overflowed)");
        }
        out.push('\n');
        out
    }
}

/// Outcome of one check: `Ok(None)` passes, `Ok(Some(reason))` fails.
type Check = Result<Option<String>>;

fn fail_if(bad: bool, reason: &str) -> Option<String> {
    bad.then(|| reason.to_string())
}

struct Trial<'a> {
    sampler: Sampler,
    action: &'a ArtinAction,
    cfg: &'a SuiteConfig,
}

fn run_trial(suite: Suite, t: &mut Trial<'_>) -> (String, Check) {
    match suite {
        Suite::Lemma3 => lemma3(t),
        Suite::Lemma4 => lemma4(t),
        Suite::Lemma5 => lemma5(t),
        Suite::Lemma6 => lemma6(t),
        Suite::Theorem => theorem(t),
        Suite::Relations => relations(t),
        Suite::Automorphism => automorphism(t),
        Suite::Engines => engines(t),
        Suite::Oracle => oracle(t),
    }
}

/// σ_i^{±1} with `i >= 2` maps `W` into `W`, fixes `x1`, and preserves `G⁻`.
fn lemma3(t: &mut Trial<'_>) -> (String, Check) {
    let hi = t.cfg.max_index.max(2);
    let i = t.sampler.range(2, hi);
    let w = t.sampler.gen_w_word();
    let inputs = format!("i={i} w={w}");
    let check = (|| {
        for letter in [BraidLetter::pos(i), BraidLetter::neg(i)] {
            let image = t.action.letter_action(letter, &w)?;
            if !image.in_w() {
                return Ok(Some(format!(
                    "image {image} under {} left W",
                    BraidWord::new(vec![letter])
                )));
            }
            if w.in_g_minus() && !image.in_g_minus() {
                return Ok(Some(format!("image {image} left G-")));
            }
            let x1 = FreeWord::generator(1);
            if t.action.letter_action(letter, &x1)? != x1 {
                return Ok(Some("x1 was moved".into()));
            }
        }
        Ok(None)
    })();
    (inputs, check)
}

/// σ1(x1 w x1⁻¹) = x1 w̄ x1⁻¹ with w̄ ∈ W.
fn lemma4(t: &mut Trial<'_>) -> (String, Check) {
    let w = t.sampler.gen_w_word();
    let inputs = format!("w={w}");
    let check = (|| {
        let image = t
            .action
            .letter_action(BraidLetter::pos(1), &w.conjugate_by_x1()?)?;
        Ok(match image.strip_x1_conjugate() {
            Some(bar) => fail_if(!bar.in_w(), "stripped word not in W"),
            None => Some(format!("image {image} is not x1 W x1^-1")),
        })
    })();
    (inputs, check)
}

/// Follows `α1 σ1 α2 ... σ1 αn` block by block: `α1` fixes `x1`, and from the
/// first `σ1` on the image stays in `x1 W x1⁻¹`.
fn lemma5(t: &mut Trial<'_>) -> (String, Check) {
    let b = t.sampler.gen_sigma1_positive();
    let inputs = format!("b={b}");
    let check = (|| {
        let blocks = b.decompose_sigma1()?;
        let x1 = FreeWord::generator(1);
        let mut cur = t.action.apply(&blocks[0], &x1)?;
        if cur != x1 {
            return Ok(Some(format!("first block moved x1 to {cur}")));
        }
        for block in &blocks[1..] {
            cur = t.action.letter_action(BraidLetter::pos(1), &cur)?;
            if cur.strip_x1_conjugate().is_none() {
                return Ok(Some(format!("after sigma1: {cur} not in x1 W x1^-1")));
            }
            cur = t.action.apply(block, &cur)?;
            if cur.strip_x1_conjugate().is_none() {
                return Ok(Some(format!(
                    "after block {block}: {cur} not in x1 W x1^-1"
                )));
            }
        }
        let whole = t.action.apply(&b, &x1)?;
        if whole != cur {
            return Ok(Some("blockwise and whole-word images differ".into()));
        }
        Ok(fail_if(whole == x1, "x1 is fixed"))
    })();
    (inputs, check)
}

fn lemma6(t: &mut Trial<'_>) -> (String, Check) {
    let s = &mut t.sampler;
    s.set_bounds(t.cfg.max_index.min(4), t.cfg.max_len.min(6));
    let (a, b, c) = (s.gen_braid_word(), s.gen_braid_word(), s.gen_braid_word());
    let inputs = format!("a={a} b={b} c={c}");
    let check =
        check_distributivity(t.action, &a, &b, &c).map(|ok| fail_if(!ok, "a*(b*c) != (a*b)*(a*c)"));
    (inputs, check)
}

fn theorem(t: &mut Trial<'_>) -> (String, Check) {
    let s = &mut t.sampler;
    s.set_bounds(t.cfg.max_index, t.cfg.max_len.min(6));
    let alpha = s.gen_braid_word();
    s.set_bounds(t.cfg.max_index, t.cfg.max_len.min(4));
    let k = s.range(1, 4);
    let bs: Vec<BraidWord> = (0..k).map(|_| s.gen_braid_word()).collect();
    let listed: Vec<String> = bs.iter().map(|b| format!("[{b}]")).collect();
    let inputs = format!("alpha={alpha} betas={}", listed.join(" "));
    let check = verify_irreflexivity(t.action, &alpha, &bs).map(|cert| {
        if cert.passes() {
            None
        } else {
            Some(format!(
                "certificate failed: sigma1_positive={} stripped={} distinct={}",
                cert.sigma1_positive,
                cert.stripped.is_some(),
                cert.distinct_from_alpha
            ))
        }
    });
    (inputs, check)
}

/// One equality-preserving edit: insert a cancelling pair, rewrite a braid
/// relation or far commutation in place, or insert a relator.
fn perturb(s: &mut Sampler, b: &BraidWord) -> BraidWord {
    let max_index = s.config().max_index;
    let letters = b.letters();
    let mut rewrites: Vec<(usize, usize, Vec<BraidLetter>)> = Vec::new();
    for p in 0..letters.len() {
        if p + 1 < letters.len() {
            let (x, y) = (letters[p], letters[p + 1]);
            if x.index().abs_diff(y.index()) > 1 {
                rewrites.push((p, 2, vec![y, x]));
            }
        }
        if p + 2 < letters.len() {
            let (x, y, z) = (letters[p], letters[p + 1], letters[p + 2]);
            let same_sign = x.sign() == y.sign() && y.sign() == z.sign();
            if same_sign && x == z && x.index().abs_diff(y.index()) == 1 {
                rewrites.push((p, 3, vec![y, x, y]));
            }
        }
    }
    let mut out = letters.to_vec();
    match s.range(0, 2) {
        0 if !rewrites.is_empty() => {
            let (p, n, repl) = rewrites.swap_remove(s.range(0, rewrites.len() - 1));
            out.splice(p..p + n, repl);
        }
        1 if max_index >= 2 => {
            let i = s.range(1, max_index - 1);
            let (a, b) = (BraidLetter::pos(i), BraidLetter::pos(i + 1));
            let relator = [a, b, a, b.inverse(), a.inverse(), b.inverse()];
            let p = s.range(0, out.len());
            out.splice(p..p, relator);
        }
        _ => {
            let l = s.gen_letter();
            let p = s.range(0, out.len());
            out.splice(p..p, [l, l.inverse()]);
        }
    }
    BraidWord::new(out)
}

fn relations(t: &mut Trial<'_>) -> (String, Check) {
    let b = t.sampler.gen_braid_word();
    let b1 = perturb(&mut t.sampler, &b);
    let b2 = perturb(&mut t.sampler, &b1);
    let hi = t.cfg.max_index.max(2);
    let i = t.sampler.range(1, hi - 1);
    let j = t.sampler.range(1, hi);
    let extra = t.sampler.gen_letter();
    let inputs = format!(
        "b={b} b1={b1} b2={b2} i={i} j={j} extra={}",
        BraidWord::new(vec![extra])
    );
    let check = (|| {
        let eq = |x: &BraidWord, y: &BraidWord| t.action.braid_eq(x, y);
        let (i1, i2) = (i as i64, i as i64 + 1);
        if !eq(
            &BraidWord::from_signed([i1, i2, i1]),
            &BraidWord::from_signed([i2, i1, i2]),
        )? {
            return Ok(Some("braid relation rejected".into()));
        }
        if i.abs_diff(j) > 1
            && !eq(
                &BraidWord::from_signed([i1, j as i64]),
                &BraidWord::from_signed([j as i64, i1]),
            )?
        {
            return Ok(Some("far commutation rejected".into()));
        }
        if !eq(&b, &b)? {
            return Ok(Some("not reflexive".into()));
        }
        if !eq(&b, &b1)? || !eq(&b1, &b)? {
            return Ok(Some("edit changed the element".into()));
        }
        if !eq(&b1, &b2)? || !eq(&b, &b2)? {
            return Ok(Some("not transitive across edits".into()));
        }
        let mut longer = b.clone();
        longer.push(extra);
        Ok(fail_if(eq(&b, &longer)?, "b equals b times a generator"))
    })();
    (inputs, check)
}

fn automorphism(t: &mut Trial<'_>) -> (String, Check) {
    let b = t.sampler.gen_braid_word();
    let (u, v) = (t.sampler.gen_free_word(), t.sampler.gen_free_word());
    let inputs = format!("b={b} u={u} v={v}");
    let check = (|| {
        let round = t.action.apply(&b.concat(&b.inverse()), &u)?;
        if round != u {
            return Ok(Some(format!("b b^-1 sent u to {round}")));
        }
        let back = t.action.apply(&b.inverse().concat(&b), &u)?;
        if back != u {
            return Ok(Some(format!("b^-1 b sent u to {back}")));
        }
        let whole = t.action.apply(&b, &u.mul(&v)?)?;
        let parts = t.action.apply(&b, &u)?.mul(&t.action.apply(&b, &v)?)?;
        Ok(fail_if(whole != parts, "b(uv) != b(u) b(v)"))
    })();
    (inputs, check)
}

/// Cross-checks the three engines: the letter-by-letter reference against the
/// syllable engine on one letter, and the syllable engine against the
/// compressed images on a whole braid word, including braid equality.
fn engines(t: &mut Trial<'_>) -> (String, Check) {
    let letter = t.sampler.gen_letter();
    let w = t.sampler.gen_free_word();
    let b = t.sampler.gen_braid_word();
    let c = if t.sampler.range(0, 1) == 0 {
        perturb(&mut t.sampler, &b)
    } else {
        t.sampler.gen_braid_word()
    };
    let inputs = format!("letter={} w={w} b={b} c={c}", BraidWord::new(vec![letter]));
    let check = (|| {
        let fast = t.action.letter_action(letter, &w)?;
        let slow = to_free_word(&naive_letter_action(letter, &to_letters(&w)));
        if fast != slow {
            return Ok(Some(format!(
                "syllable engine {fast}, letter engine {slow}"
            )));
        }
        let flat = t.action.apply(&b, &w)?;
        let mut images = Automorphism::of(&b, w.max_index())?;
        let packed = images.apply(&w)?.to_free_word(t.action.syllable_cap)?;
        if flat != packed {
            return Ok(Some(format!(
                "syllable engine {flat}, compressed engine {packed}"
            )));
        }
        let (eq_flat, eq_packed) = (t.action.braid_eq_flat(&b, &c)?, t.action.braid_eq(&b, &c)?);
        Ok(fail_if(
            eq_flat != eq_packed,
            &format!("braid_eq {eq_packed} compressed, {eq_flat} explicit"),
        ))
    })();
    (inputs, check)
}

/// Compares braid equality of evaluated terms with the rewriting oracle on
/// terms of at most four leaves. With a random base only the direction
/// "LD-equivalent implies equal braids" is asserted.
fn oracle(t: &mut Trial<'_>) -> (String, Check) {
    let terms: Vec<LdTerm> = (1..=4).flat_map(enumerate_ld_terms).collect();
    let s = terms[t.sampler.range(0, terms.len() - 1)].clone();
    let u = terms[t.sampler.range(0, terms.len() - 1)].clone();
    t.sampler
        .set_bounds(t.cfg.max_index.min(3), t.cfg.max_len.min(3));
    let base = t.sampler.gen_braid_word();
    let inputs = format!("s={s} t={u} base={base}");
    let check = (|| {
        let verdict = LdOracle::new(OracleBounds::default()).decide(&s, &u);
        let Some(equiv) = verdict.as_bool() else {
            return Ok(Some("oracle returned unknown".into()));
        };
        let e = BraidWord::identity();
        let braids_equal = t.action.braid_eq(&eval_term(&s, &e), &eval_term(&u, &e))?;
        if braids_equal != equiv {
            return Ok(Some(format!(
                "braid equality {braids_equal}, oracle {verdict:?}"
            )));
        }
        if equiv
            && !t
                .action
                .braid_eq(&eval_term(&s, &base), &eval_term(&u, &base))?
        {
            return Ok(Some("equivalent terms differ at the sampled base".into()));
        }
        Ok(None)
    })();
    (inputs, check)
}

/// Runs `cfg.trials` trials of `suite`, in parallel, reporting in trial order.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    let action = ArtinAction::with_cap(cfg.syllable_cap);
    let root = Sampler::new(cfg.sample_config());
    let results = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let stream = (suite.tag() << 40) | trial as u64;
            let mut t = Trial {
                sampler: root.fork(stream),
                action: &action,
                cfg,
            };
            let (inputs, check) = run_trial(suite, &mut t);
            let outcome = match check {
                Ok(None) => Outcome::Ok,
                Ok(Some(reason)) => Outcome::Fail(format!("{reason}; {inputs}")),
                Err(e) if e.is_resource() => Outcome::Overflow(format!("{e}; {inputs}")),
                Err(e) => Outcome::Fail(format!("{e}; {inputs}")),
            };
            TrialResult { trial, outcome }
        })
        .collect();
    SuiteReport {
        suite,
        seed: cfg.seed,
        results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::Sign;

    fn small(seed: u64) -> SuiteConfig {
        SuiteConfig {
            seed,
            trials: 40,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn every_suite_passes_a_short_run() {
        for suite in Suite::ALL {
            let report = run_suite(suite, &small(3));
            assert!(report.passed(), "{}", report.render());
            assert_eq!(report.trials(), 40);
        }
    }

    #[test]
    fn names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>(), Ok(suite));
        }
        assert!("nosuch".parse::<Suite>().is_err());
    }

    #[test]
    fn report_is_deterministic() {
        for suite in [Suite::Theorem, Suite::Relations] {
            let a = run_suite(suite, &small(7)).render();
            let b = run_suite(suite, &small(7)).render();
            assert_eq!(a, b);
            assert!(a.ends_with("40/40 ok\n"), "{a}");
        }
    }

    #[test]
    fn perturb_preserves_the_element() {
        let mut s = Sampler::new(SampleConfig {
            seed: 1,
            ..SampleConfig::default()
        });
        let action = ArtinAction::default();
        for _ in 0..200 {
            let b = s.gen_braid_word();
            let c = perturb(&mut s, &b);
            assert!(action.braid_eq(&b, &c).unwrap(), "{b} vs {c}");
        }
    }

    #[test]
    fn failures_are_rendered_with_inputs() {
        let report = SuiteReport {
            suite: Suite::Lemma6,
            seed: 1,
            results: vec![
                TrialResult {
                    trial: 0,
                    outcome: Outcome::Ok,
                },
                TrialResult {
                    trial: 1,
                    outcome: Outcome::Fail("bad; a=s1".into()),
                },
                TrialResult {
                    trial: 2,
                    outcome: Outcome::Overflow("cap; a=s2".into()),
                },
            ],
        };
        assert!(!report.passed());
        let text = report.render();
        assert!(text.contains("FAIL trial 1: bad; a=s1"));
        assert!(text.contains("OVERFLOW trial 2: cap; a=s2"));
        assert!(text.ends_with("1/3 ok (1 failed, 1 overflowed)\n"));
    }

    #[test]
    fn signs_in_perturbed_relations() {
        // σ1⁻¹ σ2⁻¹ σ1⁻¹ = σ2⁻¹ σ1⁻¹ σ2⁻¹ is one of the in-place rewrites.
        let a = BraidWord::new(vec![
            BraidLetter::new(1, Sign::Minus),
            BraidLetter::neg(2),
            BraidLetter::neg(1),
        ]);
        let b = BraidWord::from_signed([-2, -1, -2]);
        assert!(ArtinAction::default().braid_eq(&a, &b).unwrap());
    }
}
