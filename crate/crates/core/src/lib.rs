//! The braid group `B∞` acting on the free group `F = ⟨x1, x2, ...⟩`, the
//! left self-distributive operation `a * b = a · s(b) · σ1 · s(a⁻¹)` on braid
//! words, and an executable check that `a ≠ ((a * b1) * ...) * bk`.
//!
//! Modules:
//! - [`freeword`]: reduced free-group words and the word classes `W`, `G⁻`, `F2`, `Z`.
//! - [`artin`]: braid words, their action on `F`, shift, and equality in `B`.
//! - [`ldalg`]: the `*` operation, LD terms, certificates and the rewriting oracle.
//! - [`textio`]: parsers and printers for all three value kinds.
//! - [`harness`]: seeded samplers, brute-force oracles and property suites.

pub mod artin;
pub mod error;
pub mod freeword;
pub mod harness;
pub mod ldalg;
pub mod textio;

pub use artin::{
    apply, braid_eq, braid_eq_compressed, letter_action, ArtinAction, Automorphism, BraidLetter,
    BraidWord, CompressedWord, Sign, DEFAULT_SYLLABLE_CAP,
};
pub use error::{Error, Result};
pub use freeword::{FreeWord, Syllable, WShape};
pub use ldalg::{
    check_distributivity, check_laver_witness, eval_term, fold_star, ld_equiv_oracle, star,
    verify_irreflexivity, Fold, Image, IrreflexivityCertificate, LdOracle, LdTerm, OracleBounds,
    Refutation, Verdict, SUMMARY_LETTERS,
};
pub use textio::{
    parse_braid_word, parse_free_word, parse_ld_term, print_braid_word, print_free_word,
    print_ld_term, ParseError, SourceSpan,
};
