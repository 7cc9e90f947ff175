use ldbraid::harness::{naive_apply, to_free_word, to_letters};
use ldbraid::*;
use proptest::prelude::*;

fn raw_word(max_index: usize, max_len: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec(
        (1..=max_index, prop_oneof![-4i64..=-1, 1i64..=4]),
        0..=max_len,
    )
}

fn free_word() -> impl Strategy<Value = FreeWord> {
    raw_word(5, 12).prop_map(|raw| FreeWord::reduce(raw).unwrap())
}

fn braid_word(max_index: i64, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(prop_oneof![-max_index..=-1, 1..=max_index], 0..=max_len)
        .prop_map(BraidWord::from_signed)
}

fn ld_term() -> impl Strategy<Value = LdTerm> {
    Just(LdTerm::Leaf).prop_recursive(3, 6, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| LdTerm::op(l, r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduction_is_idempotent(raw in raw_word(4, 20)) {
        let w = FreeWord::reduce(raw.clone()).unwrap();
        let again = FreeWord::reduce(w.syllables().iter().map(|s| (s.index(), s.exponent()))).unwrap();
        prop_assert_eq!(&again, &w);
        let letters: Vec<_> = raw.iter().flat_map(|&(i, e)| std::iter::repeat_n((i, e.signum()), e.unsigned_abs() as usize)).collect();
        prop_assert_eq!(FreeWord::reduce(letters).unwrap(), w);
    }

    #[test]
    fn group_laws(u in free_word(), v in free_word(), w in free_word()) {
        prop_assert_eq!(u.mul(&v).unwrap().mul(&w).unwrap(), u.mul(&v.mul(&w).unwrap()).unwrap());
        prop_assert!(u.mul(&u.inv()).unwrap().is_identity());
        prop_assert_eq!(u.mul(&v).unwrap().inv(), v.inv().mul(&u.inv()).unwrap());
    }

    #[test]
    fn conjugation_by_x1_strips_back(w in free_word()) {
        if w.in_w() {
            prop_assert_eq!(w.conjugate_by_x1().unwrap().strip_x1_conjugate(), Some(w));
        } else if let Some(inner) = w.strip_x1_conjugate() {
            prop_assert!(inner.in_w());
        }
    }

    #[test]
    fn printing_round_trips(w in free_word(), b in braid_word(6, 12), t in ld_term()) {
        prop_assert_eq!(parse_free_word(&print_free_word(&w)).unwrap(), w);
        prop_assert_eq!(parse_braid_word(&print_braid_word(&b)).unwrap(), b);
        prop_assert_eq!(parse_ld_term(&print_ld_term(&t)).unwrap(), t);
    }

    #[test]
    fn action_is_a_right_action(a in braid_word(4, 8), b in braid_word(4, 8), w in free_word()) {
        let whole = apply(&a.concat(&b), &w).unwrap();
        prop_assert_eq!(&whole, &apply(&b, &apply(&a, &w).unwrap()).unwrap());
        let reference = to_free_word(&naive_apply(a.concat(&b).letters(), &to_letters(&w)));
        prop_assert_eq!(whole, reference);
    }

    #[test]
    fn compressed_images_match(b in braid_word(3, 30), w in free_word()) {
        let mut images = Automorphism::of(&b, w.max_index()).unwrap();
        let packed = images.apply(&w).unwrap().to_free_word(usize::MAX).unwrap();
        prop_assert_eq!(packed, apply(&b, &w).unwrap());
    }

    #[test]
    fn braid_equality_engines_agree(a in braid_word(3, 10), b in braid_word(3, 10)) {
        let action = ArtinAction::default();
        prop_assert_eq!(action.braid_eq(&a, &b).unwrap(), action.braid_eq_flat(&a, &b).unwrap());
        let back = a.concat(&b).concat(&b.inverse());
        prop_assert!(action.braid_eq(&a, &back).unwrap());
    }

    #[test]
    fn star_shape(a in braid_word(4, 6), b in braid_word(4, 6)) {
        let s = star(&a, &b);
        prop_assert_eq!(s.len(), 2 * a.len() + b.len() + 1);
        prop_assert_eq!(&s.letters()[..a.len()], a.letters());
    }

    #[test]
    fn left_distributivity(a in braid_word(3, 4), b in braid_word(3, 4), c in braid_word(3, 4)) {
        prop_assert!(check_distributivity(&ArtinAction::default(), &a, &b, &c).unwrap());
    }

    #[test]
    fn folds_are_irreflexive(a in braid_word(4, 5), bs in prop::collection::vec(braid_word(4, 3), 1..=3)) {
        let cert = verify_irreflexivity(&ArtinAction::default(), &a, &bs).unwrap();
        prop_assert!(cert.passes(), "{:?}", cert);
        prop_assert_eq!(a.concat(&cert.suffix), cert.result);
    }

    #[test]
    fn equivalent_terms_give_equal_braids(s in ld_term(), t in ld_term(), base in braid_word(3, 3)) {
        let verdict = ld_equiv_oracle(&s, &t, 8);
        if verdict.as_bool() == Some(true) {
            prop_assert!(braid_eq(&eval_term(&s, &base), &eval_term(&t, &base)).unwrap());
        }
    }
}
