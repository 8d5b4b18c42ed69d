mod common;

use knotgeo::braid::{mirror, parse_braid};
use knotgeo::garside3::{conjugacy_test, equal_in_b3, left_canonical_form, murasugi_class};
use knotgeo::seifert::signature_nullity_of_closure;
use knotgeo::symform::SymBilinearForm;
use knotgeo::theorems::murasugi_erle_sigma;
use knotgeo::twobridge::{parse_conway, ConwayDiagram};
use knotgeo::{BraidWord, GarsideNormalForm};
use proptest::prelude::*;

use common::{burau, char_poly, congruent, descartes_signature, padded};

fn letters(strands: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let top = strands as i32 - 1;
    prop::collection::vec((1..=top).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]), 1..=max_len)
}

fn word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    letters(strands, max_len).prop_map(move |l| padded(&BraidWord::new(strands, l).unwrap()))
}

fn any_word() -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(|n| word(n, 10))
}

fn symmetric(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(-4i64..=4, n * (n + 1) / 2).prop_map(move |upper| {
        let mut a = vec![vec![0; n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                a[i][j] = upper[k];
                a[j][i] = upper[k];
                k += 1;
            }
        }
        a
    })
}

proptest! {
    #[test]
    fn mirror_negates_sigma(w in any_word()) {
        let (s, n) = signature_nullity_of_closure(&w).unwrap();
        prop_assert_eq!(signature_nullity_of_closure(&mirror(&w)).unwrap(), (-s, n));
    }

    #[test]
    fn sigma_is_a_conjugacy_and_markov_invariant(w in any_word(), g in prop::collection::vec(prop_oneof![Just(1), Just(-1)], 0..4), k in 0usize..16) {
        let base = signature_nullity_of_closure(&w).unwrap();
        let g = BraidWord::new(w.strands(), g).unwrap();
        prop_assert_eq!(signature_nullity_of_closure(&w.conjugate_by(&g)).unwrap(), base);
        prop_assert_eq!(signature_nullity_of_closure(&w.rotate(k % w.len())).unwrap(), base);
        prop_assert_eq!(signature_nullity_of_closure(&w.stabilize(true)).unwrap(), base);
        prop_assert_eq!(signature_nullity_of_closure(&w.stabilize(false)).unwrap(), base);
    }

    #[test]
    fn murasugi_formula_matches_seifert(w in word(3, 12)) {
        let class = murasugi_class(&w).unwrap();
        prop_assert_eq!(murasugi_erle_sigma(&class), signature_nullity_of_closure(&w).unwrap().0);
        prop_assert!(conjugacy_test(&w, &class.word()).unwrap());
    }

    #[test]
    fn left_canonical_form_is_idempotent_and_sound(w in word(3, 20)) {
        let nf = left_canonical_form(&w).unwrap();
        let back = nf.to_word();
        prop_assert_eq!(&left_canonical_form(&back).unwrap(), &nf);
        prop_assert!(equal_in_b3(&w, &back).unwrap());
        prop_assert_eq!(burau(&w, 2), burau(&back, 2));
        prop_assert_eq!(burau(&w, 5), burau(&back, 5));
        let reparsed: GarsideNormalForm = nf.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, nf);
    }

    #[test]
    fn conjugacy_is_an_equivalence(a in word(3, 8), b in word(3, 8), g in word(3, 5), h in word(3, 5)) {
        let a1 = a.conjugate_by(&g);
        let a2 = a1.conjugate_by(&h);
        prop_assert!(conjugacy_test(&a, &a).unwrap());
        prop_assert!(conjugacy_test(&a, &a2).unwrap());
        prop_assert_eq!(conjugacy_test(&a, &b).unwrap(), conjugacy_test(&b, &a).unwrap());
        prop_assert_eq!(conjugacy_test(&a2, &b).unwrap(), conjugacy_test(&a, &b).unwrap());
    }

    #[test]
    fn congruence_preserves_the_signature(a in (1usize..=6).prop_flat_map(symmetric), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let p = common::random_unimodular(&mut rng, a.len());
        let form = SymBilinearForm::new(a.clone()).unwrap();
        let moved = SymBilinearForm::new(congruent(&a, &p)).unwrap();
        prop_assert_eq!(form.signature_nullity(), moved.signature_nullity());
        prop_assert_eq!(form.signature_nullity(), descartes_signature(&char_poly(&a)));
        let (s, n) = form.signature_nullity();
        prop_assert_eq!(form.negate().signature_nullity(), (-s, n));
    }

    #[test]
    fn braid_text_round_trips(w in any_word()) {
        prop_assert_eq!(parse_braid(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn conway_text_round_trips(coeffs in prop::collection::vec(1u32..=9, 1..=6)) {
        let d = ConwayDiagram::generic(coeffs).unwrap();
        prop_assert_eq!(parse_conway(&d.to_string()).unwrap(), d);
    }
}
