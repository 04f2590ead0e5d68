mod common;

use common::*;
use proptest::prelude::*;
use sbraid::representation::{cmp_l, morphism_eq};
use sbraid::xmonoid::{lex_cmp, sf_eval};
use sbraid::{Relation, XSeq, XWord};

fn arb_xword(max_len: usize) -> impl Strategy<Value = XWord> {
    prop::collection::vec(1u32..=5, 0..=max_len).prop_map(XWord::new)
}

proptest! {
    #[test]
    fn canonical_form_is_an_ascending_representative(y in arb_xword(7)) {
        let c = y.canonicalize();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.canonicalize(), c.clone());
        prop_assert_eq!(c.len(), y.len());
        prop_assert!(morphism_eq(&c.to_rword(), &y.to_rword()));
    }

    #[test]
    fn equal_elements_share_a_canonical_form(a in arb_xword(6), b in arb_xword(6)) {
        let same = morphism_eq(&a.to_rword(), &b.to_rword());
        prop_assert_eq!(same, a.canonicalize() == b.canonicalize());
    }

    #[test]
    fn single_rewrites_preserve_the_canonical_form(y in arb_xword(7), pos in 0usize..7) {
        if let Some(z) = y.rewrite_at(pos) {
            prop_assert_eq!(z.canonicalize(), y.canonicalize());
        }
    }

    #[test]
    fn s_is_a_homomorphism(a in arb_xword(5), b in arb_xword(5)) {
        prop_assert_eq!(a.concat(&b).s_of(), a.s_of().compose(&b.s_of()));
    }

    #[test]
    fn sequence_composition_is_associative(a in arb_xword(4), b in arb_xword(4), c in arb_xword(4)) {
        let (sa, sb, sc) = (a.s_of(), b.s_of(), c.s_of());
        prop_assert_eq!(sa.compose(&sb).compose(&sc), sa.compose(&sb.compose(&sc)));
    }

    #[test]
    fn s_determines_the_element(y in arb_xword(7)) {
        let s = y.s_of();
        prop_assert_eq!(s.canonical_word(), y.canonicalize());
        prop_assert_eq!(s.excess() as usize, y.len());
    }

    #[test]
    fn p_counts_fibers(y in arb_xword(6)) {
        let s = y.s_of();
        let top = 2 * y.len() as u32 + 12;
        for j in 1..=8u32 {
            let fiber = (1..=top).filter(|&k| y.p_eval(k) == j).count() as u32;
            prop_assert_eq!(fiber, s.get(j as usize));
        }
    }

    #[test]
    fn lex_agrees_with_cmp_l(a in arb_xword(5), b in arb_xword(5)) {
        prop_assert_eq!(lex_cmp(&a, &b), cmp_l(&a.to_rword(), &b.to_rword()));
    }

    #[test]
    fn left_cancellation(a in arb_xword(4), b in arb_xword(4), c in arb_xword(4)) {
        let products_equal = a.concat(&b).canonicalize() == a.concat(&c).canonicalize();
        prop_assert_eq!(products_equal, b.canonicalize() == c.canonicalize());
    }
}

#[test]
fn sf_respects_the_relations() {
    for rule in Relation::ALL {
        for (lhs, rhs) in rule.instances(6) {
            for k in 1..=12 {
                assert_eq!(
                    sf_eval(&lhs, k),
                    sf_eval(&rhs, k),
                    "({}) at {k}",
                    rule.number()
                );
            }
        }
    }
}

#[test]
fn sequence_edge_cases() {
    let unit = XSeq::new(vec![1, 1, 1]);
    assert_eq!(unit, XSeq::default());
    assert_eq!(unit.excess(), 0);
    assert_eq!(unit.canonical_word(), XWord::default());
    assert_eq!(XWord::from_rword(&w("x2 s1")), None);
    assert_eq!(XWord::from_rword(&w("x3 x1")).unwrap().to_string(), "x3 x1");
}
