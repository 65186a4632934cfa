use proptest::prelude::*;

use hhwreath_core::cherednik::{
    self, classical, dunkl, parse_word, rewrite::all_words, CherednikElement, Letter, NormalMonomial, Perm,
};
use hhwreath_core::linalg::rat;
use hhwreath_core::poly::Poly;

fn letter(n: usize) -> impl Strategy<Value = Letter> {
    prop_oneof![
        (0..n).prop_map(Letter::X),
        (0..n).prop_map(Letter::P),
        (0..n, 0..n).prop_filter("distinct", |(i, j)| i != j).prop_map(move |(i, j)| Letter::S(Perm::transposition(n, i, j))),
    ]
}

fn word() -> impl Strategy<Value = (usize, Vec<Letter>)> {
    (2usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(letter(n), 0..=5)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_acts_like_word((n, w) in word()) {
        let k = rat(2, 9);
        let nf = cherednik::normal_order(&w, n).unwrap();
        for e in [vec![2, 1, 0], vec![0, 1, 3], vec![1, 1, 1]] {
            let f = dunkl::monomial(e[..n].to_vec());
            prop_assert_eq!(dunkl::apply_element(&nf, &f, &k), dunkl::apply_word(&w, &f, &k));
        }
    }

    #[test]
    fn top_degree_part_is_independent_of_k((n, w) in word()) {
        let len = w.iter().filter(|l| !matches!(l, Letter::S(_))).count() as u32;
        let nf = cherednik::normal_order(&w, n).unwrap();
        prop_assert!(nf.max_degree().is_none_or(|d| d <= len));
        for (_, c) in nf.degree_part(len).terms() {
            prop_assert!(c.is_constant());
        }
        prop_assert_eq!(classical::specialize_zero(&nf), classical::word_normal_form(&w, n).unwrap());
    }

    #[test]
    fn multiplication_is_associative(
        n in 2usize..=3,
        picks in prop::collection::vec((0usize..1000, -2i64..=2, -2i64..=2), 3..=6),
    ) {
        let monos = NormalMonomial::enumerate(n, 2);
        let el = |i: usize| {
            let (m, a, b) = picks[i % picks.len()];
            let (m2, a2, b2) = picks[(i + 1) % picks.len()];
            let mut e = CherednikElement::monomial(monos[m % monos.len()].clone(), Poly::from_coeffs(vec![rat(a, 1), rat(b, 1)]));
            e.add_term(monos[m2 % monos.len()].clone(), Poly::from_coeffs(vec![rat(b2, 1), rat(a2, 1)]));
            e
        };
        let (a, b, c) = (el(0), el(1), el(2));
        let left = cherednik::multiply(&cherednik::multiply(&a, &b).unwrap(), &c).unwrap();
        let right = cherednik::multiply(&a, &cherednik::multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn sign_flipped_presentation_is_not_confluent() {
    let broken = cherednik::Relations { off_diagonal: -1, diagonal: 1 };
    let r = cherednik::rewrite::confluence_check_with(2, 3, broken);
    assert!(!r.passed());
    assert!(r.checks[0].detail.contains("diverge"));
}

#[test]
fn examples_from_the_relations() {
    let nf = |s: &str, n| cherednik::normal_order(&parse_word(s, n).unwrap(), n).unwrap().to_string();
    assert_eq!(nf("p1 x1", 2), "x1 p1 - 1 + k s12");
    assert_eq!(nf("p2 x1", 2), "x1 p2 - k s12");
    assert_eq!(nf("s12 x1 s12", 2), "x2");
    assert_eq!(nf("p1 s12", 2), "s12 p2");
    assert_eq!(nf("[2,3,1] x1", 3), "x2 [2,3,1]");
}

#[test]
fn spherical_product_is_bi_invariant() {
    for n in [2, 3] {
        for w in all_words(n, 2).into_iter().step_by(5) {
            let a = cherednik::normal_order(&w, n).unwrap();
            let b = cherednik::spherical_product(&a).unwrap();
            for s in Perm::all(n) {
                let g = CherednikElement::group(s);
                assert_eq!(cherednik::multiply(&g, &b).unwrap(), b);
                assert_eq!(cherednik::multiply(&b, &g).unwrap(), b);
            }
        }
    }
}
