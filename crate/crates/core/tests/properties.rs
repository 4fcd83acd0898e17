//! Randomized property tests.

use kncrystal::word::{column_insert, plactic_class, reverse_column_insert, Word};
use kncrystal::{column, crystal, sjdt};
use kncrystal::{Alphabet, Shape, SkewTableau};
use proptest::prelude::*;

/// A random vertex of a random small C_2 crystal, produced by walking down
/// from a highest weight tableau.
fn arb_kn_c2() -> impl Strategy<Value = SkewTableau> {
    (
        prop::sample::select(Shape::all_up_to(5, 2)),
        prop::collection::vec(1usize..=2, 0..12),
    )
        .prop_map(|(lam, path)| {
            let mut t = SkewTableau::yamanouchi(Alphabet::c(2), &lam);
            for i in path {
                if let Some(next) = crystal::f(&t, i).unwrap() {
                    t = next;
                }
            }
            t
        })
}

proptest! {
    #[test]
    fn parse_render_roundtrip(t in arb_kn_c2()) {
        let s = t.render();
        let back = SkewTableau::parse(t.alphabet, &s).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn crystal_operators_invert(t in arb_kn_c2(), i in 1usize..=2) {
        if let Some(w) = crystal::f(&t, i).unwrap() {
            prop_assert_eq!(crystal::e(&w, i).unwrap(), Some(t.clone()));
        }
        if let Some(w) = crystal::e(&t, i).unwrap() {
            prop_assert_eq!(crystal::f(&w, i).unwrap(), Some(t));
        }
    }

    #[test]
    fn insertion_roundtrip(letters in prop::collection::vec(1i32..=5, 1..12)) {
        let a = Alphabet::a(5);
        let w = Word::new(a, letters).unwrap();
        let (p, q) = column_insert(&SkewTableau::empty(a), &w).unwrap();
        prop_assert_eq!(reverse_column_insert(&p, &q).unwrap(), w);
    }

    #[test]
    fn words_rectify_to_their_class(t in arb_kn_c2()) {
        // the reading word of a straight KN tableau rectifies to the tableau
        prop_assume!(t.is_straight());
        let w = kncrystal::word::reading_word(&t).unwrap();
        prop_assert_eq!(plactic_class(&w).unwrap(), t);
    }

    #[test]
    fn coadmissible_roundtrip(ords in prop::collection::vec(1usize..=8, 1..=4)) {
        let n = 4;
        let a = Alphabet::c(n);
        let mut col: Vec<i32> = ords.iter().map(|&o| a.letter_at(o)).collect();
        a.sort(&mut col);
        col.dedup();
        prop_assume!(column::is_admissible(&col, n));
        let d = column::coadmissible(&col, n).unwrap();
        prop_assert_eq!(column::coadmissible_inv(&d, n).unwrap(), col);
    }

    #[test]
    fn slides_preserve_weight_and_class(t in arb_kn_c2(), drop in 0usize..3) {
        // make a skew tableau by restricting away small letters, then slide
        let a = t.alphabet;
        let lo = 1 + drop.min(1);
        let skew = match t.restrict_window(lo, a.size()) {
            Ok(s) if !s.is_empty() => s,
            _ => return Ok(()),
        };
        prop_assume!(skew.is_kn());
        let corners = sjdt::inner_corners(&skew);
        if let Some(&corner) = corners.first() {
            let (out, _) = sjdt::complete_slide(&skew, corner).unwrap();
            prop_assert_eq!(out.weight(), skew.weight());
            let w1 = kncrystal::word::reading_word(&skew).unwrap();
            let w2 = kncrystal::word::reading_word(&out).unwrap();
            prop_assert!(kncrystal::word::plactic_equivalent(&w1, &w2).unwrap());
        }
    }
}
