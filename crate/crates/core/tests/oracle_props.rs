use proptest::prelude::*;
use proptest::sample::Index;

use pnsym_core::checker::id_element;
use pnsym_core::combinatorics::mopiscotions_of_size;
use pnsym_core::linear::rat;
use pnsym_core::oracle::{convolve, evaluate_pnsym, mul, FreeElement, TriangularModel, Word};
use pnsym_core::pnsym::PnsymElement;

fn element(max: usize) -> impl Strategy<Value = PnsymElement> {
    prop::collection::vec((0..=max, any::<Index>(), -2i64..=2), 1..=3).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(d, i, c)| (i.get(&mopiscotions_of_size(d)).clone(), rat(c)))
            .collect()
    })
}

/// A combination of up to three words of degree at most 3 in `T(4)`.
fn vector() -> impl Strategy<Value = FreeElement> {
    let m = TriangularModel::new(4);
    let words: Vec<Word> = (0..=3).flat_map(|d| m.words_of_degree(d)).collect();
    prop::collection::vec((any::<Index>(), -2i64..=2), 1..=3)
        .prop_map(move |terms| terms.into_iter().map(|(i, c)| (i.get(&words).clone(), rat(c))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn internal_product_acts_as_composition(f in element(3), g in element(3), x in vector()) {
        let m = TriangularModel::new(4);
        let lhs = evaluate_pnsym(&m, &f.internal_mul(&g), &x);
        let rhs = evaluate_pnsym(&m, &f, &evaluate_pnsym(&m, &g, &x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn external_product_acts_as_convolution(f in element(3), g in element(3), x in vector()) {
        let m = TriangularModel::new(4);
        let lhs = evaluate_pnsym(&m, &f.external_mul(&g), &x);
        let rhs = convolve(&m, &x, |y| evaluate_pnsym(&m, &f, y), |y| evaluate_pnsym(&m, &g, y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_is_linear(f in element(3), g in element(3), x in vector(), y in vector()) {
        let m = TriangularModel::new(4);
        let sum = &x + &y;
        prop_assert_eq!(
            evaluate_pnsym(&m, &(&f + &g), &sum),
            evaluate_pnsym(&m, &f, &x) + evaluate_pnsym(&m, &f, &y) + evaluate_pnsym(&m, &g, &x) + evaluate_pnsym(&m, &g, &y)
        );
    }

    #[test]
    fn model_product_is_associative(x in vector(), y in vector(), z in vector()) {
        let m = TriangularModel::new(4);
        prop_assert_eq!(mul(&m, &mul(&m, &x, &y), &z), mul(&m, &x, &mul(&m, &y, &z)));
    }
}

#[test]
fn antipode_acts_as_hopf_antipode_on_generators() {
    let m = TriangularModel::new(4);
    let s = id_element(3).antipode();
    for ((i, j), x) in m.generators() {
        let d = (j - i) as usize;
        let sx = evaluate_pnsym(&m, &s, &x);
        let back = convolve(&m, &x, |y| evaluate_pnsym(&m, &s, y), |y| y.clone());
        let expected = if d == 0 { x.clone() } else { FreeElement::zero() };
        assert_eq!(back, expected, "x({i},{j})");
        assert!(!sx.is_zero() || d == 0);
    }
}
