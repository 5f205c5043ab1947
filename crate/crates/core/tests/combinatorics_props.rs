use proptest::prelude::*;

use pnsym_core::combinatorics::{
    act_right, contingency_tables, direct_sum, permutations_of, reduce, Mopiscotion, Permutation, WeakComposition,
    WeakMopiscotion,
};
use pnsym_core::verify;

fn permutation(k: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=k).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_line(v).unwrap())
}

fn weak(len: usize, max: u32) -> impl Strategy<Value = WeakComposition> {
    prop::collection::vec(0..=max, len).prop_map(WeakComposition::new)
}

proptest! {
    #[test]
    fn right_action_is_an_action(
        (gamma, pi, rho) in (0usize..=6).prop_flat_map(|k| (weak(k, 5), permutation(k), permutation(k)))
    ) {
        let lhs = act_right(&act_right(&gamma, &pi).unwrap(), &rho).unwrap();
        let rhs = act_right(&gamma, &pi.compose(&rho).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn direct_sum_is_a_monoid(
        a in (0usize..=4).prop_flat_map(permutation),
        b in (0usize..=4).prop_flat_map(permutation),
        c in (0usize..=4).prop_flat_map(permutation),
    ) {
        prop_assert_eq!(direct_sum(&direct_sum(&a, &b), &c), direct_sum(&a, &direct_sum(&b, &c)));
        let e = Permutation::identity(0);
        prop_assert_eq!(&direct_sum(&e, &a), &a);
        prop_assert_eq!(&direct_sum(&a, &e), &a);
    }

    #[test]
    fn concat_is_a_monoid(a in (0usize..=4).prop_flat_map(|k| weak(k, 3)),
                          b in (0usize..=4).prop_flat_map(|k| weak(k, 3)),
                          c in (0usize..=4).prop_flat_map(|k| weak(k, 3))) {
        prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
        prop_assert_eq!(&WeakComposition::empty().concat(&a), &a);
        prop_assert_eq!(&a.concat(&WeakComposition::empty()), &a);
    }

    #[test]
    fn contingency_tables_transpose(
        (alpha, beta) in (0usize..=3, 0usize..=3, 0usize..=4).prop_flat_map(|(k, l, n)| {
            let split = move |parts: usize| prop::collection::vec(0u32..=n as u32, parts);
            (split(k), split(l))
        })
    ) {
        let alpha = WeakComposition::new(alpha);
        let beta = WeakComposition::new(beta);
        let mut forward: Vec<_> = contingency_tables(&alpha, &beta).map(|t| t.transpose()).collect();
        let mut backward: Vec<_> = contingency_tables(&beta, &alpha).collect();
        forward.sort_by_key(|t| t.cells().to_vec());
        backward.sort_by_key(|t| t.cells().to_vec());
        prop_assert_eq!(forward, backward);
        for t in contingency_tables(&alpha, &beta) {
            prop_assert_eq!(t.row_sums(), alpha.entries().to_vec());
            prop_assert_eq!(t.col_sums(), beta.entries().to_vec());
        }
    }

    #[test]
    fn reduce_is_idempotent(
        (alpha, sigma) in (0usize..=6).prop_flat_map(|k| (weak(k, 3), permutation(k)))
    ) {
        let once = reduce(&WeakMopiscotion::new(alpha, sigma).unwrap());
        let twice = reduce(&once.to_weak());
        prop_assert_eq!(&once, &twice);
        let again = Mopiscotion::new(once.alpha().clone(), once.sigma().clone()).unwrap();
        prop_assert_eq!(once, again);
    }
}

#[test]
fn zolotarev_factorization_exhaustive() {
    let r = verify::zolotarev_factorization(4);
    assert!(r.passed(), "{r}");
    let expected: usize = (0..=4).map(|k| (0..=4).map(|l| permutations_of(k).len() * permutations_of(l).len()).sum::<usize>()).sum();
    assert_eq!(r.cases, expected);
}

#[test]
fn wreath_associativity_exhaustive() {
    let r = verify::wreath_associativity(4);
    assert!(r.passed(), "{r}");
}

#[test]
fn table_readings_exhaustive() {
    let r = verify::table_readings(3);
    assert!(r.passed(), "{r}");
}
