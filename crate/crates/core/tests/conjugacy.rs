mod common;

use braid_core::conjugacy::{are_conjugate, brute, cycle, decycle, geodesic_length, to_super_summit, ultra_summit_set};
use braid_core::garside::{classical, normalize};
use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn uss_is_a_class_invariant((x, a) in pair(2..=4, 8)) {
        let y = conj(&x, &a);
        let ux = ultra_summit_set(&normalize(&x)).unwrap();
        let uy = ultra_summit_set(&normalize(&y)).unwrap();
        prop_assert_eq!(&ux.elements, &uy.elements);
        let cert = are_conjugate(&x, &y).unwrap().unwrap();
        prop_assert!(cert.verify());
    }

    #[test]
    fn witnesses_conjugate_the_source_into_each_element(x in word(2..=4, 8)) {
        let nf = normalize(&x);
        let e = classical(x.strands());
        let uss = ultra_summit_set(&nf).unwrap();
        for (el, wit) in uss.elements.iter().zip(&uss.witnesses) {
            prop_assert_eq!(&e.conjugate(&nf, wit).unwrap(), el);
        }
    }

    #[test]
    fn summit_moves_stay_in_the_class(x in word(2..=4, 8)) {
        let nf = normalize(&x);
        let (s, _) = to_super_summit(&nf);
        prop_assert!(s.inf >= nf.inf && s.sup() <= nf.sup());
        let w = |f: &braid_core::NormalForm| f.to_word(&braid_core::garside::Classical::new(x.strands()));
        prop_assert!(are_conjugate(&x, &w(&cycle(&nf))).unwrap().is_some());
        prop_assert!(are_conjugate(&x, &w(&decycle(&nf))).unwrap().is_some());
        prop_assert!(are_conjugate(&x, &w(&s)).unwrap().is_some());
    }

    #[test]
    fn agrees_with_brute_force_in_b3((u, v) in pair(3..=3, 6)) {
        prop_assert_eq!(are_conjugate(&u, &v).unwrap().is_some(), brute::are_conjugate(&u, &v, 100_000).unwrap());
    }
}

#[test]
fn uss_matches_brute_force_closure() {
    for s in ["3: 1", "3: 1 -2", "4: 1 2 3", "4: 1 -2 3 -2", "3: 1 1 2 -1", "4: 2 2 1 -3"] {
        let nf = normalize(&w(s));
        let fast: Vec<_> = ultra_summit_set(&nf).unwrap().elements;
        let slow: Vec<_> = brute::ultra_summit_set(&nf, 100_000).unwrap().into_iter().collect();
        assert_eq!(fast, slow, "{s}");
    }
}

#[test]
fn geodesic_length_matches_search() {
    for s in ["3: 1", "3: 1 -2", "3: 1 2 1 2", "3: -1 -1 2", "4: 1 -3 2", "3: 1 2 1 1 2 1"] {
        let x = w(s);
        assert_eq!(Some(geodesic_length(&x) as usize), brute::geodesic_length(&x, 4), "{s}");
    }
}
