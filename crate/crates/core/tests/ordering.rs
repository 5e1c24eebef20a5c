mod common;

use std::cmp::Ordering;

use braid_core::garside::equal;
use braid_core::ordering::{compare, handle_reduce, is_positive, torsion_probe};
use common::*;
use proptest::prelude::*;

proptest! {
    #[test]
    fn left_invariant((u, v, x) in triple(2..=4, 8)) {
        prop_assert_eq!(compare(&cat(&x, &u), &cat(&x, &v)).unwrap(), compare(&u, &v).unwrap());
    }

    #[test]
    fn total_and_antisymmetric((u, v) in pair(2..=4, 8)) {
        let c = compare(&u, &v).unwrap();
        prop_assert_eq!(compare(&v, &u).unwrap(), c.reverse());
        prop_assert_eq!(c == Ordering::Equal, equal(&u, &v).unwrap());
    }

    #[test]
    fn transitive((u, v, x) in triple(2..=4, 6)) {
        let (a, b) = (compare(&u, &v).unwrap(), compare(&v, &x).unwrap());
        if a == b {
            prop_assert_eq!(compare(&u, &x).unwrap(), a);
        }
    }

    #[test]
    fn positive_words_exceed_one(p in positive_word(2..=5, 10)) {
        prop_assert!(is_positive(&p).unwrap());
        prop_assert!(!is_positive(&p.inverse()).unwrap());
    }

    #[test]
    fn reduction_preserves_the_braid(x in word(2..=5, 12)) {
        let r = handle_reduce(&x).unwrap();
        prop_assert!(equal(&r, &x).unwrap());
    }

    #[test]
    fn no_torsion(x in word(2..=4, 6)) {
        prop_assume!(!equal(&x, &braid_core::BraidWord::identity(x.strands())).unwrap());
        prop_assert!(torsion_probe(&x, 4).unwrap());
    }
}

#[test]
fn reference_comparisons() {
    assert_eq!(compare(&w("3:"), &w("3: 1")).unwrap(), Ordering::Less);
    assert_eq!(compare(&w("3: 2"), &w("3: 1")).unwrap(), Ordering::Less);
    let g = w("3: 1 -2");
    assert_eq!(compare(&g, &g.pow(2)).unwrap(), Ordering::Less);
    assert!(torsion_probe(&w("3: 1"), 5).unwrap());
    assert!(torsion_probe(&braid_core::BraidWord::delta(3), 3).unwrap());
}
