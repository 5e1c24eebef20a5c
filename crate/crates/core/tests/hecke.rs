mod common;

use braid_core::diagram::{closure, homfly_via_skein, stabilize};
use braid_core::hecke::*;
use braid_core::laurent::LaurentPoly;
use common::*;
use proptest::prelude::*;

fn mirror_image(p: &LaurentPoly) -> LaurentPoly {
    let hv = homfly_vars();
    p.substitute("l", &LaurentPoly::parse(&hv, "l^-1").unwrap()).unwrap().substitute("m", &LaurentPoly::parse(&hv, "-m").unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn markov_invariance((x, a) in pair(2..=4, 7), positive in any::<bool>()) {
        let p = homfly_via_trace(&x);
        prop_assert_eq!(homfly_via_trace(&conj(&x, &a)), p.clone());
        prop_assert_eq!(homfly_via_trace(&stabilize(&x, positive)), p);
    }

    #[test]
    fn mirror_and_reverse(x in word(2..=4, 7)) {
        let p = homfly_via_trace(&x);
        prop_assert_eq!(homfly_via_trace(&x.mirror()), mirror_image(&p));
        let rev = braid_core::BraidWord::new(x.strands(), x.letters().iter().rev().copied().collect()).unwrap();
        prop_assert_eq!(homfly_via_trace(&rev), p);
    }

    #[test]
    fn skein_agrees_with_trace(x in word(2..=4, 6)) {
        prop_assert_eq!(homfly_via_skein(&closure(&x)).unwrap(), homfly_via_trace(&x));
    }

    #[test]
    fn specializations(x in word(2..=4, 6)) {
        let p = homfly_via_trace(&x);
        prop_assert!(jones_from_homfly(&p).is_ok());
        prop_assert!(alexander_agrees(&x));
        prop_assert!(mfw_bound(&p).unwrap() <= x.strands());
    }

    #[test]
    fn hecke_image_is_multiplicative((u, v) in pair(2..=4, 5)) {
        prop_assert_eq!(hecke_image(&cat(&u, &v)), hecke_image(&u).mul(&hecke_image(&v)));
    }
}

#[test]
fn split_unions_multiply() {
    let u = unlink_factor();
    for s in ["2: 1 1 1", "3: 1 -2 1 -2"] {
        let x = w(s);
        let split = x.widen(x.strands() + 1).unwrap();
        assert_eq!(homfly_via_trace(&split), &homfly_via_trace(&x) * &u);
    }
}

#[test]
fn skein_relation_on_words() {
    // P(σ₁ w) l⁻¹ - P(σ₁⁻¹ w) l = m P(w)
    let hv = homfly_vars();
    let (l, li, m) = (LaurentPoly::parse(&hv, "l").unwrap(), LaurentPoly::parse(&hv, "l^-1").unwrap(), LaurentPoly::parse(&hv, "m").unwrap());
    for s in ["3: 2 -1 2", "3: 1 1 2", "4: 2 -3 1 2", "2: 1"] {
        let x = w(s);
        let plus = cat(&w(&format!("{}: 1", x.strands())), &x);
        let minus = cat(&w(&format!("{}: -1", x.strands())), &x);
        let lhs = &(&li * &homfly_via_trace(&plus)) - &(&l * &homfly_via_trace(&minus));
        assert_eq!(lhs, &m * &homfly_via_trace(&x), "{s}");
    }
}
