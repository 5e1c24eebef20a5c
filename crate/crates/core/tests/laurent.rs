use braid_core::laurent::{LaurentPoly, Vars};
use proptest::prelude::*;
use std::sync::Arc;

fn vars() -> Arc<Vars> {
    Vars::new(&[("x", false), ("y", false), ("s", true)])
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i32..=3, -3i32..=3, -4i32..=4), -5i64..=5), 0..6).prop_map(|terms| {
        let v = vars();
        terms.into_iter().fold(LaurentPoly::zero(&v), |acc, ((a, b, c), k)| &acc + &LaurentPoly::monomial_raw(&v, vec![a, b, c], k))
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(&vars()), a.clone());
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        prop_assert_eq!(LaurentPoly::parse(&vars(), &a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(LaurentPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_ring_map(a in poly(), b in poly(), v in poly()) {
        let sub = |p: &LaurentPoly| p.substitute("x", &v);
        let (sa, sb) = (sub(&a), sub(&b));
        if let (Ok(sa), Ok(sb), Ok(sab)) = (sa, sb, sub(&(&a * &b))) {
            prop_assert_eq!(sab, &sa * &sb);
        }
        let y = LaurentPoly::var(&vars(), "y").unwrap();
        prop_assert_eq!(sub(&(&a + &b)).ok(), sub(&a).ok().zip(sub(&b).ok()).map(|(p, q)| &p + &q));
        let x = LaurentPoly::var(&vars(), "x").unwrap();
        prop_assert_eq!(a.substitute("x", &x).unwrap(), a.clone());
        prop_assert_eq!(a.substitute("x", &y).unwrap().substitute("y", &y).unwrap(), a.substitute("x", &y).unwrap());
    }

    #[test]
    fn breadth_is_additive(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let p = &a * &b;
        prop_assert_eq!(p.breadth("x").unwrap(), a.breadth("x").unwrap() + b.breadth("x").unwrap());
    }
}

#[test]
fn half_variables() {
    let v = vars();
    let r = LaurentPoly::sqrt_var(&v, "s", 1).unwrap();
    assert_eq!(&r * &r, LaurentPoly::var(&v, "s").unwrap());
    assert_eq!(r.to_string(), "s^(1/2)");
    let t = Vars::new(&[("t", false)]);
    assert!(LaurentPoly::parse(&t, "t + 1").unwrap().substitute("t", &LaurentPoly::parse(&t, "2*t").unwrap()).is_ok());
    assert!(LaurentPoly::parse(&t, "t^-1").unwrap().substitute("t", &LaurentPoly::parse(&t, "t + 1").unwrap()).is_err());
}
