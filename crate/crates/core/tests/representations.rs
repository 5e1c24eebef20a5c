mod common;

use braid_core::garside::equal;
use braid_core::hecke::t_vars;
use braid_core::laurent::LaurentPoly;
use braid_core::representations::*;
use common::*;
use proptest::prelude::*;

fn lk_mod(x: &braid_core::BraidWord, q: u64, t: u64, p: u64) -> ModMatrix {
    let n = x.strands();
    let gens = lk_generators_mod(n, q, t, p);
    x.letters().iter().fold(ModMatrix::identity(n * (n - 1) / 2, p), |acc, &l| {
        let (g, gi) = &gens[l.unsigned_abs() as usize - 1];
        acc.mul(if l > 0 { g } else { gi })
    })
}

proptest! {
    #[test]
    fn burau_is_multiplicative((u, v) in pair(2..=4, 6)) {
        prop_assert_eq!(burau_unreduced(&cat(&u, &v)), burau_unreduced(&u).mul(&burau_unreduced(&v)));
        prop_assert_eq!(burau_reduced(&cat(&u, &v)).unwrap(), burau_reduced(&u).unwrap().mul(&burau_reduced(&v).unwrap()));
    }

    #[test]
    fn burau_respects_equality((u, v) in pair(2..=3, 7)) {
        prop_assert_eq!(burau_equal(&u, &v).unwrap(), equal(&u, &v).unwrap());
    }

    #[test]
    fn burau_determinant(x in word(2..=4, 6)) {
        let d = burau_unreduced(&x).det();
        let expected = LaurentPoly::var_pow(&t_vars(), "t", x.exponent_sum() as i32).unwrap();
        let sign = if x.exponent_sum() % 2 == 0 { expected.clone() } else { -&expected };
        prop_assert_eq!(d, sign);
    }

    #[test]
    fn lk_mod_p_matches_symbolic(x in word(3..=4, 5)) {
        let p = 1_000_000_007;
        prop_assert_eq!(lk_mod(&x, 5, 11, p), lk_matrix(&x).unwrap().eval_mod(&[5, 11], p));
    }

    #[test]
    fn artin_action_is_a_homomorphism((u, v) in pair(2..=4, 6), gen in 1usize..=4) {
        let n = u.strands();
        let g = FreeGroupWord::generator(n, gen.min(n));
        let lhs = artin_action(&cat(&u, &v), &g).unwrap();
        let rhs = artin_action(&u, &artin_action(&v, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let all = FreeGroupWord::new(n, (1..=n as i32).collect()).unwrap();
        prop_assert_eq!(artin_action(&u, &all).unwrap(), all);
    }

    #[test]
    fn alexander_is_a_class_invariant((x, a) in pair(2..=4, 6)) {
        prop_assert_eq!(alexander(&conj(&x, &a)), alexander(&x));
    }
}

#[test]
fn lk_inverse_matrices() {
    for n in 3..=4 {
        let x = BraidWord::new(n, (1..n as i32).chain((1..n as i32).map(|i| -i)).collect()).unwrap();
        let m = lk_matrix(&x).unwrap();
        assert!(m.mul(&lk_matrix(&x.inverse()).unwrap()).is_identity());
        assert!(m.inverse().unwrap().mul(&m).is_identity());
    }
}

#[test]
fn singular_braids() {
    let eq = |a: &str, b: &str| singular_equal(&a.parse().unwrap(), &b.parse().unwrap()).unwrap();
    assert!(eq("4: 1 t3 -1", "4: t3"));
    assert!(eq("3: 1 2 t1 -2 -1", "3: t2"));
    assert!(!eq("3: t1 2", "3: 2 t1"));
}

use braid_core::BraidWord;
