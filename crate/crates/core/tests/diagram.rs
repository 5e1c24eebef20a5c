mod common;

use braid_core::conjugacy::are_conjugate;
use braid_core::diagram::seifert::{read_braid, yamada_vogel};
use braid_core::diagram::*;
use braid_core::hecke::homfly_via_trace;
use common::*;
use proptest::prelude::*;

/// Applies finger moves chosen by `picks` (face, edge, edge, over) where legal.
fn with_finger_moves(d: &LinkDiagram, picks: &[(usize, usize, usize, bool)]) -> LinkDiagram {
    let mut d = d.clone();
    for &(f, i, j, over) in picks {
        let faces = d.face_boundaries();
        let face = &faces[f % faces.len()];
        let (a, b) = (face[i % face.len()], face[j % face.len()]);
        if a.0 != b.0 {
            d = d.finger_move(a.0, a.1, b.0, b.1, over).unwrap();
        }
    }
    d
}

fn picks() -> impl Strategy<Value = Vec<(usize, usize, usize, bool)>> {
    prop::collection::vec((0usize..64, 0usize..16, 0usize..16, any::<bool>()), 0..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closures_are_height_zero_and_read_back(x in word(2..=5, 8)) {
        let d = closure(&x);
        let s = seifert_smooth(&d);
        prop_assert_eq!(s.height(), 0);
        prop_assert_eq!(s.circle_count(), x.strands());
        let b = read_braid(&d, &s).unwrap();
        prop_assert!(are_conjugate(&b, &x).unwrap().is_some());
    }

    #[test]
    fn text_round_trip(x in word(2..=4, 8)) {
        let d = closure(&x);
        prop_assert_eq!(d.to_string().parse::<LinkDiagram>().unwrap(), d);
    }

    #[test]
    fn finger_moves_keep_the_link(x in word(2..=4, 6), p in picks()) {
        prop_assume!(!x.is_empty());
        let d = with_finger_moves(&closure(&x), &p);
        prop_assert_eq!(homfly_via_skein(&d).unwrap(), homfly_via_trace(&x));
        prop_assert_eq!(d.writhe(), x.exponent_sum());
        prop_assert_eq!(d.component_count(), closure(&x).component_count());
    }

    #[test]
    fn yamada_vogel_lowers_height_one_step_at_a_time(x in word(2..=4, 6), p in picks()) {
        prop_assume!(!x.is_empty());
        let d = with_finger_moves(&closure(&x), &p);
        let yv = yamada_vogel(&d).unwrap();
        let c = yv.circles;
        prop_assert!(yv.heights.windows(2).all(|h| h[1] + 1 == h[0]));
        prop_assert_eq!(yv.moves, yv.initial_height);
        prop_assert!(2 * yv.initial_height <= c.saturating_sub(1) * c.saturating_sub(2));
        prop_assert_eq!(yv.braid.strands(), c);
        prop_assert_eq!(homfly_via_trace(&yv.braid), homfly_via_trace(&x));
    }

    #[test]
    fn mirror_diagram(x in word(2..=4, 6)) {
        prop_assert_eq!(homfly_via_skein(&closure(&x).mirror()).unwrap(), homfly_via_trace(&x.mirror()));
    }

    #[test]
    fn stabilization_round_trip(x in word(2..=4, 6), positive in any::<bool>()) {
        let s = stabilize(&x, positive);
        prop_assert_eq!(destabilize(&s), Some(x.clone()));
    }
}

#[test]
fn five_two_diagram() {
    let d = five_two();
    assert_eq!(d.crossing_count(), 5);
    assert_eq!(d.component_count(), 1);
    assert_eq!(height(&d), 2);
    let b = to_closed_braid(&d).unwrap();
    assert_eq!(homfly_via_trace(&b), homfly_via_trace(&w("3: 2 -1 2 1 1 2")));
}

#[test]
fn invalid_diagrams_are_rejected() {
    assert!("diagram 1\nX + 1 2 2 1".parse::<LinkDiagram>().is_err());
    assert!("diagram 2\nX + 1 2 3 4".parse::<LinkDiagram>().is_err());
    assert!("diagram 1\nX ? 1 2 3 4".parse::<LinkDiagram>().is_err());
    assert!("nonsense".parse::<LinkDiagram>().is_err());
    assert!("diagram 0\nO 1\nO 1".parse::<LinkDiagram>().is_err());
    assert!("diagram 0\nO 1\nO 2".parse::<LinkDiagram>().is_ok());
}

#[test]
fn morton_exchange() {
    let xp = w("4: -2 -2 1 -2 3 2 2 2 -1 2 -3");
    let moved = exchange_move(&xp).unwrap();
    assert_eq!(moved, w("4: -2 -2 1 -2 -3 2 2 2 -1 2 3"));
    assert_eq!(homfly_via_trace(&moved), homfly_via_trace(&xp));
}
