use std::collections::BTreeSet;

use ogroth::involutions::Involution;
use ogroth::permgroup::Permutation;

#[test]
fn ell_inv_agrees_on_i6() {
    for z in Involution::all(6) {
        let l = z.ell_inv();
        assert_eq!(z.alpha_inv().length(), l, "{z}");
        assert_eq!(z.binv().iter().map(|w| w.length()).min(), Some(l), "{z}");
        assert_eq!(z.hat_diagram().len(), l, "{z}");
        for i in 1..=6 {
            let bump = usize::from(!z.perm().has_right_descent(i));
            assert_eq!(z.demazure_conj(i).ell_inv(), l + bump, "{z}, i={i}");
        }
    }
}

#[test]
fn atoms_have_demazure_square_z() {
    for z in Involution::all(6) {
        for w in z.binv() {
            assert_eq!(w.inverse().demazure(&w), *z.perm(), "{z}: {w}");
        }
    }
}

#[test]
fn vexillary_tests_agree_on_i8() {
    for z in Involution::all(8) {
        assert_eq!(z.is_vexillary(), z.is_vexillary_by_arcs(), "{z}");
    }
}

#[test]
fn dom_paths_are_valid_on_i7() {
    for z in Involution::all_vexillary(7) {
        let path = z.dom_path().unwrap();
        let mut cur = z.clone();
        for (i, next) in &path.steps {
            assert_eq!(*next, cur.conj_s(*i));
            assert_eq!(next.length(), cur.length() + 2);
            assert!(next.is_vexillary());
            cur = next.clone();
        }
        if !z.is_identity() {
            assert_eq!(cur, Involution::dom(path.p, path.q).unwrap(), "{z}");
        }
    }
}

#[test]
fn atoms_commute_with_one_times() {
    for z in Involution::all(5) {
        let small = z.binv();
        for n in 1..=2 {
            let big = z.one_times(n).binv();
            let down: BTreeSet<Permutation> = big.iter().map(|w| w.shift_down(n).unwrap()).collect();
            assert_eq!(down, small, "{z}, n={n}");
            assert_eq!(big.len(), small.len());
        }
    }
}

#[test]
fn parsing_round_trips() {
    for z in Involution::all(6) {
        assert_eq!(Involution::parse(&z.to_string()).unwrap(), z);
        assert_eq!(Involution::from_perm(z.perm().clone()).unwrap(), z);
    }
    assert!(Involution::parse("(9,9)").is_err());
    assert!(Involution::parse("231").is_err());
}
