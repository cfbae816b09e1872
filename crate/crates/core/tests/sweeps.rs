//! Every registered sweep at a reduced size, plus determinism across thread counts.

use ogroth::harness::{verify, THEOREMS};
use ogroth::involutions::Involution;
use ogroth::ortho::shiftable_data;

#[test]
fn all_sweeps_pass_at_reduced_size() {
    for (id, _, default) in THEOREMS {
        let n = (*default).min(5);
        let r = verify(id, n, 0).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn parallel_reports_match_serial() {
    for id in ["ivex-thm", "b+conj", "connectivity"] {
        let a = verify(id, 6, 1).unwrap();
        let b = verify(id, 6, 3).unwrap();
        assert_eq!(a.canonical(), b.canonical());
    }
}

#[test]
fn unknown_sweep_is_an_error() {
    assert!(verify("no-such-sweep", 3, 1).is_err());
}

#[test]
fn shiftable_sets_contain_extremes() {
    for z in Involution::all_vexillary(7) {
        let d = shiftable_data(&z).unwrap();
        assert!(d.get(&[]).is_some(), "{z}");
        let immobile: Vec<usize> =
            d.left_segments.iter().filter(|s| !s.mobile).flat_map(|s| s.elems.clone()).collect();
        let rest: Vec<usize> = d.left_endpoints.iter().copied().filter(|a| !immobile.contains(a)).collect();
        assert!(d.get(&rest).is_some(), "{z}");
    }
}
