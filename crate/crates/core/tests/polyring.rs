use ogroth::polyring::{Int, Monomial, MultiPoly};
use proptest::prelude::*;

fn poly(max_vars: usize, max_deg: u32) -> impl Strategy<Value = MultiPoly> {
    let term = (0u32..=2, proptest::collection::vec(0u32..=max_deg, max_vars), -3i64..=3);
    proptest::collection::vec(term, 0..6).prop_map(move |ts| {
        MultiPoly::from_terms(ts.into_iter().filter_map(|(b, mut xs, c)| {
            while xs.iter().sum::<u32>() > max_deg {
                let i = xs.iter().position(|&e| e > 0).expect("positive degree");
                xs[i] -= 1;
            }
            (c != 0).then(|| (Monomial::new(b, &xs), Int::from(c)))
        }))
    })
}

type Op = fn(&MultiPoly, usize) -> MultiPoly;

const OPS: [Op; 3] = [MultiPoly::divdiff, MultiPoly::beta_divdiff, MultiPoly::isobaric];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nil_hecke_squares(f in poly(6, 5), i in 1usize..6) {
        prop_assert!(f.divdiff(i).divdiff(i).is_zero());
        let d = f.beta_divdiff(i);
        prop_assert_eq!(d.beta_divdiff(i), d.mul(&MultiPoly::beta()).neg());
    }

    #[test]
    fn braid_relations(f in poly(6, 5), i in 1usize..5) {
        for op in OPS {
            prop_assert_eq!(op(&op(&op(&f, i), i + 1), i), op(&op(&op(&f, i + 1), i), i + 1));
        }
    }

    #[test]
    fn distant_operators_commute(f in poly(6, 5), i in 1usize..6, j in 1usize..6) {
        prop_assume!(i.abs_diff(j) >= 2);
        for op in OPS {
            prop_assert_eq!(op(&op(&f, i), j), op(&op(&f, j), i));
        }
    }

    #[test]
    fn leibniz(f in poly(4, 3), g in poly(4, 3), i in 1usize..4) {
        let b = MultiPoly::beta();
        let rhs = f.act_si(i).mul(&g.beta_divdiff(i).add(&b.mul(&g))).add(&f.beta_divdiff(i).mul(&g));
        prop_assert_eq!(f.mul(&g).beta_divdiff(i), rhs);
    }

    #[test]
    fn symmetric_factor_passes_through(h in poly(4, 3), g in poly(4, 3), i in 1usize..4) {
        let f = h.add(&h.act_si(i));
        prop_assert_eq!(f.act_si(i), f.clone());
        prop_assert_eq!(f.mul(&g).beta_divdiff(i), f.mul(&g.beta_divdiff(i)));
    }

    #[test]
    fn oplus_group_laws(a in poly(3, 2), b in poly(3, 2), c in poly(3, 2)) {
        prop_assert_eq!(a.oplus(&b), b.oplus(&a));
        prop_assert_eq!(a.oplus(&b).oplus(&c), a.oplus(&b.oplus(&c)));
        prop_assert_eq!(a.oplus(&MultiPoly::zero()), a.clone());
    }

    #[test]
    fn shifts_and_json(f in poly(5, 4)) {
        prop_assert_eq!(f.shift_up().shift_down(), f.clone());
        prop_assert_eq!(MultiPoly::from_json(&f.to_json()).unwrap(), f.clone());
        prop_assert_eq!(f.truncate(5), f.clone());
    }

    #[test]
    fn ring_axioms(a in poly(3, 2), b in poly(3, 2), c in poly(3, 2)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }
}

#[test]
fn graded_degrees() {
    let x = MultiPoly::x;
    let g132 = x(1).add(&x(2)).add(&MultiPoly::beta().mul(&x(1)).mul(&x(2)));
    assert_eq!(g132.graded_degree(), Some(1));
    assert_eq!(MultiPoly::one().graded_degree(), Some(0));
    assert_eq!(x(1).add(&x(1).pow(2)).graded_degree(), None);
    assert_eq!(MultiPoly::zero().oplus(&x(3)), x(3));
    assert_eq!(x(1).shift_down(), MultiPoly::zero());
    assert_eq!(MultiPoly::c_plus_beta_x(2, 1).shift_down(), MultiPoly::constant(2));
}
