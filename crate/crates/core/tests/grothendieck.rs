use ogroth::grothendieck::{expand, groth, groth_oracle, GrothExpansion};
use ogroth::permgroup::Permutation;
use ogroth::polyring::{Int, Monomial, MultiPoly};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = MultiPoly> {
    let term = (0u32..=2, proptest::collection::vec(0u32..=2, 3), -3i64..=3);
    proptest::collection::vec(term, 0..5)
        .prop_map(|ts| MultiPoly::from_terms(ts.into_iter().map(|(b, xs, c)| (Monomial::new(b, &xs), Int::from(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn expand_is_linear(p in poly(), q in poly()) {
        let (ep, eq) = (expand(&p).unwrap(), expand(&q).unwrap());
        prop_assert_eq!(expand(&p.add(&q)).unwrap(), ep.add(&eq));
        prop_assert_eq!(ep.eval(), p);
    }
}

#[test]
fn matches_oracle_on_s5() {
    for w in Permutation::all(5) {
        assert_eq!(*groth(&w), groth_oracle(&w), "{w}");
        assert_eq!(groth(&w).graded_degree(), Some(w.length() as i64));
    }
}

#[test]
fn expansion_round_trip_on_s6() {
    for w in Permutation::all(6) {
        assert_eq!(expand(&groth(&w)).unwrap(), GrothExpansion::basis(w));
    }
}

#[test]
fn divided_difference_recursion_on_s5() {
    for w in Permutation::all(5) {
        for i in 1..=5 {
            let want = if w.has_right_descent(i) {
                (*groth(&w.right_mul_s(i))).clone()
            } else {
                groth(&w).mul(&MultiPoly::beta()).neg()
            };
            assert_eq!(groth(&w).beta_divdiff(i), want, "{w}, i={i}");
        }
    }
}

#[test]
fn symmetric_exactly_when_grassmannian() {
    for w in Permutation::all(5).into_iter().filter(|w| !w.is_identity()) {
        let k = *w.des_r().iter().max().unwrap();
        assert_eq!(groth(&w).is_symmetric_in(k), w.is_grassmannian(), "{w}");
    }
}

#[test]
fn introduction_values() {
    let x = MultiPoly::x;
    let b = MultiPoly::beta();
    let p = |s: &str| Permutation::parse(s).unwrap();
    assert_eq!(*groth(&p("132")), x(1).add(&x(2)).add(&b.mul(&x(1)).mul(&x(2))));
    assert_eq!(*groth(&p("312")), x(1).pow(2));
    assert_eq!(*groth(&p("321")), x(1).pow(2).mul(&x(2)));
}
