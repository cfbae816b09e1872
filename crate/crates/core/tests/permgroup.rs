use ogroth::permgroup::Permutation;
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_one_line(&v).unwrap())
}

proptest! {
    #[test]
    fn length_is_diagram_size(w in perm(7)) {
        prop_assert_eq!(w.length(), w.rothe_diagram().len());
        prop_assert_eq!(w.code().iter().sum::<usize>(), w.length());
        prop_assert_eq!(w.inverse().length(), w.length());
    }

    #[test]
    fn demazure_associative(u in perm(5), v in perm(5), w in perm(5)) {
        prop_assert_eq!(u.demazure(&v).demazure(&w), u.demazure(&v.demazure(&w)));
        prop_assert_eq!(u.demazure(&v).inverse(), v.inverse().demazure(&u.inverse()));
    }

    #[test]
    fn hecke_words_of_length_ell_are_reduced(w in perm(5)) {
        let l = w.length();
        for word in w.hecke_words(l) {
            prop_assert_eq!(word.len(), l);
            let prod = word.iter().fold(Permutation::identity(), |u, &i| u.right_mul_s(i));
            prop_assert_eq!(&prod, &w);
        }
    }

    #[test]
    fn multiplication_conventions(w in perm(6), i in 1usize..6) {
        prop_assert_eq!(w.right_mul_s(i), w.compose(&Permutation::s(i)));
        prop_assert_eq!(w.left_mul_s(i), Permutation::s(i).compose(&w));
        prop_assert_eq!(w.has_right_descent(i), w.right_mul_s(i).length() < w.length());
    }
}

#[test]
fn vexillary_criteria_agree_on_s6() {
    for w in Permutation::all(6) {
        assert_eq!(w.is_vexillary(), w.is_vexillary_by_diagram(), "{w}");
    }
}

#[test]
fn code_is_a_bijection_on_s6() {
    for w in Permutation::all(6) {
        assert_eq!(Permutation::from_code(&w.code()), w);
    }
}

#[test]
fn reduced_words_of_321() {
    let w = Permutation::parse("321").unwrap();
    assert_eq!(w.hecke_words(3).len(), 2);
    assert_eq!(Permutation::parse("35124").unwrap().code(), vec![2, 3]);
}
