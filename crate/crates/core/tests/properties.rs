use std::collections::BTreeSet;

use domtab::bijection::{
    count_rectangle, from_word, gamma, hv_split, phi, phi_inverse, to_word, two_quotient,
    SubsetState,
};
use domtab::combinatorics::{eval_at_root_exact, q_binomial, QPolynomial, RootValue};
use domtab::sieving::{realizability, shift_subset};
use domtab::tableaux::{descent_set, Partition};
use proptest::prelude::*;

/// A size `⌊n/2⌋` subset of `[n]` together with `n`.
fn half_subset(max_n: u32) -> impl Strategy<Value = (u32, BTreeSet<u32>)> {
    (1..=max_n).prop_flat_map(|n| {
        let all: Vec<u32> = (1..=n).collect();
        proptest::sample::subsequence(all, (n / 2) as usize)
            .prop_map(move |s| (n, s.into_iter().collect()))
    })
}

fn polynomial() -> impl Strategy<Value = QPolynomial> {
    proptest::collection::vec(-20i64..=20, 0..8).prop_map(|c| QPolynomial::from_i64(&c))
}

fn monic() -> impl Strategy<Value = QPolynomial> {
    proptest::collection::vec(-5i64..=5, 0..5).prop_map(|mut c| {
        c.push(1);
        QPolynomial::from_i64(&c)
    })
}

proptest! {
    #[test]
    fn subset_encoding_round_trips((n, s) in half_subset(30)) {
        let t = phi_inverse(n, &s).unwrap();
        prop_assert!(t.is_valid());
        let state = phi(&t).unwrap();
        prop_assert_eq!(&state.subset, &s);
        state.check_invariants().unwrap();
        prop_assert_eq!(SubsetState::new(n, s).unwrap(), state);
        let w = to_word(&t).unwrap();
        prop_assert_eq!(from_word(&w).unwrap(), t);
    }

    #[test]
    fn shift_is_a_group_action((n, s) in half_subset(30), a in -40i64..40, b in -40i64..40) {
        let both = shift_subset(&shift_subset(&s, a, n), b, n);
        prop_assert_eq!(&both, &shift_subset(&s, a + b, n));
        prop_assert_eq!(&shift_subset(&s, n as i64, n), &s);
        prop_assert_eq!(shift_subset(&s, a, n).len(), s.len());
    }

    #[test]
    fn horizontal_labels_persist_under_shift((n, s) in half_subset(30)) {
        let (h, v) = hv_split(n, &s).unwrap();
        let (h2, _) = hv_split(n, &shift_subset(&s, 1, n)).unwrap();
        for &x in h.iter().filter(|&&x| x < n) {
            prop_assert!(h2.contains(&(x + 1)));
        }
        let crossings: Vec<u32> = v
            .iter()
            .copied()
            .filter(|&x| x < n && h2.contains(&(x + 1)))
            .collect();
        prop_assert!(crossings.len() <= 1);
        if let Some(&x) = crossings.first() {
            prop_assert_eq!(x % 2, 1);
            prop_assert_eq!(v.first(), Some(&x));
            prop_assert!(!s.contains(&n));
        }
    }

    #[test]
    fn descents_sit_below_new_runs((n, s) in half_subset(24)) {
        let t = phi_inverse(n, &s).unwrap();
        let (h, _) = hv_split(n, &s).unwrap();
        let des = descent_set(&t);
        for &i in &h {
            prop_assert_eq!(des.contains(&(i - 1)), !h.contains(&(i - 1)));
        }
    }

    #[test]
    fn gamma_splits_labels_into_quotient_shapes((n, s) in half_subset(20)) {
        let t = phi_inverse(n, &s).unwrap();
        let image = gamma(&t).unwrap();
        prop_assert_eq!(image.shapes(), two_quotient(t.shape()).unwrap());
        let mut labels = image.type_one.entries();
        let second = image.type_two.entries();
        prop_assert!(labels.is_disjoint(&second));
        labels.extend(second);
        prop_assert_eq!(labels, (1..=n).collect::<BTreeSet<_>>());
    }

    #[test]
    fn polynomial_ring_laws(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn division_by_monic(a in polynomial(), b in monic()) {
        let (q, r) = a.div_rem_monic(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree().is_none_or(|d| Some(d) < b.degree()));
        prop_assert_eq!((&q * &b).div_exact(&b).unwrap(), q);
    }

    #[test]
    fn root_values_are_multiplicative(a in polynomial(), b in polynomial(), d in 1u64..12) {
        if let (RootValue::Integer(x), RootValue::Integer(y)) =
            (eval_at_root_exact(&a, d), eval_at_root_exact(&b, d))
        {
            prop_assert_eq!(eval_at_root_exact(&(&a * &b), d), RootValue::Integer(x * y));
        }
    }

    #[test]
    fn central_q_binomials_are_realizable(n in 1u32..=30) {
        let f = q_binomial(n, n / 2).unwrap();
        prop_assert!(realizability(&f, n as u64).unwrap().is_realizable());
    }

    #[test]
    fn partition_text_round_trips(parts in proptest::collection::vec(1u32..10, 0..8)) {
        let p = Partition::from_unsorted(parts);
        let text: Vec<String> = p.parts().iter().map(ToString::to_string).collect();
        prop_assert_eq!(text.join(",").parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
    }

    #[test]
    fn rectangle_counts_are_symmetric(r in 0u32..12, c in 0u32..12) {
        prop_assert_eq!(count_rectangle(r, c), count_rectangle(c, r));
    }
}
