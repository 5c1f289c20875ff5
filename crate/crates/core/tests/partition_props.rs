use eolab_core::bijections::{
    crank_bijection, crank_bijection_inverse, lemma2_forward, lemma2_inverse, lemma3_forward,
    lemma3_inverse, phi_forward, phi_inverse,
};
use eolab_core::partitions::{gen_eo_star, gen_partitions, Partition};
use eolab_core::series::TruncOrder;
use proptest::prelude::*;

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len)
        .prop_map(|v| Partition::from_unsorted(v).unwrap())
}

/// `(λ, π)` with `π`'s parts bounded by `λ₁ + r`.
fn phi_input() -> impl Strategy<Value = (Partition, Partition, u32)> {
    (partition(7, 5), 0u32..4).prop_flat_map(|(lambda, r)| {
        let bound = lambda.largest() + r;
        let pi = if bound == 0 {
            Just(Partition::empty()).boxed()
        } else {
            partition(bound, 6).boxed()
        };
        (Just(lambda), pi, Just(r))
    })
}

proptest! {
    #[test]
    fn conjugation_is_a_weight_preserving_involution(p in partition(12, 10)) {
        let c = p.conjugate();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn phi_round_trips((lambda, pi, r) in phi_input()) {
        let out = phi_forward(&lambda, &pi, r).unwrap();
        prop_assert_eq!(out.first.weight() + out.second.weight(), lambda.weight() + pi.weight());
        prop_assert!(out.second.q_index(r).is_some());
        let back = phi_inverse(&out.first, &out.second, r).unwrap();
        prop_assert_eq!((back.first, back.second), (lambda, pi));
    }

    #[test]
    fn lemma2_weight_law_and_round_trip((lambda, pi, r) in phi_input()) {
        let (l, p) = lemma2_forward(&lambda, &pi, r).unwrap();
        prop_assert_eq!(l.weight() + p.weight(), 4 * (lambda.weight() + pi.weight()) + 2 * r as usize);
        prop_assert_eq!(lemma2_inverse(&l, &p, r).unwrap(), (lambda, pi));
    }

    #[test]
    fn lemma3_and_composite((lambda, pi, r) in phi_input()) {
        let out = phi_forward(&lambda, &pi, r).unwrap();
        let (m, n) = lemma3_forward(&out.first, &out.second, r).unwrap();
        prop_assert!(m.is_e_star() && n.is_eo_star());
        prop_assert_eq!(n.eoc(), 2 * r as i64);
        prop_assert_eq!(lemma3_inverse(&m, &n, r).unwrap(), (out.first, out.second));

        let (l_star, p_star) = lemma2_forward(&lambda, &pi, r).unwrap();
        let image = crank_bijection(&l_star, &p_star, r).unwrap();
        prop_assert_eq!(&image, &(m, n));
        prop_assert_eq!(crank_bijection_inverse(&image.0, &image.1, r).unwrap(), (l_star, p_star));
    }
}

#[test]
fn structured_generator_matches_naive_filter() {
    for n in 0..=24 {
        let mut naive: Vec<Partition> = gen_partitions(n)
            .into_iter()
            .filter(Partition::is_eo_star)
            .collect();
        naive.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(gen_eo_star(n), naive, "n={n}");
    }
}

#[test]
fn pass_is_monotone_in_order() {
    use eolab_core::identities::{verify_eq2, verify_section3};
    for n in [0, 3, 9, 17] {
        assert!(verify_eq2(TruncOrder(n)).unwrap().passed());
        assert!(verify_section3(TruncOrder(n)).unwrap().passed());
    }
}

#[test]
fn crank_distribution_is_symmetric() {
    for n in 0..=30 {
        let mut cranks: Vec<i64> = gen_eo_star(n).iter().map(Partition::eoc).collect();
        let mut mirrored: Vec<i64> = cranks.iter().map(|c| -c).collect();
        cranks.sort_unstable();
        mirrored.sort_unstable();
        assert_eq!(cranks, mirrored, "n={n}");
    }
}
