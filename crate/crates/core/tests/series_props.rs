use eolab_core::series::{pochhammer, PochSpec, TruncOrder, ZQSeries};
use proptest::prelude::*;

fn series(order: usize) -> impl Strategy<Value = ZQSeries> {
    prop::collection::vec((-3i64..=3, 0..=order, -5i64..=5), 0..12)
        .prop_map(move |terms| ZQSeries::from_terms(TruncOrder(order), terms).unwrap())
}

/// Three series sharing one truncation order.
fn triple() -> impl Strategy<Value = (ZQSeries, ZQSeries, ZQSeries)> {
    (0usize..8).prop_flat_map(|n| (series(n), series(n), series(n)))
}

proptest! {
    #[test]
    fn ring_laws((a, b, c) in triple()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn unit_constant_term_inverts(a in (0usize..8).prop_flat_map(series), unit in prop::sample::select(vec![1i64, -1])) {
        let order = a.order();
        let head = ZQSeries::monomial(unit, 0, 0, order).unwrap();
        let rest = ZQSeries::from_terms(order, a.terms().filter(|t| t.n > 0).map(|t| (0, t.n, t.c))).unwrap();
        let s = head.add(&rest).unwrap();
        prop_assert_eq!(s.mul(&s.invert().unwrap()).unwrap(), ZQSeries::one(order));
    }

    #[test]
    fn truncation_commutes_with_products((a, b, _) in triple(), cut in 0usize..8) {
        let cut = TruncOrder(cut.min(a.order().0));
        let whole = a.mul(&b).unwrap().truncate(cut);
        prop_assert_eq!(whole, a.truncate(cut).mul(&b.truncate(cut)).unwrap());
    }

    #[test]
    fn mirror_is_an_involution(a in (0usize..8).prop_flat_map(series)) {
        prop_assert_eq!(a.mirror_z().mirror_z(), a);
    }
}

#[test]
fn euler_pentagonal_expansion() {
    for n in [0usize, 1, 7, 22, 50] {
        let order = TruncOrder(n);
        let product = pochhammer(PochSpec::q(1, 1), order).unwrap();
        let mut expected = vec![0i64; n + 1];
        for j in -10i64..=10 {
            let e = (j * (3 * j - 1) / 2) as usize;
            if e <= n {
                expected[e] += if j % 2 == 0 { 1 } else { -1 };
            }
        }
        let got: Vec<i64> = (0..=n).map(|k| product.coeff(0, k).unwrap()).collect();
        assert_eq!(got, expected, "N={n}");
    }
}
