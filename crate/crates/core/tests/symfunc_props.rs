mod common;

use kkschur::symfunc::{apply_f, apply_f_inv, apply_omega, dual_grothendieck, expand_in_family, g_tilde};
use kkschur::{HMonomial, Partition, SymFunc};
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_multiset)
}

fn arb_symfunc() -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((arb_partition(3, 3), -5i64..=5), 0..5).prop_map(|terms| {
        let mut f = SymFunc::zero();
        for (l, c) in terms {
            f.add_term(HMonomial::from_parts(l.parts()), &BigInt::from(c));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in arb_symfunc(), b in arb_symfunc(), c in arb_symfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &SymFunc::one(), a.clone());
    }

    #[test]
    fn f_is_invertible_ring_map(a in arb_symfunc(), b in arb_symfunc()) {
        prop_assert_eq!(apply_f_inv(&apply_f(&a)), a.clone());
        prop_assert_eq!(apply_f(&apply_f_inv(&a)), a.clone());
        prop_assert_eq!(apply_f(&(&a * &b)), &apply_f(&a) * &apply_f(&b));
    }

    #[test]
    fn omega_is_involution_commuting_with_f(a in arb_symfunc()) {
        prop_assert_eq!(apply_omega(&apply_omega(&a)), a.clone());
        prop_assert_eq!(apply_omega(&apply_f(&a)), apply_f(&apply_omega(&a)));
    }

    #[test]
    fn text_and_json_roundtrip(a in arb_symfunc()) {
        let parsed: SymFunc = a.to_text().parse().unwrap();
        prop_assert_eq!(&parsed, &a);
        let json = serde_json::to_string(&a).unwrap();
        let back: SymFunc = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn conjugate_is_involution(l in arb_partition(6, 6)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn grothendieck_matches_leibniz(g in prop::collection::vec(-1i64..=4, 0..=4)) {
        prop_assert_eq!(dual_grothendieck(&g), common::grothendieck_leibniz(&g));
    }
}

#[test]
fn grothendieck_leibniz_on_partitions() {
    for l in Partition::all_up_to(7, 7).into_iter().filter(|l| l.len() <= 5) {
        assert_eq!(dual_grothendieck(&l.padded(0)), common::grothendieck_leibniz(&l.padded(0)), "{l}");
    }
}

#[test]
fn omega_sends_row_to_column() {
    for r in 1..=5 {
        let row = Partition::new(vec![r]).unwrap();
        let col = Partition::new(vec![1; r]).unwrap();
        assert_eq!(apply_omega(&dual_grothendieck(&row.padded(0))), dual_grothendieck(&col.padded(0)));
        assert_eq!(apply_omega(&g_tilde(&row)), g_tilde(&col));
    }
}

#[test]
fn grothendieck_basis_expansion_roundtrip() {
    let family: Vec<(Partition, SymFunc)> =
        Partition::all_up_to(6, 6).into_iter().map(|l| (l.clone(), dual_grothendieck(&l.padded(0)))).collect();
    let f = &(&family[5].1 * &family[3].1) - &family[1].1.scale(&BigInt::from(4));
    let coeffs = expand_in_family(&f, &family).unwrap();
    let mut back = SymFunc::zero();
    for (l, c) in &coeffs {
        let g = &family.iter().find(|(m, _)| m == l).unwrap().1;
        back.add_scaled(g, c);
    }
    assert_eq!(back, f);
}
