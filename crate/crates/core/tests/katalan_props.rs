mod common;

use kkschur::affine::k_bounded_up_to;
use kkschur::katalan::{evaluate, expansion_value, sample_instance, KatalanTriple, RewriteRule, RootIdeal};
use kkschur::kschur::FamilyCache;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_triple(max_ell: usize) -> impl Strategy<Value = KatalanTriple> {
    (1..=max_ell)
        .prop_flat_map(|ell| {
            let ideals = RootIdeal::all(ell);
            (
                prop::sample::select(ideals),
                prop::collection::vec(0usize..=2, ell),
                prop::collection::vec(-1i64..=3, ell),
            )
        })
        .prop_map(|(psi, m, g)| KatalanTriple::new(psi, m, g).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn evaluate_matches_subset_expansion(t in arb_triple(4)) {
        prop_assert_eq!(evaluate(&t), common::katalan_by_subsets(&t));
    }

    #[test]
    fn triple_json_roundtrip(t in arb_triple(5)) {
        let json = serde_json::to_string(&t).unwrap();
        let back: KatalanTriple = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, t);
    }
}

#[test]
fn every_rewrite_lemma_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for rule in RewriteRule::ALL {
        for n in 0..200 {
            let (t, site) = sample_instance(rule, &mut rng, 6).unwrap();
            let e = rule.apply(&t, site).unwrap();
            assert_eq!(evaluate(&t), expansion_value(&e), "{rule} instance {n}: {t:?} at {site:?}");
        }
    }
}

#[test]
fn kkschur_triples_match_subset_expansion() {
    for k in 1..=3 {
        let cache = FamilyCache::new(k);
        for l in k_bounded_up_to(k, 6).into_iter().filter(|l| l.len() <= 5) {
            let t = KatalanTriple::kkschur(k, &l, l.len());
            assert_eq!(common::katalan_by_subsets(&t), cache.gk(&l).unwrap(), "k={k} {l}");
        }
    }
}

#[test]
fn padding_with_zero_rows_changes_nothing() {
    for k in 1..=3 {
        for l in k_bounded_up_to(k, 5) {
            let ell = l.len();
            let short = evaluate(&KatalanTriple::closed(k, &l, ell.max(1)));
            for extra in 1..=2 {
                assert_eq!(evaluate(&KatalanTriple::closed(k, &l, ell + extra)), short, "k={k} {l} +{extra}");
            }
        }
    }
}

#[test]
fn root_ideals_are_upper_sets() {
    for ell in 1..=6 {
        for psi in RootIdeal::all(ell) {
            for (i, j) in psi.roots() {
                if j < ell {
                    assert!(psi.contains(i, j + 1));
                }
                if i > 1 {
                    assert!(psi.contains(i - 1, j));
                }
            }
            assert_eq!(psi.roots().len() + psi.complement().len(), ell * (ell - 1) / 2);
        }
    }
}
