mod common;

use common::random::rng;
use common::suites;
use proptest::prelude::*;

#[test]
fn chain_abstractions_obey_the_laws() {
    for n in 1..=8 {
        suites::chain_gc_laws(n).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lifted_abstraction_is_a_preorder_adjunction(seed in any::<u64>()) {
        prop_assert_eq!(suites::preorder_adjunction(&mut rng(seed)), Ok(()));
    }

    #[test]
    fn round_robin_agrees_with_enumeration(seed in any::<u64>()) {
        prop_assert_eq!(suites::solver_oracle(&mut rng(seed)), Ok(()));
    }

    #[test]
    fn fix_sets_inherit_em_dominance(seed in any::<u64>()) {
        prop_assert_eq!(suites::fix_dominance(&mut rng(seed)), Ok(()));
    }

    #[test]
    fn abstract_responses_over_approximate(seed in any::<u64>()) {
        prop_assert_eq!(suites::abstract_response_dominance(&mut rng(seed)), Ok(()));
    }
}

#[test]
fn generators_produce_varied_instances() {
    use supermod_core::{abstract_best_response_game, enumerate_equilibria, fix_set_multivalued};
    let mut multi_eq = 0;
    let mut shifted = 0;
    let mut big_fix = 0;
    for seed in 0..100 {
        let mut r = rng(seed);
        let g = common::random::supermodular_game(&mut r);
        let eq = enumerate_equilibria(&g).unwrap();
        if eq.len() > 1 {
            multi_eq += 1;
        }
        let gcs: Vec<_> = (0..2)
            .map(|i| common::random::abstraction(&mut r, g.space(i)))
            .collect();
        let ag = abstract_best_response_game(&g, &gcs).unwrap();
        if enumerate_equilibria(&ag.derived).unwrap() != eq {
            shifted += 1;
        }
        let l = common::random::lattice(&mut r, 16);
        let (f, _) = common::random::dominated_pair(&mut r, &l);
        if fix_set_multivalued(&f).unwrap().elements.len() > 1 {
            big_fix += 1;
        }
    }
    assert!(multi_eq >= 10, "{multi_eq}");
    assert!(shifted >= 10, "{shifted}");
    assert!(big_fix >= 10, "{big_fix}");
}
