use proptest::prelude::*;

use rote::directive::{DirectiveSpec, Morphism};
use rote::verify::{
    check_complexity, check_indices, check_recurrence, check_return_triples,
    check_shortest_bispecials, Prefixes,
};

fn arb_spec() -> impl Strategy<Value = DirectiveSpec> {
    (
        prop_oneof![Just(Morphism::G), Just(Morphism::D)],
        proptest::collection::vec(1u64..4, 0..3),
        proptest::collection::vec(1u64..4, 1..4),
    )
        .prop_map(|(s, pre, per)| DirectiveSpec::new(s, pre, per).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn formulas_agree_with_scans(s in arb_spec()) {
        let p = Prefixes::new(&s, 20_000).unwrap();
        let mut outcomes = vec![
            check_indices(&p, 8),
            check_shortest_bispecials(&p, 60),
            check_return_triples(&p, 8),
            check_complexity(&p, 60),
        ];
        outcomes.extend(check_recurrence(&p, 40));
        for o in outcomes {
            prop_assert!(o.passed(), "{}", o);
        }
    }
}
