use rote::directive::*;
use proptest::prelude::*;

fn spec(s: &str) -> DirectiveSpec {
    s.parse().unwrap()
}

#[test]
fn parse_and_render() {
    let s = spec("G:1|2,2");
    assert_eq!(s.start(), Morphism::G);
    assert_eq!(s.preperiod(), &[1]);
    assert_eq!(s.period(), &[2, 2]);
    assert_eq!(s.to_string(), "G:1|2,2");
    assert_eq!(spec("G:|1").to_string(), "G:|1");
    assert_eq!(spec("G:2|").to_string(), "G:2|");
    assert_eq!(spec("D:2").to_string(), "D:2|");
    for bad in ["bad-spec", "X:1|1", "G:0|1", "G:|", "G:1|a", ""] {
        assert!(bad.parse::<DirectiveSpec>().is_err(), "{bad}");
    }
}

#[test]
fn exponents_and_letters() {
    let s = spec("D:1|2,3");
    let a: Vec<u64> = (0..8).map(|i| s.a(i).unwrap()).collect();
    assert_eq!(a, vec![0, 1, 2, 3, 2, 3, 2, 3]);
    assert_eq!(s.block_letter(1), Morphism::D);
    assert_eq!(s.block_letter(2), Morphism::G);
    assert_eq!(spec("G:2|").a(2), None);
    // Δ = D G G D D D G G ...
    let letters: Vec<Morphism> = (0..8).map(|j| s.letter_at(j).unwrap()).collect();
    use Morphism::*;
    assert_eq!(letters, vec![D, G, G, D, D, D, G, G]);
}

#[test]
fn decomposition() {
    let s = spec("G:1|2,2");
    assert_eq!(s.decompose(0).unwrap(), (0, 0));
    assert_eq!(s.decompose(1).unwrap(), (1, 0));
    assert_eq!(s.decompose(2).unwrap(), (1, 1));
    assert_eq!(s.decompose(3).unwrap(), (2, 0));
    assert_eq!(s.decompose(1000).unwrap(), (500, 1));
    assert!(spec("G:2|").decompose(2).is_err());
    assert_eq!(spec("G:2|").decompose(1).unwrap(), (0, 1));
}

#[test]
fn canonical_forms() {
    assert_eq!(spec("G:1|2,2").canonical(), spec("G:1|2"));
    assert_eq!(spec("G:3,1,2|1,2").canonical(), spec("G:3|1,2"));
    assert_eq!(spec("D:|1,1,1").canonical(), spec("D:|1"));
    assert_eq!(spec("G:1,2|1,2").canonical(), spec("G:|1,2"));
}

fn arb_spec() -> impl Strategy<Value = DirectiveSpec> {
    (
        prop_oneof![Just(Morphism::G), Just(Morphism::D)],
        proptest::collection::vec(1u64..5, 0..4),
        proptest::collection::vec(1u64..5, 1..5),
    )
        .prop_map(|(s, pre, per)| DirectiveSpec::new(s, pre, per).unwrap())
}

proptest! {
    #[test]
    fn spec_string_round_trip(s in arb_spec()) {
        prop_assert_eq!(s.to_string().parse::<DirectiveSpec>().unwrap(), s);
    }

    #[test]
    fn canonical_preserves_exponents(s in arb_spec()) {
        let c = s.canonical();
        for i in 0..40 {
            prop_assert_eq!(s.a(i), c.a(i));
        }
        prop_assert!(c.period().len() <= s.period().len());
    }

    #[test]
    fn decompose_inverts_prefix_sums(s in arb_spec(), n in 0u64..500) {
        let (level, m) = s.decompose(n).unwrap();
        prop_assert_eq!(s.prefix_sum(level).unwrap() + m, n);
        prop_assert!(m < s.a(level + 1).unwrap());
    }
}
