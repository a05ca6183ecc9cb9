use rote::words::*;
use rote::Error;
use proptest::prelude::*;

fn w(s: &str) -> BinaryWord {
    s.parse().unwrap()
}

#[test]
fn s_map_examples() {
    assert_eq!(s_map(&w("001110")).unwrap(), w("01001"));
    assert_eq!(s_map(&w("110001")).unwrap(), w("01001"));
    assert_eq!(s_map(&w("0")).unwrap(), BinaryWord::empty());
    assert_eq!(s_map(&w("0011100")).unwrap(), w("010010"));
    assert!(matches!(s_map(&[]), Err(Error::Domain(_))));
}

#[test]
fn s_inverse_examples() {
    assert_eq!(s_inverse(&w("01001")), w("001110"));
    assert_eq!(s_inverse(&[]), w("0"));
    assert_eq!(s_inverse(&w("111")), w("0101"));
}

#[test]
fn exchange_examples() {
    assert_eq!(exchange(&w("001110")), w("110001"));
    assert_eq!(exchange(&[]), BinaryWord::empty());
    assert_eq!(exchange(&w("01")), w("10"));
}

#[test]
fn stability_and_parikh() {
    assert!(is_stable(&w("01001")));
    assert!(!is_stable(&w("1")));
    assert!(is_stable(&[]));
    assert_eq!(parikh(&w("001110")), ParikhVector::new(3, 3));
    assert_eq!(parikh(&[]), ParikhVector::new(0, 0));
    assert_eq!(parikh(&w("111")), ParikhVector::new(0, 3));
}

#[test]
fn centers() {
    assert_eq!(palindrome_center(&w("010")).unwrap(), Some(1));
    assert_eq!(palindrome_center(&[]).unwrap(), None);
    let p = w("0110");
    assert_eq!(palindrome_center(&p).unwrap(), None);
    assert_eq!(parikh(&p), ParikhVector::new(2, 2));
    assert!(palindrome_center(&w("01")).is_err());
    assert_eq!(mirror(&w("0010")), w("0100"));
}

#[test]
fn parse_and_display() {
    assert_eq!(w("0101").to_string(), "0101");
    assert_eq!(BinaryWord::empty().to_string(), "");
    assert!("012".parse::<BinaryWord>().is_err());
    assert!(BinaryWord::from_bits(vec![0, 2]).is_err());
    let json = serde_json::to_string(&w("0110")).unwrap();
    assert_eq!(json, "\"0110\"");
    assert_eq!(serde_json::from_str::<BinaryWord>(&json).unwrap(), w("0110"));
}

fn word() -> impl Strategy<Value = BinaryWord> {
    proptest::collection::vec(0u8..2, 0..64).prop_map(|b| BinaryWord::from_bits(b).unwrap())
}

fn palindrome() -> impl Strategy<Value = BinaryWord> {
    (proptest::collection::vec(0u8..2, 0..32), proptest::option::of(0u8..2)).prop_map(
        |(half, mid)| {
            let mut bits = half.clone();
            bits.extend(mid);
            bits.extend(half.iter().rev());
            BinaryWord::from_bits(bits).unwrap()
        },
    )
}

proptest! {
    #[test]
    fn s_map_ignores_exchange(v in word().prop_filter("nonempty", |v| !v.is_empty())) {
        let u = s_map(&v).unwrap();
        prop_assert_eq!(u.len(), v.len() - 1);
        prop_assert_eq!(u, s_map(&exchange(&v)).unwrap());
    }

    #[test]
    fn s_inverse_is_a_section(u in word()) {
        let v = s_inverse(&u);
        prop_assert_eq!(v[0], 0);
        prop_assert_eq!(s_map(&v).unwrap(), u.clone());
        prop_assert_eq!(*v.last().unwrap() == 0, is_stable(&u));
    }

    #[test]
    fn s_map_splits_with_one_letter_overlap(v in word(), cut in 0usize..64) {
        prop_assume!(!v.is_empty());
        let k = cut % v.len();
        let left = s_map(&v[..=k]).unwrap();
        let right = s_map(&v[k..]).unwrap();
        prop_assert_eq!(s_map(&v).unwrap(), BinaryWord::concat(&[&left, &right]));
    }

    #[test]
    fn exchange_is_an_involution(v in word()) {
        prop_assert_eq!(exchange(&exchange(&v)), v);
    }

    #[test]
    fn palindrome_parity_matches_center(p in palindrome()) {
        let parity = parikh(&p).parity();
        let expected = match palindrome_center(&p).unwrap() {
            None => (0, 0),
            Some(0) => (1, 0),
            Some(_) => (0, 1),
        };
        prop_assert_eq!(parity, expected);
    }
}
