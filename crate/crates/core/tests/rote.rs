use rote::rote::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use rote::directive::DirectiveSpec;
use rote::sturmian::{bispecial, return_block_exponent};
use rote::words::{is_stable, BinaryWord};
use rote::sturmian::generate_prefix;
use rote::words::s_map;

fn spec(s: &str) -> DirectiveSpec {
    s.parse().unwrap()
}

fn w(s: &str) -> BinaryWord {
    s.parse().unwrap()
}

#[test]
fn fibonacci_rote_words() {
    // a = 0, b = 1 relabeling of the Fibonacci word is D:|1
    let u = generate_prefix(&spec("D:|1"), 11).unwrap();
    assert_eq!(rote_from_sturmian(&u, 0), w("001110011100"));
    let u = generate_prefix(&spec("G:|1"), 11).unwrap();
    assert_eq!(rote_from_sturmian(&u, 0), w("011011001001"));
    assert_eq!(rote_from_sturmian(&[], 1), w("1"));
}

#[test]
fn transfer() {
    let two = BigRational::from_integer(2.into());
    assert_eq!(transfer_index(&two, 1, true).unwrap().value, BigRational::from_integer(3.into()));
    let x = BigRational::new(5.into(), 2.into());
    assert_eq!(transfer_index(&x, 2, false).unwrap().value, BigRational::new(3.into(), 2.into()));
    assert!(transfer_index(&x, 0, true).is_err());
}

#[test]
fn triples_lift_prescribed_words() {
    for text in ["G:|1", "G:2|1,3", "D:1|2,2", "G:1|2,2"] {
        let s = spec(text);
        for n in 0..10 {
            let t = rote_return_triple(&s, n).unwrap();
            let rec = bispecial(&s, n).unwrap();
            let (r, ss) = (rec.len_r as usize, rec.len_s as usize);
            let l = return_block_exponent(&s, n).unwrap() as usize;
            let expect = match t.case_tag {
                TripleCase::RStable => [r, 2 * ss + l * r, 2 * ss + (l + 1) * r],
                TripleCase::SStable => [ss, 2 * r, 2 * r + ss],
                TripleCase::BothUnstable => [2 * r, r + ss, r + ss],
            };
            assert_eq!(t.lengths, expect, "{text} n={n}");
            for x in t.words() {
                let mut x0 = x.as_slice().to_vec();
                x0.push(0);
                assert!(is_stable(&s_map(&x0).unwrap()));
            }
        }
    }
    // G-start, n = 0: r = 1 unstable, s = 0 stable
    let t = rote_return_triple(&spec("G:2|1"), 0).unwrap();
    assert_eq!(t.case_tag, TripleCase::SStable);
    assert_eq!(t.lengths[1], 2);
    let json = serde_json::to_value(&t).unwrap();
    assert_eq!(json["case"], "s-stable");
}

#[test]
fn longest_return_examples() {
    // G:1|2: every q_N is odd and a_{N+2} = 2
    let s = spec("G:1|2");
    let t = rote::convergents::convergents(&s, 10).unwrap();
    for n in 0..6 {
        let l = longest_rote_return_length(&s, n).unwrap();
        assert_eq!(l, BigInt::from(3) * t.qp(n + 1) + t.qp(n));
    }
    // D:1|2: p_N even exactly for even N
    let d = spec("D:1|2");
    let t = rote::convergents::convergents(&d, 10).unwrap();
    for n in [0, 2, 4] {
        assert_eq!(
            longest_rote_return_length(&d, n).unwrap(),
            BigInt::from(2) * t.qp(n + 1) + t.qp(n)
        );
    }
    for n in [1, 3, 5] {
        assert_eq!(
            longest_rote_return_length(&d, n).unwrap(),
            t.qp(n + 2) + BigInt::from(2) * t.qp(n + 1) + t.qp(n)
        );
    }
}
