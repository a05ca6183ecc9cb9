use num_traits::{One, Zero};
use rote::convergents::*;
use num_bigint::BigInt;
use num_integer::Integer;
use rote::directive::{DirectiveSpec, Morphism};
use rote::surd::QuadraticSurd;
use proptest::prelude::*;

fn spec(s: &str) -> DirectiveSpec {
    s.parse().unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn fibonacci_denominators() {
    let t = convergents(&spec("G:|1"), 7).unwrap();
    let q: Vec<BigInt> = (0..=7).map(|n| t.q(n).clone()).collect();
    assert_eq!(q, ints(&[1, 1, 2, 3, 5, 8, 13, 21]));
    assert_eq!((t.p(0), t.q(0), t.qp(0)), (&BigInt::zero(), &BigInt::one(), BigInt::one()));
    assert_eq!(t.qp(-2), BigInt::one());
}

#[test]
fn silver_ratio_table() {
    let t = convergents(&spec("G:1|2"), 4).unwrap();
    let qp: Vec<BigInt> = (0..=4).map(|n| t.qp(n)).collect();
    assert_eq!(qp, ints(&[1, 2, 5, 12, 29]));
    let csv = t.to_csv();
    assert!(csv.starts_with("N,a_N,p_N,q_N,q'_N\n-1,0,1,0,1\n0,0,0,1,1\n1,1,1,1,2\n"));
}

#[test]
fn limits() {
    let r = ratio_limit(&spec("G:|2,2"), 0).unwrap();
    assert_eq!(r, "√2 - 1".parse().unwrap());
    assert_eq!(ratio_limit(&spec("G:1|2,2"), 1).unwrap(), r);
    let phi = ratio_limit(&spec("D:|1,1"), 1).unwrap();
    assert_eq!(phi, "-1/2 + √5/2".parse().unwrap());
    assert!(ratio_limit(&spec("G:1,2|"), 0).is_err());
}

#[test]
fn parities() {
    assert_eq!(parity_pattern(&spec("G:1|2"), Column::Q, 6).unwrap(), vec![1; 7]);
    assert_eq!(parity_pattern(&spec("G:1|2"), Column::P, 0).unwrap(), vec![0]);
    assert_eq!(
        parity_pattern(&spec("G:1,1|2"), Column::P, 4).unwrap(),
        vec![0, 1, 1, 1, 1]
    );
}

#[test]
fn levels() {
    let mut t = ConvergentTable::new(&spec("G:|1"));
    let lv = |t: &mut ConvergentTable, n: i64| t.level_of_length(&BigInt::from(n)).unwrap();
    assert_eq!(lv(&mut t, 1), 0);
    assert_eq!(lv(&mut t, 2), 1);
    assert_eq!(lv(&mut t, 4), 2);
    assert_eq!(lv(&mut t, 21), 6);
}

fn arb_spec() -> impl Strategy<Value = DirectiveSpec> {
    (
        prop_oneof![Just(Morphism::G), Just(Morphism::D)],
        proptest::collection::vec(1u64..6, 0..3),
        proptest::collection::vec(1u64..6, 1..5),
    )
        .prop_map(|(s, pre, per)| DirectiveSpec::new(s, pre, per).unwrap())
}

proptest! {
    #[test]
    fn table_invariants(s in arb_spec()) {
        let t = convergents(&s, 30).unwrap();
        for n in -1..=30 {
            prop_assert_eq!(t.p(n) + t.q(n), t.qp(n));
            prop_assert!(t.p(n).gcd(t.q(n)).is_one());
            let (pp, qq) = (t.p(n).is_odd(), t.q(n).is_odd());
            prop_assert!(pp || qq);
            if n >= 0 {
                prop_assert!((pp, qq) != (t.p(n - 1).is_odd(), t.q(n - 1).is_odd()));
            }
            if n >= 1 {
                let det = t.p(n) * t.q(n - 1) - t.p(n - 1) * t.q(n);
                prop_assert_eq!(det, BigInt::from(if n % 2 == 0 { -1 } else { 1 }));
                prop_assert!(t.qp(n) > t.qp(n - 1));
                // p_{N−1}q_N − p_N q_{N−1} = (−1)^N, and a_N(p,q)_{N−1} + ⋯ + a_1(p,q)_0 = (p,q)_N + (p,q)_{N−1} − (1,1)
                let mut sp = BigInt::zero();
                let mut sq = BigInt::zero();
                for i in 1..=n {
                    let a = BigInt::from(s.a(i as usize).unwrap());
                    sp += &a * t.p(i - 1);
                    sq += &a * t.q(i - 1);
                }
                prop_assert_eq!(sp, t.p(n) + t.p(n - 1) - 1);
                prop_assert_eq!(sq, t.q(n) + t.q(n - 1) - 1);
            }
        }
    }

    #[test]
    fn limit_is_a_fixed_point_and_attracts(s in arb_spec()) {
        let p = s.period().len();
        let t = convergents(&s, 60).unwrap();
        for class in 0..p {
            let x = ratio_limit(&s, class).unwrap();
            prop_assert!(x > QuadraticSurd::zero() && x < QuadraticSurd::from_integer(1));
            let mut y = x.clone();
            let k = s.preperiod().len();
            let n0 = (k + 1..k + 1 + p).find(|n| n % p == class).unwrap();
            for j in (0..p).rev() {
                let a = s.a(n0 + p - j).unwrap();
                y = QuadraticSurd::from_integer(a as i64).checked_add(&y).unwrap().recip().unwrap();
            }
            prop_assert_eq!(&y, &x);
            let n = (50..=60).find(|n| (*n as usize) % p == class).unwrap();
            let ratio = t.qp(n - 1).to_string().parse::<f64>().unwrap()
                / t.qp(n).to_string().parse::<f64>().unwrap();
            prop_assert!((ratio - x.to_f64()).abs() < 1e-9);
        }
    }
}
