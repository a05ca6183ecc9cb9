use rote::recurrence::*;
use num_bigint::BigInt;
use rote::convergents::ConvergentTable;
use rote::directive::DirectiveSpec;
use rote::convergents::convergents;
use rote::sturmian::sturmian_recurrence;

fn spec(s: &str) -> DirectiveSpec {
    s.parse().unwrap()
}

#[test]
fn fibonacci_pieces() {
    let pieces = recurrence_table(&spec("G:|1"), 20).unwrap();
    let bounds: Vec<(i64, i64)> = pieces
        .iter()
        .map(|p| (p.lo.clone().try_into().unwrap(), p.hi.clone().try_into().unwrap()))
        .collect();
    assert_eq!(bounds, vec![(1, 1), (2, 2), (3, 4), (5, 7), (8, 12), (13, 20)]);
    assert_eq!(recurrence_table(&spec("G:|1"), 1).unwrap().len(), 1);
    assert!(recurrence_csv(&pieces).starts_with("N,interval_lo,interval_hi,case_tag,L\n0,1,1,"));
}

#[test]
fn final_example_formulas() {
    let g = spec("G:1|2,2");
    let t = convergents(&g, 12).unwrap();
    for n in 1..200u64 {
        let mut tt = ConvergentTable::new(&g);
        let level = tt.level_of_length(&BigInt::from(n)).unwrap();
        let expect = BigInt::from(3) * t.qp(level + 1) + t.qp(level) + n;
        assert_eq!(BigInt::from(rote_recurrence(&g, n).unwrap()), expect);
    }
    let d = spec("D:1|2,2");
    let t = convergents(&d, 12).unwrap();
    for n in 1..200u64 {
        let mut tt = ConvergentTable::new(&d);
        let level = tt.level_of_length(&BigInt::from(n)).unwrap();
        let expect = if level % 2 == 0 {
            BigInt::from(2) * t.qp(level + 1) + t.qp(level) + n
        } else {
            t.qp(level + 2) + BigInt::from(2) * t.qp(level + 1) + t.qp(level) + n
        };
        assert_eq!(BigInt::from(rote_recurrence(&d, n).unwrap()), expect, "n={n}");
    }
}

#[test]
fn growth_and_sturmian_baseline() {
    for text in ["G:|1", "G:1,4|2,2", "D:2|1,3", "G:3|1"] {
        let s = spec(text);
        let mut prev = None;
        for n in 1..150u64 {
            let r = BigInt::from(rote_recurrence(&s, n).unwrap());
            let gap = &r - n;
            if let Some(p) = &prev {
                assert!(&gap >= p, "{text} n={n}");
            }
            prev = Some(gap);
            assert!(r >= BigInt::from(sturmian_recurrence(&s, n).unwrap()));
        }
    }
    assert!(rote_recurrence(&spec("G:|1"), 0).is_err());
}
