//! Powers in the period-doubling sequence, the image of Thue–Morse under S.
use num_rational::BigRational;
use rote::oracle::{period_doubling, thue_morse, PrefixIndex};

fn main() -> rote::Result<()> {
    let len = 1 << 14;
    let t = PrefixIndex::new(&thue_morse(len));
    let d = PrefixIndex::new(&period_doubling(len));
    println!("Thue–Morse: largest power with root ≤ 1024 has index {}", t.critical_exponent(1024)?.index);
    for n in 0..=10u32 {
        let root = &d.text()[..1 << n];
        let rep = d.index(root)?;
        let bound = BigRational::new(((1i64 << (n + 2)) - 1).into(), (1i64 << n).into());
        println!("n = {n:>2}: ind(u^(n)) = {:<10} ≥ {bound}: {}", rep.index.to_string(), rep.index >= bound);
    }
    println!("period doubling, roots ≤ 1024: {}", d.critical_exponent(1024)?.index);
    Ok(())
}
