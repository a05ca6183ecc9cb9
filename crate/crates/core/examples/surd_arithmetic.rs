//! Exact arithmetic in quadratic fields.
use rote::surd::QuadraticSurd;

fn main() -> rote::Result<()> {
    let r2 = QuadraticSurd::sqrt(2)?;
    let x = QuadraticSurd::from_integer(2).checked_add(&r2.recip()?)?;
    println!("2 + 1/√2 = {x} ≈ {}", x.to_decimal(20));
    let y: QuadraticSurd = "3 + sqrt(2)".parse()?;
    println!("{y} − ({x}) = {}", y.checked_sub(&x)?);
    println!("({y})² = {}", y.checked_mul(&y)?);
    let golden = QuadraticSurd::from_integer(1).checked_add(&QuadraticSurd::sqrt(5)?)?.checked_div(&QuadraticSurd::from_integer(2))?;
    println!("φ = {golden}, 1/φ = {}", golden.recip()?);
    let mut v = vec![y.clone(), x.clone(), golden.clone(), QuadraticSurd::from_integer(3)];
    v.sort();
    println!("sorted: {}", v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" < "));
    println!("json: {}", x.to_json());
    Ok(())
}
