//! Bispecial factors of a Sturmian sequence, their return words and indices.
use rote::directive::DirectiveSpec;
use rote::sturmian::{bispecial, bispecial_word, index_r, index_s, shortest_bispecials};

fn main() -> rote::Result<()> {
    let spec: DirectiveSpec = "G:2|1,3".parse()?;
    println!("{spec}");
    println!("{:>3} {:>3} {:>3} {:>6} {:>5} {:>5} {:>10} {:>10}", "n", "N", "m", "|b|", "|r|", "|s|", "ind(r)", "ind(s)");
    for n in 0..12 {
        let rec = bispecial(&spec, n)?;
        println!(
            "{:>3} {:>3} {:>3} {:>6} {:>5} {:>5} {:>10} {:>10}",
            n,
            rec.level,
            rec.m,
            rec.len_b,
            rec.len_r,
            rec.len_s,
            index_r(&spec, n)?.value().to_string(),
            index_s(&spec, n)?.value().to_string(),
        );
    }

    let (b, r, s) = bispecial_word(&spec, 5)?;
    println!("\nbispecial 5: b = {b}, r = {r}, s = {s}");
    assert!(b.is_palindrome());

    println!("\nshortest bispecials containing the factors of length n:");
    for n in [1, 4, 10, 30] {
        let set = shortest_bispecials(&spec, n)?;
        println!("  B_u({n}) = {:?}", set.members);
    }
    Ok(())
}
