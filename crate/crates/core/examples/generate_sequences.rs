//! Sturmian prefixes from directive sequences and their Rote sequences.
use rote::directive::DirectiveSpec;
use rote::rote::rote_from_sturmian;
use rote::sturmian::generate_prefix;
use rote::words::{s_map, BinaryWord};

fn main() -> rote::Result<()> {
    for text in ["G:|1", "D:|1", "G:1|2,2", "D:1|2,2", "G:2|"] {
        let spec: DirectiveSpec = text.parse()?;
        let u = match generate_prefix(&spec, 40) {
            Ok(u) => u,
            // a finite directive only determines a short prefix
            Err(_) => generate_prefix(&spec, 3)?,
        };
        let v = rote_from_sturmian(&u, 0);
        println!("{text:<10} u = {u}");
        println!("{:<10} v = {v}", "");
        assert_eq!(s_map(&v)?, u);
    }

    // S maps v and its exchange E(v) to the same sequence
    let v: BinaryWord = "001110011100".parse()?;
    let e = rote::words::exchange(&v);
    println!("S({v}) = S({e}) = {}", s_map(&v)?);
    Ok(())
}
