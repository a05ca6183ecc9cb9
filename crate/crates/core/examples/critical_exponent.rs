//! Exact critical exponents of Rote sequences and of their Sturmian sequences.
use rote::directive::DirectiveSpec;
use rote::exponent::{critical_exponent, m_element};
use rote::sturmian::sturmian_critical_exponent;

fn main() -> rote::Result<()> {
    let specs = ["G:1|2,2", "G:3|2,2", "G:1,4|2,2", "G:2,1,1|2,2", "D:1,3|2,2", "D:1|2,2", "G:|1"];
    for text in specs {
        let spec: DirectiveSpec = text.parse()?;
        println!("{text:<12} cr(v) = {}", critical_exponent(&spec)?.describe(10));
        println!("{:<12} cr(u) = {}", "", sturmian_critical_exponent(&spec)?.describe(10));
    }

    println!("\nterms of the supremum for G:1|2,2:");
    let spec: DirectiveSpec = "G:1|2,2".parse()?;
    for n in 0..6 {
        let terms: Vec<String> = m_element(&spec, n)?
            .into_iter()
            .map(|(f, v)| format!("{f} = {v}"))
            .collect();
        println!("  N = {n}: {}", terms.join(", "));
    }

    let v = critical_exponent(&spec)?;
    println!("\n{}", serde_json::to_string_pretty(&v.to_json(20)).unwrap());
    Ok(())
}
