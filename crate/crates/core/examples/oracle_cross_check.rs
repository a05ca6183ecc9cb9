//! Formulas against brute-force scans for one directive.
use rote::directive::DirectiveSpec;
use rote::verify::{verify_spec, VerifyDepth};

fn main() -> rote::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "G:1|2,2".into());
    let spec: DirectiveSpec = text.parse()?;
    let outcomes = verify_spec(&spec, &VerifyDepth::from_depth(10, 50_000))?;
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    println!("{failed} check(s) failed");
    Ok(())
}
