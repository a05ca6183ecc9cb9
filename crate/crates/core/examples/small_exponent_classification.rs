//! Directives whose Rote sequences have critical exponent at most 3, or below 7/2.
use rote::directive::DirectiveSpec;
use rote::exponent::{below_seven_halves, classify_small, critical_exponent};

fn main() -> rote::Result<()> {
    for text in ["G:1|2,2", "G:3,4|2,2", "G:2,1,3|2,2", "D:1,1|2,2", "G:1|2,3", "G:2|1,2,2", "G:1,1,1|4,1", "G:|1"] {
        let spec: DirectiveSpec = text.parse()?;
        let cr = critical_exponent(&spec)?;
        let shape = classify_small(&spec)?;
        print!("{text:<14} cr = {:<28}", format!("{} ≈ {}", cr.value, cr.value.to_decimal(4)));
        match shape {
            Some(k) => print!(" shape {k}"),
            None => print!(" -      "),
        }
        match below_seven_halves(&spec) {
            Ok(parse) => println!("  {} {}", if parse.verdict { "< 7/2" } else { "≥ 7/2" }, parse.render()),
            Err(e) => println!("  {e}"),
        }
    }
    Ok(())
}
