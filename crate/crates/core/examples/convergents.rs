//! Convergent tables, parity patterns and limits of q'_{N−1}/q'_N.
use rote::convergents::{convergents, parity_pattern, ratio_limit, Column};
use rote::directive::DirectiveSpec;

fn main() -> rote::Result<()> {
    let spec: DirectiveSpec = "G:1|2,2".parse()?;
    print!("{}", convergents(&spec, 8)?.to_csv());
    println!("q parities: {:?}", parity_pattern(&spec, Column::Q, 10)?);
    for class in 0..spec.period().len() {
        println!("class {class}: q'_(N-1)/q'_N → {}", ratio_limit(&spec, class)?);
    }
    Ok(())
}
