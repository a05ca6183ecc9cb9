//! Recurrence functions of a Rote sequence and its Sturmian sequence.
use rote::convergents::convergents;
use rote::directive::DirectiveSpec;
use rote::recurrence::{recurrence_csv, recurrence_table, rote_recurrence};
use rote::sturmian::sturmian_recurrence;

fn main() -> rote::Result<()> {
    for text in ["G:1|2,2", "D:1|2,2"] {
        let spec: DirectiveSpec = text.parse()?;
        println!("{text}");
        print!("{}", recurrence_csv(&recurrence_table(&spec, 60)?));
        let t = convergents(&spec, 8)?;
        let q: Vec<String> = (0..8).map(|n| t.qp(n).to_string()).collect();
        println!("q' = {}", q.join(", "));
        for n in [1, 5, 20, 50] {
            println!(
                "  R_u({n}) = {}, R_v({}) = {}",
                sturmian_recurrence(&spec, n)?,
                n + 1,
                rote_recurrence(&spec, n)?
            );
        }
        println!();
    }
    Ok(())
}
