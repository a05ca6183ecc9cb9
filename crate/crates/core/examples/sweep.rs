//! Critical exponents over every short eventually periodic directive.
use rote::directive::Morphism;
use rote::exponent::{exponent_sweep, sweep_csv, SweepBounds};

fn main() {
    let bounds = SweepBounds {
        max_preperiod: 1,
        max_period: 2,
        max_a: 2,
        starts: vec![Morphism::G, Morphism::D],
    };
    let rows = exponent_sweep(&bounds);
    print!("{}", sweep_csv(&rows, 8));
    let min = rows
        .iter()
        .filter_map(|(s, v)| v.as_ref().ok().map(|v| (v.value.clone(), s)))
        .min()
        .unwrap();
    println!("smallest: {} at {}", min.0, min.1);
}
