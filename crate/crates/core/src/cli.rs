//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch or internal failure,
//! 2 usage or parse error, 3 input outside the scope of a theorem.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::convergents::convergents;
use crate::directive::{DirectiveSpec, Morphism};
use crate::error::{Error, Result};
use crate::exponent::{below_seven_halves, classify_small, critical_exponent, exponent_sweep, sweep_csv, SweepBounds};
use crate::recurrence::{recurrence_csv, recurrence_table, rote_recurrence};
use crate::rote::{rote_from_sturmian, rote_return_triple};
use crate::sturmian::{bispecial, bispecial_word, generate_prefix, sturmian_critical_exponent, sturmian_recurrence};
use crate::verify::{verify_spec, VerifyDepth};

#[derive(Parser, Debug)]
#[command(name = "rote", version, about = "Critical exponents and recurrence of complementary symmetric Rote sequences")]
pub struct Cli {
    /// Emit JSON lines instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Starts {
    G,
    D,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a prefix of the Sturmian sequence, or of its Rote sequence.
    Gen {
        spec: DirectiveSpec,
        length: usize,
        #[arg(long)]
        rote: bool,
        /// First letter of the Rote sequence.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        v0: u8,
    },
    /// Exact critical exponent of the Rote sequence.
    Cr {
        spec: DirectiveSpec,
        /// Report the Sturmian sequence instead.
        #[arg(long)]
        sturmian: bool,
        #[arg(long, default_value_t = 10)]
        digits: u32,
    },
    /// Recurrence function `R_v(n + 1)`, or a piecewise table up to `n_max`.
    Rec {
        spec: DirectiveSpec,
        #[arg(required_unless_present = "table")]
        n: Option<u64>,
        #[arg(long, value_name = "N_MAX", conflicts_with = "n")]
        table: Option<u64>,
        /// Report `R_u(n)` of the Sturmian sequence instead.
        #[arg(long, conflicts_with = "table")]
        sturmian: bool,
    },
    /// The n-th bispecial of the Sturmian sequence.
    Bispecial {
        spec: DirectiveSpec,
        n: u64,
        /// Also print the words `b`, `r`, `s`.
        #[arg(long)]
        words: bool,
    },
    /// Return words to the Rote bispecial lying over the n-th Sturmian bispecial.
    Returns { spec: DirectiveSpec, n: u64 },
    /// Match the directive against the shapes with critical exponent at most 3.
    Classify { spec: DirectiveSpec },
    /// Decide `cr < 7/2` by block decomposition (G-start only).
    SevenHalves { spec: DirectiveSpec },
    /// Critical exponents of all eventually periodic directives within bounds, as CSV.
    Sweep {
        #[arg(long, default_value_t = 1)]
        max_preperiod: usize,
        #[arg(long, default_value_t = 2)]
        max_period: usize,
        #[arg(long, default_value_t = 3)]
        max_a: u64,
        #[arg(long, value_enum, default_value_t = Starts::Both)]
        start: Starts,
        #[arg(long, default_value_t = 10)]
        digits: u32,
    },
    /// Compare every formula with brute-force scans of generated prefixes.
    Verify {
        spec: DirectiveSpec,
        /// Largest bispecial index; lengths are checked up to ten times this.
        #[arg(long, default_value_t = 12)]
        depth: u64,
        #[arg(long, default_value_t = 50_000)]
        prefix_len: usize,
        #[arg(long, default_value_t = 400)]
        max_root_len: usize,
    },
    /// Convergent table `N, a_N, p_N, q_N, q'_N` as CSV.
    Convergents { spec: DirectiveSpec, n_max: i64 },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TheoremScope { .. } => 3,
        Error::Invariant(_) => 1,
        _ => 2,
    }
}

/// Parse `args` and run, writing to `out` and `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point of the binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn io(e: std::io::Error) -> Error {
    Error::Domain(format!("output failed: {e}"))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let json = cli.json;
    let mut line = |s: String| writeln!(out, "{s}").map_err(io);
    match &cli.command {
        Command::Gen { spec, length, rote, v0 } => {
            let word = if *rote && *length == 0 {
                crate::words::BinaryWord::empty()
            } else if *rote {
                let u = generate_prefix(spec, length.saturating_sub(1))?;
                rote_from_sturmian(&u, *v0)
            } else {
                generate_prefix(spec, *length)?
            };
            if json {
                line(json!({"spec": spec.to_string(), "rote": rote, "word": word.to_string()}).to_string())?;
            } else {
                line(word.to_string())?;
            }
        }
        Command::Cr { spec, sturmian, digits } => {
            let v = if *sturmian {
                sturmian_critical_exponent(spec)?
            } else {
                critical_exponent(spec)?
            };
            if json {
                let mut j = v.to_json(*digits);
                j["spec"] = json!(spec.to_string());
                line(j.to_string())?;
            } else {
                line(v.describe(*digits))?;
            }
        }
        Command::Rec { spec, n, table, sturmian } => {
            if let Some(n_max) = table {
                let pieces = recurrence_table(spec, *n_max)?;
                if json {
                    for p in &pieces {
                        line(json!({
                            "N": p.level,
                            "interval_lo": p.lo.to_string(),
                            "interval_hi": p.hi.to_string(),
                            "case_tag": p.case_tag.to_string(),
                            "L": p.l.to_string(),
                        })
                        .to_string())?;
                    }
                } else {
                    write!(out, "{}", recurrence_csv(&pieces)).map_err(io)?;
                }
            } else {
                let n = n.expect("clap requires n without --table");
                let (name, len, value) = if *sturmian {
                    ("R_u", n, sturmian_recurrence(spec, n)?)
                } else {
                    ("R_v", n + 1, rote_recurrence(spec, n)?)
                };
                if json {
                    line(json!({"spec": spec.to_string(), "function": name, "length": len, "value": value.to_string()}).to_string())?;
                } else {
                    line(format!("{name}({len}) = {value}"))?;
                }
            }
        }
        Command::Bispecial { spec, n, words } => {
            let rec = bispecial(spec, *n)?;
            let mut j = serde_json::to_value(&rec).expect("records serialize");
            if *words {
                let (b, r, s) = bispecial_word(spec, *n)?;
                j["b"] = json!(b.to_string());
                j["r"] = json!(r.to_string());
                j["s"] = json!(s.to_string());
            }
            if json {
                line(j.to_string())?;
            } else {
                line(format!("n = {}: N = {}, m = {}", rec.n, rec.level, rec.m))?;
                for (name, len, pv) in [
                    ("b", rec.len_b, rec.parikh_b),
                    ("r", rec.len_r, rec.parikh_r),
                    ("s", rec.len_s, rec.parikh_s),
                ] {
                    let stable = match name {
                        "r" => format!(", {}", if rec.stable_r { "stable" } else { "unstable" }),
                        "s" => format!(", {}", if rec.stable_s { "stable" } else { "unstable" }),
                        _ => String::new(),
                    };
                    line(format!("{name}: length {len}, Parikh ({}, {}){stable}", pv.zeros, pv.ones))?;
                    if *words {
                        line(format!("   {}", j[name].as_str().unwrap_or_default()))?;
                    }
                }
            }
        }
        Command::Returns { spec, n } => {
            let t = rote_return_triple(spec, *n)?;
            if json {
                line(serde_json::to_string(&t).expect("triples serialize"))?;
            } else {
                line(format!("case {}", t.case_tag))?;
                for (name, w) in ["A", "B", "C"].iter().zip(t.words()) {
                    line(format!("{name} ({}): {w}", w.len()))?;
                }
            }
        }
        Command::Classify { spec } => {
            let shape = classify_small(spec)?;
            let cr = critical_exponent(spec)?;
            if json {
                line(json!({"spec": spec.to_string(), "shape": shape, "cr": cr.to_json(10)}).to_string())?;
            } else {
                match shape {
                    Some(k) => line(format!("shape {k}: cr = {}", cr.describe(10)))?,
                    None => line(format!("no shape with cr ≤ 3: cr = {}", cr.describe(10)))?,
                }
            }
        }
        Command::SevenHalves { spec } => {
            let parse = below_seven_halves(spec)?;
            if json {
                let mut j = serde_json::to_value(&parse).expect("parses serialize");
                j["spec"] = json!(spec.to_string());
                line(j.to_string())?;
            } else {
                if parse.verdict {
                    line(format!("cr < 7/2: {}", parse.render()))?;
                } else if parse.blocks.is_empty() {
                    line("cr ≥ 7/2: no block decomposition".into())?;
                } else {
                    line(format!("cr ≥ 7/2: no block decomposition past {}", parse.render()))?;
                }
            }
        }
        Command::Sweep { max_preperiod, max_period, max_a, start, digits } => {
            if *max_period == 0 || *max_a == 0 {
                return Err(Error::Domain("periods and exponents must be at least 1".into()));
            }
            let starts = match start {
                Starts::G => vec![Morphism::G],
                Starts::D => vec![Morphism::D],
                Starts::Both => vec![Morphism::G, Morphism::D],
            };
            let rows = exponent_sweep(&SweepBounds {
                max_preperiod: *max_preperiod,
                max_period: *max_period,
                max_a: *max_a,
                starts,
            });
            if json {
                for (spec, v) in &rows {
                    let j = match v {
                        Ok(v) => {
                            let mut j = v.to_json(*digits);
                            j["spec"] = json!(spec.to_string());
                            j
                        }
                        Err(e) => json!({"spec": spec.to_string(), "error": e.to_string()}),
                    };
                    line(j.to_string())?;
                }
            } else {
                write!(out, "{}", sweep_csv(&rows, *digits)).map_err(io)?;
            }
        }
        Command::Verify { spec, depth, prefix_len, max_root_len } => {
            let mut d = VerifyDepth::from_depth(*depth, *prefix_len);
            d.max_root_len = *max_root_len;
            let outcomes = verify_spec(spec, &d)?;
            let mut failed = false;
            for o in &outcomes {
                failed |= !o.passed();
                if json {
                    line(serde_json::to_string(o).expect("outcomes serialize"))?;
                } else {
                    line(o.to_string())?;
                }
            }
            return Ok(if failed { 1 } else { 0 });
        }
        Command::Convergents { spec, n_max } => {
            let t = convergents(spec, *n_max)?;
            if json {
                for r in t.rows() {
                    line(json!({"N": r.n, "a_N": r.a, "p_N": r.p.to_string(), "q_N": r.q.to_string(), "q'_N": r.qp.to_string()}).to_string())?;
                }
            } else {
                write!(out, "{}", t.to_csv()).map_err(io)?;
            }
        }
    }
    Ok(0)
}
