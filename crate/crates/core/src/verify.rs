//! Formula-versus-oracle checks on one directive.
//!
//! Each check compares the closed forms against brute-force scans of generated
//! prefixes and stops at the first mismatch. Comparisons the prefix is too
//! short to decide are counted as skipped, never as passes.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::directive::DirectiveSpec;
use crate::error::{Error, Result};
use crate::exponent::critical_exponent;
use crate::oracle::PrefixIndex;
use crate::recurrence::rote_recurrence;
use crate::rote::{rote_from_sturmian, rote_return_triple};
use crate::sturmian::{
    bispecial, bispecial_word, generate_prefix, index_r, index_s, shortest_bispecials,
    sturmian_recurrence,
};
use crate::surd::QuadraticSurd;
use crate::words::{exchange, parikh, BinaryWord};

/// Eventually periodic directives with preperiod ≤ 2, period ≤ 4, exponents ≤ 3, both starts.
pub const SUITE: [&str; 24] = [
    "G:|1",
    "D:|1",
    "G:1|2,2",
    "G:3|2,2",
    "D:1|2,2",
    "D:1,3|2,2",
    "G:|2",
    "D:|3",
    "G:2|1,3",
    "D:2|1,3",
    "G:1,1|3",
    "D:3,1|2",
    "G:|1,2",
    "D:|2,1",
    "G:2|3,1,2",
    "D:1|1,1,2",
    "G:|1,2,3",
    "D:2,2|1,2,3,1",
    "G:3,3|1,1,1,2",
    "D:|3,3",
    "G:1|1,3,1,2",
    "D:3|2",
    "G:2,3|1,1",
    "D:1,2|3,2,1",
];

pub fn suite() -> Vec<DirectiveSpec> {
    SUITE.iter().map(|s| s.parse().expect("suite specs parse")).collect()
}

/// Result of one check on one directive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub spec: String,
    pub compared: usize,
    pub skipped: usize,
    /// The first disagreement, if any.
    pub mismatch: Option<String>,
}

impl CheckOutcome {
    fn new(check: &'static str, spec: &DirectiveSpec) -> Self {
        CheckOutcome {
            check,
            spec: spec.to_string(),
            compared: 0,
            skipped: 0,
            mismatch: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    fn fail(mut self, detail: String) -> Self {
        self.mismatch = Some(detail);
        self
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {:<20} {:<16} compared {}, skipped {}",
            self.check, self.spec, self.compared, self.skipped
        )?;
        if let Some(m) = &self.mismatch {
            write!(f, ": {m}")?;
        }
        Ok(())
    }
}

/// Sturmian and Rote (`v₀ = 0`) prefixes of one directive with their indexes.
pub struct Prefixes {
    pub spec: DirectiveSpec,
    pub sturmian: PrefixIndex,
    pub rote: PrefixIndex,
}

impl Prefixes {
    pub fn new(spec: &DirectiveSpec, len: usize) -> Result<Self> {
        let u = generate_prefix(spec, len)?;
        let v = rote_from_sturmian(&u, 0);
        Ok(Prefixes {
            spec: spec.clone(),
            sturmian: PrefixIndex::new(&u),
            rote: PrefixIndex::new(&v),
        })
    }
}

fn ratio_text(x: &BigRational) -> String {
    x.to_string()
}

/// `ind(r)` and `ind(s)` against the largest powers of the constructed words.
pub fn check_indices(p: &Prefixes, max_n: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("indices", &p.spec);
    let half = BigInt::from(p.sturmian.len() / 2);
    for n in 0..=max_n {
        let words = match bispecial_word(&p.spec, n) {
            Ok(w) => w,
            Err(e) => return out.fail(format!("n = {n}: {e}")),
        };
        let (_, r, s) = words;
        for (name, word, exact) in [("r", r, index_r(&p.spec, n)), ("s", s, index_s(&p.spec, n))] {
            let exact = match exact {
                Ok(x) => x,
                Err(e) => return out.fail(format!("n = {n}: {e}")),
            };
            if &exact.power_len + &exact.root_len > half {
                out.skipped += 1;
                continue;
            }
            let seen = match p.sturmian.index(&word) {
                Ok(rep) => rep,
                Err(e) => return out.fail(format!("n = {n}, {name}: {e}")),
            };
            out.compared += 1;
            if seen.index != exact.value() || !seen.truncation_safe {
                return out.fail(format!(
                    "n = {n}: ind({name}) formula {} vs scan {}",
                    ratio_text(&exact.value()),
                    ratio_text(&seen.index)
                ));
            }
        }
    }
    out
}

/// Parikh vectors of `b`, `r`, `s` against letter counts of the words.
pub fn check_parikh(spec: &DirectiveSpec, max_n: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("parikh", spec);
    for n in 0..=max_n {
        let (rec, words) = match bispecial(spec, n).and_then(|r| Ok((r, bispecial_word(spec, n)?))) {
            Ok(x) => x,
            Err(e) => return out.fail(format!("n = {n}: {e}")),
        };
        let (b, r, s) = words;
        for (name, formula, word) in [
            ("b", rec.parikh_b, &b),
            ("r", rec.parikh_r, &r),
            ("s", rec.parikh_s, &s),
        ] {
            out.compared += 1;
            if parikh(word) != formula {
                return out.fail(format!("n = {n}: V({name}) formula {formula:?} vs count {:?}", parikh(word)));
            }
        }
    }
    out
}

/// `B_u(n)` against the shortest bispecials containing each factor of length `n`.
pub fn check_shortest_bispecials(p: &Prefixes, max_n: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("shortest-bispecials", &p.spec);
    for n in 1..=max_n {
        let formula: Result<BTreeSet<BinaryWord>> = shortest_bispecials(&p.spec, n).and_then(|set| {
            set.members
                .iter()
                .map(|&i| Ok(bispecial_word(&p.spec, i)?.0))
                .collect()
        });
        let formula = match formula {
            Ok(f) => f,
            Err(e) => return out.fail(format!("n = {n}: {e}")),
        };
        match p.sturmian.shortest_bispecials_for_length(n as usize) {
            Ok(seen) => {
                out.compared += 1;
                if seen != formula {
                    let lens = |s: &BTreeSet<BinaryWord>| s.iter().map(|w| w.len()).collect::<Vec<_>>();
                    return out.fail(format!(
                        "n = {n}: formula lengths {:?} vs scan {:?}",
                        lens(&formula),
                        lens(&seen)
                    ));
                }
            }
            Err(Error::Truncation(_)) => out.skipped += 1,
            Err(e) => return out.fail(format!("n = {n}: {e}")),
        }
    }
    out
}

/// The three Rote return words against those observed in the Rote prefix.
pub fn check_return_triples(p: &Prefixes, max_n: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("rote-return-words", &p.spec);
    let v = p.rote.text();
    for n in 0..=max_n {
        let (rec, triple) = match bispecial(&p.spec, n).and_then(|r| Ok((r, rote_return_triple(&p.spec, n)?))) {
            Ok(x) => x,
            Err(e) => return out.fail(format!("n = {n}: {e}")),
        };
        // enough room for many returns of the longest word
        let longest = *triple.lengths.iter().max().unwrap();
        if 20 * (longest + rec.len_b as usize + 1) > v.len() {
            out.skipped += 1;
            continue;
        }
        let w = &v[..rec.len_b as usize + 1];
        let seen: BTreeSet<BinaryWord> = match p.rote.return_words(w) {
            Ok(x) => x.into_iter().collect(),
            Err(e) => return out.fail(format!("n = {n}: {e}")),
        };
        let formula: BTreeSet<BinaryWord> = triple.words().into_iter().cloned().collect();
        out.compared += 1;
        if seen != formula {
            let lens = |s: &BTreeSet<BinaryWord>| s.iter().map(|w| w.len()).collect::<Vec<_>>();
            return out.fail(format!(
                "n = {n} ({}): formula lengths {:?} vs scan {:?}",
                triple.case_tag,
                lens(&formula),
                lens(&seen)
            ));
        }
    }
    out
}

/// `R_u(n)` and `R_v(n + 1)` against return-word scans.
pub fn check_recurrence(p: &Prefixes, max_n: u64) -> [CheckOutcome; 2] {
    let mut st = CheckOutcome::new("sturmian-recurrence", &p.spec);
    let mut ro = CheckOutcome::new("rote-recurrence", &p.spec);
    for n in 1..=max_n {
        if st.passed() {
            compare_recurrence(&mut st, n, sturmian_recurrence(&p.spec, n), p.sturmian.recurrence(n as usize));
        }
        if ro.passed() {
            compare_recurrence(&mut ro, n, rote_recurrence(&p.spec, n), p.rote.recurrence(n as usize + 1));
        }
    }
    [st, ro]
}

fn compare_recurrence(
    out: &mut CheckOutcome,
    n: u64,
    formula: Result<num_bigint::BigUint>,
    seen: Result<u64>,
) {
    let formula = match formula {
        Ok(f) => f,
        Err(e) => {
            out.mismatch = Some(format!("n = {n}: {e}"));
            return;
        }
    };
    match seen {
        Ok(s) => {
            out.compared += 1;
            if formula != s.into() {
                out.mismatch = Some(format!("n = {n}: formula {formula} vs scan {s}"));
            }
        }
        Err(Error::Truncation(_)) => out.skipped += 1,
        Err(e) => out.mismatch = Some(format!("n = {n}: {e}")),
    }
}

/// The scanned lower bound on `cr(v)` is at most the exact value and within `tolerance` of it.
pub fn check_critical_exponent(p: &Prefixes, max_root_len: usize, tolerance: &BigRational) -> CheckOutcome {
    let mut out = CheckOutcome::new("critical-exponent", &p.spec);
    let exact = match critical_exponent(&p.spec) {
        Ok(x) => x.value,
        Err(e) => return out.fail(e.to_string()),
    };
    let max_root_len = max_root_len.min(p.rote.len() / 3);
    let seen = match p.rote.critical_exponent(max_root_len) {
        Ok(rep) => rep,
        Err(e) => return out.fail(e.to_string()),
    };
    out.compared += 1;
    let lower = QuadraticSurd::from_rational(&seen.index);
    let tol = QuadraticSurd::from_rational(tolerance);
    let gap = exact.checked_sub(&lower).expect("rational difference");
    if gap.signum().is_lt() || gap > tol {
        let kind = if gap.signum().is_lt() { "scan > exact" } else { "shortfall" };
        return out.fail(format!(
            "{kind}: exact {} ≈ {} vs scan {} (root {})",
            exact,
            exact.to_decimal(6),
            seen.index,
            seen.factor
        ));
    }
    out
}

/// `C_u(n) = n + 1`, `C_v(n) = 2n`, the Rote factors are closed under exchange,
/// and every Sturmian palindrome has one palindromic extension.
pub fn check_complexity(p: &Prefixes, max_n: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("complexity", &p.spec);
    let margin = p.sturmian.len() / 4;
    for n in 1..=max_n.min(margin) {
        let (cu, cv) = (p.sturmian.complexity(n), p.rote.complexity(n));
        out.compared += 1;
        if cu != n + 1 || cv != 2 * n {
            return out.fail(format!("n = {n}: C_u = {cu}, C_v = {cv}"));
        }
    }
    for n in 1..=max_n.min(margin).min(60) {
        let f = p.rote.factors(n);
        out.compared += 1;
        if let Some(w) = f.iter().find(|w| !f.contains(&exchange(w))) {
            return out.fail(format!("{w} occurs but its exchange does not"));
        }
    }
    for n in 0..=max_n.min(margin).min(60) {
        for w in p.sturmian.factors(n).into_iter().filter(|w| w.is_palindrome()) {
            out.compared += 1;
            let ext = p.sturmian.palindromic_extensions(&w);
            if ext.len() != 1 {
                return out.fail(format!("palindrome {w} has extensions {ext:?}"));
            }
        }
    }
    out
}

/// Bounds for [`verify_spec`].
#[derive(Clone, Debug)]
pub struct VerifyDepth {
    /// Largest bispecial index for words, indices and return triples.
    pub bispecial_n: u64,
    /// Largest length for `B_u(n)` and recurrence checks.
    pub length_n: u64,
    pub prefix_len: usize,
    pub max_root_len: usize,
}

impl VerifyDepth {
    /// Bispecials up to `depth`, lengths up to `10·depth`.
    pub fn from_depth(depth: u64, prefix_len: usize) -> Self {
        VerifyDepth {
            bispecial_n: depth,
            length_n: 10 * depth,
            prefix_len,
            max_root_len: 400,
        }
    }
}

/// Every check on one directive.
pub fn verify_spec(spec: &DirectiveSpec, depth: &VerifyDepth) -> Result<Vec<CheckOutcome>> {
    spec.require_periodic()?;
    let p = Prefixes::new(spec, depth.prefix_len)?;
    let mut out = vec![
        check_parikh(spec, depth.bispecial_n),
        check_indices(&p, depth.bispecial_n),
        check_shortest_bispecials(&p, depth.length_n),
        check_return_triples(&p, depth.bispecial_n),
    ];
    out.extend(check_recurrence(&p, depth.length_n));
    out.push(check_critical_exponent(&p, depth.max_root_len, &BigRational::new(1.into(), 20.into())));
    out.push(check_complexity(&p, depth.length_n as usize));
    Ok(out)
}
