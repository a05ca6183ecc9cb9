//! Complementary symmetric Rote sequences `v` with `S(v) = u` for a standard
//! Sturmian `u`: generation, transfer of indices, and the three return words
//! to bispecial prefixes.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::convergents::ConvergentTable;
use crate::directive::DirectiveSpec;
use crate::error::{Error, Result};
use crate::sturmian::{bispecial, bispecial_word, return_block_exponent};
use crate::words::{is_stable, s_inverse, s_inverse_from, BinaryWord};

/// The Rote word `v` of length `|u| + 1` with first letter `v0` and `S(v) = u`.
pub fn rote_from_sturmian(u_prefix: &[u8], v0: u8) -> BinaryWord {
    s_inverse_from(u_prefix, v0)
}

/// A value contributed by a factor of `u` to the critical exponent of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferElement {
    pub value: BigRational,
    pub stable: bool,
}

/// `ind(u) + 1/|u|` for stable `u`, half of it otherwise.
///
/// For stable `u` this is the index in `v` of the word `w` with `S(w0) = u`.
pub fn transfer_index(u_index: &BigRational, u_len: u64, stable: bool) -> Result<TransferElement> {
    if u_len == 0 {
        return Err(Error::Domain("the factor must be nonempty".into()));
    }
    let base = u_index + BigRational::new(1.into(), BigInt::from(u_len));
    let value = if stable {
        base
    } else {
        base / BigRational::from_integer(2.into())
    };
    Ok(TransferElement { value, stable })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TripleCase {
    #[serde(rename = "r-stable")]
    RStable,
    #[serde(rename = "s-stable")]
    SStable,
    #[serde(rename = "both-unstable")]
    BothUnstable,
}

impl fmt::Display for TripleCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TripleCase::RStable => "r-stable",
            TripleCase::SStable => "s-stable",
            TripleCase::BothUnstable => "both-unstable",
        })
    }
}

/// The return words `A`, `B`, `C` to the bispecial prefix `w` of `v` with `S(w) = b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoteReturnTriple {
    #[serde(rename = "case")]
    pub case_tag: TripleCase,
    #[serde(rename = "A")]
    pub a: BinaryWord,
    #[serde(rename = "B")]
    pub b: BinaryWord,
    #[serde(rename = "C")]
    pub c: BinaryWord,
    pub lengths: [usize; 3],
}

impl RoteReturnTriple {
    pub fn words(&self) -> [&BinaryWord; 3] {
        [&self.a, &self.b, &self.c]
    }
}

/// The Rote word `x` with `S(x0) = u`; `u` must be stable.
fn lift(u: &BinaryWord) -> BinaryWord {
    debug_assert!(is_stable(u));
    let mut w = s_inverse(u).into_bits();
    w.pop();
    BinaryWord::from_bits_unchecked(w)
}

/// Return words to the Rote prefix lying over bispecial `n` of `u`:
///
/// - `r` stable: `S(A0) = r`, `S(B0) = s r^ℓ s`, `S(C0) = s r^{ℓ+1} s`;
/// - `s` stable: `S(A0) = s`, `S(B0) = rr`, `S(C0) = rsr`;
/// - neither: `S(A0) = rr`, `S(B0) = rs`, `S(C0) = sr`;
///
/// with `ℓ` from [`return_block_exponent`].
pub fn rote_return_triple(spec: &DirectiveSpec, n: u64) -> Result<RoteReturnTriple> {
    let rec = bispecial(spec, n)?;
    let (_, r, s) = bispecial_word(spec, n)?;
    let l = return_block_exponent(spec, n)? as usize;
    let cat = |parts: &[&BinaryWord]| BinaryWord::concat(parts);
    let (case_tag, words) = match (rec.stable_r, rec.stable_s) {
        (true, true) => {
            return Err(Error::Invariant(format!(
                "both return words of bispecial {n} of {spec} are stable"
            )))
        }
        (true, false) => {
            let rl = r.power(l);
            (
                TripleCase::RStable,
                [r.clone(), cat(&[&s, &rl, &s]), cat(&[&s, &rl, &r, &s])],
            )
        }
        (false, true) => (
            TripleCase::SStable,
            [s.clone(), cat(&[&r, &r]), cat(&[&r, &s, &r])],
        ),
        (false, false) => (
            TripleCase::BothUnstable,
            [cat(&[&r, &r]), cat(&[&r, &s]), cat(&[&s, &r])],
        ),
    };
    let [a, b, c] = words.map(|w| lift(&w));
    Ok(RoteReturnTriple {
        case_tag,
        lengths: [a.len(), b.len(), c.len()],
        a,
        b,
        c,
    })
}

/// Which of the six cases fixes the longest return word at level `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RecurrenceCase {
    /// `X_N` even, `a_{N+2} > 1`.
    EvenN,
    /// `X_N` even, `a_{N+2} = 1`.
    EvenNShort,
    /// `X_{N+1}` even, `a_{N+2} > 1`.
    EvenNext,
    /// `X_{N+1}` even, `a_{N+2} = 1`.
    EvenNextShort,
    /// Both odd, `a_{N+2} > 1`.
    BothOdd,
    /// Both odd, `a_{N+2} = 1`.
    BothOddShort,
}

impl fmt::Display for RecurrenceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecurrenceCase::EvenN => "even-N",
            RecurrenceCase::EvenNShort => "even-N,a=1",
            RecurrenceCase::EvenNext => "even-N+1",
            RecurrenceCase::EvenNextShort => "even-N+1,a=1",
            RecurrenceCase::BothOdd => "odd-odd",
            RecurrenceCase::BothOddShort => "odd-odd,a=1",
        })
    }
}

pub(crate) fn longest_return_in(
    t: &mut ConvergentTable,
    level: i64,
) -> Result<(BigInt, RecurrenceCase)> {
    if level < 0 {
        return Err(Error::Domain("levels start at N = 0".into()));
    }
    let a2 = t.spec().a_req(level as usize + 2)?;
    t.extend_to(level + 1)?;
    let q = |t: &ConvergentTable, i: i64| t.qp(i);
    let (x0, x1) = (t.stability_parity(level), t.stability_parity(level + 1));
    let (q0, q1) = (q(t, level), q(t, level + 1));
    let long = a2 > 1;
    let (len, case) = match (x0, x1) {
        (0, 0) => {
            return Err(Error::Invariant(format!(
                "consecutive even parities at N = {level} for {}",
                t.spec()
            )))
        }
        (0, _) if long => (BigInt::from(2) * &q1 + &q0, RecurrenceCase::EvenN),
        (0, _) => {
            t.extend_to(level + 2)?;
            (BigInt::from(2) * q(t, level + 2), RecurrenceCase::EvenNShort)
        }
        (_, 0) => {
            t.extend_to(level + 2)?;
            let q2 = q(t, level + 2);
            if long {
                (q2 + BigInt::from(2) * &q1 + &q0, RecurrenceCase::EvenNext)
            } else {
                (BigInt::from(2) * q2 + &q1, RecurrenceCase::EvenNextShort)
            }
        }
        _ if long => (BigInt::from(3) * &q1 + &q0, RecurrenceCase::BothOdd),
        _ => {
            t.extend_to(level + 3)?;
            (
                q(t, level + 3) + q(t, level + 2) + &q1,
                RecurrenceCase::BothOddShort,
            )
        }
    };
    Ok((len, case))
}

/// Length `L` of the longest return word to the Rote bispecial lying over
/// `BS(M + a_{N+1} + 1)`, `M = a₁ + ⋯ + a_N`. Parities are read from `q` for
/// G-start and from `p` for D-start directives.
pub fn longest_rote_return_length(spec: &DirectiveSpec, level: i64) -> Result<BigInt> {
    Ok(longest_return_in(&mut ConvergentTable::new(spec), level)?.0)
}
