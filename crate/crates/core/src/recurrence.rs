//! The recurrence function of CS Rote sequences.
//!
//! For `n ∈ [q'_N, q'_{N+1})` the Rote recurrence at length `n + 1` is
//! `R_v(n + 1) = L + n`, where `L` is the longest return word length from
//! [`longest_rote_return_length`](crate::rote::longest_rote_return_length).
//! Inputs are the Sturmian length `n`; outputs refer to Rote length `n + 1`.

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::convergents::ConvergentTable;
use crate::directive::DirectiveSpec;
use crate::error::{Error, Result};
use crate::rote::{longest_return_in, RecurrenceCase};

/// `R_v(n + 1) = L + n` on `lo ≤ n ≤ hi`, with `lo = q'_N` and `hi = q'_{N+1} − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrencePiece {
    #[serde(rename = "N")]
    pub level: i64,
    pub lo: BigInt,
    pub hi: BigInt,
    pub case_tag: RecurrenceCase,
    #[serde(rename = "L")]
    pub l: BigInt,
}

fn piece_in(t: &mut ConvergentTable, level: i64) -> Result<RecurrencePiece> {
    let (l, case_tag) = longest_return_in(t, level)?;
    t.extend_to(level + 1)?;
    Ok(RecurrencePiece {
        level,
        lo: t.qp(level),
        hi: t.qp(level + 1) - 1,
        case_tag,
        l,
    })
}

/// `R_v(n + 1)` for `n ≥ 1`.
pub fn rote_recurrence(spec: &DirectiveSpec, n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("the recurrence is defined for n ≥ 1".into()));
    }
    let mut t = ConvergentTable::new(spec);
    let level = t.level_of_length(&BigInt::from(n))?;
    let piece = piece_in(&mut t, level)?;
    Ok((piece.l + n)
        .to_biguint()
        .expect("recurrence values are positive"))
}

/// Pieces covering `1 ≤ n ≤ n_max`.
pub fn recurrence_table(spec: &DirectiveSpec, n_max: u64) -> Result<Vec<RecurrencePiece>> {
    if n_max == 0 {
        return Err(Error::Domain("the table needs n_max ≥ 1".into()));
    }
    let mut t = ConvergentTable::new(spec);
    let last = t.level_of_length(&BigInt::from(n_max))?;
    (0..=last).map(|level| piece_in(&mut t, level)).collect()
}

/// CSV with columns `N,interval_lo,interval_hi,case_tag,L` (inclusive bounds).
pub fn recurrence_csv(pieces: &[RecurrencePiece]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["N", "interval_lo", "interval_hi", "case_tag", "L"])
        .unwrap();
    for p in pieces {
        w.write_record([
            p.level.to_string(),
            p.lo.to_string(),
            p.hi.to_string(),
            p.case_tag.to_string(),
            p.l.to_string(),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}
