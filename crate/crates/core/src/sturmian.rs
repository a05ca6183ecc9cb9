//! Standard Sturmian sequences given by a directive sequence: prefixes,
//! bispecial factors with their return words `r` (frequent) and `s` (rare),
//! indices, the shortest-bispecial sets `B_u(n)` and the recurrence function.
//!
//! Bispecials are numbered by length, `BS(0) = ε`. The `n`-th one is located by
//! writing `n = m + a₁ + ⋯ + a_N` with `0 ≤ m < a_{N+1}`; all lengths and Parikh
//! vectors follow from the convergent table.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::convergents::ConvergentTable;
use crate::directive::{DirectiveSpec, Morphism};
use crate::error::{Error, Result};
use crate::exponent::{supremum, ExponentValue, Family};
use crate::words::{BinaryWord, ParikhVector};

/// Prefix of the standard Sturmian sequence `u = Δ₀Δ₁⋯(u^{(K)})`.
///
/// `φ_K = Δ₀∘⋯∘Δ_{K−1}` is applied to both letters. Since `u^{(K)}` starts with
/// the letter every `Δ_K`-image starts with, `u` begins with `φ_K(c)` followed by
/// the longest common prefix of `φ_K(0)` and `φ_K(1)`.
pub fn generate_prefix(spec: &DirectiveSpec, length: usize) -> Result<BinaryWord> {
    if length == 0 {
        return Ok(BinaryWord::empty());
    }
    let mut img0: Vec<u8> = vec![0];
    let mut img1: Vec<u8> = vec![1];
    let mut j: u64 = 0;
    loop {
        let next = match spec.letter_at(j) {
            Ok(letter) => Some(letter),
            Err(Error::InsufficientDirective(_)) => None,
            Err(e) => return Err(e),
        };
        let lead = match next {
            Some(letter) => letter.leading_letter(),
            None => {
                // a finite spec ends a block; the next morphism is the other one
                let k = spec.preperiod().len();
                spec.block_letter(k + 1).leading_letter()
            }
        };
        let mut known = if lead == 1 { img1.clone() } else { img0.clone() };
        known.extend(img0.iter().zip(&img1).take_while(|(x, y)| x == y).map(|(x, _)| *x));
        if known.len() >= length {
            known.truncate(length);
            return Ok(BinaryWord::from_bits_unchecked(known));
        }
        let Some(letter) = next else {
            return Err(Error::InsufficientDirective(format!(
                "{spec} determines only {} letters, {length} requested",
                known.len()
            )));
        };
        match letter {
            Morphism::G => {
                let mut new0 = img1.clone();
                new0.extend_from_slice(&img0);
                img0 = new0;
            }
            Morphism::D => {
                img1 = [img0.as_slice(), img1.as_slice()].concat();
            }
        }
        img0.truncate(length);
        img1.truncate(length);
        j += 1;
    }
}

/// Lengths and Parikh vectors of the `n`-th bispecial `b` and its return words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BispecialRecord {
    pub n: u64,
    #[serde(rename = "N")]
    pub level: usize,
    pub m: u64,
    pub len_b: u64,
    pub len_r: u64,
    pub len_s: u64,
    pub parikh_b: ParikhVector,
    pub parikh_r: ParikhVector,
    pub parikh_s: ParikhVector,
    pub stable_r: bool,
    pub stable_s: bool,
}

fn to_u64(x: &BigInt, what: &str) -> Result<u64> {
    x.to_u64()
        .ok_or_else(|| Error::Domain(format!("{what} = {x} does not fit in 64 bits")))
}

fn pv(start: Morphism, p: &BigInt, q: &BigInt, what: &str) -> Result<ParikhVector> {
    let (p, q) = (to_u64(p, what)?, to_u64(q, what)?);
    Ok(match start {
        Morphism::G => ParikhVector::new(p, q),
        Morphism::D => ParikhVector::new(q, p),
    })
}

/// `(N, m)` for bispecial `n`, also checking that a finite spec reaches level `N + 2`.
fn locate(spec: &DirectiveSpec, n: u64) -> Result<(usize, u64)> {
    let (level, m) = spec.decompose(n)?;
    if !spec.is_periodic() {
        spec.a_req(level + 2).map_err(|_| {
            Error::InsufficientDirective(format!(
                "{spec} must define a_{} to describe bispecial {n}",
                level + 2
            ))
        })?;
    }
    Ok((level, m))
}

pub(crate) fn bispecial_in(table: &mut ConvergentTable, n: u64) -> Result<BispecialRecord> {
    let spec = table.spec().clone();
    let (level, m) = locate(&spec, n)?;
    let nl = level as i64;
    table.extend_to(nl)?;
    let (p, q) = (table.p(nl).clone(), table.q(nl).clone());
    let (p1, q1) = (table.p(nl - 1).clone(), table.q(nl - 1).clone());
    let mb = BigInt::from(m);
    let one = BigInt::one();
    let start = spec.start();
    let parikh_r = pv(start, &p, &q, "V(r)")?;
    let parikh_s = pv(start, &(&mb * &p + &p1), &(&mb * &q + &q1), "V(s)")?;
    let m1 = &mb + 1;
    let parikh_b = pv(start, &(&m1 * &p + &p1 - &one), &(&m1 * &q + &q1 - &one), "V(b)")?;
    Ok(BispecialRecord {
        n,
        level,
        m,
        len_b: parikh_b.len(),
        len_r: parikh_r.len(),
        len_s: parikh_s.len(),
        stable_r: parikh_r.ones % 2 == 0,
        stable_s: parikh_s.ones % 2 == 0,
        parikh_b,
        parikh_r,
        parikh_s,
    })
}

/// The record of bispecial `n`, from the convergents alone.
pub fn bispecial(spec: &DirectiveSpec, n: u64) -> Result<BispecialRecord> {
    bispecial_in(&mut ConvergentTable::new(spec), n)
}

/// The concrete words `(b, r, s)` of bispecial `n`, built from the morphisms.
pub fn bispecial_word(spec: &DirectiveSpec, n: u64) -> Result<(BinaryWord, BinaryWord, BinaryWord)> {
    locate(spec, n)?;
    let letters: Vec<Morphism> = (0..n).map(|j| spec.letter_at(j)).collect::<Result<_>>()?;
    let lead = spec.letter_at(n)?.leading_letter();
    let phi = |x: u8| {
        let mut w = vec![x];
        for letter in letters.iter().rev() {
            w = letter.apply(&w);
        }
        BinaryWord::from_bits_unchecked(w)
    };
    let mut b: Vec<u8> = Vec::new();
    for letter in letters.iter().rev() {
        b = letter.apply(&b);
        b.push(letter.leading_letter());
    }
    Ok((BinaryWord::from_bits_unchecked(b), phi(lead), phi(1 - lead)))
}

/// The first exponent `ℓ = a_{N+1} − m` of the derived directive at bispecial `n`:
/// `u` is a concatenation of the blocks `r^ℓ s` and `r^{ℓ+1} s`.
pub fn return_block_exponent(spec: &DirectiveSpec, n: u64) -> Result<u64> {
    let (level, m) = spec.decompose(n)?;
    Ok(spec.a_req(level + 1)? - m)
}

/// An exact index `power_len / root_len`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactIndex {
    pub power_len: BigInt,
    pub root_len: BigInt,
}

impl ExactIndex {
    pub fn value(&self) -> BigRational {
        BigRational::new(self.power_len.clone(), self.root_len.clone())
    }
}

pub(crate) fn index_r_in(table: &mut ConvergentTable, n: u64) -> Result<ExactIndex> {
    let (level, _) = table.spec().decompose(n)?;
    let nl = level as i64;
    table.extend_to(nl)?;
    let a = BigInt::from(table.spec().a_req(level + 1)?);
    let qp = table.qp(nl);
    Ok(ExactIndex {
        power_len: (a + 2) * &qp + table.qp(nl - 1) - 2,
        root_len: qp,
    })
}

/// `ind(r) = a_{N+1} + 2 + (q'_{N−1} − 2)/q'_N`, realized by `r^{ℓ+1} b`.
pub fn index_r(spec: &DirectiveSpec, n: u64) -> Result<ExactIndex> {
    index_r_in(&mut ConvergentTable::new(spec), n)
}

/// `ind(s) = |sb|/|s|`.
pub fn index_s(spec: &DirectiveSpec, n: u64) -> Result<ExactIndex> {
    let rec = bispecial(spec, n)?;
    Ok(ExactIndex {
        power_len: BigInt::from(rec.len_s) + rec.len_b,
        root_len: BigInt::from(rec.len_s),
    })
}

/// The set `B_u(n)` of shortest bispecials containing a factor of length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShortestBispecialSet {
    pub n: u64,
    /// Bispecial indices, increasing.
    pub members: Vec<u64>,
    /// Whether `n − 1` is the length of a bispecial.
    pub previous_is_bispecial: bool,
}

pub(crate) fn shortest_bispecials_in(
    table: &mut ConvergentTable,
    n: u64,
) -> Result<ShortestBispecialSet> {
    if n == 0 {
        return Err(Error::Domain("B_u(n) needs n ≥ 1".into()));
    }
    let spec = table.spec().clone();
    let level = table.level_of_length(&BigInt::from(n))?;
    let big_m = spec.prefix_sum(level as usize)?;
    let a_next = spec.a_req(level as usize + 1)?;
    let last = big_m + a_next + 1;
    if BigInt::from(n) + 1 == table.qp(level + 1) {
        return Ok(ShortestBispecialSet {
            n,
            members: vec![last - 1, last],
            previous_is_bispecial: true,
        });
    }
    // len_b(M + j) = (j + 1) q'_N + q'_{N−1} − 2 for 0 ≤ j < a_{N+1}
    let qp = table.qp(level);
    let qp1 = table.qp(level - 1);
    let len_b = |j: u64| BigInt::from(j + 1) * &qp + &qp1 - 2;
    let nb = BigInt::from(n);
    let j = (0..a_next)
        .find(|&j| nb <= len_b(j))
        .ok_or_else(|| Error::Invariant(format!("no bispecial of length ≥ {n} at level {level}")))?;
    let previous = if j == 0 {
        // BS(M − 1) closes level N − 1 with length q'_N − 2
        &qp - 2
    } else {
        len_b(j - 1)
    };
    let previous_is_bispecial = previous == &nb - 1;
    let members = if previous_is_bispecial {
        vec![big_m + j, last]
    } else {
        vec![big_m + j, big_m + j + 1, last]
    };
    Ok(ShortestBispecialSet {
        n,
        members,
        previous_is_bispecial,
    })
}

pub fn shortest_bispecials(spec: &DirectiveSpec, n: u64) -> Result<ShortestBispecialSet> {
    shortest_bispecials_in(&mut ConvergentTable::new(spec), n)
}

/// `R_u(n) = q'_{N+1} + q'_N + n − 1` for `n ∈ [q'_N, q'_{N+1})`.
pub fn sturmian_recurrence(spec: &DirectiveSpec, n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("the recurrence function starts at n = 1".into()));
    }
    let mut t = ConvergentTable::new(spec);
    let level = t.level_of_length(&BigInt::from(n))?;
    let r: BigInt = t.qp(level + 1) + t.qp(level) + BigInt::from(n) - 1;
    Ok(r.to_biguint().unwrap_or_else(BigUint::zero))
}

/// Critical exponent of the Sturmian sequence, `sup_N ind(r)`.
///
/// The indices of the rare return words `s` never matter: for `m = 0` they
/// repeat an `ind(r)` of the previous level, and for `m > 0` they are below 3,
/// while `ind(r)` at level 2 is already at least 3.
pub fn sturmian_critical_exponent(spec: &DirectiveSpec) -> Result<ExponentValue> {
    supremum(spec, &[Family::SturmianR])
}
