//! Directive sequences `Δ = G^{a₁} D^{a₂} G^{a₃} ⋯` over the morphisms
//! `G: 0→10, 1→1` and `D: 0→0, 1→01`, and their textual form `START:pre|per`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Morphism {
    G,
    D,
}

impl Morphism {
    pub fn other(self) -> Morphism {
        match self {
            Morphism::G => Morphism::D,
            Morphism::D => Morphism::G,
        }
    }

    pub fn image(self, letter: u8) -> &'static [u8] {
        match (self, letter) {
            (Morphism::G, 0) => &[1, 0],
            (Morphism::G, _) => &[1],
            (Morphism::D, 0) => &[0],
            (Morphism::D, _) => &[0, 1],
        }
    }

    pub fn apply(self, w: &[u8]) -> Vec<u8> {
        let mut out = Vec::with_capacity(w.len() * 2);
        for &x in w {
            out.extend_from_slice(self.image(x));
        }
        out
    }

    /// The letter every image starts with: `1` for `G`, `0` for `D`.
    pub fn leading_letter(self) -> u8 {
        match self {
            Morphism::G => 1,
            Morphism::D => 0,
        }
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Morphism::G => "G",
            Morphism::D => "D",
        })
    }
}

/// An eventually periodic (or finite) directive sequence, described by its
/// start letter and the exponents `a₁, a₂, …` of the alternating blocks.
///
/// An empty period marks a finite truncation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectiveSpec {
    start: Morphism,
    preperiod: Vec<u64>,
    period: Vec<u64>,
}

impl DirectiveSpec {
    pub fn new(start: Morphism, preperiod: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if preperiod.iter().chain(&period).any(|&a| a == 0) {
            return Err(Error::Domain("every exponent must be at least 1".into()));
        }
        if preperiod.is_empty() && period.is_empty() {
            return Err(Error::Domain("a directive needs at least one exponent".into()));
        }
        Ok(DirectiveSpec {
            start,
            preperiod,
            period,
        })
    }

    pub fn periodic(start: Morphism, preperiod: &[u64], period: &[u64]) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Mode("the period must be nonempty".into()));
        }
        Self::new(start, preperiod.to_vec(), period.to_vec())
    }

    pub fn finite(start: Morphism, exponents: &[u64]) -> Result<Self> {
        Self::new(start, exponents.to_vec(), Vec::new())
    }

    pub fn start(&self) -> Morphism {
        self.start
    }

    pub fn preperiod(&self) -> &[u64] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u64] {
        &self.period
    }

    pub fn is_periodic(&self) -> bool {
        !self.period.is_empty()
    }

    /// Fails with a mode error unless the period is nonempty.
    pub fn require_periodic(&self) -> Result<()> {
        if self.is_periodic() {
            Ok(())
        } else {
            Err(Error::Mode(format!("{self} has no period")))
        }
    }

    /// Number of known exponents, `None` when infinite.
    pub fn known_len(&self) -> Option<usize> {
        (!self.is_periodic()).then_some(self.preperiod.len())
    }

    /// The exponent `a_i` (`a₀ = 0`); `None` past the end of a finite spec.
    pub fn a(&self, i: usize) -> Option<u64> {
        if i == 0 {
            return Some(0);
        }
        let k = self.preperiod.len();
        if i <= k {
            return Some(self.preperiod[i - 1]);
        }
        if self.period.is_empty() {
            return None;
        }
        Some(self.period[(i - k - 1) % self.period.len()])
    }

    /// `a_i` or an insufficient-directive error.
    pub fn a_req(&self, i: usize) -> Result<u64> {
        self.a(i).ok_or_else(|| {
            Error::InsufficientDirective(format!("{self} does not define a_{i}"))
        })
    }

    /// The morphism applied in block `i ≥ 1`.
    pub fn block_letter(&self, i: usize) -> Morphism {
        if i % 2 == 1 {
            self.start
        } else {
            self.start.other()
        }
    }

    /// `a₁ + ⋯ + a_N`.
    pub fn prefix_sum(&self, n: usize) -> Result<u64> {
        let mut s = 0u64;
        for i in 1..=n {
            s = s
                .checked_add(self.a_req(i)?)
                .ok_or_else(|| Error::Domain("exponent sum overflows".into()))?;
        }
        Ok(s)
    }

    /// Writes `n = m + a₁ + ⋯ + a_N` with `0 ≤ m < a_{N+1}` and returns `(N, m)`.
    pub fn decompose(&self, n: u64) -> Result<(usize, u64)> {
        let mut rest = n;
        let mut level = 0usize;
        for &a in &self.preperiod {
            if rest < a {
                return Ok((level, rest));
            }
            rest -= a;
            level += 1;
        }
        if self.is_periodic() {
            let per: u64 = self.period.iter().sum();
            level += (rest / per) as usize * self.period.len();
            rest %= per;
        }
        loop {
            let a = self.a_req(level + 1)?;
            if rest < a {
                return Ok((level, rest));
            }
            rest -= a;
            level += 1;
        }
    }

    /// The morphism `Δ_j` at 0-based position `j` of the expanded word.
    pub fn letter_at(&self, j: u64) -> Result<Morphism> {
        let (level, _) = self.decompose(j)?;
        Ok(self.block_letter(level + 1))
    }

    /// Primitive period and shortest preperiod, describing the same sequence.
    pub fn canonical(&self) -> DirectiveSpec {
        if !self.is_periodic() {
            return self.clone();
        }
        let p = self.period.len();
        let mut period = self.period.clone();
        for q in 1..=p {
            if p % q == 0 && (0..p).all(|i| self.period[i] == self.period[i % q]) {
                period.truncate(q);
                break;
            }
        }
        let mut preperiod = self.preperiod.clone();
        while let Some(&last) = preperiod.last() {
            if last != *period.last().unwrap() {
                break;
            }
            preperiod.pop();
            period.rotate_right(1);
        }
        // Rotating keeps the exponents but shifts which letter the period
        // starts on, so the start letter is unchanged.
        DirectiveSpec {
            start: self.start,
            preperiod,
            period,
        }
    }
}

impl fmt::Display for DirectiveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| {
            v.iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "{}:{}|{}",
            self.start,
            join(&self.preperiod),
            join(&self.period)
        )
    }
}

impl fmt::Debug for DirectiveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DirectiveSpec({self})")
    }
}

fn parse_list(s: &str) -> Result<Vec<u64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("'{t}' is not a positive integer")))
        })
        .collect()
}

impl FromStr for DirectiveSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (start, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("'{s}': expected START:pre|per")))?;
        let start = match start.trim() {
            "G" => Morphism::G,
            "D" => Morphism::D,
            other => return Err(Error::Parse(format!("'{other}' is not G or D"))),
        };
        let (pre, per) = match rest.split_once('|') {
            Some((pre, per)) => (parse_list(pre)?, parse_list(per)?),
            None => (parse_list(rest)?, Vec::new()),
        };
        DirectiveSpec::new(start, pre, per).map_err(|e| Error::Parse(format!("'{s}': {e}")))
    }
}

impl Serialize for DirectiveSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DirectiveSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
