//! Finite binary words and the letter-difference map.
//!
//! The difference map sends `v_0 v_1 ... v_n` to `u_0 ... u_{n-1}` with
//! `u_i = v_i + v_{i+1} mod 2`. It forgets exactly one bit of information,
//! the first letter, so every word has two preimages related by the letter
//! exchange. [`s_inverse`] picks the one starting with `0`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite word over `{0, 1}`, one byte per letter.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    /// Wraps letters that are already known to be `0` or `1`.
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if let Some(bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Domain(format!("letter {bad} is not binary")));
        }
        Ok(BinaryWord(bits))
    }

    pub(crate) fn from_bits_unchecked(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        BinaryWord(bits)
    }

    pub fn letter(letter: u8) -> Self {
        BinaryWord(vec![letter & 1])
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.0
    }

    pub fn push(&mut self, letter: u8) {
        self.0.push(letter & 1);
    }

    pub fn concat(parts: &[&BinaryWord]) -> Self {
        let mut bits = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        for p in parts {
            bits.extend_from_slice(&p.0);
        }
        BinaryWord(bits)
    }

    /// `self` repeated `k` times.
    pub fn power(&self, k: usize) -> Self {
        BinaryWord(self.0.repeat(k))
    }

    pub fn prefix(&self, len: usize) -> Self {
        BinaryWord(self.0[..len].to_vec())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn is_factor_of(&self, other: &[u8]) -> bool {
        self.0.is_empty() || other.windows(self.0.len()).any(|w| w == self.0.as_slice())
    }
}

impl Deref for BinaryWord {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl From<&[u8]> for BinaryWord {
    fn from(bits: &[u8]) -> Self {
        BinaryWord(bits.iter().map(|b| b & 1).collect())
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord(\"{self}\")")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse(format!("'{other}' is not a binary letter"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BinaryWord)
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BinaryWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Letter counts `(|w|_0, |w|_1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParikhVector {
    pub zeros: u64,
    pub ones: u64,
}

impl ParikhVector {
    pub fn new(zeros: u64, ones: u64) -> Self {
        ParikhVector { zeros, ones }
    }

    pub fn len(&self) -> u64 {
        self.zeros + self.ones
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Parities `(zeros mod 2, ones mod 2)`.
    pub fn parity(&self) -> (u8, u8) {
        ((self.zeros & 1) as u8, (self.ones & 1) as u8)
    }
}

/// The difference map. Fails on the empty word, which has no image.
pub fn s_map(v: &[u8]) -> Result<BinaryWord> {
    if v.is_empty() {
        return Err(Error::Domain("the difference map is undefined on the empty word".into()));
    }
    Ok(BinaryWord(v.windows(2).map(|p| p[0] ^ p[1]).collect()))
}

/// The unique preimage of `u` under [`s_map`] that starts with `0`.
pub fn s_inverse(u: &[u8]) -> BinaryWord {
    s_inverse_from(u, 0)
}

/// The preimage of `u` under [`s_map`] that starts with `first`.
pub fn s_inverse_from(u: &[u8], first: u8) -> BinaryWord {
    let mut w = Vec::with_capacity(u.len() + 1);
    let mut cur = first & 1;
    w.push(cur);
    for &x in u {
        cur ^= x;
        w.push(cur);
    }
    BinaryWord(w)
}

/// Letter exchange `0 <-> 1`.
pub fn exchange(w: &[u8]) -> BinaryWord {
    BinaryWord(w.iter().map(|b| b ^ 1).collect())
}

/// Even number of ones.
pub fn is_stable(u: &[u8]) -> bool {
    u.iter().filter(|&&b| b == 1).count() % 2 == 0
}

pub fn parikh(w: &[u8]) -> ParikhVector {
    let ones = w.iter().filter(|&&b| b == 1).count() as u64;
    ParikhVector::new(w.len() as u64 - ones, ones)
}

pub fn mirror(w: &[u8]) -> BinaryWord {
    BinaryWord(w.iter().rev().copied().collect())
}

/// Center of a palindrome: `None` for even length, otherwise the middle letter.
pub fn palindrome_center(p: &[u8]) -> Result<Option<u8>> {
    if !p.iter().eq(p.iter().rev()) {
        return Err(Error::Domain(format!(
            "{} is not a palindrome",
            BinaryWord::from(p)
        )));
    }
    Ok(if p.len() % 2 == 0 { None } else { Some(p[p.len() / 2]) })
}
