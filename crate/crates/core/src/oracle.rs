//! Brute-force ground truth on finite prefixes.
//!
//! Everything here is computed from a suffix array with its LCP array, so the
//! answers are exact over the prefix. Quantities of the infinite sequence are
//! only lower bounds unless the prefix is long enough; the relevant functions
//! enforce a margin or report whether the answer is certified.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{s_map, BinaryWord};

fn suffix_array(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut sa: Vec<usize> = (0..n).collect();
    if n <= 1 {
        return sa;
    }
    let mut rank: Vec<u64> = s.iter().map(|&c| c as u64).collect();
    let mut next = vec![0u64; n];
    let mut k = 1;
    loop {
        let key = |i: usize| (rank[i] << 32) | if i + k < n { rank[i + k] + 1 } else { 0 };
        sa.sort_unstable_by_key(|&i| key(i));
        next[sa[0]] = 0;
        for j in 1..n {
            next[sa[j]] = next[sa[j - 1]] + (key(sa[j - 1]) != key(sa[j])) as u64;
        }
        std::mem::swap(&mut rank, &mut next);
        if rank[sa[n - 1]] as usize == n - 1 {
            return sa;
        }
        k *= 2;
    }
}

/// `lcp[k]` is the common prefix length of suffixes `sa[k − 1]` and `sa[k]`.
fn kasai(s: &[u8], sa: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut rank = vec![0; n];
    for (k, &p) in sa.iter().enumerate() {
        rank[p] = k;
    }
    let mut lcp = vec![0; n];
    let mut h = 0;
    for i in 0..n {
        if rank[i] > 0 {
            let j = sa[rank[i] - 1];
            while i + h < n && j + h < n && s[i + h] == s[j + h] {
                h += 1;
            }
            lcp[rank[i]] = h;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }
    lcp
}

/// A right-branching node of the suffix tree that is also left special.
#[derive(Clone, Copy, Debug)]
struct BispecialNode {
    len: usize,
    /// SA interval, inclusive.
    lo: usize,
    hi: usize,
}

/// The largest power of a factor seen in a prefix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorIndexReport {
    pub factor: BinaryWord,
    #[serde(serialize_with = "ser_ratio")]
    pub index: BigRational,
    pub maximal_power: BinaryWord,
    /// The maximal power is followed by a breaking letter inside the prefix.
    pub truncation_safe: bool,
}

fn ser_ratio<S: serde::Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Suffix array, LCP array and derived scans over one prefix.
#[derive(Clone, Debug)]
pub struct PrefixIndex {
    text: Vec<u8>,
    sa: Vec<usize>,
    lcp: Vec<usize>,
    nodes: OnceLock<Vec<BispecialNode>>,
}

impl PrefixIndex {
    pub fn new(prefix: &[u8]) -> Self {
        let sa = suffix_array(prefix);
        let lcp = kasai(prefix, &sa);
        PrefixIndex {
            text: prefix.to_vec(),
            sa,
            lcp,
            nodes: OnceLock::new(),
        }
    }

    pub fn text(&self) -> &[u8] {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    fn word(&self, start: usize, len: usize) -> BinaryWord {
        BinaryWord::from_bits_unchecked(self.text[start..start + len].to_vec())
    }

    fn cmp_at(&self, pos: usize, w: &[u8]) -> Ordering {
        let end = (pos + w.len()).min(self.text.len());
        match self.text[pos..end].cmp(&w[..end - pos]) {
            Ordering::Equal if end - pos < w.len() => Ordering::Less,
            o => o,
        }
    }

    /// Inclusive-exclusive SA range of suffixes starting with `w`.
    fn range(&self, w: &[u8]) -> (usize, usize) {
        let lo = self.sa.partition_point(|&p| self.cmp_at(p, w) == Ordering::Less);
        let hi = self.sa.partition_point(|&p| self.cmp_at(p, w) != Ordering::Greater);
        (lo, hi)
    }

    /// Sorted starting positions of `w`.
    pub fn occurrences(&self, w: &[u8]) -> Vec<usize> {
        let (lo, hi) = self.range(w);
        let mut occ = self.sa[lo..hi].to_vec();
        occ.sort_unstable();
        occ
    }

    pub fn contains(&self, w: &[u8]) -> bool {
        let (lo, hi) = self.range(w);
        lo < hi
    }

    /// Class id of every window of length `n` (`u32::MAX` past the end) and the
    /// first position of each class, classes ordered lexicographically.
    fn classes(&self, n: usize) -> (Vec<u32>, Vec<usize>) {
        let len = self.text.len();
        let mut class = vec![u32::MAX; len];
        let mut reps: Vec<usize> = Vec::new();
        let mut open = false;
        for (k, &p) in self.sa.iter().enumerate() {
            if p + n > len {
                open = false;
                continue;
            }
            if !(open && self.lcp[k] >= n) {
                reps.push(p);
            }
            open = true;
            let c = reps.len() - 1;
            class[p] = c as u32;
            reps[c] = reps[c].min(p);
        }
        (class, reps)
    }

    /// Distinct factors of length `n`.
    pub fn factors(&self, n: usize) -> BTreeSet<BinaryWord> {
        let (_, reps) = self.classes(n);
        reps.into_iter().map(|p| self.word(p, n)).collect()
    }

    /// Number of distinct factors of length `n`.
    pub fn complexity(&self, n: usize) -> usize {
        if n > self.text.len() {
            return 0;
        }
        self.classes(n).1.len()
    }

    fn bispecial_nodes(&self) -> &[BispecialNode] {
        self.nodes.get_or_init(|| self.walk_bispecials())
    }

    /// Bottom-up walk of the LCP intervals, reporting every bispecial node.
    fn walk_bispecials(&self) -> Vec<BispecialNode> {
        let n = self.text.len();
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        // bit 0/1: a left extension by that letter; bit 2: occurrence at position 0
        let leaf = |p: usize| if p == 0 { 4u8 } else { 1 << self.text[p - 1] };
        let mut report = |h: usize, lo: usize, hi: usize, mask: u8| {
            if mask & 3 != 3 || lo == hi {
                return;
            }
            let first_long = if self.sa[lo] + h < n { lo } else { lo + 1 };
            if first_long < hi
                && self.text[self.sa[first_long] + h] == 0
                && self.text[self.sa[hi] + h] == 1
            {
                out.push(BispecialNode { len: h, lo, hi });
            }
        };
        // (lcp value, left bound, left-extension mask)
        let mut stack: Vec<(usize, usize, u8)> = vec![(0, 0, 0)];
        for k in 1..=n {
            let l = if k < n { self.lcp[k] } else { 0 };
            let mut child = leaf(self.sa[k - 1]);
            let mut lb = k - 1;
            while l < stack.last().unwrap().0 {
                let (h, lo, mask) = stack.pop().unwrap();
                let mask = mask | child;
                report(h, lo, k - 1, mask);
                child = mask;
                lb = lo;
            }
            let top = stack.last_mut().unwrap();
            if l > top.0 {
                stack.push((l, lb, child));
            } else {
                top.2 |= child;
            }
        }
        let (h, lo, mask) = stack.pop().unwrap();
        report(h, lo, n - 1, mask);
        out.sort_by_key(|b| b.len);
        out
    }

    fn margin_check(&self, max_len: usize) -> Result<()> {
        if 4 * (max_len + 1) > self.text.len() {
            return Err(Error::Truncation(format!(
                "a prefix of length {} cannot certify factors of length {max_len}",
                self.text.len()
            )));
        }
        Ok(())
    }

    /// Bispecial factors of length at most `max_len`, sorted by length.
    pub fn bispecials(&self, max_len: usize) -> Result<Vec<BinaryWord>> {
        self.margin_check(max_len)?;
        Ok(self
            .bispecial_nodes()
            .iter()
            .take_while(|b| b.len <= max_len)
            .map(|b| self.word(self.sa[b.lo], b.len))
            .collect())
    }

    /// For each factor of length `n`, the shortest bispecial containing it;
    /// the result is the set of those bispecials.
    pub fn shortest_bispecials_for_length(&self, n: usize) -> Result<BTreeSet<BinaryWord>> {
        self.margin_check(n)?;
        let (class, reps) = self.classes(n);
        let mut found = vec![false; reps.len()];
        let mut left = reps.len();
        let mut out = BTreeSet::new();
        for b in self.bispecial_nodes().iter() {
            if b.len < n {
                continue;
            }
            let p = self.sa[b.lo];
            let mut used = false;
            for i in p..=p + b.len - n {
                let c = class[i] as usize;
                if !found[c] {
                    found[c] = true;
                    left -= 1;
                    used = true;
                }
            }
            if used {
                out.insert(self.word(p, b.len));
            }
            if left == 0 {
                return Ok(out);
            }
        }
        Err(Error::Truncation(format!(
            "{left} factors of length {n} lie in no bispecial of the prefix"
        )))
    }

    /// The shortest bispecial of the prefix having `w` as a factor.
    pub fn shortest_bispecial_containing(&self, w: &[u8]) -> Result<BinaryWord> {
        self.margin_check(w.len())?;
        let occ: HashSet<usize> = self.occurrences(w).into_iter().collect();
        if occ.is_empty() {
            return Err(Error::Domain(format!("{} is not a factor of the prefix", BinaryWord::from(w))));
        }
        for b in self.bispecial_nodes().iter() {
            if b.len < w.len() {
                continue;
            }
            let p = self.sa[b.lo];
            if (p..=p + b.len - w.len()).any(|i| occ.contains(&i)) {
                return Ok(self.word(p, b.len));
            }
        }
        Err(Error::Truncation(format!(
            "no bispecial of the prefix contains {}",
            BinaryWord::from(w)
        )))
    }

    fn gaps(&self, occ: &[usize]) -> Vec<(usize, usize)> {
        occ.windows(2).map(|x| (x[0], x[1] - x[0])).collect()
    }

    /// Distinct return words to `w`, sorted by length then lexicographically.
    pub fn return_words(&self, w: &[u8]) -> Result<Vec<BinaryWord>> {
        let occ = self.occurrences(w);
        if occ.len() < 2 {
            return Err(Error::InsufficientData(format!(
                "{} occurs {} time(s) in the prefix",
                BinaryWord::from(w),
                occ.len()
            )));
        }
        let set: BTreeSet<(usize, BinaryWord)> = self
            .gaps(&occ)
            .into_iter()
            .map(|(p, g)| (g, self.word(p, g)))
            .collect();
        Ok(set.into_iter().map(|(_, w)| w).collect())
    }

    /// The largest power of `u` occurring in the prefix.
    pub fn index(&self, u: &[u8]) -> Result<FactorIndexReport> {
        if u.is_empty() {
            return Err(Error::Domain("the root must be nonempty".into()));
        }
        let occ = self.occurrences(u);
        if occ.is_empty() {
            return Err(Error::Domain(format!("{} is not a factor of the prefix", BinaryWord::from(u))));
        }
        let t = &self.text;
        let d = u.len();
        let (mut best, mut best_at) = (0, 0);
        let mut skip_until = 0;
        for &p in &occ {
            // a later occurrence whose copy of u ends inside this run ends its run at e too
            if p < skip_until {
                continue;
            }
            let mut e = p + d;
            while e < t.len() && t[e] == t[e - d] {
                e += 1;
            }
            if e - p > best {
                best = e - p;
                best_at = p;
            }
            skip_until = e + 1 - d;
        }
        Ok(FactorIndexReport {
            factor: BinaryWord::from(u),
            index: BigRational::new(BigInt::from(best), BigInt::from(d)),
            maximal_power: self.word(best_at, best),
            truncation_safe: best_at + best < t.len(),
        })
    }

    /// `R(n)`: the longest return word to a factor of length `n`, plus `n − 1`.
    ///
    /// Only factors occurring in the first half of the prefix are used. The
    /// answer is certified when the prefix is at least four times longer than
    /// `R(n)`; otherwise a truncation error is returned.
    pub fn recurrence(&self, n: usize) -> Result<u64> {
        if n == 0 {
            return Err(Error::Domain("the recurrence function starts at n = 1".into()));
        }
        self.margin_check(n)?;
        let (class, reps) = self.classes(n);
        let half = self.text.len() / 2;
        let mut last = vec![usize::MAX; reps.len()];
        let mut longest = vec![0usize; reps.len()];
        for (i, &c) in class.iter().enumerate() {
            if c == u32::MAX {
                continue;
            }
            let c = c as usize;
            if last[c] != usize::MAX {
                longest[c] = longest[c].max(i - last[c]);
            }
            last[c] = i;
        }
        let mut g = 0;
        for (c, &p) in reps.iter().enumerate() {
            if p >= half {
                continue;
            }
            if longest[c] == 0 {
                return Err(Error::Truncation(format!(
                    "{} occurs once in the prefix",
                    self.word(p, n)
                )));
            }
            g = g.max(longest[c]);
        }
        let r = g + n - 1;
        if 4 * r > self.text.len() {
            return Err(Error::Truncation(format!(
                "R({n}) ≥ {r} needs a prefix longer than {}",
                self.text.len()
            )));
        }
        Ok(r as u64)
    }

    /// Largest index among return words to bispecials, over roots of length
    /// at most `max_root_len`; a lower bound on the critical exponent.
    pub fn critical_exponent(&self, max_root_len: usize) -> Result<FactorIndexReport> {
        if max_root_len == 0 || 3 * max_root_len > self.text.len() {
            return Err(Error::Domain(format!(
                "max_root_len must lie in 1..={}",
                self.text.len() / 3
            )));
        }
        let mut roots: BTreeSet<&[u8]> = BTreeSet::new();
        for b in self.bispecial_nodes().iter() {
            let mut occ = self.sa[b.lo..=b.hi].to_vec();
            occ.sort_unstable();
            for (p, g) in self.gaps(&occ) {
                if g <= max_root_len {
                    roots.insert(&self.text[p..p + g]);
                }
            }
        }
        let mut best: Option<FactorIndexReport> = None;
        for r in roots {
            let rep = self.index(r)?;
            if best.as_ref().map_or(true, |b| rep.index > b.index) {
                best = Some(rep);
            }
        }
        best.ok_or_else(|| Error::InsufficientData("the prefix has no bispecial with a return word".into()))
    }

    /// Letters `a` with `a p a` a factor.
    pub fn palindromic_extensions(&self, p: &[u8]) -> Vec<u8> {
        (0..2u8)
            .filter(|&a| {
                let mut w = Vec::with_capacity(p.len() + 2);
                w.push(a);
                w.extend_from_slice(p);
                w.push(a);
                self.contains(&w)
            })
            .collect()
    }
}

pub fn scan_factors(prefix: &[u8], n: usize) -> BTreeSet<BinaryWord> {
    PrefixIndex::new(prefix).factors(n)
}

pub fn complexity(prefix: &[u8], n: usize) -> usize {
    PrefixIndex::new(prefix).complexity(n)
}

/// Bispecials of length below a quarter of the prefix, sorted by length.
pub fn scan_bispecials(prefix: &[u8]) -> Result<Vec<BinaryWord>> {
    let max = (prefix.len() / 4).saturating_sub(1);
    PrefixIndex::new(prefix).bispecials(max)
}

pub fn shortest_bispecial_containing(prefix: &[u8], w: &[u8]) -> Result<BinaryWord> {
    PrefixIndex::new(prefix).shortest_bispecial_containing(w)
}

pub fn scan_return_words(prefix: &[u8], w: &[u8]) -> Result<Vec<BinaryWord>> {
    PrefixIndex::new(prefix).return_words(w)
}

pub fn scan_index(prefix: &[u8], u: &[u8]) -> Result<FactorIndexReport> {
    PrefixIndex::new(prefix).index(u)
}

pub fn scan_recurrence(prefix: &[u8], n: usize) -> Result<u64> {
    PrefixIndex::new(prefix).recurrence(n)
}

pub fn scan_critical_exponent(prefix: &[u8], max_root_len: usize) -> Result<FactorIndexReport> {
    PrefixIndex::new(prefix).critical_exponent(max_root_len)
}

/// Prefix of the Thue–Morse sequence `0110100110010110⋯`.
pub fn thue_morse(len: usize) -> BinaryWord {
    BinaryWord::from_bits_unchecked((0..len).map(|i| (i.count_ones() & 1) as u8).collect())
}

/// Prefix of the period-doubling sequence `S(t) = 1011101⋯`.
pub fn period_doubling(len: usize) -> BinaryWord {
    s_map(&thue_morse(len + 1)).expect("nonempty")
}
