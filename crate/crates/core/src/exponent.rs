//! Critical exponents as exact suprema over families of levels `N`, the
//! small-exponent classifiers, and parameter sweeps.
//!
//! The critical exponent of the CS Rote sequence is `sup(M₁ ∪ M₂ ∪ M₃)`, with
//! `X = q` for G-start and `X = p` for D-start directives:
//!
//! - `M₁ ∋ a_{N+1} + 2 + (q'_{N−1} − 1)/q'_N` when `X_N` is even,
//! - `M₂ ∋ (a_{N+1} + 2)/2 + (q'_{N−1} − 1)/(2q'_N)` when `X_N` is odd,
//! - `M₃ ∋ 2 + (q'_N − 1)/(q'_{N−1} + q'_N)` when `X_{N−1}`, `X_N` are odd, `a_{N+1} > 1`, `N ≥ 1`.
//!
//! # Evaluating the supremum
//!
//! Write `x*` for the limit of `q'_{N−1}/q'_N` along a residue class of `N`
//! modulo the period length and `φ_N = q'_{N−1} − x* q'_N`. Past the
//! preperiod, `φ` is multiplied by the small eigenvalue of the period matrix
//! at every period, so it decays geometrically. Each term differs from its
//! class limit by `φ_N − 1` (or `φ_N − 2`, or `−φ_N − 1 − x*`) over a positive
//! quantity, so once `|φ_N| < 1` on a whole period every later term lies
//! strictly below its class limit. The supremum is then the maximum of the
//! finitely many earlier terms and the class limits; parities repeat with a
//! period dividing six periods, which bounds the classes to inspect.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::convergents::{ratio_limit, ConvergentTable};
use crate::directive::{DirectiveSpec, Morphism};
use crate::error::{Error, Result};
use crate::surd::QuadraticSurd;

/// A family of candidate values indexed by the level `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    M1,
    M2,
    M3,
    /// `ind(r)` at level `N` in the Sturmian sequence.
    SturmianR,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::M1 => "M1",
            Family::M2 => "M2",
            Family::M3 => "M3",
            Family::SturmianR => "ind(r)",
        })
    }
}

const ROTE_FAMILIES: [Family; 3] = [Family::M1, Family::M2, Family::M3];

fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl Family {
    fn is_member(self, t: &ConvergentTable, n: i64) -> Result<bool> {
        let x_n = t.stability_parity(n);
        Ok(match self {
            Family::M1 => x_n == 0,
            Family::M2 => x_n == 1,
            Family::M3 => {
                n >= 1
                    && x_n == 1
                    && t.stability_parity(n - 1) == 1
                    && t.spec().a_req(n as usize + 1)? > 1
            }
            Family::SturmianR => true,
        })
    }

    fn term(self, t: &ConvergentTable, n: i64) -> Result<BigRational> {
        let a = BigInt::from(t.spec().a_req(n as usize + 1)?);
        let (qp, qp1) = (t.qp(n), t.qp(n - 1));
        Ok(match self {
            Family::M1 => BigRational::from_integer(a + 2) + rat(qp1 - 1, qp),
            Family::M2 => rat(a + 2, 2) + rat(qp1 - 1, qp * 2),
            Family::M3 => BigRational::from_integer(2.into()) + rat(&qp - 1, qp1 + &qp),
            Family::SturmianR => BigRational::from_integer(a + 2) + rat(qp1 - 2, qp),
        })
    }

    /// Limit of the terms along levels with `a_{N+1} = a` and ratio limit `x`.
    fn limit(self, a: u64, x: &QuadraticSurd) -> Result<QuadraticSurd> {
        let int = |v: i64| QuadraticSurd::from_integer(v);
        let a = a as i64;
        match self {
            Family::M1 | Family::SturmianR => int(a + 2).checked_add(x),
            Family::M2 => int(a + 2).checked_add(x)?.checked_div(&int(2)),
            Family::M3 => int(2).checked_add(&int(1).checked_add(x)?.recip()?),
        }
    }
}

/// Level `N` and family of a term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub family: Family,
    #[serde(rename = "N")]
    pub level: i64,
}

/// An exact supremum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentValue {
    pub value: QuadraticSurd,
    /// Realized by a term at a finite level rather than only as a limit.
    pub attained: bool,
    /// The first term equal to the supremum, when attained.
    pub witness: Option<Witness>,
    /// The family whose class limit equals the supremum, when one does.
    pub limit_of: Option<Family>,
    /// Set for finite specs: the value is only a lower bound.
    pub truncated: bool,
}

impl ExponentValue {
    /// `2 + √2/2 ≈ 2.7071067811, not attained (limit of M3)`.
    pub fn describe(&self, digits: u32) -> String {
        let mut s = format!("{} ≈ {}", self.value, self.value.to_decimal(digits));
        if self.truncated {
            s.push_str(", lower bound from a finite directive");
        } else if let Some(w) = self.witness {
            s.push_str(&format!(", attained ({} at N = {})", w.family, w.level));
        } else if let Some(f) = self.limit_of {
            s.push_str(&format!(", not attained (limit of {f})"));
        } else {
            s.push_str(", not attained");
        }
        s
    }

    pub fn to_json(&self, digits: u32) -> serde_json::Value {
        serde_json::json!({
            "value": self.value.to_json(),
            "text": self.value.to_string(),
            "decimal": self.value.to_decimal(digits),
            "attained": self.attained,
            "witness": self.witness,
            "limit_of": self.limit_of,
            "truncated": self.truncated,
        })
    }
}

/// `sup` over the given families of all their terms, exactly.
pub fn supremum(spec: &DirectiveSpec, families: &[Family]) -> Result<ExponentValue> {
    let mut t = ConvergentTable::new(spec);
    if !spec.is_periodic() {
        return truncated_supremum(&mut t, families);
    }
    let k = spec.preperiod().len() as i64;
    let p = spec.period().len() as i64;
    let limits: Vec<QuadraticSurd> = (0..p as usize)
        .map(|c| ratio_limit(spec, c))
        .collect::<Result<_>>()?;
    let x_star = |n: i64| &limits[(n % p) as usize];
    let one = QuadraticSurd::from_integer(1);

    // first N0 > k with |φ_N| < 1 for N0 ≤ N < N0 + P
    let mut n0 = k + 1;
    let mut run = 0;
    let mut n = k + 1;
    while run < p {
        t.extend_to(n)?;
        let phi = QuadraticSurd::from_integer(t.qp(n - 1))
            .checked_sub(&x_star(n).checked_mul(&QuadraticSurd::from_integer(t.qp(n)))?)?;
        if phi.abs() < one {
            run += 1;
        } else {
            run = 0;
            n0 = n + 1;
        }
        n += 1;
    }

    let mut best: Option<(QuadraticSurd, Witness)> = None;
    t.extend_to(n0 + 6 * p)?;
    for n in 0..n0 {
        for &f in families {
            if f.is_member(&t, n)? {
                let v = QuadraticSurd::from_rational(&f.term(&t, n)?);
                if best.as_ref().map_or(true, |(b, _)| v > *b) {
                    best = Some((v, Witness { family: f, level: n }));
                }
            }
        }
    }
    let mut best_limit: Option<(QuadraticSurd, Family)> = None;
    for n in n0..n0 + 6 * p {
        for &f in families {
            if f.is_member(&t, n)? {
                let v = f.limit(spec.a_req(n as usize + 1)?, x_star(n))?;
                if best_limit.as_ref().map_or(true, |(b, _)| v > *b) {
                    best_limit = Some((v, f));
                }
            }
        }
    }
    Ok(match (best, best_limit) {
        (Some((v, w)), Some((l, f))) => match v.cmp(&l) {
            Ordering::Less => not_attained(l, f),
            Ordering::Equal => ExponentValue {
                value: v,
                attained: true,
                witness: Some(w),
                limit_of: Some(f),
                truncated: false,
            },
            Ordering::Greater => attained(v, w),
        },
        (Some((v, w)), None) => attained(v, w),
        (None, Some((l, f))) => not_attained(l, f),
        (None, None) => {
            return Err(Error::Invariant(format!("no family has a term for {spec}")));
        }
    })
}

fn attained(value: QuadraticSurd, w: Witness) -> ExponentValue {
    ExponentValue {
        value,
        attained: true,
        witness: Some(w),
        limit_of: None,
        truncated: false,
    }
}

fn not_attained(value: QuadraticSurd, f: Family) -> ExponentValue {
    ExponentValue {
        value,
        attained: false,
        witness: None,
        limit_of: Some(f),
        truncated: false,
    }
}

fn truncated_supremum(t: &mut ConvergentTable, families: &[Family]) -> Result<ExponentValue> {
    let known = t.spec().preperiod().len() as i64;
    t.extend_to(known)?;
    let mut best: Option<(QuadraticSurd, Witness)> = None;
    for n in 0..known {
        for &f in families {
            if f.is_member(t, n)? {
                let v = QuadraticSurd::from_rational(&f.term(t, n)?);
                if best.as_ref().map_or(true, |(b, _)| v > *b) {
                    best = Some((v, Witness { family: f, level: n }));
                }
            }
        }
    }
    let (value, w) = best.ok_or_else(|| {
        Error::InsufficientDirective(format!("{} defines no complete level", t.spec()))
    })?;
    Ok(ExponentValue {
        value,
        attained: true,
        witness: Some(w),
        limit_of: None,
        truncated: true,
    })
}

/// The elements of `M₁`, `M₂`, `M₃` contributed by level `N`.
pub fn m_element(spec: &DirectiveSpec, n: i64) -> Result<Vec<(Family, BigRational)>> {
    if n < 0 {
        return Err(Error::Domain("levels start at N = 0".into()));
    }
    let mut t = ConvergentTable::new(spec);
    t.extend_to(n)?;
    let mut out = Vec::new();
    for f in ROTE_FAMILIES {
        if f.is_member(&t, n)? {
            out.push((f, f.term(&t, n)?));
        }
    }
    Ok(out)
}

/// Critical exponent of the CS Rote sequence associated with `spec`.
///
/// Finite specs give a lower bound with `truncated` set.
pub fn critical_exponent(spec: &DirectiveSpec) -> Result<ExponentValue> {
    supremum(spec, &ROTE_FAMILIES)
}

/// `true` when `a_i ∈ allowed` for every `i ≥ from`.
fn tail_in(spec: &DirectiveSpec, from: usize, allowed: &[u64]) -> bool {
    let last = from.max(spec.preperiod().len() + 1) + spec.period().len();
    (from..=last).all(|i| spec.a(i).is_some_and(|a| allowed.contains(&a)))
}

fn a_in(spec: &DirectiveSpec, i: usize, allowed: &[u64]) -> bool {
    spec.a(i).is_some_and(|a| allowed.contains(&a))
}

/// Which of the four directive shapes with critical exponent at most 3 `spec` has:
///
/// 1. `G^{a₁}(D²G²)^ω`, `a₁ ∈ {1, 3}`;
/// 2. `G^{a₁}D⁴(G²D²)^ω`, `a₁ ∈ {1, 3}`;
/// 3. `G^{a₁}D¹G^{a₃}(D²G²)^ω`, `a₁ ∈ {2, 4}`, `a₃ ∈ {1, 3}`;
/// 4. `D¹G^{a₂}(D²G²)^ω`, `a₂ ∈ {1, 3}`.
pub fn classify_small(spec: &DirectiveSpec) -> Result<Option<u8>> {
    spec.require_periodic()?;
    let two = [2];
    let family = match spec.start() {
        Morphism::G => {
            if a_in(spec, 1, &[1, 3]) && tail_in(spec, 2, &two) {
                Some(1)
            } else if a_in(spec, 1, &[1, 3]) && a_in(spec, 2, &[4]) && tail_in(spec, 3, &two) {
                Some(2)
            } else if a_in(spec, 1, &[2, 4])
                && a_in(spec, 2, &[1])
                && a_in(spec, 3, &[1, 3])
                && tail_in(spec, 4, &two)
            {
                Some(3)
            } else {
                None
            }
        }
        Morphism::D => {
            (a_in(spec, 1, &[1]) && a_in(spec, 2, &[1, 3]) && tail_in(spec, 3, &two)).then_some(4)
        }
    };
    Ok(family)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BlockTag {
    /// `111`, only as a prefix.
    L0,
    /// `s1`, `s ∈ {2, 4}`.
    L1,
    /// `c s⋯s 3 1`, `c ∈ {1, 3}`, `s ∈ {2, 4}`.
    L2,
    /// `c` followed by an infinite `{2, 4}`-tail.
    L3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub tag: BlockTag,
    /// 1-based index of the first exponent in the block.
    pub start: usize,
    /// The exponents; for `L3`, the part read before the tail starts repeating.
    pub exponents: Vec<u64>,
}

/// Decomposition of `a₁a₂⋯` into the blocks `L₀ … L₃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockParse {
    pub verdict: bool,
    /// The blocks read until the parse becomes periodic or fails.
    pub blocks: Vec<Block>,
    /// Blocks from this index on repeat forever (shifted by whole periods).
    pub repeat_from: Option<usize>,
    /// For `L3`, the exponents repeated forever after the listed ones.
    pub tail: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum State {
    /// At a block boundary.
    Boundary,
    /// Read `s ∈ {2, 4}`, a `1` must follow.
    AfterS,
    /// Read `c` and possibly some `s`: inside `L₂` or `L₃`.
    Open,
    /// Read the `3` closing an `L₂`, a `1` must follow.
    AfterThree,
    Dead,
}

fn step(state: State, a: u64) -> State {
    match (state, a) {
        (State::Boundary, 2 | 4) => State::AfterS,
        (State::Boundary, 1 | 3) => State::Open,
        (State::AfterS, 1) => State::Boundary,
        (State::Open, 2 | 4) => State::Open,
        (State::Open, 3) => State::AfterThree,
        (State::AfterThree, 1) => State::Boundary,
        _ => State::Dead,
    }
}

/// Runs the block automaton on `a_from, a_{from+1}, …`.
///
/// The future of the run depends only on the state and the position modulo
/// the period, so it is decided once a state repeats at a period boundary.
fn run_blocks(spec: &DirectiveSpec, from: usize, initial: Vec<Block>) -> BlockParse {
    let k = spec.preperiod().len();
    let p = spec.period().len();
    let mut blocks = initial;
    let mut state = State::Boundary;
    let mut block_start = from;
    let mut current: Vec<u64> = Vec::new();
    let reject = |blocks: Vec<Block>| BlockParse {
        verdict: false,
        blocks,
        repeat_from: None,
        tail: Vec::new(),
    };
    // (state, number of closed blocks) at period boundaries
    let mut seen: Vec<(State, usize)> = Vec::new();
    let mut i = from;
    loop {
        if i > k && (i - k - 1) % p == 0 {
            if let Some(&(_, closed_then)) = seen.iter().find(|s| s.0 == state) {
                if blocks.len() > closed_then {
                    // a block closed within the cycle, so boundaries recur forever
                    return BlockParse {
                        verdict: true,
                        blocks,
                        repeat_from: Some(closed_then),
                        tail: Vec::new(),
                    };
                }
                if state == State::Open {
                    // only 2s and 4s from here on
                    let tail = (i..i + p).map(|j| spec.a(j).unwrap()).collect();
                    blocks.push(Block {
                        tag: BlockTag::L3,
                        start: block_start,
                        exponents: current,
                    });
                    return BlockParse {
                        verdict: true,
                        blocks,
                        repeat_from: None,
                        tail,
                    };
                }
                return reject(blocks);
            }
            seen.push((state, blocks.len()));
        }
        let a = spec.a(i).expect("periodic spec");
        state = step(state, a);
        current.push(a);
        match state {
            State::Dead => return reject(blocks),
            State::Boundary => {
                let tag = if current.len() == 2 && matches!(current[0], 2 | 4) {
                    BlockTag::L1
                } else {
                    BlockTag::L2
                };
                blocks.push(Block {
                    tag,
                    start: block_start,
                    exponents: std::mem::take(&mut current),
                });
                block_start = i + 1;
            }
            _ => {}
        }
        i += 1;
    }
}

/// Whether the CS Rote sequence has critical exponent below `7/2`, decided
/// by parsing `a₁a₂⋯` into the blocks `L₀ = 111` (prefix only),
/// `L₁ = s1`, `L₂ = c s⋯s 31` and `L₃ = c s s s⋯` (`c ∈ {1,3}`, `s ∈ {2,4}`).
///
/// The blocks are read by a deterministic automaton, so no backtracking is
/// needed; `L₀` is tried as an alternative prefix. Only G-start directives are
/// covered.
pub fn below_seven_halves(spec: &DirectiveSpec) -> Result<BlockParse> {
    if spec.start() != Morphism::G {
        return Err(Error::TheoremScope {
            theorem: "seven-halves block characterization",
            detail: format!("{spec} starts with D; only G-start directives are covered"),
        });
    }
    spec.require_periodic()?;
    let plain = run_blocks(spec, 1, Vec::new());
    if plain.verdict {
        return Ok(plain);
    }
    if (1..=3).all(|i| spec.a(i) == Some(1)) {
        let l0 = Block {
            tag: BlockTag::L0,
            start: 1,
            exponents: vec![1, 1, 1],
        };
        let with_l0 = run_blocks(spec, 4, vec![l0]);
        if with_l0.verdict {
            return Ok(with_l0);
        }
    }
    Ok(plain)
}

impl BlockParse {
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, b) in self.blocks.iter().enumerate() {
            if Some(i) == self.repeat_from {
                parts.push("(".into());
            }
            let ex: Vec<String> = b.exponents.iter().map(|a| a.to_string()).collect();
            let mut s = format!("{:?}[{}", b.tag, ex.join(","));
            if b.tag == BlockTag::L3 {
                let tail: Vec<String> = self.tail.iter().map(|a| a.to_string()).collect();
                s.push_str(&format!(",({})^ω", tail.join(",")));
            }
            s.push(']');
            parts.push(s);
        }
        if self.repeat_from.is_some() {
            parts.push(")^ω".into());
        }
        parts.join(" ").replace("( ", "(").replace(" )", ")")
    }
}

/// Bounds of a sweep over eventually periodic directives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    pub max_preperiod: usize,
    pub max_period: usize,
    pub max_a: u64,
    pub starts: Vec<Morphism>,
}

fn words_over(len: usize, max_a: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=max_a).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// All canonical specs within the bounds, in a fixed order: start letter,
/// preperiod length, period length, then exponents lexicographically.
pub fn enumerate_specs(bounds: &SweepBounds) -> Vec<DirectiveSpec> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for &start in &bounds.starts {
        for k in 0..=bounds.max_preperiod {
            for p in 1..=bounds.max_period {
                for pre in words_over(k, bounds.max_a) {
                    for per in words_over(p, bounds.max_a) {
                        let spec = DirectiveSpec::new(start, pre.clone(), per)
                            .expect("exponents are positive")
                            .canonical();
                        if seen.insert(spec.clone()) {
                            out.push(spec);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Critical exponents of every spec within the bounds, computed in parallel,
/// returned in enumeration order.
pub fn exponent_sweep(bounds: &SweepBounds) -> Vec<(DirectiveSpec, Result<ExponentValue>)> {
    enumerate_specs(bounds)
        .into_par_iter()
        .map(|s| {
            let v = critical_exponent(&s);
            (s, v)
        })
        .collect()
}

/// CSV with columns `spec,value,decimal,attained,witness`.
pub fn sweep_csv(rows: &[(DirectiveSpec, Result<ExponentValue>)], digits: u32) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["spec", "value", "decimal", "attained", "witness"])
        .unwrap();
    for (spec, v) in rows {
        match v {
            Ok(v) => {
                let witness = match (v.witness, v.limit_of) {
                    (Some(wi), _) => format!("{}@{}", wi.family, wi.level),
                    (None, Some(f)) => format!("limit {f}"),
                    _ => String::new(),
                };
                w.write_record([
                    spec.to_string(),
                    v.value.to_string(),
                    v.value.to_decimal(digits),
                    v.attained.to_string(),
                    witness,
                ])
                .unwrap();
            }
            Err(e) => {
                w.write_record([spec.to_string(), format!("error: {e}"), String::new(), String::new(), String::new()])
                    .unwrap();
            }
        }
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}
