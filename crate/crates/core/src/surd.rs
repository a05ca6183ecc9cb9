//! Exact real quadratic irrationals `(a + b√d)/c`.
//!
//! Values are kept in a canonical form so that structural equality is value
//! equality: `c > 0`, `gcd(a, b, c) = 1`, `d` square-free and different from
//! 1, and `b = 0` exactly when `d = 0`. Ordering is exact and total, even
//! across different radicands; the field operations require a shared `d`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

/// Splits `n` as `f² · r` with `r` square-free.
fn square_free_split(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    let mut rest = n.clone();
    let mut kept = BigUint::one();
    let mut f = BigUint::one();
    let mut p = BigUint::from(2u32);
    // Primes up to the cube root are removed explicitly; what remains has at
    // most two prime factors, so it is either square-free or a square.
    while &p * &p * &p <= rest {
        let p2 = &p * &p;
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            f *= &p;
        }
        if (&rest % &p).is_zero() {
            rest /= &p;
            kept *= &p;
        }
        p += 1u32;
    }
    let s = rest.sqrt();
    if &s * &s == rest {
        f *= s;
        rest = BigUint::one();
    }
    (kept * rest, f)
}

fn sign_of_sum(x: &BigInt, y: &BigInt, d: &BigInt) -> Ordering {
    // sign of x + y√d for d ≥ 0 (d need not be square-free)
    let sx = x.sign();
    let sy = if d.is_zero() { Sign::NoSign } else { y.sign() };
    let to_ord = |s: Sign| match s {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    };
    if sy == Sign::NoSign {
        return to_ord(sx);
    }
    if sx == Sign::NoSign || sx == sy {
        return to_ord(sy);
    }
    // opposite signs: compare x² with y²d
    let lhs = x * x;
    let rhs = y * y * d;
    match lhs.cmp(&rhs) {
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => to_ord(sx),
        Ordering::Less => to_ord(sy),
    }
}

impl QuadraticSurd {
    /// Builds `(a + b√d)/c` and brings it to canonical form.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if d.is_negative() {
            return Err(Error::Domain(format!("negative radicand {d}")));
        }
        let (mut a, mut b, mut c) = (a, b, c);
        let mut d = d;
        if !b.is_zero() && !d.is_zero() {
            let (r, f) = square_free_split(d.magnitude());
            b *= BigInt::from(f);
            d = BigInt::from(r);
            if d.is_one() {
                a += &b;
                b = BigInt::zero();
            }
        }
        if b.is_zero() || d.is_zero() {
            b = BigInt::zero();
            d = BigInt::zero();
        }
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        Ok(QuadraticSurd { a, b, c, d })
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        QuadraticSurd {
            a: n.into(),
            b: BigInt::zero(),
            c: BigInt::one(),
            d: BigInt::zero(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        QuadraticSurd {
            a: r.numer().clone(),
            b: BigInt::zero(),
            c: r.denom().clone(),
            d: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    /// `√d`.
    pub fn sqrt(d: impl Into<BigInt>) -> Result<Self> {
        Self::new(BigInt::zero(), BigInt::one(), BigInt::one(), d.into())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// The square-free radicand, `0` for rationals.
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.a.clone(), self.c.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn common_radicand(&self, other: &Self) -> Result<BigInt> {
        match (self.d.is_zero(), other.d.is_zero()) {
            (true, _) => Ok(other.d.clone()),
            (_, true) => Ok(self.d.clone()),
            _ if self.d == other.d => Ok(self.d.clone()),
            _ => Err(Error::IncompatibleRadicands(
                self.d.to_string(),
                other.d.to_string(),
            )),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Self::new(
            &self.a * &other.c + &other.a * &self.c,
            &self.b * &other.c + &other.b * &self.c,
            &self.c * &other.c,
            d,
        )
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Self::new(
            &self.a * &other.a + &self.b * &other.b * &d,
            &self.a * &other.b + &self.b * &other.a,
            &self.c * &other.c,
            d,
        )
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.common_radicand(other)?;
        self.checked_mul(&other.recip()?)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // c / (a + b√d) = c (a - b√d) / (a² - b²d)
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        Self::new(&self.c * &self.a, -(&self.c * &self.b), norm, self.d.clone())
    }

    pub fn neg(&self) -> Self {
        QuadraticSurd {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Sign as an ordering against zero.
    pub fn signum(&self) -> Ordering {
        sign_of_sum(&self.a, &self.b, &self.d)
    }

    /// Floor of `self · 10^digits`, as an integer.
    fn scaled_floor(&self, digits: u32) -> BigInt {
        let scale = BigInt::from(10u32).pow(digits);
        let t = &self.b * &scale;
        let root = (&t * &t * &self.d).magnitude().sqrt();
        let root = BigInt::from(root);
        // floor(t√d)
        let t_floor = if t.is_negative() {
            let exact = &root * &root == &t * &t * &self.d;
            if exact {
                -root
            } else {
                -root - 1
            }
        } else {
            root
        };
        (&self.a * &scale + t_floor).div_floor(&self.c)
    }

    /// Decimal expansion truncated (not rounded) to `digits` places.
    pub fn to_decimal(&self, digits: u32) -> String {
        if self.signum() == Ordering::Less {
            return format!("-{}", self.neg().to_decimal(digits));
        }
        let n = self.scaled_floor(digits).to_string();
        if digits == 0 {
            return n;
        }
        let digits = digits as usize;
        let padded = format!("{:0>width$}", n, width = digits + 1);
        let (int, frac) = padded.split_at(padded.len() - digits);
        format!("{int}.{frac}")
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let c = self.c.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        (a + b * d.sqrt()) / c
    }
}

impl Ord for QuadraticSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.d == other.d || self.d.is_zero() || other.d.is_zero() {
            let d = if self.d.is_zero() { &other.d } else { &self.d };
            let x = &self.a * &other.c - &other.a * &self.c;
            let y = &self.b * &other.c - &other.b * &self.c;
            return sign_of_sum(&x, &y, d);
        }
        // x + y√d + z√e with distinct square-free d, e
        let x = &self.a * &other.c - &other.a * &self.c;
        let y = &self.b * &other.c;
        let z = -(&other.b * &self.c);
        let irr = {
            // sign of y√d + z√e
            let sy = y.sign();
            let sz = z.sign();
            if sy == sz {
                sign_of_sum(&y, &BigInt::zero(), &BigInt::zero())
            } else {
                match (&y * &y * &self.d).cmp(&(&z * &z * &other.d)) {
                    Ordering::Greater => sign_of_sum(&y, &BigInt::zero(), &BigInt::zero()),
                    Ordering::Less => sign_of_sum(&z, &BigInt::zero(), &BigInt::zero()),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        };
        let rat = x.sign();
        let rat_ord = sign_of_sum(&x, &BigInt::zero(), &BigInt::zero());
        if irr == Ordering::Equal {
            return rat_ord;
        }
        if rat == Sign::NoSign || rat_ord == irr {
            return irr;
        }
        // sign(x² - (y²d + z²e + 2yz√(de))) decides which part dominates
        let big_x = &x * &x - &y * &y * &self.d - &z * &z * &other.d;
        let big_y = BigInt::from(-2) * &y * &z;
        let de = &self.d * &other.d;
        match sign_of_sum(&big_x, &big_y, &de) {
            Ordering::Greater => rat_ord,
            Ordering::Less => irr,
            Ordering::Equal => Ordering::Equal,
        }
    }
}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for QuadraticSurd {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for QuadraticSurd {
    fn from(r: BigRational) -> Self {
        Self::from_rational(&r)
    }
}

fn fmt_ratio(n: &BigInt, d: &BigInt) -> String {
    if d.is_one() {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

impl fmt::Display for QuadraticSurd {
    /// Renders as `p/q ± k√d/m`, e.g. `2 + √2/2`, `3 + √2`, `5/2 + √5/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rat = BigRational::new(self.a.clone(), self.c.clone());
        if self.b.is_zero() {
            return f.write_str(&fmt_ratio(rat.numer(), rat.denom()));
        }
        let coef = BigRational::new(self.b.abs(), self.c.clone());
        let num = if coef.numer().is_one() {
            String::new()
        } else {
            coef.numer().to_string()
        };
        let den = if coef.denom().is_one() {
            String::new()
        } else {
            format!("/{}", coef.denom())
        };
        let term = format!("{num}√{}{den}", self.d);
        let negative = self.b.is_negative();
        if rat.is_zero() {
            write!(f, "{}{term}", if negative { "-" } else { "" })
        } else {
            let op = if negative { "-" } else { "+" };
            write!(f, "{} {op} {term}", fmt_ratio(rat.numer(), rat.denom()))
        }
    }
}

impl fmt::Debug for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticSurd({self})")
    }
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("'{s}' is not an integer")))
}

fn parse_term(term: &str) -> Result<QuadraticSurd> {
    let (negative, body) = match term.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, term.strip_prefix('+').unwrap_or(term)),
    };
    if body.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let value = if let Some((coef, rest)) = body.split_once('√') {
        let coef = coef.trim_end_matches('*');
        let (coef, coef_den) = match coef.split_once('/') {
            Some((n, d)) => (parse_int(n)?, parse_int(d)?),
            None if coef.is_empty() => (BigInt::one(), BigInt::one()),
            None => (parse_int(coef)?, BigInt::one()),
        };
        let (rad, den) = match rest.split_once('/') {
            Some((r, d)) => (r, parse_int(d)?),
            None => (rest, BigInt::one()),
        };
        QuadraticSurd::new(BigInt::zero(), coef, den * coef_den, parse_int(rad)?)?
    } else {
        let (n, d) = match body.split_once('/') {
            Some((n, d)) => (parse_int(n)?, parse_int(d)?),
            None => (parse_int(body)?, BigInt::one()),
        };
        QuadraticSurd::new(n, BigInt::zero(), d, BigInt::zero())?
    };
    Ok(if negative { value.neg() } else { value })
}

impl FromStr for QuadraticSurd {
    type Err = Error;

    /// Accepts the [`Display`](fmt::Display) form; `sqrt(d)` may stand for `√d`.
    fn from_str(s: &str) -> Result<Self> {
        let mut text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        while let Some(start) = text.find("sqrt(") {
            let end = text[start..]
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced sqrt in '{s}'")))?;
            let inner = text[start + 5..start + end].to_string();
            text.replace_range(start..start + end + 1, &format!("√{inner}"));
        }
        if text.is_empty() {
            return Err(Error::Parse("empty surd".into()));
        }
        let mut terms = Vec::new();
        let mut begin = 0;
        for (i, ch) in text.char_indices() {
            if i > 0 && (ch == '+' || ch == '-') {
                terms.push(&text[begin..i]);
                begin = i;
            }
        }
        terms.push(&text[begin..]);
        let mut total = QuadraticSurd::zero();
        for t in terms {
            total = total.checked_add(&parse_term(t)?)?;
        }
        Ok(total)
    }
}

fn big_to_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(n.to_string()),
    }
}

fn big_from_json(v: &serde_json::Value) -> std::result::Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n
            .to_string()
            .parse()
            .map_err(|_| format!("'{n}' is not an integer")),
        serde_json::Value::String(s) => s.parse().map_err(|_| format!("'{s}' is not an integer")),
        other => Err(format!("expected an integer, found {other}")),
    }
}

impl QuadraticSurd {
    /// `{a, b, c, d}`; components beyond 64 bits are written as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "a": big_to_json(&self.a),
            "b": big_to_json(&self.b),
            "c": big_to_json(&self.c),
            "d": big_to_json(&self.d),
        })
    }
}

impl Serialize for QuadraticSurd {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuadraticSurd {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        let field = |name: &str| {
            v.get(name)
                .ok_or_else(|| D::Error::custom(format!("missing field {name}")))
                .and_then(|x| big_from_json(x).map_err(D::Error::custom))
        };
        QuadraticSurd::new(field("a")?, field("b")?, field("c")?, field("d")?)
            .map_err(D::Error::custom)
    }
}
