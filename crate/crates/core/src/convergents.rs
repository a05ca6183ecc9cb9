//! Convergents `p_N/q_N` of `θ = [0; a₁, a₂, …]` and `q'_N = p_N + q_N`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::directive::{DirectiveSpec, Morphism};
use crate::error::{Error, Result};
use crate::surd::QuadraticSurd;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvergentRow {
    #[serde(rename = "N")]
    pub n: i64,
    pub a: u64,
    pub p: BigInt,
    pub q: BigInt,
    #[serde(rename = "q'")]
    pub qp: BigInt,
}

/// Rows `N = −1, 0, 1, …` of `p_N, q_N, q'_N`, grown on demand.
#[derive(Clone, Debug)]
pub struct ConvergentTable {
    spec: DirectiveSpec,
    rows: Vec<ConvergentRow>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Column {
    P,
    Q,
}

impl Column {
    /// The column whose parity decides stability: `q` for G-start, `p` for D-start.
    pub fn for_start(start: Morphism) -> Column {
        match start {
            Morphism::G => Column::Q,
            Morphism::D => Column::P,
        }
    }
}

impl ConvergentTable {
    pub fn new(spec: &DirectiveSpec) -> Self {
        let one = BigInt::one();
        let zero = BigInt::zero();
        ConvergentTable {
            spec: spec.clone(),
            rows: vec![
                ConvergentRow {
                    n: -1,
                    a: 0,
                    p: one.clone(),
                    q: zero.clone(),
                    qp: one.clone(),
                },
                ConvergentRow {
                    n: 0,
                    a: 0,
                    p: zero,
                    q: one.clone(),
                    qp: one,
                },
            ],
        }
    }

    pub fn spec(&self) -> &DirectiveSpec {
        &self.spec
    }

    /// Largest `N` currently materialized.
    pub fn n_max(&self) -> i64 {
        self.rows.len() as i64 - 2
    }

    /// Materializes rows up to `N = n_max`.
    pub fn extend_to(&mut self, n_max: i64) -> Result<()> {
        while self.n_max() < n_max {
            let n = self.n_max() + 1;
            let a = self.spec.a_req(n as usize)?;
            let len = self.rows.len();
            let (prev, prev2) = (&self.rows[len - 1], &self.rows[len - 2]);
            let ab = BigInt::from(a);
            let row = ConvergentRow {
                n,
                a,
                p: &ab * &prev.p + &prev2.p,
                q: &ab * &prev.q + &prev2.q,
                qp: &ab * &prev.qp + &prev2.qp,
            };
            self.rows.push(row);
        }
        Ok(())
    }

    pub fn rows(&self) -> &[ConvergentRow] {
        &self.rows
    }

    pub fn row(&self, n: i64) -> &ConvergentRow {
        assert!(n >= -1 && n <= self.n_max(), "row {n} not materialized");
        &self.rows[(n + 1) as usize]
    }

    pub fn p(&self, n: i64) -> &BigInt {
        &self.row(n).p
    }

    pub fn q(&self, n: i64) -> &BigInt {
        &self.row(n).q
    }

    /// `q'_N` for `N ≥ −2`, with the sentinel `q'_{−2} = 1`.
    pub fn qp(&self, n: i64) -> BigInt {
        if n == -2 {
            BigInt::one()
        } else {
            self.row(n).qp.clone()
        }
    }

    pub fn column(&self, col: Column, n: i64) -> &BigInt {
        match col {
            Column::P => self.p(n),
            Column::Q => self.q(n),
        }
    }

    /// Parity bit of the stability column (`q` for G-start, `p` for D-start).
    pub fn stability_parity(&self, n: i64) -> u8 {
        let col = Column::for_start(self.spec.start());
        self.column(col, n).is_odd() as u8
    }

    /// The level `N ≥ 0` with `q'_N ≤ len < q'_{N+1}`, for `len ≥ 1`.
    pub fn level_of_length(&mut self, len: &BigInt) -> Result<i64> {
        if len < &BigInt::one() {
            return Err(Error::Domain("lengths start at 1".into()));
        }
        let mut n = 0;
        loop {
            self.extend_to(n + 1)?;
            if len < &self.rows[(n + 2) as usize].qp {
                return Ok(n);
            }
            n += 1;
        }
    }

    /// CSV with header `N,a_N,p_N,q_N,q'_N`, starting at `N = −1`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["N", "a_N", "p_N", "q_N", "q'_N"]).unwrap();
        for r in &self.rows {
            w.write_record([
                r.n.to_string(),
                r.a.to_string(),
                r.p.to_string(),
                r.q.to_string(),
                r.qp.to_string(),
            ])
            .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

/// Table with rows up to `n_max`.
pub fn convergents(spec: &DirectiveSpec, n_max: i64) -> Result<ConvergentTable> {
    let mut t = ConvergentTable::new(spec);
    t.extend_to(n_max)?;
    Ok(t)
}

/// Matrix `[[α, β], [γ, δ]]` of the Möbius map `x ↦ (αx + β)/(γx + δ)`.
type Mobius = [[BigInt; 2]; 2];

fn mobius_step(a: u64) -> Mobius {
    // x ↦ 1/(a + x)
    [
        [BigInt::zero(), BigInt::one()],
        [BigInt::one(), BigInt::from(a)],
    ]
}

fn mobius_mul(x: &Mobius, y: &Mobius) -> Mobius {
    let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Exponents `a_N` for one period ending at a level in class `residue_class`,
/// listed from the latest to the earliest.
fn period_ending_at(spec: &DirectiveSpec, residue_class: usize) -> Vec<u64> {
    let p = spec.period().len();
    let k = spec.preperiod().len();
    // a level N > k in the class has a_N = period[(N − k − 1) mod p]
    let n0 = (k + 1..k + 1 + p).find(|n| n % p == residue_class % p).unwrap();
    (0..p).map(|j| spec.a(n0 + p - j).unwrap()).collect()
}

/// Fixed point in `(0, 1)` of `x ↦ 1/(a_N + 1/(a_{N−1} + ⋯ + 1/(a_{N−P+1} + x)))`.
fn fixed_point(exponents_latest_first: &[u64]) -> Result<QuadraticSurd> {
    let mut m = mobius_step(exponents_latest_first[0]);
    for &a in &exponents_latest_first[1..] {
        m = mobius_mul(&m, &mobius_step(a));
    }
    let [[alpha, beta], [gamma, delta]] = m;
    // γx² + (δ − α)x − β = 0, positive root
    let disc = (&delta - &alpha) * (&delta - &alpha) + BigInt::from(4) * &beta * &gamma;
    QuadraticSurd::new(&alpha - &delta, BigInt::one(), BigInt::from(2) * gamma, disc)
}

/// Limit of `q'_{N−1}/q'_N` as `N → ∞` along `N ≡ residue_class (mod period length)`.
pub fn ratio_limit(spec: &DirectiveSpec, residue_class: usize) -> Result<QuadraticSurd> {
    spec.require_periodic()?;
    fixed_point(&period_ending_at(spec, residue_class))
}

/// Bits `X_N mod 2` for `N = 0..=n_max`.
pub fn parity_pattern(spec: &DirectiveSpec, column: Column, n_max: i64) -> Result<Vec<u8>> {
    let t = convergents(spec, n_max)?;
    Ok((0..=n_max)
        .map(|n| t.column(column, n).is_odd() as u8)
        .collect())
}
