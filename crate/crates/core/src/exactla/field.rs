use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Parse `a`, `-a/b` or `a/b` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim().replace('\u{2212}', "-");
    let parsed = match t.split_once('/') {
        Some((num, den)) => {
            let num = BigInt::from_str(num.trim()).map_err(|_| bad_rational(s))?;
            let den = BigInt::from_str(den.trim()).map_err(|_| bad_rational(s))?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Rational::new(num, den)
        }
        None => Rational::from_integer(BigInt::from_str(&t).map_err(|_| bad_rational(s))?),
    };
    Ok(parsed)
}

fn bad_rational(s: &str) -> Error {
    Error::Parse(format!("`{s}` is not a rational number"))
}

/// Field element with an exact zero test.
///
/// Elements of some fields (number fields, prime fields) carry their own
/// context, so there is no associated `zero()`; `zero_like`/`one_like`
/// build constants in the same field as `self`.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn vanishes(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inverse(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// Image of an integer in the field of `self`.
    fn from_int_like(&self, v: i64) -> Self;

    /// Rank of a dense row-major matrix. Plain Gaussian elimination; the
    /// rational field overrides this with fraction-free elimination.
    fn rank_of(rows: &[Vec<Self>]) -> usize {
        gaussian_rank(rows.to_vec())
    }
}

pub(crate) fn gaussian_rank<F: Scalar>(mut rows: Vec<Vec<F>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].vanishes()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse();
        for j in col..cols {
            rows[rank][j] = rows[rank][j].times(&inv);
        }
        for r in rank + 1..rows.len() {
            if rows[r][col].vanishes() {
                continue;
            }
            let factor = rows[r][col].clone();
            for j in col..cols {
                let delta = factor.times(&rows[rank][j]);
                rows[r][j] = rows[r][j].minus(&delta);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

impl Scalar for Rational {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        self.recip()
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn from_int_like(&self, v: i64) -> Self {
        Rational::from_integer(v.into())
    }

    fn rank_of(rows: &[Vec<Self>]) -> usize {
        let cols = rows.first().map_or(0, Vec::len);
        let ints = rows
            .iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        super::matrix::IntMatrix::from_rows(ints, cols).rank()
    }
}

/// Residue class modulo a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModP {
    value: u64,
    p: u64,
}

impl ModP {
    pub fn new(v: i64, p: u64) -> Self {
        let m = v.rem_euclid(p as i64) as u64;
        ModP { value: m, p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = (acc as u128 * b as u128 % p as u128) as u64;
            }
            b = (b as u128 * b as u128 % p as u128) as u64;
            e >>= 1;
        }
        acc
    }
}

impl Scalar for ModP {
    fn vanishes(&self) -> bool {
        self.value == 0
    }
    fn plus(&self, rhs: &Self) -> Self {
        ModP { value: (self.value + rhs.value) % self.p, p: self.p }
    }
    fn minus(&self, rhs: &Self) -> Self {
        ModP { value: (self.value + self.p - rhs.value) % self.p, p: self.p }
    }
    fn times(&self, rhs: &Self) -> Self {
        let v = (self.value as u128 * rhs.value as u128 % self.p as u128) as u64;
        ModP { value: v, p: self.p }
    }
    fn negated(&self) -> Self {
        ModP { value: (self.p - self.value) % self.p, p: self.p }
    }
    fn inverse(&self) -> Self {
        assert!(self.value != 0, "inverse of zero residue");
        ModP { value: Self::pow(self.value, self.p - 2, self.p), p: self.p }
    }
    fn zero_like(&self) -> Self {
        ModP { value: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        ModP { value: 1 % self.p, p: self.p }
    }
    fn from_int_like(&self, v: i64) -> Self {
        ModP::new(v, self.p)
    }
}

impl fmt::Display for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}
