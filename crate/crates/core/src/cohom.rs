//! Cohomology of the Orlik-Solomon complex at rational weights, and of its
//! reduction mod `N` at integer weights.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exactla::{is_prime, rank_mod_p_u64, smith_normal_form, Rational};
use crate::osalg::{complex, AomotoComplex};

/// Rational weights `lambda = k / N` with `N` the least common denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    lam: Vec<Rational>,
    modulus: BigInt,
    k: Vec<BigInt>,
}

impl WeightVector {
    pub fn new(lam: Vec<Rational>) -> Self {
        let modulus = lam.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let k = lam.iter().map(|x| x.numer() * (&modulus / x.denom())).collect();
        WeightVector { lam, modulus, k }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![Rational::zero(); n])
    }

    /// `k / N`. Common factors of `gcd(k)` and `N` cancel, and the returned
    /// note says so when that happens.
    pub fn from_integers(k: &[BigInt], modulus: &BigInt) -> (Self, Option<String>) {
        let g = k.iter().fold(modulus.clone(), |acc, x| acc.gcd(x));
        let note = (!g.is_one()).then(|| {
            format!("weights k/N normalized: gcd(k, N) = {g} removed, N = {}", modulus / &g)
        });
        let lam = k.iter().map(|x| Rational::new(x.clone(), modulus.clone())).collect();
        (Self::new(lam), note)
    }

    pub fn from_i64(k: &[i64], modulus: i64) -> Self {
        let k: Vec<BigInt> = k.iter().map(|&x| x.into()).collect();
        Self::from_integers(&k, &modulus.into()).0
    }

    pub fn len(&self) -> usize {
        self.lam.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lam.is_empty()
    }

    pub fn lam(&self) -> &[Rational] {
        &self.lam
    }

    /// Least common denominator `N`.
    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    /// Integer weights `k = N * lambda`.
    pub fn k(&self) -> &[BigInt] {
        &self.k
    }

    pub fn is_zero(&self) -> bool {
        self.lam.iter().all(Zero::is_zero)
    }

    pub fn total(&self) -> Rational {
        self.lam.iter().sum()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self::new(self.lam.iter().map(|x| x * c).collect())
    }

    pub fn translated(&self, m: &[i64]) -> Self {
        Self::new(self.lam.iter().zip(m).map(|(x, &d)| x + Rational::from_integer(d.into())).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self::new(self.lam.iter().chain(&other.lam).cloned().collect())
    }

    pub fn split_at(&self, mid: usize) -> (Self, Self) {
        let (a, b) = self.lam.split_at(mid);
        (Self::new(a.to_vec()), Self::new(b.to_vec()))
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lam.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CoefficientRing {
    /// Rationals, complex at `a_lambda`.
    Rational,
    /// `Z/N`, complex at `a_k mod N`.
    ModN(u64),
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Rational => write!(f, "Q"),
            CoefficientRing::ModN(n) => write!(f, "Z_{n}"),
        }
    }
}

/// Per-degree cohomology dimensions (ranks for `Z/N`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub dims: Vec<usize>,
    pub ring: CoefficientRing,
    /// rank of `mu^q` at the weights, `q = 0..=l`
    pub boundary_ranks: Vec<usize>,
    /// For composite `N`: per degree, the nonzero diagonal entries
    /// `gcd(d_i, N)` of the Smith form of `mu^q(k)` over `Z/N`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant_factors: Option<Vec<Vec<u64>>>,
    pub notes: Vec<String>,
}

impl CohomologyReport {
    pub fn poincare(&self) -> String {
        render_poincare(&self.dims)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(q, &d)| if q % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// `c0 + c1*t + c2*t^2 + ...` with zero terms omitted and unit
/// coefficients dropped on powers of `t`; `0` for the zero polynomial.
pub fn render_poincare(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(q, &c)| {
            let power = match q {
                0 => return c.to_string(),
                1 => "t".to_string(),
                _ => format!("t^{q}"),
            };
            if c == 1 {
                power
            } else {
                format!("{c}*{power}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn dims_from_ranks(betti: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..betti.len())
        .map(|q| betti[q] - ranks[q] - if q > 0 { ranks[q - 1] } else { 0 })
        .collect()
}

/// Ranks over Q of `mu^q(k)`; equal to those of `mu^q(lambda)` because
/// the matrices are linear in the weights.
pub(crate) fn rational_ranks(cx: &AomotoComplex, w: &WeightVector) -> Vec<usize> {
    if w.is_zero() {
        return vec![0; cx.matrices.len()];
    }
    cx.matrices.iter().map(|m| m.evaluate(w.k()).rank()).collect()
}

pub(crate) fn os_dims_with(cx: &AomotoComplex, w: &WeightVector) -> Vec<usize> {
    dims_from_ranks(&cx.dims(), &rational_ranks(cx, w))
}

/// `dim H^q(A, a_lambda ^)` for every `q`.
pub fn os_cohomology_dims(arr: &Arrangement, lam: &WeightVector) -> Result<CohomologyReport> {
    if lam.len() != arr.n() {
        return Err(Error::LengthMismatch { expected: arr.n(), got: lam.len() });
    }
    let cx = complex(arr);
    let ranks = rational_ranks(cx, lam);
    Ok(CohomologyReport {
        dims: dims_from_ranks(&cx.dims(), &ranks),
        ring: CoefficientRing::Rational,
        boundary_ranks: ranks,
        invariant_factors: None,
        notes: Vec::new(),
    })
}

pub(crate) fn mod_p_ranks(cx: &AomotoComplex, k: &[BigInt], p: u64) -> Vec<usize> {
    cx.matrices
        .iter()
        .map(|m| {
            let cols = m.cols.len();
            let mut a = m.evaluate_mod(k, p);
            rank_mod_p_u64(&mut a, cols, p)
        })
        .collect()
}

/// Ranks of `H^q(A_N, a_k ^)` over `Z/N`.
///
/// For prime `N` these are dimensions over the field. For composite `N`
/// the rank of `mu^q(k)` is taken to be the number of Smith invariant
/// factors of the integer matrix that are units mod `N`.
pub fn modn_cohomology_ranks(arr: &Arrangement, k: &[BigInt], modulus: u64) -> Result<CohomologyReport> {
    if k.len() != arr.n() {
        return Err(Error::LengthMismatch { expected: arr.n(), got: k.len() });
    }
    if modulus < 2 {
        return Err(Error::BadModulus(modulus));
    }
    let cx = complex(arr);
    let betti = cx.dims();
    if is_prime(modulus) {
        let ranks = mod_p_ranks(cx, k, modulus);
        return Ok(CohomologyReport {
            dims: dims_from_ranks(&betti, &ranks),
            ring: CoefficientRing::ModN(modulus),
            boundary_ranks: ranks,
            invariant_factors: None,
            notes: Vec::new(),
        });
    }
    let n_big = BigInt::from(modulus);
    let mut ranks = Vec::with_capacity(cx.matrices.len());
    let mut factors = Vec::with_capacity(cx.matrices.len());
    for m in &cx.matrices {
        let snf = smith_normal_form(&m.evaluate(k));
        let reduced: Vec<u64> = snf
            .iter()
            .map(|d| d.gcd(&n_big).to_u64().unwrap())
            .filter(|&g| g != modulus)
            .collect();
        ranks.push(reduced.iter().filter(|&&g| g == 1).count());
        factors.push(reduced);
    }
    Ok(CohomologyReport {
        dims: dims_from_ranks(&betti, &ranks),
        ring: CoefficientRing::ModN(modulus),
        boundary_ranks: ranks,
        invariant_factors: Some(factors),
        notes: vec![format!(
            "N = {modulus} is composite: rank over Z_{modulus} counts Smith invariant factors coprime to N"
        )],
    })
}

/// Convolution of Poincare polynomials.
pub fn kunneth_product(a: &CohomologyReport, b: &CohomologyReport) -> Result<CohomologyReport> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch { left: a.ring.to_string(), right: b.ring.to_string() });
    }
    let mut dims = vec![0usize; a.dims.len() + b.dims.len() - 1];
    for (i, x) in a.dims.iter().enumerate() {
        for (j, y) in b.dims.iter().enumerate() {
            dims[i + j] += x * y;
        }
    }
    Ok(CohomologyReport {
        dims,
        ring: a.ring.clone(),
        boundary_ranks: Vec::new(),
        invariant_factors: None,
        notes: vec!["computed by the Kunneth formula".into()],
    })
}

/// Whether the cohomology at `c * lambda` matches that at `lambda`.
pub fn scaling_equivalence_check(arr: &Arrangement, lam: &WeightVector, c: &Rational) -> Result<bool> {
    if c.is_zero() {
        return Err(Error::ZeroScale);
    }
    let a = os_cohomology_dims(arr, lam)?;
    let b = os_cohomology_dims(arr, &lam.scaled(c))?;
    Ok(a.dims == b.dims)
}
