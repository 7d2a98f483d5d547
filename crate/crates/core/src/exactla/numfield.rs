use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::{Rational, Scalar};
use crate::error::{Error, Result};

/// `Q[x]/(p(x))` for a monic integer polynomial `p`.
///
/// Irreducibility of `p` is trusted, not checked. With a reducible modulus
/// the quotient has zero divisors and `inverse` may panic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    /// Coefficients in ascending degree; the last one is 1.
    modulus: Vec<BigInt>,
}

impl NumberField {
    pub fn new(modulus: Vec<BigInt>) -> Result<Arc<Self>> {
        if modulus.len() < 2 {
            return Err(Error::Parse("minimal polynomial must have degree >= 1".into()));
        }
        if !modulus.last().unwrap().is_one() {
            return Err(Error::Parse("minimal polynomial must be monic".into()));
        }
        Ok(Arc::new(NumberField { modulus }))
    }

    /// `Q(omega)` with `omega^2 + omega + 1 = 0`.
    pub fn eisenstein() -> Arc<Self> {
        Self::new(vec![1.into(), 1.into(), 1.into()]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn element(self: &Arc<Self>, coeffs: Vec<Rational>) -> NfElem {
        let mut e = NfElem { coeffs, field: Arc::clone(self) };
        e.reduce();
        e
    }

    pub fn from_rational(self: &Arc<Self>, r: Rational) -> NfElem {
        self.element(vec![r])
    }

    /// The class of `x`.
    pub fn generator(self: &Arc<Self>) -> NfElem {
        self.element(vec![Rational::zero(), Rational::one()])
    }

    pub fn zero(self: &Arc<Self>) -> NfElem {
        self.element(Vec::new())
    }
}

/// Element of a number field, stored as a reduced coefficient vector of
/// length `degree`.
#[derive(Clone)]
pub struct NfElem {
    coeffs: Vec<Rational>,
    field: Arc<NumberField>,
}

impl NfElem {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    fn reduce(&mut self) {
        let d = self.field.degree();
        let m = &self.field.modulus;
        while self.coeffs.len() > d {
            let lead = self.coeffs.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let shift = self.coeffs.len() - d;
            for (i, c) in m.iter().take(d).enumerate() {
                self.coeffs[shift + i] -= &lead * Rational::from_integer(c.clone());
            }
        }
        self.coeffs.resize(d, Rational::zero());
    }

    fn with(&self, coeffs: Vec<Rational>) -> Self {
        let mut e = NfElem { coeffs, field: Arc::clone(&self.field) };
        e.reduce();
        e
    }

    fn same_field(&self, other: &Self) {
        debug_assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "mixing elements of different number fields"
        );
    }
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Division with remainder in `Q[x]`; `b` must be nonzero and trimmed.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    poly_trim(&mut rem);
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / lead;
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] -= &c * bi;
        }
        quot[shift] = c;
        rem.pop();
        poly_trim(&mut rem);
    }
    (quot, rem)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
        out.push(x - y);
    }
    poly_trim(&mut out);
    out
}

impl Scalar for NfElem {
    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn plus(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        NfElem { coeffs, field: Arc::clone(&self.field) }
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        NfElem { coeffs, field: Arc::clone(&self.field) }
    }

    fn times(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        self.with(poly_mul(&self.coeffs, &rhs.coeffs))
    }

    fn negated(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|a| -a).collect();
        NfElem { coeffs, field: Arc::clone(&self.field) }
    }

    /// Extended Euclid against the modulus.
    fn inverse(&self) -> Self {
        assert!(!Scalar::vanishes(self), "inverse of zero number-field element");
        let modulus: Vec<Rational> =
            self.field.modulus.iter().map(|c| Rational::from_integer(c.clone())).collect();
        // invariant: s_i * self == r_i (mod modulus)
        let (mut r0, mut r1) = (modulus, self.coeffs.clone());
        poly_trim(&mut r1);
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        assert!(r0.len() == 1, "modulus is not irreducible: element is a zero divisor");
        let c = r0[0].recip();
        self.with(s0.into_iter().map(|x| x * &c).collect())
    }

    fn zero_like(&self) -> Self {
        self.with(Vec::new())
    }

    fn one_like(&self) -> Self {
        self.with(vec![Rational::one()])
    }

    fn from_int_like(&self, v: i64) -> Self {
        self.with(vec![Rational::from_integer(v.into())])
    }
}
