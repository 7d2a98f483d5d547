//! Resonance, non-resonance certificates and two-sided bounds on local
//! system Betti numbers.
//!
//! Edge weights live on the projective closure. The hyperplane at infinity
//! gets weight `-sum(lambda_j)`, so the weights of the closure sum to zero,
//! and the rank `l + 1` flat of the cone (the empty projective
//! intersection) is not an edge.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::{Arrangement, Matroid};
use crate::cohom::{
    modn_cohomology_ranks, os_dims_with, rational_ranks, CoefficientRing, WeightVector,
};
use crate::error::{Error, Result};
use crate::exactla::{is_prime, Rational};
use crate::osalg::complex;
use crate::sets::IndexSet;

pub const INFINITY_CONVENTION: &str =
    "weight of the hyperplane at infinity is -sum(lambda_j); every hyperplane of the closure, H_inf included, counts as a dense edge";

/// Upper limit on the number of translates a bounds search may evaluate.
pub const MAX_TRANSLATES: u64 = 5_000_000;

/// Edge of the projective closure; element `n` of `flat` is infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeWeight {
    #[serde(serialize_with = "ser_edge")]
    pub flat: IndexSet,
    pub codim: usize,
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
}

fn ser_edge<S: serde::Serializer>(s: &IndexSet, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(s.iter().map(|i| i + 1))
}

fn ser_rational<S: serde::Serializer>(r: &Rational, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&r.to_string())
}

/// Dense edges of the projective closure, as cone flats of rank `1..=l`.
pub fn projective_dense_edges(arr: &Arrangement) -> Vec<(IndexSet, usize)> {
    let circuits = arr.cone_circuits();
    let mut out: Vec<(IndexSet, usize)> = arr
        .cone()
        .flats()
        .filter(|&(f, r)| r >= 1 && r <= arr.rank() && Matroid::is_connected_on(f, circuits))
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    out
}

fn check_len(arr: &Arrangement, len: usize) -> Result<()> {
    if len != arr.n() {
        return Err(Error::LengthMismatch { expected: arr.n(), got: len });
    }
    Ok(())
}

/// `lambda_X` for every dense edge of the projective closure.
pub fn edge_weights(arr: &Arrangement, lam: &WeightVector) -> Result<Vec<EdgeWeight>> {
    check_len(arr, lam.len())?;
    let inf = arr.infinity();
    let total = lam.total();
    Ok(projective_dense_edges(arr)
        .into_iter()
        .map(|(flat, codim)| {
            let mut value: Rational = flat.without(inf).iter().map(|j| &lam.lam()[j]).sum();
            if flat.contains(inf) {
                value -= &total;
            }
            EdgeWeight { flat, codim, value }
        })
        .collect())
}

/// No dense edge weight is a nonnegative integer.
pub fn in_w(arr: &Arrangement, lam: &WeightVector) -> Result<bool> {
    Ok(edge_weights(arr, lam)?
        .iter()
        .all(|e| !(e.value.is_integer() && e.value >= Rational::zero())))
}

/// No dense edge weight is a positive integer.
pub fn in_v(arr: &Arrangement, lam: &WeightVector) -> Result<bool> {
    Ok(edge_weights(arr, lam)?
        .iter()
        .all(|e| !(e.value.is_integer() && e.value > Rational::zero())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingCertificate {
    pub holds: bool,
    pub prime: u64,
    /// dense edges whose weight `k_X` vanishes mod `p`
    pub witnesses: Vec<EdgeWeight>,
    /// `(0, ..., 0, |e(M)|)` when the certificate holds
    pub claimed_dims: Option<Vec<usize>>,
    /// ranks of the mod-`p` complex, computed when the certificate holds
    pub computed_dims: Option<Vec<usize>>,
    pub notes: Vec<String>,
}

impl VanishingCertificate {
    /// The certificate holds and the computed ranks agree with it.
    pub fn verified(&self) -> bool {
        self.holds && self.claimed_dims == self.computed_dims
    }
}

/// Every dense edge weight `k_X` is a unit mod `p`; then the mod-`p`
/// complex is acyclic below the top degree.
pub fn yuzvinsky_vanishing(arr: &Arrangement, k: &[BigInt], p: u64) -> Result<VanishingCertificate> {
    check_len(arr, k.len())?;
    if !is_prime(p) {
        return Err(Error::NotPrime { value: p });
    }
    let inf = arr.infinity();
    let total: BigInt = k.iter().sum();
    let pb = BigInt::from(p);
    let witnesses: Vec<EdgeWeight> = projective_dense_edges(arr)
        .into_iter()
        .filter_map(|(flat, codim)| {
            let mut kx: BigInt = flat.without(inf).iter().map(|j| &k[j]).sum();
            if flat.contains(inf) {
                kx -= &total;
            }
            (&kx % &pb).is_zero().then(|| EdgeWeight { flat, codim, value: Rational::from_integer(kx) })
        })
        .collect();
    let holds = witnesses.is_empty();
    let (claimed, computed) = if holds {
        let mut claimed = vec![0; arr.rank() + 1];
        claimed[arr.rank()] = arr.euler_characteristic().unsigned_abs() as usize;
        let computed = modn_cohomology_ranks(arr, k, p)?.dims;
        (Some(claimed), Some(computed))
    } else {
        (None, None)
    };
    Ok(VanishingCertificate {
        holds,
        prime: p,
        witnesses,
        claimed_dims: claimed,
        computed_dims: computed,
        notes: vec![INFINITY_CONVENTION.into()],
    })
}

/// `lambda` lies in the resonance variety `R^q_m`:
/// `rank mu^{q-1}(lambda) + rank mu^q(lambda) <= b_q - m`.
pub fn resonance_membership(arr: &Arrangement, lam: &WeightVector, q: usize, m: usize) -> Result<bool> {
    check_len(arr, lam.len())?;
    if q > arr.rank() {
        return Err(Error::DegreeOutOfRange { degree: q, max: arr.rank() });
    }
    let cx = complex(arr);
    let ranks = rational_ranks(cx, lam);
    let used = ranks[q] + if q > 0 { ranks[q - 1] } else { 0 };
    Ok(used + m <= cx.dims()[q])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBounds {
    pub degree: usize,
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
}

/// Sandwich `lower[q] <= dim H^q(M; L) <= upper[q]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiBoundsReport {
    pub degrees: Vec<DegreeBounds>,
    #[serde(rename = "box")]
    pub box_radius: u32,
    #[serde(rename = "N", serialize_with = "ser_bigint")]
    pub modulus: BigInt,
    pub convention_notes: Vec<String>,
    #[serde(skip)]
    pub translates_searched: u64,
}

fn ser_bigint<S: serde::Serializer>(x: &BigInt, ser: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_u64() {
        Some(v) => ser.serialize_u64(v),
        None => ser.serialize_str(&x.to_string()),
    }
}

impl BettiBoundsReport {
    pub fn lower(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.lower).collect()
    }

    pub fn upper(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.upper).collect()
    }

    /// `Some(v)` when lower and upper bounds agree in degree `q`.
    pub fn certified(&self, q: usize) -> Option<usize> {
        self.degrees.get(q).filter(|d| d.exact).map(|d| d.lower)
    }
}

/// Distinct cohomology dimension vectors of `a_{lambda+m}` over the
/// translates `m` in `{-B..B}^n`, together with the number of translates
/// evaluated. Products are searched factorwise.
pub fn translate_profiles(
    arr: &Arrangement,
    lam: &WeightVector,
    radius: u32,
) -> Result<(BTreeSet<Vec<usize>>, u64)> {
    check_len(arr, lam.len())?;
    if let Some((left, right)) = arr.factors() {
        let (la, lb) = lam.split_at(left.n());
        let (pa, ca) = translate_profiles(left, &la, radius)?;
        let (pb, cb) = translate_profiles(right, &lb, radius)?;
        let mut out = BTreeSet::new();
        for a in &pa {
            for b in &pb {
                let mut dims = vec![0usize; a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        dims[i + j] += x * y;
                    }
                }
                out.insert(dims);
            }
        }
        return Ok((out, ca + cb));
    }
    let n = arr.n();
    let width = 2 * radius as u64 + 1;
    let total = width.checked_pow(n as u32).filter(|&t| t <= MAX_TRANSLATES * width);
    let Some(total) = total else {
        return Err(Error::Parse(format!(
            "translate box of radius {radius} over {n} hyperplanes is too large to search"
        )));
    };
    let cx = complex(arr);
    let zero = vec![0usize; arr.rank() + 1];
    let central = arr.is_central();
    // central arrangements: a_{lambda+m} with nonzero total weight is acyclic
    let target: Option<i64> = if central {
        let s = lam.total();
        if !s.is_integer() {
            return Ok((BTreeSet::from([zero]), 0));
        }
        Some(-s.to_integer().to_i64().unwrap_or(i64::MAX))
    } else {
        None
    };
    let decode = |mut idx: u64, len: usize| -> Vec<i64> {
        (0..len)
            .map(|_| {
                let d = (idx % width) as i64 - radius as i64;
                idx /= width;
                d
            })
            .collect()
    };
    let candidates: Vec<Vec<i64>> = match target {
        Some(t) => {
            let free = total / width;
            if free > MAX_TRANSLATES {
                return Err(Error::Parse("translate box too large to search".into()));
            }
            (0..free)
                .filter_map(|idx| {
                    let mut m = decode(idx, n - 1);
                    let last = t - m.iter().sum::<i64>();
                    (last.abs() <= radius as i64).then(|| {
                        m.push(last);
                        m
                    })
                })
                .collect()
        }
        None => {
            if total > MAX_TRANSLATES {
                return Err(Error::Parse("translate box too large to search".into()));
            }
            (0..total).map(|idx| decode(idx, n)).collect()
        }
    };
    let count = candidates.len() as u64;
    let mut profiles: BTreeSet<Vec<usize>> = candidates
        .par_iter()
        .map(|m| os_dims_with(cx, &lam.translated(m)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    let pruned = match target {
        Some(_) => total > count,
        None => false,
    };
    if pruned || profiles.is_empty() {
        profiles.insert(zero);
    }
    Ok((profiles, count))
}

/// Lower bounds from the best translate in the box, upper bounds from the
/// mod-`N` complex at `k = N lambda`.
pub fn betti_bounds(arr: &Arrangement, lam: &WeightVector, radius: u32) -> Result<BettiBoundsReport> {
    check_len(arr, lam.len())?;
    let betti = arr.betti_numbers();
    let modulus = lam.modulus().clone();
    let mut notes = vec![INFINITY_CONVENTION.to_string()];
    if modulus.is_one() {
        notes.push("integral weights: trivial local system, bounds are the Betti numbers".into());
        return Ok(BettiBoundsReport {
            degrees: betti
                .iter()
                .enumerate()
                .map(|(q, &b)| DegreeBounds { degree: q, lower: b, upper: b, exact: true })
                .collect(),
            box_radius: radius,
            modulus,
            convention_notes: notes,
            translates_searched: 0,
        });
    }
    let n_u64 = modulus
        .to_u64()
        .ok_or_else(|| Error::Parse(format!("denominator {modulus} too large")))?;
    let upper_report = modn_cohomology_ranks(arr, lam.k(), n_u64)?;
    debug_assert_eq!(upper_report.ring, CoefficientRing::ModN(n_u64));
    notes.extend(upper_report.notes.iter().cloned());
    let (profiles, searched) = translate_profiles(arr, lam, radius)?;
    let lower: Vec<usize> = (0..betti.len())
        .map(|q| profiles.iter().map(|p| p[q]).max().unwrap_or(0))
        .collect();
    notes.push(format!("lower bounds are the best found over translates in the box of radius {radius}, not the supremum"));
    if arr.is_central() {
        notes.push("central arrangement: only translates with total weight zero were evaluated".into());
    }
    if arr.factors().is_some() {
        notes.push("product arrangement: translates searched factorwise and combined by Kunneth".into());
    }
    let degrees = lower
        .iter()
        .zip(&upper_report.dims)
        .enumerate()
        .map(|(q, (&lo, &up))| DegreeBounds { degree: q, lower: lo, upper: up, exact: lo == up })
        .collect();
    Ok(BettiBoundsReport {
        degrees,
        box_radius: radius,
        modulus,
        convention_notes: notes,
        translates_searched: searched,
    })
}
