//! Hyperplane arrangements, realized or abstract.
//!
//! Every arrangement is stored through the matroid of its projective
//! closure (the cone): hyperplanes `0..n` plus the hyperplane at infinity as
//! element `n`. A set `S` of hyperplanes has nonempty intersection exactly
//! when infinity is outside its closure, and then its codimension is the
//! cone rank. Realized arrangements, generic sections (truncations of the
//! cone) and products (parallel connections at infinity) all fit this one
//! representation.

mod lattice;
pub(crate) mod matroid;

use std::sync::{Arc, OnceLock};

pub use lattice::{Flat, IntersectionLattice};
pub use matroid::Matroid;
use matroid::{CircuitOracle, ColoopExtension, ParallelConnection, Truncation, VectorOracle};

use crate::error::{Error, Result};
use crate::exactla::{NfElem, NumberField, Rational, Scalar};
use crate::osalg::AomotoComplex;
use crate::sets::IndexSet;

const MAX_HYPERPLANES: usize = 62;

/// Coefficient rows `[a_1, ..., a_l, c]` for the forms `a . z + c`.
#[derive(Clone, Debug, PartialEq)]
pub enum Realization {
    Rational(Vec<Vec<Rational>>),
    NumberField(Arc<NumberField>, Vec<Vec<NfElem>>),
}

impl Realization {
    pub fn len(&self) -> usize {
        match self {
            Realization::Rational(r) => r.len(),
            Realization::NumberField(_, r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Ambient dimension, i.e. row length minus the constant term.
    pub fn ambient(&self) -> Option<usize> {
        let w = match self {
            Realization::Rational(r) => r.first().map(Vec::len),
            Realization::NumberField(_, r) => r.first().map(Vec::len),
        };
        w.map(|w| w.saturating_sub(1))
    }
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    n: usize,
    ambient: usize,
    labels: Vec<String>,
    realization: Option<Realization>,
    cone: Matroid,
    factors: Option<Arc<(Arrangement, Arrangement)>>,
    cone_circuits: OnceLock<Vec<IndexSet>>,
    lattice: OnceLock<IntersectionLattice>,
    complex: OnceLock<AomotoComplex>,
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("H{i}")).collect()
}

fn cone_vectors<F: Scalar>(rows: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    let width = rows[0].len();
    let mut out = Vec::with_capacity(rows.len() + 1);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != width {
            return Err(Error::Parse(format!(
                "hyperplane {} has {} coefficients, expected {width}",
                i + 1,
                row.len()
            )));
        }
        if row[..width - 1].iter().all(Scalar::vanishes) {
            return Err(Error::ZeroForm { index: i + 1 });
        }
        out.push(row.clone());
    }
    let one = rows[0][0].one_like();
    let mut inf = vec![one.zero_like(); width];
    inf[width - 1] = one;
    out.push(inf);
    Ok(out)
}

/// Indices of a maximal independent set of columns.
fn pivot_columns<F: Scalar>(rows: &[Vec<F>], cols: usize) -> Vec<usize> {
    let mut a: Vec<Vec<F>> = rows.iter().map(|r| r[..cols].to_vec()).collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].vanishes()) else { continue };
        a.swap(rank, p);
        let inv = a[rank][col].inverse();
        for r in rank + 1..a.len() {
            let f = a[r][col].times(&inv);
            for j in col..cols {
                let d = f.times(&a[rank][j]);
                a[r][j] = a[r][j].minus(&d);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

fn essentialize_rows<F: Scalar>(rows: &[Vec<F>]) -> Vec<Vec<F>> {
    let l = rows[0].len() - 1;
    let keep = pivot_columns(rows, l);
    rows.iter()
        .map(|r| keep.iter().map(|&j| r[j].clone()).chain(std::iter::once(r[l].clone())).collect())
        .collect()
}

impl Arrangement {
    fn from_cone(
        n: usize,
        ambient: usize,
        cone: Matroid,
        realization: Option<Realization>,
        factors: Option<Arc<(Arrangement, Arrangement)>>,
    ) -> Result<Self> {
        let arr = Arrangement {
            n,
            ambient,
            labels: default_labels(n),
            realization,
            cone,
            factors,
            cone_circuits: OnceLock::new(),
            lattice: OnceLock::new(),
            complex: OnceLock::new(),
        };
        arr.check_simple()?;
        let rank = arr.cone.full_rank() - 1;
        if rank != ambient {
            return Err(Error::NotEssential { rank, ambient });
        }
        Ok(arr)
    }

    fn check_simple(&self) -> Result<()> {
        for i in 0..self.n {
            if self.cone.rank(IndexSet::singleton(i)) == 0 {
                return Err(Error::ZeroForm { index: i + 1 });
            }
            // a hyperplane parallel to infinity in the cone is a form with zero linear part
            if self.cone.rank(IndexSet::from_indices([i, self.n])) < 2 {
                return Err(Error::ZeroForm { index: i + 1 });
            }
            for j in i + 1..self.n {
                if self.cone.rank(IndexSet::from_indices([i, j])) < 2 {
                    return Err(Error::InvalidMatroid(format!(
                        "hyperplanes {} and {} coincide",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Arrangement of the hyperplanes `a . z + c = 0`.
    pub fn from_realization(real: Realization) -> Result<Self> {
        let n = real.len();
        if n == 0 {
            return Err(Error::Parse("arrangement has no hyperplanes".into()));
        }
        if n > MAX_HYPERPLANES {
            return Err(Error::TooLarge(n));
        }
        let ambient = real.ambient().unwrap_or(0);
        if ambient == 0 {
            return Err(Error::Parse("hyperplane rows need at least one coefficient and a constant".into()));
        }
        let cone = match &real {
            Realization::Rational(rows) => {
                let v = cone_vectors(rows)?;
                Matroid::from_oracle(&VectorOracle { vectors: &v })
            }
            Realization::NumberField(_, rows) => {
                let v = cone_vectors(rows)?;
                Matroid::from_oracle(&VectorOracle { vectors: &v })
            }
        };
        Self::from_cone(n, ambient, cone, Some(real), None)
    }

    pub fn from_rational_forms(rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::from_realization(Realization::Rational(rows))
    }

    pub fn from_number_field_forms(field: Arc<NumberField>, rows: Vec<Vec<NfElem>>) -> Result<Self> {
        Self::from_realization(Realization::NumberField(field, rows))
    }

    /// Abstract arrangement from matroid circuits (0-based indices).
    ///
    /// Independent sets are the sets of size at most `rank` containing no
    /// listed circuit; without `rank` the list must contain every circuit.
    /// With `infinity`, the matroid is that of a projective closure and
    /// the given element plays the hyperplane at infinity; otherwise the
    /// arrangement is central.
    pub fn from_circuits(
        size: usize,
        circuits: &[Vec<usize>],
        rank: Option<usize>,
        infinity: Option<usize>,
    ) -> Result<Self> {
        if size == 0 || size > MAX_HYPERPLANES + 1 {
            return Err(Error::TooLarge(size));
        }
        let mut sets = Vec::with_capacity(circuits.len());
        for c in circuits {
            if let Some(&bad) = c.iter().find(|&&i| i >= size) {
                return Err(Error::InvalidMatroid(format!("circuit element {} out of range", bad + 1)));
            }
            sets.push(IndexSet::from_indices(c.iter().copied()));
        }
        for (i, a) in sets.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::InvalidMatroid("empty circuit".into()));
            }
            if sets.iter().enumerate().any(|(j, b)| i != j && b.is_subset(*a)) {
                return Err(Error::InvalidMatroid(format!("circuit {a} is not minimal")));
            }
        }
        // move the infinity element to the end
        if let Some(inf) = infinity {
            if inf >= size {
                return Err(Error::InvalidMatroid("infinity index out of range".into()));
            }
            let perm = |i: usize| match i.cmp(&inf) {
                std::cmp::Ordering::Less => i,
                std::cmp::Ordering::Equal => size - 1,
                std::cmp::Ordering::Greater => i - 1,
            };
            for s in sets.iter_mut() {
                *s = IndexSet::from_indices(s.iter().map(perm));
            }
        }
        let cap = rank.unwrap_or(size);
        let oracle = CircuitOracle { size, circuits: &sets, cap };
        validate_circuit_family(&oracle, &sets)?;
        let base = Matroid::from_oracle(&oracle);
        let (n, cone) = match infinity {
            Some(_) => (size - 1, base),
            None => (size, Matroid::from_oracle(&ColoopExtension { inner: &base })),
        };
        let ambient = cone.full_rank() - 1;
        Self::from_cone(n, ambient, cone, None, None)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Quotient of a realized, non-essential arrangement by its center.
    pub fn essentialize(real: Realization) -> Result<Self> {
        let real = match real {
            Realization::Rational(rows) if !rows.is_empty() => {
                Realization::Rational(essentialize_rows(&rows))
            }
            Realization::NumberField(k, rows) if !rows.is_empty() => {
                let rows = essentialize_rows(&rows);
                Realization::NumberField(k, rows)
            }
            other => other,
        };
        Self::from_realization(real)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Ambient rank `l`.
    pub fn rank(&self) -> usize {
        self.ambient
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn realization(&self) -> Option<&Realization> {
        self.realization.as_ref()
    }

    pub fn factors(&self) -> Option<(&Arrangement, &Arrangement)> {
        self.factors.as_deref().map(|(a, b)| (a, b))
    }

    /// Matroid of the projective closure; element `n` is infinity.
    pub fn cone(&self) -> &Matroid {
        &self.cone
    }

    pub fn infinity(&self) -> usize {
        self.n
    }

    pub fn hyperplanes(&self) -> IndexSet {
        IndexSet::full(self.n)
    }

    /// All hyperplanes share a point (after translation the arrangement
    /// is central).
    pub fn is_central(&self) -> bool {
        self.intersects(self.hyperplanes())
    }

    /// `S` has nonempty intersection.
    pub fn intersects(&self, s: IndexSet) -> bool {
        !self.cone.closure(s).contains(self.n)
    }

    /// Codimension of the intersection of `S`, which must be nonempty.
    pub fn codim(&self, s: IndexSet) -> usize {
        self.cone.rank(s)
    }

    /// Nonempty intersection of codimension `|S|`.
    pub fn is_independent(&self, s: IndexSet) -> bool {
        self.intersects(s) && self.cone.is_independent(s)
    }

    pub(crate) fn cone_circuits(&self) -> &[IndexSet] {
        self.cone_circuits.get_or_init(|| self.cone.circuits())
    }

    pub(crate) fn complex_cell(&self) -> &OnceLock<AomotoComplex> {
        &self.complex
    }

    pub fn intersection_lattice(&self) -> &IntersectionLattice {
        self.lattice.get_or_init(|| {
            let inf = self.n;
            let sets = self
                .cone
                .flats()
                .filter(|(f, _)| !f.contains(inf))
                .collect::<Vec<_>>();
            IntersectionLattice::new(sets, self.ambient)
        })
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.intersection_lattice().betti_numbers()
    }

    /// `e(M) = sum (-1)^q b_q`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti_numbers()
            .iter()
            .enumerate()
            .map(|(q, &b)| if q % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// The subarrangement through the edge is irreducible.
    pub fn is_dense(&self, flat: IndexSet) -> bool {
        Matroid::is_connected_on(flat, self.cone_circuits())
    }

    /// Dense edges of codimension at least one, in lattice order.
    pub fn dense_edges(&self) -> Vec<Flat> {
        self.intersection_lattice()
            .flats()
            .iter()
            .filter(|f| f.codim >= 1 && self.is_dense(f.hyperplanes))
            .cloned()
            .collect()
    }

    /// Central arrangement in rank `l + 1` obtained by homogenizing and
    /// adding the hyperplane at infinity, returned with its index.
    pub fn projective_closure(&self) -> (Arrangement, usize) {
        let n = self.n;
        let realization = self.realization.as_ref().map(|r| match r {
            Realization::Rational(rows) => Realization::Rational(homogenize(rows)),
            Realization::NumberField(k, rows) => Realization::NumberField(k.clone(), homogenize(rows)),
        });
        let cone = Matroid::from_oracle(&ColoopExtension { inner: &self.cone });
        let mut labels = self.labels.clone();
        labels.push("H_inf".into());
        let mut closure = Arrangement::from_cone(n + 1, self.ambient + 1, cone, realization, None)
            .expect("projective closure of an essential arrangement is essential");
        closure.labels = labels;
        (closure, n)
    }

    /// Generic section by an affine subspace of dimension `target`: the
    /// cone matroid truncated to rank `target + 1`.
    pub fn generic_section(&self, target: usize) -> Result<Arrangement> {
        if target >= self.ambient || target == 0 {
            return Err(Error::SectionRank { target, rank: self.ambient });
        }
        let cone = Matroid::from_oracle(&Truncation { inner: &self.cone, rank: target + 1 });
        let mut a = Self::from_cone(self.n, target, cone, None, None)?;
        a.labels = self.labels.clone();
        Ok(a)
    }

    /// Product arrangement in the direct sum of the ambient spaces.
    pub fn product(left: &Arrangement, right: &Arrangement) -> Result<Arrangement> {
        let n = left.n + right.n;
        if n > MAX_HYPERPLANES {
            return Err(Error::TooLarge(n));
        }
        let cone = Matroid::from_oracle(&ParallelConnection { left: &left.cone, right: &right.cone });
        let realization = match (&left.realization, &right.realization) {
            (Some(Realization::Rational(a)), Some(Realization::Rational(b))) => {
                Some(Realization::Rational(block_rows(a, b)))
            }
            (Some(Realization::NumberField(k, a)), Some(Realization::NumberField(k2, b))) if k == k2 => {
                Some(Realization::NumberField(k.clone(), block_rows(a, b)))
            }
            _ => None,
        };
        let factors = Arc::new((left.clone(), right.clone()));
        let mut a = Self::from_cone(n, left.ambient + right.ambient, cone, realization, Some(factors))?;
        a.labels = left.labels.iter().chain(&right.labels).cloned().collect();
        Ok(a)
    }
}

fn homogenize<F: Scalar>(rows: &[Vec<F>]) -> Vec<Vec<F>> {
    let zero = rows[0][0].zero_like();
    let one = zero.one_like();
    let mut out: Vec<Vec<F>> = rows
        .iter()
        .map(|r| r.iter().cloned().chain(std::iter::once(zero.clone())).collect())
        .collect();
    let w = rows[0].len();
    let mut inf = vec![zero.clone(); w + 1];
    inf[w - 1] = one;
    out.push(inf);
    out
}

fn block_rows<F: Scalar>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let zero = a[0][0].zero_like();
    let (la, lb) = (a[0].len() - 1, b[0].len() - 1);
    let mut out = Vec::with_capacity(a.len() + b.len());
    for r in a {
        let mut row = r[..la].to_vec();
        row.extend(std::iter::repeat(zero.clone()).take(lb));
        row.push(r[la].clone());
        out.push(row);
    }
    for r in b {
        let mut row = vec![zero.clone(); la];
        row.extend_from_slice(&r[..lb]);
        row.push(r[lb].clone());
        out.push(row);
    }
    out
}

/// Checks that the family defined by the listed circuits and the rank cap
/// is a matroid: every listed circuit is a circuit of the result, and the
/// circuits satisfy the elimination axiom.
///
/// Dependent sets of size at most `cap` contain a listed circuit, so the
/// circuits of that size are exactly the listed ones; every other circuit
/// has size `cap + 1`. Eliminating against such a circuit leaves at least
/// `cap + 1` elements, which is dependent, so only pairs of listed circuits
/// need checking.
fn validate_circuit_family(o: &CircuitOracle<'_>, listed: &[IndexSet]) -> Result<()> {
    use matroid::RankOracle;
    let indep = |s: IndexSet| o.rank(s) == s.len();
    for c in listed {
        if indep(*c) || c.iter().any(|x| !indep(c.without(x))) {
            return Err(Error::InvalidMatroid(format!("{c} is not a circuit under rank {}", o.cap)));
        }
    }
    for (i, a) in listed.iter().enumerate() {
        for b in &listed[i + 1..] {
            for e in a.intersection(*b).iter() {
                let u = a.union(*b).without(e);
                if indep(u) {
                    return Err(Error::InvalidMatroid(format!(
                        "circuits {a} and {b} violate circuit elimination"
                    )));
                }
            }
        }
    }
    Ok(())
}
