//! Orlik-Solomon algebra on the no-broken-circuit basis and the boundary
//! matrices of the Aomoto complex.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};

use num_bigint::BigInt;

use crate::arrangement::Arrangement;
use crate::exactla::IntMatrix;
use crate::sets::IndexSet;

/// Minimal dependent set of hyperplanes with nonempty intersection.
pub type Circuit = IndexSet;

/// Basis monomial `e_S` of the Orlik-Solomon algebra.
pub type NbcMonomial = IndexSet;

/// Integer combination of basis monomials, sorted by monomial.
pub type OsElement = Vec<(NbcMonomial, i64)>;

/// Circuits of the arrangement: cone circuits avoiding infinity whose
/// hyperplanes meet. Ordered by size, then lexicographically.
pub fn circuits(arr: &Arrangement) -> Vec<Circuit> {
    let inf = arr.infinity();
    arr.cone_circuits()
        .iter()
        .copied()
        .filter(|c| !c.contains(inf) && arr.intersects(*c))
        .collect()
}

fn broken(c: Circuit) -> IndexSet {
    c.without(c.min().unwrap())
}

/// Degree-`q` NBC monomials in lexicographic order.
pub fn nbc_basis(arr: &Arrangement, q: usize) -> Vec<NbcMonomial> {
    complex(arr).nbc.get(q).cloned().unwrap_or_default()
}

fn build_nbc(arr: &Arrangement, circuits: &[Circuit]) -> Vec<Vec<NbcMonomial>> {
    let broken: Vec<IndexSet> = circuits.iter().map(|&c| broken(c)).collect();
    let mut levels = vec![vec![IndexSet::EMPTY]];
    for _ in 0..arr.rank() {
        let mut next = Vec::new();
        for &s in levels.last().unwrap() {
            let start = s.max().map_or(0, |m| m + 1);
            for j in start..arr.n() {
                let t = s.with(j);
                if arr.is_independent(t) && !broken.iter().any(|b| b.is_subset(t)) {
                    next.push(t);
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// Rewrites monomials into the NBC basis using the boundary relations of
/// circuits, always eliminating the first broken circuit (lexicographic
/// order of broken circuits) contained in the monomial.
pub struct Reducer<'a> {
    arr: &'a Arrangement,
    /// circuits sorted by their broken circuit
    circuits: Vec<Circuit>,
    memo: HashMap<IndexSet, OsElement>,
}

impl<'a> Reducer<'a> {
    pub fn new(arr: &'a Arrangement) -> Self {
        let mut circuits = circuits(arr);
        circuits.sort_by_key(|&c| broken(c));
        Reducer { arr, circuits, memo: HashMap::new() }
    }

    /// Class of `e_S` (indices in increasing order) in the NBC basis.
    pub fn reduce(&mut self, s: IndexSet) -> OsElement {
        if let Some(v) = self.memo.get(&s) {
            return v.clone();
        }
        let out = self.reduce_uncached(s);
        self.memo.insert(s, out.clone());
        out
    }

    fn reduce_uncached(&mut self, s: IndexSet) -> OsElement {
        if s.len() > self.arr.rank() || !self.arr.is_independent(s) {
            return Vec::new();
        }
        let Some(&circuit) = self.circuits.iter().find(|&&c| broken(c).is_subset(s)) else {
            return vec![(s, 1)];
        };
        let bc = broken(circuit);
        let rest = s.difference(bc);
        let eps = bc.shuffle_sign(rest);
        // 0 = sum_i (-1)^i e_{C - c_i}, so e_{C - c_0} = -sum_{i>=1} (-1)^i e_{C - c_i}
        let mut acc: BTreeMap<IndexSet, i64> = BTreeMap::new();
        for (i, ci) in circuit.iter().enumerate().skip(1) {
            let coeff = if i % 2 == 0 { -1 } else { 1 };
            let t = circuit.without(ci);
            let sign = eps * coeff * t.shuffle_sign(rest);
            for (m, c) in self.reduce(t.union(rest)) {
                *acc.entry(m).or_insert(0) += sign * c;
            }
        }
        acc.into_iter().filter(|&(_, c)| c != 0).collect()
    }
}

/// Free function form of [`Reducer::reduce`].
pub fn reduce_to_nbc(arr: &Arrangement, s: IndexSet) -> OsElement {
    Reducer::new(arr).reduce(s)
}

/// Integral linear form `sum c_j y_j`, sorted by variable, no zero terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearForm(pub Vec<(usize, i64)>);

impl LinearForm {
    pub fn eval_int(&self, k: &[BigInt]) -> BigInt {
        self.0.iter().map(|&(j, c)| &k[j] * c).sum()
    }

    pub fn eval_i64(&self, k: &[i64]) -> i64 {
        self.0.iter().map(|&(j, c)| k[j] * c).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// `c*y_j` terms joined by ` + `, 1-based variables, `0` when empty.
impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.0.iter().map(|&(j, c)| format!("{c}*y{}", j + 1)).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Matrix of `a_y ^ : A^q -> A^{q+1}`; rows are degree-`q` monomials,
/// columns degree-`q+1` monomials. Stored sparsely by row.
#[derive(Clone, Debug)]
pub struct AomotoMatrix {
    pub degree: usize,
    pub rows: Vec<NbcMonomial>,
    pub cols: Vec<NbcMonomial>,
    pub entries: Vec<Vec<(usize, LinearForm)>>,
}

impl AomotoMatrix {
    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    pub fn form(&self, r: usize, c: usize) -> LinearForm {
        self.entries[r]
            .iter()
            .find(|(j, _)| *j == c)
            .map(|(_, f)| f.clone())
            .unwrap_or_default()
    }

    pub fn evaluate(&self, k: &[BigInt]) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows.len(), self.cols.len());
        for (r, row) in self.entries.iter().enumerate() {
            for (c, f) in row {
                m.set(r, *c, f.eval_int(k));
            }
        }
        m
    }

    /// Residues mod `p` of the evaluation at `k`, row-major.
    pub(crate) fn evaluate_mod(&self, k: &[BigInt], p: u64) -> Vec<Vec<u64>> {
        let kp: Vec<i64> = k.iter().map(|x| crate::exactla::reduce_mod(x, p) as i64).collect();
        let mut m = vec![vec![0u64; self.cols.len()]; self.rows.len()];
        for (r, row) in self.entries.iter().enumerate() {
            for (c, f) in row {
                m[r][*c] = f.eval_i64(&kp).rem_euclid(p as i64) as u64;
            }
        }
        m
    }

    /// Text dump: header comments, then one row per line with entries
    /// separated by `; `.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let (r, c) = self.shape();
        let _ = writeln!(s, "# mu^{}: {r} x {c}", self.degree);
        let _ = writeln!(s, "# rows: {}", join_monomials(&self.rows));
        let _ = writeln!(s, "# cols: {}", join_monomials(&self.cols));
        for i in 0..r {
            let line: Vec<String> = (0..c).map(|j| self.form(i, j).to_string()).collect();
            let _ = writeln!(s, "{}", line.join("; "));
        }
        s
    }
}

fn join_monomials(ms: &[NbcMonomial]) -> String {
    ms.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// NBC bases in degrees `0..=l` and the Aomoto boundary matrices
/// `mu^0, ..., mu^l` (the last one has no columns).
#[derive(Clone, Debug)]
pub struct AomotoComplex {
    pub n: usize,
    pub nbc: Vec<Vec<NbcMonomial>>,
    pub matrices: Vec<AomotoMatrix>,
}

impl AomotoComplex {
    pub fn build(arr: &Arrangement) -> Self {
        let mut reducer = Reducer::new(arr);
        let nbc = build_nbc(arr, &reducer.circuits);
        let l = arr.rank();
        let mut matrices = Vec::with_capacity(l + 1);
        for q in 0..=l {
            let rows = nbc[q].clone();
            let cols = if q < l { nbc[q + 1].clone() } else { Vec::new() };
            let col_of: HashMap<IndexSet, usize> = cols.iter().enumerate().map(|(i, &m)| (m, i)).collect();
            let mut entries = Vec::with_capacity(rows.len());
            for &s in &rows {
                let mut row: BTreeMap<usize, BTreeMap<usize, i64>> = BTreeMap::new();
                if q < l {
                    for j in (0..arr.n()).filter(|&j| !s.contains(j)) {
                        let sign = IndexSet::singleton(j).shuffle_sign(s);
                        for (t, c) in reducer.reduce(s.with(j)) {
                            *row.entry(col_of[&t]).or_default().entry(j).or_insert(0) += sign * c;
                        }
                    }
                }
                entries.push(
                    row.into_iter()
                        .map(|(c, f)| (c, LinearForm(f.into_iter().filter(|&(_, v)| v != 0).collect())))
                        .filter(|(_, f)| !f.is_zero())
                        .collect(),
                );
            }
            matrices.push(AomotoMatrix { degree: q, rows, cols, entries });
        }
        AomotoComplex { n: arr.n(), nbc, matrices }
    }

    pub fn rank(&self) -> usize {
        self.matrices.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.nbc.iter().map(Vec::len).collect()
    }

    /// Checks `mu^q(y) mu^{q+1}(y) = 0` as matrices of quadratic forms.
    pub fn squares_to_zero(&self) -> bool {
        self.matrices.windows(2).all(|w| {
            let (a, b) = (&w[0], &w[1]);
            a.entries.iter().all(|row| {
                let mut acc: HashMap<(usize, usize, usize), i64> = HashMap::new();
                for (mid, f) in row {
                    for (col, g) in &b.entries[*mid] {
                        for &(i, x) in &f.0 {
                            for &(j, y) in &g.0 {
                                *acc.entry((*col, i.min(j), i.max(j))).or_insert(0) += x * y;
                            }
                        }
                    }
                }
                acc.values().all(|&v| v == 0)
            })
        })
    }
}

/// Aomoto complex of the arrangement, built once and cached.
pub fn complex(arr: &Arrangement) -> &AomotoComplex {
    arr.complex_cell().get_or_init(|| AomotoComplex::build(arr))
}

/// `mu^q(y)` for `q = 0..=l`.
pub fn aomoto_matrix(arr: &Arrangement, q: usize) -> Option<&AomotoMatrix> {
    complex(arr).matrices.get(q)
}
