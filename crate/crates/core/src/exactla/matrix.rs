use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::Scalar;
use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    /// `cols` is needed to describe matrices without rows.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged integer matrix");
            data.extend(row);
        }
        IntMatrix { rows: nrows, cols, data }
    }

    pub fn from_i64(rows: &[Vec<i64>], cols: usize) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
            cols,
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Rank over Q by fraction-free elimination.
    pub fn rank(&self) -> usize {
        integer_rank(self)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dense matrix over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldMatrix<F: Scalar> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<F>>,
}

impl<F: Scalar> FieldMatrix<F> {
    pub fn new(data: Vec<Vec<F>>, cols: usize) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged field matrix");
        FieldMatrix { rows: data.len(), cols, data }
    }
}

pub fn field_rank<F: Scalar>(m: &FieldMatrix<F>) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    F::rank_of(&m.data)
}

/// Rank over Q of an integer matrix, fraction-free.
///
/// Rows are eliminated pairwise with integer multipliers and then divided
/// by their content, so only rows meeting the pivot column are touched.
/// Boundary matrices are sparse and this beats Bareiss, which rescales
/// every remaining row at every step.
pub fn integer_rank(m: &IntMatrix) -> usize {
    // work on the orientation with fewer rows
    let work = if m.rows > m.cols { m.transpose() } else { m.clone() };
    let cols = work.cols;
    let mut a: Vec<Vec<BigInt>> = work.data.chunks(cols.max(1)).map(<[BigInt]>::to_vec).collect();
    a.truncate(work.rows);
    a.retain(|r| r.iter().any(|x| !x.is_zero()));
    a.iter_mut().for_each(|r| make_primitive(r));
    let rows = a.len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| (a[r][col].bits(), a[r].iter().filter(|x| !x.is_zero()).count()))
        else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let support: Vec<usize> = (col + 1..cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = row[col].gcd(&pivot_row[col]);
            let f = &row[col] / &g;
            let s = &pivot_row[col] / &g;
            row[col] = BigInt::zero();
            if !s.is_one() {
                for x in row[col + 1..].iter_mut().filter(|x| !x.is_zero()) {
                    *x *= &s;
                }
            }
            for &j in &support {
                row[j] -= &f * &pivot_row[j];
            }
            make_primitive(row);
        }
        rank += 1;
    }
    rank
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter().filter(|x| !x.is_zero()) {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g > BigInt::one() {
        for x in row.iter_mut().filter(|x| !x.is_zero()) {
            *x /= &g;
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn reduce_mod(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// Rank over the prime field `Z/p`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime { value: p });
    }
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<u64>> =
        (0..rows).map(|r| m.row(r).iter().map(|x| reduce_mod(x, p)).collect()).collect();
    Ok(rank_mod_p_u64(&mut a, cols, p))
}

pub(crate) fn rank_mod_p_u64(a: &mut [Vec<u64>], cols: usize, p: u64) -> usize {
    let rows = a.len();
    let mulmod = |x: u64, y: u64| (x as u128 * y as u128 % p as u128) as u64;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = super::field::ModP::new(a[rank][col] as i64, p).inverse().value();
        for j in col..cols {
            a[rank][j] = mulmod(a[rank][j], inv);
        }
        let (top, rest) = a.split_at_mut(rank + 1);
        let pr = &top[rank];
        for row in rest.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for j in col..cols {
                if pr[j] != 0 {
                    row[j] = (row[j] + p - mulmod(f, pr[j])) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Nonzero invariant factors `d_1 | d_2 | ... | d_r`, all positive; `r` is
/// the rank over Q.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|r| m.row(r).to_vec()).collect();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero()
                    && best.is_none_or(|(bi, bj): (usize, usize)| x.abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                for j in t..cols {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                for row in a.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // move the smallest remaining entry of row/column t to the corner
            let mut best = (t, t);
            for i in t + 1..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            } else if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = &diag[i] / &g * &diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}
