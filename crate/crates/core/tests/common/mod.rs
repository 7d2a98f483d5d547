//! Independent reference computations used by the integration tests.
//!
//! Nothing here calls into the library's matroid, NBC or elimination code.
//! Arrangements are described by floating point complex forms taken from
//! their defining polynomials (fine at test time, the determinants involved
//! are far from the tolerance), and Orlik-Solomon cohomology is computed in
//! the exterior algebra modulo the full OS ideal.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cx(pub f64, pub f64);

impl Cx {
    pub fn re(x: f64) -> Self {
        Cx(x, 0.0)
    }
    fn add(self, o: Cx) -> Cx {
        Cx(self.0 + o.0, self.1 + o.1)
    }
    fn sub(self, o: Cx) -> Cx {
        Cx(self.0 - o.0, self.1 - o.1)
    }
    fn mul(self, o: Cx) -> Cx {
        Cx(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn div(self, o: Cx) -> Cx {
        let d = o.0 * o.0 + o.1 * o.1;
        Cx((self.0 * o.0 + self.1 * o.1) / d, (self.1 * o.0 - self.0 * o.1) / d)
    }
    fn abs(self) -> f64 {
        self.0.hypot(self.1)
    }
}

/// Primitive cube root of unity.
pub fn omega() -> Cx {
    let t = 2.0 * std::f64::consts::PI / 3.0;
    Cx(t.cos(), t.sin())
}

pub fn omega2() -> Cx {
    omega().mul(omega())
}

fn float_rank(mut rows: Vec<Vec<Cx>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).max_by(|&a, &b| rows[a][c].abs().total_cmp(&rows[b][c].abs())) else {
            break;
        };
        if rows[p][c].abs() < 1e-9 {
            continue;
        }
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            let f = rows[r][c].div(rows[rank][c]);
            for j in c..cols {
                let d = f.mul(rows[rank][j]);
                rows[r][j] = rows[r][j].sub(d);
            }
        }
        rank += 1;
    }
    rank
}

/// Affine arrangement given by intersection data only.
pub struct Geometry {
    pub n: usize,
    pub rank: usize,
    /// `Some(codim)` when the hyperplanes in the mask meet
    pub codim: Box<dyn Fn(u64) -> Option<usize>>,
}

/// From homogeneous rows `[a_1, ..., a_l, c]`.
pub fn from_forms(rows: Vec<Vec<Cx>>) -> Geometry {
    let n = rows.len();
    let l = rows[0].len() - 1;
    let rows2 = rows.clone();
    let codim = move |mask: u64| {
        let sel: Vec<Vec<Cx>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| rows2[i].clone()).collect();
        if sel.is_empty() {
            return Some(0);
        }
        let linear: Vec<Vec<Cx>> = sel.iter().map(|r| r[..l].to_vec()).collect();
        let r = float_rank(linear);
        (float_rank(sel) == r).then_some(r)
    };
    Geometry { n, rank: l, codim: Box::new(codim) }
}

pub fn rational_forms(rows: &[&[i64]]) -> Geometry {
    from_forms(rows.iter().map(|r| r.iter().map(|&x| Cx::re(x as f64)).collect()).collect())
}

/// Generic section to dimension `r` of a central arrangement: a flat of
/// codimension `c` survives with the same codimension when `c <= r` and
/// disappears otherwise.
pub fn generic_section(g: Geometry, r: usize) -> Geometry {
    let inner = g.codim;
    Geometry {
        n: g.n,
        rank: r,
        codim: Box::new(move |m| inner(m).filter(|&c| c <= r)),
    }
}

/// Product: hyperplanes of `a` then `b`, codimensions add.
pub fn product(a: Geometry, b: Geometry) -> Geometry {
    let na = a.n;
    let (ca, cb) = (a.codim, b.codim);
    Geometry {
        n: a.n + b.n,
        rank: a.rank + b.rank,
        codim: Box::new(move |m| {
            let lo = m & ((1u64 << na) - 1);
            Some(ca(lo)? + cb(m >> na)?)
        }),
    }
}

pub fn ceva3() -> Geometry {
    let (o, z, one) = (omega(), Cx::re(0.0), Cx::re(1.0));
    let neg = |c: Cx| Cx(-c.0, -c.1);
    let mut rows = Vec::new();
    // (u^3 - v^3) = (u - v)(u - w v)(u - w^2 v) for (u,v) = (x,y), (x,z), (y,z)
    for (u, v) in [(0, 1), (0, 2), (1, 2)] {
        for root in [one, o, omega2()] {
            let mut r = vec![z; 4];
            r[u] = one;
            r[v] = neg(root);
            rows.push(r);
        }
    }
    from_forms(rows)
}

/// `xy(y-x)z(z-x-w^2y)(z+wy)(z-x)(z+w^2x+wy)`
pub fn maclane() -> Geometry {
    let (o, o2) = (omega(), omega2());
    let c = Cx::re;
    let neg = |x: Cx| Cx(-x.0, -x.1);
    from_forms(vec![
        vec![c(1.), c(0.), c(0.), c(0.)],
        vec![c(0.), c(1.), c(0.), c(0.)],
        vec![c(-1.), c(1.), c(0.), c(0.)],
        vec![c(0.), c(0.), c(1.), c(0.)],
        vec![c(-1.), neg(o2), c(1.), c(0.)],
        vec![c(0.), o, c(1.), c(0.)],
        vec![c(-1.), c(0.), c(1.), c(0.)],
        vec![o2, o, c(1.), c(0.)],
    ])
}

/// `x(x+y+z)(x+y-z)y(x-y-z)(x-y+z)z`
pub fn lstrict() -> Geometry {
    rational_forms(&[
        &[1, 0, 0, 0],
        &[1, 1, 1, 0],
        &[1, 1, -1, 0],
        &[0, 1, 0, 0],
        &[1, -1, -1, 0],
        &[1, -1, 1, 0],
        &[0, 0, 1, 0],
    ])
}

pub fn boolean(n: usize) -> Geometry {
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..=n).map(|j| i64::from(i == j)).collect()).collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    rational_forms(&refs)
}

/// Flats as (sorted 0-based hyperplane list, codim, moebius), sorted by
/// codim then lexicographically.
pub fn lattice(g: &Geometry) -> Vec<(Vec<usize>, usize, i64)> {
    let mut flats: BTreeMap<u64, usize> = BTreeMap::new();
    for mask in 0..(1u64 << g.n) {
        let Some(c) = (g.codim)(mask) else { continue };
        let closed = (0..g.n).fold(mask, |acc, j| {
            if (g.codim)(mask | 1 << j) == Some(c) {
                acc | 1 << j
            } else {
                acc
            }
        });
        flats.insert(closed, c);
    }
    let mut list: Vec<(u64, usize)> = flats.into_iter().collect();
    list.sort_by_key(|&(m, c)| (c, bits(m)));
    let mut mu: HashMap<u64, i64> = HashMap::new();
    let mut out = Vec::new();
    for &(m, c) in &list {
        let value = if c == 0 {
            1
        } else {
            -list.iter().filter(|&&(y, _)| y != m && y & m == y).map(|(y, _)| mu[y]).sum::<i64>()
        };
        mu.insert(m, value);
        out.push((bits(m), c, value));
    }
    out
}

pub fn betti(g: &Geometry) -> Vec<usize> {
    let mut b = vec![0usize; g.rank + 1];
    for (_, c, mu) in lattice(g) {
        b[c] += mu.unsigned_abs() as usize;
    }
    b
}

pub fn bits(m: u64) -> Vec<usize> {
    (0..64).filter(|i| m >> i & 1 == 1).collect()
}

fn subsets(n: usize, k: usize) -> Vec<u64> {
    (0..(1u64 << n)).filter(|m| m.count_ones() as usize == k).collect()
}

/// Sign of `e_a ^ e_b` relative to `e_{a|b}`; zero if they overlap.
fn wedge_sign(a: u64, b: u64) -> i64 {
    if a & b != 0 {
        return 0;
    }
    let inversions: u32 = bits(b).iter().map(|&j| (a >> (j + 1)).count_ones()).sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Row echelon basis over `Q` (exact, checked `i128` with primitive rows)
/// or over `Z/p`.
pub struct Echelon {
    modulus: Option<i128>,
    rows: Vec<(usize, Vec<i128>)>,
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Echelon {
    pub fn rational() -> Self {
        Echelon { modulus: None, rows: Vec::new() }
    }

    pub fn modular(p: i128) -> Self {
        Echelon { modulus: Some(p), rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, mut v: Vec<i128>) {
        if let Some(p) = self.modulus {
            v.iter_mut().for_each(|x| *x = x.rem_euclid(p));
        }
        for (pivot, row) in &self.rows {
            let a = v[*pivot];
            if a == 0 {
                continue;
            }
            let b = row[*pivot];
            match self.modulus {
                Some(p) => {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = (*x * b - a * y).rem_euclid(p);
                    }
                }
                None => {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = x.checked_mul(b).and_then(|s| s.checked_sub(a.checked_mul(*y)?)).expect("overflow");
                    }
                    let g = v.iter().fold(0, |g, &x| gcd(g, x));
                    if g > 1 {
                        v.iter_mut().for_each(|x| *x /= g);
                    }
                }
            }
        }
        if let Some(p) = v.iter().position(|&x| x != 0) {
            self.rows.push((p, v));
        }
    }
}

/// Orlik-Solomon cohomology of `(A, a_k ^)` computed as `E / I` with the
/// ideal generated by `e_S` for `S` with empty intersection and `d e_S` for
/// dependent `S`, over `Q` (`p = None`) or `Z/p`.
pub fn os_dims(g: &Geometry, k: &[i64], p: Option<i64>) -> Vec<usize> {
    let n = g.n;
    let l = g.rank;
    let new = || match p {
        Some(p) => Echelon::modular(p as i128),
        None => Echelon::rational(),
    };
    let basis: Vec<Vec<u64>> = (0..=l + 1).map(|d| subsets(n, d)).collect();
    let index: Vec<HashMap<u64, usize>> =
        basis.iter().map(|b| b.iter().enumerate().map(|(i, &m)| (m, i)).collect()).collect();
    let all: Vec<(u64, Option<usize>)> = (0..(1u64 << n)).map(|m| (m, (g.codim)(m))).collect();
    // generators of I in degree d, as vectors in E^d
    let ideal = |d: usize| -> Vec<Vec<i128>> {
        let mut out = Vec::new();
        for &(s, codim) in &all {
            let size = s.count_ones() as usize;
            let gen: Vec<(u64, i64)> = match codim {
                None if size <= d => vec![(s, 1)],
                Some(c) if c < size && size <= d + 1 => bits(s)
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| (s & !(1 << j), if i % 2 == 0 { 1 } else { -1 }))
                    .collect(),
                _ => continue,
            };
            let gdeg = gen[0].0.count_ones() as usize;
            for &t in &basis[d - gdeg] {
                let mut v = vec![0i128; basis[d].len()];
                let mut any = false;
                for &(m, c) in &gen {
                    let sg = wedge_sign(t, m);
                    if sg != 0 {
                        v[index[d][&(t | m)]] += (sg * c) as i128;
                        any = true;
                    }
                }
                if any {
                    out.push(v);
                }
            }
        }
        out
    };
    let mut ideal_rank = vec![0usize; l + 2];
    let mut mu_rank = vec![0usize; l + 1];
    for d in 0..=l + 1 {
        let gens = ideal(d);
        let mut e = new();
        for v in gens {
            e.insert(v);
        }
        ideal_rank[d] = e.rank();
        if d >= 1 {
            let before = e.rank();
            for &t in &basis[d - 1] {
                let mut v = vec![0i128; basis[d].len()];
                for j in 0..n {
                    let sg = wedge_sign(1 << j, t);
                    if sg != 0 {
                        v[index[d][&(t | 1 << j)]] += (sg * k[j]) as i128;
                    }
                }
                e.insert(v);
            }
            mu_rank[d - 1] = e.rank() - before;
        }
    }
    (0..=l)
        .map(|q| {
            let dim = basis[q].len() - ideal_rank[q];
            dim - mu_rank[q] - if q > 0 { mu_rank[q - 1] } else { 0 }
        })
        .collect()
}

/// Dimensions of `A^q` from the quotient `E / I`.
pub fn os_algebra_dims(g: &Geometry) -> Vec<usize> {
    os_dims(g, &vec![0; g.n], None)
}
