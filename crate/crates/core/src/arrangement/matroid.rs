//! Matroids backed by their lattice of flats.
//!
//! A [`Matroid`] is built once from any rank oracle by iterated closure and
//! afterwards answers rank and closure queries by walking a join table, so
//! derived matroids (truncations, parallel connections) stay cheap to query.

use std::collections::HashMap;

use crate::exactla::Scalar;
use crate::sets::IndexSet;

pub(crate) trait RankOracle: Sync {
    fn size(&self) -> usize;
    fn rank(&self, s: IndexSet) -> usize;
}

#[derive(Clone, Debug)]
pub struct Matroid {
    size: usize,
    flats: Vec<IndexSet>,
    flat_rank: Vec<u8>,
    /// `join[f * size + e]` is the index of `closure(flats[f] + e)`.
    join: Vec<u32>,
    index: HashMap<IndexSet, u32>,
}

impl Matroid {
    pub(crate) fn from_oracle(o: &dyn RankOracle) -> Matroid {
        let size = o.size();
        let ground = IndexSet::full(size);
        let loops = IndexSet::from_indices((0..size).filter(|&e| o.rank(IndexSet::singleton(e)) == 0));
        let mut m = Matroid {
            size,
            flats: vec![loops],
            flat_rank: vec![0],
            join: vec![u32::MAX; size],
            index: HashMap::from([(loops, 0)]),
        };
        let mut idx = 0;
        while idx < m.flats.len() {
            let f = m.flats[idx];
            let r = m.flat_rank[idx] as usize;
            for e in 0..size {
                if m.join[idx * size + e] != u32::MAX {
                    continue;
                }
                if f.contains(e) {
                    m.join[idx * size + e] = idx as u32;
                    continue;
                }
                let s = f.with(e);
                let g = ground
                    .difference(s)
                    .iter()
                    .filter(|&x| o.rank(s.with(x)) == r + 1)
                    .fold(s, IndexSet::with);
                let gi = match m.index.get(&g) {
                    Some(&gi) => gi,
                    None => {
                        let gi = m.flats.len() as u32;
                        m.flats.push(g);
                        m.flat_rank.push((r + 1) as u8);
                        m.join.extend(std::iter::repeat(u32::MAX).take(size));
                        m.index.insert(g, gi);
                        gi
                    }
                };
                for x in g.difference(f).iter() {
                    m.join[idx * size + x] = gi;
                }
            }
            idx += 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ground(&self) -> IndexSet {
        IndexSet::full(self.size)
    }

    fn flat_of(&self, s: IndexSet) -> usize {
        s.iter().fold(0usize, |f, e| self.join[f * self.size + e] as usize)
    }

    pub fn rank(&self, s: IndexSet) -> usize {
        self.flat_rank[self.flat_of(s)] as usize
    }

    pub fn closure(&self, s: IndexSet) -> IndexSet {
        self.flats[self.flat_of(s)]
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground())
    }

    pub fn is_independent(&self, s: IndexSet) -> bool {
        self.rank(s) == s.len()
    }

    pub fn is_flat(&self, s: IndexSet) -> bool {
        self.index.contains_key(&s)
    }

    /// All flats with their ranks, ordered by rank.
    pub fn flats(&self) -> impl Iterator<Item = (IndexSet, usize)> + '_ {
        self.flats.iter().zip(&self.flat_rank).map(|(&f, &r)| (f, r as usize))
    }

    pub fn flat_count(&self) -> usize {
        self.flats.len()
    }

    /// Every circuit, each a minimal dependent set, in order of size then
    /// lexicographically.
    pub fn circuits(&self) -> Vec<IndexSet> {
        let mut out = Vec::new();
        for k in 1..=(self.full_rank() + 1).min(self.size) {
            for s in IndexSet::k_subsets(self.size, k) {
                if self.rank(s) == k - 1 && s.iter().all(|x| self.rank(s.without(x)) == k - 1) {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Whether the restriction to `set` is connected, i.e. any two of its
    /// elements lie on a common circuit inside `set`.
    pub fn is_connected_on(set: IndexSet, circuits: &[IndexSet]) -> bool {
        let Some(first) = set.min() else { return false };
        let mut comp = IndexSet::singleton(first);
        loop {
            let grown = circuits
                .iter()
                .filter(|c| c.is_subset(set) && !c.intersection(comp).is_empty())
                .fold(comp, |acc, c| acc.union(*c));
            if grown == comp {
                return comp == set;
            }
            comp = grown;
        }
    }
}

impl RankOracle for Matroid {
    fn size(&self) -> usize {
        self.size
    }
    fn rank(&self, s: IndexSet) -> usize {
        Matroid::rank(self, s)
    }
}

/// Column matroid of a list of vectors.
pub(crate) struct VectorOracle<'a, F: Scalar> {
    pub vectors: &'a [Vec<F>],
}

impl<F: Scalar> RankOracle for VectorOracle<'_, F> {
    fn size(&self) -> usize {
        self.vectors.len()
    }
    fn rank(&self, s: IndexSet) -> usize {
        let rows: Vec<Vec<F>> = s.iter().map(|i| self.vectors[i].clone()).collect();
        if rows.is_empty() {
            0
        } else {
            F::rank_of(&rows)
        }
    }
}

/// Matroid whose independent sets are the sets of size at most `cap`
/// containing none of the listed circuits.
pub(crate) struct CircuitOracle<'a> {
    pub size: usize,
    pub circuits: &'a [IndexSet],
    pub cap: usize,
}

impl RankOracle for CircuitOracle<'_> {
    fn size(&self) -> usize {
        self.size
    }
    fn rank(&self, s: IndexSet) -> usize {
        let mut basis = IndexSet::EMPTY;
        for e in s.iter() {
            if basis.len() == self.cap {
                break;
            }
            let t = basis.with(e);
            if !self.circuits.iter().any(|c| c.is_subset(t)) {
                basis = t;
            }
        }
        basis.len()
    }
}

pub(crate) struct Truncation<'a> {
    pub inner: &'a Matroid,
    pub rank: usize,
}

impl RankOracle for Truncation<'_> {
    fn size(&self) -> usize {
        self.inner.size
    }
    fn rank(&self, s: IndexSet) -> usize {
        self.inner.rank(s).min(self.rank)
    }
}

/// Adds one coloop after the last element.
pub(crate) struct ColoopExtension<'a> {
    pub inner: &'a Matroid,
}

impl RankOracle for ColoopExtension<'_> {
    fn size(&self) -> usize {
        self.inner.size + 1
    }
    fn rank(&self, s: IndexSet) -> usize {
        let c = self.inner.size;
        self.inner.rank(s.without(c)) + usize::from(s.contains(c))
    }
}

/// Parallel connection of two matroids along their last elements. Ground
/// set: the left non-base elements, then the right ones, then the shared
/// base point.
pub(crate) struct ParallelConnection<'a> {
    pub left: &'a Matroid,
    pub right: &'a Matroid,
}

impl RankOracle for ParallelConnection<'_> {
    fn size(&self) -> usize {
        self.left.size + self.right.size - 1
    }
    fn rank(&self, s: IndexSet) -> usize {
        let n1 = self.left.size - 1;
        let n2 = self.right.size - 1;
        let base = n1 + n2;
        let x1 = IndexSet(s.0 & IndexSet::full(n1).0);
        let x2 = IndexSet((s.0 >> n1) & IndexSet::full(n2).0);
        let with1 = self.left.rank(x1.with(n1));
        let with2 = self.right.rank(x2.with(n2));
        if s.contains(base) {
            with1 + with2 - 1
        } else {
            (self.left.rank(x1) + self.right.rank(x2)).min(with1 + with2 - 1)
        }
    }
}
