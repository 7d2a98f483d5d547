use std::cmp::Ordering;
use std::fmt;

/// Set of hyperplane indices (0-based), at most 64 elements.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct IndexSet(pub u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn singleton(i: usize) -> Self {
        IndexSet(1 << i)
    }

    pub fn full(n: usize) -> Self {
        if n == 64 {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        IndexSet(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        IndexSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        IndexSet(self.0 & !(1 << i))
    }

    pub fn union(self, o: Self) -> Self {
        IndexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        IndexSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        IndexSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Sign of the permutation sorting the concatenation `self ++ other`
    /// (both sorted, disjoint) into increasing order.
    pub fn shuffle_sign(self, other: Self) -> i64 {
        debug_assert!(self.intersection(other).is_empty());
        let inversions: u32 = self
            .iter()
            .map(|a| (other.0 & ((1u64 << a) - 1)).count_ones())
            .sum();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All subsets of `{0..n}` of size `k`, in lexicographic order.
    pub fn k_subsets(n: usize, k: usize) -> Vec<IndexSet> {
        fn rec(start: usize, n: usize, k: usize, cur: IndexSet, out: &mut Vec<IndexSet>) {
            if k == 0 {
                out.push(cur);
                return;
            }
            for i in start..=n.saturating_sub(k) {
                if n - i < k {
                    break;
                }
                rec(i + 1, n, k - 1, cur.with(i), out);
            }
        }
        let mut out = Vec::new();
        if k <= n {
            rec(0, n, k, IndexSet::EMPTY, &mut out);
        }
        out
    }
}

/// Lexicographic order on the increasing index sequences.
impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let e = diff.trailing_zeros();
        let above = |s: u64| e < 63 && s >> (e + 1) != 0;
        if self.contains(e as usize) {
            // other continues with something larger than e, or ends
            if above(other.0) {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if above(self.0) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// 1-based display, e.g. `{1,2,5}`.
impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}
