use serde::Serialize;

use crate::sets::IndexSet;

/// Edge of the arrangement, identified with the closed set of hyperplanes
/// containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flat {
    #[serde(serialize_with = "ser_one_based")]
    pub hyperplanes: IndexSet,
    pub codim: usize,
    pub moebius: i64,
}

fn ser_one_based<S: serde::Serializer>(s: &IndexSet, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(s.iter().map(|i| i + 1))
}

/// Intersection poset (a geometric semilattice for affine arrangements),
/// flats ordered by codimension and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionLattice {
    flats: Vec<Flat>,
    rank: usize,
}

impl IntersectionLattice {
    /// `sets` are closed sets of hyperplanes with their codimensions.
    pub(crate) fn new(mut sets: Vec<(IndexSet, usize)>, rank: usize) -> Self {
        sets.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
        let mut flats: Vec<Flat> = Vec::with_capacity(sets.len());
        for (set, codim) in sets {
            let moebius = if codim == 0 {
                1
            } else {
                -flats
                    .iter()
                    .take_while(|f| f.codim < codim)
                    .filter(|f| f.hyperplanes.is_subset(set))
                    .map(|f| f.moebius)
                    .sum::<i64>()
            };
            flats.push(Flat { hyperplanes: set, codim, moebius });
        }
        IntersectionLattice { flats, rank }
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn of_codim(&self, q: usize) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(move |f| f.codim == q)
    }

    /// `X <= Y` in the reverse-inclusion order of edges, i.e. the
    /// hyperplanes of `X` are among those of `Y`.
    pub fn is_below(&self, x: usize, y: usize) -> bool {
        self.flats[x].hyperplanes.is_subset(self.flats[y].hyperplanes)
    }

    /// Whitney numbers `b_q = sum over codim-q flats of |mu|`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let mut b = vec![0usize; self.rank + 1];
        for f in &self.flats {
            b[f.codim] += f.moebius.unsigned_abs() as usize;
        }
        b
    }
}
