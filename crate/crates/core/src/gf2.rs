//! GF(2) vectors over edge ids and incremental Gaussian elimination.
//!
//! An [`EdgeVector`] is a dense bitset over the edge universe of one fixed
//! graph; addition is symmetric difference. [`GaussianBasis`] keeps a fully
//! reduced row set so that span membership and rank queries are cheap and
//! deterministic (pivot = smallest edge id in a row).

use crate::error::{Error, Result};

const BITS: usize = 64;

/// Element of the cycle space: characteristic vector of an edge set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeVector {
    universe: usize,
    words: Vec<u64>,
}

impl EdgeVector {
    pub fn zero(universe: usize) -> Self {
        EdgeVector {
            universe,
            words: vec![0; universe.div_ceil(BITS)],
        }
    }

    pub fn from_edges(universe: usize, edges: &[usize]) -> Self {
        let mut v = Self::zero(universe);
        for &e in edges {
            assert!(e < universe, "edge {e} outside universe {universe}");
            v.words[e / BITS] |= 1 << (e % BITS);
        }
        v
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, edge: usize) -> bool {
        edge < self.universe && self.words[edge / BITS] >> (edge % BITS) & 1 == 1
    }

    pub fn set(&mut self, edge: usize, value: bool) {
        assert!(edge < self.universe);
        if value {
            self.words[edge / BITS] |= 1 << (edge % BITS);
        } else {
            self.words[edge / BITS] &= !(1 << (edge % BITS));
        }
    }

    pub fn toggle(&mut self, edge: usize) {
        assert!(edge < self.universe);
        self.words[edge / BITS] ^= 1 << (edge % BITS);
    }

    pub fn xor_assign(&mut self, other: &EdgeVector) {
        debug_assert_eq!(self.universe, other.universe);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn popcount(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Smallest set edge id, if any. Used as the pivot.
    pub fn min_edge(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * BITS + bit)
            })
        })
    }

    pub fn edges(&self) -> Vec<usize> {
        self.iter_edges().collect()
    }

    /// `a ⊆ b` as edge sets.
    pub fn is_subset_of(&self, other: &EdgeVector) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &EdgeVector) -> EdgeVector {
        debug_assert_eq!(self.universe, other.universe);
        EdgeVector {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union(&self, other: &EdgeVector) -> EdgeVector {
        debug_assert_eq!(self.universe, other.universe);
        EdgeVector {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    fn check_universe(&self, other: &EdgeVector) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch(self.universe, other.universe));
        }
        Ok(())
    }

    /// Canonical search order: by popcount, then by sorted edge list.
    pub fn canonical_cmp(&self, other: &EdgeVector) -> std::cmp::Ordering {
        self.popcount()
            .cmp(&other.popcount())
            .then_with(|| self.edges().cmp(&other.edges()))
    }
}

impl std::fmt::Debug for EdgeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "EdgeVector{:?}", self.edges())
    }
}

/// Symmetric difference of two vectors over the same universe.
pub fn add(a: &EdgeVector, b: &EdgeVector) -> Result<EdgeVector> {
    a.check_universe(b)?;
    let mut out = a.clone();
    out.xor_assign(b);
    Ok(out)
}

/// One insertion event of a [`GaussianBasis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InsertRecord {
    pub inserted: bool,
    /// Pivot edge of the new row when inserted.
    pub pivot: Option<usize>,
}

/// Fully reduced GF(2) row basis with an insertion log.
#[derive(Debug, Clone)]
pub struct GaussianBasis {
    universe: usize,
    rows: Vec<EdgeVector>,
    pivots: Vec<usize>,
    log: Vec<InsertRecord>,
}

impl GaussianBasis {
    pub fn new(universe: usize) -> Self {
        GaussianBasis {
            universe,
            rows: Vec::new(),
            pivots: Vec::new(),
            log: Vec::new(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[EdgeVector] {
        &self.rows
    }

    pub fn log(&self) -> &[InsertRecord] {
        &self.log
    }

    fn reduce(&self, v: &EdgeVector) -> EdgeVector {
        let mut v = v.clone();
        loop {
            let Some(p) = v.min_edge() else { return v };
            match self.pivots.iter().position(|&q| q == p) {
                Some(i) => v.xor_assign(&self.rows[i]),
                None => return v,
            }
        }
    }

    /// Adds `v` to the basis iff it is independent of the current rows.
    pub fn insert_if_independent(&mut self, v: &EdgeVector) -> Result<bool> {
        if v.universe() != self.universe {
            return Err(Error::UniverseMismatch(self.universe, v.universe()));
        }
        let reduced = self.reduce(v);
        let Some(pivot) = reduced.min_edge() else {
            self.log.push(InsertRecord {
                inserted: false,
                pivot: None,
            });
            return Ok(false);
        };
        // Keep the row set fully reduced: clear the new pivot everywhere.
        for row in &mut self.rows {
            if row.contains(pivot) {
                row.xor_assign(&reduced);
            }
        }
        self.rows.push(reduced);
        self.pivots.push(pivot);
        self.log.push(InsertRecord {
            inserted: true,
            pivot: Some(pivot),
        });
        Ok(true)
    }

    pub fn in_span(&self, v: &EdgeVector) -> Result<bool> {
        if v.universe() != self.universe {
            return Err(Error::UniverseMismatch(self.universe, v.universe()));
        }
        Ok(self.reduce(v).is_zero())
    }
}

/// Row basis that also tracks how each row decomposes over the inserted
/// generators, so a target vector can be expressed as a generator subset.
#[derive(Debug, Clone)]
pub struct SpanSolver {
    universe: usize,
    generators: usize,
    rows: Vec<(EdgeVector, Vec<u64>)>,
    pivots: Vec<usize>,
}

impl SpanSolver {
    pub fn new(universe: usize, generator_count: usize) -> Self {
        SpanSolver {
            universe,
            generators: generator_count,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn insert(&mut self, index: usize, v: &EdgeVector) -> bool {
        assert!(index < self.generators);
        assert_eq!(v.universe(), self.universe);
        let mut combo = vec![0u64; self.generators.div_ceil(BITS)];
        combo[index / BITS] |= 1 << (index % BITS);
        let mut v = v.clone();
        loop {
            let Some(p) = v.min_edge() else { return false };
            match self.pivots.iter().position(|&q| q == p) {
                Some(i) => {
                    v.xor_assign(&self.rows[i].0);
                    for (c, r) in combo.iter_mut().zip(&self.rows[i].1) {
                        *c ^= r;
                    }
                }
                None => {
                    self.rows.push((v, combo));
                    self.pivots.push(p);
                    return true;
                }
            }
        }
    }

    /// Expresses `target` over the inserted generators, returning the
    /// generator indices whose sum equals it.
    pub fn express(&self, target: &EdgeVector) -> Option<Vec<usize>> {
        assert_eq!(target.universe(), self.universe);
        let mut v = target.clone();
        let mut combo = vec![0u64; self.generators.div_ceil(BITS)];
        loop {
            let Some(p) = v.min_edge() else {
                let mut out = Vec::new();
                for (i, &w) in combo.iter().enumerate() {
                    let mut w = w;
                    while w != 0 {
                        out.push(i * BITS + w.trailing_zeros() as usize);
                        w &= w - 1;
                    }
                }
                return Some(out);
            };
            let i = self.pivots.iter().position(|&q| q == p)?;
            v.xor_assign(&self.rows[i].0);
            for (c, r) in combo.iter_mut().zip(&self.rows[i].1) {
                *c ^= r;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_is_symmetric_difference() {
        let a = EdgeVector::from_edges(4, &[0, 1]);
        let b = EdgeVector::from_edges(4, &[1, 2]);
        assert_eq!(add(&a, &b).unwrap().edges(), vec![0, 2]);
        assert!(add(&a, &a).unwrap().is_zero());
        let zero = EdgeVector::zero(4);
        assert_eq!(add(&a, &zero).unwrap(), a);
    }

    #[test]
    fn universe_mismatch_is_rejected() {
        let a = EdgeVector::zero(3);
        let b = EdgeVector::zero(4);
        assert!(matches!(add(&a, &b), Err(Error::UniverseMismatch(3, 4))));
        let mut gb = GaussianBasis::new(3);
        assert!(gb.insert_if_independent(&b).is_err());
        assert!(gb.in_span(&b).is_err());
    }

    #[test]
    fn insert_and_span() {
        let mut gb = GaussianBasis::new(5);
        let zero = EdgeVector::zero(5);
        assert!(!gb.insert_if_independent(&zero).unwrap());
        let a = EdgeVector::from_edges(5, &[0, 1]);
        let b = EdgeVector::from_edges(5, &[1, 2]);
        assert!(gb.insert_if_independent(&a).unwrap());
        assert!(gb.insert_if_independent(&b).unwrap());
        assert!(!gb.insert_if_independent(&add(&a, &b).unwrap()).unwrap());
        assert_eq!(gb.rank(), 2);
        assert!(gb.in_span(&zero).unwrap());
        assert!(gb.in_span(&add(&a, &b).unwrap()).unwrap());
        assert!(!gb.in_span(&EdgeVector::from_edges(5, &[4])).unwrap());
    }

    #[test]
    fn solver_expresses_targets() {
        let gens = [
            EdgeVector::from_edges(6, &[0, 1]),
            EdgeVector::from_edges(6, &[1, 2]),
            EdgeVector::from_edges(6, &[3, 4]),
        ];
        let mut solver = SpanSolver::new(6, gens.len());
        for (i, g) in gens.iter().enumerate() {
            assert!(solver.insert(i, g));
        }
        let target = EdgeVector::from_edges(6, &[0, 2, 3, 4]);
        let combo = solver.express(&target).unwrap();
        let mut sum = EdgeVector::zero(6);
        for i in &combo {
            sum.xor_assign(&gens[*i]);
        }
        assert_eq!(sum, target);
        assert_eq!(combo, vec![0, 1, 2]);
        assert!(solver.express(&EdgeVector::from_edges(6, &[5])).is_none());
    }
}
