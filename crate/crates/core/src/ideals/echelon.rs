//! Incremental sparse reduced row-echelon form with combination tracking.

use std::collections::BTreeMap;

use crate::exactnum::GaussianRational;

pub(crate) type SparseVec = BTreeMap<usize, GaussianRational>;

/// `target += c · src`
pub(crate) fn axpy(target: &mut SparseVec, c: &GaussianRational, src: &SparseVec) {
    for (k, v) in src {
        let delta = c * v;
        let entry = target.entry(*k).or_insert_with(GaussianRational::zero);
        *entry += &delta;
        if entry.is_zero() {
            target.remove(k);
        }
    }
}

fn scale(v: &mut SparseVec, c: &GaussianRational) {
    for x in v.values_mut() {
        *x = &*x * c;
    }
}

/// A basis row together with the input combination that produced it.
#[derive(Clone, Debug)]
pub(crate) struct Row {
    pub vector: SparseVec,
    pub combination: SparseVec,
}

/// Rows keyed by pivot column. Every pivot column is zero in all other rows
/// and the pivot entry is 1, so the rows are in reduced row-echelon form.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: BTreeMap<usize, Row>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = (&usize, &Row)> {
        self.rows.iter()
    }

    /// Subtracts basis rows until no pivot column is left in `v`;
    /// `comb` tracks the same operations.
    pub fn reduce(&self, v: &mut SparseVec, comb: &mut SparseVec) {
        let hits: Vec<usize> = v.keys().copied().filter(|k| self.rows.contains_key(k)).collect();
        for p in hits {
            // Other rows vanish in column p, so v[p] is untouched by earlier steps.
            let c = -v.get(&p).cloned().expect("pivot column present");
            let row = &self.rows[&p];
            axpy(v, &c, &row.vector);
            axpy(comb, &c, &row.combination);
        }
    }

    /// Adds `v` (tagged by `comb`). Returns `None` when it enlarged the span,
    /// otherwise the reduced combination, which is a linear relation among inputs.
    pub fn insert(&mut self, mut v: SparseVec, mut comb: SparseVec) -> Option<SparseVec> {
        self.reduce(&mut v, &mut comb);
        let Some((&pivot, lead)) = v.iter().next() else {
            return Some(comb);
        };
        let inv = lead.inv().expect("nonzero lead");
        scale(&mut v, &inv);
        scale(&mut comb, &inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.vector.get(&pivot).cloned() {
                let c = -c;
                axpy(&mut row.vector, &c, &v);
                axpy(&mut row.combination, &c, &comb);
            }
        }
        self.rows.insert(
            pivot,
            Row {
                vector: v,
                combination: comb,
            },
        );
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(x: i64) -> GaussianRational {
        GaussianRational::from_ints(x, 0)
    }

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, v)| (k, g(v))).collect()
    }

    #[test]
    fn detects_dependence_with_relation() {
        let mut e = Echelon::default();
        assert!(e.insert(sv(&[(0, 1), (1, 1)]), sv(&[(0, 1)])).is_none());
        assert!(e.insert(sv(&[(1, 1)]), sv(&[(1, 1)])).is_none());
        let rel = e.insert(sv(&[(0, 2), (1, 5)]), sv(&[(2, 1)])).unwrap();
        // 2·r0 + 3·r1 = input 2
        assert_eq!(rel, sv(&[(0, -2), (1, -3), (2, 1)]));
        let pivots: Vec<usize> = e.rows().map(|(p, _)| *p).collect();
        assert_eq!(pivots, vec![0, 1]);
        let (_, r0) = e.rows().next().unwrap();
        assert_eq!(r0.vector, sv(&[(0, 1)]));
    }
}
