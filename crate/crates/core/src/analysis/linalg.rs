//! Incremental exact linear algebra over the rationals.
//!
//! Vectors are sparse maps from an ordered key type to nonzero scalars.
//! Insertion keeps a column-echelon basis with normalized pivots and, for
//! every dependent insertion, returns the exact linear combination of all
//! previously inserted vectors that witnesses the dependency. That witness
//! is what the center computation uses as a kernel element.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::freealg::Scalar;

pub(crate) enum Insertion {
    Independent,
    /// Coefficients over the inserted vectors (in insertion order, current
    /// one last with coefficient 1) summing to the zero vector.
    Dependent(Vec<Scalar>),
}

pub(crate) struct LinearSpan<K> {
    // pivot key -> index into columns/combos
    pivots: BTreeMap<K, usize>,
    columns: Vec<BTreeMap<K, Scalar>>,
    combos: Vec<Vec<Scalar>>,
    inserted: usize,
}

impl<K: Ord + Clone> LinearSpan<K> {
    pub fn new() -> Self {
        LinearSpan {
            pivots: BTreeMap::new(),
            columns: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    pub fn insert(&mut self, mut vec: BTreeMap<K, Scalar>) -> Insertion {
        vec.retain(|_, c| !c.is_zero());
        let mut combo = vec![Scalar::zero(); self.inserted + 1];
        combo[self.inserted] = Scalar::from_integer(1.into());
        self.inserted += 1;
        loop {
            let Some(lead) = vec.keys().next_back().cloned() else {
                return Insertion::Dependent(combo);
            };
            match self.pivots.get(&lead) {
                Some(&idx) => {
                    let factor = vec[&lead].clone();
                    for (k, c) in &self.columns[idx] {
                        let entry = vec.entry(k.clone()).or_insert_with(Scalar::zero);
                        *entry -= &factor * c;
                        if entry.is_zero() {
                            vec.remove(k);
                        }
                    }
                    for (dst, src) in combo.iter_mut().zip(&self.combos[idx]) {
                        *dst -= &factor * src;
                    }
                }
                None => {
                    let factor = vec[&lead].clone();
                    for c in vec.values_mut() {
                        *c /= &factor;
                    }
                    for c in combo.iter_mut() {
                        *c /= &factor;
                    }
                    self.pivots.insert(lead, self.columns.len());
                    self.columns.push(vec);
                    self.combos.push(combo);
                    return Insertion::Independent;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{ratio, scalar};

    fn vec_of(entries: &[(u32, i64)]) -> BTreeMap<u32, Scalar> {
        entries.iter().map(|&(k, v)| (k, scalar(v))).collect()
    }

    #[test]
    fn rank_and_kernel_witness() {
        let mut span = LinearSpan::new();
        assert!(matches!(
            span.insert(vec_of(&[(0, 1), (1, 2)])),
            Insertion::Independent
        ));
        assert!(matches!(
            span.insert(vec_of(&[(1, 1)])),
            Insertion::Independent
        ));
        // 3*(v0) - 6*(v1) - v2 = 0 with v2 = 3*v0 - 6*v1
        let dep = span.insert(vec_of(&[(0, 3)]));
        let Insertion::Dependent(combo) = dep else {
            panic!("expected dependency");
        };
        assert_eq!(span.rank(), 2);
        assert_eq!(combo.len(), 3);
        // check the witness really sums to zero: c0*v0 + c1*v1 + c2*v2 = 0
        let vs = [vec_of(&[(0, 1), (1, 2)]), vec_of(&[(1, 1)]), vec_of(&[(0, 3)])];
        let mut acc: BTreeMap<u32, Scalar> = BTreeMap::new();
        for (c, v) in combo.iter().zip(&vs) {
            for (k, x) in v {
                let e = acc.entry(*k).or_insert_with(Scalar::zero);
                *e += c * x;
            }
        }
        assert!(acc.values().all(Zero::is_zero));
        assert_eq!(combo[2], scalar(1));
    }

    #[test]
    fn zero_vector_is_dependent_with_unit_witness() {
        let mut span = LinearSpan::<u32>::new();
        let Insertion::Dependent(combo) = span.insert(BTreeMap::new()) else {
            panic!("zero vector must be dependent");
        };
        assert_eq!(combo, vec![scalar(1)]);
    }

    #[test]
    fn fractions_are_exact() {
        let mut span = LinearSpan::new();
        let mut v: BTreeMap<u32, Scalar> = BTreeMap::new();
        v.insert(0, ratio(1, 3));
        v.insert(1, ratio(2, 7));
        span.insert(v.clone());
        let doubled = v.into_iter().map(|(k, c)| (k, c * scalar(2))).collect();
        assert!(matches!(span.insert(doubled), Insertion::Dependent(_)));
        assert_eq!(span.rank(), 1);
    }
}
