//! Seeded random elements for the property checks. Every sampler takes the
//! caller's RNG so that seeds stay part of the test configuration.

use std::collections::BTreeSet;

use rand::Rng;

use crate::freealg::{ratio, Letter, NcPoly, Scalar, Word};

use super::normal_words_up_to;

fn coefficient<R: Rng>(rng: &mut R) -> Scalar {
    let mut num = 0;
    while num == 0 {
        num = rng.gen_range(-9..=9);
    }
    ratio(num, rng.gen_range(1..=4))
}

/// An arbitrary (not necessarily normal) word of length up to `max_len`.
pub fn word<R: Rng>(rng: &mut R, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| Letter::from_rank(rng.gen_range(0..6))))
}

/// A nonzero polynomial supported on up to `max_terms` arbitrary words of
/// length up to `max_len`.
pub fn free_poly<R: Rng>(rng: &mut R, max_len: usize, max_terms: usize) -> NcPoly {
    let count = rng.gen_range(1..=max_terms);
    let mut support = BTreeSet::new();
    while support.len() < count {
        support.insert(word(rng, max_len));
    }
    let mut p = NcPoly::zero();
    for w in support {
        p.add_term(w, coefficient(rng));
    }
    p
}

/// A nonzero normal-form polynomial of weight at most `max_degree`.
pub fn normal_poly<R: Rng>(rng: &mut R, max_degree: u32, max_terms: usize) -> NcPoly {
    let words = normal_words_up_to(max_degree);
    normal_poly_from(rng, &words, max_terms)
}

/// Same, drawing support from a pre-enumerated basis.
pub fn normal_poly_from<R: Rng>(rng: &mut R, words: &[Word], max_terms: usize) -> NcPoly {
    let count = rng.gen_range(1..=max_terms.min(words.len()));
    let mut picked = BTreeSet::new();
    while picked.len() < count {
        picked.insert(rng.gen_range(0..words.len()));
    }
    let mut p = NcPoly::zero();
    for idx in picked {
        p.add_term(words[idx].clone(), coefficient(rng));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_nonzero_and_within_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let p = normal_poly(&mut rng, 4, 5);
            assert!(!p.is_zero());
            assert!(p.is_normal());
            assert!(p.support().all(|w| w.weight() <= 4));

            let q = free_poly(&mut rng, 6, 5);
            assert!(!q.is_zero());
            assert!(q.support().all(|w| w.len() <= 6));
        }
    }

    #[test]
    fn seeding_is_reproducible() {
        let mut r1 = ChaCha8Rng::seed_from_u64(42);
        let mut r2 = ChaCha8Rng::seed_from_u64(42);
        assert_eq!(free_poly(&mut r1, 5, 4), free_poly(&mut r2, 5, 4));
    }
}
