use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::scalar::{scalar, Scalar};
use super::word::{Letter, Word};

/// An element of the free associative algebra: a finite map from words to
/// nonzero rational coefficients.
///
/// The map never stores a zero coefficient, so `==` is structural equality
/// of canonical representations. Multiplication is the bilinear extension
/// of word concatenation; no rewriting happens here.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct NcPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero() -> NcPoly {
        NcPoly::default()
    }

    /// The empty word with coefficient 1.
    pub fn one() -> NcPoly {
        NcPoly::word(Word::empty())
    }

    pub fn letter(l: Letter) -> NcPoly {
        NcPoly::word(Word::letter(l))
    }

    pub fn word(w: Word) -> NcPoly {
        NcPoly::term(w, scalar(1))
    }

    pub fn term(w: Word, c: Scalar) -> NcPoly {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the canonical word order (length, then rank-lex).
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    /// Add `c * w`, merging with any existing term and pruning zeros.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scaled(&self, c: &Scalar) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// `n`-fold product; `p^0` is the identity.
    pub fn pow(&self, n: u32) -> NcPoly {
        let mut out = NcPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// True iff every supported word is normal.
    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(Word::is_normal)
    }

    pub(crate) fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub(crate) fn from_terms(terms: BTreeMap<Word, Scalar>) -> NcPoly {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        NcPoly { terms }
    }
}

/// `c1 * p1 + c2 * p2` with zero coefficients pruned.
pub fn linear_combine(c1: &Scalar, p1: &NcPoly, c2: &Scalar, p2: &NcPoly) -> NcPoly {
    let mut out = p1.scaled(c1);
    for (w, c) in p2.terms() {
        out.add_term(w.clone(), c * c2);
    }
    out
}

/// `pq - qp` in the free algebra.
pub fn commutator(p: &NcPoly, q: &NcPoly) -> NcPoly {
    p * q - q * p
}

/// `pq + qp` in the free algebra.
pub fn anticommutator(p: &NcPoly, q: &NcPoly) -> NcPoly {
    p * q + q * p
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in rhs.terms() {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for NcPoly {
            type Output = NcPoly;
            fn $method(self, rhs: NcPoly) -> NcPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&NcPoly> for NcPoly {
            type Output = NcPoly;
            fn $method(self, rhs: &NcPoly) -> NcPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<NcPoly> for &NcPoly {
            type Output = NcPoly;
            fn $method(self, rhs: NcPoly) -> NcPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -&self
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly({self})")
    }
}
