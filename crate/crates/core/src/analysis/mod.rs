//! Filtration degrees, leading terms, and the degree-bounded linear-algebra
//! checks: center dimensions, algebraic independence of the Casimir, and
//! the adapted PBW basis.
//!
//! The filtration weight of a normal word `A^i D^j B^k alpha^r delta^s
//! beta^t` is `i + 2j + k + r + s + t`; the subspace of elements of weight
//! at most `n` has the normal words of weight `<= n` as a basis, which is
//! what every dimension count here enumerates.

mod linalg;
pub mod sampling;

use std::error::Error;
use std::fmt;

use num_traits::Zero;

use crate::freealg::{commutator, ExponentTuple, Letter, NcPoly, Scalar, Word};
use crate::racah::{Name, Racah};
use crate::rewrite::RewriteError;

use linalg::{Insertion, LinearSpan};

/// Filtration degree of a polynomial; the zero polynomial sits strictly
/// below every natural so that `x = 0` passes every `degree(x) <= n` bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FiltrationDegree {
    MinusInfinity,
    Finite(u32),
}

impl FiltrationDegree {
    pub fn at_most(self, n: u32) -> bool {
        self <= FiltrationDegree::Finite(n)
    }
}

impl fmt::Display for FiltrationDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltrationDegree::MinusInfinity => f.write_str("-inf"),
            FiltrationDegree::Finite(n) => write!(f, "{n}"),
        }
    }
}

/// Leading data of a nonzero reduced polynomial: the lexicographically
/// greatest exponent tuple among its maximal-degree terms.
#[derive(Clone, Debug, PartialEq)]
pub struct LeadingTerm {
    pub tuple: ExponentTuple,
    pub coefficient: Scalar,
}

/// Result of the degree-bounded center computation.
#[derive(Clone, Debug)]
pub struct CenterReport {
    pub bound: u32,
    pub kernel_dimension: usize,
    pub expected_dimension: usize,
    pub basis: Vec<NcPoly>,
    pub matches: bool,
}

/// Configured maxima for the expensive checks. Bounds are configuration,
/// not constants; the defaults keep every suite in the seconds range.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub center_max: u32,
    pub independence_max: u32,
    pub pbw_max: u32,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            center_max: 6,
            independence_max: 8,
            pbw_max: 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnalysisError {
    ZeroPolynomial,
    BoundTooLarge { bound: u32, max: u32 },
    Rewrite(RewriteError),
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::ZeroPolynomial => f.write_str("zero polynomial has no leading term"),
            AnalysisError::BoundTooLarge { bound, max } => {
                write!(f, "bound {bound} exceeds configured maximum {max}")
            }
            AnalysisError::Rewrite(e) => e.fmt(f),
        }
    }
}

impl Error for AnalysisError {}

impl From<RewriteError> for AnalysisError {
    fn from(e: RewriteError) -> AnalysisError {
        AnalysisError::Rewrite(e)
    }
}

/// Degree of a polynomial already in normal form.
pub fn degree_normal(p: &NcPoly) -> FiltrationDegree {
    debug_assert!(p.is_normal());
    p.support()
        .map(Word::weight)
        .max()
        .map_or(FiltrationDegree::MinusInfinity, FiltrationDegree::Finite)
}

/// Filtration degree; reduces first unless the input is already normal.
pub fn degree(cx: &Racah, p: &NcPoly) -> Result<FiltrationDegree, RewriteError> {
    if p.is_normal() {
        Ok(degree_normal(p))
    } else {
        Ok(degree_normal(&cx.reduce(p)?))
    }
}

/// All exponent tuples of weight at most `n`, enumerated in a fixed order.
/// This enumeration is the dimension oracle for the filtration.
pub fn normal_tuples_up_to(n: u32) -> Vec<ExponentTuple> {
    let mut out = Vec::new();
    let mut exps = [0u32; 6];
    fn rec(rank: usize, left: u32, exps: &mut [u32; 6], out: &mut Vec<ExponentTuple>) {
        if rank == 6 {
            out.push(ExponentTuple(*exps));
            return;
        }
        let weight = Letter::from_rank(rank).weight();
        let mut used = 0;
        loop {
            exps[rank] = used / weight;
            rec(rank + 1, left - used, exps, out);
            used += weight;
            if used > left {
                break;
            }
        }
        exps[rank] = 0;
    }
    rec(0, n, &mut exps, &mut out);
    out
}

/// Number of normal words of weight at most `n`: the dimension of the
/// `n`-th filtration subspace.
pub fn monomial_count(n: u32) -> usize {
    normal_tuples_up_to(n).len()
}

/// The monomial basis of the `n`-th filtration subspace.
pub fn normal_words_up_to(n: u32) -> Vec<Word> {
    normal_tuples_up_to(n).iter().map(ExponentTuple::word).collect()
}

fn leading_of_normal(p: &NcPoly) -> Option<LeadingTerm> {
    let mut best: Option<(u32, ExponentTuple, &Scalar)> = None;
    for (w, c) in p.terms() {
        let tuple = ExponentTuple::from_word(w).expect("reduced support is normal");
        let deg = tuple.degree();
        let better = match &best {
            None => true,
            Some((bd, bt, _)) => deg > *bd || (deg == *bd && tuple > *bt),
        };
        if better {
            best = Some((deg, tuple, c));
        }
    }
    best.map(|(_, tuple, c)| LeadingTerm {
        tuple,
        coefficient: c.clone(),
    })
}

/// Leading term of a nonzero polynomial (reduced first if necessary).
pub fn leading_term(cx: &Racah, p: &NcPoly) -> Result<LeadingTerm, AnalysisError> {
    let reduced;
    let q = if p.is_normal() {
        p
    } else {
        reduced = cx.reduce(p)?;
        &reduced
    };
    leading_of_normal(q).ok_or(AnalysisError::ZeroPolynomial)
}

/// Samples pairs of nonzero reduced polynomials and asserts that leading
/// exponent tuples add componentwise under multiplication and that no
/// product vanishes. This is the sampled no-zero-divisor check.
pub fn leading_multiplicativity_check(
    cx: &Racah,
    samples: usize,
    max_degree: u32,
    rng_seed: u64,
) -> Result<bool, RewriteError> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(rng_seed);
    let words = normal_words_up_to(max_degree);
    for _ in 0..samples {
        let u = sampling::normal_poly_from(&mut rng, &words, 4);
        let v = sampling::normal_poly_from(&mut rng, &words, 4);
        let product = cx.reduce(&(&u * &v))?;
        if product.is_zero() {
            return Ok(false);
        }
        let lu = leading_of_normal(&u).expect("u nonzero");
        let lv = leading_of_normal(&v).expect("v nonzero");
        let lp = leading_of_normal(&product).expect("product nonzero");
        let mut sum = [0u32; 6];
        for (dst, (a, b)) in sum.iter_mut().zip(lu.tuple.0.iter().zip(lv.tuple.0.iter())) {
            *dst = a + b;
        }
        if lp.tuple != ExponentTuple(sum) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verifies the leading-order behaviour of `[A, A^i D^j B^k]` and its
/// mirrored `[B, .]` statement over the given exponent ranges:
/// the commutator equals `2k A^i D^(j+1) B^(k-1)` (resp.
/// `-2i A^(i-1) D^(j+1) B^k`) up to terms of weight `i + 2j + k`.
pub fn commutator_degree_checks(
    cx: &Racah,
    max_i: u32,
    max_j: u32,
    max_k: u32,
) -> Result<bool, RewriteError> {
    let a = NcPoly::letter(Letter::A);
    let b = NcPoly::letter(Letter::B);
    for i in 0..=max_i {
        for j in 0..=max_j {
            for k in 0..=max_k {
                let bound = i + 2 * j + k;
                let m = NcPoly::word(ExponentTuple([i, j, k, 0, 0, 0]).word());

                let lhs = cx.reduce(&commutator(&a, &m))?;
                let target = if k > 0 {
                    NcPoly::word(ExponentTuple([i, j + 1, k - 1, 0, 0, 0]).word())
                        .scaled(&crate::freealg::scalar(2 * k as i64))
                } else {
                    NcPoly::zero()
                };
                if !degree_normal(&(&lhs - &target)).at_most(bound) {
                    return Ok(false);
                }

                let lhs = cx.reduce(&commutator(&b, &m))?;
                let target = if i > 0 {
                    NcPoly::word(ExponentTuple([i - 1, j + 1, k, 0, 0, 0]).word())
                        .scaled(&crate::freealg::scalar(-2 * i as i64))
                } else {
                    NcPoly::zero()
                };
                if !degree_normal(&(&lhs - &target)).at_most(bound) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Checks `Omega^n = D^(2n)` up to weight `4n - 1` for `1 <= n <= max_n`,
/// with `Omega` the first dihedral-symmetric Casimir element.
pub fn omega_power_congruence(cx: &Racah, max_n: u32) -> Result<bool, RewriteError> {
    let omega = cx.named(Name::OmegaA);
    for n in 1..=max_n {
        let pow = cx.reduce(&omega.pow(n))?;
        let d2n = NcPoly::word(ExponentTuple([0, n, 0, 0, 0, 0]).word());
        if !degree_normal(&(&pow - &d2n)).at_most(4 * n - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exponent tuples `(l, r, s, t)` with `4l + r + s + t <= bound`: the
/// expected index set for the center basis `Omega^l alpha^r delta^s beta^t`.
pub fn center_tuples(bound: u32) -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for l in 0..=bound / 4 {
        let rem = bound - 4 * l;
        for r in 0..=rem {
            for s in 0..=rem - r {
                for t in 0..=rem - r - s {
                    out.push((l, r, s, t));
                }
            }
        }
    }
    out
}

pub fn center_tuple_count(bound: u32) -> usize {
    center_tuples(bound).len()
}

/// The reduced monomials `Omega^l alpha^r delta^s beta^t` of weight at most
/// `bound`, in the order of [`center_tuples`].
pub fn center_monomials(cx: &Racah, bound: u32) -> Result<Vec<NcPoly>, RewriteError> {
    let omega = cx.named(Name::OmegaA);
    let mut omega_pows = vec![NcPoly::one()];
    for _ in 0..bound / 4 {
        let next = cx.reduce(&(omega_pows.last().unwrap() * omega))?;
        omega_pows.push(next);
    }
    let mut out = Vec::new();
    for (l, r, s, t) in center_tuples(bound) {
        let tail = NcPoly::word(ExponentTuple([0, 0, 0, r, s, t]).word());
        out.push(cx.reduce(&(&omega_pows[l as usize] * &tail))?);
    }
    Ok(out)
}

/// Computes `Z intersect R_bound` as the exact kernel of the map
/// `x -> (reduce([A, x]), reduce([B, x]))` on the monomial basis of
/// `R_bound`, and compares against the expected basis
/// `Omega^l alpha^r delta^s beta^t`, `4l + r + s + t <= bound`.
///
/// Commuting with `A` and `B` suffices for centrality: the algebra is
/// generated by `A`, `B`, `C` and `C = delta - A - B` with `delta` central,
/// so the kernel of this map is exactly the center at this degree.
pub fn center_basis(cx: &Racah, bound: u32, bounds: &Bounds) -> Result<CenterReport, AnalysisError> {
    if bound > bounds.center_max {
        return Err(AnalysisError::BoundTooLarge {
            bound,
            max: bounds.center_max,
        });
    }
    let a = NcPoly::letter(Letter::A);
    let b = NcPoly::letter(Letter::B);
    let monomials = normal_words_up_to(bound);

    let mut span = LinearSpan::new();
    let mut kernel_combos: Vec<Vec<Scalar>> = Vec::new();
    for m in &monomials {
        let pm = NcPoly::word(m.clone());
        let mut column = std::collections::BTreeMap::new();
        for (tag, gen) in [(0u8, &a), (1u8, &b)] {
            let image = cx.reduce(&commutator(gen, &pm))?;
            for (w, c) in image.terms() {
                column.insert((tag, w.clone()), c.clone());
            }
        }
        if let Insertion::Dependent(combo) = span.insert(column) {
            kernel_combos.push(combo);
        }
    }

    let basis: Vec<NcPoly> = kernel_combos
        .iter()
        .map(|combo| {
            let mut p = NcPoly::zero();
            for (c, w) in combo.iter().zip(&monomials) {
                if !c.is_zero() {
                    p.add_term(w.clone(), c.clone());
                }
            }
            p
        })
        .collect();

    let kernel_dimension = basis.len();
    let expected_dimension = center_tuple_count(bound);

    // The kernel *is* the span of its basis, so membership of the expected
    // elements is their commutators with A and B vanishing.
    let mut expected_in_kernel = true;
    for cm in center_monomials(cx, bound)? {
        if !cx.reduce(&commutator(&a, &cm))?.is_zero()
            || !cx.reduce(&commutator(&b, &cm))?.is_zero()
        {
            expected_in_kernel = false;
            break;
        }
    }
    let matches = kernel_dimension == expected_dimension && expected_in_kernel;

    Ok(CenterReport {
        bound,
        kernel_dimension,
        expected_dimension,
        basis,
        matches,
    })
}

/// Reduces every `Omega^l alpha^r delta^s beta^t` with
/// `4l + r + s + t <= weight_bound` and asserts the coordinate vectors are
/// linearly independent over the rationals.
pub fn algebraic_independence_check(
    cx: &Racah,
    weight_bound: u32,
    bounds: &Bounds,
) -> Result<bool, AnalysisError> {
    if weight_bound > bounds.independence_max {
        return Err(AnalysisError::BoundTooLarge {
            bound: weight_bound,
            max: bounds.independence_max,
        });
    }
    let monomials = center_monomials(cx, weight_bound)?;
    let total = monomials.len();
    let mut span = LinearSpan::new();
    for p in monomials {
        let column: std::collections::BTreeMap<Word, Scalar> =
            p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        span.insert(column);
    }
    Ok(span.rank() == total)
}

/// Reduces every `A^i D^j B^k Omega^l alpha^r delta^s beta^t` with
/// `j in {0, 1}` and `i + 2j + k + 4l + r + s + t <= bound`, and asserts
/// that they are independent and exactly as many as the normal words of
/// weight `<= bound` — the adapted PBW basis at this degree.
pub fn pbw_omega_basis_check(cx: &Racah, bound: u32, bounds: &Bounds) -> Result<bool, AnalysisError> {
    if bound > bounds.pbw_max {
        return Err(AnalysisError::BoundTooLarge {
            bound,
            max: bounds.pbw_max,
        });
    }
    let omega = cx.named(Name::OmegaA);
    let mut omega_pows = vec![NcPoly::one()];
    for _ in 0..bound / 4 {
        let next = cx.reduce(&(omega_pows.last().unwrap() * omega))?;
        omega_pows.push(next);
    }

    let mut span = LinearSpan::new();
    let mut total = 0usize;
    for j in 0..=1u32.min(bound / 2) {
        for l in 0..=(bound - 2 * j) / 4 {
            let rem = bound - 2 * j - 4 * l;
            for i in 0..=rem {
                for k in 0..=rem - i {
                    for r in 0..=rem - i - k {
                        for s in 0..=rem - i - k - r {
                            for t in 0..=rem - i - k - r - s {
                                total += 1;
                                let head = NcPoly::word(ExponentTuple([i, j, k, 0, 0, 0]).word());
                                let tail = NcPoly::word(ExponentTuple([0, 0, 0, r, s, t]).word());
                                let p = cx.reduce(&(&head * &omega_pows[l as usize] * &tail))?;
                                let column: std::collections::BTreeMap<Word, Scalar> =
                                    p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
                                span.insert(column);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(total == monomial_count(bound) && span.rank() == total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::scalar;

    #[test]
    fn degree_examples() {
        let cx = Racah::new();
        let a = NcPoly::letter(Letter::A);
        let d = NcPoly::letter(Letter::D);
        assert_eq!(degree(&cx, &a).unwrap(), FiltrationDegree::Finite(1));
        assert_eq!(degree(&cx, &d).unwrap(), FiltrationDegree::Finite(2));
        assert_eq!(
            degree(&cx, cx.named(Name::OmegaA)).unwrap(),
            FiltrationDegree::Finite(4)
        );
        assert_eq!(
            degree(&cx, &NcPoly::zero()).unwrap(),
            FiltrationDegree::MinusInfinity
        );
        assert!(FiltrationDegree::MinusInfinity.at_most(0));
    }

    #[test]
    fn monomial_counts_match_enumeration() {
        assert_eq!(monomial_count(0), 1);
        assert_eq!(monomial_count(1), 6);
        assert_eq!(monomial_count(2), 22);
        assert_eq!(monomial_count(5), 314);
        // every enumerated word is normal, within weight, and distinct
        let words = normal_words_up_to(3);
        assert_eq!(words.len(), monomial_count(3));
        let set: std::collections::BTreeSet<&Word> = words.iter().collect();
        assert_eq!(set.len(), words.len());
        assert!(words.iter().all(|w| w.is_normal() && w.weight() <= 3));
    }

    #[test]
    fn leading_term_examples() {
        let cx = Racah::new();
        let a = NcPoly::letter(Letter::A);
        let b = NcPoly::letter(Letter::B);
        let p = &a + &b.pow(2);
        let lt = leading_term(&cx, &p).unwrap();
        assert_eq!(lt.tuple, ExponentTuple([0, 0, 2, 0, 0, 0]));
        assert_eq!(lt.coefficient, scalar(1));

        let ba = &b * &a;
        let lt = leading_term(&cx, &ba).unwrap();
        assert_eq!(lt.tuple, ExponentTuple([1, 0, 1, 0, 0, 0]));
        assert_eq!(lt.coefficient, scalar(1));

        let lt = leading_term(&cx, &NcPoly::one()).unwrap();
        assert_eq!(lt.tuple, ExponentTuple([0; 6]));
        assert_eq!(lt.coefficient, scalar(1));

        assert_eq!(
            leading_term(&cx, &NcPoly::zero()).unwrap_err(),
            AnalysisError::ZeroPolynomial
        );
    }

    #[test]
    fn center_tuple_counts() {
        assert_eq!(center_tuple_count(0), 1);
        assert_eq!(center_tuple_count(1), 4);
        assert_eq!(center_tuple_count(2), 10);
        assert_eq!(center_tuple_count(3), 20);
        assert_eq!(center_tuple_count(4), 36);
        assert_eq!(center_tuple_count(5), 60);
        assert_eq!(center_tuple_count(8), 201);
    }

    #[test]
    fn center_small_bounds() {
        let cx = Racah::new();
        let bounds = Bounds::default();
        let report = center_basis(&cx, 0, &bounds).unwrap();
        assert_eq!(report.kernel_dimension, 1);
        assert!(report.matches);

        let report = center_basis(&cx, 1, &bounds).unwrap();
        assert_eq!(report.kernel_dimension, 4);
        assert_eq!(report.expected_dimension, 4);
        assert!(report.matches);
        // kernel basis at bound 1 spans {1, alpha, delta, beta}
        for p in &report.basis {
            assert!(cx.is_central_subalgebra_element(p).unwrap());
        }
    }

    #[test]
    fn bound_guards() {
        let cx = Racah::new();
        let bounds = Bounds::default();
        assert_eq!(
            center_basis(&cx, 7, &bounds).unwrap_err(),
            AnalysisError::BoundTooLarge { bound: 7, max: 6 }
        );
        assert!(matches!(
            algebraic_independence_check(&cx, 9, &bounds),
            Err(AnalysisError::BoundTooLarge { .. })
        ));
        assert!(matches!(
            pbw_omega_basis_check(&cx, 6, &bounds),
            Err(AnalysisError::BoundTooLarge { .. })
        ));
    }

    #[test]
    fn independence_and_pbw_small() {
        let cx = Racah::new();
        let bounds = Bounds::default();
        assert!(algebraic_independence_check(&cx, 0, &bounds).unwrap());
        assert!(algebraic_independence_check(&cx, 4, &bounds).unwrap());
        assert_eq!(center_tuple_count(4), 36);
        assert!(pbw_omega_basis_check(&cx, 0, &bounds).unwrap());
        assert!(pbw_omega_basis_check(&cx, 1, &bounds).unwrap());
    }

    #[test]
    fn commutator_degree_base_cases() {
        let cx = Racah::new();
        // (0,0,1): [A, B] = 2D exactly, so the difference is zero
        let a = NcPoly::letter(Letter::A);
        let b = NcPoly::letter(Letter::B);
        let d = NcPoly::letter(Letter::D);
        let lhs = cx.reduce(&commutator(&a, &b)).unwrap();
        assert_eq!(lhs, d.scaled(&scalar(2)));
        // (0,0,0): [A, 1] = 0
        assert!(cx.reduce(&commutator(&a, &NcPoly::one())).unwrap().is_zero());
        assert!(commutator_degree_checks(&cx, 1, 1, 1).unwrap());
    }

    #[test]
    fn omega_power_small() {
        let cx = Racah::new();
        assert!(omega_power_congruence(&cx, 1).unwrap());
        // n = 0 is trivial: Omega^0 - D^0 = 0
        let diff = cx.named(Name::OmegaA).pow(0) - NcPoly::one();
        assert!(diff.is_zero());
    }

    #[test]
    fn multiplicativity_identity_factor() {
        let cx = Racah::new();
        let v = cx.named(Name::OmegaB);
        let lt_v = leading_term(&cx, v).unwrap();
        let prod = cx.reduce(&(NcPoly::one() * v)).unwrap();
        assert_eq!(leading_term(&cx, &prod).unwrap().tuple, lt_v.tuple);
    }
}
