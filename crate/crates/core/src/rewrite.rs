//! The reduction system whose normal forms are the PBW monomials
//! `A^i D^j B^k alpha^r delta^s beta^t`.
//!
//! There are fifteen rules, one per adjacent letter pair in strictly
//! decreasing rank order: three arithmetic rules
//!
//! ```text
//! BA -> AB - 2D
//! DA -> AD + A delta - A^2 - 2AB + 2D - alpha
//! BD -> DB + B delta - B^2 - 2AB + 2D + beta
//! ```
//!
//! and twelve commuting swaps (`alpha`, `delta`, `beta` pass every letter of
//! lower rank, and pass each other into rank order). Confluence is not
//! assumed: [`ReductionSystem::check_confluence`] enumerates every overlap
//! ambiguity and resolves both reduction orders.

use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;

use num_traits::Zero;

use crate::freealg::{scalar, Letter, NcPoly, Scalar, Word};

/// Default cap on rewrite steps per `reduce` call.
pub const DEFAULT_FUEL: u64 = 10_000_000;

/// Hard failure from the step-count guard. Never expected on valid runs;
/// hitting it signals a bug or an absurdly large input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RewriteError {
    FuelExhausted { fuel: u64 },
}

impl fmt::Display for RewriteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteError::FuelExhausted { fuel } => {
                write!(f, "rewrite step budget exhausted ({fuel} steps)")
            }
        }
    }
}

impl Error for RewriteError {}

/// Which adjacent non-normal pair gets rewritten first inside each word.
///
/// Confluence makes the choice immaterial to results; both are kept so the
/// agreement can be tested.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    LeftmostFirst,
    RightmostFirst,
}

/// One rewrite rule: a length-2 non-normal word and its normal replacement.
#[derive(Clone, Debug)]
pub struct ReductionRule {
    lhs: Word,
    rhs: NcPoly,
}

impl ReductionRule {
    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &NcPoly {
        &self.rhs
    }
}

/// Outcome of resolving one overlap ambiguity `xyz` (both `xy` and `yz` are
/// rule left-hand sides): the normal forms reached by rewriting `xy` first
/// and `yz` first.
#[derive(Clone, Debug)]
pub struct AmbiguityReport {
    pub overlap_word: Word,
    pub left_path_result: NcPoly,
    pub right_path_result: NcPoly,
    pub resolvable: bool,
}

/// The fixed 15-rule system plus a fuel bound.
#[derive(Clone)]
pub struct ReductionSystem {
    rules: Vec<ReductionRule>,
    // rule index by (left rank, right rank); None on normal pairs
    table: [[Option<usize>; 6]; 6],
    fuel: u64,
}

impl Default for ReductionSystem {
    fn default() -> Self {
        ReductionSystem::new()
    }
}

impl ReductionSystem {
    pub fn new() -> ReductionSystem {
        ReductionSystem::with_fuel(DEFAULT_FUEL)
    }

    pub fn with_fuel(fuel: u64) -> ReductionSystem {
        use Letter::{Alpha, Beta, Delta, A, B, D};
        let w = |ls: &[Letter]| Word::from_letters(ls.iter().copied());
        let mono = |ls: &[Letter], c: i64| NcPoly::term(w(ls), scalar(c));

        let mut rules = Vec::with_capacity(15);
        // BA = AB - 2D
        rules.push(ReductionRule {
            lhs: w(&[B, A]),
            rhs: mono(&[A, B], 1) + mono(&[D], -2),
        });
        // DA = AD + A delta - A^2 - 2AB + 2D - alpha
        rules.push(ReductionRule {
            lhs: w(&[D, A]),
            rhs: mono(&[A, D], 1)
                + mono(&[A, Delta], 1)
                + mono(&[A, A], -1)
                + mono(&[A, B], -2)
                + mono(&[D], 2)
                + mono(&[Alpha], -1),
        });
        // BD = DB + B delta - B^2 - 2AB + 2D + beta
        rules.push(ReductionRule {
            lhs: w(&[B, D]),
            rhs: mono(&[D, B], 1)
                + mono(&[B, Delta], 1)
                + mono(&[B, B], -1)
                + mono(&[A, B], -2)
                + mono(&[D], 2)
                + mono(&[Beta], 1),
        });
        // the twelve commuting swaps
        for x in Letter::ALL {
            for y in Letter::ALL {
                if x > y && !matches!((x, y), (B, A) | (D, A) | (B, D)) {
                    rules.push(ReductionRule {
                        lhs: w(&[x, y]),
                        rhs: mono(&[y, x], 1),
                    });
                }
            }
        }
        debug_assert_eq!(rules.len(), 15);

        let mut table = [[None; 6]; 6];
        for (idx, rule) in rules.iter().enumerate() {
            let [x, y] = rule.lhs.letters() else {
                unreachable!("rule lhs has length 2")
            };
            table[x.rank()][y.rank()] = Some(idx);
        }
        ReductionSystem { rules, table, fuel }
    }

    pub fn rules(&self) -> &[ReductionRule] {
        &self.rules
    }

    pub fn fuel(&self) -> u64 {
        self.fuel
    }

    fn rule_for(&self, x: Letter, y: Letter) -> Option<&ReductionRule> {
        self.table[x.rank()][y.rank()].map(|i| &self.rules[i])
    }

    /// Rewrite to normal form.
    ///
    /// Repeatedly pulls a pending word, rewrites its first (per strategy)
    /// non-normal adjacent pair, and re-merges the replacement terms.
    /// Termination rests on the rank-descent of the rule set; the fuel
    /// bound is an engineering guard. On valid runs the observed measure
    /// (word length, then rank inversions, over terms of maximal length)
    /// decreases strictly, but nothing here depends on it.
    pub fn reduce(&self, p: &NcPoly) -> Result<NcPoly, RewriteError> {
        self.reduce_with_strategy(p, Strategy::LeftmostFirst)
    }

    pub fn reduce_with_strategy(
        &self,
        p: &NcPoly,
        strategy: Strategy,
    ) -> Result<NcPoly, RewriteError> {
        let mut normal: BTreeMap<Word, Scalar> = BTreeMap::new();
        let mut pending = p.clone().into_terms();
        let mut steps: u64 = 0;
        while let Some((w, c)) = pending.pop_first() {
            let pos = match strategy {
                Strategy::LeftmostFirst => w.first_inversion(),
                Strategy::RightmostFirst => w.last_inversion(),
            };
            match pos {
                None => {
                    merge(&mut normal, w, c);
                }
                Some(at) => {
                    steps += 1;
                    if steps > self.fuel {
                        return Err(RewriteError::FuelExhausted { fuel: self.fuel });
                    }
                    let pair = &w.letters()[at..at + 2];
                    let rule = self
                        .rule_for(pair[0], pair[1])
                        .expect("every decreasing pair has a rule");
                    for (rw, rc) in rule.rhs.terms() {
                        merge(&mut pending, w.splice_pair(at, rw), &c * rc);
                    }
                }
            }
        }
        Ok(NcPoly::from_terms(normal))
    }

    /// Reduce the single word `w` with coefficient 1.
    pub fn reduce_word(&self, w: &Word) -> Result<NcPoly, RewriteError> {
        self.reduce(&NcPoly::word(w.clone()))
    }

    /// True iff every supported word of `p` is normal.
    pub fn is_normal(p: &NcPoly) -> bool {
        p.is_normal()
    }

    /// Enumerate every length-3 word `xyz` whose prefix `xy` and suffix
    /// `yz` are both rule left-hand sides, reduce it along both orders,
    /// and report whether the normal forms agree.
    ///
    /// Rule left-hand sides all have length 2 and are pairwise distinct,
    /// so overlaps are the only ambiguity shape; the count itself (20) is
    /// asserted by callers, not assumed here.
    pub fn check_confluence(&self) -> Result<Vec<AmbiguityReport>, RewriteError> {
        let mut reports = Vec::new();
        for first in &self.rules {
            for second in &self.rules {
                let [x, y] = first.lhs.letters() else { unreachable!() };
                let [y2, z] = second.lhs.letters() else { unreachable!() };
                if y != y2 {
                    continue;
                }
                let overlap_word = Word::from_letters([*x, *y, *z]);
                // rewrite xy first: rhs(xy) * z
                let left_start = &first.rhs * &NcPoly::letter(*z);
                // rewrite yz first: x * rhs(yz)
                let right_start = &NcPoly::letter(*x) * &second.rhs;
                let left_path_result = self.reduce(&left_start)?;
                let right_path_result = self.reduce(&right_start)?;
                let resolvable = left_path_result == right_path_result;
                reports.push(AmbiguityReport {
                    overlap_word,
                    left_path_result,
                    right_path_result,
                    resolvable,
                });
            }
        }
        Ok(reports)
    }
}

fn merge(map: &mut BTreeMap<Word, Scalar>, w: Word, c: impl Into<Scalar>) {
    let c = c.into();
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
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

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn rule_table_shape() {
        let rs = ReductionSystem::new();
        assert_eq!(rs.rules().len(), 15);
        let lhs_set: BTreeSet<&Word> = rs.rules().iter().map(|r| r.lhs()).collect();
        assert_eq!(lhs_set.len(), 15, "lhs words pairwise distinct");
        for rule in rs.rules() {
            assert_eq!(rule.lhs().len(), 2);
            assert!(!rule.lhs().is_normal(), "lhs strictly decreasing");
            assert!(rule.rhs().is_normal(), "every rhs is already normal");
        }
        // exactly one rule per decreasing pair
        for x in Letter::ALL {
            for y in Letter::ALL {
                assert_eq!(rs.rule_for(x, y).is_some(), x > y);
            }
        }
    }

    #[test]
    fn reduce_ba() {
        let rs = ReductionSystem::new();
        let ba = Word::from_letters([Letter::B, Letter::A]);
        let got = rs.reduce_word(&ba).unwrap();
        let expect = NcPoly::word(Word::from_letters([Letter::A, Letter::B]))
            + NcPoly::term(Word::letter(Letter::D), scalar(-2));
        assert_eq!(got, expect);
    }

    #[test]
    fn reduce_word_trivia() {
        let rs = ReductionSystem::new();
        assert_eq!(rs.reduce_word(&Word::empty()).unwrap(), NcPoly::one());
        let da = Word::from_letters([Letter::Delta, Letter::A]);
        let ad = Word::from_letters([Letter::A, Letter::Delta]);
        assert_eq!(rs.reduce_word(&da).unwrap(), NcPoly::word(ad));
        let dd = Word::from_letters([Letter::D, Letter::D]);
        assert_eq!(rs.reduce_word(&dd).unwrap(), NcPoly::word(dd.clone()));
    }

    #[test]
    fn already_normal_is_fixed() {
        let rs = ReductionSystem::new();
        let ab = NcPoly::word(Word::from_letters([Letter::A, Letter::B]));
        assert_eq!(rs.reduce(&ab).unwrap(), ab);
        assert!(ReductionSystem::is_normal(&ab));
        assert!(ReductionSystem::is_normal(&NcPoly::zero()));
        let ba = NcPoly::word(Word::from_letters([Letter::B, Letter::A]));
        assert!(!ReductionSystem::is_normal(&ba));
    }

    #[test]
    fn fuel_exhaustion_reports() {
        let rs = ReductionSystem::with_fuel(1);
        let bda = Word::from_letters([Letter::B, Letter::D, Letter::A]);
        match rs.reduce_word(&bda) {
            Err(RewriteError::FuelExhausted { fuel }) => assert_eq!(fuel, 1),
            other => panic!("expected fuel exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn commuting_overlap_resolves_to_a_alpha_beta() {
        let rs = ReductionSystem::new();
        let w = Word::from_letters([Letter::Beta, Letter::Alpha, Letter::A]);
        let got = rs.reduce_word(&w).unwrap();
        let expect = NcPoly::word(Word::from_letters([
            Letter::A,
            Letter::Alpha,
            Letter::Beta,
        ]));
        assert_eq!(got, expect);
    }
}
