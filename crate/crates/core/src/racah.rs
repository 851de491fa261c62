//! The Racah algebra layer: canonical named elements, the relation sets of
//! the three presentations, the Casimir elements, and the dihedral group of
//! order 12 acting by (anti)automorphisms.
//!
//! The primitive letters are presentation 2's generators
//! `A, D, B, alpha, delta, beta`; the remaining classical symbols are
//! abbreviations, `C = delta - A - B` and `gamma = -alpha - beta`.

use std::error::Error;
use std::fmt;
use std::str::FromStr;

use crate::freealg::{anticommutator, commutator, ratio, scalar, Letter, NcPoly, Word};
use crate::rewrite::{ReductionSystem, RewriteError, DEFAULT_FUEL};

/// The twelve canonical named elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Name {
    A,
    B,
    C,
    D,
    Alpha,
    Beta,
    Gamma,
    Delta,
    OmegaA,
    OmegaB,
    OmegaC,
    CasRep,
}

impl Name {
    pub const ALL: [Name; 12] = [
        Name::A,
        Name::B,
        Name::C,
        Name::D,
        Name::Alpha,
        Name::Beta,
        Name::Gamma,
        Name::Delta,
        Name::OmegaA,
        Name::OmegaB,
        Name::OmegaC,
        Name::CasRep,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Name::A => "A",
            Name::B => "B",
            Name::C => "C",
            Name::D => "D",
            Name::Alpha => "alpha",
            Name::Beta => "beta",
            Name::Gamma => "gamma",
            Name::Delta => "delta",
            Name::OmegaA => "Omega_A",
            Name::OmegaB => "Omega_B",
            Name::OmegaC => "Omega_C",
            Name::CasRep => "CasRep",
        }
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Name {
    type Err = RacahError;

    fn from_str(s: &str) -> Result<Name, RacahError> {
        Name::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| RacahError::UnknownName(s.to_owned()))
    }
}

/// The four presentations whose relations the engine verifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// Generators A, B, C, D; bracket relations plus centrality.
    Definition,
    /// Generators A, B, C, D, alpha, beta.
    Pres1,
    /// Generators A, D, B, alpha, delta, beta (the primitive letters).
    Pres2,
    /// Generators A, B, delta.
    Pres3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RacahError {
    UnknownName(String),
    PowerOutOfRange(i64),
    Rewrite(RewriteError),
}

impl fmt::Display for RacahError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RacahError::UnknownName(s) => write!(f, "unknown element name `{s}`"),
            RacahError::PowerOutOfRange(p) => {
                write!(f, "tau power {p} out of range 0..=5")
            }
            RacahError::Rewrite(e) => e.fmt(f),
        }
    }
}

impl Error for RacahError {}

impl From<RewriteError> for RacahError {
    fn from(e: RewriteError) -> RacahError {
        RacahError::Rewrite(e)
    }
}

/// A letter-to-polynomial substitution, extended to the whole free algebra
/// as a homomorphism (or antihomomorphism when `reversing`).
///
/// Images are stored in normal form so that morphisms compare canonically.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism {
    images: [NcPoly; 6],
    reversing: bool,
}

impl Morphism {
    pub fn identity() -> Morphism {
        Morphism {
            images: Letter::ALL.map(NcPoly::letter),
            reversing: false,
        }
    }

    pub fn new(images: [NcPoly; 6], reversing: bool) -> Morphism {
        Morphism { images, reversing }
    }

    pub fn reversing(&self) -> bool {
        self.reversing
    }

    pub fn image(&self, l: Letter) -> &NcPoly {
        &self.images[l.rank()]
    }

    /// Image in the free algebra, without reduction: each word maps to the
    /// product of its letter images, in reversed order iff `reversing`;
    /// scalars are fixed.
    pub fn apply_free(&self, p: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            let mut term = NcPoly::one();
            if self.reversing {
                for l in w.letters().iter().rev() {
                    term = &term * self.image(*l);
                }
            } else {
                for l in w.letters() {
                    term = &term * self.image(*l);
                }
            }
            for (tw, tc) in term.terms() {
                out.add_term(tw.clone(), tc * c);
            }
        }
        out
    }
}

/// One element of the dihedral group, written `sigma^reflected tau^power`,
/// together with its realization on the algebra.
#[derive(Clone, Debug)]
pub struct D6Element {
    pub reflected: bool,
    pub power: u8,
    pub realized: Morphism,
}

/// Product in coordinates: `(a, b) * (c, d) = (a + c, d - b)` when `c` is a
/// reflection and `(a, b + d)` otherwise, from `tau sigma = sigma tau^-1`.
pub fn d6_product(x: (bool, u8), y: (bool, u8)) -> (bool, u8) {
    let (a, b) = x;
    let (c, d) = y;
    let power = if c {
        (6 + d as i8 - b as i8) as u8 % 6
    } else {
        (b + d) % 6
    };
    (a ^ c, power)
}

/// Immutable context holding the reduction system, the named elements, and
/// the realized dihedral group. All operations are pure.
pub struct Racah {
    system: ReductionSystem,
    named: [NcPoly; 12],
    sigma: Morphism,
    tau: Morphism,
    d6: Vec<D6Element>,
}

impl Default for Racah {
    fn default() -> Self {
        Racah::new()
    }
}

impl Racah {
    /// Build the context with the default fuel bound.
    pub fn new() -> Racah {
        Racah::with_fuel(DEFAULT_FUEL).expect("default fuel covers the built-in elements")
    }

    pub fn with_fuel(fuel: u64) -> Result<Racah, RewriteError> {
        let system = ReductionSystem::with_fuel(fuel);

        let a = NcPoly::letter(Letter::A);
        let b = NcPoly::letter(Letter::B);
        let d = NcPoly::letter(Letter::D);
        let al = NcPoly::letter(Letter::Alpha);
        let de = NcPoly::letter(Letter::Delta);
        let be = NcPoly::letter(Letter::Beta);
        let c = &de - &a - &b;
        let ga = -(&al + &be);

        let half = ratio(1, 2);
        let omega_a = system.reduce(
            &(d.pow(2)
                + (&b * &a * &c + &c * &a * &b).scaled(&half)
                + a.pow(2)
                + &b * &ga
                - &c * &be
                - &a * &de),
        )?;
        let omega_b = system.reduce(
            &(d.pow(2)
                + (&c * &b * &a + &a * &b * &c).scaled(&half)
                + b.pow(2)
                + &c * &al
                - &a * &ga
                - &b * &de),
        )?;
        let omega_c = system.reduce(
            &(d.pow(2)
                + (&a * &c * &b + &b * &c * &a).scaled(&half)
                + c.pow(2)
                + &a * &be
                - &b * &al
                - &c * &de),
        )?;
        // The rearranged form of Omega_C: the class representative.
        let two = NcPoly::one().scaled(&scalar(2));
        let cas_rep = system.reduce(
            &(d.pow(2)
                + a.pow(2)
                + b.pow(2)
                + ((&de + &two) * anticommutator(&a, &b)
                    - anticommutator(&a.pow(2), &b)
                    - anticommutator(&a, &b.pow(2)))
                .scaled(&half)
                + &a * (&be - &de)
                - &b * (&de + &al)),
        )?;

        let named = [
            a.clone(),
            b.clone(),
            c.clone(),
            d.clone(),
            al.clone(),
            be.clone(),
            ga.clone(),
            de.clone(),
            omega_a,
            omega_b,
            omega_c,
            cas_rep,
        ];

        let sigma = Morphism::new(
            [b.clone(), d.clone(), a.clone(), -&be, de.clone(), -&al],
            true,
        );
        let tau = Morphism::new(
            [b.clone(), -&d, c.clone(), be.clone(), de.clone(), ga.clone()],
            true,
        );

        let mut racah = Racah {
            system,
            named,
            sigma,
            tau,
            d6: Vec::new(),
        };
        let mut tau_pows = vec![Morphism::identity()];
        for _ in 1..6 {
            let next = racah.compose(&racah.tau, tau_pows.last().unwrap())?;
            tau_pows.push(next);
        }
        let mut d6 = Vec::with_capacity(12);
        for (reflected, base) in [(false, None), (true, Some(&racah.sigma))] {
            for (power, tp) in tau_pows.iter().enumerate() {
                let realized = match base {
                    None => tp.clone(),
                    Some(s) => racah.compose(s, tp)?,
                };
                d6.push(D6Element {
                    reflected,
                    power: power as u8,
                    realized,
                });
            }
        }
        racah.d6 = d6;
        Ok(racah)
    }

    pub fn system(&self) -> &ReductionSystem {
        &self.system
    }

    /// Convenience passthrough to the reduction system.
    pub fn reduce(&self, p: &NcPoly) -> Result<NcPoly, RewriteError> {
        self.system.reduce(p)
    }

    /// The named element, in reduced normal form.
    pub fn named(&self, name: Name) -> &NcPoly {
        &self.named[name as usize]
    }

    pub fn sigma(&self) -> &Morphism {
        &self.sigma
    }

    pub fn tau(&self) -> &Morphism {
        &self.tau
    }

    /// Image of `p` under the (anti)homomorphism, reduced to normal form.
    pub fn apply(&self, m: &Morphism, p: &NcPoly) -> Result<NcPoly, RewriteError> {
        self.system.reduce(&m.apply_free(p))
    }

    /// `x -> f(g(x))`, with letter images reduced to normal form.
    pub fn compose(&self, f: &Morphism, g: &Morphism) -> Result<Morphism, RewriteError> {
        let mut images = Vec::with_capacity(6);
        for l in Letter::ALL {
            images.push(self.apply(f, g.image(l))?);
        }
        let images: [NcPoly; 6] = images.try_into().expect("six letters");
        Ok(Morphism::new(images, f.reversing ^ g.reversing))
    }

    /// The group element `sigma^reflected tau^power`, 0 <= power <= 5.
    pub fn d6_element(&self, reflected: bool, power: i64) -> Result<&D6Element, RacahError> {
        if !(0..=5).contains(&power) {
            return Err(RacahError::PowerOutOfRange(power));
        }
        let idx = (reflected as usize) * 6 + power as usize;
        Ok(&self.d6[idx])
    }

    /// All twelve elements, unreflected powers first.
    pub fn d6_elements(&self) -> &[D6Element] {
        &self.d6
    }

    /// The relations of the chosen presentation, rendered as
    /// `lhs - rhs` in the free algebra with `C` and `gamma` expanded.
    /// Every entry reduces to zero.
    pub fn presentation_relations(&self, which: Presentation) -> Vec<NcPoly> {
        let a = NcPoly::letter(Letter::A);
        let b = NcPoly::letter(Letter::B);
        let d = NcPoly::letter(Letter::D);
        let al = NcPoly::letter(Letter::Alpha);
        let de = NcPoly::letter(Letter::Delta);
        let be = NcPoly::letter(Letter::Beta);
        let c = self.named(Name::C).clone();
        let ga = self.named(Name::Gamma).clone();
        let two_d = d.scaled(&scalar(2));

        match which {
            Presentation::Definition => {
                let mut rels = vec![
                    commutator(&a, &b) - &two_d,
                    commutator(&b, &c) - &two_d,
                    commutator(&c, &a) - &two_d,
                ];
                let alpha_expr = commutator(&a, &d) + &a * &c - &b * &a;
                let beta_expr = commutator(&b, &d) + &b * &a - &c * &b;
                let gamma_expr = commutator(&c, &d) + &c * &b - &a * &c;
                let delta_expr = &a + &b + &c;
                rels.push(&alpha_expr - &al);
                rels.push(&beta_expr - &be);
                rels.push(&gamma_expr - &ga);
                rels.push(&delta_expr - &de);
                for central in [&alpha_expr, &beta_expr, &gamma_expr, &delta_expr] {
                    for g in [&a, &b, &c, &d] {
                        rels.push(commutator(central, g));
                    }
                }
                rels
            }
            Presentation::Pres1 => {
                let mut rels = vec![
                    &b * &a - (&a * &b - &two_d),
                    &c * &b - (&b * &c - &two_d),
                    &c * &a - (&a * &c + &two_d),
                    &d * &a - (&a * &d - &b * &a + &a * &c - &al),
                    &d * &b - (&b * &d - &c * &b + &b * &a - &be),
                ];
                for x in [&al, &be] {
                    for g in [&a, &b, &c] {
                        rels.push(commutator(x, g));
                    }
                }
                rels
            }
            Presentation::Pres2 => {
                let mut rels = vec![
                    &b * &a - (&a * &b - &two_d),
                    &d * &a
                        - (&a * &d + &a * &de - a.pow(2) - (&a * &b).scaled(&scalar(2)) + &two_d
                            - &al),
                    &b * &d
                        - (&d * &b + &b * &de - b.pow(2) - (&a * &b).scaled(&scalar(2))
                            + &two_d
                            + &be),
                ];
                for x in [&al, &be, &de] {
                    for g in [&a, &b] {
                        rels.push(commutator(x, g));
                    }
                }
                rels.push(commutator(&al, &de));
                rels.push(commutator(&be, &de));
                rels
            }
            Presentation::Pres3 => {
                let comm_ab = commutator(&a, &b);
                let comm_ba = commutator(&b, &a);
                vec![
                    commutator(&a, &commutator(&a, &comm_ab))
                        - commutator(&a.pow(2), &b).scaled(&scalar(2)),
                    commutator(&b, &commutator(&b, &comm_ba))
                        - commutator(&b.pow(2), &a).scaled(&scalar(2)),
                    commutator(&b, &commutator(&a, &comm_ba))
                        - (commutator(&a, &b.pow(2)).scaled(&scalar(2))
                            - commutator(&b, &a.pow(2)).scaled(&scalar(2))
                            - comm_ab.scaled(&scalar(2)) * &de),
                    commutator(&a, &commutator(&b, &comm_ab))
                        - (commutator(&b, &a.pow(2)).scaled(&scalar(2))
                            - commutator(&a, &b.pow(2)).scaled(&scalar(2))
                            - comm_ba.scaled(&scalar(2)) * &de),
                    commutator(&de, &a),
                    commutator(&de, &b),
                ]
            }
        }
    }

    /// The three alternate expressions for `D`, `alpha`, `beta` in terms of
    /// `A`, `B`, `delta`, as differences that reduce to zero.
    pub fn alternate_identities(&self) -> Vec<NcPoly> {
        let a = NcPoly::letter(Letter::A);
        let b = NcPoly::letter(Letter::B);
        let d = NcPoly::letter(Letter::D);
        let al = NcPoly::letter(Letter::Alpha);
        let de = NcPoly::letter(Letter::Delta);
        let be = NcPoly::letter(Letter::Beta);
        let half = ratio(1, 2);
        let comm_ab = commutator(&a, &b);
        vec![
            &d - &comm_ab.scaled(&half),
            &al - (commutator(&a, &comm_ab).scaled(&half) + &a * &de
                - a.pow(2)
                - anticommutator(&a, &b)),
            &be - (commutator(&b, &comm_ab).scaled(&half) - &b * &de
                + b.pow(2)
                + anticommutator(&a, &b)),
        ]
    }

    /// True iff the normal form of `p` is supported only on words in the
    /// commuting letters `alpha`, `delta`, `beta`.
    pub fn is_central_subalgebra_element(&self, p: &NcPoly) -> Result<bool, RewriteError> {
        let reduced = self.reduce(p)?;
        Ok(reduced
            .support()
            .all(|w| w.letters().iter().all(|l| l.is_central())))
    }

    /// True iff `p` lies in the Casimir class, i.e. differs from the class
    /// representative by an element of the commutative subalgebra.
    pub fn is_casimir(&self, p: &NcPoly) -> Result<bool, RewriteError> {
        self.is_central_subalgebra_element(&(p - self.named(Name::CasRep)))
    }
}

/// Shorthand for building words in tests and callers.
pub fn word_of(letters: &[Letter]) -> Word {
    Word::from_letters(letters.iter().copied())
}
