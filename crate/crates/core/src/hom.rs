//! The abstract brace contract, coordinate braces over a coefficient ring,
//! quotients modulo an odd integer, and homomorphisms determined freely by
//! generator images.
//!
//! A choice of `r` images in any brace whose third star power vanishes
//! extends to exactly one homomorphism from the free brace of rank `r`:
//! the pair and triple letters must map to the corresponding iterated stars
//! of the images, and everything else follows by additivity. [`Hom`]
//! implements that map; [`Hom::check`] falsifies the construction when the
//! target violates the vanishing hypothesis instead of assuming it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};

use crate::element::Element;
use crate::error::Error;
use crate::index::{alphabet, Index, Rank};
use crate::ring::{CoeffRing, Integers, OddMod};
use crate::verify::{Failure, Report, SampleConfig, SampleTarget};

/// Contract satisfied by any brace carrier the library can map into: the
/// two group structures over an opaque value type, nothing more. The star
/// operation is derived from the contract, never part of it.
pub trait BraceTarget {
    type Value: Clone + fmt::Debug;

    fn zero(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn inv(&self, a: &Self::Value) -> Self::Value;
    fn equals(&self, a: &Self::Value, b: &Self::Value) -> bool;

    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        self.add(a, &self.neg(b))
    }

    /// `a∗b = ab − a − b`.
    fn star(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        self.sub(&self.mul(a, b), &self.add(a, b))
    }

    /// Additive multiple `n·a` by binary addition chains; coefficients are
    /// unbounded, so no repeated single additions.
    fn scale(&self, n: &BigInt, a: &Self::Value) -> Self::Value {
        if n.sign() == Sign::Minus {
            return self.neg(&self.scale(&-n, a));
        }
        let mut acc = self.zero();
        for pos in (0..n.bits()).rev() {
            acc = self.add(&acc, &acc);
            if n.bit(pos) {
                acc = self.add(&acc, a);
            }
        }
        acc
    }

    /// `m`-fold group power, negative exponents through the inverse.
    fn power(&self, a: &Self::Value, m: &BigInt) -> Self::Value {
        if m.sign() == Sign::Minus {
            return self.inv(&self.power(a, &-m));
        }
        let mut acc = self.zero();
        for pos in (0..m.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if m.bit(pos) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// Canonical text of a carrier value for diagnostics.
    fn describe(&self, a: &Self::Value) -> String {
        format!("{a:?}")
    }

    /// Short name used in suite reports.
    fn label(&self) -> String;
}

/// A coordinate brace: the free brace when the coefficients are the
/// integers, its quotient when they reduce modulo an odd integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordBrace<R: CoeffRing> {
    ring: R,
    rank: Rank,
}

impl<R: CoeffRing> CoordBrace<R> {
    pub fn new_in(ring: R, rank: Rank) -> Self {
        CoordBrace { ring, rank }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn generators(&self) -> Vec<Element<R>> {
        self.rank
            .generators()
            .map(|i| {
                Element::basis_in(self.ring.clone(), self.rank, Index::Gen(i))
                    .expect("generators are valid")
            })
            .collect()
    }
}

/// The free brace itself, seen through the contract.
pub type FreeBrace = CoordBrace<Integers>;

impl FreeBrace {
    pub fn new(rank: Rank) -> Self {
        CoordBrace::new_in(Integers, rank)
    }
}

/// The quotient of the free brace by an odd modulus `m >= 3`.
pub type ModularFreeBrace = CoordBrace<OddMod>;

impl ModularFreeBrace {
    pub fn with_modulus(rank: Rank, modulus: impl Into<BigInt>) -> Result<Self, Error> {
        Ok(CoordBrace::new_in(OddMod::new(modulus)?, rank))
    }

    pub fn modulus(&self) -> &BigInt {
        self.ring.modulus()
    }
}

impl<R: CoeffRing> BraceTarget for CoordBrace<R> {
    type Value = Element<R>;

    fn zero(&self) -> Element<R> {
        Element::zero_in(self.ring.clone(), self.rank)
    }

    fn add(&self, a: &Element<R>, b: &Element<R>) -> Element<R> {
        a.add(b).expect("carriers share the brace rank")
    }

    fn neg(&self, a: &Element<R>) -> Element<R> {
        a.neg()
    }

    fn mul(&self, a: &Element<R>, b: &Element<R>) -> Element<R> {
        a.mul(b).expect("carriers share the brace rank")
    }

    fn inv(&self, a: &Element<R>) -> Element<R> {
        a.inv()
    }

    fn equals(&self, a: &Element<R>, b: &Element<R>) -> bool {
        a == b
    }

    fn describe(&self, a: &Element<R>) -> String {
        a.to_string()
    }

    fn label(&self) -> String {
        format!("rank {} brace over {}", self.rank, self.ring.label())
    }
}

/// Coordinatewise reduction into the quotient with odd modulus `m >= 3`.
/// This is a brace homomorphism; the suites check that rather than assume
/// it. Even moduli are rejected: `d(d-1)/2` does not descend to their
/// residues (for `m = 2`, the lifts 0 and 2 of the same residue give 0
/// and 1).
pub fn reduce_mod(x: &Element, modulus: impl Into<BigInt>) -> Result<Element<OddMod>, Error> {
    let ring = OddMod::new(modulus)?;
    Element::from_int_coords(
        ring,
        x.rank(),
        x.support().map(|(idx, c)| (*idx, c.clone())),
    )
}

/// A brace homomorphism from the free brace into `T`, determined by the
/// images of the generators.
///
/// The letter images are fixed by the generator images:
/// `Pair(i,j) ↦ c_i∗c_j`, `TripleRep(i,j) ↦ (c_i∗c_i)∗c_j`,
/// `Triple(i,j,k) ↦ (c_i∗c_j)∗c_k`; an element maps to the sum of its
/// coordinates times the letter images, with scalar multiples evaluated by
/// addition chains.
#[derive(Clone, Debug)]
pub struct Hom<T: BraceTarget> {
    rank: Rank,
    target: T,
    letters: BTreeMap<Index, T::Value>,
}

impl<T: BraceTarget> Hom<T> {
    /// Builds the homomorphism with `images[i-1]` as the image of the
    /// `i`-th generator. Images need not be distinct or independent.
    pub fn new(target: T, rank: Rank, images: Vec<T::Value>) -> Result<Self, Error> {
        if images.len() != rank.get() as usize {
            return Err(Error::ImageCount {
                expected: rank.get(),
                got: images.len(),
            });
        }
        let c = |i: u32| &images[(i - 1) as usize];
        let mut letters = BTreeMap::new();
        for idx in alphabet(rank) {
            let v = match idx {
                Index::Gen(i) => c(i).clone(),
                Index::Pair(i, j) => target.star(c(i), c(j)),
                Index::TripleRep(i, j) => target.star(&target.star(c(i), c(i)), c(j)),
                Index::Triple(i, j, k) => target.star(&target.star(c(i), c(j)), c(k)),
            };
            letters.insert(idx, v);
        }
        Ok(Hom {
            rank,
            target,
            letters,
        })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn target(&self) -> &T {
        &self.target
    }

    /// Image of a basis letter, `None` when it is invalid for the rank.
    pub fn letter_image(&self, idx: Index) -> Option<&T::Value> {
        self.letters.get(&idx)
    }

    /// Applies the homomorphism to an element of the free brace.
    pub fn apply(&self, x: &Element) -> Result<T::Value, Error> {
        if x.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: x.rank(),
                right: self.rank,
            });
        }
        let mut acc = self.target.zero();
        for (idx, coeff) in x.support() {
            let image = &self.letters[idx];
            acc = self.target.add(&acc, &self.target.scale(coeff, image));
        }
        Ok(acc)
    }

    /// Checks the homomorphism laws on seeded random pairs from the free
    /// brace: additivity, multiplicativity, and the generator images.
    /// Failures are reported, never raised; a target with a non-vanishing
    /// third star power shows up here.
    pub fn check(&self, cfg: &SampleConfig) -> Report {
        let domain = FreeBrace::new(self.rank);
        let mut failures = Vec::new();
        for i in self.rank.generators() {
            let x_i = Element::generator(self.rank, i).expect("generator in range");
            let got = self.apply(&x_i).expect("rank matches");
            let want = &self.letters[&Index::Gen(i)];
            if !self.target.equals(&got, want) {
                failures.push(Failure {
                    trial: 0,
                    law: "generator-image".to_string(),
                    inputs: vec![x_i.to_string()],
                    expected: self.target.describe(want),
                    got: self.target.describe(&got),
                });
            }
        }
        for trial in 0..cfg.trials {
            let mut rng = cfg.rng_for_trial(trial);
            let x = domain.sample(&mut rng, cfg.coeff_bound);
            let y = domain.sample(&mut rng, cfg.coeff_bound);
            let fx = self.apply(&x).expect("rank matches");
            let fy = self.apply(&y).expect("rank matches");

            let sum = self
                .apply(&x.add(&y).expect("same rank"))
                .expect("rank matches");
            let sum_images = self.target.add(&fx, &fy);
            if !self.target.equals(&sum, &sum_images) {
                failures.push(Failure {
                    trial,
                    law: "hom-add".to_string(),
                    inputs: vec![x.to_string(), y.to_string()],
                    expected: self.target.describe(&sum_images),
                    got: self.target.describe(&sum),
                });
            }

            let prod = self
                .apply(&x.mul(&y).expect("same rank"))
                .expect("rank matches");
            let prod_images = self.target.mul(&fx, &fy);
            if !self.target.equals(&prod, &prod_images) {
                failures.push(Failure {
                    trial,
                    law: "hom-mul".to_string(),
                    inputs: vec![x.to_string(), y.to_string()],
                    expected: self.target.describe(&prod_images),
                    got: self.target.describe(&prod),
                });
            }
        }
        Report::new(
            "hom",
            serde_json::json!({
                "rank": self.rank,
                "trials": cfg.trials,
                "coeff_bound": cfg.coeff_bound,
                "seed": cfg.seed,
                "target": self.target.label(),
            }),
            cfg.trials,
            failures,
        )
    }
}
