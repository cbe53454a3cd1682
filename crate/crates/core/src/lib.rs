//! Exact arithmetic for finitely generated left nilpotent braces of class
//! at most two.
//!
//! A (left) brace is a set carrying two group structures, an abelian
//! additive one and a multiplicative one, linked by the distributivity law
//! `a·(b + c) = a·b − a + a·c`. The star operation `a∗b = a·b − a − b`
//! measures the gap between the two structures; everything in this crate
//! lives in the braces where `x∗(y∗z) = 0` always holds (left nilpotency
//! class at most two), which forces every left-nested four-fold star to
//! vanish as well.
//!
//! The centre of the crate is the free such brace on `r` generators. Its
//! elements are integer coordinate vectors over a finite alphabet of basis
//! letters (generators, starred pairs, and two families of starred
//! triples), with the product, inverse, and star given by closed
//! polynomial formulas in the coordinates (see [`element`]). Around it:
//!
//! * [`verify`]: seeded randomized and exhaustive-small suites for every
//!   law the arithmetic relies on, producing machine-readable reports;
//! * [`hom`]: the abstract brace contract, quotients modulo an odd
//!   integer, and the homomorphisms determined freely by generator images;
//! * [`expr`]: a small expression language for brace words and the
//!   canonical textual form.
//!
//! Coefficients are exact everywhere: arbitrary-precision integers in the
//! free brace, canonical residues in the quotients. The arithmetic is
//! generic over the coefficient ring through [`ring::CoeffRing`], with the
//! integer instance as the default type parameter and [`ModElement`] as the
//! alias for the modular one.
//!
//! ```
//! use nilbrace::{Element, Rank};
//!
//! let r = Rank::new(2).unwrap();
//! let x1 = Element::generator(r, 1).unwrap();
//! let x2 = Element::generator(r, 2).unwrap();
//! // x1·x2 = x1 + x2 + x1∗x2
//! assert_eq!(x1.mul(&x2).unwrap().to_string(), "x1 + x2 + x1.2");
//! // the star of two elements never has a generator part
//! assert_eq!(x1.star(&x2).unwrap().to_string(), "x1.2");
//! ```

pub mod element;
pub mod error;
pub mod expr;
pub mod hom;
pub mod index;
pub mod ring;
pub mod verify;

pub use element::Element;
pub use error::Error;
pub use index::{alphabet, dimension, Index, Rank};
pub use ring::{CoeffRing, Integers, OddMod};

/// Element of a quotient brace, coefficients reduced modulo an odd integer.
pub type ModElement = Element<OddMod>;
