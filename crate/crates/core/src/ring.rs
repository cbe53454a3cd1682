//! Coefficient rings that brace coordinates live in.
//!
//! The product and inverse formulas of the free brace are polynomial in the
//! coordinates except for one ingredient: the map `d ↦ d(d-1)/2`. Over the
//! integers this is exact because a product of consecutive integers is even.
//! A residue ring supports the same map precisely when 2 is invertible,
//! which is why quotient coefficients are restricted to odd moduli.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An exact commutative ring of coordinates.
///
/// Implementations are value-level ring descriptions: the integers are a
/// unit struct, a residue ring carries its modulus. All operations are pure
/// and every coefficient handed out is in canonical form, so coefficient
/// equality is plain `==`.
pub trait CoeffRing: Clone + Eq + fmt::Debug {
    /// Scalar type of the coordinates.
    type Coeff: Clone + Eq + fmt::Debug + fmt::Display + Zero;

    fn add(&self, a: &Self::Coeff, b: &Self::Coeff) -> Self::Coeff;
    fn sub(&self, a: &Self::Coeff, b: &Self::Coeff) -> Self::Coeff;
    fn neg(&self, a: &Self::Coeff) -> Self::Coeff;
    fn mul(&self, a: &Self::Coeff, b: &Self::Coeff) -> Self::Coeff;

    /// `c(c-1)/2`, evaluated exactly in the ring.
    fn choose2(&self, c: &Self::Coeff) -> Self::Coeff;

    /// Canonical image of an arbitrary-precision integer.
    fn embed_int(&self, n: &BigInt) -> Self::Coeff;

    /// Sign and magnitude of a coefficient as printed by the canonical
    /// textual form. Rings whose canonical representatives are non-negative
    /// keep the default.
    fn sign_split(&self, c: &Self::Coeff) -> (bool, String) {
        (false, c.to_string())
    }

    /// Extra fields this ring contributes to element JSON.
    fn annotate_json(&self, _obj: &mut serde_json::Map<String, serde_json::Value>) {}

    /// Short human-readable name used in suite reports.
    fn label(&self) -> String;
}

/// The ring of integers with arbitrary-precision coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl CoeffRing for Integers {
    type Coeff = BigInt;

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn choose2(&self, c: &BigInt) -> BigInt {
        let prod = c * (c - BigInt::one());
        // product of consecutive integers, always even
        assert!(prod.is_even(), "c(c-1) must be even");
        prod / 2
    }

    fn embed_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }

    fn sign_split(&self, c: &BigInt) -> (bool, String) {
        (c.is_negative(), c.magnitude().to_string())
    }

    fn label(&self) -> String {
        "integers".to_string()
    }
}

/// Residues modulo an odd integer `m >= 3`, stored canonically in `[0, m)`.
///
/// Oddness is not a convenience: shifting a lift by `m` changes `d(d-1)/2`
/// by `m(m-1)/2`, which is a multiple of `m` exactly when `m` is odd. The
/// constructor therefore rejects every even modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddMod {
    modulus: BigInt,
    inv2: BigInt,
}

impl OddMod {
    pub fn new(modulus: impl Into<BigInt>) -> Result<Self, Error> {
        let modulus: BigInt = modulus.into();
        if modulus.is_even() {
            return Err(Error::EvenModulus { modulus });
        }
        if modulus < BigInt::from(3) {
            return Err(Error::ModulusTooSmall { modulus });
        }
        // 2 * (m+1)/2 = m + 1 ≡ 1 (mod m)
        let inv2 = (&modulus + BigInt::one()) / 2;
        Ok(OddMod { modulus, inv2 })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    fn reduce(&self, n: BigInt) -> BigInt {
        n.mod_floor(&self.modulus)
    }
}

impl CoeffRing for OddMod {
    type Coeff = BigInt;

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a + b)
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a - b)
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(-a)
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a * b)
    }

    fn choose2(&self, c: &BigInt) -> BigInt {
        let prod = self.reduce(c * (c - BigInt::one()));
        self.reduce(prod * &self.inv2)
    }

    fn embed_int(&self, n: &BigInt) -> BigInt {
        self.reduce(n.clone())
    }

    fn annotate_json(&self, obj: &mut serde_json::Map<String, serde_json::Value>) {
        let m = match u64::try_from(&self.modulus) {
            Ok(m) => serde_json::Value::from(m),
            Err(_) => serde_json::Value::from(self.modulus.to_string()),
        };
        obj.insert("mod".to_string(), m);
    }

    fn label(&self) -> String {
        format!("integers mod {}", self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn integer_choose2() {
        let cases = [(0, 0), (1, 0), (2, 1), (3, 3), (-1, 1), (-2, 3), (7, 21)];
        for (c, want) in cases {
            assert_eq!(Integers.choose2(&bi(c)), bi(want), "choose2({c})");
        }
    }

    #[test]
    fn odd_modulus_choose2_descends() {
        // the same residue, arbitrary lifts: choose2 must agree
        for m in [3i64, 5, 7, 9, 15] {
            let ring = OddMod::new(m).unwrap();
            for base in -10i64..=10 {
                let a = ring.embed_int(&bi(base));
                for shift in [-2i64, -1, 1, 2, 3] {
                    let lifted = bi(base + shift * m);
                    let expected = ring.embed_int(&Integers.choose2(&lifted));
                    assert_eq!(
                        ring.choose2(&a),
                        expected,
                        "m={m}, base={base}, shift={shift}"
                    );
                }
            }
        }
    }

    #[test]
    fn even_modulus_rejected_with_lift_counterexample() {
        let err = OddMod::new(2).unwrap_err();
        assert!(matches!(err, Error::EvenModulus { .. }));
        // the documented counterexample: lifts 0 and 2 of the residue 0 mod 2
        let c0 = Integers.choose2(&bi(0));
        let c2 = Integers.choose2(&bi(2));
        assert_eq!(c0.mod_floor(&bi(2)), bi(0));
        assert_eq!(c2.mod_floor(&bi(2)), bi(1));
        assert_ne!(c0.mod_floor(&bi(2)), c2.mod_floor(&bi(2)));
    }

    #[test]
    fn small_or_even_moduli_rejected() {
        for m in [0i64, 2, 4, 6, 100] {
            assert!(
                matches!(OddMod::new(m), Err(Error::EvenModulus { .. })),
                "m={m}"
            );
        }
        for m in [1i64, -3, -5] {
            assert!(
                matches!(OddMod::new(m), Err(Error::ModulusTooSmall { .. })),
                "m={m}"
            );
        }
    }

    #[test]
    fn residues_are_canonical() {
        let ring = OddMod::new(5).unwrap();
        assert_eq!(ring.embed_int(&bi(-1)), bi(4));
        assert_eq!(ring.embed_int(&bi(12)), bi(2));
        assert_eq!(ring.neg(&bi(2)), bi(3));
    }
}
