//! Basis labels of the free abelian group underlying the free brace.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Error;

/// Number of generators. Always at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Rank(u32);

impl Rank {
    pub fn new(r: u32) -> Result<Self, Error> {
        if r >= 1 {
            Ok(Rank(r))
        } else {
            Err(Error::InvalidRank { value: r })
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Generator indices `1..=r`.
    pub fn generators(self) -> impl Iterator<Item = u32> {
        1..=self.0
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A basis letter, one of four disjoint families:
///
/// * `Gen(i)`: the generators;
/// * `Pair(i, j)`: the star of two generators;
/// * `TripleRep(i, j)`: the triple letter with repeated leading index,
///   printed `xi.i.j`;
/// * `Triple(i, j, k)` with `i < j`: the canonical representative of the
///   two symmetric triple letters.
///
/// The derived ordering (family first, lexicographic within a family) is the
/// canonical term order used by the textual form and JSON serialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Index {
    Gen(u32),
    Pair(u32, u32),
    TripleRep(u32, u32),
    Triple(u32, u32, u32),
}

impl Index {
    /// All subscripts in `1..=r`, and `i < j` for `Triple`.
    pub fn is_valid(&self, rank: Rank) -> bool {
        let ok = |i: u32| i >= 1 && i <= rank.get();
        match *self {
            Index::Gen(i) => ok(i),
            Index::Pair(i, j) | Index::TripleRep(i, j) => ok(i) && ok(j),
            Index::Triple(i, j, k) => ok(i) && ok(j) && ok(k) && i < j,
        }
    }

    pub fn check(self, rank: Rank) -> Result<Self, Error> {
        if self.is_valid(rank) {
            Ok(self)
        } else {
            Err(Error::InvalidIndex { index: self, rank })
        }
    }

    pub fn is_generator(&self) -> bool {
        matches!(self, Index::Gen(_))
    }

    pub fn is_pair(&self) -> bool {
        matches!(self, Index::Pair(..))
    }

    /// Third level of the alphabet: `TripleRep` and `Triple` letters.
    pub fn is_third_level(&self) -> bool {
        matches!(self, Index::TripleRep(..) | Index::Triple(..))
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Index::Gen(i) => write!(f, "x{i}"),
            Index::Pair(i, j) => write!(f, "x{i}.{j}"),
            Index::TripleRep(i, j) => write!(f, "x{i}.{i}.{j}"),
            Index::Triple(i, j, k) => write!(f, "x{i}.{j}.{k}"),
        }
    }
}

/// Every letter valid for `rank`, in canonical order.
pub fn alphabet(rank: Rank) -> Vec<Index> {
    let r = rank.get();
    let mut out = Vec::new();
    for i in 1..=r {
        out.push(Index::Gen(i));
    }
    for i in 1..=r {
        for j in 1..=r {
            out.push(Index::Pair(i, j));
        }
    }
    for i in 1..=r {
        for j in 1..=r {
            out.push(Index::TripleRep(i, j));
        }
    }
    for i in 1..=r {
        for j in i + 1..=r {
            for k in 1..=r {
                out.push(Index::Triple(i, j, k));
            }
        }
    }
    out
}

/// Size of the alphabet: `r + r^2 + r^2 + r^2(r-1)/2`, which equals
/// `r + r^2(2 + (r-1)/2)` and is the additive rank of the free brace.
pub fn dimension(rank: Rank) -> BigInt {
    let r = BigInt::from(rank.get());
    let r2 = &r * &r;
    // r^2(r-1) is even, the division is exact
    &r + 2u32 * &r2 + &r2 * (&r - 1) / 2
}
