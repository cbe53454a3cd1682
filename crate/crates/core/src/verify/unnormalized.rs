//! Coordinates in which the two symmetric triple letters are kept separate,
//! and the product table on them.
//!
//! The canonical coordinates store one triple letter per unordered pair
//! `{i, j}`; here `(i, j, k)` and `(j, i, k)` are distinct. The product is
//! the five-branch table
//!
//! ```text
//! z_i   = x_i + y_i
//! z_ij  = x_ij + y_ij + x_i y_j
//! z_iij = x_iij + y_iij + (x_ii − x_i(x_i−1)/2) y_j
//! z_ijk = x_ijk + y_ijk + (x_ij − x_i x_j) y_k      for i < j
//! z_ijk = x_ijk + y_ijk + x_ij y_k                  for j < i
//! ```
//!
//! [`UnnormalizedElement::fold`] merges `(j, i, k)` onto `(i, j, k)`. The
//! folding commutes with multiplication; the fold-oracle suite checks the
//! two routes against each other, so this module is an independent
//! cross-check of the canonical product.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::element::Element;
use crate::error::Error;
use crate::index::{Index, Rank};
use crate::ring::{CoeffRing, Integers};

/// A label of the unnormalized coordinate system. `Triple(i, j, k)` only
/// requires `i ≠ j`; both orders occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RawIndex {
    Gen(u32),
    Pair(u32, u32),
    TripleRep(u32, u32),
    Triple(u32, u32, u32),
}

impl RawIndex {
    pub fn is_valid(&self, rank: Rank) -> bool {
        let ok = |i: u32| i >= 1 && i <= rank.get();
        match *self {
            RawIndex::Gen(i) => ok(i),
            RawIndex::Pair(i, j) | RawIndex::TripleRep(i, j) => ok(i) && ok(j),
            RawIndex::Triple(i, j, k) => ok(i) && ok(j) && ok(k) && i != j,
        }
    }

    /// The canonical label this one folds onto.
    fn fold(self) -> Index {
        match self {
            RawIndex::Gen(i) => Index::Gen(i),
            RawIndex::Pair(i, j) => Index::Pair(i, j),
            RawIndex::TripleRep(i, j) => Index::TripleRep(i, j),
            RawIndex::Triple(i, j, k) => {
                if i < j {
                    Index::Triple(i, j, k)
                } else {
                    Index::Triple(j, i, k)
                }
            }
        }
    }
}

/// Every unnormalized label valid for `rank`, in order.
pub fn raw_alphabet(rank: Rank) -> Vec<RawIndex> {
    let r = rank.get();
    let mut out = Vec::new();
    for i in 1..=r {
        out.push(RawIndex::Gen(i));
    }
    for i in 1..=r {
        for j in 1..=r {
            out.push(RawIndex::Pair(i, j));
        }
    }
    for i in 1..=r {
        for j in 1..=r {
            out.push(RawIndex::TripleRep(i, j));
        }
    }
    for i in 1..=r {
        for j in 1..=r {
            if i == j {
                continue;
            }
            for k in 1..=r {
                out.push(RawIndex::Triple(i, j, k));
            }
        }
    }
    out
}

/// An element in unnormalized coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnnormalizedElement<R: CoeffRing = Integers> {
    rank: Rank,
    ring: R,
    coords: BTreeMap<RawIndex, R::Coeff>,
}

fn accumulate<R: CoeffRing>(
    ring: &R,
    map: &mut BTreeMap<RawIndex, R::Coeff>,
    idx: RawIndex,
    delta: R::Coeff,
) {
    if delta.is_zero() {
        return;
    }
    match map.entry(idx) {
        Entry::Occupied(mut slot) => {
            let sum = ring.add(slot.get(), &delta);
            if sum.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
        Entry::Vacant(slot) => {
            slot.insert(delta);
        }
    }
}

impl<R: CoeffRing> UnnormalizedElement<R> {
    pub fn zero_in(ring: R, rank: Rank) -> Self {
        UnnormalizedElement {
            rank,
            ring,
            coords: BTreeMap::new(),
        }
    }

    pub fn from_int_coords<I, N>(ring: R, rank: Rank, coords: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (RawIndex, N)>,
        N: Into<BigInt>,
    {
        let mut map = BTreeMap::new();
        for (idx, n) in coords {
            if !idx.is_valid(rank) {
                return Err(Error::InvalidIndex {
                    index: idx.fold(),
                    rank,
                });
            }
            accumulate(&ring, &mut map, idx, ring.embed_int(&n.into()));
        }
        Ok(UnnormalizedElement {
            rank,
            ring,
            coords: map,
        })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, idx: RawIndex) -> R::Coeff {
        self.coords
            .get(&idx)
            .cloned()
            .unwrap_or_else(R::Coeff::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (&RawIndex, &R::Coeff)> {
        self.coords.iter()
    }

    /// Uniform coordinates over the full unnormalized alphabet.
    pub fn sample_in<G: Rng>(ring: R, rank: Rank, bound: u32, rng: &mut G) -> Self {
        let b = i64::from(bound);
        let coords: Vec<(RawIndex, i64)> = raw_alphabet(rank)
            .into_iter()
            .map(|idx| (idx, rng.gen_range(-b..=b)))
            .collect();
        Self::from_int_coords(ring, rank, coords).expect("raw alphabet indices are valid")
    }

    fn check_rank(&self, other: &Self) -> Result<(), Error> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            })
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_rank(rhs)?;
        let mut coords = self.coords.clone();
        for (idx, c) in &rhs.coords {
            accumulate(&self.ring, &mut coords, *idx, c.clone());
        }
        Ok(UnnormalizedElement {
            rank: self.rank,
            ring: self.ring.clone(),
            coords,
        })
    }

    /// The five-branch product, keeping `(i, j, k)` and `(j, i, k)` apart.
    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_rank(rhs)?;
        let rg = &self.ring;
        let r = self.rank.get();
        let mut out = self.coords.clone();
        for (idx, c) in &rhs.coords {
            accumulate(rg, &mut out, *idx, c.clone());
        }
        for t in 1..=r {
            let Some(y_t) = rhs.coords.get(&RawIndex::Gen(t)) else {
                continue;
            };
            for i in 1..=r {
                let x_i = self.coeff(RawIndex::Gen(i));
                if !x_i.is_zero() {
                    accumulate(rg, &mut out, RawIndex::Pair(i, t), rg.mul(&x_i, y_t));
                }
                let w = rg.sub(&self.coeff(RawIndex::Pair(i, i)), &rg.choose2(&x_i));
                if !w.is_zero() {
                    accumulate(rg, &mut out, RawIndex::TripleRep(i, t), rg.mul(&w, y_t));
                }
            }
            for i in 1..=r {
                for j in 1..=r {
                    if i == j {
                        continue;
                    }
                    let x_ij = self.coeff(RawIndex::Pair(i, j));
                    let w = if i < j {
                        rg.sub(
                            &x_ij,
                            &rg.mul(&self.coeff(RawIndex::Gen(i)), &self.coeff(RawIndex::Gen(j))),
                        )
                    } else {
                        x_ij
                    };
                    if !w.is_zero() {
                        accumulate(rg, &mut out, RawIndex::Triple(i, j, t), rg.mul(&w, y_t));
                    }
                }
            }
        }
        Ok(UnnormalizedElement {
            rank: self.rank,
            ring: self.ring.clone(),
            coords: out,
        })
    }

    /// Merges each `(j, i, k)` coordinate onto `(i, j, k)` with `i < j`;
    /// the other families copy over.
    pub fn fold(&self) -> Element<R> {
        Element::from_ring_coords(
            self.ring.clone(),
            self.rank,
            self.coords.iter().map(|(idx, c)| (idx.fold(), c.clone())),
        )
        .expect("folded indices are valid")
    }
}

impl UnnormalizedElement<Integers> {
    pub fn zero(rank: Rank) -> Self {
        UnnormalizedElement::zero_in(Integers, rank)
    }
}
