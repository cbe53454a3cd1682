//! Elements of the free brace in canonical coordinates, with the exact
//! closed-form arithmetic on them.
//!
//! An element is a finitely supported coordinate vector over the basis
//! alphabet of [`crate::index`]. Writing `d_i`, `d_ij`, `d_iij`, `d_ijk` for
//! the coordinates of `d` on the four letter families, the group product
//! `f = d·e` is
//!
//! ```text
//! f_i   = d_i + e_i
//! f_ij  = d_ij + e_ij + d_i e_j
//! f_iij = d_iij + e_iij + (d_ii − d_i(d_i−1)/2) e_j
//! f_ijk = d_ijk + e_ijk + (d_ij − d_i d_j + d_ji) e_k        (i < j)
//! ```
//!
//! and the inverse `z = d⁻¹` is
//!
//! ```text
//! z_i   = −d_i
//! z_ij  = d_i d_j − d_ij
//! z_iij = (d_ii − d_i(d_i−1)/2) d_j − d_iij
//! z_ijk = (d_ij − d_i d_j + d_ji) d_k − d_ijk                 (i < j)
//! ```
//!
//! Everything else (star, powers, the scalar star forms) is derived from
//! these two and the coordinatewise addition. All coordinates are exact;
//! the only division anywhere is the halving of `d(d−1)`, which the
//! coefficient ring performs exactly.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::Error;
use crate::index::{Index, Rank};
use crate::ring::{CoeffRing, Integers};

/// A brace element as a normalized sparse coordinate vector.
///
/// Zero coordinates are never stored, so `==` decides equality of brace
/// elements. Values are immutable after construction and all operations are
/// pure functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element<R: CoeffRing = Integers> {
    rank: Rank,
    ring: R,
    coords: BTreeMap<Index, R::Coeff>,
}

/// Cross-term weights of a left factor `d`: the generator coordinates, the
/// `d_ii − d_i(d_i−1)/2` weights, and the `d_ij − d_i d_j + d_ji` weights
/// for `i < j`.
struct CrossWeights<C> {
    gen: Vec<C>,
    rep: Vec<C>,
    tri: Vec<(u32, u32, C)>,
}

fn accumulate<R: CoeffRing>(
    ring: &R,
    map: &mut BTreeMap<Index, R::Coeff>,
    idx: Index,
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

impl<R: CoeffRing> Element<R> {
    /// The common identity element of both group structures.
    pub fn zero_in(ring: R, rank: Rank) -> Self {
        Element {
            rank,
            ring,
            coords: BTreeMap::new(),
        }
    }

    /// The basis element with a single coordinate 1 at `idx`.
    pub fn basis_in(ring: R, rank: Rank, idx: Index) -> Result<Self, Error> {
        idx.check(rank)?;
        let one = ring.embed_int(&BigInt::from(1));
        let mut coords = BTreeMap::new();
        coords.insert(idx, one);
        Ok(Element { rank, ring, coords })
    }

    /// Builds an element from integer coordinates, validating every index,
    /// merging duplicates and dropping zeros.
    pub fn from_int_coords<I, N>(ring: R, rank: Rank, coords: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Index, N)>,
        N: Into<BigInt>,
    {
        let mut map = BTreeMap::new();
        for (idx, n) in coords {
            idx.check(rank)?;
            accumulate(&ring, &mut map, idx, ring.embed_int(&n.into()));
        }
        Ok(Element {
            rank,
            ring,
            coords: map,
        })
    }

    /// Builds an element from coordinates already in the ring.
    pub fn from_ring_coords<I>(ring: R, rank: Rank, coords: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Index, R::Coeff)>,
    {
        let mut map = BTreeMap::new();
        for (idx, c) in coords {
            idx.check(rank)?;
            accumulate(&ring, &mut map, idx, c);
        }
        Ok(Element {
            rank,
            ring,
            coords: map,
        })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Coordinate at `idx`, zero when absent.
    pub fn coeff(&self, idx: Index) -> R::Coeff {
        self.coords
            .get(&idx)
            .cloned()
            .unwrap_or_else(R::Coeff::zero)
    }

    /// Non-zero coordinates in canonical index order.
    pub fn support(&self) -> impl Iterator<Item = (&Index, &R::Coeff)> {
        self.coords.iter()
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
        Ok(Element {
            rank: self.rank,
            ring: self.ring.clone(),
            coords,
        })
    }

    pub fn neg(&self) -> Self {
        let coords = self
            .coords
            .iter()
            .map(|(idx, c)| (*idx, self.ring.neg(c)))
            .collect();
        Element {
            rank: self.rank,
            ring: self.ring.clone(),
            coords,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.add(&rhs.neg())
    }

    /// Additive integer multiple `n·x`.
    pub fn smul(&self, n: impl Into<BigInt>) -> Self {
        let k = self.ring.embed_int(&n.into());
        let mut coords = BTreeMap::new();
        for (idx, c) in &self.coords {
            let scaled = self.ring.mul(c, &k);
            if !scaled.is_zero() {
                coords.insert(*idx, scaled);
            }
        }
        Element {
            rank: self.rank,
            ring: self.ring.clone(),
            coords,
        }
    }

    fn cross_weights(&self) -> CrossWeights<R::Coeff> {
        let rg = &self.ring;
        let r = self.rank.get();
        let gen: Vec<R::Coeff> = (1..=r).map(|i| self.coeff(Index::Gen(i))).collect();
        let rep: Vec<R::Coeff> = (1..=r)
            .map(|i| {
                rg.sub(
                    &self.coeff(Index::Pair(i, i)),
                    &rg.choose2(&gen[(i - 1) as usize]),
                )
            })
            .collect();
        let mut tri = Vec::new();
        for i in 1..=r {
            for j in i + 1..=r {
                let w = rg.add(
                    &rg.sub(
                        &self.coeff(Index::Pair(i, j)),
                        &rg.mul(&gen[(i - 1) as usize], &gen[(j - 1) as usize]),
                    ),
                    &self.coeff(Index::Pair(j, i)),
                );
                if !w.is_zero() {
                    tri.push((i, j, w));
                }
            }
        }
        CrossWeights { gen, rep, tri }
    }

    /// Adds the cross terms of the product formula to `out`, with `self` as
    /// the left factor and `e_t` the right factor's coordinate at `Gen(t)`.
    fn apply_cross(
        &self,
        out: &mut BTreeMap<Index, R::Coeff>,
        weights: &CrossWeights<R::Coeff>,
        t: u32,
        e_t: &R::Coeff,
    ) {
        let rg = &self.ring;
        for i in 1..=self.rank.get() {
            let d_i = &weights.gen[(i - 1) as usize];
            if !d_i.is_zero() {
                accumulate(rg, out, Index::Pair(i, t), rg.mul(d_i, e_t));
            }
            let w = &weights.rep[(i - 1) as usize];
            if !w.is_zero() {
                accumulate(rg, out, Index::TripleRep(i, t), rg.mul(w, e_t));
            }
        }
        for (i, j, w) in &weights.tri {
            accumulate(rg, out, Index::Triple(*i, *j, t), rg.mul(w, e_t));
        }
    }

    /// Group product.
    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_rank(rhs)?;
        let mut out = self.coords.clone();
        for (idx, c) in &rhs.coords {
            accumulate(&self.ring, &mut out, *idx, c.clone());
        }
        let weights = self.cross_weights();
        for t in self.rank.generators() {
            if let Some(e_t) = rhs.coords.get(&Index::Gen(t)) {
                self.apply_cross(&mut out, &weights, t, e_t);
            }
        }
        Ok(Element {
            rank: self.rank,
            ring: self.ring.clone(),
            coords: out,
        })
    }

    /// Group inverse: `mul(x, inv(x)) = mul(inv(x), x) = zero`.
    pub fn inv(&self) -> Self {
        let mut out: BTreeMap<Index, R::Coeff> = self
            .coords
            .iter()
            .map(|(idx, c)| (*idx, self.ring.neg(c)))
            .collect();
        let weights = self.cross_weights();
        for t in self.rank.generators() {
            if let Some(x_t) = self.coords.get(&Index::Gen(t)) {
                self.apply_cross(&mut out, &weights, t, x_t);
            }
        }
        Element {
            rank: self.rank,
            ring: self.ring.clone(),
            coords: out,
        }
    }

    /// Star operation `x∗y = xy − x − y`. The result always has zero
    /// coordinates on the generator letters.
    pub fn star(&self, rhs: &Self) -> Result<Self, Error> {
        let prod = self.mul(rhs)?;
        prod.sub(&self.add(rhs)?)
    }

    /// `m`-fold group power, by repeated multiplication (square and
    /// multiply); negative exponents go through [`Element::inv`]. Kept
    /// independent of [`Element::power_closed_form`] so the two can
    /// cross-check each other.
    pub fn power(&self, m: impl Into<BigInt>) -> Self {
        let m: BigInt = m.into();
        if m.sign() == num_bigint::Sign::Minus {
            return self.power(-m).inv();
        }
        let mut acc = Element::zero_in(self.ring.clone(), self.rank);
        for pos in (0..m.bits()).rev() {
            acc = acc.mul(&acc).expect("same rank");
            if m.bit(pos) {
                acc = acc.mul(self).expect("same rank");
            }
        }
        acc
    }

    /// Closed form of the power: `x^m = m·x + m(m−1)/2 (x∗x)`. Always equal
    /// to [`Element::power`].
    pub fn power_closed_form(&self, m: impl Into<BigInt>) -> Self {
        let m: BigInt = m.into();
        let square = self.star(self).expect("same rank");
        let half = Integers.choose2(&m);
        self.smul(m).add(&square.smul(half)).expect("same rank")
    }

    /// Closed form of `(m·a)∗(n·c) = nm(a∗c) − nm(m−1)/2 ((a∗a)∗c)`.
    pub fn scalar_star(
        m: impl Into<BigInt>,
        a: &Self,
        n: impl Into<BigInt>,
        c: &Self,
    ) -> Result<Self, Error> {
        a.check_rank(c)?;
        let m: BigInt = m.into();
        let n: BigInt = n.into();
        let lead = a.star(c)?.smul(&n * &m);
        let corr = a.star(a)?.star(c)?.smul(n * Integers.choose2(&m));
        lead.sub(&corr)
    }

    /// Closed form of `(Σ n_i x_i) ∗ (z x_k)` over the generators:
    /// `Σ_i (n_i z x_ik − n_i(n_i−1)z/2 x_iik) − Σ_{i<j} n_i n_j z x_ijk`.
    pub fn lincomb_star_in(
        ring: R,
        rank: Rank,
        coeffs: &[BigInt],
        z: &BigInt,
        k: u32,
    ) -> Result<Self, Error> {
        Index::Gen(k).check(rank)?;
        if coeffs.len() > rank.get() as usize {
            return Err(Error::InvalidIndex {
                index: Index::Gen(coeffs.len() as u32),
                rank,
            });
        }
        let mut out = BTreeMap::new();
        for (pos, n_i) in coeffs.iter().enumerate() {
            let i = pos as u32 + 1;
            accumulate(
                &ring,
                &mut out,
                Index::Pair(i, k),
                ring.embed_int(&(n_i * z)),
            );
            let rep = ring.embed_int(&(Integers.choose2(n_i) * z));
            accumulate(&ring, &mut out, Index::TripleRep(i, k), ring.neg(&rep));
            for (qos, n_j) in coeffs.iter().enumerate().skip(pos + 1) {
                let j = qos as u32 + 1;
                let w = ring.embed_int(&(n_i * n_j * z));
                accumulate(&ring, &mut out, Index::Triple(i, j, k), ring.neg(&w));
            }
        }
        Ok(Element {
            rank,
            ring,
            coords: out,
        })
    }

    /// Splits into the generator, pair, and third-level parts; the three
    /// parts sum back to the element.
    pub fn decompose(&self) -> (Self, Self, Self) {
        let mut l1 = BTreeMap::new();
        let mut l2 = BTreeMap::new();
        let mut l3 = BTreeMap::new();
        for (idx, c) in &self.coords {
            let bucket = match idx {
                Index::Gen(_) => &mut l1,
                Index::Pair(..) => &mut l2,
                _ => &mut l3,
            };
            bucket.insert(*idx, c.clone());
        }
        let wrap = |coords| Element {
            rank: self.rank,
            ring: self.ring.clone(),
            coords,
        };
        (wrap(l1), wrap(l2), wrap(l3))
    }

    /// JSON form: `{"rank": r, "coords": [{"idx": [...], "c": "..."}]}`,
    /// coefficients as decimal strings, plus any ring annotation (quotient
    /// elements gain a `"mod"` field).
    pub fn to_json(&self) -> Value {
        let coords: Vec<Value> = self
            .coords
            .iter()
            .map(|(idx, c)| json!({ "idx": index_json(idx), "c": c.to_string() }))
            .collect();
        let mut obj = serde_json::Map::new();
        obj.insert("rank".to_string(), Value::from(self.rank.get()));
        obj.insert("coords".to_string(), Value::from(coords));
        self.ring.annotate_json(&mut obj);
        Value::Object(obj)
    }
}

impl Element<Integers> {
    pub fn zero(rank: Rank) -> Self {
        Element::zero_in(Integers, rank)
    }

    pub fn basis(rank: Rank, idx: Index) -> Result<Self, Error> {
        Element::basis_in(Integers, rank, idx)
    }

    /// The `i`-th generator, `1 <= i <= r`.
    pub fn generator(rank: Rank, i: u32) -> Result<Self, Error> {
        Element::basis(rank, Index::Gen(i))
    }

    pub fn lincomb_star(rank: Rank, coeffs: &[BigInt], z: &BigInt, k: u32) -> Result<Self, Error> {
        Element::lincomb_star_in(Integers, rank, coeffs, z, k)
    }

    /// Parses the JSON form produced by [`Element::to_json`].
    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Json("expected an object".into()))?;
        let rank_raw = obj
            .get("rank")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("missing or non-integer \"rank\"".into()))?;
        let rank = Rank::new(
            u32::try_from(rank_raw).map_err(|_| Error::Json("rank out of range".into()))?,
        )?;
        let entries = obj
            .get("coords")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("missing \"coords\" array".into()))?;
        let mut coords = Vec::with_capacity(entries.len());
        for entry in entries {
            let idx = entry
                .get("idx")
                .ok_or_else(|| Error::Json("coordinate without \"idx\"".into()))
                .and_then(index_from_json)?;
            let digits = entry
                .get("c")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Json("coefficient must be a decimal string".into()))?;
            let n = digits
                .parse::<BigInt>()
                .map_err(|_| Error::Json(format!("bad coefficient {digits:?}")))?;
            coords.push((idx, n));
        }
        Element::from_int_coords(Integers, rank, coords)
    }
}

fn index_json(idx: &Index) -> Value {
    match *idx {
        Index::Gen(i) => json!(["g", i]),
        Index::Pair(i, j) => json!(["p", i, j]),
        Index::TripleRep(i, j) => json!(["tr", i, j]),
        Index::Triple(i, j, k) => json!(["t", i, j, k]),
    }
}

fn index_from_json(v: &Value) -> Result<Index, Error> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json("\"idx\" must be an array".into()))?;
    let kind = arr
        .first()
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Json("\"idx\" must start with a kind tag".into()))?;
    let nums: Vec<u32> = arr[1..]
        .iter()
        .map(|n| {
            n.as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| Error::Json("index subscripts must be small integers".into()))
        })
        .collect::<Result<_, _>>()?;
    match (kind, nums.as_slice()) {
        ("g", [i]) => Ok(Index::Gen(*i)),
        ("p", [i, j]) => Ok(Index::Pair(*i, *j)),
        ("tr", [i, j]) => Ok(Index::TripleRep(*i, *j)),
        ("t", [i, j, k]) => Ok(Index::Triple(*i, *j, *k)),
        _ => Err(Error::Json(format!("bad index {v}"))),
    }
}

impl<R: CoeffRing> fmt::Display for Element<R> {
    /// Canonical textual form: terms in index order, `2 x1 + x1.1 - x1.2.1`,
    /// the zero element printed as `0`. Re-parsing the output through the
    /// expression grammar reproduces the element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        for (pos, (idx, c)) in self.coords.iter().enumerate() {
            let (negative, magnitude) = self.ring.sign_split(c);
            if pos == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if magnitude != "1" {
                write!(f, "{magnitude} ")?;
            }
            write!(f, "{idx}")?;
        }
        Ok(())
    }
}
