//! Seeded randomized and exhaustive-small verification suites for every law
//! the arithmetic relies on, with machine-readable reports.
//!
//! Each suite is a deterministic function of its [`SampleConfig`]: every
//! trial draws its samples from its own stream of a seeded generator, so a
//! report never depends on evaluation order. Failures are data, not errors;
//! suites always run all their trials.
//!
//! The law suites come in two shapes. The engines suffixed `_in` are
//! parametrized: over the [`BraceTarget`] contract where the law only
//! needs the group operations, or over a coordinate brace where it
//! inspects supports. That lets the same suites run against the quotient
//! braces and against broken fixtures. The plain `check_*` functions are
//! the integer free-brace instances.

pub mod unnormalized;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::element::Element;
use crate::hom::{BraceTarget, CoordBrace, FreeBrace};
use crate::index::{alphabet, Index, Rank};
use crate::ring::{CoeffRing, Integers};

pub use unnormalized::{raw_alphabet, RawIndex, UnnormalizedElement};

/// Configuration of a randomized suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SampleConfig {
    pub rank: Rank,
    pub trials: u64,
    /// Coordinates are drawn uniformly from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: u32,
    pub seed: u64,
}

impl SampleConfig {
    pub fn new(rank: Rank, trials: u64, coeff_bound: u32, seed: u64) -> Self {
        SampleConfig {
            rank,
            trials,
            coeff_bound,
            seed,
        }
    }

    /// The generator for one trial: the seeded stream indexed by the trial,
    /// so trials can be evaluated in any order with identical results.
    pub fn rng_for_trial(&self, trial: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial.wrapping_add(1));
        rng
    }
}

/// One falsified law instance.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub trial: u64,
    pub law: String,
    /// The sampled operands, in canonical text.
    pub inputs: Vec<String>,
    pub expected: String,
    pub got: String,
}

/// Outcome of one suite. Empty failures is exactly "the suite passed".
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub config: serde_json::Value,
    pub trials: u64,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(
        suite: impl Into<String>,
        config: serde_json::Value,
        trials: u64,
        failures: Vec<Failure>,
    ) -> Self {
        Report {
            suite: suite.into(),
            config,
            trials,
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

/// Random carrier values for the law suites.
pub trait SampleTarget: BraceTarget {
    /// A value with coordinates (or the target's analogue) drawn uniformly
    /// from `[-bound, bound]`.
    fn sample<G: Rng>(&self, rng: &mut G, bound: u32) -> Self::Value;

    /// A value in the square of the brace, i.e. with no generator part.
    /// Defaults to a star of two samples, which always lands there.
    fn sample_square<G: Rng>(&self, rng: &mut G, bound: u32) -> Self::Value {
        let a = self.sample(rng, bound);
        let b = self.sample(rng, bound);
        self.star(&a, &b)
    }
}

fn sample_int<G: Rng>(rng: &mut G, bound: u32) -> i64 {
    let b = i64::from(bound);
    rng.gen_range(-b..=b)
}

impl<R: CoeffRing> SampleTarget for CoordBrace<R> {
    fn sample<G: Rng>(&self, rng: &mut G, bound: u32) -> Element<R> {
        let coords: Vec<(Index, i64)> = alphabet(self.rank())
            .into_iter()
            .map(|idx| (idx, sample_int(rng, bound)))
            .collect();
        Element::from_int_coords(self.ring().clone(), self.rank(), coords)
            .expect("alphabet indices are valid")
    }

    fn sample_square<G: Rng>(&self, rng: &mut G, bound: u32) -> Element<R> {
        let coords: Vec<(Index, i64)> = alphabet(self.rank())
            .into_iter()
            .filter(|idx| !idx.is_generator())
            .map(|idx| (idx, sample_int(rng, bound)))
            .collect();
        Element::from_int_coords(self.ring().clone(), self.rank(), coords)
            .expect("alphabet indices are valid")
    }
}

struct Checker<'t, T: BraceTarget> {
    target: &'t T,
    failures: Vec<Failure>,
}

impl<'t, T: BraceTarget> Checker<'t, T> {
    fn new(target: &'t T) -> Self {
        Checker {
            target,
            failures: Vec::new(),
        }
    }

    fn eq(
        &mut self,
        trial: u64,
        law: &str,
        inputs: &[&T::Value],
        got: &T::Value,
        expected: &T::Value,
    ) {
        if !self.target.equals(got, expected) {
            self.failures.push(Failure {
                trial,
                law: law.to_string(),
                inputs: inputs.iter().map(|v| self.target.describe(v)).collect(),
                expected: self.target.describe(expected),
                got: self.target.describe(got),
            });
        }
    }
}

fn config_json<T: BraceTarget>(target: &T, cfg: &SampleConfig) -> serde_json::Value {
    let mut v = serde_json::to_value(cfg).expect("config serializes");
    v.as_object_mut()
        .unwrap()
        .insert("target".to_string(), target.label().into());
    v
}

/// Group laws of both structures and the brace distributivity
/// `a·(b+c) = a·b − a + a·c`, on sampled triples.
pub fn check_axioms_in<T: SampleTarget>(target: &T, cfg: &SampleConfig) -> Report {
    let mut ck = Checker::new(target);
    let zero = target.zero();
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng_for_trial(trial);
        let a = target.sample(&mut rng, cfg.coeff_bound);
        let b = target.sample(&mut rng, cfg.coeff_bound);
        let c = target.sample(&mut rng, cfg.coeff_bound);

        let t = target;
        ck.eq(
            trial,
            "add-assoc",
            &[&a, &b, &c],
            &t.add(&t.add(&a, &b), &c),
            &t.add(&a, &t.add(&b, &c)),
        );
        ck.eq(trial, "add-comm", &[&a, &b], &t.add(&a, &b), &t.add(&b, &a));
        ck.eq(trial, "add-zero", &[&a], &t.add(&a, &zero), &a);
        ck.eq(trial, "add-neg", &[&a], &t.add(&a, &t.neg(&a)), &zero);

        ck.eq(
            trial,
            "mul-assoc",
            &[&a, &b, &c],
            &t.mul(&t.mul(&a, &b), &c),
            &t.mul(&a, &t.mul(&b, &c)),
        );
        ck.eq(trial, "mul-zero-left", &[&a], &t.mul(&zero, &a), &a);
        ck.eq(trial, "mul-zero-right", &[&a], &t.mul(&a, &zero), &a);
        ck.eq(trial, "mul-inv-right", &[&a], &t.mul(&a, &t.inv(&a)), &zero);
        ck.eq(trial, "mul-inv-left", &[&a], &t.mul(&t.inv(&a), &a), &zero);

        let lhs = t.mul(&a, &t.add(&b, &c));
        let rhs = t.add(&t.sub(&t.mul(&a, &b), &a), &t.mul(&a, &c));
        ck.eq(trial, "distributivity", &[&a, &b, &c], &lhs, &rhs);
    }
    Report::new("axioms", config_json(target, cfg), cfg.trials, ck.failures)
}

/// The seven star identities, including `c^m = m·c` for `c` in the square
/// of the brace with `m` in `[-10, 10]`.
pub fn check_star_identities_in<T: SampleTarget>(target: &T, cfg: &SampleConfig) -> Report {
    let mut ck = Checker::new(target);
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng_for_trial(trial);
        let a = target.sample(&mut rng, cfg.coeff_bound);
        let b = target.sample(&mut rng, cfg.coeff_bound);
        let c = target.sample(&mut rng, cfg.coeff_bound);
        let sq = target.sample_square(&mut rng, cfg.coeff_bound);

        let t = target;
        // (ab)∗c = a∗(b∗c) + b∗c + a∗c
        let lhs = t.star(&t.mul(&a, &b), &c);
        let bc = t.star(&b, &c);
        let rhs = t.add(&t.add(&t.star(&a, &bc), &bc), &t.star(&a, &c));
        ck.eq(trial, "eq1-star-of-product", &[&a, &b, &c], &lhs, &rhs);

        // a∗(b+c) = a∗b + a∗c
        ck.eq(
            trial,
            "eq2-star-additive",
            &[&a, &b, &c],
            &t.star(&a, &t.add(&b, &c)),
            &t.add(&t.star(&a, &b), &t.star(&a, &c)),
        );

        // a + b = ab − a∗b
        ck.eq(
            trial,
            "eq3-sum-from-product",
            &[&a, &b],
            &t.add(&a, &b),
            &t.sub(&t.mul(&a, &b), &t.star(&a, &b)),
        );

        // (ab)∗c = a∗c + b∗c
        ck.eq(
            trial,
            "eq4-product-star-splits",
            &[&a, &b, &c],
            &t.star(&t.mul(&a, &b), &c),
            &t.add(&t.star(&a, &c), &t.star(&b, &c)),
        );

        // a⁻¹∗c = −(a∗c)
        ck.eq(
            trial,
            "eq5-inverse-star",
            &[&a, &c],
            &t.star(&t.inv(&a), &c),
            &t.neg(&t.star(&a, &c)),
        );

        // ac = a + c for c in the square of the brace
        ck.eq(
            trial,
            "eq6-square-part-translates",
            &[&a, &sq],
            &t.mul(&a, &sq),
            &t.add(&a, &sq),
        );
        // and there, c^m = m·c
        for m in -10i64..=10 {
            let m = BigInt::from(m);
            ck.eq(
                trial,
                "eq6-square-part-powers",
                &[&sq],
                &t.power(&sq, &m),
                &t.scale(&m, &sq),
            );
        }

        // a + b = ab(a∗b)⁻¹
        ck.eq(
            trial,
            "eq7-sum-as-product",
            &[&a, &b],
            &t.add(&a, &b),
            &t.mul(&t.mul(&a, &b), &t.inv(&t.star(&a, &b))),
        );
    }
    Report::new("star", config_json(target, cfg), cfg.trials, ck.failures)
}

/// Left nilpotency of class 2, right nilpotency of class 3, and the span
/// containments visible in coordinates: a double star lands in the third
/// level, the pair part stars into the third level, the third-level part
/// stars to zero.
pub fn check_nilpotency_in<R: CoeffRing>(brace: &CoordBrace<R>, cfg: &SampleConfig) -> Report {
    let mut ck = Checker::new(brace);
    let zero = brace.zero();
    let mut span_failures: Vec<Failure> = Vec::new();
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng_for_trial(trial);
        let w = brace.sample(&mut rng, cfg.coeff_bound);
        let x = brace.sample(&mut rng, cfg.coeff_bound);
        let y = brace.sample(&mut rng, cfg.coeff_bound);
        let z = brace.sample(&mut rng, cfg.coeff_bound);

        ck.eq(
            trial,
            "left-class-2",
            &[&x, &y, &z],
            &x.star(&y.star(&z).expect("same rank")).expect("same rank"),
            &zero,
        );

        let wx = w.star(&x).expect("same rank");
        let wxy = wx.star(&y).expect("same rank");
        ck.eq(
            trial,
            "right-class-3",
            &[&w, &x, &y, &z],
            &wxy.star(&z).expect("same rank"),
            &zero,
        );

        let xy = x.star(&y).expect("same rank");
        let xyz = xy.star(&z).expect("same rank");
        if !xyz.support().all(|(idx, _)| idx.is_third_level()) {
            span_failures.push(Failure {
                trial,
                law: "double-star-in-third-level".to_string(),
                inputs: vec![x.to_string(), y.to_string(), z.to_string()],
                expected: "support within the third-level letters".to_string(),
                got: xyz.to_string(),
            });
        }

        let (_, l2, l3) = x.decompose();
        for k in cfg.rank.generators() {
            let gen = Element::basis_in(brace.ring().clone(), cfg.rank, Index::Gen(k))
                .expect("generator is valid");
            let s = l2.star(&gen).expect("same rank");
            if !s.support().all(|(idx, _)| idx.is_third_level()) {
                span_failures.push(Failure {
                    trial,
                    law: "pair-part-star-in-third-level".to_string(),
                    inputs: vec![l2.to_string(), gen.to_string()],
                    expected: "support within the third-level letters".to_string(),
                    got: s.to_string(),
                });
            }
        }
        ck.eq(
            trial,
            "third-level-part-star-vanishes",
            &[&l3, &y],
            &l3.star(&y).expect("same rank"),
            &zero,
        );
    }
    let mut failures = ck.failures;
    failures.extend(span_failures);
    failures.sort_by_key(|f| f.trial);
    Report::new("nilpotency", config_json(brace, cfg), cfg.trials, failures)
}

/// Exhaustive symmetry of the folded triples: for all `i < j` and all `k`,
/// `(x_j∗x_i)∗x_k = (x_i∗x_j)∗x_k`, and both are the triple basis letter.
pub fn check_symmetry_in<R: CoeffRing>(brace: &CoordBrace<R>) -> Report {
    let rank = brace.rank();
    let mut failures = Vec::new();
    let mut trials = 0;
    let gen = |i| {
        Element::basis_in(brace.ring().clone(), rank, Index::Gen(i)).expect("generator is valid")
    };
    for i in rank.generators() {
        for j in i + 1..=rank.get() {
            for k in rank.generators() {
                let folded = gen(j)
                    .star(&gen(i))
                    .and_then(|p| p.star(&gen(k)))
                    .expect("same rank");
                let canonical = gen(i)
                    .star(&gen(j))
                    .and_then(|p| p.star(&gen(k)))
                    .expect("same rank");
                let letter = Element::basis_in(brace.ring().clone(), rank, Index::Triple(i, j, k))
                    .expect("triple is valid");
                for (law, got) in [("triple-symmetry", &folded), ("triple-letter", &canonical)] {
                    if *got != letter {
                        failures.push(Failure {
                            trial: trials,
                            law: law.to_string(),
                            inputs: vec![format!("i={i}, j={j}, k={k}")],
                            expected: letter.to_string(),
                            got: got.to_string(),
                        });
                    }
                }
                trials += 1;
            }
        }
    }
    Report::new(
        "symmetry",
        json!({ "rank": rank, "target": brace.label(), "exhaustive": true }),
        trials,
        failures,
    )
}

/// Folding the unnormalized coordinates commutes with multiplication:
/// `fold(x·y) = fold(x)·fold(y)`, and folding is additive.
pub fn check_fold_oracle_in<R: CoeffRing>(brace: &CoordBrace<R>, cfg: &SampleConfig) -> Report {
    let mut ck = Checker::new(brace);
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng_for_trial(trial);
        let x = UnnormalizedElement::sample_in(
            brace.ring().clone(),
            cfg.rank,
            cfg.coeff_bound,
            &mut rng,
        );
        let y = UnnormalizedElement::sample_in(
            brace.ring().clone(),
            cfg.rank,
            cfg.coeff_bound,
            &mut rng,
        );
        let folded_product = x.mul(&y).expect("same rank").fold();
        let product_of_folds = x.fold().mul(&y.fold()).expect("same rank");
        ck.eq(
            trial,
            "fold-commutes-with-product",
            &[&x.fold(), &y.fold()],
            &folded_product,
            &product_of_folds,
        );
        ck.eq(
            trial,
            "fold-is-additive",
            &[&x.fold(), &y.fold()],
            &x.add(&y).expect("same rank").fold(),
            &x.fold().add(&y.fold()).expect("same rank"),
        );
    }
    Report::new("fold", config_json(brace, cfg), cfg.trials, ck.failures)
}

/// The closed forms against their direct counterparts: powers, scalar
/// stars, generator linear combinations, and `m·a = a^m (a∗a)^{−m(m−1)/2}`.
pub fn check_closed_forms_in<R: CoeffRing>(brace: &CoordBrace<R>, cfg: &SampleConfig) -> Report {
    let mut ck = Checker::new(brace);
    let rank = cfg.rank;
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng_for_trial(trial);
        let a = brace.sample(&mut rng, cfg.coeff_bound);
        let c = brace.sample(&mut rng, cfg.coeff_bound);

        for m in -10i64..=10 {
            ck.eq(
                trial,
                "power-closed-form",
                &[&a],
                &a.power_closed_form(m),
                &a.power(m),
            );
            // m·a = a^m (a∗a)^s with s = −m(m−1)/2
            let s = -Integers.choose2(&BigInt::from(m));
            let via_powers = a
                .power(m)
                .mul(&a.star(&a).expect("same rank").power(s))
                .expect("same rank");
            ck.eq(trial, "multiple-as-powers", &[&a], &a.smul(m), &via_powers);
        }

        let m = sample_int(&mut rng, 10);
        let n = sample_int(&mut rng, 10);
        let closed = Element::scalar_star(m, &a, n, &c).expect("same rank");
        let direct = a.smul(m).star(&c.smul(n)).expect("same rank");
        ck.eq(trial, "scalar-star", &[&a, &c], &closed, &direct);

        let len = rng.gen_range(1..=rank.get());
        let coeffs: Vec<BigInt> = (0..len)
            .map(|_| BigInt::from(sample_int(&mut rng, cfg.coeff_bound)))
            .collect();
        let z = BigInt::from(sample_int(&mut rng, cfg.coeff_bound));
        let k = rng.gen_range(1..=rank.get());
        let closed = Element::lincomb_star_in(brace.ring().clone(), rank, &coeffs, &z, k)
            .expect("k in range");
        let mut combo = brace.zero();
        for (pos, n_i) in coeffs.iter().enumerate() {
            let x_i = Element::basis_in(brace.ring().clone(), rank, Index::Gen(pos as u32 + 1))
                .expect("generator is valid");
            combo = combo.add(&x_i.smul(n_i.clone())).expect("same rank");
        }
        let x_k = Element::basis_in(brace.ring().clone(), rank, Index::Gen(k))
            .expect("generator is valid");
        let direct = combo.star(&x_k.smul(z)).expect("same rank");
        ck.eq(trial, "lincomb-star", &[&combo, &x_k], &closed, &direct);
    }
    Report::new(
        "closed-forms",
        config_json(brace, cfg),
        cfg.trials,
        ck.failures,
    )
}

/// Exhaustive rank-1 corner: every pairwise law on coordinates in
/// `[-2, 2]`, every three- and four-operand law on coordinates in
/// `[-1, 1]` (the wider box would make the operand tuples too many).
/// The decided bounds are recorded in the report config.
pub fn check_exhaustive_r1() -> Report {
    let rank = Rank::new(1).expect("1 is a valid rank");
    let brace = FreeBrace::new(rank);
    let zero = brace.zero();
    let elements = |bound: i64| -> Vec<Element> {
        let mut out = Vec::new();
        for g in -bound..=bound {
            for p in -bound..=bound {
                for t in -bound..=bound {
                    out.push(
                        Element::from_int_coords(
                            Integers,
                            rank,
                            [
                                (Index::Gen(1), g),
                                (Index::Pair(1, 1), p),
                                (Index::TripleRep(1, 1), t),
                            ],
                        )
                        .expect("indices are valid"),
                    );
                }
            }
        }
        out
    };
    let wide = elements(2);
    let small = elements(1);
    let mut ck = Checker::new(&brace);
    let mut trials = 0u64;

    for a in &wide {
        ck.eq(
            trials,
            "mul-inv-right",
            &[a],
            &a.mul(&a.inv()).unwrap(),
            &zero,
        );
        ck.eq(
            trials,
            "mul-inv-left",
            &[a],
            &a.inv().mul(a).unwrap(),
            &zero,
        );
        let (_, l2, l3) = a.decompose();
        let sq = l2.add(&l3).unwrap();
        for m in -5i64..=5 {
            ck.eq(
                trials,
                "eq6-square-part-powers",
                &[&sq],
                &sq.power(m),
                &sq.smul(m),
            );
        }
        trials += 1;
    }

    for a in &wide {
        for b in &wide {
            ck.eq(
                trials,
                "add-comm",
                &[a, b],
                &a.add(b).unwrap(),
                &b.add(a).unwrap(),
            );
            ck.eq(
                trials,
                "eq3-sum-from-product",
                &[a, b],
                &a.add(b).unwrap(),
                &a.mul(b).unwrap().sub(&a.star(b).unwrap()).unwrap(),
            );
            ck.eq(
                trials,
                "eq7-sum-as-product",
                &[a, b],
                &a.add(b).unwrap(),
                &a.mul(b).unwrap().mul(&a.star(b).unwrap().inv()).unwrap(),
            );
            ck.eq(
                trials,
                "product-inverse-reverses",
                &[a, b],
                &a.mul(b).unwrap().inv(),
                &b.inv().mul(&a.inv()).unwrap(),
            );
            if !a
                .star(b)
                .unwrap()
                .support()
                .all(|(idx, _)| !idx.is_generator())
            {
                ck.failures.push(Failure {
                    trial: trials,
                    law: "star-has-no-generator-part".to_string(),
                    inputs: vec![a.to_string(), b.to_string()],
                    expected: "no generator coordinates".to_string(),
                    got: a.star(b).unwrap().to_string(),
                });
            }
            trials += 1;
        }
    }

    for a in &small {
        for b in &small {
            for c in &small {
                ck.eq(
                    trials,
                    "mul-assoc",
                    &[a, b, c],
                    &a.mul(b).unwrap().mul(c).unwrap(),
                    &a.mul(&b.mul(c).unwrap()).unwrap(),
                );
                ck.eq(
                    trials,
                    "distributivity",
                    &[a, b, c],
                    &a.mul(&b.add(c).unwrap()).unwrap(),
                    &a.mul(b)
                        .unwrap()
                        .sub(a)
                        .unwrap()
                        .add(&a.mul(c).unwrap())
                        .unwrap(),
                );
                let bc = b.star(c).unwrap();
                ck.eq(
                    trials,
                    "eq1-star-of-product",
                    &[a, b, c],
                    &a.mul(b).unwrap().star(c).unwrap(),
                    &a.star(&bc)
                        .unwrap()
                        .add(&bc)
                        .unwrap()
                        .add(&a.star(c).unwrap())
                        .unwrap(),
                );
                ck.eq(
                    trials,
                    "eq2-star-additive",
                    &[a, b, c],
                    &a.star(&b.add(c).unwrap()).unwrap(),
                    &a.star(b).unwrap().add(&a.star(c).unwrap()).unwrap(),
                );
                ck.eq(
                    trials,
                    "eq4-product-star-splits",
                    &[a, b, c],
                    &a.mul(b).unwrap().star(c).unwrap(),
                    &a.star(c).unwrap().add(&b.star(c).unwrap()).unwrap(),
                );
                ck.eq(
                    trials,
                    "left-class-2",
                    &[a, b, c],
                    &a.star(&bc).unwrap(),
                    &zero,
                );
                trials += 1;
            }
        }
    }

    // four-operand law, layered so the inner stars are shared
    let mut pair_stars = Vec::with_capacity(small.len() * small.len());
    for w in &small {
        for x in &small {
            pair_stars.push(w.star(x).unwrap());
        }
    }
    for wx in &pair_stars {
        for y in &small {
            let wxy = wx.star(y).unwrap();
            for z in &small {
                ck.eq(
                    trials,
                    "right-class-3",
                    &[wx, y, z],
                    &wxy.star(z).unwrap(),
                    &zero,
                );
                trials += 1;
            }
        }
    }

    Report::new(
        "exhaustive",
        json!({
            "rank": 1,
            "pair_coeff_range": [-2, 2],
            "triple_coeff_range": [-1, 1],
            "quadruple_coeff_range": [-1, 1],
            "target": brace.label(),
        }),
        trials,
        ck.failures,
    )
}

/// Free-brace instances of the suites.
pub fn check_axioms(cfg: &SampleConfig) -> Report {
    check_axioms_in(&FreeBrace::new(cfg.rank), cfg)
}

pub fn check_star_identities(cfg: &SampleConfig) -> Report {
    check_star_identities_in(&FreeBrace::new(cfg.rank), cfg)
}

pub fn check_nilpotency(cfg: &SampleConfig) -> Report {
    check_nilpotency_in(&FreeBrace::new(cfg.rank), cfg)
}

pub fn check_symmetry(rank: Rank) -> Report {
    check_symmetry_in(&FreeBrace::new(rank))
}

pub fn check_fold_oracle(cfg: &SampleConfig) -> Report {
    check_fold_oracle_in(&FreeBrace::new(cfg.rank), cfg)
}

pub fn check_closed_forms(cfg: &SampleConfig) -> Report {
    check_closed_forms_in(&FreeBrace::new(cfg.rank), cfg)
}

/// Names accepted by [`run_named`], in the order [`run_all`] uses.
pub const SUITE_NAMES: [&str; 7] = [
    "axioms",
    "star",
    "nilpotency",
    "symmetry",
    "fold",
    "closed-forms",
    "exhaustive",
];

/// Runs one suite by name; `None` for an unknown name.
pub fn run_named(name: &str, cfg: &SampleConfig) -> Option<Report> {
    match name {
        "axioms" => Some(check_axioms(cfg)),
        "star" => Some(check_star_identities(cfg)),
        "nilpotency" => Some(check_nilpotency(cfg)),
        "symmetry" => Some(check_symmetry(cfg.rank)),
        "fold" => Some(check_fold_oracle(cfg)),
        "closed-forms" => Some(check_closed_forms(cfg)),
        "exhaustive" => Some(check_exhaustive_r1()),
        _ => None,
    }
}

/// Every suite, in a fixed order.
pub fn run_all(cfg: &SampleConfig) -> Vec<Report> {
    SUITE_NAMES
        .iter()
        .map(|name| run_named(name, cfg).expect("known name"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn rk(r: u32) -> Rank {
        Rank::new(r).unwrap()
    }

    fn cfg(r: u32, trials: u64, bound: u32, seed: u64) -> SampleConfig {
        SampleConfig::new(rk(r), trials, bound, seed)
    }

    #[test]
    fn all_suites_pass_on_the_free_brace() {
        let config = cfg(3, 60, 8, 42);
        for report in run_all(&config) {
            assert!(
                report.passed(),
                "suite {} failed: {:?}",
                report.suite,
                report.failures.first()
            );
            assert_eq!(report.failures.is_empty(), report.passed());
        }
    }

    #[test]
    fn zero_bound_samples_are_all_zero() {
        let report = check_axioms(&cfg(1, 1, 0, 0));
        assert!(report.passed());
        let brace = FreeBrace::new(rk(1));
        let mut rng = cfg(1, 1, 0, 0).rng_for_trial(0);
        assert!(brace.sample(&mut rng, 0).is_zero());
    }

    #[test]
    fn reports_are_deterministic() {
        let config = cfg(2, 25, 10, 7);
        let a = check_star_identities(&config).to_json();
        let b = check_star_identities(&config).to_json();
        assert_eq!(a, b);
        let c = check_star_identities(&cfg(2, 25, 10, 8)).to_json();
        assert_eq!(b["suite"], c["suite"]);
    }

    #[test]
    fn report_json_shape() {
        let report = check_symmetry(rk(2));
        let v = report.to_json();
        assert_eq!(v["suite"], "symmetry");
        assert!(v["config"]["rank"].is_number());
        assert!(v["failures"].as_array().unwrap().is_empty());
        assert!(v["trials"].as_u64().unwrap() > 0);
    }

    #[test]
    fn symmetry_is_vacuous_at_rank_one() {
        let report = check_symmetry(rk(1));
        assert!(report.passed());
        assert_eq!(report.trials, 0);
    }

    #[test]
    fn modular_braces_pass_every_suite() {
        use crate::hom::ModularFreeBrace;
        for m in [3i64, 5, 7, 9] {
            let brace = ModularFreeBrace::with_modulus(rk(2), m).unwrap();
            let config = cfg(2, 40, 10, 13);
            assert!(check_axioms_in(&brace, &config).passed(), "axioms m={m}");
            assert!(
                check_star_identities_in(&brace, &config).passed(),
                "star m={m}"
            );
            assert!(
                check_nilpotency_in(&brace, &config).passed(),
                "nilpotency m={m}"
            );
            assert!(check_symmetry_in(&brace).passed(), "symmetry m={m}");
            assert!(check_fold_oracle_in(&brace, &config).passed(), "fold m={m}");
            assert!(
                check_closed_forms_in(&brace, &config).passed(),
                "closed forms m={m}"
            );
        }
    }

    /// The product with its `d_i e_j` cross term dropped. Wrapping the real
    /// arithmetic this way gives the suites a mutant to falsify.
    struct MissingPairCross {
        rank: Rank,
    }

    impl BraceTarget for MissingPairCross {
        type Value = Element;

        fn zero(&self) -> Element {
            Element::zero(self.rank)
        }

        fn add(&self, a: &Element, b: &Element) -> Element {
            a.add(b).unwrap()
        }

        fn neg(&self, a: &Element) -> Element {
            a.neg()
        }

        fn mul(&self, a: &Element, b: &Element) -> Element {
            let mut correction = Vec::new();
            for i in self.rank.generators() {
                for j in self.rank.generators() {
                    let w = a.coeff(Index::Gen(i)) * b.coeff(Index::Gen(j));
                    correction.push((Index::Pair(i, j), -w));
                }
            }
            let fix = Element::from_int_coords(Integers, self.rank, correction).unwrap();
            a.mul(b).unwrap().add(&fix).unwrap()
        }

        fn inv(&self, a: &Element) -> Element {
            a.inv()
        }

        fn equals(&self, a: &Element, b: &Element) -> bool {
            a == b
        }

        fn describe(&self, a: &Element) -> String {
            a.to_string()
        }

        fn label(&self) -> String {
            "product without the d_i e_j term".to_string()
        }
    }

    impl SampleTarget for MissingPairCross {
        fn sample<G: Rng>(&self, rng: &mut G, bound: u32) -> Element {
            FreeBrace::new(self.rank).sample(rng, bound)
        }
    }

    #[test]
    fn corrupted_product_is_falsified() {
        let broken = MissingPairCross { rank: rk(2) };
        let report = check_axioms_in(&broken, &cfg(2, 60, 5, 23));
        assert!(!report.passed());
        // dropping that term keeps both distributivity and the additive
        // laws; what breaks is the multiplicative group structure
        assert!(report.failures.iter().all(|f| f.law.starts_with("mul-")));
        assert!(report.failures.iter().any(|f| f.law == "mul-assoc"));
        let star_report = check_star_identities_in(&broken, &cfg(2, 40, 5, 23));
        assert!(!star_report.passed());
    }

    #[test]
    fn sample_square_has_no_generator_part() {
        let brace = FreeBrace::new(rk(3));
        let config = cfg(3, 10, 10, 31);
        for trial in 0..config.trials {
            let mut rng = config.rng_for_trial(trial);
            let sq = brace.sample_square(&mut rng, config.coeff_bound);
            assert!(sq.support().all(|(idx, _)| !idx.is_generator()));
        }
    }

    #[test]
    fn unknown_suite_name_is_none() {
        assert!(run_named("nosuch", &cfg(2, 1, 1, 0)).is_none());
        for name in SUITE_NAMES {
            assert!(run_named(name, &cfg(2, 1, 1, 0)).is_some());
        }
    }

    #[test]
    fn exhaustive_corner_passes() {
        let report = check_exhaustive_r1();
        assert!(report.passed(), "{:?}", report.failures.first());
        assert_eq!(report.config["pair_coeff_range"], json!([-2, 2]));
    }

    #[test]
    fn rank_mismatch_errors_are_structural() {
        let a = Element::generator(rk(2), 1).unwrap();
        let b = Element::generator(rk(3), 1).unwrap();
        assert!(matches!(a.star(&b), Err(Error::RankMismatch { .. })));
    }
}
