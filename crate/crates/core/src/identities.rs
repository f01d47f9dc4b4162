//! Randomized checks of the cochain identities everything else rests on:
//! the `∪_i` coboundary formula, the `Sq²` sum relations, `Sq∘d = d∘Sq`,
//! the suspension formula for `∪_i`, `sd = ds`, vanishing of suspended cup
//! products, and naturality of pullback along the max-vertex map.
//!
//! Each trial draws its own generator from `(seed, suite, trial)`, so a
//! report does not depend on which suites run or in what order.

use std::sync::Arc;

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochain::{cup_with_rule, pullback, sq, Cochain, CohomologySolver, CupRing, Int, SignRule, Z2};
use crate::gf2::BitVec;
use crate::scx::{barycentric_subdivide, build_complex, suspension, ComplexPair, OrderedComplex, Vertex};
use crate::susp::suspend;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Coboundary,
    SquareSum,
    SquareSumCocycle,
    SquareCommutesWithD,
    SuspensionCupInt,
    SuspensionCupMod2,
    SuspensionD,
    SuspendedCupZero,
    Pullback,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Coboundary,
        Suite::SquareSum,
        Suite::SquareSumCocycle,
        Suite::SquareCommutesWithD,
        Suite::SuspensionCupInt,
        Suite::SuspensionCupMod2,
        Suite::SuspensionD,
        Suite::SuspendedCupZero,
        Suite::Pullback,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coboundary => "coboundary",
            Suite::SquareSum => "sq2-sum",
            Suite::SquareSumCocycle => "sq2-sum-cocycle",
            Suite::SquareCommutesWithD => "sq-d",
            Suite::SuspensionCupInt => "suspension-cup-int",
            Suite::SuspensionCupMod2 => "suspension-cup-mod2",
            Suite::SuspensionD => "suspension-d",
            Suite::SuspendedCupZero => "suspended-cup0",
            Suite::Pullback => "pullback",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    fn index(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") as u64
    }
}

#[derive(Clone, Copy, Debug)]
pub struct IdentityConfig {
    pub seed: u64,
    pub trials: usize,
    /// Largest dimension of the random complexes.
    pub max_dim: usize,
    pub rule: SignRule,
}

impl Default for IdentityConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 1000,
            max_dim: 5,
            rule: SignRule::Standard,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub trials: usize,
    pub failures: usize,
    /// Trial index and description of the first failure.
    pub first_failure: Option<(usize, String)>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// The generator for one trial.
pub fn trial_rng(seed: u64, suite: Suite, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((suite.index() << 40) | trial as u64);
    rng
}

/// A random ordered complex of dimension exactly `dim`: a few random
/// simplices on a handful of vertices, ranked by a random permutation.
pub fn random_complex<G: Rng>(rng: &mut G, dim: usize) -> Arc<OrderedComplex> {
    let nv = rng.gen_range(dim + 1..=dim + 3);
    let mut ranks: Vec<i64> = (0..nv as i64).collect();
    ranks.shuffle(rng);
    let count = rng.gen_range(1..=3);
    let mut maximal: Vec<Vec<Vertex>> = Vec::with_capacity(count);
    for t in 0..count {
        let d = if t == 0 { dim } else { rng.gen_range(0..=dim) };
        maximal.push(sample(rng, nv, d + 1).into_iter().map(|v| v as Vertex).collect());
    }
    Arc::new(build_complex(&maximal, |v| ranks[v as usize]).expect("ranks are a permutation"))
}

pub fn random_int_cochain<G: Rng>(rng: &mut G, x: &Arc<OrderedComplex>, k: usize) -> Cochain<Int> {
    let values: Vec<Int> = (0..x.count(k)).map(|_| Int(rng.gen_range(-3..=3))).collect();
    Cochain::from_values(x.clone(), k, values).expect("sized to the complex")
}

pub fn random_z2_cochain<G: Rng>(rng: &mut G, x: &Arc<OrderedComplex>, k: usize) -> Cochain<Z2> {
    let values: Vec<Z2> = (0..x.count(k)).map(|_| Z2::from(rng.gen_bool(0.5))).collect();
    Cochain::from_values(x.clone(), k, values).expect("sized to the complex")
}

/// A uniformly random mod-2 `k`-cocycle: a random class plus a random
/// coboundary.
pub fn random_z2_cocycle<G: Rng>(rng: &mut G, x: &Arc<OrderedComplex>, k: usize) -> Cochain<Z2> {
    let solver = CohomologySolver::new(&ComplexPair::absolute(x.clone()), k);
    let coords = BitVec::from_bools((0..solver.dim()).map(|_| rng.gen_bool(0.5)));
    let class = solver.reconstruct(&coords);
    if k == 0 {
        return class;
    }
    &class + &random_z2_cochain(rng, x, k - 1).d()
}

fn sign<R: CupRing>(c: &Cochain<R>, negative: bool) -> Cochain<R> {
    if negative {
        -c
    } else {
        c.clone()
    }
}

fn check<R: CupRing>(lhs: &Cochain<R>, rhs: &Cochain<R>, what: impl FnOnce() -> String) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: {lhs:?} != {rhs:?}", what()))
    }
}

type Trial = Result<(), String>;

fn coboundary_trial(rng: &mut ChaCha8Rng, cfg: &IdentityConfig) -> Trial {
    let dim = rng.gen_range(0..=cfg.max_dim);
    let x = random_complex(rng, dim);
    let p = rng.gen_range(0..=dim);
    let q = rng.gen_range(0..=dim);
    let i = rng.gen_range(0..=p.min(q));
    let a = random_int_cochain(rng, &x, p);
    let b = random_int_cochain(rng, &x, q);
    let ii = i as i64;
    let cup = |u: &Cochain<Int>, v: &Cochain<Int>, j: i64| cup_with_rule(u, v, j, cfg.rule).expect("same complex");
    let lhs = cup(&a, &b, ii).d();
    let inner = &(&cup(&a.d(), &b, ii) + &sign(&cup(&a, &b.d(), ii), p % 2 == 1)) - &cup(&a, &b, ii - 1);
    let inner = &inner - &sign(&cup(&b, &a, ii - 1), (i + p * q) % 2 == 1);
    let rhs = sign(&inner, i % 2 == 1);
    check(&lhs, &rhs, || format!("d(X ∪_{i} Y) with |X|={p}, |Y|={q}"))
}

fn square_sum_trial(rng: &mut ChaCha8Rng, cfg: &IdentityConfig, cocycle: bool) -> Trial {
    let dim = rng.gen_range(0..=cfg.max_dim);
    let x = random_complex(rng, dim);
    let k = rng.gen_range(0..=dim);
    let kk = k as i64;
    let c = random_z2_cochain(rng, &x, k);
    let c1 = if cocycle {
        random_z2_cocycle(rng, &x, k)
    } else {
        random_z2_cochain(rng, &x, k)
    };
    let cup = |u: &Cochain<Z2>, v: &Cochain<Z2>, j: i64| crate::cochain::cup(u, v, j).expect("same complex");
    let lhs = sq(2, &(&c1 + &c));
    let mut rhs = &sq(2, &c1) + &sq(2, &c);
    if cocycle {
        rhs = &rhs + &cup(&c1, &c, kk - 1).d();
    } else {
        rhs = &rhs + &cup(&c1.d(), &c.d(), kk);
        rhs = &rhs + &(&cup(&c1, &c, kk - 1) + &cup(&c1.d(), &c, kk)).d();
    }
    check(&lhs, &rhs, || format!("Sq²(c' + c) in degree {k}"))
}

fn square_d_trial(rng: &mut ChaCha8Rng, cfg: &IdentityConfig) -> Trial {
    let dim = rng.gen_range(0..=cfg.max_dim);
    let x = random_complex(rng, dim);
    let k = rng.gen_range(0..=dim);
    let i = rng.gen_range(0..=k + 1);
    let c = random_z2_cochain(rng, &x, k);
    check(&sq(i, &c.d()), &sq(i, &c).d(), || format!("Sq^{i} d vs d Sq^{i} in degree {k}"))
}

fn suspension_cup_trial(rng: &mut ChaCha8Rng, cfg: &IdentityConfig, mod2: bool) -> Trial {
    let dim = rng.gen_range(0..cfg.max_dim.max(1));
    let x = random_complex(rng, dim);
    let ctx = suspension(&x);
    let p = rng.gen_range(0..=dim);
    let q = rng.gen_range(0..=dim);
    let i = rng.gen_range(0..=p.min(q) + 1);
    if p + q < i {
        return Ok(());
    }
    let ii = i as i64;
    let a = random_int_cochain(rng, &x, p);
    let b = random_int_cochain(rng, &x, q);
    if mod2 {
        let (a, b) = (a.map(|v| Z2::new(v.0)), b.map(|v| Z2::new(v.0)));
        let cup = |u: &Cochain<Z2>, v: &Cochain<Z2>, j: i64| crate::cochain::cup(u, v, j).expect("same complex");
        let lhs = suspend(&ctx, &cup(&a, &b, ii)).expect("on the base");
        let rhs = cup(&suspend(&ctx, &a).expect("on the base"), &suspend(&ctx, &b).expect("on the base"), ii + 1);
        return check(&lhs, &rhs, || format!("s(x ∪_{i} y) mod 2, |x|={p}, |y|={q}"));
    }
    let cup = |u: &Cochain<Int>, v: &Cochain<Int>, j: i64| cup_with_rule(u, v, j, cfg.rule).expect("same complex");
    let lhs = suspend(&ctx, &cup(&a, &b, ii)).expect("on the base");
    let sa = suspend(&ctx, &a).expect("on the base");
    let sb = suspend(&ctx, &b).expect("on the base");
    let rhs = sign(&cup(&sa, &sb, ii + 1), (p + i + 1) % 2 == 1);
    check(&lhs, &rhs, || format!("s(x ∪_{i} y), |x|={p}, |y|={q}"))
}

fn suspension_d_trial(rng: &mut ChaCha8Rng, cfg: &IdentityConfig) -> Trial {
    let dim = rng.gen_range(0..cfg.max_dim.max(1));
    let x = random_complex(rng, dim);
    let ctx = suspension(&x);
    let k = rng.gen_range(0..=dim);
    let c = random_int_cochain(rng, &x, k);
    let lhs = suspend(&ctx, &c.d()).expect("on the base");
    let rhs = suspend(&ctx, &c).expect("on the base").d();
    check(&lhs, &rhs, || format!("sd vs ds in degree {k}"))?;
    let c2 = c.map(|v| Z2::new(v.0));
    let lhs = suspend(&ctx, &c2.d()).expect("on the base");
    let rhs = suspend(&ctx, &c2).expect("on the base").d();
    check(&lhs, &rhs, || format!("sd vs ds mod 2 in degree {k}"))
}

fn suspended_cup_zero_trial(rng: &mut ChaCha8Rng, cfg: &IdentityConfig) -> Trial {
    let dim = rng.gen_range(0..cfg.max_dim.max(1));
    let x = random_complex(rng, dim);
    let ctx = suspension(&x);
    let p = rng.gen_range(0..=dim);
    let q = rng.gen_range(0..=dim);
    let sa = suspend(&ctx, &random_int_cochain(rng, &x, p)).expect("on the base");
    let sb = suspend(&ctx, &random_int_cochain(rng, &x, q)).expect("on the base");
    let prod = cup_with_rule(&sa, &sb, 0, cfg.rule).expect("same complex");
    if prod.is_zero() {
        Ok(())
    } else {
        Err(format!("sx ∪_0 sy nonzero, |x|={p}, |y|={q}: {prod:?}"))
    }
}

fn pullback_trial(rng: &mut ChaCha8Rng, cfg: &IdentityConfig) -> Trial {
    // subdivision multiplies sizes quickly; stay a little smaller here
    let dim = rng.gen_range(0..=cfg.max_dim.min(3));
    let x = random_complex(rng, dim);
    let (_, b) = barycentric_subdivide(&x);
    let p = rng.gen_range(0..=dim);
    let q = rng.gen_range(0..=dim);
    let i = rng.gen_range(0..=p.min(q));
    let a = random_int_cochain(rng, &x, p);
    let c = random_int_cochain(rng, &x, q);
    let pb = |u: &Cochain<Int>| pullback(&b, u).expect("target complex");
    check(&pb(&a.d()), &pb(&a).d(), || format!("b* d vs d b* in degree {p}"))?;
    let cup = |u: &Cochain<Int>, v: &Cochain<Int>| cup_with_rule(u, v, i as i64, cfg.rule).expect("same complex");
    check(&pb(&cup(&a, &c)), &cup(&pb(&a), &pb(&c)), || {
        format!("b*(x ∪_{i} y), |x|={p}, |y|={q}")
    })
}

fn run_trial(suite: Suite, rng: &mut ChaCha8Rng, cfg: &IdentityConfig) -> Trial {
    match suite {
        Suite::Coboundary => coboundary_trial(rng, cfg),
        Suite::SquareSum => square_sum_trial(rng, cfg, false),
        Suite::SquareSumCocycle => square_sum_trial(rng, cfg, true),
        Suite::SquareCommutesWithD => square_d_trial(rng, cfg),
        Suite::SuspensionCupInt => suspension_cup_trial(rng, cfg, false),
        Suite::SuspensionCupMod2 => suspension_cup_trial(rng, cfg, true),
        Suite::SuspensionD => suspension_d_trial(rng, cfg),
        Suite::SuspendedCupZero => suspended_cup_zero_trial(rng, cfg),
        Suite::Pullback => pullback_trial(rng, cfg),
    }
}

pub fn run_suite(suite: Suite, cfg: &IdentityConfig) -> SuiteReport {
    let mut report = SuiteReport {
        suite,
        trials: cfg.trials,
        failures: 0,
        first_failure: None,
    };
    for t in 0..cfg.trials {
        let mut rng = trial_rng(cfg.seed, suite, t);
        if let Err(msg) = run_trial(suite, &mut rng, cfg) {
            report.failures += 1;
            report.first_failure.get_or_insert((t, msg));
        }
    }
    report
}

/// Runs the given suites on separate threads; reports come back in input
/// order.
pub fn run_suites(suites: &[Suite], cfg: &IdentityConfig) -> Vec<SuiteReport> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&s| scope.spawn(move || run_suite(s, cfg)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
    })
}

pub fn run_all(cfg: &IdentityConfig) -> Vec<SuiteReport> {
    run_suites(&Suite::ALL, cfg)
}
