use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{bit, twice, Mode, QuadValue, QuadraticFunction};
use crate::cochain::{cup, Cochain, CohomologySolver, Z2, Z4};
use crate::scx::ComplexPair;
use crate::gf2::BitVec;

/// One failed check, with the cochains that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `2·q_j ≠ 2∫Sq¹p_j` on a basis class.
    Constraint { index: usize, value: Z4 },
    /// A spin-mode basis value outside `{0, 2}`.
    SpinValue { index: usize, value: Z4 },
    /// `Q(p + q) ≠ Q(p) + Q(q) + 2∫p ∪_{n-2} q`.
    Sum { p: Cochain<Z2>, q: Cochain<Z2>, lhs: Z4, rhs: Z4 },
    /// `Q(dc) ≠ 2∫(c ∪_{n-4} c + c ∪_{n-3} dc)`.
    Coboundary { c: Cochain<Z2>, lhs: Z4, rhs: Z4 },
    /// `2Q(p) ≠ 2∫Sq¹p`.
    Parity { p: Cochain<Z2>, value: Z4 },
    /// Two decompositions of the same cocycle evaluate differently.
    CertificateDependence { p: Cochain<Z2>, first: Z4, second: Z4 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub trials: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub(crate) fn random_relative<G: Rng>(rng: &mut G, pair: &ComplexPair, k: usize) -> Cochain<Z2> {
    let mut c = Cochain::zero(pair.ambient().clone(), k);
    for j in pair.relative_indices(k) {
        if rng.gen_bool(0.5) {
            c.set(j, Z2::ONE);
        }
    }
    c
}

/// A random relative `(n-1)`-cocycle: a random class plus a random relative
/// coboundary.
pub(crate) fn random_cocycle<G: Rng>(rng: &mut G, solver: &CohomologySolver) -> Cochain<Z2> {
    let coords = BitVec::from_bools((0..solver.dim()).map(|_| rng.gen_bool(0.5)));
    let class = solver.reconstruct(&coords);
    match solver.degree() {
        0 => class,
        k => &class + &random_relative(rng, solver.pair(), k - 1).d(),
    }
}

fn z4(v: QuadValue) -> Z4 {
    v.value
}

/// Randomized check of both defining rules, the constraints, and
/// independence of the decomposition used for evaluation.
pub fn verify_axioms(q: &QuadraticFunction, trials: usize, seed: u64) -> AxiomReport {
    let space = q.space();
    let m = space.manifold();
    let n = space.n() as i64;
    let mut violations = Vec::new();
    for (j, &v) in q.basis_values().iter().enumerate() {
        if v + v != twice(space.sq1_integrals()[j]) {
            violations.push(Violation::Constraint { index: j, value: v });
        }
        if q.mode() == Mode::Spin && v.halve().is_none() {
            violations.push(Violation::SpinValue { index: j, value: v });
        }
    }
    if !violations.is_empty() {
        return AxiomReport { trials: 0, violations };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let solver = space.solver();
    let ev = |p: &Cochain<Z2>| z4(q.eval(p).expect("random relative cocycle"));
    let int = |w: &Cochain<Z2>| twice(bit(m, w));
    for _ in 0..trials {
        let a = random_cocycle(&mut rng, solver);
        let b = random_cocycle(&mut rng, solver);
        let lhs = ev(&(&a + &b));
        let rhs = ev(&a) + ev(&b) + int(&cup(&a, &b, n - 2).expect("same complex"));
        if lhs != rhs {
            violations.push(Violation::Sum { p: a.clone(), q: b, lhs, rhs });
        }
        let value = ev(&a);
        if value + value != int(&cup(&a, &a, n - 2).expect("same complex")) {
            violations.push(Violation::Parity { p: a.clone(), value });
        }
        if n >= 2 {
            let c = random_relative(&mut rng, solver.pair(), (n - 2) as usize);
            let dc = c.d();
            let lhs = ev(&dc);
            let sq2 = &cup(&c, &c, n - 4).expect("same complex") + &cup(&c, &dc, n - 3).expect("same complex");
            let rhs = int(&sq2);
            if lhs != rhs {
                violations.push(Violation::Coboundary { c: c.clone(), lhs, rhs });
            }
            // another decomposition: reversed fold order and a certificate
            // shifted by a relative cocycle
            let dec = solver.decompose(&a).expect("relative cocycle");
            let mut order: Vec<usize> = dec.coords.ones().collect();
            order.reverse();
            let k = (n - 2) as usize;
            let shift = CohomologySolver::new(solver.pair(), k);
            let z = random_cocycle(&mut rng, &shift);
            let first = value;
            let second = z4(q.eval_parts(&order, &(&dec.certificate + &z)));
            if first != second {
                violations.push(Violation::CertificateDependence { p: a, first, second });
            }
        }
    }
    AxiomReport { trials, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::QuadSpace;
    use crate::scx::catalog;

    #[test]
    fn enumerated_functions_pass() {
        for name in ["rp2", "torus", "klein", "mobius", "annulus", "sphere1", "solid_torus"] {
            let s = QuadSpace::new(&catalog(name).unwrap()).unwrap();
            for q in s.enumerate(Mode::Pin).unwrap() {
                let r = verify_axioms(&q, 40, 1);
                assert!(r.passed(), "{name}: {:?}", r.violations.first());
            }
        }
    }

    #[test]
    fn corrupted_inputs_fail() {
        let s = QuadSpace::new(&catalog("rp2").unwrap()).unwrap();
        let bad = QuadraticFunction::from_values_unchecked(s.clone(), Mode::Pin, vec![Z4::new(2)]);
        let r = verify_axioms(&bad, 10, 0);
        assert!(matches!(r.violations[0], Violation::Constraint { index: 0, .. }));
        // on RP² evaluation never needs a cross term; the torus does
        let t = QuadSpace::new(&catalog("torus").unwrap()).unwrap();
        let good = t.enumerate(Mode::Pin).unwrap().remove(0);
        let r = verify_axioms(&good.without_cross_terms(), 50, 0);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::Sum { .. })));
    }
}
