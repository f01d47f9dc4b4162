//! Quadratic functions `Q: Z^{n-1}(M, ∂M; Z/2) → Z/4` on a triangulated
//! `n`-manifold:
//!
//! - `Q(p + q) = Q(p) + Q(q) + 2∫ p ∪_{n-2} q`
//! - `Q(dc) = 2∫ Sq²c = 2∫ (c ∪_{n-4} c + c ∪_{n-3} dc)`
//!
//! A function is stored by its values on a basis of `H^{n-1}(M, ∂M; F2)`;
//! everything else follows from the two rules above.

mod axioms;
mod brown;
mod transfer;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::cochain::{
    cup, integrate, sq, wu_v2_check, Cochain, CochainError, CohomologySolver, WuCheck, Z2, Z4,
};
use crate::gf2::{self, BitVec};
use crate::scx::{ComplexPair, ManifoldPair, ScxError};

pub use axioms::{verify_axioms, AxiomReport, Violation};
pub use brown::{brown_gauss, gauss_sum, BrownInvariant, GaussianInt};
pub use transfer::{cylinder_extend, pushforward, Cylinder};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuadError {
    #[error("v2 does not vanish: ∫Sq² is nonzero on a basis class")]
    WuObstruction { witness: Cochain<Z2> },
    #[error("basis value {index}: 2·{value} must equal 2·∫Sq¹ = {required}")]
    ConstraintViolation { index: usize, value: Z4, required: Z4 },
    #[error("spin mode needs an oriented manifold")]
    SpinOnNonorientable,
    #[error("spin mode values must lie in {{0, 2}} (basis value {index} is {value})")]
    OddSpinValue { index: usize, value: Z4 },
    #[error("expected {expected} basis values, got {found}")]
    ValueCount { expected: usize, found: usize },
    #[error("quadratic functions need dimension at least 1")]
    DimensionTooLow,
    #[error("not a closed surface")]
    NotClosedSurface,
    #[error("Gauss sum has norm {norm}, expected {expected}")]
    DegenerateSum { norm: i128, expected: i128 },
    #[error("extension by zero of basis class {index} is not a relative cocycle")]
    NotNeatlyEmbedded { index: usize },
    #[error("the map has even degree on some component")]
    DegreeZero,
    #[error("quadratic functions live on different manifolds")]
    SpaceMismatch,
    #[error("cohomology of dimension {dim} is too large to enumerate")]
    TooLarge { dim: usize },
    #[error(transparent)]
    Cochain(#[from] CochainError),
    #[error(transparent)]
    Scx(#[from] ScxError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    Pin,
    Spin,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Pin => "pin",
            Mode::Spin => "spin",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "pin" => Ok(Mode::Pin),
            "spin" => Ok(Mode::Spin),
            _ => Err(format!("unknown mode {s:?} (pin|spin)")),
        }
    }
}

/// A value of a quadratic function. Spin values lie in `{0, 2}` and read as
/// `Z/2` by halving.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadValue {
    pub mode: Mode,
    pub value: Z4,
}

impl QuadValue {
    pub fn z4(self) -> Z4 {
        self.value
    }

    /// The `R/Z` view, `value / 4`.
    pub fn to_qmodz(self) -> crate::cochain::QmodZ {
        self.value.to_qmodz()
    }

    pub fn spin_bit(self) -> Option<Z2> {
        self.value.halve()
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.mode, self.value.halve()) {
            (Mode::Spin, Some(b)) => write!(f, "{b}"),
            _ => write!(f, "{}", self.value),
        }
    }
}

/// The data shared by all quadratic functions on one manifold: the Wu check,
/// a basis `p_j` of `H^{n-1}(M, ∂M; F2)` and the integrals `∫Sq¹p_j`.
#[derive(Clone, Debug)]
pub struct QuadSpace {
    manifold: ManifoldPair,
    solver: CohomologySolver,
    sq1: Vec<bool>,
}

pub(crate) fn twice(b: bool) -> Z4 {
    Z4::twice(Z2::from(b))
}

pub(crate) fn bit(m: &ManifoldPair, w: &Cochain<Z2>) -> bool {
    integrate(m, w).expect("top degree on the manifold").bit()
}

impl QuadSpace {
    pub fn new(m: &ManifoldPair) -> Result<Arc<Self>, QuadError> {
        Self::check_manifold(m)?;
        let solver = CohomologySolver::new(m.pair(), m.n() - 1);
        Ok(Self::from_solver(m, solver))
    }

    /// A space whose basis is the given list of relative cocycles.
    pub fn with_basis(m: &ManifoldPair, basis: Vec<Cochain<Z2>>) -> Result<Arc<Self>, QuadError> {
        Self::check_manifold(m)?;
        let solver = CohomologySolver::with_basis(m.pair(), m.n() - 1, basis)?;
        Ok(Self::from_solver(m, solver))
    }

    fn check_manifold(m: &ManifoldPair) -> Result<(), QuadError> {
        if m.n() == 0 {
            return Err(QuadError::DimensionTooLow);
        }
        if let WuCheck::Witness(witness) = wu_v2_check(m) {
            return Err(QuadError::WuObstruction { witness });
        }
        Ok(())
    }

    fn from_solver(m: &ManifoldPair, solver: CohomologySolver) -> Arc<Self> {
        let sq1 = solver.basis().iter().map(|p| bit(m, &sq(1, p))).collect();
        Arc::new(Self {
            manifold: m.clone(),
            solver,
            sq1,
        })
    }

    pub fn manifold(&self) -> &ManifoldPair {
        &self.manifold
    }

    pub fn solver(&self) -> &CohomologySolver {
        &self.solver
    }

    pub fn basis(&self) -> &[Cochain<Z2>] {
        self.solver.basis()
    }

    pub fn n(&self) -> usize {
        self.manifold.n()
    }

    /// `dim H^{n-1}(M, ∂M; F2)`.
    pub fn dim(&self) -> usize {
        self.solver.dim()
    }

    /// `∫Sq¹p_j` for each basis class.
    pub fn sq1_integrals(&self) -> &[bool] {
        &self.sq1
    }

    /// The two admissible values on basis class `j`: `{1, 3}` when
    /// `∫Sq¹p_j = 1`, otherwise `{0, 2}`.
    pub fn allowed(&self, j: usize) -> [Z4; 2] {
        if self.sq1[j] {
            [Z4::new(1), Z4::new(3)]
        } else {
            [Z4::new(0), Z4::new(2)]
        }
    }

    pub(crate) fn same_as(&self, other: &QuadSpace) -> bool {
        std::ptr::eq(self, other)
            || (self.manifold.complex() == other.manifold.complex()
                && self.manifold.n() == other.manifold.n()
                && self.solver.basis() == other.solver.basis())
    }

    /// `2∫ x ∪_{n-2} y`.
    pub fn cross_term(&self, x: &Cochain<Z2>, y: &Cochain<Z2>) -> Z4 {
        let w = cup(x, y, self.n() as i64 - 2).expect("same complex");
        twice(bit(&self.manifold, &w))
    }

    /// `Q(dc) = 2∫Sq²c`, the same for every quadratic function.
    pub fn coboundary_value(&self, c: &Cochain<Z2>) -> Z4 {
        twice(bit(&self.manifold, &sq(2, c)))
    }

    pub fn make(self: &Arc<Self>, mode: Mode, values: Vec<Z4>) -> Result<QuadraticFunction, QuadError> {
        if values.len() != self.dim() {
            return Err(QuadError::ValueCount {
                expected: self.dim(),
                found: values.len(),
            });
        }
        for (j, &v) in values.iter().enumerate() {
            let required = twice(self.sq1[j]);
            if v + v != required {
                return Err(QuadError::ConstraintViolation { index: j, value: v, required });
            }
        }
        if mode == Mode::Spin {
            if !self.manifold.is_oriented() {
                return Err(QuadError::SpinOnNonorientable);
            }
            if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| v.halve().is_none()) {
                return Err(QuadError::OddSpinValue { index, value });
            }
        }
        Ok(QuadraticFunction {
            space: self.clone(),
            mode,
            values,
            drop_cross_term: false,
        })
    }

    /// All `2^dim` quadratic functions, ordered lexicographically by basis
    /// values with class 0 most significant.
    pub fn enumerate(self: &Arc<Self>, mode: Mode) -> Result<Vec<QuadraticFunction>, QuadError> {
        let h = self.dim();
        if h > 20 {
            return Err(QuadError::TooLarge { dim: h });
        }
        (0u64..1 << h)
            .map(|m| {
                let values = (0..h)
                    .map(|j| self.allowed(j)[((m >> (h - 1 - j)) & 1) as usize])
                    .collect();
                self.make(mode, values)
            })
            .collect()
    }

    /// An absolute 1-cocycle `a` with `∫ a ∪₀ p_j = ∫ Sq¹p_j` for every basis
    /// class (a representative of `v₁`).
    pub fn v1_witness(&self) -> Cochain<Z2> {
        let m = &self.manifold;
        let h1 = CohomologySolver::new(&ComplexPair::absolute(m.complex().clone()), 1);
        let columns: Vec<BitVec> = h1
            .basis()
            .iter()
            .map(|a| {
                BitVec::from_bools(
                    self.basis()
                        .iter()
                        .map(|p| bit(m, &cup(a, p, 0).expect("same complex"))),
                )
            })
            .collect();
        let target = BitVec::from_bools(self.sq1.iter().copied());
        let x = gf2::solve(self.dim(), &columns, &target)
            .expect("the pairing of H^1 with H^{n-1}(M, ∂M) is perfect");
        h1.reconstruct(&x)
    }
}

/// A quadratic function, stored by its values on the basis of its space.
#[derive(Clone)]
pub struct QuadraticFunction {
    space: Arc<QuadSpace>,
    mode: Mode,
    values: Vec<Z4>,
    drop_cross_term: bool,
}

impl fmt::Debug for QuadraticFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<u8> = self.values.iter().map(|v| v.value()).collect();
        write!(f, "Q[{}]{vals:?}", self.mode)
    }
}

impl PartialEq for QuadraticFunction {
    fn eq(&self, other: &Self) -> bool {
        self.mode == other.mode
            && self.values == other.values
            && self.drop_cross_term == other.drop_cross_term
            && self.space.same_as(&other.space)
    }
}

impl Eq for QuadraticFunction {}

pub fn make_quadratic(m: &ManifoldPair, mode: Mode, values: Vec<Z4>) -> Result<QuadraticFunction, QuadError> {
    QuadSpace::new(m)?.make(mode, values)
}

pub fn enumerate_quadratics(m: &ManifoldPair, mode: Mode) -> Result<Vec<QuadraticFunction>, QuadError> {
    QuadSpace::new(m)?.enumerate(mode)
}

impl QuadraticFunction {
    pub fn space(&self) -> &Arc<QuadSpace> {
        &self.space
    }

    pub fn manifold(&self) -> &ManifoldPair {
        self.space.manifold()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn basis_values(&self) -> &[Z4] {
        &self.values
    }

    /// Skips the integrity checks; test suites use it to build invalid inputs.
    #[doc(hidden)]
    pub fn from_values_unchecked(space: Arc<QuadSpace>, mode: Mode, values: Vec<Z4>) -> Self {
        Self {
            space,
            mode,
            values,
            drop_cross_term: false,
        }
    }

    /// An evaluator that omits the `2∫x ∪_{n-2} y` terms, so that test
    /// suites can confirm they catch it.
    #[doc(hidden)]
    pub fn without_cross_terms(mut self) -> Self {
        self.drop_cross_term = true;
        self
    }

    fn cross(&self, x: &Cochain<Z2>, y: &Cochain<Z2>) -> Z4 {
        if self.drop_cross_term {
            Z4::new(0)
        } else {
            self.space.cross_term(x, y)
        }
    }

    fn value(&self, v: Z4) -> QuadValue {
        QuadValue { mode: self.mode, value: v }
    }

    /// `Q(p)`: decompose `p = Σ a_j p_j + dc`, fold the basis terms in index
    /// order, then add the coboundary.
    pub fn eval(&self, p: &Cochain<Z2>) -> Result<QuadValue, QuadError> {
        let dec = self.space.solver.decompose(p)?;
        let order: Vec<usize> = dec.coords.ones().collect();
        Ok(self.eval_parts(&order, &dec.certificate))
    }

    /// `Q(Σ_{j ∈ order} p_j + dc)`, folding in the given order.
    pub fn eval_parts(&self, order: &[usize], certificate: &Cochain<Z2>) -> QuadValue {
        let basis = self.space.basis();
        let cx = self.manifold().complex().clone();
        let n = self.space.n();
        let mut x = Cochain::zero(cx, n - 1);
        let mut acc = Z4::new(0);
        for &j in order {
            acc = acc + self.values[j] + self.cross(&x, &basis[j]);
            x = &x + &basis[j];
        }
        if n >= 2 && !certificate.is_zero() {
            let dc = certificate.d();
            acc = acc + self.space.coboundary_value(certificate) + self.cross(&x, &dc);
        }
        self.value(acc)
    }

    /// `Q(Σ coords_j p_j)`.
    pub fn eval_class(&self, coords: &BitVec) -> QuadValue {
        let order: Vec<usize> = coords.ones().collect();
        let zero = Cochain::zero(self.manifold().complex().clone(), self.space.n().saturating_sub(2));
        self.eval_parts(&order, &zero)
    }

    /// `Q_a(p) = Q(p) + 2∫ a ∪₀ p` for an absolute 1-cocycle `a`.
    pub fn act(&self, a: &Cochain<Z2>) -> Result<QuadraticFunction, QuadError> {
        if a.degree() != 1 {
            return Err(CochainError::WrongDegree {
                expected: 1,
                found: a.degree(),
            }
            .into());
        }
        if !crate::cochain::same_complex(a.complex(), self.manifold().complex()) {
            return Err(CochainError::ComplexMismatch.into());
        }
        if !a.is_cocycle() {
            return Err(CochainError::NotACocycle.into());
        }
        let m = self.manifold();
        let values = self
            .space
            .basis()
            .iter()
            .zip(&self.values)
            .map(|(p, &q)| q + twice(bit(m, &cup(a, p, 0).expect("same complex"))))
            .collect();
        self.space.make(self.mode, values)
    }

    /// `-Q`, which equals `Q + 2∫Sq¹(·)`.
    pub fn negate(&self) -> QuadraticFunction {
        let values = self.values.iter().map(|&v| -v).collect();
        self.space.make(self.mode, values).expect("negation preserves the constraints")
    }

    /// The same values read in the other mode.
    pub fn with_mode(&self, mode: Mode) -> Result<QuadraticFunction, QuadError> {
        self.space.make(mode, self.values.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scx::catalog;

    fn space(name: &str) -> Arc<QuadSpace> {
        QuadSpace::new(&catalog(name).unwrap()).unwrap()
    }

    #[test]
    fn rp2_has_values_one_and_three() {
        let s = space("rp2");
        assert_eq!(s.sq1_integrals(), &[true]);
        let all = s.enumerate(Mode::Pin).unwrap();
        let vals: Vec<u8> = all.iter().map(|q| q.basis_values()[0].value()).collect();
        assert_eq!(vals, vec![1, 3]);
        let x = s.basis()[0].clone();
        assert_eq!(all[0].eval(&x).unwrap().z4(), Z4::new(1));
    }

    #[test]
    fn constraint_and_mode_gates() {
        let s = space("rp2");
        assert!(matches!(
            s.make(Mode::Pin, vec![Z4::new(2)]),
            Err(QuadError::ConstraintViolation { index: 0, .. })
        ));
        assert_eq!(s.make(Mode::Spin, vec![Z4::new(1)]), Err(QuadError::SpinOnNonorientable));
        let t = space("torus");
        assert_eq!(t.enumerate(Mode::Spin).unwrap().len(), 4);
    }

    #[test]
    fn klein_has_one_odd_generator() {
        let s = space("klein");
        assert_eq!(s.sq1_integrals().iter().filter(|b| **b).count(), 1);
    }

    #[test]
    fn circle_functions_are_linear() {
        let all = enumerate_quadratics(&catalog("sphere1").unwrap(), Mode::Pin).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|q| q.basis_values()[0].halve().is_some()));
    }

    #[test]
    fn cp2_is_refused() {
        let err = make_quadratic(&catalog("cp2").unwrap(), Mode::Pin, vec![]).unwrap_err();
        assert!(matches!(err, QuadError::WuObstruction { .. }));
    }

    #[test]
    fn negation_is_action_by_v1() {
        for name in ["rp2", "klein", "torus", "mobius"] {
            let s = space(name);
            let a = s.v1_witness();
            for q in s.enumerate(Mode::Pin).unwrap() {
                assert_eq!(q.negate(), q.act(&a).unwrap(), "{name}");
                assert_eq!(q.negate().negate(), q);
            }
        }
    }

    #[test]
    fn rp2_action_swaps() {
        let s = space("rp2");
        let all = s.enumerate(Mode::Pin).unwrap();
        let h1 = CohomologySolver::new(&ComplexPair::absolute(s.manifold().complex().clone()), 1);
        assert_eq!(all[0].act(&h1.basis()[0]).unwrap(), all[1]);
    }
}
