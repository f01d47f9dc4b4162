//! Normalized cochains on ordered complexes.
//!
//! A [`Cochain`] stores one value per `k`-simplex, in the complex's canonical
//! simplex order. Relative cochains are ordinary cochains that vanish on the
//! subcomplex.

mod cup;
mod ring;
mod solver;
mod text;
mod wu;

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::gf2::BitVec;
use crate::scx::{ComplexPair, ManifoldPair, OrderedComplex, ScxError, SimplicialMap, Vertex};

pub use cup::{cup, cup_with_rule, sq, SignRule};
pub use ring::{CupRing, Int, QmodZ, Ring, RingTag, Z2, Z4};
pub use solver::{CohomologySolver, Decomposition};
pub use text::{parse_cochain, write_cochain, AnyCochain};
pub use wu::{wu_v2_check, WuCheck};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CochainError {
    #[error("cochains live on different complexes")]
    ComplexMismatch,
    #[error("expected {expected} coefficients, found {found}")]
    RingMismatch { expected: RingTag, found: RingTag },
    #[error("expected degree {expected}, found {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("cup_{i} of degrees {p} and {q} has negative degree")]
    NegativeDegree { p: usize, q: usize, i: i64 },
    #[error("integration with these coefficients needs an oriented manifold")]
    OrientationRequired,
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("cochain does not vanish on the subcomplex")]
    NotRelative,
    #[error("{0:?} is not a simplex of the complex")]
    UnknownSimplex(Vec<Vertex>),
    #[error("expected {expected} values, found {found}")]
    Length { expected: usize, found: usize },
    #[error("basis is not a basis of cohomology: {0}")]
    BadBasis(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Scx(#[from] ScxError),
}

/// A `k`-cochain with coefficients in `R`.
#[derive(Clone)]
pub struct Cochain<R> {
    complex: Arc<OrderedComplex>,
    degree: usize,
    values: Vec<R>,
}

pub(crate) fn same_complex(a: &Arc<OrderedComplex>, b: &Arc<OrderedComplex>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<R: Ring> PartialEq for Cochain<R> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.values == other.values
            && same_complex(&self.complex, &other.complex)
    }
}
impl<R: Ring> Eq for Cochain<R> {}

impl<R: Ring> fmt::Debug for Cochain<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain<{}>(deg {}: ", R::TAG, self.degree)?;
        let mut m = f.debug_map();
        for (s, v) in self.support() {
            m.entry(&s, &format_args!("{v}"));
        }
        m.finish()?;
        write!(f, ")")
    }
}

impl<R: Ring> Cochain<R> {
    pub fn zero(complex: Arc<OrderedComplex>, degree: usize) -> Self {
        let values = vec![R::zero(); complex.count(degree)];
        Self {
            complex,
            degree,
            values,
        }
    }

    pub fn from_values(
        complex: Arc<OrderedComplex>,
        degree: usize,
        values: Vec<R>,
    ) -> Result<Self, CochainError> {
        let expected = complex.count(degree);
        if values.len() != expected {
            return Err(CochainError::Length {
                expected,
                found: values.len(),
            });
        }
        Ok(Self {
            complex,
            degree,
            values,
        })
    }

    pub fn from_fn(complex: Arc<OrderedComplex>, degree: usize, f: impl Fn(usize) -> R) -> Self {
        let values = (0..complex.count(degree)).map(f).collect();
        Self {
            complex,
            degree,
            values,
        }
    }

    /// The cochain with value `value` on one simplex, zero elsewhere. The
    /// simplex may be listed in any vertex order.
    pub fn indicator(
        complex: Arc<OrderedComplex>,
        simplex: &[Vertex],
        value: R,
    ) -> Result<Self, CochainError> {
        let s = complex.order(simplex)?;
        let j = complex
            .index_of(&s)
            .ok_or_else(|| CochainError::UnknownSimplex(simplex.to_vec()))?;
        let mut c = Self::zero(complex, s.len() - 1);
        c.values[j] = value;
        Ok(c)
    }

    pub fn complex(&self) -> &Arc<OrderedComplex> {
        &self.complex
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn get(&self, j: usize) -> R {
        self.values[j]
    }

    pub fn set(&mut self, j: usize, v: R) {
        self.values[j] = v;
    }

    /// Value on a rank-sorted simplex tuple; zero if not a simplex.
    pub fn at(&self, s: &[Vertex]) -> R {
        if s.len() != self.degree + 1 {
            return R::zero();
        }
        self.complex
            .index_of(s)
            .map_or(R::zero(), |j| self.values[j])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Nonzero entries as (simplex, value), in canonical order.
    pub fn support(&self) -> impl Iterator<Item = (&[Vertex], R)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (self.complex.simplex(self.degree, j), *v))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(R) -> S) -> Cochain<S> {
        Cochain {
            complex: self.complex.clone(),
            degree: self.degree,
            values: self.values.iter().map(|v| f(*v)).collect(),
        }
    }

    pub(crate) fn check_same(&self, other: &Cochain<R>) -> Result<(), CochainError> {
        if !same_complex(&self.complex, &other.complex) {
            return Err(CochainError::ComplexMismatch);
        }
        if self.degree != other.degree {
            return Err(CochainError::WrongDegree {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Cochain<R>) -> Result<Cochain<R>, CochainError> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| *a + *b).collect();
        Ok(Cochain {
            complex: self.complex.clone(),
            degree: self.degree,
            values,
        })
    }

    /// Coboundary, `(dc)(a_0…a_{k+1}) = Σ_j (-1)^j c(a_0…â_j…a_{k+1})`.
    pub fn d(&self) -> Cochain<R> {
        let k = self.degree;
        let cx = &self.complex;
        let values = (0..cx.count(k + 1))
            .map(|j| {
                cx.faces(k + 1, j)
                    .iter()
                    .enumerate()
                    .fold(R::zero(), |acc, (i, &f)| {
                        let v = self.values[f as usize];
                        if i % 2 == 0 {
                            acc + v
                        } else {
                            acc - v
                        }
                    })
            })
            .collect();
        Cochain {
            complex: cx.clone(),
            degree: k + 1,
            values,
        }
    }

    pub fn is_cocycle(&self) -> bool {
        self.d().is_zero()
    }

    /// Whether the cochain vanishes on the subcomplex of `pair`.
    pub fn is_relative(&self, pair: &ComplexPair) -> bool {
        same_complex(&self.complex, pair.ambient())
            && self
                .values
                .iter()
                .enumerate()
                .all(|(j, v)| v.is_zero() || !pair.in_sub(self.degree, j))
    }

    /// Moves the cochain to another complex containing all its support
    /// simplices (e.g. extension by zero from a subcomplex).
    pub fn transport(&self, target: &Arc<OrderedComplex>) -> Result<Cochain<R>, CochainError> {
        let mut out = Cochain::zero(target.clone(), self.degree);
        for (s, v) in self.support() {
            let j = target
                .index_of(s)
                .ok_or_else(|| CochainError::UnknownSimplex(s.to_vec()))?;
            out.values[j] = v;
        }
        Ok(out)
    }

    /// Restriction to a subcomplex with the same vertex ids and ranks.
    pub fn restrict(&self, sub: &Arc<OrderedComplex>) -> Result<Cochain<R>, CochainError> {
        let mut out = Cochain::zero(sub.clone(), self.degree);
        for (j, s) in sub.simplices(self.degree).iter().enumerate() {
            let i = self
                .complex
                .index_of(s)
                .ok_or_else(|| CochainError::UnknownSimplex(s.to_vec()))?;
            out.values[j] = self.values[i];
        }
        Ok(out)
    }
}

impl Cochain<Z2> {
    pub fn to_bits(&self) -> BitVec {
        BitVec::from_bools(self.values.iter().map(|v| v.bit()))
    }

    pub fn from_bits(complex: Arc<OrderedComplex>, degree: usize, bits: &BitVec) -> Self {
        assert_eq!(bits.len(), complex.count(degree));
        let values = (0..bits.len()).map(|j| Z2::from(bits.get(j))).collect();
        Self {
            complex,
            degree,
            values,
        }
    }

    /// Lift to integers with values in {0, 1}.
    pub fn lift(&self) -> Cochain<Int> {
        self.map(|v| Int(v.value() as i64))
    }
}

impl<R: Ring> Add for &Cochain<R> {
    type Output = Cochain<R>;
    fn add(self, o: &Cochain<R>) -> Cochain<R> {
        self.try_add(o).expect("cochain sum: mismatched operands")
    }
}

impl<R: Ring> Add for Cochain<R> {
    type Output = Cochain<R>;
    fn add(self, o: Cochain<R>) -> Cochain<R> {
        &self + &o
    }
}

impl<R: Ring> Neg for &Cochain<R> {
    type Output = Cochain<R>;
    fn neg(self) -> Cochain<R> {
        self.map(|v| -v)
    }
}

impl<R: Ring> Sub for &Cochain<R> {
    type Output = Cochain<R>;
    fn sub(self, o: &Cochain<R>) -> Cochain<R> {
        self + &(-o)
    }
}

/// `(f*c)(σ) = c(fσ)`, zero when `fσ` is degenerate.
pub fn pullback<R: Ring>(f: &SimplicialMap, c: &Cochain<R>) -> Result<Cochain<R>, CochainError> {
    if !same_complex(f.target(), &c.complex) {
        return Err(CochainError::ComplexMismatch);
    }
    let k = c.degree;
    let src = f.source();
    let values = (0..src.count(k))
        .map(|j| f.image(k, j).map_or(R::zero(), |t| c.values[t]))
        .collect();
    Ok(Cochain {
        complex: src.clone(),
        degree: k,
        values,
    })
}

/// Evaluation on the fundamental class `[M, ∂M]`.
pub fn integrate<R: Ring>(m: &ManifoldPair, w: &Cochain<R>) -> Result<R, CochainError> {
    if !same_complex(m.complex(), &w.complex) {
        return Err(CochainError::ComplexMismatch);
    }
    if w.degree != m.n() {
        return Err(CochainError::WrongDegree {
            expected: m.n(),
            found: w.degree,
        });
    }
    if R::SIGNED {
        let signs = m.orientation().ok_or(CochainError::OrientationRequired)?;
        Ok(w.values
            .iter()
            .zip(signs)
            .fold(R::zero(), |acc, (v, e)| acc + v.signed(*e)))
    } else {
        Ok(w.values.iter().fold(R::zero(), |acc, v| acc + *v))
    }
}

/// Mod-2 integral as a bit (the common case in this crate).
pub(crate) fn integral_bit(m: &ManifoldPair, w: &Cochain<Z2>) -> bool {
    integrate(m, w).expect("degree checked by caller").bit()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scx::{build_complex, catalog};

    fn simplex(n: u32) -> Arc<OrderedComplex> {
        let s: Vec<u32> = (0..=n).collect();
        Arc::new(build_complex(&[s], |v| v as i64).unwrap())
    }

    #[test]
    fn coboundary_on_an_edge() {
        let x = simplex(1);
        let c = Cochain::indicator(x, &[0], Z2::ONE).unwrap();
        assert_eq!(c.d().get(0), Z2::ONE);
    }

    #[test]
    fn dd_vanishes_over_int() {
        let x = simplex(3);
        let c = Cochain::from_fn(x, 1, |j| Int(j as i64 * 3 - 4));
        assert!(c.d().d().is_zero());
    }

    #[test]
    fn stokes_on_torus() {
        let m = catalog("torus").unwrap();
        let c = Cochain::from_fn(m.complex().clone(), 1, |j| Int((j * j % 7) as i64 - 3));
        assert_eq!(integrate(&m, &c.d()).unwrap(), Int(0));
    }

    #[test]
    fn signed_integral_needs_orientation() {
        let m = catalog("rp2").unwrap();
        let w = Cochain::<Int>::zero(m.complex().clone(), 2);
        assert_eq!(integrate(&m, &w), Err(CochainError::OrientationRequired));
    }

    #[test]
    fn identity_pullback() {
        let x = simplex(2);
        let id = SimplicialMap::identity(x.clone());
        let c = Cochain::from_fn(x, 1, |j| Int(j as i64));
        assert_eq!(pullback(&id, &c).unwrap(), c);
    }
}
