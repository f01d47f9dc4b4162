//! The groups `G_n^pin(X, Y)`: pairs `(w, p)` of relative cochains with
//! `dp = 0` and `dw = Sq²p`, under
//!
//! `(w, p)(v, q) = (w + v + p ∪_{n-2} q, p + q)`,
//!
//! modulo the subgroup `{(df + Sq²c, dc)}`. The quotient sits in
//! `0 → QH^n → G → SH^{n-1} → 0` with `QH^n = H^n / Sq²H^{n-2}` and
//! `SH^{n-1} = ker(Sq²: H^{n-1} → H^{n+1})`; squares `(0, p)² = (Sq¹p, 0)`
//! decide the extension.

mod bridge;
mod oracle;
mod spin;

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

use crate::cochain::{cup, pullback, sq, Cochain, CochainError, CohomologySolver, QmodZ, Ring, Z2};
use crate::gf2::{BitVec, Echelon};
use crate::quad::QuadError;
use crate::scx::{ComplexPair, SimplicialMap};

pub use bridge::{linear_to_quad, quad_to_linear, LinearFunctional};
pub use oracle::{g_pin_bruteforce, Oracle, OracleReport, DEFAULT_BUDGET};
pub use spin::{g_spin_profile, SpinProfile};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GGroupError {
    #[error("pairs need n >= 1")]
    DegreeTooLow,
    #[error("pairs belong to different complexes or degrees")]
    Mismatch,
    #[error("not a valid pair: {0}")]
    InvalidPair(&'static str),
    #[error("{pairs} pairs exceed the budget of {budget}")]
    BudgetExceeded { pairs: u128, budget: u128 },
    #[error("{bits} relative simplices do not fit the packed pair encoding")]
    TooWide { bits: usize },
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Cochain(#[from] CochainError),
}

/// Coefficients for the `w` part: `Z2` for pin pairs, `R/Z` (through
/// `x ↦ x/2`) for spin pairs.
pub trait PairRing: Ring {
    fn from_bit(x: Z2) -> Self;
}

impl PairRing for Z2 {
    fn from_bit(x: Z2) -> Self {
        x
    }
}

impl PairRing for QmodZ {
    fn from_bit(x: Z2) -> Self {
        QmodZ::half(x)
    }
}

fn embed<W: PairRing>(c: &Cochain<Z2>) -> Cochain<W> {
    c.map(W::from_bit)
}

/// A pair `(w, p)`; `w` has degree `n`, `p` degree `n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPair<W: Ring = Z2> {
    pub w: Cochain<W>,
    pub p: Cochain<Z2>,
}

impl GPair<Z2> {
    /// The spin pair `(w/2, p)`.
    pub fn to_spin(&self) -> GPair<QmodZ> {
        GPair {
            w: embed(&self.w),
            p: self.p.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct SequenceDims {
    pub qh: usize,
    pub sh: usize,
    pub phi_rank: usize,
}

/// `(Z/4)^z4 ⊕ (Z/2)^z2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct GroupProfile {
    pub z4: usize,
    pub z2: usize,
}

impl GroupProfile {
    pub fn order_log2(self) -> usize {
        2 * self.z4 + self.z2
    }
}

impl fmt::Display for GroupProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = std::iter::repeat_n("ℤ/4", self.z4)
            .chain(std::iter::repeat_n("ℤ/2", self.z2))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

/// One cyclic summand with a pair generating it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub order: u8,
    pub pair: GPair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GGroupStructure {
    pub n: usize,
    pub dims: SequenceDims,
    pub profile: GroupProfile,
    /// Empty when the structure came from the oracle.
    pub generators: Vec<Generator>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Formula,
    Bruteforce,
}

impl FromStr for Engine {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "formula" => Ok(Engine::Formula),
            "bruteforce" => Ok(Engine::Bruteforce),
            _ => Err(format!("unknown engine {s:?} (expected formula or bruteforce)")),
        }
    }
}

/// Everything about `(X, Y)` and `n` the group computations share: the
/// cohomology solvers around degree `n`, the image of `Sq²` in `H^n`, and
/// bases for the admissible `p` and for the relative `n`-cocycles.
#[derive(Clone, Debug)]
pub struct GContext {
    pair: ComplexPair,
    n: usize,
    h_prev: CohomologySolver,
    h_n: CohomologySolver,
    h_next: CohomologySolver,
    /// Classes `Sq²H^{n-2}` in `H^n` coordinates, tagged by nothing.
    sq2_image: Echelon,
    sh_basis: Vec<Cochain<Z2>>,
    admissible: Vec<Cochain<Z2>>,
    cocycles: Vec<Cochain<Z2>>,
}

/// Indicator cochains of the relative `k`-simplices.
fn relative_units(pair: &ComplexPair, k: usize) -> Vec<Cochain<Z2>> {
    let cx = pair.ambient();
    pair.relative_indices(k)
        .into_iter()
        .map(|j| Cochain::from_fn(cx.clone(), k, |x| Z2::from(x == j)))
        .collect()
}

/// The members of `items` independent of those before them.
fn independent(pair: &ComplexPair, k: usize, items: Vec<Cochain<Z2>>) -> Vec<Cochain<Z2>> {
    let rel = pair.relative_indices(k);
    let mut e: Echelon = Echelon::new(rel.len());
    items
        .into_iter()
        .filter(|c| e.insert(BitVec::from_bools(rel.iter().map(|&j| c.get(j).bit())), ()).0)
        .collect()
}

impl GContext {
    pub fn new(pair: &ComplexPair, n: usize) -> Result<Self, GGroupError> {
        if n == 0 {
            return Err(GGroupError::DegreeTooLow);
        }
        let below = (n >= 2).then(|| CohomologySolver::new(pair, n - 2));
        let h_prev = CohomologySolver::new(pair, n - 1);
        let h_n = CohomologySolver::new(pair, n);
        let h_next = CohomologySolver::new(pair, n + 1);

        let mut sq2_image: Echelon = Echelon::new(h_n.dim());
        if let Some(b) = &below {
            for c in b.basis() {
                sq2_image.insert(h_n.class_of(&sq(2, c))?, ());
            }
        }
        let mut sh_basis = Vec::new();
        let images: Vec<BitVec> = h_prev
            .basis()
            .iter()
            .map(|p| h_next.class_of(&sq(2, p)))
            .collect::<Result<_, _>>()?;
        for z in crate::gf2::kernel(h_next.dim(), &images) {
            sh_basis.push(h_prev.reconstruct(&z));
        }

        let coboundaries = |k: usize| -> Vec<Cochain<Z2>> {
            if k == 0 {
                return Vec::new();
            }
            relative_units(pair, k - 1).iter().map(Cochain::d).collect()
        };
        let admissible = independent(
            pair,
            n - 1,
            coboundaries(n - 1).into_iter().chain(sh_basis.iter().cloned()).collect(),
        );
        let cocycles = independent(
            pair,
            n,
            coboundaries(n).into_iter().chain(h_n.basis().iter().cloned()).collect(),
        );
        Ok(Self {
            pair: pair.clone(),
            n,
            h_prev,
            h_n,
            h_next,
            sq2_image,
            sh_basis,
            admissible,
            cocycles,
        })
    }

    pub fn pair(&self) -> &ComplexPair {
        &self.pair
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Representatives of a basis of `SH^{n-1}`.
    pub fn sh_basis(&self) -> &[Cochain<Z2>] {
        &self.sh_basis
    }

    /// Basis of the relative `(n-1)`-cocycles `p` with `[Sq²p] = 0`.
    pub fn admissible_basis(&self) -> &[Cochain<Z2>] {
        &self.admissible
    }

    /// Basis of the relative `n`-cocycles.
    pub fn cocycle_basis(&self) -> &[Cochain<Z2>] {
        &self.cocycles
    }

    pub fn dims(&self) -> SequenceDims {
        let qh = self.h_n.dim() - self.sq2_image.rank();
        let sh = self.sh_basis.len();
        let phi = self
            .sh_basis
            .iter()
            .map(|p| self.qh_residue(&sq(1, p)))
            .collect::<Vec<_>>();
        let mut e: Echelon = self.sq2_image.clone();
        let phi_rank = phi.into_iter().filter(|r| e.insert(r.clone(), ()).0).count();
        SequenceDims { qh, sh, phi_rank }
    }

    /// Class of a relative `n`-cocycle in `QH^n`, as a reduced coordinate
    /// vector (zero iff the class lies in `Sq²H^{n-2}`).
    fn qh_residue(&self, w: &Cochain<Z2>) -> BitVec {
        let mut v = self.h_n.class_of(w).expect("relative n-cocycle");
        self.sq2_image.reduce(&mut v, &mut ());
        v
    }

    fn check<W: PairRing>(&self, a: &GPair<W>) -> Result<(), GGroupError> {
        let cx = self.pair.ambient();
        let same = |c: &std::sync::Arc<crate::scx::OrderedComplex>| crate::cochain::same_complex(c, cx);
        if !same(a.w.complex()) || !same(a.p.complex()) || a.w.degree() != self.n || a.p.degree() != self.n - 1 {
            return Err(GGroupError::Mismatch);
        }
        Ok(())
    }

    pub fn validate<W: PairRing>(&self, a: &GPair<W>) -> Result<(), GGroupError> {
        self.check(a)?;
        if !a.p.is_relative(&self.pair) || !a.w.is_relative(&self.pair) {
            return Err(GGroupError::InvalidPair("cochains must vanish on the subcomplex"));
        }
        if !a.p.is_cocycle() {
            return Err(GGroupError::InvalidPair("p is not a cocycle"));
        }
        if a.w.d() != embed(&sq(2, &a.p)) {
            return Err(GGroupError::InvalidPair("dw differs from Sq²p"));
        }
        Ok(())
    }

    pub fn identity<W: PairRing>(&self) -> GPair<W> {
        let cx = self.pair.ambient().clone();
        GPair {
            w: Cochain::zero(cx.clone(), self.n),
            p: Cochain::zero(cx, self.n - 1),
        }
    }

    fn cup_term(&self, p: &Cochain<Z2>, q: &Cochain<Z2>, i: i64) -> Cochain<Z2> {
        cup(p, q, i).expect("checked operands")
    }

    pub fn product<W: PairRing>(&self, a: &GPair<W>, b: &GPair<W>) -> Result<GPair<W>, GGroupError> {
        self.check(a)?;
        self.check(b)?;
        let cross = self.cup_term(&a.p, &b.p, self.n as i64 - 2);
        Ok(GPair {
            w: &(&a.w + &b.w) + &embed(&cross),
            p: &a.p + &b.p,
        })
    }

    /// `(-w + Sq¹p, p)`.
    pub fn inverse<W: PairRing>(&self, a: &GPair<W>) -> Result<GPair<W>, GGroupError> {
        self.check(a)?;
        Ok(GPair {
            w: &(-&a.w) + &embed(&sq(1, &a.p)),
            p: a.p.clone(),
        })
    }

    pub fn power(&self, a: &GPair, k: usize) -> Result<GPair, GGroupError> {
        let mut out = self.identity();
        for _ in 0..k {
            out = self.product(&out, a)?;
        }
        Ok(out)
    }

    /// `(d(p ∪_{n-1} q), 0)`, which turns `(v, q)(w, p)` into `(w, p)(v, q)`.
    pub fn commutator<W: PairRing>(&self, a: &GPair<W>, b: &GPair<W>) -> Result<GPair<W>, GGroupError> {
        self.check(a)?;
        self.check(b)?;
        let c = self.cup_term(&a.p, &b.p, self.n as i64 - 1).d();
        Ok(GPair {
            w: embed(&c),
            p: Cochain::zero(self.pair.ambient().clone(), self.n - 1),
        })
    }

    /// The relation `(df + Sq²c, dc)`.
    pub fn relation(&self, f: &Cochain<Z2>, c: &Cochain<Z2>) -> Result<GPair, GGroupError> {
        if f.degree() != self.n - 1 || c.degree() + 2 != self.n {
            return Err(GGroupError::Mismatch);
        }
        if !f.is_relative(&self.pair) || !c.is_relative(&self.pair) {
            return Err(GGroupError::InvalidPair("cochains must vanish on the subcomplex"));
        }
        Ok(GPair {
            w: &f.d() + &sq(2, c),
            p: c.d(),
        })
    }

    /// Membership in the relation subgroup: `p = dc` for some `c`, and
    /// `w + Sq²c` is a cocycle whose class lies in `Sq²H^{n-2}`.
    pub fn is_relation(&self, a: &GPair) -> Result<bool, GGroupError> {
        self.validate(a)?;
        let c = if self.n >= 2 {
            match self.h_prev.primitive(&a.p)? {
                Some(c) => c,
                None => return Ok(false),
            }
        } else if a.p.is_zero() {
            Cochain::zero(self.pair.ambient().clone(), 0)
        } else {
            return Ok(false);
        };
        let rest = if self.n >= 2 { &a.w + &sq(2, &c) } else { a.w.clone() };
        Ok(self.qh_residue(&rest).is_zero())
    }

    /// Whether two pairs have the same class in the quotient.
    pub fn same_class(&self, a: &GPair, b: &GPair) -> Result<bool, GGroupError> {
        self.is_relation(&self.product(a, &self.inverse(b)?)?)
    }

    /// Order of the class of `a` (1, 2 or 4).
    pub fn order(&self, a: &GPair) -> Result<u8, GGroupError> {
        let mut x = self.identity();
        for k in 1..=4u8 {
            x = self.product(&x, a)?;
            if self.is_relation(&x)? {
                return Ok(k);
            }
        }
        unreachable!("fourth powers are trivial");
    }

    /// A `w` completing `p` to a pair: a relative primitive of `Sq²p`.
    pub fn complete(&self, p: &Cochain<Z2>) -> Result<GPair, GGroupError> {
        let s = sq(2, p);
        let w = self
            .h_next
            .primitive(&s)?
            .ok_or(GGroupError::InvalidPair("Sq²p is not a coboundary"))?;
        let out = GPair { w, p: p.clone() };
        self.validate(&out)?;
        Ok(out)
    }

    pub fn random_pair<G: Rng>(&self, rng: &mut G) -> GPair {
        let mut p = Cochain::zero(self.pair.ambient().clone(), self.n - 1);
        for b in &self.admissible {
            if rng.gen_bool(0.5) {
                p = &p + b;
            }
        }
        let mut a = self.complete(&p).expect("admissible p");
        for z in &self.cocycles {
            if rng.gen_bool(0.5) {
                a.w = &a.w + z;
            }
        }
        a
    }

    pub fn random_relation<G: Rng>(&self, rng: &mut G) -> GPair {
        let cx = self.pair.ambient();
        let random = |rng: &mut G, k: usize| {
            let mut c = Cochain::zero(cx.clone(), k);
            for j in self.pair.relative_indices(k) {
                if rng.gen_bool(0.5) {
                    c.set(j, Z2::ONE);
                }
            }
            c
        };
        let f = random(rng, self.n - 1);
        let c = if self.n >= 2 {
            random(rng, self.n - 2)
        } else {
            return GPair {
                w: f.d(),
                p: Cochain::zero(cx.clone(), 0),
            };
        };
        self.relation(&f, &c).expect("random relative cochains")
    }

    /// Pulls a pair back along `f: X' → X`; `source` is the context on `X'`.
    pub fn pullback_pair(&self, f: &SimplicialMap, source: &GContext, a: &GPair) -> Result<GPair, GGroupError> {
        self.check(a)?;
        if source.n != self.n {
            return Err(GGroupError::Mismatch);
        }
        let out = GPair {
            w: pullback(f, &a.w)?,
            p: pullback(f, &a.p)?,
        };
        source.check(&out)?;
        Ok(out)
    }

    /// The profile from the exact sequence, with a generating pair for each
    /// cyclic summand.
    pub fn structure(&self) -> Result<GGroupStructure, GGroupError> {
        let dims = self.dims();
        let h = self.h_n.dim();
        // φ-images tagged by SH coordinates; the Sq² image carries zero tags
        let sh = self.sh_basis.len();
        let mut e: Echelon<BitVec> = Echelon::new(h);
        for row in self.sq2_image.rows() {
            e.insert(row.clone(), BitVec::zeros(sh));
        }
        let mut generators = Vec::new();
        let mut kernel = Vec::new();
        for (j, p) in self.sh_basis.iter().enumerate() {
            let image = self.h_n.class_of(&sq(1, p))?;
            let (indep, _, tag) = e.insert(image, BitVec::unit(sh, j));
            if indep {
                generators.push(Generator {
                    order: 4,
                    pair: self.complete(p)?,
                });
            } else {
                let mut q = Cochain::zero(self.pair.ambient().clone(), self.n - 1);
                for t in tag.ones() {
                    q = &q + &self.sh_basis[t];
                }
                kernel.push(q);
            }
        }
        for q in kernel {
            generators.push(Generator {
                order: 2,
                pair: self.complete(&q)?,
            });
        }
        for i in 0..h {
            if e.insert(BitVec::unit(h, i), BitVec::zeros(sh)).0 {
                generators.push(Generator {
                    order: 2,
                    pair: GPair {
                        w: self.h_n.basis()[i].clone(),
                        p: Cochain::zero(self.pair.ambient().clone(), self.n - 1),
                    },
                });
            }
        }
        let profile = GroupProfile {
            z4: dims.phi_rank,
            z2: (dims.sh - dims.phi_rank) + (dims.qh - dims.phi_rank),
        };
        debug_assert_eq!(generators.len(), profile.z4 + profile.z2);
        Ok(GGroupStructure {
            n: self.n,
            dims,
            profile,
            generators,
        })
    }

    pub(crate) fn solvers(&self) -> [&CohomologySolver; 3] {
        [&self.h_prev, &self.h_n, &self.h_next]
    }
}

/// `G_n^pin(X, Y)` from `(dim QH, dim SH, rank φ)`.
pub fn g_pin(pair: &ComplexPair, n: usize) -> Result<GGroupStructure, GGroupError> {
    GContext::new(pair, n)?.structure()
}

/// `(dim QH^n, dim SH^{n-1}, rank φ)`.
pub fn qh_sh(pair: &ComplexPair, n: usize) -> Result<SequenceDims, GGroupError> {
    Ok(GContext::new(pair, n)?.dims())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scx::catalog;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ctx(name: &str) -> GContext {
        let m = catalog(name).unwrap();
        GContext::new(m.pair(), m.n()).unwrap()
    }

    #[test]
    fn sequence_dims() {
        let d = |name| {
            let SequenceDims { qh, sh, phi_rank } = ctx(name).dims();
            (qh, sh, phi_rank)
        };
        assert_eq!(d("rp2"), (1, 1, 1));
        assert_eq!(d("mobius"), (1, 1, 1));
        assert_eq!(d("annulus"), (1, 1, 0));
        assert_eq!(d("sphere2"), (1, 0, 0));
        assert_eq!(d("torus"), (1, 2, 0));
        assert_eq!(d("klein"), (1, 2, 1));
    }

    #[test]
    fn surface_profiles() {
        let p = |name| ctx(name).structure().unwrap().profile.to_string();
        assert_eq!(p("rp2"), "ℤ/4");
        assert_eq!(p("mobius"), "ℤ/4");
        assert_eq!(p("annulus"), "ℤ/2 ⊕ ℤ/2");
        assert_eq!(p("sphere2"), "ℤ/2");
        assert_eq!(p("torus"), "ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2");
        assert_eq!(p("klein"), "ℤ/4 ⊕ ℤ/2");
    }

    #[test]
    fn generators_have_declared_orders() {
        for name in ["rp2", "mobius", "annulus", "torus", "klein", "solid_torus", "sphere3"] {
            let c = ctx(name);
            for g in c.structure().unwrap().generators {
                assert_eq!(c.order(&g.pair).unwrap(), g.order, "{name}");
            }
        }
    }

    #[test]
    fn square_of_the_rp2_generator() {
        let c = ctx("rp2");
        let x = c.sh_basis()[0].clone();
        let a = c.complete(&x).unwrap();
        assert!(a.w.is_zero());
        let sq = c.product(&a, &a).unwrap();
        assert_eq!(sq.w, cup(&x, &x, 0).unwrap());
        assert!(sq.p.is_zero());
    }

    #[test]
    fn group_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for name in ["rp2", "torus", "mobius", "solid_torus", "sphere3"] {
            let c = ctx(name);
            for _ in 0..20 {
                let (a, b, e) = (c.random_pair(&mut rng), c.random_pair(&mut rng), c.random_pair(&mut rng));
                for x in [&a, &b, &e] {
                    c.validate(x).unwrap();
                }
                let ab = c.product(&a, &b).unwrap();
                c.validate(&ab).unwrap();
                assert_eq!(c.product(&ab, &e).unwrap(), c.product(&a, &c.product(&b, &e).unwrap()).unwrap());
                assert_eq!(c.product(&a, &c.identity()).unwrap(), a);
                assert_eq!(c.product(&a, &c.inverse(&a).unwrap()).unwrap(), c.identity());
                let ba = c.product(&b, &a).unwrap();
                assert_eq!(ab, c.product(&c.commutator(&a, &b).unwrap(), &ba).unwrap());
                // relations are closed and absorb nothing
                let (r, s) = (c.random_relation(&mut rng), c.random_relation(&mut rng));
                assert!(c.is_relation(&c.product(&r, &s).unwrap()).unwrap());
                assert!(c.same_class(&c.product(&r, &a).unwrap(), &a).unwrap());
                // coercion to spin pairs is a homomorphism
                let spin = c.product(&a.to_spin(), &b.to_spin()).unwrap();
                c.validate(&spin).unwrap();
                assert_eq!(spin, ab.to_spin());
            }
        }
    }

    #[test]
    fn pullback_along_subdivision_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for name in ["rp2", "mobius"] {
            let m = catalog(name).unwrap();
            let (m2, b) = m.subdivide().unwrap();
            let (c, c2) = (GContext::new(m.pair(), 2).unwrap(), GContext::new(m2.pair(), 2).unwrap());
            for _ in 0..10 {
                let (x, y) = (c.random_pair(&mut rng), c.random_pair(&mut rng));
                let pb = |a: &GPair| c.pullback_pair(&b, &c2, a).unwrap();
                c2.validate(&pb(&x)).unwrap();
                assert_eq!(pb(&c.product(&x, &y).unwrap()), c2.product(&pb(&x), &pb(&y)).unwrap());
                assert!(c2.is_relation(&pb(&c.random_relation(&mut rng))).unwrap());
                // the induced map is an isomorphism here
                assert_eq!(c.is_relation(&x).unwrap(), c2.is_relation(&pb(&x)).unwrap());
            }
        }
    }

    #[test]
    fn mismatched_operands() {
        let (a, b) = (ctx("rp2"), ctx("torus"));
        let x = a.identity::<Z2>();
        assert_eq!(b.product(&x, &b.identity()), Err(GGroupError::Mismatch));
        let bad = GPair {
            w: x.w.clone(),
            p: a.sh_basis()[0].clone(),
        };
        a.validate(&bad).unwrap();
        let mut broken = bad.clone();
        broken.p.set(0, broken.p.get(0) + Z2::ONE);
        assert!(matches!(a.validate(&broken), Err(GGroupError::InvalidPair(_))));
    }

    #[test]
    fn degree_zero_is_rejected() {
        let m = catalog("rp2").unwrap();
        assert_eq!(GContext::new(m.pair(), 0).err(), Some(GGroupError::DegreeTooLow));
    }
}
