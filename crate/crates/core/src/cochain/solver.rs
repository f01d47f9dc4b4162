//! Relative mod-2 cohomology in one degree, with decomposition certificates.

use std::sync::Arc;

use super::{Cochain, CochainError, Z2};
use crate::gf2::{self, BitVec, Echelon};
use crate::scx::{ComplexPair, OrderedComplex};

/// `p = Σ coords_j · basis_j + d(certificate)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub coords: BitVec,
    pub certificate: Cochain<Z2>,
}

/// Basis of `H^k(X, Y; F2)` by representative relative cocycles, plus the
/// reduction data to decompose any relative cocycle against it.
///
/// Coordinates are taken on relative simplices only, in canonical order.
/// The default basis is deterministic: cocycles of the kernel basis (ordered
/// by free column) are reduced against coboundaries and earlier
/// representatives, and the independent residues are kept.
#[derive(Clone, Debug)]
pub struct CohomologySolver {
    pair: ComplexPair,
    k: usize,
    rel: Vec<usize>,
    rel_prev: Vec<usize>,
    basis: Vec<Cochain<Z2>>,
    echelon: Echelon<(BitVec, BitVec)>,
}

impl CohomologySolver {
    pub fn new(pair: &ComplexPair, k: usize) -> Self {
        let probe = Self::skeleton(pair, k, 0);
        let width_next = pair.relative_indices(k + 1).len();
        let cocycles = gf2::kernel(width_next, &probe.d_columns());
        // first pass: pick representatives (residues modulo coboundaries and
        // earlier representatives)
        let mut plain: Echelon = Echelon::new(probe.rel.len());
        for c in probe.echelon.rows() {
            plain.insert(c.clone(), ());
        }
        let mut residues = Vec::new();
        for z in cocycles {
            let (indep, residue, _) = plain.insert(z, ());
            if indep {
                residues.push(residue);
            }
        }
        // second pass: tag representatives with coordinates
        let mut s = Self::skeleton(pair, k, residues.len());
        let h = residues.len();
        for (j, r) in residues.into_iter().enumerate() {
            let mut r = r;
            let mut t = (BitVec::zeros(s.rel_prev.len()), BitVec::zeros(h));
            s.echelon.reduce(&mut r, &mut t);
            debug_assert!(t.0.is_zero() && t.1.is_zero());
            s.basis.push(s.to_cochain(&r));
            let (indep, _, _) = s
                .echelon
                .insert(r, (BitVec::zeros(s.rel_prev.len()), BitVec::unit(h, j)));
            debug_assert!(indep);
        }
        s
    }

    /// A solver whose basis is the given list of relative cocycles. Fails
    /// unless the list is a basis of cohomology.
    pub fn with_basis(
        pair: &ComplexPair,
        k: usize,
        basis: Vec<Cochain<Z2>>,
    ) -> Result<Self, CochainError> {
        let reference = Self::new(pair, k);
        if basis.len() != reference.dim() {
            return Err(CochainError::BadBasis(format!(
                "{} classes given, dimension is {}",
                basis.len(),
                reference.dim()
            )));
        }
        let h = basis.len();
        let mut s = Self::skeleton(pair, k, h);
        for (j, p) in basis.iter().enumerate() {
            s.check_cocycle(p)?;
            let bits = s.rel_bits(p);
            let tag = (BitVec::zeros(s.rel_prev.len()), BitVec::unit(h, j));
            let (indep, _, _) = s.echelon.insert(bits, tag);
            if !indep {
                return Err(CochainError::BadBasis(format!("class {j} is dependent")));
            }
        }
        s.basis = basis;
        Ok(s)
    }

    fn skeleton(pair: &ComplexPair, k: usize, h: usize) -> Self {
        let rel = pair.relative_indices(k);
        let rel_prev = if k == 0 {
            Vec::new()
        } else {
            pair.relative_indices(k - 1)
        };
        let mut echelon = Echelon::new(rel.len());
        let mut s = Self {
            pair: pair.clone(),
            k,
            rel,
            rel_prev,
            basis: Vec::new(),
            echelon: Echelon::new(0),
        };
        if k > 0 {
            let cx = pair.ambient().clone();
            let n_prev = s.rel_prev.len();
            for (i, &j) in s.rel_prev.iter().enumerate() {
                let c = Cochain::from_fn(cx.clone(), k - 1, |x| Z2::from(x == j));
                let bits = s.rel_bits(&c.d());
                echelon.insert(bits, (BitVec::unit(n_prev, i), BitVec::zeros(h)));
            }
        }
        s.echelon = echelon;
        s
    }

    fn d_columns(&self) -> Vec<BitVec> {
        let cx = self.pair.ambient();
        let k = self.k;
        let next = self.pair.relative_indices(k + 1);
        let mut pos = vec![usize::MAX; cx.count(k + 1)];
        for (i, &j) in next.iter().enumerate() {
            pos[j] = i;
        }
        let cof = cx.cofaces(k + 1);
        self.rel
            .iter()
            .map(|&j| {
                let mut col = BitVec::zeros(next.len());
                if let Some(list) = cof.get(j) {
                    for &t in list {
                        col.flip(pos[t]);
                    }
                }
                col
            })
            .collect()
    }

    fn rel_bits(&self, c: &Cochain<Z2>) -> BitVec {
        BitVec::from_bools(self.rel.iter().map(|&j| c.get(j).bit()))
    }

    fn to_cochain(&self, bits: &BitVec) -> Cochain<Z2> {
        let mut c = Cochain::zero(self.pair.ambient().clone(), self.k);
        for i in bits.ones() {
            c.set(self.rel[i], Z2::ONE);
        }
        c
    }

    fn prev_cochain(&self, bits: &BitVec) -> Cochain<Z2> {
        let cx = self.pair.ambient().clone();
        let mut c = Cochain::zero(cx, self.k.saturating_sub(1));
        for i in bits.ones() {
            c.set(self.rel_prev[i], Z2::ONE);
        }
        c
    }

    fn check_cocycle(&self, p: &Cochain<Z2>) -> Result<(), CochainError> {
        if !super::same_complex(p.complex(), self.pair.ambient()) {
            return Err(CochainError::ComplexMismatch);
        }
        if p.degree() != self.k {
            return Err(CochainError::WrongDegree {
                expected: self.k,
                found: p.degree(),
            });
        }
        if !p.is_relative(&self.pair) {
            return Err(CochainError::NotRelative);
        }
        if !p.is_cocycle() {
            return Err(CochainError::NotACocycle);
        }
        Ok(())
    }

    pub fn pair(&self) -> &ComplexPair {
        &self.pair
    }

    pub fn complex(&self) -> &Arc<OrderedComplex> {
        self.pair.ambient()
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Cochain<Z2>] {
        &self.basis
    }

    /// Writes a relative cocycle as basis classes plus a coboundary; the
    /// identity is re-checked before returning.
    pub fn decompose(&self, p: &Cochain<Z2>) -> Result<Decomposition, CochainError> {
        self.check_cocycle(p)?;
        let mut v = self.rel_bits(p);
        let mut tag = (BitVec::zeros(self.rel_prev.len()), BitVec::zeros(self.basis.len()));
        self.echelon.reduce(&mut v, &mut tag);
        assert!(v.is_zero(), "cocycles lie in the span of the solver rows");
        let coords = tag.1;
        let certificate = self.prev_cochain(&tag.0);
        let mut rebuilt = self.reconstruct(&coords);
        if self.k > 0 {
            rebuilt = &rebuilt + &certificate.d();
        }
        assert_eq!(&rebuilt, p, "decomposition identity");
        Ok(Decomposition {
            coords,
            certificate,
        })
    }

    /// Coordinates of the class of `p`.
    pub fn class_of(&self, p: &Cochain<Z2>) -> Result<BitVec, CochainError> {
        Ok(self.decompose(p)?.coords)
    }

    /// A relative cochain `c` with `dc = p`, if `p` is a coboundary.
    pub fn primitive(&self, p: &Cochain<Z2>) -> Result<Option<Cochain<Z2>>, CochainError> {
        let dec = self.decompose(p)?;
        Ok(dec.coords.is_zero().then_some(dec.certificate))
    }

    /// `Σ coords_j · basis_j`.
    pub fn reconstruct(&self, coords: &BitVec) -> Cochain<Z2> {
        let mut out = Cochain::zero(self.pair.ambient().clone(), self.k);
        for j in coords.ones() {
            out = &out + &self.basis[j];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scx::{build_complex, catalog};

    #[test]
    fn contractible_has_no_h1() {
        let x = Arc::new(build_complex(&[[0, 1, 2]], |v| v as i64).unwrap());
        let s = CohomologySolver::new(&ComplexPair::absolute(x), 1);
        assert_eq!(s.dim(), 0);
    }

    #[test]
    fn mod2_betti_numbers() {
        let dims = |name: &str| {
            let m = catalog(name).unwrap();
            (0..=2)
                .map(|k| CohomologySolver::new(m.pair(), k).dim())
                .collect::<Vec<_>>()
        };
        assert_eq!(dims("rp2"), vec![1, 1, 1]);
        assert_eq!(dims("torus"), vec![1, 2, 1]);
        assert_eq!(dims("klein"), vec![1, 2, 1]);
        assert_eq!(dims("annulus"), vec![0, 1, 1]);
        assert_eq!(dims("mobius"), vec![0, 1, 1]);
        assert_eq!(dims("sphere2"), vec![1, 0, 1]);
    }

    #[test]
    fn decompose_coboundary() {
        let m = catalog("torus").unwrap();
        let s = CohomologySolver::new(m.pair(), 1);
        let sigma = Cochain::indicator(m.complex().clone(), &[3], Z2::ONE).unwrap();
        let dec = s.decompose(&sigma.d()).unwrap();
        assert!(dec.coords.is_zero());
        assert_eq!(dec.certificate.d(), sigma.d());
        let dec = s.decompose(&s.basis()[1]).unwrap();
        assert_eq!(dec.coords, BitVec::unit(2, 1));
        assert!(dec.certificate.is_zero());
    }

    #[test]
    fn rejects_non_cocycles() {
        let m = catalog("torus").unwrap();
        let s = CohomologySolver::new(m.pair(), 1);
        let e = Cochain::from_fn(m.complex().clone(), 1, |j| Z2::from(j == 0));
        assert_eq!(s.decompose(&e), Err(CochainError::NotACocycle));
    }

    #[test]
    fn custom_basis() {
        let m = catalog("torus").unwrap();
        let s = CohomologySolver::new(m.pair(), 1);
        let b = vec![&s.basis()[0] + &s.basis()[1], s.basis()[1].clone()];
        let t = CohomologySolver::with_basis(m.pair(), 1, b.clone()).unwrap();
        let dec = t.decompose(&s.basis()[0]).unwrap();
        assert_eq!(dec.coords, BitVec::from_bools([true, true]));
        let bad = vec![s.basis()[0].clone(), s.basis()[0].clone()];
        assert!(CohomologySolver::with_basis(m.pair(), 1, bad).is_err());
    }
}
