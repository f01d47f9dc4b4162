//! Cochain suspension `s: C^k(X) → C^{k+1}(ΣX, C⁻X)` and the boundary
//! transfer `t*s` through the collapse map `M → C⁺∂M`.

use std::sync::Arc;

use crate::cochain::{pullback, same_complex, Cochain, CochainError, Ring};
use crate::scx::{collapse_map, ManifoldPair, OrderedComplex, SimplicialMap, Suspension};

/// `s(c)(σ, +∞) = c(σ)`, zero on every simplex without the upper cone point.
pub fn suspend<R: Ring>(ctx: &Suspension, c: &Cochain<R>) -> Result<Cochain<R>, CochainError> {
    if !same_complex(&ctx.base, c.complex()) {
        return Err(CochainError::ComplexMismatch);
    }
    let k = c.degree();
    let mut out = Cochain::zero(ctx.total.clone(), k + 1);
    for (j, &v) in c.values().iter().enumerate() {
        if !v.is_zero() {
            out.set(ctx.upper_index(k, j), v);
        }
    }
    Ok(out)
}

/// Extends a cochain on a subcomplex by zero to the ambient complex.
pub fn extend_by_zero<R: Ring>(
    ambient: &Arc<OrderedComplex>,
    u: &Cochain<R>,
) -> Result<Cochain<R>, CochainError> {
    u.transport(ambient)
}

/// The collapse map of a manifold with boundary, prepared once for repeated
/// transfers of boundary cochains.
#[derive(Clone, Debug)]
pub struct BoundaryTransfer {
    manifold: ManifoldPair,
    cone: Suspension,
    collapse: SimplicialMap,
}

impl BoundaryTransfer {
    pub fn new(m: &ManifoldPair) -> Result<Self, CochainError> {
        let (cone, collapse) = collapse_map(m)?;
        Ok(Self {
            manifold: m.clone(),
            cone,
            collapse,
        })
    }

    /// The boundary complex the transfer accepts cochains on.
    pub fn boundary(&self) -> &Arc<OrderedComplex> {
        &self.cone.base
    }

    pub fn manifold(&self) -> &ManifoldPair {
        &self.manifold
    }

    pub fn collapse(&self) -> &SimplicialMap {
        &self.collapse
    }

    pub fn cone(&self) -> &Suspension {
        &self.cone
    }

    /// `t*(s u)`, a relative cochain on `(M, ∂M)` of one degree higher.
    ///
    /// Writing `û` for extension by zero, this is `d(û) - (du)^` over `Z/2`,
    /// so `d(û)` itself when `u` is a cocycle. With integer signs it carries
    /// an extra `(-1)^{k+1}` for `u` of degree `k`.
    pub fn apply<R: Ring>(&self, u: &Cochain<R>) -> Result<Cochain<R>, CochainError> {
        pullback(&self.collapse, &suspend(&self.cone, u)?)
    }
}

/// One-shot `t*(s u)`.
pub fn boundary_transfer<R: Ring>(m: &ManifoldPair, u: &Cochain<R>) -> Result<Cochain<R>, CochainError> {
    BoundaryTransfer::new(m)?.apply(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::{cup, integrate, Int, Z2};
    use crate::scx::{build_complex, catalog, cone, suspension, ScxError};

    fn two_points() -> Arc<OrderedComplex> {
        Arc::new(build_complex(&[[0], [1]], |v| v as i64).unwrap())
    }

    #[test]
    fn suspension_of_a_point_indicator() {
        let x = two_points();
        let ctx = suspension(&x);
        let c = Cochain::indicator(x, &[0], Int(1)).unwrap();
        let sc = suspend(&ctx, &c).unwrap();
        assert_eq!(sc.support().count(), 1);
        assert_eq!(sc.at(&[0, ctx.upper]), Int(1));
        // no 2-cells, so both sides of sd = ds vanish
        assert!(sc.d().is_zero());
    }

    #[test]
    fn sd_equals_ds_on_a_cone() {
        let x = Arc::new(build_complex(&[[0, 1, 2]], |v| v as i64).unwrap());
        let ctx = cone(&x);
        let c = Cochain::from_fn(x, 1, |j| Int(j as i64 * 3 - 2));
        assert_eq!(suspend(&ctx, &c.d()).unwrap(), suspend(&ctx, &c).unwrap().d());
    }

    #[test]
    fn suspended_cup0_vanishes() {
        let x = Arc::new(build_complex(&[[0, 1, 2], [1, 2, 3]], |v| v as i64).unwrap());
        let ctx = suspension(&x);
        let a = Cochain::from_fn(x.clone(), 1, |j| Int(j as i64 + 1));
        let b = Cochain::from_fn(x, 0, |j| Int(2 - j as i64));
        let sa = suspend(&ctx, &a).unwrap();
        let sb = suspend(&ctx, &b).unwrap();
        assert!(cup(&sa, &sb, 0).unwrap().is_zero());
    }

    #[test]
    fn transfer_is_coboundary_of_extension() {
        for name in ["mobius", "annulus", "disk2", "solid_torus"] {
            let m = catalog(name).unwrap();
            let t = BoundaryTransfer::new(&m).unwrap();
            let k = m.n() - 1;
            for seed in 0..4u64 {
                let u = Cochain::from_fn(t.boundary().clone(), k - 1, |j| {
                    Int(((j as u64 * 7 + seed * 3) % 5) as i64 - 2)
                });
                let hat = extend_by_zero(m.complex(), &u).unwrap();
                let du_hat = extend_by_zero(m.complex(), &u.d()).unwrap();
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let expected = (&hat.d() - &du_hat).map(|v| Int(v.0 * sign));
                let got = t.apply(&u).unwrap();
                assert_eq!(got, expected, "{name}");
                assert!(got.is_relative(m.pair()));
                let u2 = u.map(|v| Z2::new(v.0));
                let hat2 = extend_by_zero(m.complex(), &u2).unwrap();
                let du_hat2 = extend_by_zero(m.complex(), &u2.d()).unwrap();
                assert_eq!(t.apply(&u2).unwrap(), &hat2.d() + &du_hat2);
            }
        }
    }

    #[test]
    fn transfer_of_a_cocycle_is_exactly_a_coboundary() {
        // the constant 0-cocycle on the Möbius boundary circle
        let m = catalog("mobius").unwrap();
        let t = BoundaryTransfer::new(&m).unwrap();
        let one = Cochain::from_fn(t.boundary().clone(), 0, |_| Z2::ONE);
        let hat = extend_by_zero(m.complex(), &one).unwrap();
        assert_eq!(t.apply(&one).unwrap(), hat.d());
    }

    #[test]
    fn transfer_preserves_top_integrals() {
        for name in ["mobius", "annulus", "disk3", "solid_torus"] {
            let m = catalog(name).unwrap();
            let b = m.boundary().unwrap();
            let t = BoundaryTransfer::new(&m).unwrap();
            let u = Cochain::from_fn(t.boundary().clone(), m.n() - 1, |j| Z2::from(j % 3 == 1));
            let lhs = integrate(&m, &t.apply(&u).unwrap()).unwrap();
            let rhs = integrate(&b, &u.transport(b.complex()).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "{name}");
        }
    }

    #[test]
    fn closed_manifolds_have_no_transfer() {
        let m = catalog("torus").unwrap();
        assert!(matches!(
            BoundaryTransfer::new(&m),
            Err(CochainError::Scx(ScxError::EmptyBoundary))
        ));
    }
}
