//! Quadratic functions on `(M, ∂M)` as homomorphisms `G_n^pin(M, ∂M) → Z/4`:
//! `L_Q(w, p) = Q(p) + 2∫w`.

use std::sync::Arc;

use super::{GContext, GGroupError, GPair};
use crate::cochain::{integrate, Z4};
use crate::quad::{Mode, QuadSpace, QuadraticFunction};

#[derive(Clone, Debug)]
pub struct LinearFunctional {
    q: QuadraticFunction,
    ctx: Arc<GContext>,
}

pub fn quad_to_linear(q: &QuadraticFunction) -> Result<LinearFunctional, GGroupError> {
    let m = q.manifold();
    let ctx = GContext::new(m.pair(), m.n())?;
    Ok(LinearFunctional {
        q: q.clone(),
        ctx: Arc::new(ctx),
    })
}

impl LinearFunctional {
    pub fn context(&self) -> &Arc<GContext> {
        &self.ctx
    }

    pub fn quadratic(&self) -> &QuadraticFunction {
        &self.q
    }

    pub fn eval(&self, a: &GPair) -> Result<Z4, GGroupError> {
        self.ctx.validate(a)?;
        let m = self.q.manifold();
        let w = integrate(m, &a.w)?;
        Ok(self.q.eval(&a.p)?.value + Z4::twice(w))
    }

    /// Values on `(0, p_j)` for the basis of the quadratic space; these
    /// determine the functional.
    pub fn signature(&self) -> Result<Vec<Z4>, GGroupError> {
        self.q
            .space()
            .basis()
            .iter()
            .map(|p| self.eval(&self.ctx.complete(p)?))
            .collect()
    }
}

/// The quadratic function `p ↦ L(w_p, p) − 2∫w_p`, read off on a basis.
pub fn linear_to_quad(
    space: &Arc<QuadSpace>,
    mode: Mode,
    l: impl Fn(&GPair) -> Z4,
) -> Result<QuadraticFunction, GGroupError> {
    let m = space.manifold();
    let ctx = GContext::new(m.pair(), m.n())?;
    let values = space
        .basis()
        .iter()
        .map(|p| {
            let a = ctx.complete(p)?;
            Ok(l(&a) - Z4::twice(integrate(m, &a.w)?))
        })
        .collect::<Result<Vec<Z4>, GGroupError>>()?;
    Ok(space.make(mode, values)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::Cochain;
    use crate::quad::{enumerate_quadratics, QuadError};
    use crate::scx::catalog;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn additive_and_normalized() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for name in ["rp2", "torus", "klein", "mobius", "annulus"] {
            let m = catalog(name).unwrap();
            let all = enumerate_quadratics(&m, Mode::Pin).unwrap();
            let mut signatures = Vec::new();
            for q in &all {
                let l = quad_to_linear(q).unwrap();
                let c = l.context().clone();
                assert_eq!(l.eval(&c.identity()).unwrap(), Z4::ZERO);
                for _ in 0..30 {
                    let (a, b) = (c.random_pair(&mut rng), c.random_pair(&mut rng));
                    let ab = c.product(&a, &b).unwrap();
                    assert_eq!(l.eval(&ab).unwrap(), l.eval(&a).unwrap() + l.eval(&b).unwrap(), "{name}");
                    let w = GPair {
                        w: a.w.clone(),
                        p: Cochain::zero(m.complex().clone(), 1),
                    };
                    let expected = Z4::twice(integrate(&m, &a.w).unwrap());
                    assert_eq!(l.eval(&w).unwrap(), expected);
                    // relations are in the kernel
                    assert_eq!(l.eval(&c.random_relation(&mut rng)).unwrap(), Z4::ZERO);
                }
                let back = linear_to_quad(q.space(), q.mode(), |a| l.eval(a).unwrap()).unwrap();
                assert_eq!(&back, q);
                signatures.push(l.signature().unwrap());
            }
            signatures.sort();
            signatures.dedup();
            assert_eq!(signatures.len(), all.len(), "{name}");
        }
    }

    #[test]
    fn rp2_quarter() {
        let m = catalog("rp2").unwrap();
        let s = QuadSpace::new(&m).unwrap();
        let q = s.make(Mode::Pin, vec![Z4::new(1)]).unwrap();
        let l = quad_to_linear(&q).unwrap();
        let x = l.context().complete(&s.basis()[0]).unwrap();
        assert_eq!(l.eval(&x).unwrap().to_qmodz().to_string(), "1/4");
    }

    #[test]
    fn wu_obstruction_is_reported() {
        let m = catalog("cp2").unwrap();
        let s = QuadSpace::new(&m);
        assert!(matches!(s, Err(QuadError::WuObstruction { .. })));
    }
}
