use super::{integral_bit, sq, CohomologySolver, Cochain, Z2};
use crate::scx::ManifoldPair;

/// Outcome of the second Wu class test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WuCheck {
    Ok,
    /// A relative `(n-2)`-cocycle `c` with `∫ Sq²c ≠ 0`.
    Witness(Cochain<Z2>),
}

impl WuCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, WuCheck::Ok)
    }
}

/// Checks `∫ Sq²c = 0` on a basis of `H^{n-2}(M, ∂M; F2)`.
pub fn wu_v2_check(m: &ManifoldPair) -> WuCheck {
    let n = m.n();
    if n < 2 {
        return WuCheck::Ok;
    }
    let solver = CohomologySolver::new(m.pair(), n - 2);
    for c in solver.basis() {
        if integral_bit(m, &sq(2, c)) {
            return WuCheck::Witness(c.clone());
        }
    }
    WuCheck::Ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::cup;
    use crate::scx::catalog;

    #[test]
    fn low_dimensional_fixtures_pass() {
        for name in ["rp2", "torus", "klein", "mobius", "annulus", "solid_torus", "sphere4"] {
            assert!(wu_v2_check(&catalog(name).unwrap()).is_ok(), "{name}");
        }
    }

    #[test]
    fn cp2_has_a_witness() {
        let m = catalog("cp2").unwrap();
        let WuCheck::Witness(c) = wu_v2_check(&m) else {
            panic!("v2 of CP2 is nonzero");
        };
        // in the middle degree Sq² is the cup square
        let square = cup(&c, &c, 0).unwrap();
        assert!(integral_bit(&m, &square));
    }
}
