//! The spin version `0 → QH^n(R/Z) → G → SH^{n-1} → 0`, reported as a
//! profile. `H^n(X, Y; R/Z) ≅ (R/Z)^{b_n} ⊕ (torsion of H_n)`; the circle
//! part cannot be enumerated, so the group is only resolved when both pieces
//! of `QH` vanish.

use std::fmt;

use super::{GContext, GGroupError, GroupProfile};
use crate::cochain::{Cochain, CohomologySolver, Int};
use crate::scx::ComplexPair;

const PRIME: i64 = (1 << 31) - 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinProfile {
    pub n: usize,
    /// Rational Betti number `b_n` of the pair: the number of circle
    /// summands of `H^n(R/Z)`.
    pub circle_rank: usize,
    /// 2-rank of the torsion of `H_n(X, Y; Z)`.
    pub torsion_rank: usize,
    /// Bounds on `dim SH^{n-1}` for `Sq²/2` with `R/Z` values; the lower
    /// bound is the pin kernel.
    pub sh_bounds: (usize, usize),
    /// The whole group, when `QH` vanishes and `SH` is pinned down.
    pub resolved: Option<GroupProfile>,
}

impl fmt::Display for SpinProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(g) = self.resolved {
            return write!(f, "{g}");
        }
        let mut qh = Vec::new();
        if self.circle_rank > 0 {
            qh.push(format!("(ℝ/ℤ)^{}", self.circle_rank));
        }
        if self.torsion_rank > 0 {
            qh.push(format!("T (2-rank {})", self.torsion_rank));
        }
        let qh = if qh.is_empty() { "0".to_string() } else { qh.join(" ⊕ ") };
        let (lo, hi) = self.sh_bounds;
        let sh = if lo == hi { format!("(ℤ/2)^{lo}") } else { format!("(ℤ/2)^[{lo}..{hi}]") };
        write!(f, "unresolved: QH = {qh}, SH = {sh}")
    }
}

/// Rank over `F_p` of the matrix with the given rows.
fn rank_mod_p(mut rows: Vec<Vec<i64>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], PRIME - 2);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col] * inv % PRIME;
                for c in col..width {
                    rows[r][c] = (rows[r][c] - factor * rows[rank][c]).rem_euclid(PRIME);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64) -> i64 {
    let mut out = 1;
    b = b.rem_euclid(PRIME);
    while e > 0 {
        if e & 1 == 1 {
            out = out * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    out
}

/// Rank of the relative coboundary `C^k → C^{k+1}` with integer signs,
/// reduced mod a large prime.
fn coboundary_rank(pair: &ComplexPair, k: usize) -> usize {
    let cx = pair.ambient();
    let next = pair.relative_indices(k + 1);
    let rows = pair
        .relative_indices(k)
        .into_iter()
        .map(|j| {
            let d = Cochain::from_fn(cx.clone(), k, |x| Int(i64::from(x == j))).d();
            next.iter().map(|&t| d.get(t).0.rem_euclid(PRIME)).collect()
        })
        .collect();
    rank_mod_p(rows)
}

/// Rational Betti numbers `b_0..=b_top` of the pair.
pub(crate) fn betti(pair: &ComplexPair, top: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=top).map(|k| coboundary_rank(pair, k)).collect();
    (0..=top)
        .map(|k| {
            let cells = pair.relative_indices(k).len();
            cells - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 }
        })
        .collect()
}

pub fn g_spin_profile(pair: &ComplexPair, n: usize) -> Result<SpinProfile, GGroupError> {
    let ctx = GContext::new(pair, n)?;
    let b = betti(pair, n);
    // dim H^k(F2) = b_k + t_k + t_{k-1}, with t_k the 2-rank of torsion in H_k
    let mut t = Vec::with_capacity(n + 1);
    for (k, &bk) in b.iter().enumerate() {
        let h = CohomologySolver::new(pair, k).dim();
        let prev = if k > 0 { t[k - 1] } else { 0 };
        t.push(h - bk - prev);
    }
    let (circle_rank, torsion_rank) = (b[n], t[n]);
    let sh_pin = ctx.sh_basis().len();
    let h_prev = ctx.solvers()[0].dim();
    // the kernel of H^{n+1}(F2) → H^{n+1}(R/Z) has dimension t_n
    let sh_bounds = (sh_pin, h_prev.min(sh_pin + torsion_rank));
    let resolved = (circle_rank == 0 && torsion_rank == 0 && sh_bounds.0 == sh_bounds.1).then_some(GroupProfile {
        z4: 0,
        z2: sh_pin,
    });
    Ok(SpinProfile {
        n,
        circle_rank,
        torsion_rank,
        sh_bounds,
        resolved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scx::catalog;

    fn profile(name: &str) -> SpinProfile {
        let m = catalog(name).unwrap();
        g_spin_profile(m.pair(), m.n()).unwrap()
    }

    #[test]
    fn betti_numbers() {
        let b = |name: &str| {
            let m = catalog(name).unwrap();
            betti(m.pair(), m.n())
        };
        assert_eq!(b("torus"), vec![1, 2, 1]);
        assert_eq!(b("klein"), vec![1, 1, 0]);
        assert_eq!(b("rp2"), vec![1, 0, 0]);
        assert_eq!(b("annulus"), vec![0, 1, 1]);
        assert_eq!(b("mobius"), vec![0, 0, 0]);
    }

    #[test]
    fn profiles() {
        let s = profile("sphere2");
        assert_eq!((s.circle_rank, s.sh_bounds, s.resolved), (1, (0, 0), None));
        assert_eq!(s.to_string(), "unresolved: QH = (ℝ/ℤ)^1, SH = (ℤ/2)^0");

        let r = profile("rp2");
        assert_eq!(r.resolved, Some(GroupProfile { z4: 0, z2: 1 }));
        assert_eq!(r.to_string(), "ℤ/2");

        let t = profile("torus");
        assert_eq!((t.circle_rank, t.torsion_rank, t.sh_bounds, t.resolved), (1, 0, (2, 2), None));

        // H_2(K) = 0; the 2-torsion of H_1 does not reach degree 2
        let k = profile("klein");
        assert_eq!((k.circle_rank, k.torsion_rank), (0, 0));
        assert_eq!(k.resolved, Some(GroupProfile { z4: 0, z2: 2 }));
    }
}
