//! Steenrod's `∪_i` products by the cut-point formula, and the cochain
//! squares built from them.
//!
//! On an ordered `m`-simplex with `m = p + q - i`, choose cuts
//! `0 ≤ k_0 < … < k_i ≤ m`. The blocks `[0,k_0], [k_0,k_1], …, [k_i,m]`
//! share their cut vertices; `u` reads the even blocks, `v` the odd ones,
//! and only cuts giving exactly `p+1` and `q+1` vertices contribute.
//!
//! Over the integers a term carries the sign of the shuffle that lists the
//! vertices used only by `u`, followed by all vertices of `v`, times
//! `(-1)^{p·i}`. This is the convention under which the coboundary formula
//!
//! `d(x ∪_i y) = (-1)^i (dx ∪_i y + (-1)^{|x|} x ∪_i dy - x ∪_{i-1} y - (-1)^{i+|x||y|} y ∪_{i-1} x)`
//!
//! and the suspension formula `s(x ∪_i y) = (-1)^{|x|+i+1} sx ∪_{i+1} sy`
//! both hold exactly, with `∪_0` the ordinary cup product.

use super::{same_complex, Cochain, CochainError, CupRing, Z2};
use crate::perm_sign;

/// Which integer sign convention to use. Only [`SignRule::Standard`] is
/// correct; the other exists so test suites can check they detect errors.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SignRule {
    #[default]
    Standard,
    /// Drops the `(-1)^{p·i}` factor.
    Mutated,
}

#[derive(Clone, Debug)]
pub(crate) struct CupTerm {
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub sign: i8,
}

/// All contributing cut patterns for `∪_i` of degrees `p`, `q`.
pub(crate) fn cup_terms(p: usize, q: usize, i: usize, rule: SignRule) -> Vec<CupTerm> {
    let m = p + q - i;
    let mut out = Vec::new();
    let mut cuts: Vec<usize> = (0..=i).collect();
    loop {
        let mut in_u = vec![false; m + 1];
        let mut in_v = vec![false; m + 1];
        let mut start = 0;
        for (b, &end) in cuts.iter().chain(std::iter::once(&m)).enumerate() {
            let side = if b % 2 == 0 { &mut in_u } else { &mut in_v };
            for x in side.iter_mut().take(end + 1).skip(start) {
                *x = true;
            }
            start = end;
        }
        let u: Vec<usize> = (0..=m).filter(|&x| in_u[x]).collect();
        let v: Vec<usize> = (0..=m).filter(|&x| in_v[x]).collect();
        if u.len() == p + 1 && v.len() == q + 1 {
            let shuffle: Vec<usize> = u
                .iter()
                .copied()
                .filter(|&x| !in_v[x])
                .chain(v.iter().copied())
                .collect();
            let mut sign = perm_sign(&shuffle);
            if rule == SignRule::Standard && (p * i) % 2 == 1 {
                sign = -sign;
            }
            out.push(CupTerm { u, v, sign });
        }
        // next (i+1)-subset of 0..=m in lexicographic order
        let mut j = i + 1;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if cuts[j] < m - (i - j) {
                break;
            }
        }
        cuts[j] += 1;
        for l in j + 1..=i {
            cuts[l] = cuts[l - 1] + 1;
        }
    }
}

/// `u ∪_i v`; identically zero when `i < 0` or `i` exceeds either degree.
pub fn cup<R: CupRing>(u: &Cochain<R>, v: &Cochain<R>, i: i64) -> Result<Cochain<R>, CochainError> {
    cup_with_rule(u, v, i, SignRule::Standard)
}

#[doc(hidden)]
pub fn cup_with_rule<R: CupRing>(
    u: &Cochain<R>,
    v: &Cochain<R>,
    i: i64,
    rule: SignRule,
) -> Result<Cochain<R>, CochainError> {
    if !same_complex(&u.complex, &v.complex) {
        return Err(CochainError::ComplexMismatch);
    }
    let (p, q) = (u.degree, v.degree);
    let deg = p as i64 + q as i64 - i;
    if deg < 0 {
        return Err(CochainError::NegativeDegree { p, q, i });
    }
    let m = deg as usize;
    let cx = u.complex.clone();
    if i < 0 || i as usize > p.min(q) {
        return Ok(Cochain::zero(cx, m));
    }
    let terms = cup_terms(p, q, i as usize, rule);
    let mut ubuf = Vec::with_capacity(p + 1);
    let mut vbuf = Vec::with_capacity(q + 1);
    let values = (0..cx.count(m))
        .map(|j| {
            let s = cx.simplex(m, j);
            let mut acc = R::zero();
            for t in &terms {
                ubuf.clear();
                ubuf.extend(t.u.iter().map(|&x| s[x]));
                let a = u.values[cx.index_of(&ubuf).expect("face of a simplex")];
                if a.is_zero() {
                    continue;
                }
                vbuf.clear();
                vbuf.extend(t.v.iter().map(|&x| s[x]));
                let b = v.values[cx.index_of(&vbuf).expect("face of a simplex")];
                acc = acc + (a * b).signed(t.sign);
            }
            acc
        })
        .collect();
    Ok(Cochain {
        complex: cx,
        degree: m,
        values,
    })
}

/// `Sq^i c = c ∪_{k-i} c + c ∪_{k-i+1} dc` for a mod-2 `k`-cochain.
pub fn sq(i: usize, c: &Cochain<Z2>) -> Cochain<Z2> {
    let k = c.degree as i64;
    let i = i as i64;
    let a = cup(c, c, k - i).expect("same complex");
    let b = cup(c, &c.d(), k - i + 1).expect("same complex");
    &a + &b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::{Int, Z2};
    use crate::scx::build_complex;
    use std::sync::Arc;

    #[test]
    fn cup0_is_front_back() {
        let t = cup_terms(1, 2, 0, SignRule::Standard);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].u, vec![0, 1]);
        assert_eq!(t[0].v, vec![1, 2, 3]);
        assert_eq!(t[0].sign, 1);
    }

    #[test]
    fn cup1_on_an_edge() {
        let x = Arc::new(build_complex(&[[0, 1]], |v| v as i64).unwrap());
        let u = Cochain::from_values(x.clone(), 1, vec![Int(3)]).unwrap();
        let v = Cochain::from_values(x, 1, vec![Int(5)]).unwrap();
        // the coboundary formula at degrees (1, 0) forces this sign
        let w = cup(&u, &v, 1).unwrap();
        assert_eq!(w.values(), &[Int(-15)]);
        let u2 = u.map(|x| Z2::new(x.0));
        let v2 = v.map(|x| Z2::new(x.0));
        assert_eq!(cup(&u2, &v2, 1).unwrap().values(), &[Z2::ONE]);
    }

    #[test]
    fn out_of_range_indices_vanish() {
        let x = Arc::new(build_complex(&[[0, 1, 2]], |v| v as i64).unwrap());
        let u = Cochain::from_fn(x.clone(), 1, |_| Z2::ONE);
        assert!(cup(&u, &u, -1).unwrap().is_zero());
        assert!(cup(&u, &u, 2).unwrap().is_zero());
        assert!(cup(&u, &u, 3).is_err());
    }

    #[test]
    fn sq1_of_a_cocycle_is_its_square() {
        let x = Arc::new(build_complex(&[[0, 1, 2]], |v| v as i64).unwrap());
        let u = Cochain::indicator(x.clone(), &[0], Z2::ONE).unwrap().d();
        assert_eq!(sq(1, &u), cup(&u, &u, 0).unwrap());
    }
}
