//! Brute-force quotient: every pair is enumerated, packed into a `u128`
//! (the `w` bits on relative `n`-simplices, then the `p` bits on relative
//! `(n-1)`-simplices), and cosets of the relation subgroup are merged with
//! union-find under left multiplication by its generators.

use std::collections::{BTreeMap, BTreeSet};

use super::{GContext, GGroupError, GGroupStructure, GPair, GroupProfile, SequenceDims};
use crate::cochain::{cup, sq, Cochain, Z2};
use crate::scx::ComplexPair;

/// Largest number of pairs enumerated before giving up.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub structure: GGroupStructure,
    /// Pairs enumerated before the quotient.
    pub pairs: u64,
    /// Generators of the relation subgroup used for merging.
    pub relations: usize,
    pub abelian: bool,
}

pub struct Oracle<'a> {
    ctx: &'a GContext,
    w_rel: Vec<usize>,
    p_rel: Vec<usize>,
    /// `cup_table[e][f]`: packed `w` bits of `e* ∪_{n-2} f*`.
    cup_table: Vec<Vec<u128>>,
    elements: Vec<u128>,
    parent: Vec<u32>,
    relations: usize,
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

impl<'a> Oracle<'a> {
    pub fn new(ctx: &'a GContext, budget: u128) -> Result<Self, GGroupError> {
        let pair = ctx.pair();
        let n = ctx.n();
        let (w_rel, p_rel) = (pair.relative_indices(n), pair.relative_indices(n - 1));
        let bits = w_rel.len() + p_rel.len();
        if bits > 128 {
            return Err(GGroupError::TooWide { bits });
        }
        let dim = ctx.admissible_basis().len() + ctx.cocycle_basis().len();
        let pairs = if dim >= 127 { u128::MAX } else { 1u128 << dim };
        if pairs > budget {
            return Err(GGroupError::BudgetExceeded { pairs, budget });
        }
        let cx = pair.ambient().clone();
        let unit = |k: usize, j: usize| Cochain::from_fn(cx.clone(), k, |x| Z2::from(x == j));
        let mut o = Self {
            ctx,
            w_rel,
            p_rel,
            cup_table: Vec::new(),
            elements: Vec::new(),
            parent: Vec::new(),
            relations: 0,
        };
        o.cup_table = o
            .p_rel
            .iter()
            .map(|&e| {
                o.p_rel
                    .iter()
                    .map(|&f| o.pack_w(&cup(&unit(n - 1, e), &unit(n - 1, f), n as i64 - 2).expect("same complex")))
                    .collect()
            })
            .collect();
        o.enumerate();
        o.merge();
        Ok(o)
    }

    fn pack_w(&self, w: &Cochain<Z2>) -> u128 {
        self.w_rel
            .iter()
            .enumerate()
            .filter(|(_, &j)| w.get(j).bit())
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    fn pack_p(&self, p: &Cochain<Z2>) -> u128 {
        let shift = self.w_rel.len();
        self.p_rel
            .iter()
            .enumerate()
            .filter(|(_, &j)| p.get(j).bit())
            .fold(0, |acc, (i, _)| acc | 1 << (i + shift))
    }

    pub fn pack(&self, a: &GPair) -> u128 {
        self.pack_w(&a.w) | self.pack_p(&a.p)
    }

    fn w_mask(&self) -> u128 {
        match self.w_rel.len() {
            128 => u128::MAX,
            k => (1u128 << k) - 1,
        }
    }

    /// `w` bits of `p ∪_{n-2} q` for packed `p`, `q`.
    fn cross(&self, x: u128, y: u128) -> u128 {
        let shift = self.w_rel.len();
        let (xp, yp) = (x >> shift, y >> shift);
        let mut out = 0;
        for e in ones(xp) {
            for f in ones(yp) {
                out ^= self.cup_table[e][f];
            }
        }
        out
    }

    fn mul(&self, x: u128, y: u128) -> u128 {
        (x ^ y) ^ self.cross(x, y)
    }

    fn enumerate(&mut self) {
        let ctx = self.ctx;
        let cx = ctx.pair().ambient().clone();
        let n = ctx.n();
        let admissible = ctx.admissible_basis();
        let zs: Vec<u128> = ctx.cocycle_basis().iter().map(|z| self.pack_w(z)).collect();
        let mut p = Cochain::zero(cx, n - 1);
        let mut out = Vec::with_capacity(1 << (admissible.len() + zs.len()));
        for step in 0u64..1 << admissible.len() {
            if step > 0 {
                p = &p + &admissible[step.trailing_zeros() as usize];
            }
            let base = self.pack(&ctx.complete(&p).expect("admissible p"));
            let mut w = base;
            for s in 0u64..1 << zs.len() {
                if s > 0 {
                    w ^= zs[s.trailing_zeros() as usize];
                }
                out.push(w);
            }
        }
        out.sort_unstable();
        debug_assert!(out.windows(2).all(|w| w[0] < w[1]), "pairs are distinct");
        self.elements = out;
    }

    fn index(&self, x: u128) -> u32 {
        self.elements.binary_search(&x).expect("products of pairs are pairs") as u32
    }

    fn merge(&mut self) {
        let ctx = self.ctx;
        let pair = ctx.pair();
        let cx = pair.ambient().clone();
        let n = ctx.n();
        let unit = |k: usize, j: usize| Cochain::from_fn(cx.clone(), k, |x| Z2::from(x == j));
        let mut gens: BTreeSet<u128> = BTreeSet::new();
        for j in pair.relative_indices(n - 1) {
            gens.insert(self.pack_w(&unit(n - 1, j).d()));
        }
        if n >= 2 {
            for j in pair.relative_indices(n - 2) {
                let c = unit(n - 2, j);
                gens.insert(self.pack_w(&sq(2, &c)) | self.pack_p(&c.d()));
            }
        }
        gens.remove(&0);
        self.relations = gens.len();
        self.parent = (0..self.elements.len() as u32).collect();
        for &g in &gens {
            for i in 0..self.elements.len() {
                let j = self.index(self.mul(g, self.elements[i]));
                let (a, b) = (find(&mut self.parent, i as u32), find(&mut self.parent, j));
                if a != b {
                    self.parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
    }

    fn class(&mut self, x: u128) -> u32 {
        let i = self.index(x);
        find(&mut self.parent, i)
    }

    /// Class id of a pair (the smallest index in its coset).
    pub fn class_of(&mut self, a: &GPair) -> Result<u32, GGroupError> {
        self.ctx.validate(a)?;
        Ok(self.class(self.pack(a)))
    }

    /// One packed representative per class, keyed by class id.
    fn representatives(&mut self) -> BTreeMap<u32, u128> {
        let mut reps = BTreeMap::new();
        for i in 0..self.elements.len() {
            let r = find(&mut self.parent, i as u32);
            reps.entry(r).or_insert(self.elements[i]);
        }
        reps
    }

    /// Order of the subgroup of the quotient generated by the given pairs.
    pub fn generated_order(&mut self, gens: &[GPair]) -> Result<usize, GGroupError> {
        let gens: Vec<u128> = gens
            .iter()
            .map(|g| self.ctx.validate(g).map(|_| self.pack(g)))
            .collect::<Result<_, _>>()?;
        let mut seen = BTreeMap::new();
        let id = self.class(0);
        seen.insert(id, 0u128);
        let mut frontier = vec![0u128];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.mul(g, x);
                let c = self.class(y);
                if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(c) {
                    e.insert(y);
                    frontier.push(y);
                }
            }
        }
        Ok(seen.len())
    }

    pub fn report(&mut self) -> OracleReport {
        let reps = self.representatives();
        let order = reps.len();
        let id = self.class(0);
        let w_mask = self.w_mask();
        // classes of the form (w, 0): the image of QH
        let mut qh_classes = BTreeSet::new();
        for i in 0..self.elements.len() {
            if self.elements[i] & !w_mask == 0 {
                qh_classes.insert(find(&mut self.parent, i as u32));
            }
        }
        let mut involutions = 0usize;
        for &x in reps.values() {
            let square = self.mul(x, x);
            if self.class(square) == id {
                involutions += 1;
            }
        }
        let xs: Vec<u128> = reps.values().copied().collect();
        let mut abelian = true;
        'outer: for (i, &x) in xs.iter().enumerate() {
            for &y in &xs[..i] {
                let (a, b) = (self.mul(x, y), self.mul(y, x));
                if self.class(a) != self.class(b) {
                    abelian = false;
                    break 'outer;
                }
            }
        }
        let log2 = |k: usize| {
            debug_assert!(k.is_power_of_two());
            k.trailing_zeros() as usize
        };
        let (m, r, q) = (log2(order), log2(involutions), log2(qh_classes.len()));
        let profile = GroupProfile {
            z4: m - r,
            z2: 2 * r - m,
        };
        OracleReport {
            structure: GGroupStructure {
                n: self.ctx.n(),
                dims: SequenceDims {
                    qh: q,
                    sh: m - q,
                    phi_rank: m - r,
                },
                profile,
                generators: Vec::new(),
            },
            pairs: self.elements.len() as u64,
            relations: self.relations,
            abelian,
        }
    }
}

fn ones(mut x: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (x != 0).then(|| {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            i
        })
    })
}

/// The quotient computed by enumeration; agrees with [`super::g_pin`].
pub fn g_pin_bruteforce(pair: &ComplexPair, n: usize, budget: u128) -> Result<OracleReport, GGroupError> {
    let ctx = GContext::new(pair, n)?;
    Ok(Oracle::new(&ctx, budget)?.report())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ggroup::g_pin;
    use crate::scx::{build_complex, catalog};
    use std::sync::Arc;

    #[test]
    fn engines_agree_on_fixtures() {
        for name in ["rp2", "mobius", "annulus", "sphere2", "sphere1", "disk2"] {
            let m = catalog(name).unwrap();
            let formula = g_pin(m.pair(), m.n()).unwrap();
            let ctx = GContext::new(m.pair(), m.n()).unwrap();
            let mut o = Oracle::new(&ctx, DEFAULT_BUDGET).unwrap();
            let r = o.report();
            assert!(r.abelian, "{name}");
            assert_eq!(r.structure.profile, formula.profile, "{name}");
            assert_eq!(r.structure.dims, formula.dims, "{name}");
            let gens: Vec<GPair> = formula.generators.iter().map(|g| g.pair.clone()).collect();
            assert_eq!(o.generated_order(&gens).unwrap(), 1 << formula.profile.order_log2(), "{name}");
            for g in &formula.generators {
                let id = o.class_of(&ctx.identity()).unwrap();
                let sq = ctx.product(&g.pair, &g.pair).unwrap();
                assert_ne!(o.class_of(&g.pair).unwrap(), id);
                assert_eq!(o.class_of(&sq).unwrap() == id, g.order == 2, "{name}");
            }
        }
    }

    #[test]
    fn rp2_has_two_to_the_sixteen_pairs() {
        let m = catalog("rp2").unwrap();
        let r = g_pin_bruteforce(m.pair(), 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.pairs, 1 << 16);
        assert_eq!(r.structure.profile.to_string(), "ℤ/4");
    }

    #[test]
    fn relative_simplex() {
        // (Δ², ∂Δ²): a single relative 2-cell
        let x = Arc::new(build_complex(&[[0, 1, 2]], |v| v as i64).unwrap());
        let pair = ComplexPair::new(x, &[[0, 1], [1, 2], [0, 2]]).unwrap();
        let r = g_pin_bruteforce(&pair, 2, DEFAULT_BUDGET).unwrap();
        let f = g_pin(&pair, 2).unwrap();
        assert_eq!(r.structure.profile, f.profile);
        assert_eq!(r.structure.profile.order_log2(), f.dims.qh + f.dims.sh);
        assert_eq!(f.profile.to_string(), "ℤ/2");
    }

    #[test]
    fn budget_is_enforced() {
        let m = catalog("klein").unwrap();
        let r = g_pin_bruteforce(m.pair(), 2, DEFAULT_BUDGET);
        assert!(matches!(r, Err(GGroupError::BudgetExceeded { .. })), "{r:?}");
        let m = catalog("rp2").unwrap();
        assert!(matches!(
            g_pin_bruteforce(m.pair(), 2, 1000),
            Err(GGroupError::BudgetExceeded { pairs: 65536, budget: 1000 })
        ));
    }
}
