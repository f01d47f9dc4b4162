use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use crate::perm_sign;

use super::{
    barycentric_subdivide, cone, ComplexPair, OrderedComplex, ScxError, Simplex, SimplicialMap,
    Suspension, Vertex,
};

/// Optional declarations checked against what the complex implies.
#[derive(Clone, Debug, Default)]
pub struct ManifoldOptions {
    /// Declared boundary simplices; `None` computes the boundary.
    pub boundary: Option<Vec<Vec<Vertex>>>,
    /// Declared orientation signs of top simplices; `None` orients
    /// automatically when possible.
    pub orientation: Option<Vec<(Vec<Vertex>, i8)>>,
}

/// A triangulated `n`-manifold with its boundary subcomplex. The fundamental
/// class is the sum of all `n`-simplices, signed by `orientation` if present.
#[derive(Clone, Debug)]
pub struct ManifoldPair {
    pair: ComplexPair,
    n: usize,
    orientation: Option<Vec<i8>>,
    boundary_full: bool,
    boundary_first: bool,
}

impl ManifoldPair {
    /// Strict validation: pseudo-manifold, full boundary, boundary vertices
    /// first in every simplex, consistent declared data.
    pub fn validate(complex: Arc<OrderedComplex>, n: usize) -> Result<Self, ScxError> {
        Self::validate_with(complex, n, &ManifoldOptions::default())
    }

    pub fn validate_with(
        complex: Arc<OrderedComplex>,
        n: usize,
        opts: &ManifoldOptions,
    ) -> Result<Self, ScxError> {
        let m = Self::pseudo_with(complex, n, opts)?;
        if let Some(s) = m.full_violation() {
            return Err(ScxError::BoundaryNotFull { simplex: s });
        }
        if let Some(s) = m.ordering_violation() {
            return Err(ScxError::OrderingViolation { simplex: s });
        }
        Ok(m)
    }

    /// Loose validation: only the pseudo-manifold conditions and declared
    /// data are enforced. Fullness and ordering are recorded, not required.
    pub fn pseudo(complex: Arc<OrderedComplex>, n: usize) -> Result<Self, ScxError> {
        Self::pseudo_with(complex, n, &ManifoldOptions::default())
    }

    pub fn pseudo_with(
        complex: Arc<OrderedComplex>,
        n: usize,
        opts: &ManifoldOptions,
    ) -> Result<Self, ScxError> {
        for s in complex.maximal_simplices() {
            if s.len() != n + 1 {
                return Err(ScxError::NotPure {
                    n,
                    simplex: s.to_vec(),
                });
            }
        }
        let mut boundary: Vec<Vec<Vertex>> = Vec::new();
        if n > 0 {
            for (f, cof) in complex.cofaces(n).iter().enumerate() {
                match cof.len() {
                    1 => boundary.push(complex.simplex(n - 1, f).to_vec()),
                    2 => {}
                    c => {
                        return Err(ScxError::NotPseudoManifold {
                            simplex: complex.simplex(n - 1, f).to_vec(),
                            cofaces: c,
                        })
                    }
                }
            }
        }
        let pair = ComplexPair::new(complex.clone(), &boundary)?;
        if let Some(declared) = &opts.boundary {
            let declared = ComplexPair::new(complex.clone(), declared)?;
            for k in 0..=n {
                for j in 0..complex.count(k) {
                    if declared.in_sub(k, j) != pair.in_sub(k, j) {
                        return Err(ScxError::BoundaryMismatch {
                            simplex: complex.simplex(k, j).to_vec(),
                        });
                    }
                }
            }
        }
        let mut m = Self {
            pair,
            n,
            orientation: None,
            boundary_full: true,
            boundary_first: true,
        };
        m.boundary_full = m.full_violation().is_none();
        m.boundary_first = m.ordering_violation().is_none();
        m.orientation = match &opts.orientation {
            None => m.auto_orientation(),
            Some(decl) => Some(m.check_orientation(decl)?),
        };
        Ok(m)
    }

    fn full_violation(&self) -> Option<Vec<Vertex>> {
        let cx = self.complex();
        let bverts = self.pair.sub_vertices();
        for k in 1..=self.n {
            for j in 0..cx.count(k) {
                let s = cx.simplex(k, j);
                if !self.pair.in_sub(k, j) && s.iter().all(|v| bverts.contains(v)) {
                    return Some(s.to_vec());
                }
            }
        }
        None
    }

    fn ordering_violation(&self) -> Option<Vec<Vertex>> {
        let bverts = self.pair.sub_vertices();
        let cx = self.complex();
        for j in 0..cx.count(self.n) {
            let s = cx.simplex(self.n, j);
            let first_interior = s.iter().position(|v| !bverts.contains(v)).unwrap_or(s.len());
            if s[first_interior..].iter().any(|v| bverts.contains(v)) {
                return Some(s.to_vec());
            }
        }
        None
    }

    /// Signs making interior faces cancel, or `None` if nonorientable.
    fn auto_orientation(&self) -> Option<Vec<i8>> {
        let cx = self.complex();
        let n = self.n;
        let top = cx.count(n);
        if n == 0 {
            return Some(vec![1; top]);
        }
        let cof = cx.cofaces(n);
        let mut sign = vec![0i8; top];
        for start in 0..top {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(a) = queue.pop_front() {
                for (i, &f) in cx.faces(n, a).iter().enumerate() {
                    let f = f as usize;
                    let Some(&b) = cof[f].iter().find(|&&b| b != a) else {
                        continue;
                    };
                    let l = cx.faces(n, b).iter().position(|&g| g as usize == f).unwrap();
                    // induced signs on the shared face must cancel
                    let want = -sign[a] * parity(i) * parity(l);
                    if sign[b] == 0 {
                        sign[b] = want;
                        queue.push_back(b);
                    } else if sign[b] != want {
                        return None;
                    }
                }
            }
        }
        Some(sign)
    }

    fn check_orientation(&self, decl: &[(Vec<Vertex>, i8)]) -> Result<Vec<i8>, ScxError> {
        let cx = self.complex();
        let n = self.n;
        let mut sign = vec![0i8; cx.count(n)];
        for (s, e) in decl {
            // a declared tuple may list vertices in any order; fold the
            // permutation sign into the stored orientation
            let sorted = cx.order(s)?;
            let j = cx.index_of(&sorted).ok_or_else(|| ScxError::NotInAmbient(s.clone()))?;
            let perm: Vec<usize> = s
                .iter()
                .map(|v| sorted.iter().position(|w| w == v).unwrap())
                .collect();
            sign[j] = e.signum() * perm_sign(&perm);
        }
        if let Some(j) = sign.iter().position(|&e| e == 0) {
            return Err(ScxError::OrientationIncomplete {
                simplex: cx.simplex(n, j).to_vec(),
            });
        }
        if n > 0 {
            let mut total = vec![0i64; cx.count(n - 1)];
            for (j, &e) in sign.iter().enumerate() {
                for (i, &f) in cx.faces(n, j).iter().enumerate() {
                    total[f as usize] += (e * parity(i)) as i64;
                }
            }
            for (f, t) in total.iter().enumerate() {
                if *t != 0 && !self.pair.in_sub(n - 1, f) {
                    return Err(ScxError::OrientationInconsistent {
                        simplex: cx.simplex(n - 1, f).to_vec(),
                    });
                }
            }
        }
        Ok(sign)
    }

    pub fn pair(&self) -> &ComplexPair {
        &self.pair
    }

    pub fn complex(&self) -> &Arc<OrderedComplex> {
        self.pair.ambient()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_closed(&self) -> bool {
        self.pair.sub_is_empty()
    }

    pub fn is_oriented(&self) -> bool {
        self.orientation.is_some()
    }

    pub fn orientation(&self) -> Option<&[i8]> {
        self.orientation.as_deref()
    }

    pub fn boundary_full(&self) -> bool {
        self.boundary_full
    }

    pub fn boundary_first(&self) -> bool {
        self.boundary_first
    }

    pub fn without_orientation(mut self) -> Self {
        self.orientation = None;
        self
    }

    /// `∂M` as a closed `(n-1)`-manifold (same vertex ids and ranks).
    pub fn boundary(&self) -> Result<ManifoldPair, ScxError> {
        if self.is_closed() {
            return Err(ScxError::EmptyBoundary);
        }
        let b = Arc::new(self.pair.sub_complex());
        ManifoldPair::pseudo(b, self.n - 1)
    }

    pub fn boundary_vertices(&self) -> BTreeSet<Vertex> {
        self.pair.sub_vertices()
    }

    /// One barycentric subdivision, with the max-vertex map.
    pub fn subdivide(&self) -> Result<(ManifoldPair, SimplicialMap), ScxError> {
        let (sd, b) = barycentric_subdivide(self.complex());
        let m = ManifoldPair::validate(sd, self.n)?;
        let m = if self.is_oriented() { m } else { m.without_orientation() };
        Ok((m, b))
    }

    /// The manifold spanned by a set of top simplices (boundary computed).
    pub fn codim0(&self, top: &[Simplex]) -> Result<ManifoldPair, ScxError> {
        let sub = Arc::new(self.complex().subcomplex(top)?);
        ManifoldPair::pseudo(sub, self.n)
    }

    pub fn disjoint_union(&self, other: &ManifoldPair) -> Result<(ManifoldPair, Vertex), ScxError> {
        let (u, shift) = super::disjoint_union(self.complex(), other.complex());
        let mut m = ManifoldPair::pseudo(Arc::new(u), self.n)?;
        if !(self.is_oriented() && other.is_oriented()) {
            m.orientation = None;
        }
        Ok((m, shift))
    }
}

fn parity(i: usize) -> i8 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The collapse map `M → C⁺∂M`: identity on boundary vertices, every
/// interior vertex to the cone vertex.
pub fn collapse_map(m: &ManifoldPair) -> Result<(Suspension, SimplicialMap), ScxError> {
    if m.is_closed() {
        return Err(ScxError::EmptyBoundary);
    }
    if !m.boundary_full {
        let s = m.full_violation().unwrap_or_default();
        return Err(ScxError::BoundaryNotFull { simplex: s });
    }
    if !m.boundary_first {
        let s = m.ordering_violation().unwrap_or_default();
        return Err(ScxError::OrderingViolation { simplex: s });
    }
    let boundary = Arc::new(m.pair.sub_complex());
    let c = cone(&boundary);
    let bverts = m.boundary_vertices();
    let map: BTreeMap<Vertex, Vertex> = m
        .complex()
        .vertices()
        .map(|v| (v, if bverts.contains(&v) { v } else { c.upper }))
        .collect();
    let t = SimplicialMap::new(m.complex().clone(), c.total.clone(), map)?;
    Ok((c, t))
}
