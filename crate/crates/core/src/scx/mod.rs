//! Ordered simplicial complexes, simplicial maps, pairs and manifolds.
//!
//! A vertex order is realized as an integer rank per vertex. Only the
//! relative order inside each simplex matters, so simplices are stored as
//! vertex tuples sorted by rank and two vertices of one simplex may never
//! share a rank.
//!
//! Simplices of each dimension are kept in a canonical order (lexicographic
//! on the rank-ordered id tuples); cochains index into that order.

mod build;
mod fixtures;
mod manifold;
mod text;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use build::{
    barycentric_subdivide, cone, cylinder, disjoint_union, product, suspension, Cylinder,
    Suspension,
};
pub use fixtures::{catalog, fixture_names, grid_torus, FIXTURE_NAMES};
pub use manifold::{collapse_map, ManifoldOptions, ManifoldPair};
pub use text::{parse_complex, write_complex, ComplexFile};

pub type Vertex = u32;
pub type Simplex = Box<[Vertex]>;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ScxError {
    #[error("simplex {simplex:?}: vertices {a} and {b} share rank {rank}")]
    TieInSimplex {
        simplex: Vec<Vertex>,
        a: Vertex,
        b: Vertex,
        rank: i64,
    },
    #[error("simplex {0:?} is empty or repeats a vertex")]
    BadSimplex(Vec<Vertex>),
    #[error("complex is not pure of dimension {n}: {simplex:?} is maximal")]
    NotPure { n: usize, simplex: Vec<Vertex> },
    #[error("not a pseudo-manifold: {simplex:?} lies in {cofaces} top simplices")]
    NotPseudoManifold { simplex: Vec<Vertex>, cofaces: usize },
    #[error("boundary is not full: {simplex:?} has all vertices on the boundary but is not a boundary simplex")]
    BoundaryNotFull { simplex: Vec<Vertex> },
    #[error("ordering violation in {simplex:?}: an interior vertex precedes a boundary vertex (one barycentric subdivision repairs this)")]
    OrderingViolation { simplex: Vec<Vertex> },
    #[error("declared boundary disagrees with the computed one at {simplex:?}")]
    BoundaryMismatch { simplex: Vec<Vertex> },
    #[error("orientation signs are inconsistent across {simplex:?}")]
    OrientationInconsistent { simplex: Vec<Vertex> },
    #[error("orientation sign missing for {simplex:?}")]
    OrientationIncomplete { simplex: Vec<Vertex> },
    #[error("manifold has empty boundary")]
    EmptyBoundary,
    #[error("operation needs a closed manifold")]
    NotClosed,
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("vertex {0} has no image")]
    UnmappedVertex(Vertex),
    #[error("image of {simplex:?} is not a simplex of the target")]
    NotSimplicial { simplex: Vec<Vertex> },
    #[error("map is not weakly order preserving on {simplex:?}")]
    NotOrderPreserving { simplex: Vec<Vertex> },
    #[error("{0:?} is not a simplex of the ambient complex")]
    NotInAmbient(Vec<Vertex>),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A vertex-ordered simplicial complex, closed under faces.
#[derive(Clone)]
pub struct OrderedComplex {
    rank: BTreeMap<Vertex, i64>,
    labels: BTreeMap<Vertex, String>,
    simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
    // faces[k][(k+1)*j + i] = index of the face of simplex j (dim k) missing position i
    faces: Vec<Vec<u32>>,
}

impl PartialEq for OrderedComplex {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.simplices == other.simplices
    }
}
impl Eq for OrderedComplex {}

impl fmt::Debug for OrderedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrderedComplex")
            .field("f_vector", &self.f_vector())
            .finish()
    }
}

/// Builds a complex from its maximal simplices; faces are added.
pub fn build_complex<S: AsRef<[Vertex]>>(
    maximal: &[S],
    rank: impl Fn(Vertex) -> i64,
) -> Result<OrderedComplex, ScxError> {
    let mut all: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    let mut ranks = BTreeMap::new();
    for s in maximal {
        let s = s.as_ref();
        for &v in s {
            ranks.entry(v).or_insert_with(|| rank(v));
        }
        let sorted = sort_by_rank(s, &ranks)?;
        add_faces(&sorted, &mut all);
    }
    Ok(OrderedComplex::from_parts(ranks, all))
}

fn sort_by_rank(s: &[Vertex], ranks: &BTreeMap<Vertex, i64>) -> Result<Vec<Vertex>, ScxError> {
    if s.is_empty() {
        return Err(ScxError::BadSimplex(s.to_vec()));
    }
    let mut v = s.to_vec();
    v.sort_by_key(|x| (ranks[x], *x));
    for w in v.windows(2) {
        if w[0] == w[1] {
            return Err(ScxError::BadSimplex(s.to_vec()));
        }
        if ranks[&w[0]] == ranks[&w[1]] {
            return Err(ScxError::TieInSimplex {
                simplex: s.to_vec(),
                a: w[0],
                b: w[1],
                rank: ranks[&w[0]],
            });
        }
    }
    Ok(v)
}

fn add_faces(s: &[Vertex], out: &mut BTreeSet<Vec<Vertex>>) {
    if out.contains(s) {
        return;
    }
    let n = s.len();
    for mask in 1u32..(1u32 << n) {
        let face: Vec<Vertex> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
        out.insert(face);
    }
}

impl OrderedComplex {
    /// Assembles a complex from a face-closed set of rank-sorted tuples.
    fn from_parts(rank: BTreeMap<Vertex, i64>, all: BTreeSet<Vec<Vertex>>) -> Self {
        let top = all.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut simplices: Vec<Vec<Simplex>> = vec![Vec::new(); top];
        for s in all {
            simplices[s.len() - 1].push(s.into_boxed_slice());
        }
        for layer in &mut simplices {
            layer.sort();
        }
        let index: Vec<HashMap<Simplex, usize>> = simplices
            .iter()
            .map(|layer| layer.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
            .collect();
        let mut faces = vec![Vec::new()];
        for k in 1..simplices.len() {
            let mut table = Vec::with_capacity((k + 1) * simplices[k].len());
            let mut buf = Vec::with_capacity(k);
            for s in &simplices[k] {
                for i in 0..=k {
                    buf.clear();
                    buf.extend(s.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| *v));
                    table.push(index[k - 1][buf.as_slice()] as u32);
                }
            }
            faces.push(table);
        }
        Self {
            rank,
            labels: BTreeMap::new(),
            simplices,
            index,
            faces,
        }
    }

    /// Builds from an arbitrary face-closed family, checking ranks.
    pub fn from_closed_family<S: AsRef<[Vertex]>>(
        simplices: &[S],
        rank: impl Fn(Vertex) -> i64,
    ) -> Result<Self, ScxError> {
        build_complex(simplices, rank)
    }

    pub fn with_labels(mut self, labels: BTreeMap<Vertex, String>) -> Self {
        self.labels = labels;
        self
    }

    pub fn label(&self, v: Vertex) -> String {
        self.labels.get(&v).cloned().unwrap_or_else(|| v.to_string())
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn vertex_count(&self) -> usize {
        self.rank.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.rank.keys().copied()
    }

    pub fn rank(&self, v: Vertex) -> i64 {
        self.rank[&v]
    }

    pub fn ranks(&self) -> &BTreeMap<Vertex, i64> {
        &self.rank
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.rank.keys().next_back().copied()
    }

    pub fn min_rank(&self) -> i64 {
        self.rank.values().copied().min().unwrap_or(0)
    }

    pub fn max_rank(&self) -> i64 {
        self.rank.values().copied().max().unwrap_or(0)
    }

    /// Number of `k`-simplices (zero above the top dimension).
    pub fn count(&self, k: usize) -> usize {
        self.simplices.get(k).map_or(0, Vec::len)
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn simplex(&self, k: usize, j: usize) -> &[Vertex] {
        &self.simplices[k][j]
    }

    /// Index of a rank-sorted tuple among simplices of its dimension.
    pub fn index_of(&self, s: &[Vertex]) -> Option<usize> {
        if s.is_empty() {
            return None;
        }
        self.index.get(s.len() - 1)?.get(s).copied()
    }

    pub fn contains(&self, s: &[Vertex]) -> bool {
        self.index_of(s).is_some()
    }

    /// Indices of the codimension-one faces of simplex `j` of dimension `k`,
    /// face `i` omitting the `i`-th vertex.
    pub fn faces(&self, k: usize, j: usize) -> &[u32] {
        &self.faces[k][(k + 1) * j..(k + 1) * (j + 1)]
    }

    /// Sorts a vertex set by rank, rejecting ties and repeats.
    pub fn order(&self, s: &[Vertex]) -> Result<Vec<Vertex>, ScxError> {
        for v in s {
            if !self.rank.contains_key(v) {
                return Err(ScxError::NotInAmbient(s.to_vec()));
            }
        }
        sort_by_rank(s, &self.rank)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, l)| if k % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let verts: Vec<Vertex> = self.vertices().collect();
        let pos: HashMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(parent: &mut [usize], mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        for e in self.simplices(1) {
            let (a, b) = (find(&mut parent, pos[&e[0]]), find(&mut parent, pos[&e[1]]));
            parent[a.max(b)] = a.min(b);
        }
        let mut groups: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
        for (i, &v) in verts.iter().enumerate() {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(v);
        }
        let mut out: Vec<Vec<Vertex>> = groups.into_values().collect();
        for g in &mut out {
            g.sort_unstable();
        }
        out.sort();
        out
    }

    /// Maximal simplices, in dimension then canonical order.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<&[Vertex]> = BTreeSet::new();
        let mut out = Vec::new();
        for k in (0..self.simplices.len()).rev() {
            for (j, s) in self.simplices[k].iter().enumerate() {
                if !covered.contains(&s[..]) {
                    out.push(s.clone());
                }
                if k > 0 {
                    for &f in self.faces(k, j) {
                        covered.insert(&self.simplices[k - 1][f as usize]);
                    }
                }
            }
        }
        out.reverse();
        out
    }

    /// For each `(k-1)`-simplex, the `k`-simplices containing it.
    pub fn cofaces(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count(k.saturating_sub(1))];
        if k == 0 {
            return out;
        }
        for j in 0..self.count(k) {
            for &f in self.faces(k, j) {
                out[f as usize].push(j);
            }
        }
        out
    }

    /// The subcomplex spanned by the given simplices (plus faces), with the
    /// same vertex ids and ranks.
    pub fn subcomplex<S: AsRef<[Vertex]>>(&self, simplices: &[S]) -> Result<Self, ScxError> {
        let mut all = BTreeSet::new();
        let mut ranks = BTreeMap::new();
        for s in simplices {
            let s = self.order(s.as_ref())?;
            if !self.contains(&s) {
                return Err(ScxError::NotInAmbient(s));
            }
            for v in &s {
                ranks.insert(*v, self.rank(*v));
            }
            add_faces(&s, &mut all);
        }
        let labels = self
            .labels
            .iter()
            .filter(|(v, _)| ranks.contains_key(v))
            .map(|(v, l)| (*v, l.clone()))
            .collect();
        Ok(Self::from_parts(ranks, all).with_labels(labels))
    }

    /// Same simplices, new ranks. Fails if a simplex acquires a tie.
    pub fn reranked(&self, rank: impl Fn(Vertex) -> i64) -> Result<Self, ScxError> {
        let max = self.maximal_simplices();
        Ok(build_complex(&max, rank)?.with_labels(self.labels.clone()))
    }
}

/// A weakly order preserving simplicial map, with the image of every simplex
/// precomputed (`None` marks a degenerate image).
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: Arc<OrderedComplex>,
    target: Arc<OrderedComplex>,
    vertex_map: BTreeMap<Vertex, Vertex>,
    image: Vec<Vec<Option<usize>>>,
}

impl SimplicialMap {
    pub fn new(
        source: Arc<OrderedComplex>,
        target: Arc<OrderedComplex>,
        vertex_map: BTreeMap<Vertex, Vertex>,
    ) -> Result<Self, ScxError> {
        let mut image = Vec::new();
        let mut buf = Vec::new();
        for k in 0..source.simplices.len() {
            let mut layer = Vec::with_capacity(source.count(k));
            for s in source.simplices(k) {
                buf.clear();
                for v in s.iter() {
                    let w = *vertex_map.get(v).ok_or(ScxError::UnmappedVertex(*v))?;
                    if !target.rank.contains_key(&w) {
                        return Err(ScxError::NotSimplicial { simplex: s.to_vec() });
                    }
                    buf.push(w);
                }
                if buf.windows(2).any(|w| target.rank(w[0]) > target.rank(w[1])) {
                    return Err(ScxError::NotOrderPreserving { simplex: s.to_vec() });
                }
                buf.dedup();
                let t = target
                    .index_of(&buf)
                    .ok_or_else(|| ScxError::NotSimplicial { simplex: s.to_vec() })?;
                layer.push((buf.len() == s.len()).then_some(t));
            }
            image.push(layer);
        }
        Ok(Self {
            source,
            target,
            vertex_map,
            image,
        })
    }

    pub fn identity(x: Arc<OrderedComplex>) -> Self {
        let map = x.vertices().map(|v| (v, v)).collect();
        Self::new(x.clone(), x, map).expect("identity is simplicial")
    }

    pub fn source(&self) -> &Arc<OrderedComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<OrderedComplex> {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.vertex_map
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.vertex_map[&v]
    }

    /// Target index of the image of source simplex `(k, j)`, if nondegenerate.
    pub fn image(&self, k: usize, j: usize) -> Option<usize> {
        self.image[k][j]
    }

    pub fn compose(&self, after: &SimplicialMap) -> Result<SimplicialMap, ScxError> {
        let map = self
            .vertex_map
            .iter()
            .map(|(v, w)| (*v, after.apply(*w)))
            .collect();
        SimplicialMap::new(self.source.clone(), after.target.clone(), map)
    }
}

/// A complex with a face-closed subcomplex.
#[derive(Clone, Debug)]
pub struct ComplexPair {
    ambient: Arc<OrderedComplex>,
    sub: Vec<Vec<bool>>,
}

impl ComplexPair {
    pub fn absolute(ambient: Arc<OrderedComplex>) -> Self {
        let sub = (0..ambient.simplices.len())
            .map(|k| vec![false; ambient.count(k)])
            .collect();
        Self { ambient, sub }
    }

    /// The pair spanned by the listed simplices (closed under faces).
    pub fn new<S: AsRef<[Vertex]>>(
        ambient: Arc<OrderedComplex>,
        sub: &[S],
    ) -> Result<Self, ScxError> {
        let mut pair = Self::absolute(ambient);
        for s in sub {
            let s = pair.ambient.order(s.as_ref())?;
            if !pair.ambient.contains(&s) {
                return Err(ScxError::NotInAmbient(s));
            }
            let mut all = BTreeSet::new();
            add_faces(&s, &mut all);
            for f in all {
                let j = pair.ambient.index_of(&f).expect("faces of ambient simplices exist");
                pair.sub[f.len() - 1][j] = true;
            }
        }
        Ok(pair)
    }

    pub fn ambient(&self) -> &Arc<OrderedComplex> {
        &self.ambient
    }

    pub fn in_sub(&self, k: usize, j: usize) -> bool {
        self.sub.get(k).is_some_and(|l| l[j])
    }

    pub fn sub_is_empty(&self) -> bool {
        self.sub.iter().all(|l| l.iter().all(|b| !b))
    }

    /// Indices of `k`-simplices outside the subcomplex.
    pub fn relative_indices(&self, k: usize) -> Vec<usize> {
        (0..self.ambient.count(k)).filter(|&j| !self.in_sub(k, j)).collect()
    }

    pub fn sub_simplices(&self, k: usize) -> Vec<Simplex> {
        (0..self.ambient.count(k))
            .filter(|&j| self.in_sub(k, j))
            .map(|j| self.ambient.simplices[k][j].clone())
            .collect()
    }

    pub fn sub_vertices(&self) -> BTreeSet<Vertex> {
        self.sub_simplices(0).iter().map(|s| s[0]).collect()
    }

    /// The subcomplex as a complex in its own right (same ids and ranks).
    pub fn sub_complex(&self) -> OrderedComplex {
        let all: Vec<Simplex> = (0..self.sub.len()).flat_map(|k| self.sub_simplices(k)).collect();
        self.ambient
            .subcomplex(&all)
            .expect("subcomplex simplices belong to the ambient complex")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_closure() {
        let x = build_complex(&[[0, 1, 2]], |v| v as i64).unwrap();
        assert_eq!(x.f_vector(), vec![3, 3, 1]);
        assert_eq!(x.f_vector().iter().sum::<usize>(), 7);
        assert_eq!(x.faces(2, 0), &[2, 1, 0]);
    }

    #[test]
    fn boundary_of_tetrahedron() {
        let faces = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
        let x = build_complex(&faces, |v| v as i64).unwrap();
        assert_eq!(x.f_vector(), vec![4, 6, 4]);
        assert_eq!(x.euler_characteristic(), 2);
        assert_eq!(x.maximal_simplices().len(), 4);
    }

    #[test]
    fn ties_are_rejected() {
        let err = build_complex(&[[0, 1]], |_| 0).unwrap_err();
        assert!(matches!(err, ScxError::TieInSimplex { .. }));
    }

    #[test]
    fn rank_sorts_tuples() {
        let x = build_complex(&[[0, 1, 2]], |v| -(v as i64)).unwrap();
        assert_eq!(x.simplex(2, 0), &[2, 1, 0]);
    }

    #[test]
    fn map_detects_order_reversal() {
        let a = Arc::new(build_complex(&[[0, 1]], |v| v as i64).unwrap());
        let map = [(0, 1), (1, 0)].into_iter().collect();
        let err = SimplicialMap::new(a.clone(), a, map).unwrap_err();
        assert!(matches!(err, ScxError::NotOrderPreserving { .. }));
    }

    #[test]
    fn degenerate_images() {
        let a = Arc::new(build_complex(&[[0, 1]], |v| v as i64).unwrap());
        let p = Arc::new(build_complex(&[[0]], |v| v as i64).unwrap());
        let map = [(0, 0), (1, 0)].into_iter().collect();
        let f = SimplicialMap::new(a, p, map).unwrap();
        assert_eq!(f.image(1, 0), None);
        assert_eq!(f.image(0, 1), Some(0));
    }
}
