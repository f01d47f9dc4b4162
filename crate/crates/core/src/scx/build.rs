use std::collections::BTreeMap;
use std::sync::Arc;

use super::{build_complex, ComplexPair, OrderedComplex, SimplicialMap, Vertex};

/// Barycentric subdivision with its canonical ordering (rank = dimension of
/// the underlying simplex) and the max-vertex map back to `x`.
///
/// The barycenter of the `j`-th `k`-simplex gets id `offset(k) + j`, where
/// `offset(k)` counts all simplices of lower dimension.
pub fn barycentric_subdivide(x: &Arc<OrderedComplex>) -> (Arc<OrderedComplex>, SimplicialMap) {
    let top = x.dim().map_or(0, |d| d + 1);
    let mut offset = vec![0u32; top + 1];
    for k in 0..top {
        offset[k + 1] = offset[k] + x.count(k) as u32;
    }
    let id = |k: usize, j: usize| offset[k] + j as u32;

    // chains[k][j]: all flags ending at simplex (k, j)
    let mut chains: Vec<Vec<Vec<Vec<Vertex>>>> = Vec::with_capacity(top);
    for k in 0..top {
        let mut layer = Vec::with_capacity(x.count(k));
        for j in 0..x.count(k) {
            let mut flags = Vec::new();
            if k == 0 {
                flags.push(vec![id(0, j)]);
            } else {
                for &f in x.faces(k, j) {
                    for c in &chains[k - 1][f as usize] {
                        let mut c: Vec<Vertex> = c.clone();
                        c.push(id(k, j));
                        flags.push(c);
                    }
                }
            }
            layer.push(flags);
        }
        chains.push(layer);
    }

    let mut maximal = Vec::new();
    for s in x.maximal_simplices() {
        let k = s.len() - 1;
        let j = x.index_of(&s).expect("maximal simplex is listed");
        maximal.extend(chains[k][j].iter().cloned());
    }
    let dim_of = |v: Vertex| (0..top).rev().find(|&k| offset[k] <= v).expect("id in range");
    let mut labels = BTreeMap::new();
    let mut bmap = BTreeMap::new();
    for k in 0..top {
        for (j, s) in x.simplices(k).iter().enumerate() {
            let names: Vec<String> = s.iter().map(|v| x.label(*v)).collect();
            labels.insert(id(k, j), format!("[{}]", names.join(",")));
            bmap.insert(id(k, j), *s.last().expect("nonempty simplex"));
        }
    }
    let sd = build_complex(&maximal, |v| dim_of(v) as i64)
        .expect("flags are strictly increasing in dimension")
        .with_labels(labels);
    let sd = Arc::new(sd);
    let b = SimplicialMap::new(sd.clone(), x.clone(), bmap)
        .expect("max-vertex map is simplicial and order preserving");
    (sd, b)
}

/// A cone or suspension over a base complex. Base vertices keep their ids.
#[derive(Clone, Debug)]
pub struct Suspension {
    pub base: Arc<OrderedComplex>,
    pub total: Arc<OrderedComplex>,
    /// Cone point ranked after every base vertex.
    pub upper: Vertex,
    /// Cone point ranked before every base vertex (suspensions only).
    pub lower: Option<Vertex>,
}

impl Suspension {
    /// `(C⁺X, X)` for a cone, `(ΣX, C⁻X)` for a suspension.
    pub fn pair(&self) -> ComplexPair {
        let sub: Vec<Vec<Vertex>> = match self.lower {
            None => self.base.maximal_simplices().iter().map(|s| s.to_vec()).collect(),
            Some(lo) => self
                .base
                .maximal_simplices()
                .iter()
                .map(|s| std::iter::once(lo).chain(s.iter().copied()).collect())
                .chain(std::iter::once(vec![lo]))
                .collect(),
        };
        ComplexPair::new(self.total.clone(), &sub).expect("cone pieces are subcomplexes")
    }

    /// Index in `total` of the simplex `(σ, upper)` for base simplex `(k, j)`.
    pub fn upper_index(&self, k: usize, j: usize) -> usize {
        let mut s = self.base.simplex(k, j).to_vec();
        s.push(self.upper);
        self.total.index_of(&s).expect("cone simplex exists")
    }
}

fn fresh_vertex(x: &OrderedComplex) -> Vertex {
    x.max_vertex().map_or(0, |v| v + 1)
}

/// Upper cone `C⁺X`; the cone vertex is ranked last.
pub fn cone(x: &Arc<OrderedComplex>) -> Suspension {
    let upper = fresh_vertex(x);
    let top = x.max_rank() + 1;
    let mut maximal: Vec<Vec<Vertex>> = x
        .maximal_simplices()
        .iter()
        .map(|s| s.iter().copied().chain([upper]).collect())
        .collect();
    if maximal.is_empty() {
        maximal.push(vec![upper]);
    }
    let total = build_complex(&maximal, |v| if v == upper { top } else { x.rank(v) })
        .expect("cone vertex is ranked above the base")
        .with_labels(with_label(x, upper, "+inf"));
    Suspension {
        base: x.clone(),
        total: Arc::new(total),
        upper,
        lower: None,
    }
}

/// Suspension `ΣX = C⁺X ∪ C⁻X`; the lower cone vertex is ranked first.
pub fn suspension(x: &Arc<OrderedComplex>) -> Suspension {
    let upper = fresh_vertex(x);
    let lower = upper + 1;
    let (lo, hi) = (x.min_rank() - 1, x.max_rank() + 1);
    let mut maximal = Vec::new();
    for s in x.maximal_simplices() {
        maximal.push(s.iter().copied().chain([upper]).collect::<Vec<_>>());
        maximal.push(std::iter::once(lower).chain(s.iter().copied()).collect());
    }
    let mut labels = with_label(x, upper, "+inf");
    labels.insert(lower, "-inf".into());
    let total = build_complex(&maximal, |v| match v {
        v if v == upper => hi,
        v if v == lower => lo,
        v => x.rank(v),
    })
    .expect("cone vertices are ranked outside the base")
    .with_labels(labels);
    Suspension {
        base: x.clone(),
        total: Arc::new(total),
        upper,
        lower: Some(lower),
    }
}

fn with_label(x: &OrderedComplex, v: Vertex, name: &str) -> BTreeMap<Vertex, String> {
    let mut labels = x.labels().clone();
    labels.insert(v, name.to_string());
    labels
}

/// Ordered product `X × Y` (staircase triangulation). Vertex `(x, y)` gets
/// id `x·(max_y+1) + y` and rank lexicographic in `(rank x, rank y)`.
pub fn product(x: &OrderedComplex, y: &OrderedComplex) -> OrderedComplex {
    let stride = y.max_vertex().map_or(1, |v| v + 1);
    let span = y.max_rank() - y.min_rank() + 1;
    let ymin = y.min_rank();
    let pid = |a: Vertex, b: Vertex| a * stride + b;
    let mut maximal = Vec::new();
    for s in x.maximal_simplices() {
        for t in y.maximal_simplices() {
            staircases(&s, &t, &mut |path| {
                maximal.push(path.iter().map(|&(a, b)| pid(a, b)).collect::<Vec<_>>())
            });
        }
    }
    let mut labels = BTreeMap::new();
    for a in x.vertices() {
        for b in y.vertices() {
            labels.insert(pid(a, b), format!("({},{})", x.label(a), y.label(b)));
        }
    }
    build_complex(&maximal, |v| {
        let (a, b) = (v / stride, v % stride);
        x.rank(a) * span + (y.rank(b) - ymin)
    })
    .expect("lexicographic rank separates product vertices")
    .with_labels(labels)
}

fn staircases(s: &[Vertex], t: &[Vertex], emit: &mut dyn FnMut(&[(Vertex, Vertex)])) {
    fn walk(
        s: &[Vertex],
        t: &[Vertex],
        i: usize,
        j: usize,
        path: &mut Vec<(Vertex, Vertex)>,
        emit: &mut dyn FnMut(&[(Vertex, Vertex)]),
    ) {
        path.push((s[i], t[j]));
        if i + 1 == s.len() && j + 1 == t.len() {
            emit(path);
        }
        if i + 1 < s.len() {
            walk(s, t, i + 1, j, path, emit);
        }
        if j + 1 < t.len() {
            walk(s, t, i, j + 1, path, emit);
        }
        path.pop();
    }
    walk(s, t, 0, 0, &mut Vec::new(), emit);
}

/// Prism `I × X` with both end inclusions and the projection to `X`.
#[derive(Clone, Debug)]
pub struct Cylinder {
    pub complex: Arc<OrderedComplex>,
    pub base: Arc<OrderedComplex>,
    /// `ends[l]` embeds `X` as `{l} × X`.
    pub ends: [SimplicialMap; 2],
    pub projection: SimplicialMap,
}

impl Cylinder {
    pub fn vertex(&self, level: u32, v: Vertex) -> Vertex {
        self.ends[level as usize].apply(v)
    }
}

/// Prism triangulation of `I × X`, ranks lexicographic in (level, rank).
pub fn cylinder(x: &Arc<OrderedComplex>) -> Cylinder {
    let interval = build_complex(&[[0, 1]], |v| v as i64).expect("edge");
    let complex = Arc::new(product(&interval, x));
    let stride = x.max_vertex().map_or(1, |v| v + 1);
    let end = |l: u32| {
        let map = x.vertices().map(|v| (v, l * stride + v)).collect();
        SimplicialMap::new(x.clone(), complex.clone(), map).expect("end inclusion")
    };
    let ends = [end(0), end(1)];
    let proj = complex.vertices().map(|v| (v, v % stride)).collect();
    let projection =
        SimplicialMap::new(complex.clone(), x.clone(), proj).expect("projection is simplicial");
    Cylinder {
        complex,
        base: x.clone(),
        ends,
        projection,
    }
}

/// `X ⊔ Y`; vertices of `Y` are shifted by the returned offset.
pub fn disjoint_union(x: &OrderedComplex, y: &OrderedComplex) -> (OrderedComplex, Vertex) {
    let shift = x.max_vertex().map_or(0, |v| v + 1);
    let mut maximal: Vec<Vec<Vertex>> = x.maximal_simplices().iter().map(|s| s.to_vec()).collect();
    maximal.extend(
        y.maximal_simplices()
            .iter()
            .map(|s| s.iter().map(|v| v + shift).collect()),
    );
    let mut labels = x.labels().clone();
    for (v, l) in y.labels() {
        labels.insert(v + shift, l.clone());
    }
    let u = build_complex(&maximal, |v| {
        if v < shift {
            x.rank(v)
        } else {
            y.rank(v - shift)
        }
    })
    .expect("components do not share simplices")
    .with_labels(labels);
    (u, shift)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(n: u32) -> Arc<OrderedComplex> {
        let s: Vec<u32> = (0..=n).collect();
        Arc::new(build_complex(&[s], |v| v as i64).unwrap())
    }

    fn boundary(n: u32) -> Arc<OrderedComplex> {
        let faces: Vec<Vec<u32>> = (0..=n)
            .map(|i| (0..=n).filter(|&v| v != i).collect())
            .collect();
        Arc::new(build_complex(&faces, |v| v as i64).unwrap())
    }

    #[test]
    fn subdivided_edge() {
        let (sd, b) = barycentric_subdivide(&simplex(1));
        assert_eq!(sd.f_vector(), vec![3, 2]);
        // barycenter of (0,1) has id 2
        assert_eq!(b.apply(2), 1);
    }

    #[test]
    fn subdivided_triangle_boundary_is_hexagon() {
        let (sd, _) = barycentric_subdivide(&boundary(2));
        assert_eq!(sd.f_vector(), vec![6, 6]);
    }

    #[test]
    fn suspension_of_two_points() {
        let pts = Arc::new(build_complex(&[[0], [1]], |v| v as i64).unwrap());
        let s = suspension(&pts);
        assert_eq!(s.total.f_vector(), vec![4, 4]);
        let c = s.pair();
        assert_eq!(c.sub_simplices(1).len(), 2);
    }

    #[test]
    fn suspension_of_triangle_boundary() {
        let s = suspension(&boundary(2));
        assert_eq!(s.total.count(2), 6);
        assert_eq!(s.total.euler_characteristic(), 2);
        for t in s.total.simplices(2) {
            let cones = t.iter().filter(|v| **v == s.upper || Some(**v) == s.lower).count();
            assert!(cones <= 1);
        }
    }

    #[test]
    fn prism_counts() {
        let p = build_complex(&[[0]], |v| v as i64).unwrap();
        let cyl = cylinder(&Arc::new(p));
        assert_eq!(cyl.complex.f_vector(), vec![2, 1]);
        let cyl = cylinder(&boundary(2));
        assert_eq!(cyl.complex.count(2), 6);
        assert_eq!(cyl.complex.euler_characteristic(), 0);
    }

    #[test]
    fn union_shifts_ids() {
        let (u, shift) = disjoint_union(&boundary(2), &boundary(2));
        assert_eq!(shift, 3);
        assert_eq!(u.f_vector(), vec![6, 6]);
    }
}
