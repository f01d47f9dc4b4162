//! Named triangulations. Every fixture is validated by the strict manifold
//! checker (full boundary, boundary vertices first).
//!
//! | name | n | f-vector | notes |
//! |---|---|---|---|
//! | `sphere0`..`sphere4` | k | boundary of the (k+1)-simplex | oriented |
//! | `disk1`..`disk3` | k | cone on the boundary of the k-simplex, apex last | oriented |
//! | `rp2` | 2 | (6, 15, 10) | six-vertex projective plane |
//! | `torus` | 2 | (7, 21, 14) | seven-vertex torus, oriented |
//! | `klein` | 2 | (9, 27, 18) | 3×3 square with the Klein identification |
//! | `mobius` | 2 | (9, 21, 12) | band around a 3-cycle core, boundary a 6-cycle |
//! | `annulus` | 2 | (9, 21, 12) | two strips around a 3-cycle core, oriented |
//! | `solid_torus` | 3 | (12, 48, 63, 27) | 3-cycle × `disk2`, oriented |
//! | `cp2` | 4 | (9, 36, 84, 90, 36) | nine-vertex complex projective plane |

use std::sync::Arc;

use super::{build_complex, parse_complex, product, ManifoldPair, OrderedComplex, ScxError, Vertex};

pub const FIXTURE_NAMES: &[&str] = &[
    "sphere0",
    "sphere1",
    "sphere2",
    "sphere3",
    "sphere4",
    "disk1",
    "disk2",
    "disk3",
    "rp2",
    "torus",
    "klein",
    "mobius",
    "annulus",
    "solid_torus",
    "cp2",
];

pub fn fixture_names() -> &'static [&'static str] {
    FIXTURE_NAMES
}

const CP2_9: &str = include_str!("../../data/cp2_9.txt");

/// Looks up a fixture by name. `sphere(n)`/`disk(n)` spellings are accepted.
pub fn catalog(name: &str) -> Result<ManifoldPair, ScxError> {
    let key: String = name.chars().filter(|c| !"() ".contains(*c)).collect();
    let unknown = || ScxError::UnknownFixture(name.to_string());
    let (cx, n) = match key.as_str() {
        "rp2" => (rp2(), 2),
        "torus" => (torus(), 2),
        "klein" => (klein(), 2),
        "mobius" => (mobius(), 2),
        "annulus" => (annulus(), 2),
        "solid_torus" => (solid_torus(), 3),
        "cp2" => {
            let f = parse_complex(CP2_9).expect("bundled cp2 data parses");
            return f.manifold.expect("bundled cp2 data declares a dimension");
        }
        k => {
            if let Some(d) = k.strip_prefix("sphere") {
                let d: usize = d.parse().map_err(|_| unknown())?;
                if d > 4 {
                    return Err(unknown());
                }
                (sphere(d), d)
            } else if let Some(d) = k.strip_prefix("disk") {
                let d: usize = d.parse().map_err(|_| unknown())?;
                if !(1..=3).contains(&d) {
                    return Err(unknown());
                }
                (disk(d), d)
            } else {
                return Err(unknown());
            }
        }
    };
    ManifoldPair::validate(Arc::new(cx), n)
}

fn id_rank(v: Vertex) -> i64 {
    v as i64
}

fn simplex_faces(n: u32) -> Vec<Vec<Vertex>> {
    (0..=n).map(|i| (0..=n).filter(|&v| v != i).collect()).collect()
}

/// Boundary of the `(n+1)`-simplex on vertices `0..=n+1`.
pub(crate) fn sphere(n: usize) -> OrderedComplex {
    build_complex(&simplex_faces(n as u32 + 1), id_rank).expect("sphere")
}

/// Cone on the boundary of the `n`-simplex; apex `n+1` ranked last.
pub(crate) fn disk(n: usize) -> OrderedComplex {
    let apex = n as u32 + 1;
    let facets: Vec<Vec<Vertex>> = simplex_faces(n as u32)
        .into_iter()
        .map(|mut f| {
            f.push(apex);
            f
        })
        .collect();
    build_complex(&facets, id_rank).expect("disk")
}

fn rp2() -> OrderedComplex {
    let t = [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 6, 2],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 2],
        [5, 6, 3],
        [6, 2, 4],
    ];
    build_complex(&t, id_rank).expect("rp2")
}

fn torus() -> OrderedComplex {
    let t: Vec<[Vertex; 3]> = (0..7)
        .flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]])
        .collect();
    build_complex(&t, id_rank).expect("torus")
}

fn grid_triangles(rows: u32, cols: u32, v: impl Fn(u32, u32) -> Vertex) -> Vec<[Vertex; 3]> {
    let mut t = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            t.push([v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            t.push([v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    t
}

/// 3×3 grid; crossing the last row flips the column (Klein identification).
fn klein() -> OrderedComplex {
    let v = |i: u32, j: u32| {
        let (i, j) = if i == 3 { (0, (3 - j % 3) % 3) } else { (i, j) };
        3 * i + j % 3
    };
    build_complex(&grid_triangles(3, 3, v), id_rank).expect("klein")
}

/// `rows × cols` grid torus with vertex `(i, j)` at id `cols·i + j`.
pub fn grid_torus(rows: u32, cols: u32) -> Result<OrderedComplex, ScxError> {
    let v = move |i: u32, j: u32| cols * (i % rows) + j % cols;
    build_complex(&grid_triangles(rows, cols, v), id_rank)
}

const CORE: u32 = 3;

/// Strip between a boundary path and the core circle `c_i = 100 + i`.
fn strip(edge: impl Fn(u32) -> (Vertex, Vertex)) -> Vec<[Vertex; 3]> {
    let c = |i: u32| 100 + i % CORE;
    (0..CORE)
        .flat_map(|i| {
            let (a, b) = edge(i);
            [[c(i), a, b], [c(i), c(i + 1), b]]
        })
        .collect()
}

/// Möbius band: boundary 6-cycle `b_0..b_5`, core 3-cycle ranked last.
/// Going once around the core swaps the two sides of the band.
fn mobius() -> OrderedComplex {
    let n = 2 * CORE;
    let mut t = strip(|i| (i, (i + 1) % n));
    t.extend(strip(|i| ((i + CORE) % n, (i + CORE + 1) % n)));
    build_complex(&t, id_rank).expect("mobius")
}

/// Annulus: boundary circles `0,1,2` and `10,11,12`, core ranked last.
fn annulus() -> OrderedComplex {
    let mut t = strip(|i| (i, (i + 1) % CORE));
    t.extend(strip(|i| (10 + i, 10 + (i + 1) % CORE)));
    build_complex(&t, id_rank).expect("annulus")
}

/// 3-cycle × `disk2` with disk-major ranks, so the disk's apex copies
/// (the only interior vertices) come last.
fn solid_torus() -> OrderedComplex {
    let circle = build_complex(&[[0, 1], [1, 2], [0, 2]], id_rank).expect("circle");
    product(&disk(2), &circle)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_validate() {
        for name in FIXTURE_NAMES {
            let m = catalog(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(m.boundary_full() && m.boundary_first(), "{name}");
        }
    }

    #[test]
    fn documented_f_vectors() {
        let f = |n: &str| catalog(n).unwrap().complex().f_vector();
        assert_eq!(f("rp2"), vec![6, 15, 10]);
        assert_eq!(f("torus"), vec![7, 21, 14]);
        assert_eq!(f("klein"), vec![9, 27, 18]);
        assert_eq!(f("mobius"), vec![9, 21, 12]);
        assert_eq!(f("annulus"), vec![9, 21, 12]);
        assert_eq!(f("solid_torus"), vec![12, 48, 63, 27]);
        assert_eq!(f("cp2"), vec![9, 36, 84, 90, 36]);
    }

    #[test]
    fn euler_characteristics() {
        let chi = |n: &str| catalog(n).unwrap().complex().euler_characteristic();
        assert_eq!(chi("rp2"), 1);
        assert_eq!(chi("torus"), 0);
        assert_eq!(chi("klein"), 0);
        assert_eq!(chi("mobius"), 0);
        assert_eq!(chi("annulus"), 0);
        assert_eq!(chi("cp2"), 3);
    }

    #[test]
    fn orientability() {
        let o = |n: &str| catalog(n).unwrap().is_oriented();
        assert!(o("torus") && o("annulus") && o("solid_torus") && o("sphere2") && o("cp2"));
        assert!(!o("rp2") && !o("klein") && !o("mobius"));
    }

    #[test]
    fn boundaries() {
        let b = |n: &str| catalog(n).unwrap().boundary().unwrap().complex().f_vector();
        assert_eq!(b("mobius"), vec![6, 6]);
        assert_eq!(b("annulus"), vec![6, 6]);
        assert_eq!(b("solid_torus"), vec![9, 27, 18]);
        assert_eq!(b("disk2"), vec![3, 3]);
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(catalog("lens"), Err(ScxError::UnknownFixture(_))));
        assert!(matches!(catalog("sphere5"), Err(ScxError::UnknownFixture(_))));
        assert!(catalog("sphere(3)").is_ok());
    }
}
