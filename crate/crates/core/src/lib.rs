//! Exact cochain calculus on ordered simplicial complexes: Steenrod `∪_i`
//! products, cochain squares, quadratic functions over `Z/4` on triangulated
//! manifolds, and the groups `G_n^pin(X, Y)`.

pub mod cochain;
pub mod gf2;
pub mod ggroup;
pub mod identities;
pub mod quad;
pub mod scx;
pub mod susp;

/// Sign of a permutation of distinct integers, by inversion count.
pub(crate) fn perm_sign(p: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for (i, a) in p.iter().enumerate() {
        inversions += p[i + 1..].iter().filter(|b| *b < a).count();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
