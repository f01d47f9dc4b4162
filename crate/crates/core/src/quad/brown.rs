//! The Brown invariant of a quadratic function on a closed surface, from
//! the Gauss sum `Σ_x i^{Q(x)} = √|H¹| · e^{2πiβ/8}`, computed exactly over
//! the Gaussian integers.

use std::fmt;
use std::ops::{Add, Mul};

use super::{Mode, QuadError, QuadraticFunction};
use crate::gf2::BitVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: i128,
    pub im: i128,
}

impl GaussianInt {
    pub const fn new(re: i128, im: i128) -> Self {
        Self { re, im }
    }

    /// `i^k`.
    pub fn i_pow(k: u8) -> Self {
        match k % 4 {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }

    pub fn norm(self) -> i128 {
        self.re * self.re + self.im * self.im
    }
}

impl Add for GaussianInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl Mul for GaussianInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im < 0 => write!(f, "{re}-{}i", -im),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BrownInvariant {
    /// `β ∈ Z/8`.
    pub beta: u8,
    pub sum: GaussianInt,
    pub h1_dim: usize,
}

impl BrownInvariant {
    /// The Arf invariant, for functions with values in `{0, 2}`.
    pub fn arf(self) -> Option<u8> {
        match self.beta {
            0 => Some(0),
            4 => Some(1),
            _ => None,
        }
    }
}

/// `Σ_{x ∈ H¹} i^{Q(x)}`.
pub fn gauss_sum(q: &QuadraticFunction) -> Result<GaussianInt, QuadError> {
    let m = q.manifold();
    if m.n() != 2 || !m.is_closed() {
        return Err(QuadError::NotClosedSurface);
    }
    let h = q.space().dim();
    if h > 20 {
        return Err(QuadError::TooLarge { dim: h });
    }
    let mut sum = GaussianInt::default();
    for x in 0u64..1 << h {
        let coords = BitVec::from_bools((0..h).map(|j| (x >> j) & 1 == 1));
        sum = sum + GaussianInt::i_pow(q.eval_class(&coords).value.value());
    }
    Ok(sum)
}

/// Direction of a nonzero Gaussian integer on the eighth roots of unity, if
/// it lies on one of them.
fn octant(s: GaussianInt) -> Option<u8> {
    use std::cmp::Ordering::*;
    let (a, b) = (s.re, s.im);
    match (a.cmp(&0), b.cmp(&0)) {
        (Greater, Equal) => Some(0),
        (Equal, Greater) => Some(2),
        (Less, Equal) => Some(4),
        (Equal, Less) => Some(6),
        _ if a.abs() != b.abs() => None,
        (Greater, Greater) => Some(1),
        (Less, Greater) => Some(3),
        (Less, Less) => Some(5),
        (Greater, Less) => Some(7),
        _ => None,
    }
}

/// `β` with `Σ i^{Q(x)} = √|H¹| e^{2πiβ/8}`; the magnitude is checked
/// exactly as `|sum|² = |H¹|`.
pub fn brown_gauss(q: &QuadraticFunction) -> Result<BrownInvariant, QuadError> {
    let sum = gauss_sum(q)?;
    let h = q.space().dim();
    let expected = 1i128 << h;
    let degenerate = QuadError::DegenerateSum {
        norm: sum.norm(),
        expected,
    };
    if sum.norm() != expected {
        return Err(degenerate);
    }
    let beta = octant(sum).ok_or(degenerate)?;
    if q.mode() == Mode::Spin {
        debug_assert!(beta % 4 == 0, "spin sums are real");
    }
    Ok(BrownInvariant { beta, sum, h1_dim: h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{enumerate_quadratics, QuadSpace};
    use crate::scx::catalog;

    fn betas(name: &str) -> Vec<u8> {
        let mut out: Vec<u8> = enumerate_quadratics(&catalog(name).unwrap(), Mode::Pin)
            .unwrap()
            .iter()
            .map(|q| brown_gauss(q).unwrap().beta)
            .collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn fixture_invariants() {
        assert_eq!(betas("rp2"), vec![1, 7]);
        assert_eq!(betas("torus"), vec![0, 0, 0, 4]);
        assert_eq!(betas("klein"), vec![0, 0, 2, 6]);
    }

    #[test]
    fn rp2_plus_one_is_beta_one() {
        let s = QuadSpace::new(&catalog("rp2").unwrap()).unwrap();
        let q = s.make(Mode::Pin, vec![crate::cochain::Z4::new(1)]).unwrap();
        let b = brown_gauss(&q).unwrap();
        assert_eq!((b.beta, b.sum), (1, GaussianInt::new(1, 1)));
    }

    #[test]
    fn torus_arf_in_spin_mode() {
        let all = enumerate_quadratics(&catalog("torus").unwrap(), Mode::Spin).unwrap();
        let arfs: Vec<u8> = all.iter().map(|q| brown_gauss(q).unwrap().arf().unwrap()).collect();
        assert_eq!(arfs.iter().filter(|&&a| a == 1).count(), 1);
    }

    #[test]
    fn surfaces_with_boundary_are_rejected() {
        let q = enumerate_quadratics(&catalog("mobius").unwrap(), Mode::Pin).unwrap().remove(0);
        assert_eq!(brown_gauss(&q), Err(QuadError::NotClosedSurface));
    }
}
