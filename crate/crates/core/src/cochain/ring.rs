use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingTag {
    Int,
    Z2,
    Z4,
    QmodZ,
}

impl RingTag {
    pub fn name(self) -> &'static str {
        match self {
            RingTag::Int => "int",
            RingTag::Z2 => "z2",
            RingTag::Z4 => "z4",
            RingTag::QmodZ => "qmodz",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s.to_ascii_lowercase().as_str() {
            "int" | "z" => RingTag::Int,
            "z2" => RingTag::Z2,
            "z4" => RingTag::Z4,
            "qmodz" | "q/z" => RingTag::QmodZ,
            _ => return None,
        })
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact coefficient arithmetic.
pub trait Ring:
    Copy
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const TAG: RingTag;
    /// Integration needs orientation signs (signs are invisible mod 2 and on
    /// the 2-torsion values used with `Z4`).
    const SIGNED: bool;
    fn zero() -> Self;

    fn is_zero(self) -> bool {
        self == Self::zero()
    }

    fn signed(self, sign: i8) -> Self {
        if sign < 0 {
            -self
        } else {
            self
        }
    }
}

/// Rings carrying the cup product.
pub trait CupRing: Ring + Mul<Output = Self> {
    fn one() -> Self;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Int(pub i64);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z2(u8);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z4(u8);

/// `ℚ/ℤ`, stored as a reduced fraction in `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QmodZ(Ratio<i64>);

impl Z2 {
    pub const ZERO: Z2 = Z2(0);
    pub const ONE: Z2 = Z2(1);

    pub fn new(v: i64) -> Self {
        Z2(v.rem_euclid(2) as u8)
    }

    pub fn bit(self) -> bool {
        self.0 == 1
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl From<bool> for Z2 {
    fn from(b: bool) -> Self {
        Z2(b as u8)
    }
}

impl Z4 {
    pub const ZERO: Z4 = Z4(0);

    pub fn new(v: i64) -> Self {
        Z4(v.rem_euclid(4) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// The inclusion `ℤ/2 → ℤ/4`, `x ↦ 2x`.
    pub fn twice(x: Z2) -> Self {
        Z4(2 * x.0)
    }

    /// Inverse of [`Z4::twice`] on `{0, 2}`.
    pub fn halve(self) -> Option<Z2> {
        (self.0 % 2 == 0).then_some(Z2(self.0 / 2))
    }

    pub fn reduce(self) -> Z2 {
        Z2(self.0 % 2)
    }

    /// The `ℝ/ℤ` view, `value / 4`.
    pub fn to_qmodz(self) -> QmodZ {
        QmodZ::new(self.0 as i64, 4)
    }
}

impl QmodZ {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let r = Ratio::new(num, den);
        QmodZ(r - r.floor())
    }

    pub fn ratio(self) -> Ratio<i64> {
        self.0
    }

    /// The inclusion `ℤ/2 → ℚ/ℤ`, `x ↦ x/2`.
    pub fn half(x: Z2) -> Self {
        QmodZ::new(x.0 as i64, 2)
    }

    /// Back to `ℤ/4` when the denominator divides 4.
    pub fn to_z4(self) -> Option<Z4> {
        let q = self.0 * Ratio::from_integer(4);
        q.is_integer().then(|| Z4::new(q.to_integer()))
    }
}

impl From<Int> for Z2 {
    fn from(x: Int) -> Self {
        Z2::new(x.0)
    }
}

impl From<Int> for Z4 {
    fn from(x: Int) -> Self {
        Z4::new(x.0)
    }
}

macro_rules! modular {
    ($t:ident, $m:expr) => {
        impl Add for $t {
            type Output = Self;
            fn add(self, o: Self) -> Self {
                $t((self.0 + o.0) % $m)
            }
        }
        impl Sub for $t {
            type Output = Self;
            fn sub(self, o: Self) -> Self {
                $t((self.0 + $m - o.0) % $m)
            }
        }
        impl Neg for $t {
            type Output = Self;
            fn neg(self) -> Self {
                $t(($m - self.0) % $m)
            }
        }
        impl Mul for $t {
            type Output = Self;
            fn mul(self, o: Self) -> Self {
                $t((self.0 * o.0) % $m)
            }
        }
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

modular!(Z2, 2);
modular!(Z4, 4);

impl Ring for Z2 {
    const TAG: RingTag = RingTag::Z2;
    const SIGNED: bool = false;
    fn zero() -> Self {
        Z2(0)
    }
}

impl CupRing for Z2 {
    fn one() -> Self {
        Z2(1)
    }
}

impl Ring for Z4 {
    const TAG: RingTag = RingTag::Z4;
    const SIGNED: bool = false;
    fn zero() -> Self {
        Z4(0)
    }
}

impl CupRing for Z4 {
    fn one() -> Self {
        Z4(1)
    }
}

impl Add for Int {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Int(self.0 + o.0)
    }
}
impl Sub for Int {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Int(self.0 - o.0)
    }
}
impl Neg for Int {
    type Output = Self;
    fn neg(self) -> Self {
        Int(-self.0)
    }
}
impl Mul for Int {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Int(self.0 * o.0)
    }
}
impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Ring for Int {
    const TAG: RingTag = RingTag::Int;
    const SIGNED: bool = true;
    fn zero() -> Self {
        Int(0)
    }
}

impl CupRing for Int {
    fn one() -> Self {
        Int(1)
    }
}

impl Add for QmodZ {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let r = self.0 + o.0;
        QmodZ(r - r.floor())
    }
}
impl Sub for QmodZ {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}
impl Neg for QmodZ {
    type Output = Self;
    fn neg(self) -> Self {
        let r = -self.0;
        QmodZ(r - r.floor())
    }
}
impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Ring for QmodZ {
    const TAG: RingTag = RingTag::QmodZ;
    const SIGNED: bool = true;
    fn zero() -> Self {
        QmodZ(Ratio::from_integer(0))
    }
}
