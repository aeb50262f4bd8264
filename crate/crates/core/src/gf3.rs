//! The prime field with three elements.

use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element of GF(3), stored as its canonical residue in `{0, 1, 2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf3(u8);

impl Gf3 {
    pub const ZERO: Gf3 = Gf3(0);
    pub const ONE: Gf3 = Gf3(1);
    pub const TWO: Gf3 = Gf3(2);

    pub const ALL: [Gf3; 3] = [Gf3::ZERO, Gf3::ONE, Gf3::TWO];

    #[inline]
    pub const fn new(value: u8) -> Gf3 {
        Gf3(value % 3)
    }

    /// Reduces an arbitrary signed integer modulo 3.
    #[inline]
    pub const fn from_i64(value: i64) -> Gf3 {
        Gf3(value.rem_euclid(3) as u8)
    }

    #[inline]
    pub const fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Signed representative in `{-1, 0, 1}`.
    #[inline]
    pub const fn signed(self) -> i8 {
        match self.0 {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }

    /// Multiplicative inverse; every nonzero element is its own inverse.
    #[inline]
    pub fn inverse(self) -> Option<Gf3> {
        if self.0 == 0 {
            None
        } else {
            Some(self)
        }
    }
}

impl fmt::Debug for Gf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Gf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u8> for Gf3 {
    fn from(value: u8) -> Self {
        Gf3::new(value)
    }
}

impl From<i32> for Gf3 {
    fn from(value: i32) -> Self {
        Gf3::from_i64(value as i64)
    }
}

impl Add for Gf3 {
    type Output = Gf3;
    #[inline]
    fn add(self, rhs: Gf3) -> Gf3 {
        let s = self.0 + rhs.0;
        Gf3(if s >= 3 { s - 3 } else { s })
    }
}

impl Sub for Gf3 {
    type Output = Gf3;
    #[inline]
    fn sub(self, rhs: Gf3) -> Gf3 {
        self + (-rhs)
    }
}

impl Neg for Gf3 {
    type Output = Gf3;
    #[inline]
    fn neg(self) -> Gf3 {
        Gf3(if self.0 == 0 { 0 } else { 3 - self.0 })
    }
}

impl Mul for Gf3 {
    type Output = Gf3;
    #[inline]
    fn mul(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 * rhs.0) % 3)
    }
}

impl Div for Gf3 {
    type Output = Gf3;
    /// Panics on division by zero.
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Gf3) -> Gf3 {
        self * rhs.inverse().expect("division by zero in GF(3)")
    }
}

impl AddAssign for Gf3 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf3) {
        *self = *self + rhs;
    }
}

impl SubAssign for Gf3 {
    #[inline]
    fn sub_assign(&mut self, rhs: Gf3) {
        *self = *self - rhs;
    }
}

impl MulAssign for Gf3 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf3) {
        *self = *self * rhs;
    }
}

impl core::iter::Sum for Gf3 {
    fn sum<I: Iterator<Item = Gf3>>(iter: I) -> Gf3 {
        iter.fold(Gf3::ZERO, |a, b| a + b)
    }
}

/// `C(i, j) mod 3` by Lucas' theorem: the product of the digitwise binomials
/// of `i` and `j` in base 3. Zero whenever `j > i`.
pub fn binom_mod3(mut i: u64, mut j: u64) -> Gf3 {
    const SMALL: [[u8; 3]; 3] = [[1, 0, 0], [1, 1, 0], [1, 2, 1]];
    if j > i {
        return Gf3::ZERO;
    }
    let mut acc = Gf3::ONE;
    while j > 0 || i > 0 {
        let (a, b) = ((i % 3) as usize, (j % 3) as usize);
        let digit = SMALL[a][b];
        if digit == 0 {
            return Gf3::ZERO;
        }
        acc *= Gf3(digit);
        i /= 3;
        j /= 3;
    }
    acc
}
