//! Exact Gaussian-integer arithmetic.
//!
//! Coordinates are 64-bit signed integers and every operation is checked:
//! a result that does not fit panics instead of wrapping. Coordinates up to
//! `2^62` in magnitude are representable, which covers every set level this
//! crate can enumerate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Gaussian integer `re + im*i`.
///
/// The derived ordering is lexicographic by `(re, im)`; enumerations sorted
/// with it are reproducible byte for byte.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

/// The multiplicative units of `Z[i]`, in the order used to break ties when
/// choosing expansion digits.
pub const UNITS: [GaussInt; 4] = [
    GaussInt { re: 1, im: 0 },
    GaussInt { re: -1, im: 0 },
    GaussInt { re: 0, im: 1 },
    GaussInt { re: 0, im: -1 },
];

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };
    /// The base of the digit expansions, `1 + i`.
    pub const ONE_PLUS_I: GaussInt = GaussInt { re: 1, im: 1 };

    pub fn new(re: i64, im: i64) -> GaussInt {
        GaussInt { re, im }
    }

    fn from_wide(re: i128, im: i128) -> GaussInt {
        GaussInt {
            re: re.try_into().expect("Gaussian integer overflow: re"),
            im: im.try_into().expect("Gaussian integer overflow: im"),
        }
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// The algebraic norm `re^2 + im^2`. Never overflows.
    pub fn norm(self) -> u128 {
        let a = self.re.unsigned_abs() as u128;
        let b = self.im.unsigned_abs() as u128;
        a * a + b * b
    }

    /// Complex conjugate `re - im*i`.
    pub fn conj(self) -> GaussInt {
        GaussInt {
            re: self.re,
            im: self
                .im
                .checked_neg()
                .expect("Gaussian integer overflow: im"),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    ///
    /// Works entirely in integers: `self * conj(d)` must have both
    /// coordinates divisible by `norm(d)`.
    ///
    /// Panics when `d` is zero.
    pub fn div_exact(self, d: GaussInt) -> Option<GaussInt> {
        assert!(!d.is_zero(), "division by zero Gaussian integer");
        let (a, b) = (self.re as i128, self.im as i128);
        let (c, e) = (d.re as i128, d.im as i128);
        // self * conj(d); the sums sit right at the i128 boundary when every
        // coordinate is i64::MIN, so keep them checked.
        let num_re = (a * c)
            .checked_add(b * e)
            .expect("Gaussian integer overflow: re");
        let num_im = (b * c)
            .checked_sub(a * e)
            .expect("Gaussian integer overflow: im");
        let n = (c * c)
            .checked_add(e * e)
            .expect("Gaussian integer overflow: norm");
        if num_re % n == 0 && num_im % n == 0 {
            Some(GaussInt::from_wide(num_re / n, num_im / n))
        } else {
            None
        }
    }

    /// The largest `j` such that `2^j` divides both coordinates.
    ///
    /// Panics when `self` is zero.
    pub fn two_adic_val(self) -> u32 {
        assert!(!self.is_zero(), "two_adic_val is undefined at 0");
        // The low set bit of `re | im` is the lower of the two low set bits.
        (self.re | self.im).trailing_zeros()
    }

    /// The largest `k` such that `(1+i)^k` divides `self`.
    ///
    /// Equal to the 2-adic valuation of the norm, since `1+i` is the unique
    /// prime of norm 2 and every other Gaussian prime has odd norm.
    ///
    /// Panics when `self` is zero.
    pub fn onepi_adic_val(self) -> u32 {
        assert!(!self.is_zero(), "onepi_adic_val is undefined at 0");
        self.norm().trailing_zeros()
    }

    /// The representative of the orbit of `self` under multiplication by
    /// units and conjugation: `max(|re|,|im|) + min(|re|,|im|)*i`.
    pub fn canonical_octant(self) -> GaussInt {
        let a = self.re.unsigned_abs();
        let b = self.im.unsigned_abs();
        let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
        GaussInt::from_wide(hi as i128, lo as i128)
    }

    /// `self * 2^j`, checked.
    pub fn times_pow2(self, j: u32) -> GaussInt {
        assert!(j <= 63, "Gaussian integer overflow: 2^{j} scale");
        GaussInt::from_wide((self.re as i128) << j, (self.im as i128) << j)
    }

    /// `self / 2^j`; both coordinates must be divisible by `2^j`.
    pub(crate) fn div_pow2_exact(self, j: u32) -> GaussInt {
        debug_assert!(self.is_zero() || (self.re | self.im).trailing_zeros() >= j);
        GaussInt::new(self.re >> j, self.im >> j)
    }

    /// `(1+i)^j`, checked.
    pub fn onepi_pow(j: u32) -> GaussInt {
        let mut p = GaussInt::ONE;
        for _ in 0..j {
            p = p * GaussInt::ONE_PLUS_I;
        }
        p
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: GaussInt) -> GaussInt {
        GaussInt {
            re: self
                .re
                .checked_add(rhs.re)
                .expect("Gaussian integer overflow: re"),
            im: self
                .im
                .checked_add(rhs.im)
                .expect("Gaussian integer overflow: im"),
        }
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: GaussInt) -> GaussInt {
        GaussInt {
            re: self
                .re
                .checked_sub(rhs.re)
                .expect("Gaussian integer overflow: re"),
            im: self
                .im
                .checked_sub(rhs.im)
                .expect("Gaussian integer overflow: im"),
        }
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt {
            re: self
                .re
                .checked_neg()
                .expect("Gaussian integer overflow: re"),
            im: self
                .im
                .checked_neg()
                .expect("Gaussian integer overflow: im"),
        }
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: GaussInt) -> GaussInt {
        // 64-bit products fit i128; the sums are checked because they touch
        // the boundary when every coordinate is i64::MIN.
        let (a, b) = (self.re as i128, self.im as i128);
        let (c, d) = (rhs.re as i128, rhs.im as i128);
        GaussInt::from_wide(
            (a * c)
                .checked_sub(b * d)
                .expect("Gaussian integer overflow: re"),
            (a * d)
                .checked_add(b * c)
                .expect("Gaussian integer overflow: im"),
        )
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, im) => write!(f, "{im}i"),
            (re, 1) => write!(f, "{re}+i"),
            (re, -1) => write!(f, "{re}-i"),
            (re, im) if im < 0 => write!(f, "{re}{im}i"),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}
