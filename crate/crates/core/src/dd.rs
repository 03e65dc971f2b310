//! Double-double arithmetic.
//!
//! A value is the unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`,
//! giving roughly 32 significant digits. Two places need it: the ascending
//! Bessel series, whose terms cancel by up to twenty orders of magnitude near
//! `|z| = 45`, and the reduction of phases like `eta * k * a` (about 5e4)
//! modulo `2 pi`, where an f64 product already carries ~1e-11 absolute error.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const PI: Self = Self {
        hi: std::f64::consts::PI,
        lo: 1.224_646_799_147_353_2e-16,
    };
    pub const TWO_PI: Self = Self {
        hi: std::f64::consts::TAU,
        lo: 2.449_293_598_294_706_4e-16,
    };
    pub const HALF_PI: Self = Self {
        hi: std::f64::consts::FRAC_PI_2,
        lo: 6.123_233_995_736_766e-17,
    };

    pub const fn new(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    pub fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Exact product of two f64 values.
    pub fn product(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Self { hi, lo }
    }

    /// Reduces into `[-pi, pi]` by subtracting the nearest multiple of `2 pi`.
    pub fn rem_two_pi(self) -> Self {
        let turns = (self.hi / std::f64::consts::TAU).round();
        if turns == 0.0 {
            return self;
        }
        self - Self::TWO_PI * turns
    }

    /// Reduces into `[-pi/2, pi/2]` by subtracting the nearest multiple of `pi`.
    pub fn rem_pi(self) -> Self {
        let turns = (self.hi / std::f64::consts::PI).round();
        if turns == 0.0 {
            return self;
        }
        self - Self::PI * turns
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Self { hi, lo }
    }
}

impl Add<f64> for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: f64) -> Self {
        let (s, e) = two_sum(self.hi, rhs);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Self { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

impl Mul<f64> for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        let (p, e) = two_prod(self.hi, rhs);
        let (hi, lo) = quick_two_sum(p, e + self.lo * rhs);
        Self { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * q1;
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * q2;
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo } + q3
    }
}

impl Div<f64> for DoubleDouble {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        self / Self::from_f64(rhs)
    }
}

/// Complex number with double-double components.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct ComplexDD {
    pub re: DoubleDouble,
    pub im: DoubleDouble,
}

impl ComplexDD {
    pub fn new(re: DoubleDouble, im: DoubleDouble) -> Self {
        Self { re, im }
    }

    pub fn one() -> Self {
        Self::new(1.0.into(), 0.0.into())
    }

    pub fn to_c64(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// Cheap magnitude estimate from the leading parts.
    pub fn norm_hi(self) -> f64 {
        self.re.hi.hypot(self.im.hi)
    }

    pub fn scale_inv(self, d: DoubleDouble) -> Self {
        Self::new(self.re / d, self.im / d)
    }
}

impl Add for ComplexDD {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Mul for ComplexDD {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.re * rhs.re - self.im * rhs.im, self.re * rhs.im + self.im * rhs.re)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_is_exact() {
        let a = 1.0 + f64::EPSILON;
        let p = DoubleDouble::product(a, a);
        assert_eq!(p.hi, 1.0 + 2.0 * f64::EPSILON);
        assert_eq!(p.lo, f64::EPSILON * f64::EPSILON);
    }

    #[test]
    fn division_recovers_third() {
        let third = DoubleDouble::from_f64(1.0) / DoubleDouble::from_f64(3.0);
        let back = third * 3.0;
        assert!((back - 1.0.into()).to_f64().abs() < 1e-31);
    }

    #[test]
    fn reduction_keeps_sub_ulp_phase() {
        // 10^4 full turns plus 0.25: f64 alone would lose ~1e-12 here.
        let theta = DoubleDouble::TWO_PI * 1.0e4 + DoubleDouble::from_f64(0.25);
        let r = theta.rem_two_pi();
        assert!((r.to_f64() - 0.25).abs() < 1e-26);
        let r = (theta + DoubleDouble::PI).rem_pi();
        assert!((r.to_f64() - 0.25).abs() < 1e-26);
    }
}
