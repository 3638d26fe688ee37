//! Double-precision complex scalar with principal-branch power semantics.
//!
//! Every fractional power, square root and logarithm in the crate goes
//! through this type. The argument convention is `Arg z ∈ (−π, π]`; a
//! negative real axis approached from below (`−0.0` imaginary part) is
//! mapped to `+π` so the branch never depends on the sign of a zero.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct ComplexScalar {
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub re: f64,
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub im: f64,
}

impl ComplexScalar {
    pub const ZERO: Self = Self { re: 0.0, im: 0.0 };
    pub const ONE: Self = Self { re: 1.0, im: 0.0 };
    pub const I: Self = Self { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub const fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    pub fn from_polar(r: f64, theta: f64) -> Self {
        Complex64::from_polar(r, theta).into()
    }

    /// `e^{iθ}`.
    pub fn cis(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(c, s)
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Principal argument in `(−π, π]`.
    pub fn arg(self) -> f64 {
        let a = self.im.atan2(self.re);
        if a == -PI {
            PI
        } else {
            a
        }
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.re * s, self.im * s)
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    pub fn exp(self) -> Self {
        Complex64::from(self).exp().into()
    }

    /// Principal logarithm `ln|z| + i·Arg z`.
    pub fn ln(self) -> Self {
        Self::new(self.abs().ln(), self.arg())
    }

    /// Principal power `z^p = exp(p·(ln|z| + i·Arg z))`. `0^p` is `0` for `p > 0`.
    pub fn powf(self, p: f64) -> Self {
        if p == 0.0 {
            return Self::ONE;
        }
        let r = self.abs();
        if r == 0.0 {
            return if p > 0.0 {
                Self::ZERO
            } else {
                Self::new(f64::INFINITY, 0.0)
            };
        }
        Self::from_polar(r.powf(p), p * self.arg())
    }

    /// Principal square root, `Re ≥ 0`.
    pub fn sqrt(self) -> Self {
        self.powf(0.5)
    }

    /// `i^p` on the principal branch, `e^{iπp/2}`.
    pub fn i_pow(p: f64) -> Self {
        Self::cis(0.5 * PI * p)
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl From<Complex64> for ComplexScalar {
    fn from(z: Complex64) -> Self {
        Self::new(z.re, z.im)
    }
}

impl From<ComplexScalar> for Complex64 {
    fn from(z: ComplexScalar) -> Self {
        Complex64::new(z.re, z.im)
    }
}

impl From<f64> for ComplexScalar {
    fn from(re: f64) -> Self {
        Self::real(re)
    }
}

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{:.16e}-{:.16e}i", self.re, -self.im)
        } else {
            write!(f, "{:.16e}+{:.16e}i", self.re, self.im)
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ComplexScalar {
            type Output = Self;
            fn $method(self, rhs: Self) -> Self {
                Complex64::from(self).$method(Complex64::from(rhs)).into()
            }
        }
        impl $trait<f64> for ComplexScalar {
            type Output = Self;
            fn $method(self, rhs: f64) -> Self {
                Complex64::from(self).$method(rhs).into()
            }
        }
        impl $trait<ComplexScalar> for f64 {
            type Output = ComplexScalar;
            fn $method(self, rhs: ComplexScalar) -> ComplexScalar {
                Complex64::new(self, 0.0).$method(Complex64::from(rhs)).into()
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ComplexScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arg_is_in_half_open_interval() {
        assert_eq!(ComplexScalar::new(-1.0, -0.0).arg(), PI);
        assert_eq!(ComplexScalar::new(-1.0, 0.0).arg(), PI);
        assert!((ComplexScalar::new(0.0, -1.0).arg() + PI / 2.0).abs() < 1e-16);
    }

    #[test]
    fn sqrt_two_i_is_one_plus_i() {
        let z = ComplexScalar::new(0.0, 2.0).sqrt();
        assert!((z.re - 1.0).abs() < 1e-15 && (z.im - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sqrt_minus_i_has_negative_quarter_turn() {
        let z = ComplexScalar::new(0.0, -1.0).sqrt();
        assert!((z.arg() + PI / 4.0).abs() < 1e-15);
        assert!((z.abs() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn negative_real_sqrt_is_on_positive_imaginary_axis() {
        let z = ComplexScalar::new(-4.0, -0.0).sqrt();
        assert!(z.re.abs() < 1e-15);
        assert!((z.im - 2.0).abs() < 1e-15);
    }

    #[test]
    fn inverse_ik_root_has_positive_real_part() {
        for &alpha in &[1.01, 1.5, 2.0, 3.0, 6.0] {
            for &k in &[1.0, 10.0, 1e4] {
                let z = (ComplexScalar::new(0.0, k)).recip().powf(1.0 / alpha);
                assert!(z.re > 0.0);
                assert!((z.arg() + PI / (2.0 * alpha)).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn i_pow_matches_powf() {
        for &p in &[0.5, 1.5, 4.0 / 3.0, 1.999] {
            let a = ComplexScalar::i_pow(p);
            let b = ComplexScalar::I.powf(p);
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn zero_power() {
        assert_eq!(ComplexScalar::ZERO.powf(2.5), ComplexScalar::ZERO);
        assert_eq!(ComplexScalar::new(3.0, 4.0).powf(0.0), ComplexScalar::ONE);
    }
}
