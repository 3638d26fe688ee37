//! The generalized bump family
//!
//! ```text
//! f(x) = exp(−β / (1 − x²)^(α−1))   for |x| < 1,   0 otherwise
//! ```
//!
//! and the exponent of its Fourier integrand after the shift `x = 1 − t`,
//!
//! ```text
//! g(t) = ik − ikt − β / ((2 − t)^(α−1) t^(α−1)),
//! ```
//!
//! in its exact form and in the small-`t` forms the saddle-point analysis uses.

use serde::{Deserialize, Serialize};

use crate::complex::ComplexScalar;
use crate::error::{Error, Result};

/// Exponents above this make `exp(−e)` underflow past the smallest subnormal.
pub const UNDERFLOW_EXPONENT: f64 = 745.0;

/// Shape parameters `(α, β)` of the bump. `α = 2, β = 1` is the canonical bump.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BumpParams {
    alpha: f64,
    beta: f64,
}

impl BumpParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        // NaN fails both comparisons.
        if !(alpha > 1.0 && alpha.is_finite() && beta > 0.0 && beta.is_finite()) {
            return Err(Error::InvalidParams { alpha, beta });
        }
        Ok(Self { alpha, beta })
    }

    pub const fn canonical() -> Self {
        Self {
            alpha: 2.0,
            beta: 1.0,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn is_canonical(&self) -> bool {
        self.alpha == 2.0 && self.beta == 1.0
    }
}

impl Default for BumpParams {
    fn default() -> Self {
        Self::canonical()
    }
}

/// `f_{α,β}(x)`. Exactly zero on `|x| ≥ 1` and wherever the exponent would underflow.
pub fn eval_bump(params: BumpParams, x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    if ax >= 1.0 {
        return 0.0;
    }
    // (1 − x)(1 + x) keeps relative accuracy near the endpoints.
    let s = (1.0 - ax) * (1.0 + ax);
    let e = params.beta / s.powf(params.alpha - 1.0);
    if e > UNDERFLOW_EXPONENT {
        0.0
    } else {
        (-e).exp()
    }
}

fn check_t(t: ComplexScalar) -> Result<()> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("non-finite t = {t}")));
    }
    if t == ComplexScalar::ZERO {
        return Err(Error::Domain("exponent is singular at t = 0".into()));
    }
    Ok(())
}

/// Assembles `ik − ikt + s` without forming `ik` and `ikt` separately.
fn with_carrier(k: f64, t: ComplexScalar, s: ComplexScalar) -> ComplexScalar {
    ComplexScalar::new(k * t.im + s.re, k * (1.0 - t.re) + s.im)
}

/// `−ikt + s`, the exponent with the `e^{ik}` carrier removed.
pub(crate) fn without_carrier(k: f64, t: ComplexScalar, s: ComplexScalar) -> ComplexScalar {
    ComplexScalar::new(k * t.im + s.re, -k * t.re + s.im)
}

pub(crate) fn singular_exact(params: BumpParams, t: ComplexScalar) -> ComplexScalar {
    let m = params.alpha - 1.0;
    let denom = (2.0 - t).powf(m) * t.powf(m);
    -(params.beta / denom)
}

pub(crate) fn singular_truncated(params: BumpParams, t: ComplexScalar) -> ComplexScalar {
    -(t.scale(2.0).powf(1.0 - params.alpha) * params.beta)
}

/// Binomial-series coefficients of `(1 − t/2)^(1−α)` for every power `j < α`.
pub(crate) fn expansion_coefficients(alpha: f64) -> Vec<f64> {
    let mut coeffs = vec![1.0];
    let mut j = 1usize;
    while (j as f64) < alpha {
        let prev = coeffs[j - 1];
        coeffs.push(prev * (alpha - 2.0 + j as f64) / j as f64);
        j += 1;
    }
    coeffs
}

pub(crate) fn singular_asymptotic(params: BumpParams, t: ComplexScalar) -> ComplexScalar {
    let half_t = t.scale(0.5);
    let series = expansion_coefficients(params.alpha)
        .iter()
        .rev()
        .fold(ComplexScalar::ZERO, |acc, &c| acc * half_t + c);
    -(t.scale(2.0).powf(1.0 - params.alpha) * series * params.beta)
}

/// Exact exponent `g(t) = ik − ikt − β / ((2 − t)^(α−1) t^(α−1))`.
///
/// Only defined for `Re t > 0`: on the other side of the imaginary axis the
/// integrand blows up and the contour cannot be deformed there.
pub fn exponent_exact(params: BumpParams, k: f64, t: ComplexScalar) -> Result<ComplexScalar> {
    check_t(t)?;
    if t == ComplexScalar::real(2.0) {
        return Err(Error::Domain("exponent is singular at t = 2".into()));
    }
    if t.re <= 0.0 {
        return Err(Error::Domain(format!(
            "Re t must be positive (integrand grows without bound there), got t = {t}"
        )));
    }
    Ok(with_carrier(k, t, singular_exact(params, t)))
}

/// Leading small-`t` form `ik − ikt − β / (2t)^(α−1)`.
pub fn exponent_truncated(params: BumpParams, k: f64, t: ComplexScalar) -> Result<ComplexScalar> {
    check_t(t)?;
    Ok(with_carrier(k, t, singular_truncated(params, t)))
}

/// Canonical-bump small-`t` form including the constant: `ik − ikt − 1/(2t) − 1/4`.
pub fn exponent_truncated_canonical(k: f64, t: ComplexScalar) -> Result<ComplexScalar> {
    check_t(t)?;
    let s = -(t.scale(2.0).recip()) - 0.25;
    Ok(with_carrier(k, t, s))
}

/// Small-`t` expansion of [`exponent_exact`] that keeps every term vanishing
/// more slowly than `O(t)`:
///
/// ```text
/// ik − ikt − β (2t)^(1−α) Σ_{j < α} C(α−2+j, j) (t/2)^j
/// ```
///
/// For `α = 2` this is exactly [`exponent_truncated_canonical`] scaled by β;
/// for `α > 2` it retains the non-vanishing `O(t^(2−α))` corrections that the
/// bare leading term drops.
pub fn exponent_asymptotic(params: BumpParams, k: f64, t: ComplexScalar) -> Result<ComplexScalar> {
    check_t(t)?;
    Ok(with_carrier(k, t, singular_asymptotic(params, t)))
}
