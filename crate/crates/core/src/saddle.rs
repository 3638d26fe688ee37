//! Closed-form saddle-point asymptotics of the bump Fourier transform.
//!
//! After the shift `x = 1 − t` the transform is `F(k) = 2 Re ∫₀¹ e^{g(t)} dt`.
//! The leading small-`t` exponent `ik − ikt − β/(2t)^(α−1)` is stationary at
//!
//! ```text
//! t₀ = [2^(1−α) β (α−1) / (ik)]^(1/α)
//! ```
//!
//! (the root with `Re t₀ > 0`; its mirror image lies where the integrand blows
//! up). Passing the contour through `t₀` along `t = u / i^(1/α)` turns the
//! integral into a Gaussian, giving
//!
//! ```text
//! F(k) ≈ 2 Re[ √(π / ((ik)^((α+1)/α) A)) · e^{g(t₀)} ],   A = α [2β(α−1)]^(−1/α).
//! ```

use std::f64::consts::PI;

use serde::Serialize;

use crate::bump::{self, BumpParams};
use crate::complex::ComplexScalar;
use crate::error::{Error, Result};

/// Samples per side in [`descent_check`].
const DESCENT_SAMPLES_PER_SIDE: usize = 32;

/// Saddle-point quantities for one `(params, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SaddleData {
    pub t0: ComplexScalar,
    /// Exact exponent `g(t₀)`.
    pub g_at_t0: ComplexScalar,
    /// `g″(t₀)` of the leading small-`t` exponent.
    pub g2_at_t0: ComplexScalar,
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub a_coeff: f64,
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub k: f64,
}

fn check_k(k: f64) -> Result<()> {
    if k > 0.0 && k.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "k must be positive and finite, got {k} (F is even: use F(−k) = F(k))"
        )))
    }
}

fn saddle_scale(params: BumpParams) -> f64 {
    let alpha = params.alpha();
    2f64.powf(1.0 - alpha) * params.beta() * (alpha - 1.0)
}

/// Principal-branch saddle location `t₀`, with `arg t₀ = −π/(2α)`.
pub fn saddle_point(params: BumpParams, k: f64) -> Result<ComplexScalar> {
    check_k(k)?;
    // c / (ik) = −ic/k sits exactly on the negative imaginary axis.
    let radicand = ComplexScalar::new(0.0, -saddle_scale(params) / k);
    Ok(radicand.powf(1.0 / params.alpha()))
}

/// Derivative of the leading small-`t` exponent, `−ik + β(α−1) 2^(1−α) / t^α`.
pub fn truncated_slope(params: BumpParams, k: f64, t: ComplexScalar) -> ComplexScalar {
    ComplexScalar::new(0.0, -k) + saddle_scale(params) / t.powf(params.alpha())
}

/// `g″(t₀) = −2^(1−α) β α (α−1) / t₀^(α+1)`.
pub fn curvature(params: BumpParams, k: f64, t0: ComplexScalar) -> Result<ComplexScalar> {
    check_k(k)?;
    if t0 == ComplexScalar::ZERO || !t0.is_finite() {
        return Err(Error::Domain(format!("curvature undefined at t0 = {t0}")));
    }
    let alpha = params.alpha();
    Ok(-(saddle_scale(params) * alpha / t0.powf(alpha + 1.0)))
}

/// The same curvature written as `−i^((α+1)/α) · 2A · k^((α+1)/α)`.
pub fn curvature_closed_form(params: BumpParams, k: f64) -> Result<ComplexScalar> {
    check_k(k)?;
    let p = (params.alpha() + 1.0) / params.alpha();
    Ok(-(ComplexScalar::i_pow(p) * (2.0 * amplitude_coefficient(params) * k.powf(p))))
}

/// `A = α [2β(α−1)]^(−1/α)`.
pub fn amplitude_coefficient(params: BumpParams) -> f64 {
    let alpha = params.alpha();
    alpha * (2.0 * params.beta() * (alpha - 1.0)).powf(-1.0 / alpha)
}

pub fn saddle_data(params: BumpParams, k: f64) -> Result<SaddleData> {
    let t0 = saddle_point(params, k)?;
    Ok(SaddleData {
        t0,
        g_at_t0: bump::exponent_exact(params, k, t0)?,
        g2_at_t0: curvature(params, k, t0)?,
        a_coeff: amplitude_coefficient(params),
        k,
    })
}

/// `√(π / ((ik)^((α+1)/α) A))` on the principal branch of the whole radicand.
fn gaussian_prefactor(params: BumpParams, k: f64) -> ComplexScalar {
    let p = (params.alpha() + 1.0) / params.alpha();
    let ik_pow = ComplexScalar::new(0.0, k).powf(p);
    (PI / (ik_pow * amplitude_coefficient(params))).sqrt()
}

/// The complex saddle contribution with its `e^{ik}` carrier, given the
/// carrier-free exponent at `t₀`.
fn saddle_contribution(params: BumpParams, k: f64, reduced: ComplexScalar) -> ComplexScalar {
    gaussian_prefactor(params, k) * ComplexScalar::cis(k) * reduced.exp()
}

fn asymptotic_contribution(params: BumpParams, k: f64) -> Result<ComplexScalar> {
    let t0 = saddle_point(params, k)?;
    let reduced = bump::without_carrier(k, t0, bump::singular_asymptotic(params, t0));
    Ok(saddle_contribution(params, k, reduced))
}

/// Saddle-point asymptotic `F(k)` for general `(α, β)`.
///
/// The exponent at `t₀` is [`bump::exponent_asymptotic`]: all terms of the
/// exact exponent that do not vanish faster than `O(t)`. At `α = 2, β = 1` this
/// is term-for-term [`asymptotic_ft_canonical`].
pub fn asymptotic_ft(params: BumpParams, k: f64) -> Result<f64> {
    Ok(2.0 * asymptotic_contribution(params, k)?.re)
}

/// Modulus `2|…|` of the saddle contribution: the envelope `F(k)` oscillates under.
pub fn asymptotic_envelope(params: BumpParams, k: f64) -> Result<f64> {
    Ok(2.0 * asymptotic_contribution(params, k)?.abs())
}

/// Variant of [`asymptotic_ft`] that evaluates the exact exponent `g(t₀)`.
/// Differs from it by a factor `1 + O(t₀)`.
pub fn asymptotic_ft_exact_exponent(params: BumpParams, k: f64) -> Result<f64> {
    let t0 = saddle_point(params, k)?;
    let reduced = bump::without_carrier(k, t0, bump::singular_exact(params, t0));
    Ok(2.0 * saddle_contribution(params, k, reduced).re)
}

/// Canonical bump: `2 Re[ √(−iπ / (√(2i) k^(3/2))) · e^{ik − 1/4 − √(2ik)} ]`.
pub fn asymptotic_ft_canonical(k: f64) -> Result<f64> {
    check_k(k)?;
    let sqrt_2i = ComplexScalar::new(0.0, 2.0).sqrt();
    let prefactor = (ComplexScalar::new(0.0, -PI) / (sqrt_2i * k.powf(1.5))).sqrt();
    let reduced = -ComplexScalar::new(0.0, 2.0 * k).sqrt() - 0.25;
    Ok(2.0 * (prefactor * ComplexScalar::cis(k) * reduced.exp()).re)
}

/// True iff the contour direction `e^{−iπ/(2α)}` descends through `t₀` on both
/// sides: `Re[g(t₀ + s·e^{−iπ/(2α)}) − g(t₀)] < 0` for 32 evenly spaced
/// `s ∈ (0, s_max]` and their negatives.
///
/// `g` here is the leading small-`t` exponent, the function `t₀` is stationary
/// for. The exact exponent has a nonzero slope at `t₀`, so one side of any
/// direction through `t₀` ascends for small enough `s`.
pub fn descent_check(params: BumpParams, k: f64, s_max: f64) -> Result<bool> {
    let t0 = saddle_point(params, k)?;
    if !(s_max > 0.0 && s_max <= 0.5 * t0.abs()) {
        return Err(Error::InvalidInput(format!(
            "s_max must lie in (0, |t0|/2] = (0, {}], got {s_max}",
            0.5 * t0.abs()
        )));
    }
    let direction = ComplexScalar::cis(-PI / (2.0 * params.alpha()));
    let g0 = bump::exponent_truncated(params, k, t0)?;
    let n = DESCENT_SAMPLES_PER_SIDE;
    for j in 1..=n {
        let s = s_max * j as f64 / n as f64;
        for s in [s, -s] {
            let g = bump::exponent_truncated(params, k, t0 + direction.scale(s))?;
            if (g - g0).re >= 0.0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
