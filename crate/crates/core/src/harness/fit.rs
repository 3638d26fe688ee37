//! Least-squares fits of the envelope law `|F| ≈ C k^(−p) e^(−c k^γ)`.
//!
//! Envelope samples are the local maxima of `|F|` over a centered 5-point
//! window, restricted to `k ≥ 20`. With `γ = 1/2` the fit recovers the
//! canonical bump's `p = 3/4`, `c = 1`; leaving `γ` free estimates the growth
//! exponent `(α−1)/α` of the general family.

use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::sweep::SweepRecord;
use crate::error::{Error, Result};

pub const FIT_K_MIN: f64 = 20.0;
pub const MIN_ENVELOPE_POINTS: usize = 10;

const GROWTH_RANGE: (f64, f64) = (0.05, 0.95);
const GROWTH_GRID_STEP: f64 = 0.01;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    #[default]
    Numeric,
    Asymptotic,
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "numeric" => Ok(Branch::Numeric),
            "asymptotic" => Ok(Branch::Asymptotic),
            other => Err(Error::Parse(format!(
                "unknown branch {other:?} (numeric|asymptotic)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecayFit {
    /// Power-law exponent `p`.
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub p_exponent: f64,
    /// Coefficient `c` of `k^γ` (of `√k` for [`fit_decay`]).
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub c_root: f64,
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub log_amplitude: f64,
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub residual_rms: f64,
    pub n_points: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthFit {
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub growth_exponent: f64,
    pub fit: DecayFit,
}

/// `(k, |F|)` at envelope points with `k ≥ 20`. Records must be in ascending `k`.
pub fn envelope_samples(records: &[SweepRecord], branch: Branch) -> Vec<(f64, f64)> {
    let kept: Vec<&SweepRecord> = records.iter().filter(|r| r.k >= FIT_K_MIN).collect();
    let values: Vec<f64> = kept
        .iter()
        .map(|r| match branch {
            Branch::Numeric => r.f_numeric,
            Branch::Asymptotic => r.f_asymptotic,
        })
        .collect();
    super::envelope_indices(&values)
        .into_iter()
        .map(|i| (kept[i].k, values[i].abs()))
        .collect()
}

/// Fits `ln|F| = ln C − p ln k − c k^γ` for a fixed `γ`.
pub fn fit_envelope(samples: &[(f64, f64)], growth: f64) -> Result<DecayFit> {
    if samples.len() < MIN_ENVELOPE_POINTS {
        return Err(Error::InsufficientData(format!(
            "{} envelope points, need at least {MIN_ENVELOPE_POINTS}",
            samples.len()
        )));
    }
    let n = samples.len();
    let design = DMatrix::from_fn(n, 3, |i, j| {
        let k = samples[i].0;
        match j {
            0 => 1.0,
            1 => -k.ln(),
            _ => -k.powf(growth),
        }
    });
    let rhs = DVector::from_iterator(n, samples.iter().map(|&(_, v)| v.ln()));
    let coef = design
        .clone()
        .svd(true, true)
        .solve(&rhs, 1e-14)
        .map_err(|e| Error::InsufficientData(format!("least squares failed: {e}")))?;
    let resid = &rhs - &design * &coef;
    Ok(DecayFit {
        log_amplitude: coef[0],
        p_exponent: coef[1],
        c_root: coef[2],
        residual_rms: (resid.norm_squared() / n as f64).sqrt(),
        n_points: n,
    })
}

/// Fits `C k^(−p) e^(−c√k)` to the envelope of the chosen branch.
pub fn fit_decay(records: &[SweepRecord], branch: Branch) -> Result<DecayFit> {
    fit_envelope(&envelope_samples(records, branch), 0.5)
}

/// Fits `γ` as well, by minimizing the residual over a grid followed by a
/// golden-section refinement.
pub fn fit_growth_exponent(records: &[SweepRecord], branch: Branch) -> Result<GrowthFit> {
    let samples = envelope_samples(records, branch);
    let rms = |g: f64| fit_envelope(&samples, g).map(|f| f.residual_rms);

    let steps = ((GROWTH_RANGE.1 - GROWTH_RANGE.0) / GROWTH_GRID_STEP).round() as usize;
    let mut best = (GROWTH_RANGE.0, f64::INFINITY);
    for i in 0..=steps {
        let g = GROWTH_RANGE.0 + GROWTH_GRID_STEP * i as f64;
        let r = rms(g)?;
        if r < best.1 {
            best = (g, r);
        }
    }

    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut lo = (best.0 - GROWTH_GRID_STEP).max(GROWTH_RANGE.0);
    let mut hi = (best.0 + GROWTH_GRID_STEP).min(GROWTH_RANGE.1);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (rms(x1)?, rms(x2)?);
    for _ in 0..60 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = rms(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = rms(x2)?;
        }
    }
    let gamma = 0.5 * (lo + hi);
    Ok(GrowthFit {
        growth_exponent: gamma,
        fit: fit_envelope(&samples, gamma)?,
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    fn canonical_closed_form(k: f64) -> f64 {
        let c = 2.0 * PI.sqrt() * 2f64.powf(-0.25) * (-0.25f64).exp();
        c * k.powf(-0.75) * (-k.sqrt()).exp() * (k - k.sqrt() - 3.0 * PI / 8.0).cos()
    }

    /// Peaks of the cosine factor, where |F| equals its envelope, flanked by
    /// two lower samples on each side.
    fn peak_flanked_records(k_lo: f64, k_hi: f64) -> Vec<SweepRecord> {
        let mut ks = Vec::new();
        let mut n = 0;
        loop {
            // Solve k − √k − 3π/8 = nπ for √k.
            let target = n as f64 * PI + 3.0 * PI / 8.0;
            let s = 0.5 * (1.0 + (1.0 + 4.0 * target).sqrt());
            let k = s * s;
            n += 1;
            if k < k_lo {
                continue;
            }
            if k > k_hi {
                break;
            }
            ks.extend([k - 1.0, k - 0.5, k, k + 0.5, k + 1.0]);
        }
        ks.into_iter()
            .map(|k| {
                let v = canonical_closed_form(k);
                SweepRecord::new(k, v, v, 0.0, 0)
            })
            .collect()
    }

    #[test]
    fn recovers_exact_envelope_parameters() {
        let records = peak_flanked_records(20.0, 300.0);
        let fit = fit_decay(&records, Branch::Asymptotic).unwrap();
        assert!(fit.n_points >= 10);
        assert!((fit.p_exponent - 0.75).abs() < 1e-6, "{fit:?}");
        assert!((fit.c_root - 1.0).abs() < 1e-6, "{fit:?}");
        let c = 2.0 * PI.sqrt() * 2f64.powf(-0.25) * (-0.25f64).exp();
        assert!((fit.log_amplitude - c.ln()).abs() < 1e-6);
        assert!(fit.residual_rms < 1e-9);
    }

    #[test]
    fn recovers_growth_exponent_of_pure_law() {
        let samples: Vec<(f64, f64)> = (0..40)
            .map(|i| {
                let k = 20.0 + 10.0 * i as f64;
                (k, 3.0 * k.powf(-0.6) * (-0.8 * k.powf(2.0 / 3.0)).exp())
            })
            .collect();
        // Same samples as sweep records with every point an envelope point.
        let records: Vec<SweepRecord> = samples
            .iter()
            .flat_map(|&(k, v)| {
                [
                    SweepRecord::new(k - 2.0, 0.1 * v, 0.1 * v, 0.0, 0),
                    SweepRecord::new(k - 1.0, 0.2 * v, 0.2 * v, 0.0, 0),
                    SweepRecord::new(k, v, v, 0.0, 0),
                    SweepRecord::new(k + 1.0, 0.2 * v, 0.2 * v, 0.0, 0),
                    SweepRecord::new(k + 2.0, 0.1 * v, 0.1 * v, 0.0, 0),
                ]
            })
            .collect();
        let g = fit_growth_exponent(&records, Branch::Numeric).unwrap();
        assert!((g.growth_exponent - 2.0 / 3.0).abs() < 1e-4, "{g:?}");
        assert!((g.fit.p_exponent - 0.6).abs() < 1e-3);
    }

    #[test]
    fn too_few_points() {
        let records = peak_flanked_records(20.0, 40.0);
        assert!(matches!(
            fit_decay(&records, Branch::Numeric),
            Err(Error::InsufficientData(_))
        ));
        assert!(fit_decay(&[], Branch::Numeric).is_err());
    }

    #[test]
    fn branch_parsing() {
        assert_eq!("asymptotic".parse::<Branch>().unwrap(), Branch::Asymptotic);
        assert!("both".parse::<Branch>().is_err());
    }
}
