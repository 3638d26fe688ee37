//! Comparison engine: k-sweeps pairing quadrature with the asymptotic formula,
//! envelope extraction, decay-law fits and CSV/JSON output.

pub mod emit;
pub mod fit;
pub mod sweep;

use crate::bump::{eval_bump, BumpParams};
use crate::error::{Error, Result};
use crate::oscquad;

/// Half-window of the envelope detector (a centered 5-point window).
pub const ENVELOPE_HALF_WINDOW: usize = 2;

/// `∫₀¹ f_{α,β}(x) dx`, for comparing spectra across `(α, β)`.
pub fn normalization(params: BumpParams, tol: f64) -> Result<f64> {
    let r = oscquad::integrate_adaptive(|x| eval_bump(params, x), 0.0, 1.0, tol)?;
    if !r.converged {
        return Err(Error::NonConvergence {
            k: 0.0,
            abs_error: r.abs_error,
            tol,
            n_panels: r.n_panels,
        });
    }
    Ok(r.value)
}

/// Indices whose `|v|` is the maximum of the centered 5-point window. The two
/// points at each end have no full window and are never envelope points.
pub fn envelope_indices(values: &[f64]) -> Vec<usize> {
    let w = ENVELOPE_HALF_WINDOW;
    if values.len() < 2 * w + 1 {
        return Vec::new();
    }
    (w..values.len() - w)
        .filter(|&i| {
            let v = values[i].abs();
            v > 0.0 && values[i - w..=i + w].iter().all(|u| u.abs() <= v)
        })
        .collect()
}

fn ranks(xs: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&i, &j| xs[i].total_cmp(&xs[j]));
    let mut out = vec![0.0; xs.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && xs[order[j + 1]] == xs[order[i]] {
            j += 1;
        }
        let avg = 0.5 * (i + j) as f64 + 1.0;
        for &idx in &order[i..=j] {
            out[idx] = avg;
        }
        i = j + 1;
    }
    out
}

/// Spearman rank correlation (average ranks for ties). `None` for fewer than
/// two points or a constant sequence.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Option<f64> {
    assert_eq!(xs.len(), ys.len());
    if xs.len() < 2 {
        return None;
    }
    let (rx, ry) = (ranks(xs), ranks(ys));
    let n = xs.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in rx.iter().zip(&ry) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}
