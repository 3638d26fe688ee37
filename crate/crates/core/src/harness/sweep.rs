use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bump::BumpParams;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::oscquad::{self, QuadOptions};
use crate::saddle;

/// Denominator floor for relative errors at the zeros of `F`.
pub const REL_ERR_FLOOR: f64 = 1e-300;

/// One row of a numeric-vs-asymptotic comparison.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub k: f64,
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub f_numeric: f64,
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub f_asymptotic: f64,
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub abs_err: f64,
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub rel_err: f64,
    #[serde(serialize_with = "crate::numfmt::serialize_sci17")]
    pub quad_abs_error: f64,
    pub n_evals: usize,
}

impl SweepRecord {
    pub fn new(k: f64, f_numeric: f64, f_asymptotic: f64, quad_abs_error: f64, n_evals: usize) -> Self {
        let abs_err = (f_numeric - f_asymptotic).abs();
        Self {
            k,
            f_numeric,
            f_asymptotic,
            abs_err,
            rel_err: abs_err / f_numeric.abs().max(REL_ERR_FLOOR),
            quad_abs_error,
            n_evals,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

impl FromStr for Spacing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Spacing::Linear),
            "log" => Ok(Spacing::Log),
            other => Err(Error::Parse(format!("unknown spacing {other:?} (linear|log)"))),
        }
    }
}

/// `n_points` values from `k_min` to `k_max` inclusive, nondecreasing.
/// `k_min == k_max` gives `n_points` copies of that frequency.
pub fn k_grid(k_min: f64, k_max: f64, n_points: usize, spacing: Spacing) -> Result<Vec<f64>> {
    if !(k_min > 0.0 && k_min.is_finite() && k_max.is_finite() && k_min <= k_max) {
        return Err(Error::InvalidInput(format!(
            "need 0 < k_min <= k_max, got k_min = {k_min}, k_max = {k_max}"
        )));
    }
    if n_points < 2 {
        return Err(Error::InvalidInput(format!("need at least 2 points, got {n_points}")));
    }
    let last = (n_points - 1) as f64;
    let grid = (0..n_points)
        .map(|i| {
            if i == n_points - 1 {
                return k_max;
            }
            let s = i as f64 / last;
            match spacing {
                Spacing::Linear => k_min + (k_max - k_min) * s,
                Spacing::Log => (k_min.ln() + (k_max.ln() - k_min.ln()) * s).exp(),
            }
        })
        .collect();
    Ok(grid)
}

/// Evaluates one row. Fails if the quadrature does not converge.
pub fn sweep_row(params: BumpParams, k: f64, opts: &QuadOptions) -> Result<SweepRecord> {
    let numeric = oscquad::fourier_transform_numeric_with(params, k, opts)?;
    if !numeric.converged {
        return Err(Error::NonConvergence {
            k,
            abs_error: numeric.abs_error,
            tol: opts.tol,
            n_panels: numeric.n_panels,
        });
    }
    let asymptotic = saddle::asymptotic_ft(params, k)?;
    Ok(SweepRecord::new(
        k,
        numeric.value,
        asymptotic,
        numeric.abs_error,
        numeric.n_evals,
    ))
}

/// Rows for every `k` of `grid`, in grid order. Rows are independent and run
/// under `exec`; the first failing row (in grid order) is reported.
pub fn run_sweep_with(
    params: BumpParams,
    grid: &[f64],
    opts: &QuadOptions,
    exec: Execution,
) -> Result<Vec<SweepRecord>> {
    exec.map(grid, |&k| sweep_row(params, k, opts))
        .into_iter()
        .collect()
}

pub fn run_sweep(
    params: BumpParams,
    k_min: f64,
    k_max: f64,
    n_points: usize,
    spacing: Spacing,
    tol: f64,
) -> Result<Vec<SweepRecord>> {
    let grid = k_grid(k_min, k_max, n_points, spacing)?;
    run_sweep_with(params, &grid, &QuadOptions::with_tol(tol), Execution::default())
}

/// `(k, rel_err)` at the envelope points of `|f_numeric|` with `k ≥ k_from`.
pub fn envelope_rel_errors(records: &[SweepRecord], k_from: f64) -> Vec<(f64, f64)> {
    let numeric: Vec<f64> = records.iter().map(|r| r.f_numeric).collect();
    super::envelope_indices(&numeric)
        .into_iter()
        .map(|i| &records[i])
        .filter(|r| r.k >= k_from)
        .map(|r| (r.k, r.rel_err))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        let g = k_grid(1.0, 3.0, 5, Spacing::Linear).unwrap();
        assert_eq!(g, vec![1.0, 1.5, 2.0, 2.5, 3.0]);
        let g = k_grid(1.0, 1e4, 5, Spacing::Log).unwrap();
        assert!((g[1] - 10.0).abs() < 1e-12 && g[4] == 1e4);
        assert_eq!(k_grid(10.0, 10.0, 2, Spacing::Linear).unwrap(), vec![10.0, 10.0]);
        assert!(k_grid(0.0, 1.0, 5, Spacing::Linear).is_err());
        assert!(k_grid(2.0, 1.0, 5, Spacing::Linear).is_err());
        assert!(k_grid(1.0, 2.0, 1, Spacing::Linear).is_err());
        assert_eq!("log".parse::<Spacing>().unwrap(), Spacing::Log);
        assert!("cubic".parse::<Spacing>().is_err());
    }

    #[test]
    fn record_error_fields() {
        let r = SweepRecord::new(5.0, 2.0, 1.5, 1e-13, 100);
        assert_eq!(r.abs_err, 0.5);
        assert_eq!(r.rel_err, 0.25);
        let z = SweepRecord::new(5.0, 0.0, 1e-20, 0.0, 1);
        assert_eq!(z.rel_err, 1e-20 / REL_ERR_FLOOR);
    }

    #[test]
    fn degenerate_two_point_sweep() {
        let rows = run_sweep(BumpParams::canonical(), 10.0, 10.0, 2, Spacing::Linear, 1e-12).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0], rows[1]);
        assert!(rows[0].f_numeric.is_finite() && rows[0].f_asymptotic.is_finite());
    }

    #[test]
    fn non_convergence_aborts_sweep() {
        let opts = QuadOptions {
            tol: 1e-15,
            max_panels: 2,
        };
        let err = run_sweep_with(BumpParams::canonical(), &[5.0, 6.0], &opts, Execution::Sequential)
            .unwrap_err();
        assert!(matches!(err, Error::NonConvergence { k, .. } if k == 5.0));
    }
}
