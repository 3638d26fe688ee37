//! Fourier transforms of the C∞ bump family `f(x) = exp(−β/(1−x²)^(α−1))`,
//! computed two independent ways: closed-form saddle-point asymptotics
//! ([`saddle`]) and adaptive Filon–Clenshaw–Curtis quadrature ([`oscquad`]).
//! [`harness`] compares them over k-sweeps, fits the decay law and writes
//! CSV/JSON.
//!
//! ```
//! use bumpft::{asymptotic_ft, fourier_transform_numeric, BumpParams};
//!
//! let p = BumpParams::canonical();
//! let numeric = fourier_transform_numeric(p, 40.0, 1e-12).unwrap();
//! let asym = asymptotic_ft(p, 40.0).unwrap();
//! assert!(numeric.converged);
//! assert!((numeric.value - asym).abs() < 0.1 * numeric.value.abs());
//! ```

#![forbid(unsafe_code)]

pub mod bump;
pub mod complex;
pub mod error;
pub mod exec;
pub mod harness;
pub mod numfmt;
pub mod oscquad;
pub mod saddle;

pub use bump::{eval_bump, BumpParams};
pub use complex::ComplexScalar;
pub use error::{Error, Result};
pub use exec::Execution;
pub use harness::{
    fit::{fit_decay, fit_growth_exponent, Branch, DecayFit, GrowthFit},
    normalization,
    sweep::{run_sweep, run_sweep_with, Spacing, SweepRecord},
};
pub use oscquad::{
    fourier_transform_numeric, integrate_adaptive, integrate_cos, QuadOptions, QuadratureResult,
};
pub use saddle::{
    amplitude_coefficient, asymptotic_ft, asymptotic_ft_canonical, curvature, descent_check,
    saddle_data, saddle_point, SaddleData,
};
