use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the bump-transform library and CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid bump parameters: alpha = {alpha}, beta = {beta} (need alpha > 1, beta > 0)")]
    InvalidParams { alpha: f64, beta: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("integrand is not finite at x = {x}")]
    NonFiniteIntegrand { x: f64 },

    #[error("quadrature did not converge at k = {k}: abs_error {abs_error:e} > tol {tol:e} after {n_panels} panels")]
    NonConvergence {
        k: f64,
        abs_error: f64,
        tol: f64,
        n_panels: usize,
    },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
