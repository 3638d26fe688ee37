//! Filon–Clenshaw–Curtis panel rule for `∫ f(x) cos(ωx + φ) dx`.
//!
//! On `[c − h, c + h]` the smooth factor is interpolated at the `N + 1`
//! Chebyshev points and the interpolant is integrated exactly against the
//! oscillatory weight through the modified moments. The error estimate adds
//! the nested `N/2` rule's disagreement to the discarded-tail magnitude of the
//! top third of the Chebyshev coefficients.

use super::chebyshev::{self, Moments, DEGREE};
use super::{PanelEstimate, PanelRule};
use crate::error::Result;

pub(crate) struct FilonClenshawCurtis {
    pub omega: f64,
    pub phase: f64,
}

fn weighted_sum(coeffs: &[f64], moments: &Moments, cos_phi: f64, sin_phi: f64) -> f64 {
    let last = coeffs.len() - 1;
    coeffs
        .iter()
        .enumerate()
        .map(|(n, &a)| {
            let w = if n == 0 || n == last { 0.5 } else { 1.0 };
            w * a * (cos_phi * moments.cos[n] - sin_phi * moments.sin[n])
        })
        .sum()
}

impl PanelRule for FilonClenshawCurtis {
    const EVALS: usize = DEGREE + 1;

    fn apply<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> Result<PanelEstimate> {
        let center = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let nodes = &chebyshev::tables().nodes;
        let mut values = [0.0; DEGREE + 1];
        let mut max_abs: f64 = 0.0;
        for (v, &xi) in values.iter_mut().zip(nodes) {
            *v = super::checked(f, center + half * xi)?;
            max_abs = max_abs.max(v.abs());
        }

        let moments = Moments::new(self.omega * half);
        let (sin_phi, cos_phi) = (self.omega * center + self.phase).sin_cos();

        let full = chebyshev::coefficients(&values);
        let coarse_values: Vec<f64> = values.iter().step_by(2).copied().collect();
        let coarse = chebyshev::coefficients(&coarse_values);

        let value = half * weighted_sum(&full, &moments, cos_phi, sin_phi);
        let coarse_value = half * weighted_sum(&coarse, &moments, cos_phi, sin_phi);

        let tail: f64 = (DEGREE - DEGREE / 3 + 1..=DEGREE)
            .map(|n| full[n].abs() * moments.magnitude(n))
            .sum();
        let error = (value - coarse_value).abs() + half * tail;
        let floor = 50.0 * f64::EPSILON * 2.0 * half * max_abs;
        Ok(PanelEstimate {
            value,
            error: error.max(floor),
        })
    }
}
