//! Chebyshev interpolation tables and the modified moments
//! `∫₋₁¹ T_n(ξ) cos(θξ) dξ` and `∫₋₁¹ T_n(ξ) sin(θξ) dξ`.
//!
//! Moments come from two routes. For `θ ≥ DEGREE` the standard three-term
//! moment recurrence runs forward, where it is stable. Below that they are
//! assembled from the Jacobi–Anger expansion of `e^{iθξ}`, with Bessel values
//! from their power series (`θ < 4`) or Miller's downward recurrence.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::complex::ComplexScalar;

/// Interpolation degree on each panel; panels use `DEGREE + 1` Chebyshev points.
pub const DEGREE: usize = 24;

/// Below this `θ` Bessel values come from the power series.
const SERIES_THETA: f64 = 4.0;

pub(crate) struct ChebTables {
    /// `cos(jπ/N)`, `j = 0..=N`.
    pub nodes: [f64; DEGREE + 1],
    /// `cos(njπ/N)` indexed `[n][j]`.
    pub dct: [[f64; DEGREE + 1]; DEGREE + 1],
}

pub(crate) fn tables() -> &'static ChebTables {
    static TABLES: OnceLock<ChebTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut nodes = [0.0; DEGREE + 1];
        let mut dct = [[0.0; DEGREE + 1]; DEGREE + 1];
        for (j, node) in nodes.iter_mut().enumerate() {
            *node = (j as f64 * PI / DEGREE as f64).cos();
        }
        for (n, row) in dct.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                // Reduce n·j mod 2N so large products keep full accuracy.
                let m = (n * j) % (2 * DEGREE);
                *v = (m as f64 * PI / DEGREE as f64).cos();
            }
        }
        ChebTables { nodes, dct }
    })
}

/// Chebyshev coefficients of the interpolant through `values` at the points
/// `cos(jπ/m)` where `m = values.len() − 1` divides `DEGREE`. The interpolant
/// is `Σ'' a_n T_n` (first and last terms halved).
pub(crate) fn coefficients(values: &[f64]) -> Vec<f64> {
    let m = values.len() - 1;
    debug_assert!(m > 0 && DEGREE.is_multiple_of(m));
    let stride = DEGREE / m;
    let t = tables();
    (0..=m)
        .map(|n| {
            let row = &t.dct[n];
            let mut acc = 0.5 * (values[0] * row[0] + values[m] * row[m * stride]);
            for j in 1..m {
                acc += values[j] * row[j * stride];
            }
            acc * 2.0 / m as f64
        })
        .collect()
}

/// `∫₋₁¹ T_j(ξ) dξ`.
pub(crate) fn plain_moment(j: usize) -> f64 {
    if j % 2 == 1 {
        0.0
    } else {
        2.0 / (1.0 - (j * j) as f64)
    }
}

fn product_moment(n: usize, m: usize) -> f64 {
    0.5 * (plain_moment(n + m) + plain_moment(n.abs_diff(m)))
}

/// Cosine and sine moments `C_n`, `S_n` for `n = 0..=DEGREE`.
#[derive(Clone, Debug)]
pub(crate) struct Moments {
    pub cos: [f64; DEGREE + 1],
    pub sin: [f64; DEGREE + 1],
}

impl Moments {
    pub fn new(theta: f64) -> Self {
        debug_assert!(theta >= 0.0);
        if theta == 0.0 {
            let mut cos = [0.0; DEGREE + 1];
            for (n, c) in cos.iter_mut().enumerate() {
                *c = plain_moment(n);
            }
            Self {
                cos,
                sin: [0.0; DEGREE + 1],
            }
        } else if theta >= DEGREE as f64 {
            forward_recurrence(theta)
        } else {
            jacobi_anger(theta)
        }
    }

    /// `|∫ T_n e^{iθξ}|`; one of the two parts is zero by parity.
    pub fn magnitude(&self, n: usize) -> f64 {
        self.cos[n].abs() + self.sin[n].abs()
    }
}

pub(crate) fn forward_recurrence(theta: f64) -> Moments {
    let (s, c) = theta.sin_cos();
    let th2 = theta * theta;
    let mut g = [ComplexScalar::ZERO; DEGREE + 1];
    g[0] = ComplexScalar::real(2.0 * s / theta);
    g[1] = ComplexScalar::new(0.0, 2.0 * (s - theta * c) / th2);
    let x2_cos = 2.0 * ((th2 - 2.0) * s + 2.0 * theta * c) / (th2 * theta);
    g[2] = ComplexScalar::real(2.0 * x2_cos - g[0].re);
    let inv_i_theta = ComplexScalar::new(0.0, -1.0 / theta);
    for n in 2..DEGREE {
        let nf = n as f64;
        // Boundary term e^{iθ} − (−1)^{n+1} e^{−iθ}.
        let boundary = if (n + 1) % 2 == 0 {
            ComplexScalar::new(0.0, 2.0 * s)
        } else {
            ComplexScalar::real(2.0 * c)
        };
        let bracket = boundary * (1.0 / (nf + 1.0) - 1.0 / (nf - 1.0)) - g[n].scale(2.0);
        g[n + 1] = inv_i_theta * bracket * (nf + 1.0) + g[n - 1] * ((nf + 1.0) / (nf - 1.0));
    }
    let mut out = Moments {
        cos: [0.0; DEGREE + 1],
        sin: [0.0; DEGREE + 1],
    };
    for (n, gn) in g.iter().enumerate().take(DEGREE + 1) {
        // Parity zeros are exact; drop recurrence round-off there.
        if n % 2 == 0 {
            out.cos[n] = gn.re;
        } else {
            out.sin[n] = gn.im;
        }
    }
    out
}

/// `J_0(θ) … J_m(θ)`.
pub(crate) fn bessel_j_sequence(theta: f64, m: usize) -> Vec<f64> {
    if theta < SERIES_THETA {
        bessel_series(theta, m)
    } else {
        bessel_miller(theta, m)
    }
}

fn bessel_series(theta: f64, m: usize) -> Vec<f64> {
    let half = 0.5 * theta;
    let q = half * half;
    let mut lead = 1.0; // (θ/2)^n / n!
    let mut out = Vec::with_capacity(m + 1);
    for n in 0..=m {
        if n > 0 {
            lead *= half / n as f64;
        }
        let mut term = lead;
        let mut sum = term;
        let mut s = 0usize;
        while term.abs() > 1e-18 * sum.abs() && s < 200 {
            s += 1;
            term *= -q / (s as f64 * (n + s) as f64);
            sum += term;
        }
        out.push(sum);
    }
    out
}

fn bessel_miller(theta: f64, m: usize) -> Vec<f64> {
    let mut start = m.max(theta.ceil() as usize) + 20 + (40.0 * m as f64).sqrt() as usize;
    start += start % 2;
    let mut seq = vec![0.0; start + 2];
    seq[start] = 1e-30;
    let mut norm = 2.0 * seq[start];
    for j in (1..=start).rev() {
        seq[j - 1] = 2.0 * j as f64 / theta * seq[j] - seq[j + 1];
        if seq[j - 1].abs() > 1e250 {
            for v in seq[j - 1..].iter_mut() {
                *v *= 1e-250;
            }
            norm *= 1e-250;
        }
        if (j - 1) % 2 == 0 && j > 1 {
            norm += 2.0 * seq[j - 1];
        }
    }
    norm += seq[0];
    seq.truncate(m + 1);
    for v in seq.iter_mut() {
        *v /= norm;
    }
    seq
}

pub(crate) fn jacobi_anger(theta: f64) -> Moments {
    let m_max = theta.ceil() as usize + 32;
    let bessel = bessel_j_sequence(theta, m_max);
    let mut out = Moments {
        cos: [0.0; DEGREE + 1],
        sin: [0.0; DEGREE + 1],
    };
    for n in 0..=DEGREE {
        let mut acc = 0.0;
        if n % 2 == 0 {
            // cos(θξ) = J₀ + 2 Σ (−1)^k J_{2k} T_{2k}
            for m in (0..=m_max).step_by(2) {
                let w = if m == 0 {
                    1.0
                } else if (m / 2) % 2 == 0 {
                    2.0
                } else {
                    -2.0
                };
                acc += w * bessel[m] * product_moment(n, m);
            }
            out.cos[n] = acc;
        } else {
            // sin(θξ) = 2 Σ (−1)^k J_{2k+1} T_{2k+1}
            for m in (1..=m_max).step_by(2) {
                let w = if ((m - 1) / 2) % 2 == 0 { 2.0 } else { -2.0 };
                acc += w * bessel[m] * product_moment(n, m);
            }
            out.sin[n] = acc;
        }
    }
    out
}
