//! Coulomb scattering in two dimensions, where the phase differences are
//! `σ_m − σ_{m+1} = arctan(γ/(m+½))` and the stopping sum converges.

use std::f64::consts::PI;

use crate::gas::ScatteringSetup;
use crate::special::{sum_series, SumControl, TailMode};
use crate::{Error, Result};

/// `n0_2d v² (γ/k) 2π tanh(πγ)`.
pub fn stopping_2d_exact(n0_2d: f64, s: &ScatteringSetup) -> Result<f64> {
    if !(n0_2d > 0.0) || !n0_2d.is_finite() {
        return Err(Error::Domain(format!(
            "areal density must be positive, got {n0_2d}"
        )));
    }
    Ok(n0_2d * s.v * s.v * (s.gamma / s.k) * 2.0 * PI * (PI * s.gamma).tanh())
}

/// `(πγ/2) tanh(πγ)`, the value of the planar partial-wave sum.
pub fn planar_partial_wave_sum_closed(gamma: f64) -> f64 {
    0.5 * PI * gamma * (PI * gamma).tanh()
}

/// `Σ_{m≥0} sin²(arctan(γ/(m+½))) = Σ γ²/((m+½)² + γ²)`.
pub fn stopping_2d_partial_wave(s: &ScatteringSetup, ctrl: &SumControl) -> Result<f64> {
    let g2 = s.gamma * s.gamma;
    if g2 == 0.0 {
        return Ok(0.0);
    }
    let ctrl = match ctrl.tail_mode {
        TailMode::IntegralTailCorrection { .. } => ctrl.with_decay_power(2.0),
        TailMode::Truncate => *ctrl,
    };
    sum_series(
        |n| {
            let m = n as f64 - 0.5;
            g2 / (m * m + g2)
        },
        &ctrl,
    )?
    .into_result()
}

/// Both sides of `sin²Δ = (γ/(m+½)) sinΔ cosΔ` with `Δ = arctan(γ/(m+½))`.
pub fn planar_identity_check(gamma: f64, m: usize) -> (f64, f64) {
    let x = gamma / (m as f64 + 0.5);
    let (s, c) = x.atan().sin_cos();
    (s * s, x * s * c)
}
