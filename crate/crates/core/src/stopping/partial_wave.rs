use std::f64::consts::PI;

use crate::gas::{ElectronGas, ScatteringSetup};
use crate::phase::{coulomb_diff, PhaseShiftSeries, TailModel};
use crate::special::ZETA3;
use crate::{Error, Result};

use super::{Diagnostics, Method, StoppingResult};

/// Both sides of `(l+1) sin²Δ = γ sinΔ cosΔ` for the Coulomb difference
/// `Δ = arctan(γ/(l+1))`.
pub fn coulomb_identity_check(gamma: f64, l: usize) -> (f64, f64) {
    let d = coulomb_diff(gamma, l);
    let (s, c) = d.sin_cos();
    ((l as f64 + 1.0) * s * s, gamma * s * c)
}

/// `γ² Σ_{l=0}^{l_max} (l+1)/((l+1)² + γ²)`; grows like `γ² ln l_max`.
pub fn truncated_coulomb_sum(gamma: f64, l_max: usize) -> f64 {
    let g2 = gamma * gamma;
    (1..=l_max + 1)
        .map(|j| {
            let j = j as f64;
            j / (j * j + g2)
        })
        .sum::<f64>()
        * g2
}

fn check_length(series: &PhaseShiftSeries) -> Result<()> {
    if series.values.len() < 2 {
        return Err(Error::Series(format!(
            "a stopping sum needs at least two phase shifts, got {}",
            series.values.len()
        )));
    }
    Ok(())
}

/// Contribution of the differences beyond `l_max` to the sine sum.
///
/// With `sin 2x ≈ 2x − (4/3)x³` the linear part telescopes to `2δ_{l_max}`;
/// the cubic part uses the Coulomb differences `γ/(l+1)`.
fn sine_tail(series: &PhaseShiftSeries) -> f64 {
    match series.tail_model {
        TailModel::None => 0.0,
        TailModel::CoulombLimit { gamma } => {
            let l_max = series.l_max();
            let head: f64 = (1..=l_max).rev().map(|j| (j as f64).powi(-3)).sum();
            2.0 * series.values[l_max] - 4.0 / 3.0 * gamma.powi(3) * (ZETA3 - head)
        }
    }
}

/// `Σ_l sin(2[δ_l − δ_{l+1}])` over the stored differences plus the tail model.
pub fn sine_sum(series: &PhaseShiftSeries) -> Result<f64> {
    check_length(series)?;
    let body: f64 = series.differences().map(|d| (2.0 * d).sin()).sum();
    Ok(body + sine_tail(series))
}

/// `Σ_l (l+1) sin²(δ_l − δ_{l+1})` over the stored differences.
///
/// No tail is added: with Coulomb-limit differences the remainder diverges
/// logarithmically, so the series must be stored until the shifts vanish.
pub fn transport_sum(series: &PhaseShiftSeries) -> Result<f64> {
    check_length(series)?;
    Ok(series
        .differences()
        .enumerate()
        .map(|(l, d)| (l as f64 + 1.0) * d.sin().powi(2))
        .sum())
}

fn check_wave_number(s: &ScatteringSetup, series: &PhaseShiftSeries) -> Result<()> {
    if (series.k - s.k).abs() > 1e-12 * s.k {
        return Err(Error::Series(format!(
            "series wave number {} does not match the setup ({})",
            series.k, s.k
        )));
    }
    Ok(())
}

fn diagnostics(series: &PhaseShiftSeries, tail: f64) -> Diagnostics {
    Diagnostics {
        l_max: Some(series.l_max()),
        last_shift: series.values.last().map(|d| d.abs()),
        tail,
    }
}

/// `dE/dz = v² n0 (2π/k²) γ Σ sin(2[δ_l − δ_{l+1}])`.
pub fn stopping_new_form(
    gas: &ElectronGas,
    s: &ScatteringSetup,
    series: &PhaseShiftSeries,
) -> Result<StoppingResult> {
    check_wave_number(s, series)?;
    let sum = sine_sum(series)?;
    let scale = s.v * s.v * gas.n0 * 2.0 * PI / (s.k * s.k) * s.gamma;
    Ok(StoppingResult {
        value: scale * sum,
        method: Method::NumericPartialWave,
        diagnostics: diagnostics(series, scale * sine_tail(series)),
    })
}

/// `dE/dz = v² n0 (4π/k²) Σ (l+1) sin²(δ_l − δ_{l+1})`.
pub fn stopping_transport_form(
    gas: &ElectronGas,
    s: &ScatteringSetup,
    series: &PhaseShiftSeries,
) -> Result<StoppingResult> {
    check_wave_number(s, series)?;
    let sum = transport_sum(series)?;
    Ok(StoppingResult {
        value: s.v * s.v * gas.n0 * 4.0 * PI / (s.k * s.k) * sum,
        method: Method::TransportPartialWave,
        diagnostics: diagnostics(series, 0.0),
    })
}

/// Two-term expansion of the sine sum, `2δ0 − (4/3) γ³ ζ(3)`.
pub fn sine_sum_expansion(delta0: f64, gamma: f64) -> Result<f64> {
    if !(gamma.abs() < 1.0) {
        return Err(Error::Regime(format!(
            "|γ| = {} ≥ 1; the two-term expansion is invalid",
            gamma.abs()
        )));
    }
    Ok(2.0 * delta0 - 4.0 / 3.0 * gamma.powi(3) * ZETA3)
}
