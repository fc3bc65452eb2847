//! Exact s-wave scattering by the Hulthén potential and its Born limit.

use num_complex::Complex64;

use crate::gas::ScatteringSetup;
use crate::special::{re_digamma_1p_iu, sum_series, SeriesResult, SumControl, EULER_MASCHERONI};
use crate::{Error, Result};

/// Argument of the n-th arctangent in the exact s-wave series,
/// `γ / (n [1 − γΛ/2k + (nΛ/2k)²])`.
///
/// With `charge_sign_term = false` the `−γΛ/2k` piece is dropped and the
/// argument becomes the n-th term of the first-order Born series.
pub fn hulthen_series_argument(
    n: usize,
    gamma: f64,
    k: f64,
    lam: f64,
    charge_sign_term: bool,
) -> f64 {
    let ratio = lam / (2.0 * k);
    let nf = n as f64;
    let barkas = if charge_sign_term { gamma * ratio } else { 0.0 };
    gamma / (nf * (1.0 - barkas + (nf * ratio).powi(2)))
}

/// n-th term of the exact s-wave series (principal-branch arctangent).
pub fn hulthen_series_term(n: usize, gamma: f64, k: f64, lam: f64) -> f64 {
    hulthen_series_argument(n, gamma, k, lam, true).atan()
}

fn check_regime(gamma: f64, k: f64, lam: f64) -> Result<()> {
    if !(k > 0.0) || !(lam > 0.0) {
        return Err(Error::Domain(format!(
            "need k > 0 and Λ > 0, got k={k}, Λ={lam}"
        )));
    }
    let ratio = lam / (2.0 * k);
    let denominator = 1.0 - gamma * ratio + ratio * ratio;
    if denominator <= 0.0 {
        return Err(Error::Regime(format!(
            "strong-coupling/low-velocity regime out of scope: 1 − γΛ/2k + (Λ/2k)² = {denominator:.6} ≤ 0 \
             (γ={gamma}, k={k}, Λ={lam})"
        )));
    }
    Ok(())
}

pub(crate) fn delta0_exact_params(
    gamma: f64,
    k: f64,
    lam: f64,
    ctrl: &SumControl,
) -> Result<SeriesResult> {
    check_regime(gamma, k, lam)?;
    if gamma == 0.0 {
        return Ok(SeriesResult {
            value: 0.0,
            terms_used: 0,
            tail_bound: 0.0,
            converged: true,
        });
    }
    sum_series(
        |n| hulthen_series_term(n, gamma, k, lam),
        &ctrl.with_decay_power(3.0),
    )
}

/// Exact s-wave phase shift of the Hulthén potential,
/// `δ₀ = Σ_{n≥1} arctan{γ / (n [1 − γΛ/2k + (nΛ/2k)²])}`.
///
/// Terms fall off like `n⁻³`, so the control's integral tail correction is
/// applied with decay power 3. Returns [`Error::Regime`] when the n = 1
/// denominator is not positive, where a bound-state offset could enter.
pub fn hulthen_delta0_exact(s: &ScatteringSetup, ctrl: &SumControl) -> Result<SeriesResult> {
    delta0_exact_params(s.gamma, s.k, s.lambda_hulthen, ctrl)
}

/// s-wave phase shift from the Jost-function product
/// `F₀(k) = Π_n [1 + i z1 / (n (k − inΛ/2))]` via `e^{2iδ₀} = F₀(k)/F₀(−k)`,
/// truncated after `n_factors` factors.
pub fn hulthen_jost_phase(s: &ScatteringSetup, n_factors: usize) -> Result<f64> {
    check_regime(s.gamma, s.k, s.lambda_hulthen)?;
    let (z1, k, lam) = (s.z1, s.k, s.lambda_hulthen);
    let factor = |n: f64, kk: f64| {
        let denom = Complex64::new(n * kk, -n * n * lam / 2.0);
        Complex64::new(1.0, 0.0) + Complex64::new(0.0, z1) / denom
    };
    let mut two_delta = 0.0;
    for n in 1..=n_factors {
        let nf = n as f64;
        // each ratio carries twice the n-th series term, inside (−π, π)
        two_delta += (factor(nf, k) / factor(nf, -k)).arg();
    }
    Ok(0.5 * two_delta)
}

pub(crate) fn born_delta0_hulthen_params(z1: f64, k: f64, lam: f64) -> f64 {
    (z1 / k) * (re_digamma_1p_iu(2.0 * k / lam) + EULER_MASCHERONI)
}

/// First-order Born s-wave shift of the Hulthén potential,
/// `(z1/k) [Re ψ(1 + 2ik/Λ) − ψ(1)]`. Exactly odd in `z1`.
pub fn born_delta0_hulthen(s: &ScatteringSetup) -> f64 {
    born_delta0_hulthen_params(s.z1, s.k, s.lambda_hulthen)
}
