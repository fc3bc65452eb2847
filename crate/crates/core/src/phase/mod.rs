//! Scattering phase shifts for the screened projectile potential.
//!
//! Sign convention: `z1 > 0` is attractive for electrons, so every
//! potential is `V = -z1 · (positive shape)` and positive phase shifts
//! belong to attractive projectiles.

mod born;
mod hulthen;
mod numerov;

pub use born::{born_delta0_yukawa, born_delta_l, born_delta_series};
pub use hulthen::{
    born_delta0_hulthen, hulthen_delta0_exact, hulthen_jost_phase, hulthen_series_argument,
    hulthen_series_term,
};
pub use numerov::{numerov_delta_l, riccati_bessel, NumerovSolver, RadialGrid};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::gas::ScatteringSetup;
use crate::special::SumControl;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialKind {
    Coulomb,
    Yukawa,
    Hulthen,
}

/// Projectile potential seen by a gas electron.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    pub kind: PotentialKind,
    pub z1: f64,
    /// λ for Yukawa, Λ for Hulthén, zero for bare Coulomb.
    pub screening: f64,
}

impl PotentialSpec {
    pub fn coulomb(z1: f64) -> Self {
        Self {
            kind: PotentialKind::Coulomb,
            z1,
            screening: 0.0,
        }
    }

    pub fn yukawa(z1: f64, lambda: f64) -> Result<Self> {
        Self::screened(PotentialKind::Yukawa, z1, lambda)
    }

    pub fn hulthen(z1: f64, lambda: f64) -> Result<Self> {
        Self::screened(PotentialKind::Hulthen, z1, lambda)
    }

    fn screened(kind: PotentialKind, z1: f64, screening: f64) -> Result<Self> {
        if !(screening > 0.0) || !screening.is_finite() {
            return Err(Error::Domain(format!(
                "{kind:?} potential needs a positive screening parameter, got {screening}"
            )));
        }
        Ok(Self {
            kind,
            z1,
            screening,
        })
    }

    /// Hulthén potential with the dynamic screening `Λ = 1.781 ω_p / v`.
    pub fn hulthen_for(s: &ScatteringSetup) -> Self {
        Self {
            kind: PotentialKind::Hulthen,
            z1: s.z1,
            screening: s.lambda_hulthen,
        }
    }

    /// Yukawa potential with `λ = ω_p / v`.
    pub fn yukawa_for(s: &ScatteringSetup) -> Self {
        Self {
            kind: PotentialKind::Yukawa,
            z1: s.z1,
            screening: s.lambda_yukawa,
        }
    }

    pub fn with_charge(&self, z1: f64) -> Self {
        Self { z1, ..*self }
    }

    /// `V(r)` in hartree.
    pub fn potential_r(&self, r: f64) -> f64 {
        -self.z1 * self.shape_r(r)
    }

    /// Positive radial shape with unit charge.
    pub(crate) fn shape_r(&self, r: f64) -> f64 {
        match self.kind {
            PotentialKind::Coulomb => 1.0 / r,
            PotentialKind::Yukawa => (-self.screening * r).exp() / r,
            PotentialKind::Hulthen => self.screening / (self.screening * r).exp_m1(),
        }
    }

    /// Hulthén potential from its exponential expansion
    /// `-z1 Λ Σ_{n=1}^{terms} exp(-nΛr)`.
    pub fn hulthen_r_series(&self, r: f64, terms: usize) -> f64 {
        let x = (-self.screening * r).exp();
        let mut acc = 0.0;
        let mut p = 1.0;
        for _ in 0..terms {
            p *= x;
            acc += p;
        }
        -self.z1 * self.screening * acc
    }

    /// Fourier transform `V(q) = ∫ d³r e^{iq·r} V(r)`.
    ///
    /// For Hulthén this is the series `-8π z1 Λ² Σ n / [q² + (nΛ)²]²`,
    /// summed until the remainder is below `1e-12` of the leading term.
    pub fn potential_q(&self, q: f64) -> f64 {
        match self.kind {
            PotentialKind::Coulomb => -4.0 * PI * self.z1 / (q * q),
            PotentialKind::Yukawa => {
                -4.0 * PI * self.z1 / (q * q + self.screening * self.screening)
            }
            PotentialKind::Hulthen => {
                -8.0 * PI
                    * self.z1
                    * self.screening
                    * self.screening
                    * hulthen_q_sum(q, self.screening)
            }
        }
    }
}

const HULTHEN_Q_REL_TOL: f64 = 1e-12;
const HULTHEN_Q_MAX_TERMS: usize = 100_000;

/// `Σ_{n≥1} n / (q² + n²Λ²)²` with a midpoint-integral remainder and its
/// first derivative correction.
pub(crate) fn hulthen_q_sum(q: f64, lam: f64) -> f64 {
    let q2 = q * q;
    let l2 = lam * lam;
    let term = |x: f64| x / (q2 + l2 * x * x).powi(2);
    // the summand peaks near x = q/(√3 Λ); the power-law tail starts well past it
    let peak = (q / lam).ceil() as usize;
    let mut sum = 0.0;
    let mut largest = 0.0f64;
    let mut n = 0usize;
    loop {
        n += 1;
        let nf = n as f64;
        let t = term(nf);
        sum += t;
        largest = largest.max(t);
        let past_peak = n >= 4 * peak + 8;
        // next Euler–Maclaurin correction for a ~C/x³ tail is ≈ 0.073 t/n³
        if (past_peak && 0.1 * t / (nf * nf * nf) < HULTHEN_Q_REL_TOL * largest)
            || n >= HULTHEN_Q_MAX_TERMS
        {
            let m = nf + 0.5;
            let s = q2 + l2 * m * m;
            let integral = 1.0 / (2.0 * l2 * s);
            let slope = (q2 - 3.0 * l2 * m * m) / (s * s * s);
            return sum + integral + slope / 24.0;
        }
    }
}

/// Where the phase shifts of a [`PhaseShiftSeries`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesSource {
    /// Exact Hulthén s-wave shift with closed-form Born shifts for l ≥ 1.
    ExactHulthenL0,
    /// Born shifts from closed forms for every l.
    BornClosed,
    /// Born shifts from q-space quadrature for every l.
    BornQuadrature,
    /// Numerov integration of the radial equation for every l.
    Numerov,
    /// Values supplied by the caller.
    External,
}

/// Model for the phase differences beyond the last stored `l`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TailModel {
    /// Nothing beyond `l_max`.
    None,
    /// Differences `δ_l − δ_{l+1} → γ/(l+1)` as for the bare Coulomb field,
    /// with `δ_l → 0` as `l → ∞`.
    CoulombLimit { gamma: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseShiftSeries {
    pub k: f64,
    /// `δ_0 ..= δ_{l_max}` in radians.
    pub values: Vec<f64>,
    pub source: SeriesSource,
    pub tail_model: TailModel,
}

impl PhaseShiftSeries {
    pub fn new(
        k: f64,
        values: Vec<f64>,
        source: SeriesSource,
        tail_model: TailModel,
    ) -> Result<Self> {
        if values.iter().any(|d| !d.is_finite()) {
            return Err(Error::Series("phase shifts must be finite".into()));
        }
        if !(k > 0.0) {
            return Err(Error::Series(format!(
                "wave number must be positive, got {k}"
            )));
        }
        Ok(Self {
            k,
            values,
            source,
            tail_model,
        })
    }

    /// Series whose consecutive differences are the Coulomb values
    /// `arctan(γ/(l+1))`, anchored at `δ_0 = 0`.
    pub fn coulomb_differences(k: f64, gamma: f64, l_max: usize) -> Result<Self> {
        let mut values = Vec::with_capacity(l_max + 1);
        let mut acc = 0.0;
        values.push(acc);
        for l in 0..l_max {
            acc -= coulomb_diff(gamma, l);
            values.push(acc);
        }
        Self::new(k, values, SeriesSource::External, TailModel::None)
    }

    pub fn l_max(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    /// `δ_l − δ_{l+1}` for `l = 0 .. l_max-1`.
    pub fn differences(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.windows(2).map(|w| w[0] - w[1])
    }

    /// True when the last stored shift is below `tol`.
    pub fn is_truncation_converged(&self, tol: f64) -> bool {
        self.values.last().is_some_and(|d| d.abs() < tol)
    }
}

/// Coulomb phase difference `σ_l − σ_{l+1} = arctan(γ/(l+1))`.
pub fn coulomb_diff(gamma: f64, l: usize) -> f64 {
    (gamma / (l as f64 + 1.0)).atan()
}

/// Truncation target for `|δ_{l_max}|`.
pub const DEFAULT_TRUNCATION_TOL: f64 = 1e-8;

/// Partial-wave cutoff large enough that `|δ_{l_max}| < tol` for a screened
/// potential: shifts fall off like `exp(-l·screening/k)` once `l ≫ k/screening`.
pub fn default_l_max(k: f64, screening: f64, gamma: f64, tol: f64) -> usize {
    let decades = (gamma.abs() / tol).max(1.0).ln();
    let estimate = (1.25 * k / screening * decades).ceil();
    (estimate as usize).clamp(40, 20_000)
}

/// Assembles `δ_0 ..= δ_{l_max}` for `p` at wave number `k`.
///
/// `ExactHulthenL0` uses the exact s-wave series (requires a Hulthén
/// potential) and closed-form Born shifts for `l ≥ 1`. The Coulomb-limit
/// tail model is attached in every case.
pub fn build_series(
    p: &PotentialSpec,
    k: f64,
    l_max: usize,
    source: SeriesSource,
) -> Result<PhaseShiftSeries> {
    build_series_with(
        p,
        k,
        l_max,
        source,
        &RadialGrid::default(),
        &SumControl::default(),
    )
}

pub fn build_series_with(
    p: &PotentialSpec,
    k: f64,
    l_max: usize,
    source: SeriesSource,
    grid: &RadialGrid,
    ctrl: &SumControl,
) -> Result<PhaseShiftSeries> {
    if l_max < 1 {
        return Err(Error::Series("a series needs l_max ≥ 1".into()));
    }
    if !(k > 0.0) {
        return Err(Error::Domain(format!(
            "wave number must be positive, got {k}"
        )));
    }
    let tail = TailModel::CoulombLimit { gamma: p.z1 / k };
    if p.z1 == 0.0 {
        return PhaseShiftSeries::new(k, vec![0.0; l_max + 1], source, tail);
    }
    const BORN_TOL: f64 = 1e-9;
    let values = match source {
        SeriesSource::Numerov => {
            let solver = NumerovSolver::new(p, k, grid, l_max)?;
            (0..=l_max)
                .into_par_iter()
                .map(|l| solver.phase_shift(p.z1, l))
                .collect::<Result<Vec<_>>>()?
        }
        SeriesSource::ExactHulthenL0 => {
            if p.kind != PotentialKind::Hulthen {
                return Err(Error::Domain(
                    "the exact s-wave shift exists only for the Hulthén potential".into(),
                ));
            }
            let mut v = born_delta_series(p, k, l_max)?;
            v[0] = hulthen::delta0_exact_params(p.z1 / k, k, p.screening, ctrl)?.into_result()?;
            v
        }
        SeriesSource::BornClosed => born_delta_series(p, k, l_max)?,
        SeriesSource::BornQuadrature => (0..=l_max)
            .into_par_iter()
            .map(|l| born_delta_l(p, l, k, BORN_TOL))
            .collect::<Result<Vec<_>>>()?,
        SeriesSource::External => {
            return Err(Error::Series(
                "external series are built with PhaseShiftSeries::new".into(),
            ))
        }
    };
    PhaseShiftSeries::new(k, values, source, tail)
}
