//! Homogeneous electron gas and projectile kinematics.
//!
//! Everything is in Hartree atomic units (e = ħ = m = a₀ = 1), so the
//! electron wave number in the projectile frame equals the projectile
//! velocity and the Sommerfeld parameter is simply `z1 / v`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Ratio between the Hulthén and Yukawa screening parameters that makes the
/// two first-order Born s-wave phase shifts coincide at high velocity.
///
/// This is the literal constant 1.781, not `exp(Euler–Mascheroni)`
/// (1.78107...); the two agree to four digits and the literal keeps
/// 0.89 = 1.781 / 2 reproducible.
pub const HULTHEN_SCREENING_RATIO: f64 = 1.781;

/// Zero-temperature homogeneous electron gas characterised by `r_s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ElectronGas {
    /// Wigner–Seitz density parameter in Bohr radii.
    pub r_s: f64,
    /// Number density, `3 / (4π r_s³)`.
    pub n0: f64,
    /// Classical plasma frequency, `√(4π n0) = √(3 / r_s³)`.
    pub omega_p: f64,
    /// Fermi wave number, `(9π/4)^{1/3} / r_s`.
    pub k_f: f64,
    /// Fermi velocity (equal to `k_f` in atomic units).
    pub v_f: f64,
}

impl ElectronGas {
    pub fn from_rs(r_s: f64) -> Result<Self> {
        if !r_s.is_finite() || r_s <= 0.0 {
            return Err(Error::Domain(format!(
                "density parameter r_s must be positive and finite, got {r_s}"
            )));
        }
        let n0 = 3.0 / (4.0 * PI * r_s.powi(3));
        let omega_p = (4.0 * PI * n0).sqrt();
        let k_f = (9.0 * PI / 4.0).cbrt() / r_s;
        Ok(Self {
            r_s,
            n0,
            omega_p,
            k_f,
            v_f: k_f,
        })
    }

    /// Mean squared velocity of the ideal (step-function) Fermi gas,
    /// `(3/5) v_F²`. The interacting gas has a larger value.
    pub fn ideal_mean_sq_velocity(&self) -> f64 {
        0.6 * self.v_f * self.v_f
    }

    /// Scattering kinematics for a projectile of charge `z1` moving at `v`.
    pub fn setup(&self, z1: f64, v: f64) -> Result<ScatteringSetup> {
        ScatteringSetup::new(self, z1, v)
    }
}

/// Two-body kinematics of an electron scattering off the projectile, with
/// the dynamic screening lengths used for the Yukawa and Hulthén models.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScatteringSetup {
    /// Projectile charge; positive is attractive for electrons.
    pub z1: f64,
    /// Projectile velocity.
    pub v: f64,
    /// Electron wave number in the projectile frame (`= v`).
    pub k: f64,
    /// Sommerfeld parameter `z1 / v`.
    pub gamma: f64,
    /// Yukawa screening parameter `ω_p / v`.
    pub lambda_yukawa: f64,
    /// Hulthén screening parameter `1.781 · ω_p / v`.
    pub lambda_hulthen: f64,
}

impl ScatteringSetup {
    /// `z1` may be any finite real, including zero and non-integers.
    pub fn new(gas: &ElectronGas, z1: f64, v: f64) -> Result<Self> {
        if !v.is_finite() || v <= 0.0 {
            return Err(Error::Domain(format!(
                "projectile velocity must be positive and finite, got {v}"
            )));
        }
        if !z1.is_finite() {
            return Err(Error::Domain(format!(
                "projectile charge must be finite, got {z1}"
            )));
        }
        let lambda_yukawa = gas.omega_p / v;
        Ok(Self {
            z1,
            v,
            k: v,
            gamma: z1 / v,
            lambda_yukawa,
            lambda_hulthen: HULTHEN_SCREENING_RATIO * lambda_yukawa,
        })
    }

    /// `2k / Λ`, the argument of the digamma closed form.
    pub fn digamma_argument(&self) -> f64 {
        2.0 * self.k / self.lambda_hulthen
    }

    /// Same kinematics with the projectile charge replaced.
    pub fn with_charge(&self, z1: f64) -> Self {
        Self {
            z1,
            gamma: z1 / self.v,
            ..*self
        }
    }
}

/// Relative electron–projectile velocity `v [1 + <v_e²> / (3 v²)]`.
///
/// Passing zero for the mean squared electron velocity gives the
/// high-velocity limit `v_r = v` used by the rest of the crate.
pub fn relative_velocity(v: f64, mean_sq_electron_velocity: f64) -> Result<f64> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::Domain(format!("velocity must be positive, got {v}")));
    }
    if !(mean_sq_electron_velocity >= 0.0) || !mean_sq_electron_velocity.is_finite() {
        return Err(Error::Domain(format!(
            "mean squared electron velocity must be non-negative, got {mean_sq_electron_velocity}"
        )));
    }
    Ok(v * (1.0 + mean_sq_electron_velocity / (3.0 * v * v)))
}
