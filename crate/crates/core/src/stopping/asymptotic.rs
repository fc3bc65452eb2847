use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::gas::{ElectronGas, ScatteringSetup, HULTHEN_SCREENING_RATIO};
use crate::phase::PotentialSpec;
use crate::special::{integrate, ZETA3};
use crate::{Error, Result};

pub const LINDHARD_BETA_PI: f64 = PI;
pub const LINDHARD_BETA_3PI_2: f64 = 1.5 * PI;

/// `dE/dz = prefactor · (L0 + z1 L1 + z1² L2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StoppingDecomposition {
    /// `ω_p² (z1/v)²`.
    pub prefactor: f64,
    /// Bethe term.
    pub l0: f64,
    /// Barkas term per unit charge.
    pub l1: f64,
    /// Bloch term per unit charge squared.
    pub l2: f64,
    /// `z1 · L1`.
    pub l1_weighted: f64,
    /// `z1² · L2`.
    pub l2_weighted: f64,
    pub total: f64,
}

impl StoppingDecomposition {
    /// Relative splitting between charges `±|z1|`: `2|z1 L1| / (L0 + z1² L2)`.
    pub fn barkas_splitting(&self) -> f64 {
        2.0 * self.l1_weighted.abs() / (self.l0 + self.l2_weighted)
    }
}

/// Bethe–Barkas–Bloch decomposition with Hulthén screening.
///
/// `L0 = ½ ln(1 + (2kΓ/Λ)²)`, `L1 = Λ L0 / (2k²)`, `L2 = −ζ(3)/k²`.
pub fn asymptotic_decomposition(
    gas: &ElectronGas,
    s: &ScatteringSetup,
) -> Result<StoppingDecomposition> {
    if 2.0 * s.v * s.v <= gas.omega_p {
        return Err(Error::Regime(format!(
            "2v² = {:.4} does not exceed ω_p = {:.4}; the Bethe logarithm is not positive",
            2.0 * s.v * s.v,
            gas.omega_p
        )));
    }
    if s.gamma.abs() >= 1.0 {
        return Err(Error::Regime(format!(
            "|γ| = {:.4} ≥ 1; the expansion in γ is invalid",
            s.gamma.abs()
        )));
    }
    let k = s.k;
    let lam = s.lambda_hulthen;
    let ratio = 2.0 * k * HULTHEN_SCREENING_RATIO / lam;
    let l0 = 0.5 * (ratio * ratio).ln_1p();
    let l1 = lam / (2.0 * k * k) * l0;
    let l2 = -ZETA3 / (k * k);
    let prefactor = gas.omega_p * gas.omega_p * s.gamma * s.gamma;
    let l1_weighted = s.z1 * l1;
    let l2_weighted = s.z1 * s.z1 * l2;
    Ok(StoppingDecomposition {
        prefactor,
        l0,
        l1,
        l2,
        l1_weighted,
        l2_weighted,
        total: prefactor * (l0 + l1_weighted + l2_weighted),
    })
}

/// Lindhard's Barkas term `β (ω_p/v³) ln(2v²/ω_p)`.
pub fn lindhard_barkas(gas: &ElectronGas, s: &ScatteringSetup, beta: f64) -> f64 {
    let v = s.v;
    beta * gas.omega_p / (v * v * v) * (2.0 * v * v / gas.omega_p).ln()
}

/// Yukawa Born integrals over `q ∈ [0, 2k]`, divided by `(4π z1)²`.
///
/// `lhs = ∫ q³ V(q)² dq`, `rhs = ∫ q³ V_C(q) V(q) dq` with the bare
/// Coulomb transform `V_C(q) = −4π z1/q²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BornInequality {
    pub lhs: f64,
    pub rhs: f64,
    pub lhs_closed: f64,
    pub rhs_closed: f64,
}

impl BornInequality {
    pub fn gap(&self) -> f64 {
        self.rhs - self.lhs
    }

    pub fn gap_closed(&self) -> f64 {
        self.rhs_closed - self.lhs_closed
    }
}

pub fn born_integral_inequality(z1: f64, k: f64, lam: f64) -> Result<BornInequality> {
    if !(k > 0.0) || !(lam > 0.0) {
        return Err(Error::Domain(format!(
            "k and λ must be positive, got k = {k}, λ = {lam}"
        )));
    }
    if z1 == 0.0 || !z1.is_finite() {
        return Err(Error::Domain(format!(
            "the integrals are normalized by z1, got {z1}"
        )));
    }
    let p = PotentialSpec::yukawa(z1, lam)?;
    let norm = (4.0 * PI * z1).powi(2);
    let coulomb = |q: f64| -4.0 * PI * z1 / (q * q);
    // the integrands peak near q ≈ λ; splitting there helps the adaptive rule
    let split = lam.min(2.0 * k);
    let both = |f: &dyn Fn(f64) -> f64| -> Result<f64> {
        Ok(integrate(f, 0.0, split, 1e-11)? + integrate(f, split, 2.0 * k, 1e-11)?)
    };
    let lhs = both(&|q: f64| q.powi(3) * p.potential_q(q).powi(2) / norm)?;
    let rhs = both(&|q: f64| {
        if q == 0.0 {
            0.0
        } else {
            q.powi(3) * coulomb(q) * p.potential_q(q) / norm
        }
    })?;
    let x = 4.0 * k * k / (lam * lam);
    let log = x.ln_1p();
    Ok(BornInequality {
        lhs,
        rhs,
        lhs_closed: 0.5 * (log - x / (1.0 + x)),
        rhs_closed: 0.5 * log,
    })
}
