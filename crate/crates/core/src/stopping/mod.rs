//! Stopping power of the electron gas.
//!
//! All values are forces in Hartree atomic units (energy loss per Bohr).
//!
//! - [`stopping_new_form`]: sine sum over consecutive phase differences.
//! - [`sine_sum_expansion`]: its two-term expansion in the leading shift and a
//!   Coulomb cubic correction.
//! - [`stopping_transport_form`]: the transport cross section.
//! - [`asymptotic_decomposition`]: Bethe, Barkas and Bloch terms.
//! - [`lindhard_barkas`]: Lindhard's Barkas estimate.
//! - [`born_integral_inequality`]: the Yukawa Born integrals behind the
//!   gap between transport and sine-sum forms.
//! - [`stopping_2d_exact`], [`stopping_2d_partial_wave`]: planar Coulomb
//!   problem.

mod asymptotic;
mod partial_wave;
mod planar;

pub use asymptotic::{
    asymptotic_decomposition, born_integral_inequality, lindhard_barkas, BornInequality,
    StoppingDecomposition, LINDHARD_BETA_3PI_2, LINDHARD_BETA_PI,
};
pub use partial_wave::{
    coulomb_identity_check, sine_sum, sine_sum_expansion, stopping_new_form,
    stopping_transport_form, transport_sum, truncated_coulomb_sum,
};
pub use planar::{
    planar_identity_check, planar_partial_wave_sum_closed, stopping_2d_exact,
    stopping_2d_partial_wave,
};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Asymptotic,
    SemiAnalytic,
    NumericPartialWave,
    TransportPartialWave,
    TwoDimensional,
}

/// How a partial-wave stopping value was truncated.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Diagnostics {
    /// Highest stored partial wave.
    pub l_max: Option<usize>,
    /// `|δ_{l_max}|`.
    pub last_shift: Option<f64>,
    /// Contribution of the tail model beyond `l_max`.
    pub tail: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StoppingResult {
    pub value: f64,
    pub method: Method,
    pub diagnostics: Diagnostics,
}
