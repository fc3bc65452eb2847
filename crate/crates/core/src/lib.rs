//! Stopping power of a degenerate electron gas for fast charged projectiles,
//! computed from scattering phase shifts.
//!
//! The crate is organised bottom-up:
//!
//! - [`gas`]: electron-gas parameters and projectile kinematics (Hartree
//!   atomic units throughout).
//! - [`special`]: digamma at `1 + iu`, ζ(3), Legendre polynomials, adaptive
//!   quadrature and tail-corrected series summation.
//! - [`phase`]: Coulomb phase differences, the exact Hulthén s-wave phase
//!   shift (series and Jost-product routes), first-order Born phase shifts
//!   and a Numerov radial-equation solver used as an independent check.
//! - [`stopping`]: the sine-sum and transport partial-wave stopping forms,
//!   the Bethe/Barkas/Bloch asymptotic decomposition, Lindhard's Barkas
//!   estimate, Born-integral diagnostics and the exact two-dimensional result.
//! - [`cli`]: velocity sweeps, curve data, diagnostics reports and CSV/JSON
//!   emission used by the `phase-stopping` binary.
//!
//! ```
//! use phase_stopping::{gas::ElectronGas, stopping::asymptotic_decomposition};
//!
//! let gas = ElectronGas::from_rs(2.07).unwrap();
//! let proton = gas.setup(1.0, 6.0).unwrap();
//! let d = asymptotic_decomposition(&gas, &proton).unwrap();
//! assert!((d.total - 0.04507).abs() < 1e-4);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod gas;
pub mod phase;
pub mod special;
pub mod stopping;

pub use error::{Error, Result};
