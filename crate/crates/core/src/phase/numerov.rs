//! Numerov integration of the radial Schrödinger equation
//!
//! `u''(r) = [2V(r) + l(l+1)/r² − k²] u(r)`
//!
//! used as an independent route to the phase shifts. The regular solution
//! is started from its small-r series on a uniform mesh, integrated outward
//! and matched to Riccati–Bessel functions at two pairs of points a quarter
//! wavelength apart.
//!
//! Two corrections keep the result at the 1e-7 level:
//! - matching uses the discrete Numerov wave number `κ`, defined by
//!   `cos κh = (1 − 5h²k²/12)/(1 + h²k²/12)`, which removes the phase drift
//!   of the free wave across the mesh;
//! - the phase of a potential-free run on the same mesh is subtracted.
//!
//! The mod-π ambiguity is resolved by continuation in the charge from zero
//! on a coarse mesh.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{PotentialKind, PotentialSpec};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid {
    /// Mesh points per local wavelength `min(2π/k, 1/screening)`.
    pub points_per_wavelength: f64,
    /// Mesh density for the charge-continuation runs.
    pub continuation_points_per_wavelength: f64,
    /// `r_max` in screening lengths (plus room for the centrifugal barrier).
    pub screening_lengths: f64,
    /// Allowed disagreement between the two matching radii (radians).
    pub match_tolerance: f64,
    /// Largest charge increment in the continuation.
    pub max_charge_step: f64,
}

impl Default for RadialGrid {
    fn default() -> Self {
        Self {
            points_per_wavelength: 400.0,
            continuation_points_per_wavelength: 20.0,
            screening_lengths: 30.0,
            match_tolerance: 1e-6,
            max_charge_step: 0.25,
        }
    }
}

const MIN_POINTS_PER_WAVELENGTH: f64 = 10.0;
const RESCALE_ABOVE: f64 = 1e150;

struct Mesh {
    h: f64,
    /// `2 V(r_i)` for unit charge.
    potential: Vec<f64>,
    inv_r2: Vec<f64>,
    kappa: f64,
    /// Matching index pairs (inner, outer) at 0.8 r_max and r_max.
    matches: [(usize, usize); 2],
}

impl Mesh {
    fn new(p: &PotentialSpec, k: f64, r_max: f64, points_per_wavelength: f64) -> Result<Self> {
        if !(points_per_wavelength >= MIN_POINTS_PER_WAVELENGTH) {
            return Err(Error::Radial(format!(
                "grid too coarse: {points_per_wavelength} points per wavelength (minimum {MIN_POINTS_PER_WAVELENGTH})"
            )));
        }
        let wavelength = (2.0 * PI / k).min(1.0 / p.screening);
        let h = wavelength / points_per_wavelength;
        let n = (r_max / h).ceil() as usize + 1;
        let unit = p.with_charge(1.0);
        let mut potential = Vec::with_capacity(n);
        let mut inv_r2 = Vec::with_capacity(n);
        potential.push(0.0);
        inv_r2.push(0.0);
        for i in 1..n {
            let r = i as f64 * h;
            potential.push(2.0 * unit.potential_r(r));
            inv_r2.push(1.0 / (r * r));
        }
        let x = h * h * k * k;
        let kappa = ((1.0 - 5.0 * x / 12.0) / (1.0 + x / 12.0)).acos() / h;
        let quarter = ((0.5 * PI / k) / h).round().max(1.0) as usize;
        let outer = n - 1;
        let inner = ((0.8 * outer as f64).round() as usize).max(quarter + 2);
        Ok(Self {
            h,
            potential,
            inv_r2,
            kappa,
            matches: [(inner - quarter, inner), (outer - quarter, outer)],
        })
    }

    /// Principal-branch phase shifts at the two matching radii.
    fn shoot(&self, p: &PotentialSpec, z1: f64, l: usize, k: f64) -> [f64; 2] {
        let h = self.h;
        let h12 = h * h / 12.0;
        let lf = l as f64;
        let centrifugal = lf * (lf + 1.0);
        let k2 = k * k;
        let n = self.potential.len();

        // first mesh point where the centrifugal term is resolved
        let start = ((10.0 * centrifugal).sqrt().ceil() as usize).max(1);
        // u = r^{l+1} (1 + a r + b r²) near the origin
        let c0 = match p.kind {
            PotentialKind::Hulthen => z1 * p.screening,
            PotentialKind::Yukawa => 2.0 * z1 * p.screening,
            PotentialKind::Coulomb => 0.0,
        } - k2;
        let a = -z1 / (lf + 1.0);
        let b = (-2.0 * z1 * a + c0) / (4.0 * lf + 6.0);
        let series = |r: f64| 1.0 + a * r + b * r * r;
        let r0 = start as f64 * h;
        let r1 = r0 + h;

        let f = |i: usize| z1 * self.potential[i] + centrifugal * self.inv_r2[i] - k2;
        let mut u_prev = 1.0;
        let mut u = (r1 / r0).powf(lf + 1.0) * series(r1) / series(r0);
        let mut f_prev = f(start);
        let mut f_cur = f(start + 1);
        let mut rescales = 0i32;
        let mut recorded = [(0.0f64, 0i32); 4];
        let wanted = [
            self.matches[0].0,
            self.matches[0].1,
            self.matches[1].0,
            self.matches[1].1,
        ];

        for i in start + 1..n - 1 {
            let f_next = f(i + 1);
            let u_next = (2.0 * u * (1.0 + 5.0 * h12 * f_cur) - u_prev * (1.0 - h12 * f_prev))
                / (1.0 - h12 * f_next);
            u_prev = u;
            u = u_next;
            f_prev = f_cur;
            f_cur = f_next;
            if u.abs() > RESCALE_ABOVE {
                u /= RESCALE_ABOVE;
                u_prev /= RESCALE_ABOVE;
                rescales += 1;
            }
            for (slot, &idx) in wanted.iter().enumerate() {
                if idx == i + 1 {
                    recorded[slot] = (u, rescales);
                }
            }
        }

        let phase_at = |inner: usize, outer: usize, ui: (f64, i32), uo: (f64, i32)| {
            let scale = RESCALE_ABOVE.powi(ui.1 - uo.1);
            let (u1, u2) = (ui.0 * scale, uo.0);
            let (j1, n1) = riccati_bessel(l, self.kappa * inner as f64 * h);
            let (j2, n2) = riccati_bessel(l, self.kappa * outer as f64 * h);
            let num = u1 * j2 - u2 * j1;
            let den = u1 * n2 - u2 * n1;
            if den == 0.0 {
                0.5 * PI * num.signum()
            } else {
                (num / den).atan()
            }
        };
        [
            phase_at(
                self.matches[0].0,
                self.matches[0].1,
                recorded[0],
                recorded[1],
            ),
            phase_at(
                self.matches[1].0,
                self.matches[1].1,
                recorded[2],
                recorded[3],
            ),
        ]
    }
}

/// Riccati–Bessel functions `(x j_l(x), x y_l(x))` by upward recurrence,
/// with `x y_0(x) = −cos x`. Accurate for `x ≳ l`.
pub fn riccati_bessel(l: usize, x: f64) -> (f64, f64) {
    let (s, c) = x.sin_cos();
    let (mut j_prev, mut y_prev) = (s, -c);
    if l == 0 {
        return (j_prev, y_prev);
    }
    let (mut j, mut y) = (s / x - c, -c / x - s);
    for m in 1..l {
        let factor = (2 * m + 1) as f64 / x;
        let j_next = factor * j - j_prev;
        let y_next = factor * y - y_prev;
        j_prev = j;
        y_prev = y;
        j = j_next;
        y = y_next;
    }
    (j, y)
}

/// Wraps an angle difference into `(−π/2, π/2]`.
fn wrap_half_pi(x: f64) -> f64 {
    x - PI * (x / PI).round()
}

/// Representative of `raw + mπ` closest to `reference`.
fn align_branch(raw: f64, reference: f64) -> f64 {
    raw + PI * ((reference - raw) / PI).round()
}

/// Reusable radial solver for one potential shape and wave number.
///
/// The meshes extend far enough for every `l ≤ l_max`, so one solver can
/// produce a whole partial-wave series.
pub struct NumerovSolver {
    potential: PotentialSpec,
    k: f64,
    grid: RadialGrid,
    fine: Mesh,
    coarse: Mesh,
}

impl NumerovSolver {
    pub fn new(p: &PotentialSpec, k: f64, grid: &RadialGrid, l_max: usize) -> Result<Self> {
        if p.kind == PotentialKind::Coulomb {
            return Err(Error::Domain(
                "the radial solver needs a screened potential".into(),
            ));
        }
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::Domain(format!(
                "wave number must be positive, got {k}"
            )));
        }
        if !(grid.max_charge_step > 0.0) || !(grid.screening_lengths > 0.0) {
            return Err(Error::Domain(format!("invalid radial grid {grid:?}")));
        }
        // the outer matching points must sit outside the centrifugal barrier
        let r_max = grid.screening_lengths / p.screening + 1.5 * (l_max as f64 + 1.0) / k;
        Ok(Self {
            potential: *p,
            k,
            grid: *grid,
            fine: Mesh::new(p, k, r_max, grid.points_per_wavelength)?,
            coarse: Mesh::new(p, k, r_max, grid.continuation_points_per_wavelength)?,
        })
    }

    pub fn r_max(&self) -> f64 {
        (self.fine.potential.len() - 1) as f64 * self.fine.h
    }

    /// Phase shift `δ_l` for projectile charge `z1`, on the branch that
    /// vanishes continuously as `z1 → 0`.
    pub fn phase_shift(&self, z1: f64, l: usize) -> Result<f64> {
        if z1 == 0.0 {
            return Ok(0.0);
        }
        let p = &self.potential;
        let k = self.k;

        let coarse_free = self.coarse.shoot(p, 0.0, l, k)[0];
        let steps = (z1.abs() / self.grid.max_charge_step).ceil().max(1.0) as usize;
        let mut branch = 0.0;
        for j in 1..=steps {
            let zj = z1 * j as f64 / steps as f64;
            let raw = self.coarse.shoot(p, zj, l, k)[0] - coarse_free;
            branch = align_branch(raw, branch);
        }

        let fine_free = self.fine.shoot(p, 0.0, l, k);
        let fine = self.fine.shoot(p, z1, l, k);
        let inner = fine[0] - fine_free[0];
        let outer = fine[1] - fine_free[1];
        let mismatch = wrap_half_pi(inner - outer).abs();
        if mismatch > self.grid.match_tolerance {
            return Err(Error::Radial(format!(
                "matching radii disagree by {mismatch:.3e} rad for l={l} (r_max = {:.1} too small)",
                self.r_max()
            )));
        }
        Ok(align_branch(inner, branch))
    }
}

/// Phase shift `δ_l` of a screened potential from the radial equation.
pub fn numerov_delta_l(p: &PotentialSpec, l: usize, k: f64, grid: &RadialGrid) -> Result<f64> {
    NumerovSolver::new(p, k, grid, l)?.phase_shift(p.z1, l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gas::ElectronGas;
    use crate::phase::born_delta_l;

    #[test]
    fn riccati_low_orders() {
        let x: f64 = 3.7;
        let (j0, y0) = riccati_bessel(0, x);
        assert!((j0 - x.sin()).abs() < 1e-15 && (y0 + x.cos()).abs() < 1e-15);
        let (j2, y2) = riccati_bessel(2, x);
        let j2_closed = (3.0 / (x * x) - 1.0) * x.sin() - 3.0 * x.cos() / x;
        let y2_closed = -(3.0 / (x * x) - 1.0) * x.cos() - 3.0 * x.sin() / x;
        assert!((j2 - j2_closed).abs() < 1e-14);
        assert!((y2 - y2_closed).abs() < 1e-14);
        // Wronskian j_l y_l' - j_l' y_l = 1 checked by finite differences
        let l = 30;
        let x = 80.0;
        let d = 1e-5;
        let (jp, yp) = riccati_bessel(l, x + d);
        let (jm, ym) = riccati_bessel(l, x - d);
        let (j, y) = riccati_bessel(l, x);
        let w = j * (yp - ym) / (2.0 * d) - (jp - jm) / (2.0 * d) * y;
        assert!((w - 1.0).abs() < 1e-8, "{w}");
    }

    #[test]
    fn free_particle() {
        let p = PotentialSpec::hulthen(0.0, 0.17).unwrap();
        for l in [0, 1, 5, 20] {
            assert_eq!(
                numerov_delta_l(&p, l, 6.0, &RadialGrid::default()).unwrap(),
                0.0
            );
        }
    }

    #[test]
    fn weak_coupling_matches_born() {
        let gas = ElectronGas::from_rs(2.07).unwrap();
        let s = gas.setup(0.01, 6.0).unwrap();
        for p in [
            PotentialSpec::hulthen_for(&s),
            PotentialSpec::yukawa_for(&s),
        ] {
            for l in [0, 1, 4] {
                let num = numerov_delta_l(&p, l, s.k, &RadialGrid::default()).unwrap();
                let born = born_delta_l(&p, l, s.k, 1e-10).unwrap();
                assert!(
                    (num - born).abs() < 1e-5,
                    "{:?} l={l}: {num} vs {born}",
                    p.kind
                );
            }
        }
    }

    #[test]
    fn born_error_is_second_order() {
        let p = PotentialSpec::hulthen(1.0, 0.6).unwrap();
        let k = 2.0;
        let grid = RadialGrid::default();
        let dev = |z: f64| {
            let pz = p.with_charge(z);
            (numerov_delta_l(&pz, 0, k, &grid).unwrap() - born_delta_l(&pz, 0, k, 1e-11).unwrap())
                .abs()
        };
        let ratio = dev(0.2) / dev(0.1);
        assert!((ratio - 4.0).abs() < 0.4, "{ratio}");
    }

    #[test]
    fn coarse_grid_rejected() {
        let p = PotentialSpec::hulthen(1.0, 0.17).unwrap();
        let grid = RadialGrid {
            points_per_wavelength: 5.0,
            ..RadialGrid::default()
        };
        assert!(matches!(
            numerov_delta_l(&p, 0, 6.0, &grid),
            Err(Error::Radial(_))
        ));
    }

    #[test]
    fn short_box_rejected() {
        let p = PotentialSpec::hulthen(1.0, 0.17).unwrap();
        let grid = RadialGrid {
            screening_lengths: 2.0,
            ..RadialGrid::default()
        };
        assert!(matches!(
            numerov_delta_l(&p, 0, 6.0, &grid),
            Err(Error::Radial(_))
        ));
    }

    #[test]
    fn branch_tracking_beyond_half_pi() {
        // slow, strongly attractive but bound-state free: δ₀ above π/2
        let p = PotentialSpec::hulthen(1.0, 1.5).unwrap();
        let k = 0.5;
        let d = numerov_delta_l(&p, 0, k, &RadialGrid::default()).unwrap();
        let exact =
            super::super::hulthen::delta0_exact_params(1.0 / k, k, 1.5, &Default::default())
                .unwrap()
                .value;
        assert!((d - exact).abs() < 1e-5, "{d} vs {exact}");
    }

    #[test]
    fn s_wave_matches_exact_hulthen() {
        let gas = ElectronGas::from_rs(2.07).unwrap();
        for z1 in [1.0, -1.0] {
            let s = gas.setup(z1, 6.0).unwrap();
            let p = PotentialSpec::hulthen_for(&s);
            let num = numerov_delta_l(&p, 0, s.k, &RadialGrid::default()).unwrap();
            let exact = super::super::hulthen_delta0_exact(&s, &Default::default())
                .unwrap()
                .value;
            assert!((num - exact).abs() < 1e-6, "z1={z1}: {num} vs {exact}");
        }
    }
}
