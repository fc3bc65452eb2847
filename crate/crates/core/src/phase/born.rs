//! First-order Born phase shifts.

use std::f64::consts::PI;

use super::{PotentialKind, PotentialSpec};
use crate::special::{integrate_with, legendre_q_all, legendre_unchecked, QuadControl};
use crate::{Error, Result};

/// Born s-wave shift of the Yukawa potential `-z1 e^{-λr}/r`,
/// `(z1/k) (1/2) ln(1 + 4k²/λ²)`.
pub fn born_delta0_yukawa(z1: f64, k: f64, lam: f64) -> Result<f64> {
    if !(k > 0.0) || !(lam > 0.0) {
        return Err(Error::Domain(format!(
            "need k > 0 and λ > 0, got k={k}, λ={lam}"
        )));
    }
    let ratio = 2.0 * k / lam;
    Ok((z1 / k) * 0.5 * (ratio * ratio).ln_1p())
}

/// First-order Born phase shift from the momentum-space integral
///
/// `δ_l = −(1/4π)(1/k) ∫₀^{2k} q V(q) P_l(1 − q²/2k²) dq`.
pub fn born_delta_l(p: &PotentialSpec, l: usize, k: f64, rel_tol: f64) -> Result<f64> {
    if p.kind == PotentialKind::Coulomb {
        return Err(Error::Domain(
            "Born phase shifts diverge for the bare Coulomb potential".into(),
        ));
    }
    if !(k > 0.0) {
        return Err(Error::Domain(format!(
            "wave number must be positive, got {k}"
        )));
    }
    if p.z1 == 0.0 {
        return Ok(0.0);
    }
    let two_k2 = 2.0 * k * k;
    let integrand = |q: f64| {
        let x = (1.0 - q * q / two_k2).clamp(-1.0, 1.0);
        q * p.potential_q(q) * legendre_unchecked(l, x)
    };
    // panels cover the ~l oscillations of P_l before adaptivity kicks in
    let panels = (l / 4).max(1);
    let width = 2.0 * k / panels as f64;
    let ctrl = QuadControl {
        rel_tol,
        // far-tail waves cancel to many digits; 1e-13 absolute in δ is the floor
        abs_tol: 1e-13 * p.z1.abs() * 4.0 * PI * k / panels as f64,
        max_subdivisions: 5000,
    };
    let mut total = 0.0;
    for i in 0..panels {
        let a = i as f64 * width;
        let b = if i + 1 == panels {
            2.0 * k
        } else {
            (i + 1) as f64 * width
        };
        total += integrate_with(integrand, a, b, &ctrl)?;
    }
    Ok(-total / (4.0 * PI * k))
}

/// First-order Born shifts `δ_0 ..= δ_{l_max}` from closed forms in the
/// Legendre functions of the second kind, with `ξ(a) = 1 + a²/2k²`:
///
/// - Yukawa: `δ_l = (z1/k) Q_l(ξ(λ))`;
/// - Hulthén: `δ_l = −(z1Λ²/k³) Σ_n n Q_l'(ξ(nΛ))` for `l ≥ 1`, and the
///   digamma form for `l = 0`.
pub fn born_delta_series(p: &PotentialSpec, k: f64, l_max: usize) -> Result<Vec<f64>> {
    if !(k > 0.0) {
        return Err(Error::Domain(format!(
            "wave number must be positive, got {k}"
        )));
    }
    let eps = |a: f64| a * a / (2.0 * k * k);
    match p.kind {
        PotentialKind::Coulomb => Err(Error::Domain(
            "Born phase shifts diverge for the bare Coulomb potential".into(),
        )),
        PotentialKind::Yukawa => {
            let q = legendre_q_all(eps(p.screening), l_max)?;
            Ok(q.into_iter().map(|x| p.z1 / k * x).collect())
        }
        PotentialKind::Hulthen => {
            let lam = p.screening;
            let mut sums = vec![0.0; l_max + 1];
            let mut last = vec![0.0; l_max + 1];
            let n_min = (4.0 * k / lam).ceil() as usize + 8;
            let mut n = 0usize;
            loop {
                n += 1;
                let e = eps(n as f64 * lam);
                let xi = 1.0 + e;
                let q = legendre_q_all(e, l_max)?;
                let denom = e * (2.0 + e);
                for l in 1..=l_max {
                    let t = n as f64 * l as f64 * (xi * q[l] - q[l - 1]) / denom;
                    sums[l] += t;
                    last[l] = t;
                }
                if l_max == 0 || (n >= n_min && last[1].abs() < 1e-14 * sums[1].abs()) {
                    break;
                }
            }
            // terms fall off like n^{-(2l+3)}: midpoint integral tail
            let nf = n as f64;
            for l in 1..=l_max {
                let power = 2.0 * l as f64 + 3.0;
                sums[l] += last[l] * nf * (nf / (nf + 0.5)).powf(power - 1.0) / (power - 1.0);
            }
            let scale = -p.z1 * lam * lam / (k * k * k);
            let mut out: Vec<f64> = sums.into_iter().map(|s| scale * s).collect();
            out[0] = super::hulthen::born_delta0_hulthen_params(p.z1, k, lam);
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gas::ElectronGas;
    use crate::phase::born_delta0_hulthen;

    #[test]
    fn yukawa_closed_form() {
        let v = born_delta0_yukawa(1.0, 6.0, 0.096_933).unwrap();
        let expected = (1.0 / 6.0) * 0.5 * (144.0f64 / (0.096_933f64 * 0.096_933)).ln_1p();
        assert!((v - expected).abs() < 1e-15);
        assert!((v - 0.803_10).abs() < 5e-5);
        assert_eq!(born_delta0_yukawa(0.0, 6.0, 0.1).unwrap(), 0.0);
        assert!(born_delta0_yukawa(1.0, 0.0, 0.1).is_err());
    }

    #[test]
    fn yukawa_r_space_quadrature() {
        // δ₀ = −2k ∫ r² V(r) j₀²(kr) dr = (2 z1/k) ∫ e^{−λr} sin²(kr)/r dr
        let (k, lam) = (6.0f64, 0.096_933f64);
        let f = |r: f64| {
            if r == 0.0 {
                0.0
            } else {
                (-lam * r).exp() * (k * r).sin().powi(2) / r
            }
        };
        let r_max = 40.0 / lam;
        let n = 4000;
        let h = r_max / n as f64;
        let mut acc = 0.0;
        for i in 0..n {
            acc += crate::special::integrate(f, i as f64 * h, (i + 1) as f64 * h, 1e-12).unwrap();
        }
        let from_r = 2.0 / k * acc;
        let closed = born_delta0_yukawa(1.0, k, lam).unwrap();
        assert!((from_r - closed).abs() < 1e-8, "{from_r} vs {closed}");
    }

    #[test]
    fn quadrature_reproduces_s_wave_closed_forms() {
        let gas = ElectronGas::from_rs(2.07).unwrap();
        let s = gas.setup(1.0, 6.0).unwrap();
        let y = PotentialSpec::yukawa_for(&s);
        let q = born_delta_l(&y, 0, s.k, 1e-10).unwrap();
        let c = born_delta0_yukawa(1.0, s.k, s.lambda_yukawa).unwrap();
        assert!((q - c).abs() < 1e-9 * c);

        let h = PotentialSpec::hulthen_for(&s);
        let q = born_delta_l(&h, 0, s.k, 1e-10).unwrap();
        let c = born_delta0_hulthen(&s);
        assert!((q - c).abs() < 1e-9 * c, "{q} vs {c}");
    }

    #[test]
    fn yukawa_scaling_fixes_hulthen_screening() {
        // equal Born s-wave shifts when Λ = 1.781 λ at 2k/λ > 100
        for (k, lam) in [(6.0, 0.096_933), (8.0, 0.07), (3.0, 0.02)] {
            let yuk = born_delta0_yukawa(1.0, k, lam).unwrap();
            let hul = crate::phase::hulthen::born_delta0_hulthen_params(1.0, k, 1.781 * lam);
            assert!((yuk - hul).abs() < 1e-3, "k={k}: {yuk} vs {hul}");
        }
    }

    #[test]
    fn screened_differences_approach_coulomb_from_below() {
        let y = PotentialSpec::yukawa(1.0, 0.097).unwrap();
        let k = 6.0;
        let d0 = born_delta_l(&y, 0, k, 1e-10).unwrap();
        let d1 = born_delta_l(&y, 1, k, 1e-10).unwrap();
        let gamma = 1.0 / k;
        let diff = d0 - d1;
        assert!(diff < gamma);
        assert!((diff - gamma).abs() < 5e-3 * gamma, "{diff} vs {gamma}");
    }

    #[test]
    fn born_is_odd_in_charge() {
        let h = PotentialSpec::hulthen(1.0, 0.17).unwrap();
        for l in [0, 3, 20] {
            let plus = born_delta_l(&h, l, 6.0, 1e-9).unwrap();
            let minus = born_delta_l(&h.with_charge(-1.0), l, 6.0, 1e-9).unwrap();
            assert_eq!(plus, -minus);
        }
    }

    #[test]
    fn coulomb_rejected() {
        assert!(born_delta_l(&PotentialSpec::coulomb(1.0), 0, 6.0, 1e-9).is_err());
    }

    #[test]
    fn closed_series_matches_quadrature() {
        let gas = ElectronGas::from_rs(2.07).unwrap();
        let s = gas.setup(1.0, 6.0).unwrap();
        for p in [
            PotentialSpec::hulthen_for(&s),
            PotentialSpec::yukawa_for(&s),
        ] {
            let series = born_delta_series(&p, s.k, 400).unwrap();
            for l in [0usize, 1, 2, 7, 60, 400] {
                let quad = born_delta_l(&p, l, s.k, 1e-11).unwrap();
                assert!(
                    (series[l] - quad).abs() < 1e-10 * series[0].abs(),
                    "{:?} l={l}: {} vs {quad}",
                    p.kind,
                    series[l]
                );
            }
            let minus = born_delta_series(&p.with_charge(-1.0), s.k, 400).unwrap();
            assert!(series.iter().zip(&minus).all(|(a, b)| *a == -*b));
        }
    }
}
