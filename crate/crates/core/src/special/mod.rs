//! Special functions and numerical primitives.
//!
//! Only what the scattering calculation needs: `Re ψ(1 + iu)`, ζ(3),
//! Legendre polynomials, adaptive Gauss–Kronrod quadrature and summation of
//! slowly converging positive series with an integral tail estimate.

mod digamma;
mod quad;
mod series;

pub use digamma::{bethe_log_approx, re_digamma_1p_iu, EULER_MASCHERONI};
pub use quad::{integrate, integrate_with, QuadControl};

pub use series::{sum_series, SeriesResult, SumControl, TailMode};

use crate::{Error, Result};

/// Apéry's constant ζ(3).
pub const ZETA3: f64 = 1.202_056_903_159_594_3;

pub fn zeta3() -> f64 {
    ZETA3
}

/// Legendre polynomial `P_l(x)` for `|x| ≤ 1` by the three-term recurrence.
pub fn legendre_p(l: usize, x: f64) -> Result<f64> {
    if !(x.abs() <= 1.0) {
        return Err(Error::Domain(format!(
            "Legendre argument must lie in [-1, 1], got {x}"
        )));
    }
    Ok(legendre_unchecked(l, x))
}

pub(crate) fn legendre_unchecked(l: usize, x: f64) -> f64 {
    let (mut p_prev, mut p) = (1.0, x);
    if l == 0 {
        return 1.0;
    }
    for n in 1..l {
        let nf = n as f64;
        let next = ((2.0 * nf + 1.0) * x * p - nf * p_prev) / (nf + 1.0);
        p_prev = p;
        p = next;
    }
    p
}

/// Legendre functions of the second kind `Q_0(ξ) ..= Q_{l_max}(ξ)` for
/// `ξ = 1 + eps > 1`, by Miller's downward recurrence normalized to
/// `Q_0 = ½ ln(1 + 2/eps)`. Passing `eps` rather than `ξ` keeps full
/// precision close to the cut. Entries below ~1e-300 relative to `Q_0` are zero.
pub fn legendre_q_all(eps: f64, l_max: usize) -> Result<Vec<f64>> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::Domain(format!("Q_l needs ξ > 1, got ξ − 1 = {eps}")));
    }
    let xi = 1.0 + eps;
    // Q_l ~ exp(−(l+½) a) with a = acosh ξ
    let a = 2.0 * (0.5 * eps).sqrt().asinh();
    let l_eff = l_max.min((690.0 / a).ceil() as usize);
    let start = l_eff + (20.0 / a).ceil() as usize + 10;
    let mut q = vec![0.0; l_max + 1];
    let (mut upper, mut current) = (0.0f64, 1e-250f64);
    for l in (1..=start).rev() {
        let lf = l as f64;
        let lower = ((2.0 * lf + 1.0) * xi * current - (lf + 1.0) * upper) / lf;
        upper = current;
        current = lower;
        if l - 1 <= l_eff {
            q[l - 1] = current;
        }
        if current.abs() > 1e250 {
            upper *= 1e-250;
            current *= 1e-250;
            q[l - 1..=l_eff].iter_mut().for_each(|x| *x *= 1e-250);
        }
    }
    let scale = 0.5 * (2.0 / eps).ln_1p() / q[0];
    q[..=l_eff].iter_mut().for_each(|x| *x *= scale);
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_legendre() {
        for x in [-1.0, -0.3, 0.0, 0.7, 1.0] {
            assert_eq!(legendre_p(0, x).unwrap(), 1.0);
            assert_eq!(legendre_p(1, x).unwrap(), x);
        }
        assert_eq!(legendre_p(1, 0.5).unwrap(), 0.5);
    }

    #[test]
    fn p5_against_closed_form() {
        let x: f64 = 0.3;
        let closed = (63.0 * x.powi(5) - 70.0 * x.powi(3) + 15.0 * x) / 8.0;
        assert!((closed - 0.345_386_25).abs() < 1e-15);
        assert!((legendre_p(5, x).unwrap() - closed).abs() < 1e-15);
    }

    #[test]
    fn legendre_bounds() {
        for l in 0..=50 {
            assert!((legendre_p(l, 1.0).unwrap() - 1.0).abs() < 1e-13);
            for i in 0..=200 {
                let x = -1.0 + i as f64 / 100.0;
                assert!(legendre_p(l, x).unwrap().abs() <= 1.0 + 1e-13);
            }
        }
    }

    #[test]
    fn legendre_domain() {
        assert!(matches!(legendre_p(3, 1.5), Err(Error::Domain(_))));
        assert!(legendre_p(3, f64::NAN).is_err());
    }

    #[test]
    fn zeta3_against_direct_sum() {
        // partial sum with the integral remainder 1/(2(N+1/2)^2)
        let n = 100_000usize;
        let partial: f64 = (1..=n).rev().map(|j| 1.0 / (j as f64).powi(3)).sum();
        let tail = 1.0 / (2.0 * (n as f64 + 0.5).powi(2));
        assert!((partial + tail - zeta3()).abs() < 1e-12);

        // monotone positive series: partial sum below, partial + crude bound above
        let p10: f64 = (1..=10).map(|j| 1.0 / (j as f64).powi(3)).sum();
        assert!(p10 < zeta3());
        assert!(p10 + 1.0 / (2.0 * 100.0) > zeta3());
    }

    #[test]
    fn bloch_coefficient() {
        // -(1/3 + 2/3) ζ(3) ≈ -1.2
        let c = -(1.0 / 3.0 + 2.0 / 3.0) * zeta3();
        assert!((c + 1.2).abs() < 5e-3);
    }

    #[test]
    fn legendre_q_against_closed_forms() {
        for xi in [1.0001f64, 1.3, 4.0, 250.0] {
            let q = legendre_q_all(xi - 1.0, 3).unwrap();
            let q0 = 0.5 * (2.0 / (xi - 1.0)).ln_1p();
            let q1 = xi * q0 - 1.0;
            let q2 = 0.5 * (3.0 * xi * xi - 1.0) * q0 - 1.5 * xi;
            // the closed form for Q_2 cancels badly at large ξ
            let checks = if xi < 10.0 {
                vec![(q[0], q0), (q[1], q1), (q[2], q2)]
            } else {
                vec![(q[0], q0), (q[1], q1)]
            };
            for (got, want) in checks {
                assert!(
                    (got - want).abs() <= 1e-9 * want.abs(),
                    "ξ={xi}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn legendre_q_against_quadrature() {
        // Q_l(ξ) = ½ ∫ P_l(x)/(ξ − x) dx over [−1, 1]
        for (xi, l) in [(1.01f64, 40usize), (1.2, 7), (1.0005, 300)] {
            let q = legendre_q_all(xi - 1.0, l).unwrap();
            let direct = 0.5
                * integrate_with(
                    |x| legendre_unchecked(l, x) / (xi - x),
                    -1.0,
                    1.0,
                    &QuadControl {
                        rel_tol: 1e-12,
                        abs_tol: 1e-16,
                        max_subdivisions: 20_000,
                    },
                )
                .unwrap();
            assert!(
                (q[l] - direct).abs() < 1e-10 * q[0],
                "ξ={xi} l={l}: {} vs {direct}",
                q[l]
            );
        }
        let far = legendre_q_all(1e4, 500).unwrap();
        assert!(far.iter().all(|x| x.is_finite()) && far[500] == 0.0);
        assert!(legendre_q_all(0.0, 3).is_err());
    }
}
