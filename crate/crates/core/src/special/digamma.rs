use num_complex::Complex64;

use crate::gas::HULTHEN_SCREENING_RATIO;

pub const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_9;

/// `B_{2j} / (2j)` for j = 1..6, the asymptotic coefficients through w^-12.
const ASYMPTOTIC: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
];

const SWITCHOVER: f64 = 10.0;

fn digamma_complex(z: Complex64) -> Complex64 {
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() <= SWITCHOVER {
        shift += w.inv();
        w += 1.0;
    }
    let inv2 = (w * w).inv();
    let mut power = inv2;
    let mut series = Complex64::new(0.0, 0.0);
    for c in ASYMPTOTIC {
        series += power * c;
        power *= inv2;
    }
    w.ln() - 0.5 * w.inv() - series - shift
}

/// Real part of the digamma function on the line `1 + iu`. Even in `u`.
pub fn re_digamma_1p_iu(u: f64) -> f64 {
    digamma_complex(Complex64::new(1.0, u.abs())).re
}

/// `(1/2) ln(1 + Γ² u²)` with Γ = 1.781, the large-`u` approximation of
/// `Re ψ(1 + iu) − ψ(1)`.
pub fn bethe_log_approx(u: f64) -> f64 {
    let gu = HULTHEN_SCREENING_RATIO * u;
    0.5 * (gu * gu).ln_1p()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `Re ψ(1+iu) − ψ(1) = Σ_{n≥1} u² / (n (n² + u²))`, summed directly
    /// with a midpoint-integral remainder.
    fn series_oracle(u: f64) -> f64 {
        let u2 = u * u;
        let n_max = 2_000_000usize;
        let mut s = 0.0;
        for n in (1..=n_max).rev() {
            let nf = n as f64;
            s += u2 / (nf * (nf * nf + u2));
        }
        // ∫_{N+1/2}^∞ u²/(x(x²+u²)) dx = (1/2) ln(1 + u²/(N+1/2)²)
        let m = n_max as f64 + 0.5;
        s + 0.5 * (u2 / (m * m)).ln_1p()
    }

    #[test]
    fn psi_one() {
        assert!((re_digamma_1p_iu(0.0) + EULER_MASCHERONI).abs() < 1e-13);
    }

    #[test]
    fn psi_one_plus_i() {
        let v = re_digamma_1p_iu(1.0);
        assert!((v - 0.094_650_320_622_476_98).abs() < 1e-12);
        assert_eq!(re_digamma_1p_iu(-1.0), v);
        assert!((v + EULER_MASCHERONI - 0.671_865_985_524_009_9).abs() < 1e-11);
    }

    #[test]
    fn against_series() {
        for u in [0.5, 1.0, 2.0, 5.0, 10.0, 50.0] {
            let direct = re_digamma_1p_iu(u) + EULER_MASCHERONI;
            let oracle = series_oracle(u);
            assert!(
                (direct - oracle).abs() < 1e-10,
                "u={u}: {direct} vs {oracle}"
            );
        }
    }

    #[test]
    fn approximation_quality() {
        assert_eq!(bethe_log_approx(0.0), 0.0);
        // 2k/Λ at r_s = 2.07, v = 6
        let u = 69.512_589_586_148_79;
        assert!((bethe_log_approx(u) - 4.818_715_506_882_764).abs() < 1e-12);
        for u in [10.0, 20.0, 50.0, 100.0, 1e3, 1e4] {
            let exact = re_digamma_1p_iu(u) + EULER_MASCHERONI;
            let diff = (bethe_log_approx(u) - exact).abs();
            assert!(diff < 5e-3, "u={u}: {diff}");
            if u >= 100.0 {
                assert!(diff < 1e-4, "u={u}: {diff}");
            }
        }
        let d10 = bethe_log_approx(10.0) - (re_digamma_1p_iu(10.0) + EULER_MASCHERONI);
        assert!((d10 - 6.990_011_200_979_48e-4).abs() < 1e-10);
    }
}
