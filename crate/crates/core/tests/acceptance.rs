//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::process::Command;

use phase_stopping::cli::{fig1_data, run_sweep, Spacing, SweepMethod, SweepSpec, SweepTable};
use phase_stopping::gas::ElectronGas;
use phase_stopping::phase::{
    born_delta0_hulthen, born_delta0_yukawa, born_delta_l, born_delta_series, build_series,
    default_l_max, hulthen_delta0_exact, numerov_delta_l, PotentialSpec, RadialGrid, SeriesSource,
    DEFAULT_TRUNCATION_TOL,
};
use phase_stopping::special::{bethe_log_approx, re_digamma_1p_iu, SumControl, EULER_MASCHERONI};
use phase_stopping::stopping::{
    asymptotic_decomposition, born_integral_inequality, coulomb_identity_check, lindhard_barkas,
    planar_identity_check, planar_partial_wave_sum_closed, stopping_2d_partial_wave,
    stopping_new_form, stopping_transport_form, truncated_coulomb_sum, LINDHARD_BETA_3PI_2,
    LINDHARD_BETA_PI,
};

const R_S: f64 = 2.07;
const VELOCITIES: [f64; 3] = [4.0, 6.0, 8.0];
const CHARGES: [f64; 2] = [1.0, -1.0];

const TOL_EXACT_VS_NUMEROV: f64 = 1e-6;
const TOL_BORN_VS_SERIES: f64 = 1e-10;
const TOL_BORN_VS_QUADRATURE: f64 = 1e-7;
const TOL_BORN_REFERENCE: f64 = 1e-4;
const TOL_DIGAMMA_U10: f64 = 5e-3;
const TOL_DIGAMMA_U100: f64 = 1e-4;
const TOL_COULOMB_IDENTITY: f64 = 1e-14;
const TOL_DECADE_GROWTH: f64 = 0.02;
const TOL_GAP: f64 = 1e-3;
const TOL_L0: f64 = 1e-3;
const TOL_L1_L2_TOTAL: f64 = 1e-5;
const TOL_BLOCH: f64 = 1e-3;
const TOL_METHOD_AGREEMENT: f64 = 0.03;
const TOL_SPLITTING: f64 = 1e-4;
const TOL_LINDHARD_RATIO: f64 = 1e-3;
const TOL_PLANAR_SUM: f64 = 1e-8;
const TOL_PLANAR_IDENTITY: f64 = 1e-15;
const TOL_ODD: f64 = 1e-15;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn gas() -> ElectronGas {
    ElectronGas::from_rs(R_S).expect("valid density")
}

fn require(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c1_exact_vs_numerov() -> Outcome {
    let g = gas();
    let mut worst = 0.0f64;
    for v in VELOCITIES {
        for z1 in CHARGES {
            let s = g.setup(z1, v).unwrap();
            let exact = hulthen_delta0_exact(&s, &SumControl::default())
                .map_err(|e| e.to_string())?
                .value;
            let numerov = numerov_delta_l(
                &PotentialSpec::hulthen_for(&s),
                0,
                s.k,
                &RadialGrid::default(),
            )
            .map_err(|e| e.to_string())?;
            worst = worst.max((exact - numerov).abs());
        }
    }
    require(
        worst < TOL_EXACT_VS_NUMEROV,
        format!("max |exact - numerov| = {worst:.2e} rad (tol {TOL_EXACT_VS_NUMEROV:.0e})"),
    )
}

/// `Σ u²/(n(n²+u²))` summed from the small end of the terms upward, with
/// the integral remainder.
fn brute_force_born_sum(u: f64) -> f64 {
    let n_max = 4_000_000usize;
    let body: f64 = (1..=n_max)
        .rev()
        .map(|n| {
            let n = n as f64;
            u * u / (n * (n * n + u * u))
        })
        .sum();
    let x = n_max as f64 + 0.5;
    body + 0.5 * (1.0 + u * u / (x * x)).ln()
}

fn c2_born_closed_form() -> Outcome {
    let g = gas();
    let (mut worst_series, mut worst_quad) = (0.0f64, 0.0f64);
    for v in VELOCITIES {
        for z1 in CHARGES {
            let s = g.setup(z1, v).unwrap();
            let closed = born_delta0_hulthen(&s);
            let series = z1 / s.k * brute_force_born_sum(s.digamma_argument());
            let quad = born_delta_l(&PotentialSpec::hulthen_for(&s), 0, s.k, 1e-11)
                .map_err(|e| e.to_string())?;
            worst_series = worst_series.max((closed - series).abs());
            worst_quad = worst_quad.max((closed - quad).abs());
        }
    }
    let reference = born_delta0_hulthen(&g.setup(1.0, 6.0).unwrap());
    require(
        worst_series < TOL_BORN_VS_SERIES
            && worst_quad < TOL_BORN_VS_QUADRATURE
            && (reference - 0.80312).abs() < TOL_BORN_REFERENCE,
        format!(
            "vs series {worst_series:.1e} (tol {TOL_BORN_VS_SERIES:.0e}), vs quadrature {worst_quad:.1e} (tol {TOL_BORN_VS_QUADRATURE:.0e}), value at v=6 {reference:.6}"
        ),
    )
}

fn c3_digamma_approximation() -> Outcome {
    let (mut worst10, mut worst100) = (0.0f64, 0.0f64);
    for i in 0..=400 {
        let u = 10f64.powf(1.0 + 4.0 * i as f64 / 400.0);
        let diff = (bethe_log_approx(u) - (re_digamma_1p_iu(u) + EULER_MASCHERONI)).abs();
        worst10 = worst10.max(diff);
        if u >= 100.0 {
            worst100 = worst100.max(diff);
        }
    }
    require(
        worst10 < TOL_DIGAMMA_U10 && worst100 < TOL_DIGAMMA_U100,
        format!(
            "max deviation {worst10:.2e} for u >= 10, {worst100:.2e} for u >= 100 (u up to 1e5)"
        ),
    )
}

fn c4_coulomb_identity() -> Outcome {
    let mut worst = 0.0f64;
    for gamma in [0.9, -0.9, 0.5, -0.5, 1.0 / 6.0, -1.0 / 6.0] {
        for l in 0..=20 {
            let (lhs, rhs) = coulomb_identity_check(gamma, l);
            worst = worst.max((lhs - rhs).abs());
        }
    }
    let s = [100, 1_000, 10_000].map(|l| truncated_coulomb_sum(1.0, l));
    let growth = [(s[1] - s[0]) / 10f64.ln(), (s[2] - s[1]) / 10f64.ln()];
    let growth_ok = growth.iter().all(|g| (g - 1.0).abs() < TOL_DECADE_GROWTH);
    require(
        worst < TOL_COULOMB_IDENTITY && growth_ok,
        format!(
            "identity residual {worst:.1e}; growth per decade / ln 10 = {:.4}, {:.4}",
            growth[0], growth[1]
        ),
    )
}

fn c5_inequality() -> Outcome {
    let mut worst = 0.0f64;
    let mut all_below = true;
    let mut widest_gap = 0.0;
    for k in [0.5, 1.0, 3.0, 6.0, 10.0] {
        for j in 0..5 {
            let ratio = 10f64.powf(1.0 + 0.5 * j as f64);
            let lam = 2.0 * k / ratio;
            let b = born_integral_inequality(1.0, k, lam).map_err(|e| e.to_string())?;
            all_below &= b.lhs < b.rhs;
            let expected = 0.5 * 4.0 * k * k / (4.0 * k * k + lam * lam);
            worst = worst.max((b.gap() - expected).abs());
            if j == 4 {
                widest_gap = b.gap();
            }
        }
    }
    require(
        all_below && worst < TOL_GAP && (widest_gap - 0.5f64).abs() < 1e-5,
        format!("lhs < rhs on 25 points; max gap deviation {worst:.1e}; gap at 2k/lambda = 1000: {widest_gap:.7}"),
    )
}

fn c6_asymptotic_numbers() -> Outcome {
    let g = gas();
    let p = asymptotic_decomposition(&g, &g.setup(1.0, 6.0).unwrap()).map_err(|e| e.to_string())?;
    let m =
        asymptotic_decomposition(&g, &g.setup(-1.0, 6.0).unwrap()).map_err(|e| e.to_string())?;
    let bloch = p.l2 * 36.0;
    require(
        (p.l0 - 4.8187).abs() < TOL_L0
            && (p.l1 - 0.011554).abs() < TOL_L1_L2_TOTAL
            && (p.l2 + 0.033390).abs() < TOL_L1_L2_TOTAL
            && (p.total - 0.045070).abs() < TOL_L1_L2_TOTAL
            && (m.total - 0.044853).abs() < TOL_L1_L2_TOTAL
            && (bloch + 1.2021).abs() < TOL_BLOCH,
        format!(
            "L0 {:.5}, L1 {:.6}, L2 {:.6}, totals {:.6} / {:.6}, L2 k^2 {:.5}",
            p.l0, p.l1, p.l2, p.total, m.total, bloch
        ),
    )
}

fn c7_method_consistency() -> Outcome {
    let g = gas();
    let mut worst = 0.0f64;
    for v in [6.0, 8.0] {
        for z1 in CHARGES {
            let s = g.setup(z1, v).unwrap();
            let p = PotentialSpec::hulthen_for(&s);
            let l_max = default_l_max(s.k, s.lambda_hulthen, s.gamma, DEFAULT_TRUNCATION_TOL);
            let series =
                build_series(&p, s.k, l_max, SeriesSource::Numerov).map_err(|e| e.to_string())?;
            let numeric = stopping_new_form(&g, &s, &series)
                .map_err(|e| e.to_string())?
                .value;
            let asymptotic = asymptotic_decomposition(&g, &s)
                .map_err(|e| e.to_string())?
                .total;
            worst = worst.max(((numeric - asymptotic) / asymptotic).abs());
        }
    }
    require(
        worst < TOL_METHOD_AGREEMENT,
        format!("max relative deviation {:.3}% (tol 3%)", 100.0 * worst),
    )
}

fn c8_barkas_and_lindhard() -> Outcome {
    let g = gas();
    let data = fig1_data(R_S, 2.0, 10.0, 81, None).map_err(|e| e.to_string())?;
    let ordered = data.curves.iter().all(|c| c.proton > c.antiproton);
    let d = asymptotic_decomposition(&g, &g.setup(1.0, 6.0).unwrap()).unwrap();
    let predicted = 2.0 * d.l1 / (d.l0 + d.l2);
    let at6 = data
        .curves
        .iter()
        .find(|c| c.v == 6.0)
        .ok_or("v = 6 missing from the grid")?;
    let mut ratio_dev = 0.0f64;
    for v in VELOCITIES {
        let s = g.setup(1.0, v).unwrap();
        let l1 = asymptotic_decomposition(&g, &s).unwrap().l1;
        ratio_dev = ratio_dev
            .max((lindhard_barkas(&g, &s, LINDHARD_BETA_PI) / l1 - 3.528).abs())
            .max((lindhard_barkas(&g, &s, LINDHARD_BETA_3PI_2) / l1 - 5.292).abs());
    }
    require(
        ordered
            && (at6.splitting - predicted).abs() < 1e-9
            && (at6.splitting - 0.00483).abs() < TOL_SPLITTING
            && ratio_dev < TOL_LINDHARD_RATIO,
        format!(
            "proton above antiproton at all 81 points: {ordered}; splitting at v=6 {:.4}% (2L1/(L0+L2) = {:.4}%); Lindhard ratio max deviation {ratio_dev:.1e}",
            100.0 * at6.splitting,
            100.0 * predicted
        ),
    )
}

fn c9_planar() -> Outcome {
    let g = gas();
    let mut worst = 0.0f64;
    let mut worst_identity = 0.0f64;
    for gamma in [0.1, 0.5, 1.0, 2.0] {
        let s = g.setup(gamma * 3.0, 3.0).unwrap();
        let sum =
            stopping_2d_partial_wave(&s, &SumControl::default()).map_err(|e| e.to_string())?;
        worst = worst.max((sum - planar_partial_wave_sum_closed(gamma)).abs());
        for m in 0..=100 {
            let (lhs, rhs) = planar_identity_check(gamma, m);
            worst_identity = worst_identity.max((lhs - rhs).abs());
        }
    }
    require(
        worst < TOL_PLANAR_SUM && worst_identity < TOL_PLANAR_IDENTITY,
        format!("sum vs (pi g/2) tanh(pi g): {worst:.1e}; termwise identity {worst_identity:.1e}"),
    )
}

fn c10_sign_symmetry() -> Outcome {
    let g = gas();
    let mut odd = 0.0f64;
    let mut barkas = true;
    let mut even = 0.0f64;
    for v in VELOCITIES {
        let (sp, sm) = (g.setup(1.0, v).unwrap(), g.setup(-1.0, v).unwrap());
        odd = odd.max((born_delta0_hulthen(&sp) + born_delta0_hulthen(&sm)).abs());
        odd = odd.max(
            (born_delta0_yukawa(1.0, v, sp.lambda_yukawa).unwrap()
                + born_delta0_yukawa(-1.0, v, sp.lambda_yukawa).unwrap())
            .abs(),
        );
        for p in [
            PotentialSpec::hulthen_for(&sp),
            PotentialSpec::yukawa_for(&sp),
        ] {
            let m = p.with_charge(-1.0);
            for l in [0, 1, 5, 30] {
                odd = odd.max(
                    (born_delta_l(&p, l, v, 1e-9).unwrap() + born_delta_l(&m, l, v, 1e-9).unwrap())
                        .abs(),
                );
            }
            let (a, b) = (
                born_delta_series(&p, v, 300).unwrap(),
                born_delta_series(&m, v, 300).unwrap(),
            );
            odd = a.iter().zip(&b).fold(odd, |w, (x, y)| w.max((x + y).abs()));
            let l_max = default_l_max(v, p.screening, sp.gamma, DEFAULT_TRUNCATION_TOL);
            let tp = stopping_transport_form(
                &g,
                &sp,
                &build_series(&p, v, l_max, SeriesSource::BornClosed).unwrap(),
            )
            .unwrap()
            .value;
            let tm = stopping_transport_form(
                &g,
                &sm,
                &build_series(&m, v, l_max, SeriesSource::BornClosed).unwrap(),
            )
            .unwrap()
            .value;
            even = even.max((tp - tm).abs());
        }
        let ctrl = SumControl::default();
        let (dp, dm) = (
            hulthen_delta0_exact(&sp, &ctrl).unwrap().value,
            hulthen_delta0_exact(&sm, &ctrl).unwrap().value,
        );
        barkas &= dp.abs() > dm.abs();
    }
    require(
        odd < TOL_ODD && barkas && even == 0.0,
        format!("Born odd residual {odd:.1e}; |delta0(+1)| > |delta0(-1)|: {barkas}; transport even residual {even:.1e}"),
    )
}

fn c11_determinism_and_io() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_phase-stopping");
    let args = [
        "sweep",
        "--rs",
        "2.07",
        "--z1",
        "1",
        "--z1",
        "-1",
        "--vmin",
        "3",
        "--vmax",
        "9",
        "--steps",
        "13",
        "--method",
        "asymptotic",
        "--method",
        "semi-analytic",
        "--method",
        "2d",
        "--n2d",
        "0.01",
    ];
    let run = || {
        Command::new(exe)
            .args(args)
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() {
        return Err(format!("sweep exited with {:?}", a.status.code()));
    }
    let identical = a.stdout == b.stdout;
    let text = String::from_utf8(a.stdout).map_err(|e| e.to_string())?;
    let parsed = SweepTable::from_csv(&text).map_err(|e| e.to_string())?;
    let in_memory = run_sweep(&SweepSpec {
        r_s: 2.07,
        z1_list: vec![1.0, -1.0],
        v_min: 3.0,
        v_max: 9.0,
        steps: 13,
        spacing: Spacing::Linear,
        methods: vec![
            SweepMethod::Asymptotic,
            SweepMethod::SemiAnalytic,
            SweepMethod::TwoD,
        ],
        l_max: None,
        tolerances: None,
        n0_2d: Some(0.01),
    })
    .map_err(|e| e.to_string())?;
    let round_trip = parsed == in_memory && parsed.to_csv_string() == text;
    require(
        identical && round_trip,
        format!(
            "two runs byte-identical: {identical}; CSV parses back to the in-memory table ({} rows): {round_trip}",
            parsed.rows.len()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("exact-vs-oracle delta0", c1_exact_vs_numerov),
        ("Born closed form", c2_born_closed_form),
        ("digamma approximation", c3_digamma_approximation),
        ("Coulomb identity and truncated sum", c4_coulomb_identity),
        ("inequality direction and gap", c5_inequality),
        ("asymptotic decomposition numbers", c6_asymptotic_numbers),
        ("method consistency", c7_method_consistency),
        ("Barkas ordering and Lindhard ratio", c8_barkas_and_lindhard),
        ("2D exactness", c9_planar),
        ("sign-symmetry suite", c10_sign_symmetry),
        ("determinism and I/O", c11_determinism_and_io),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  {:>2}. {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {:>2}. {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
