//! Self-consistency report for one `(r_s, z1, v)` point.

use std::io::Write;

use serde::{Deserialize, Serialize};

use super::format::format_number;
use super::CliError;
use crate::gas::ElectronGas;
use crate::phase::{
    build_series, default_l_max, hulthen_delta0_exact, numerov_delta_l, PotentialSpec, RadialGrid,
    SeriesSource, DEFAULT_TRUNCATION_TOL,
};
use crate::special::{
    bethe_log_approx, re_digamma_1p_iu, sum_series, SumControl, EULER_MASCHERONI,
};
use crate::stopping::{
    asymptotic_decomposition, born_integral_inequality, coulomb_identity_check,
    planar_identity_check, planar_partial_wave_sum_closed, stopping_2d_partial_wave,
    stopping_new_form, stopping_transport_form, truncated_coulomb_sum, BornInequality,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub reference: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    fn new(name: impl Into<String>, value: f64, reference: f64, tolerance: f64) -> Self {
        let residual = (value - reference).abs();
        Self {
            name: name.into(),
            value,
            reference,
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }

    fn condition(name: impl Into<String>, value: f64, reference: f64, holds: bool) -> Self {
        Self {
            name: name.into(),
            value,
            reference,
            residual: value - reference,
            tolerance: 0.0,
            pass: holds,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncatedSumEntry {
    pub l_max: usize,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BornSeriesStopping {
    pub l_max: usize,
    /// Sine-sum form on the Yukawa Born series.
    pub new_form: f64,
    /// Transport form on the same series.
    pub transport: f64,
    /// Sine-sum form on the Hulthén series with the exact s-wave shift.
    pub new_form_exact_s_wave: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DiagnosticsReport {
    Ok {
        r_s: f64,
        z1: f64,
        v: f64,
        k: f64,
        gamma: f64,
        all_passed: bool,
        checks: Vec<Check>,
        truncated_sum_table: Vec<TruncatedSumEntry>,
        born_inequality: BornInequality,
        born_series_stopping: BornSeriesStopping,
    },
    RegimeError {
        r_s: f64,
        z1: f64,
        v: f64,
        message: String,
    },
}

impl DiagnosticsReport {
    pub fn is_regime_error(&self) -> bool {
        matches!(self, Self::RegimeError { .. })
    }

    pub fn checks(&self) -> &[Check] {
        match self {
            Self::Ok { checks, .. } => checks,
            Self::RegimeError { .. } => &[],
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per check; a regime error becomes a single comment line.
    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut out = out;
        match self {
            Self::RegimeError { message, .. } => writeln!(out, "# regime error: {message}"),
            Self::Ok { r_s, z1, v, .. } => {
                writeln!(out, "# diagnostics at r_s = {r_s}, z1 = {z1}, v = {v}")?;
                let mut w = csv::Writer::from_writer(out);
                w.write_record([
                    "check",
                    "value",
                    "reference",
                    "residual",
                    "tolerance",
                    "pass",
                ])?;
                for c in self.checks() {
                    w.write_record([
                        c.name.as_str(),
                        &format_number(c.value),
                        &format_number(c.reference),
                        &format_number(c.residual),
                        &format_number(c.tolerance),
                        if c.pass { "true" } else { "false" },
                    ])?;
                }
                w.flush()
            }
        }
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }
}

/// Runs every identity, inequality and cross-method check at one point.
///
/// Outside the high-velocity regime (`2v² ≤ ω_p` or `|γ| ≥ 1`) the report
/// is a regime error rather than a list of checks.
pub fn run_diagnostics(
    r_s: f64,
    z1: f64,
    v: f64,
    l_max: Option<usize>,
    ctrl: &SumControl,
) -> Result<DiagnosticsReport, CliError> {
    let gas = ElectronGas::from_rs(r_s).map_err(|e| CliError::Usage(e.to_string()))?;
    let s = gas
        .setup(z1, v)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    ctrl.validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    if let Err(e) = asymptotic_decomposition(&gas, &s) {
        let message = match e {
            crate::Error::Regime(m) => m,
            other => other.to_string(),
        };
        return Ok(DiagnosticsReport::RegimeError {
            r_s,
            z1,
            v,
            message,
        });
    }
    let mut checks = Vec::new();
    let gamma = s.gamma;

    let worst = (0..=10)
        .map(|l| {
            let (lhs, rhs) = coulomb_identity_check(gamma, l);
            (lhs - rhs).abs()
        })
        .fold(0.0, f64::max);
    checks.push(Check::new(
        "coulomb_identity_max_residual_l0_to_10",
        worst,
        0.0,
        1e-14,
    ));

    let table: Vec<TruncatedSumEntry> = [10usize, 100, 1_000, 10_000]
        .into_iter()
        .map(|l_max| TruncatedSumEntry {
            l_max,
            value: truncated_coulomb_sum(gamma, l_max),
        })
        .collect();
    let per_decade = (table[3].value - table[1].value) / 2.0;
    let expected = gamma * gamma * 10f64.ln();
    checks.push(Check::new(
        "truncated_sum_growth_per_decade",
        per_decade,
        expected,
        0.02 * expected,
    ));

    let inequality = born_integral_inequality(z1, s.k, s.lambda_yukawa)?;
    checks.push(Check::new(
        "born_integral_lhs_quadrature_vs_closed",
        inequality.lhs,
        inequality.lhs_closed,
        1e-8 * inequality.lhs_closed,
    ));
    checks.push(Check::new(
        "born_integral_rhs_quadrature_vs_closed",
        inequality.rhs,
        inequality.rhs_closed,
        1e-8 * inequality.rhs_closed,
    ));
    checks.push(Check::condition(
        "born_integral_lhs_below_rhs",
        inequality.lhs,
        inequality.rhs,
        inequality.lhs < inequality.rhs,
    ));
    checks.push(Check::new(
        "born_integral_gap",
        inequality.gap(),
        0.5,
        0.5 * s.lambda_yukawa.powi(2) / (s.k * s.k) + 1e-8,
    ));

    let yukawa = PotentialSpec::yukawa_for(&s);
    let born_l_max =
        l_max.unwrap_or_else(|| default_l_max(s.k, s.lambda_yukawa, gamma, DEFAULT_TRUNCATION_TOL));
    let born = build_series(&yukawa, s.k, born_l_max, SeriesSource::BornClosed)?;
    let new_form = stopping_new_form(&gas, &s, &born)?.value;
    let transport = stopping_transport_form(&gas, &s, &born)?.value;
    checks.push(Check::condition(
        "born_series_transport_below_new_form",
        transport,
        new_form,
        transport < new_form,
    ));
    let hulthen = PotentialSpec::hulthen_for(&s);
    let hulthen_l_max = l_max
        .unwrap_or_else(|| default_l_max(s.k, s.lambda_hulthen, gamma, DEFAULT_TRUNCATION_TOL));
    let exact_series = build_series(&hulthen, s.k, hulthen_l_max, SeriesSource::ExactHulthenL0)?;
    let new_form_exact_s_wave = stopping_new_form(&gas, &s, &exact_series)?.value;

    let planar = stopping_2d_partial_wave(&s, ctrl)?;
    checks.push(Check::new(
        "planar_partial_wave_vs_tanh",
        planar,
        planar_partial_wave_sum_closed(gamma),
        1e-8,
    ));
    let planar_worst = (0..=10)
        .map(|m| {
            let (lhs, rhs) = planar_identity_check(gamma, m);
            (lhs - rhs).abs()
        })
        .fold(0.0, f64::max);
    checks.push(Check::new(
        "planar_identity_max_residual_m0_to_10",
        planar_worst,
        0.0,
        1e-15,
    ));

    let u = s.digamma_argument();
    let closed = re_digamma_1p_iu(u) + EULER_MASCHERONI;
    let series = sum_series(
        |n| {
            let n = n as f64;
            u * u / (n * (n * n + u * u))
        },
        ctrl,
    )?
    .into_result()?;
    checks.push(Check::new("digamma_closed_vs_series", closed, series, 1e-8));
    checks.push(Check::new(
        "bethe_log_approx_vs_digamma",
        bethe_log_approx(u),
        closed,
        5e-3,
    ));

    let exact = hulthen_delta0_exact(&s, ctrl)?.into_result()?;
    let numerov = numerov_delta_l(&hulthen, 0, s.k, &RadialGrid::default())?;
    checks.push(Check::new("delta0_exact_vs_numerov", exact, numerov, 1e-6));

    Ok(DiagnosticsReport::Ok {
        r_s,
        z1,
        v,
        k: s.k,
        gamma,
        all_passed: checks.iter().all(|c| c.pass),
        checks,
        truncated_sum_table: table,
        born_inequality: inequality,
        born_series_stopping: BornSeriesStopping {
            l_max: born_l_max,
            new_form,
            transport,
            new_form_exact_s_wave,
        },
    })
}
