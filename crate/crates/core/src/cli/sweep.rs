//! Velocity and charge sweeps over every stopping method.

use std::f64::consts::PI;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::format::{format_opt, quantize, quantize_opt};
use super::CliError;
use crate::gas::{ElectronGas, ScatteringSetup};
use crate::phase::{
    born_delta0_hulthen, build_series_with, default_l_max, hulthen_delta0_exact, PotentialSpec,
    RadialGrid, SeriesSource, DEFAULT_TRUNCATION_TOL,
};
use crate::special::SumControl;
use crate::stopping::{
    asymptotic_decomposition, lindhard_barkas, sine_sum_expansion, stopping_2d_exact,
    stopping_new_form, stopping_transport_form, LINDHARD_BETA_3PI_2, LINDHARD_BETA_PI,
};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "kebab-case")]
pub enum SweepMethod {
    /// Bethe + Barkas + Bloch decomposition.
    Asymptotic,
    /// Two-term expansion with the exact s-wave shift.
    SemiAnalytic,
    /// Sine-sum form on Numerov phase shifts.
    Numeric,
    /// Transport cross section on Numerov phase shifts.
    Transport,
    /// Exact two-dimensional result (needs an areal density).
    #[value(name = "2d")]
    #[serde(rename = "2d")]
    TwoD,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub r_s: f64,
    pub z1_list: Vec<f64>,
    pub v_min: f64,
    pub v_max: f64,
    pub steps: usize,
    pub spacing: Spacing,
    pub methods: Vec<SweepMethod>,
    /// Partial-wave cutoff; chosen per velocity when absent.
    pub l_max: Option<usize>,
    pub tolerances: Option<SumControl>,
    /// Areal density for the two-dimensional method.
    pub n0_2d: Option<f64>,
}

impl SweepSpec {
    pub fn validate(&self) -> std::result::Result<(), CliError> {
        let usage = |m: String| Err(CliError::Usage(m));
        if !(self.r_s > 0.0) || !self.r_s.is_finite() {
            return usage(format!("--rs must be positive, got {}", self.r_s));
        }
        if self.z1_list.is_empty() || self.z1_list.iter().any(|z| !z.is_finite()) {
            return usage("at least one finite --z1 is required".into());
        }
        if !(self.v_min > 0.0) || !self.v_max.is_finite() || !(self.v_min < self.v_max) {
            return usage(format!(
                "need 0 < vmin < vmax, got vmin = {}, vmax = {}",
                self.v_min, self.v_max
            ));
        }
        if self.steps < 2 {
            return usage(format!("--steps must be at least 2, got {}", self.steps));
        }
        if self.methods.is_empty() {
            return usage("at least one --method is required".into());
        }
        if self.methods.contains(&SweepMethod::TwoD)
            && !self.n0_2d.is_some_and(|n| n > 0.0 && n.is_finite())
        {
            return usage("--method 2d needs a positive areal density --n2d".into());
        }
        if self.l_max == Some(0) {
            return usage("--lmax must be at least 1".into());
        }
        if let Some(ctrl) = &self.tolerances {
            ctrl.validate()
                .map_err(|e| CliError::Usage(e.to_string()))?;
        }
        Ok(())
    }

    pub fn velocities(&self) -> Vec<f64> {
        velocity_grid(self.v_min, self.v_max, self.steps, self.spacing)
    }

    fn wants(&self, m: SweepMethod) -> bool {
        self.methods.contains(&m)
    }
}

/// `steps` velocities from `v_min` to `v_max` inclusive.
pub fn velocity_grid(v_min: f64, v_max: f64, steps: usize, spacing: Spacing) -> Vec<f64> {
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                return v_max;
            }
            let t = i as f64 / last;
            match spacing {
                Spacing::Linear => v_min + (v_max - v_min) * t,
                Spacing::Log => v_min * (v_max / v_min).powf(t),
            }
        })
        .collect()
}

/// One `(z1, v)` grid point. Rows that hit an error keep only the
/// kinematic columns and carry the message in `error`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub z1: f64,
    pub v: f64,
    pub gamma: f64,
    pub lambda: f64,
    #[serde(rename = "Lambda")]
    pub lambda_hulthen: f64,
    pub delta0_exact: Option<f64>,
    pub delta0_born: Option<f64>,
    #[serde(rename = "L0")]
    pub l0: Option<f64>,
    #[serde(rename = "L1")]
    pub l1: Option<f64>,
    #[serde(rename = "L2")]
    pub l2: Option<f64>,
    #[serde(rename = "dEdz_asymptotic")]
    pub dedz_asymptotic: Option<f64>,
    #[serde(rename = "dEdz_semi_analytic")]
    pub dedz_semi_analytic: Option<f64>,
    #[serde(rename = "dEdz_numeric")]
    pub dedz_numeric: Option<f64>,
    #[serde(rename = "dEdz_transport")]
    pub dedz_transport: Option<f64>,
    #[serde(rename = "dEdz_2d")]
    pub dedz_2d: Option<f64>,
    #[serde(rename = "lindhard_L1_pi")]
    pub lindhard_l1_pi: Option<f64>,
    #[serde(rename = "lindhard_L1_3pi2")]
    pub lindhard_l1_3pi2: Option<f64>,
    pub l_max: Option<usize>,
    pub error: Option<String>,
}

pub const SWEEP_COLUMNS: [&str; 19] = [
    "z1",
    "v",
    "gamma",
    "lambda",
    "Lambda",
    "delta0_exact",
    "delta0_born",
    "L0",
    "L1",
    "L2",
    "dEdz_asymptotic",
    "dEdz_semi_analytic",
    "dEdz_numeric",
    "dEdz_transport",
    "dEdz_2d",
    "lindhard_L1_pi",
    "lindhard_L1_3pi2",
    "l_max",
    "error",
];

impl SweepRow {
    fn kinematics(s: &ScatteringSetup) -> Self {
        Self {
            z1: quantize(s.z1),
            v: quantize(s.v),
            gamma: quantize(s.gamma),
            lambda: quantize(s.lambda_yukawa),
            lambda_hulthen: quantize(s.lambda_hulthen),
            delta0_exact: None,
            delta0_born: None,
            l0: None,
            l1: None,
            l2: None,
            dedz_asymptotic: None,
            dedz_semi_analytic: None,
            dedz_numeric: None,
            dedz_transport: None,
            dedz_2d: None,
            lindhard_l1_pi: None,
            lindhard_l1_3pi2: None,
            l_max: None,
            error: None,
        }
    }

    pub fn is_error(&self) -> bool {
        self.error.is_some()
    }

    fn quantized(mut self) -> Self {
        for x in [
            &mut self.delta0_exact,
            &mut self.delta0_born,
            &mut self.l0,
            &mut self.l1,
            &mut self.l2,
            &mut self.dedz_asymptotic,
            &mut self.dedz_semi_analytic,
            &mut self.dedz_numeric,
            &mut self.dedz_transport,
            &mut self.dedz_2d,
            &mut self.lindhard_l1_pi,
            &mut self.lindhard_l1_3pi2,
        ] {
            *x = quantize_opt(*x);
        }
        self
    }

    fn record(&self) -> Vec<String> {
        use super::format::format_number as f;
        vec![
            f(self.z1),
            f(self.v),
            f(self.gamma),
            f(self.lambda),
            f(self.lambda_hulthen),
            format_opt(self.delta0_exact),
            format_opt(self.delta0_born),
            format_opt(self.l0),
            format_opt(self.l1),
            format_opt(self.l2),
            format_opt(self.dedz_asymptotic),
            format_opt(self.dedz_semi_analytic),
            format_opt(self.dedz_numeric),
            format_opt(self.dedz_transport),
            format_opt(self.dedz_2d),
            format_opt(self.lindhard_l1_pi),
            format_opt(self.lindhard_l1_3pi2),
            self.l_max.map(|l| l.to_string()).unwrap_or_default(),
            self.error.clone().unwrap_or_default(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepMeta {
    pub tool: String,
    pub version: String,
    #[serde(rename = "sweep")]
    pub spec: SweepSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub meta: SweepMeta,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    pub fn all_failed(&self) -> bool {
        self.rows.iter().all(SweepRow::is_error)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut out = out;
        writeln!(
            out,
            "# {} {} sweep (Hartree atomic units)",
            self.meta.tool, self.meta.version
        )?;
        writeln!(
            out,
            "# r_s = {}, z1 = {:?}, v = [{}, {}], steps = {}, spacing = {:?}",
            self.meta.spec.r_s,
            self.meta.spec.z1_list,
            self.meta.spec.v_min,
            self.meta.spec.v_max,
            self.meta.spec.steps,
            self.meta.spec.spacing
        )?;
        writeln!(out, "# meta: {}", serde_json::to_string(&self.meta)?)?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record(SWEEP_COLUMNS)?;
        for row in &self.rows {
            w.write_record(row.record())?;
        }
        w.flush()
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    pub fn from_csv(text: &str) -> std::result::Result<Self, CliError> {
        let bad = |m: String| CliError::Parse {
            line: None,
            message: m,
        };
        let meta_line = text
            .lines()
            .find_map(|l| l.strip_prefix("# meta: "))
            .ok_or_else(|| bad("missing '# meta:' line".into()))?;
        let meta: SweepMeta = serde_json::from_str(meta_line).map_err(|e| bad(e.to_string()))?;
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let rows = reader
            .deserialize()
            .collect::<std::result::Result<Vec<SweepRow>, _>>()
            .map_err(|e| CliError::Parse {
                line: e.position().map(|p| p.line() as usize),
                message: e.to_string(),
            })?;
        Ok(Self { meta, rows })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }
}

fn row_values(
    gas: &ElectronGas,
    s: &ScatteringSetup,
    spec: &SweepSpec,
    ctrl: &SumControl,
) -> Result<SweepRow> {
    let mut row = SweepRow::kinematics(s);
    let decomposition = asymptotic_decomposition(gas, s)?;
    let delta0 = hulthen_delta0_exact(s, ctrl)?.into_result()?;
    row.delta0_exact = Some(delta0);
    row.delta0_born = Some(born_delta0_hulthen(s));
    row.l0 = Some(decomposition.l0);
    row.l1 = Some(decomposition.l1);
    row.l2 = Some(decomposition.l2);
    row.lindhard_l1_pi = Some(lindhard_barkas(gas, s, LINDHARD_BETA_PI));
    row.lindhard_l1_3pi2 = Some(lindhard_barkas(gas, s, LINDHARD_BETA_3PI_2));
    if spec.wants(SweepMethod::Asymptotic) {
        row.dedz_asymptotic = Some(decomposition.total);
    }
    if spec.wants(SweepMethod::SemiAnalytic) {
        let scale = s.v * s.v * gas.n0 * 2.0 * PI / (s.k * s.k) * s.gamma;
        row.dedz_semi_analytic = Some(scale * sine_sum_expansion(delta0, s.gamma)?);
    }
    if spec.wants(SweepMethod::Numeric) || spec.wants(SweepMethod::Transport) {
        let p = PotentialSpec::hulthen_for(s);
        let l_max = spec.l_max.unwrap_or_else(|| {
            default_l_max(s.k, s.lambda_hulthen, s.gamma, DEFAULT_TRUNCATION_TOL)
        });
        let series = build_series_with(
            &p,
            s.k,
            l_max,
            SeriesSource::Numerov,
            &RadialGrid::default(),
            ctrl,
        )?;
        row.l_max = Some(l_max);
        if spec.wants(SweepMethod::Numeric) {
            row.dedz_numeric = Some(stopping_new_form(gas, s, &series)?.value);
        }
        if spec.wants(SweepMethod::Transport) {
            row.dedz_transport = Some(stopping_transport_form(gas, s, &series)?.value);
        }
    }
    if spec.wants(SweepMethod::TwoD) {
        let n0_2d = spec.n0_2d.expect("validated");
        row.dedz_2d = Some(stopping_2d_exact(n0_2d, s)?);
    }
    Ok(row.quantized())
}

/// Computes one row per `(z1, v)`, ordered by charge (as listed) then
/// velocity. Physics failures are confined to their rows.
pub fn run_sweep(spec: &SweepSpec) -> std::result::Result<SweepTable, CliError> {
    spec.validate()?;
    let gas = ElectronGas::from_rs(spec.r_s).map_err(|e| CliError::Usage(e.to_string()))?;
    let ctrl = spec.tolerances.unwrap_or_default();
    let velocities = spec.velocities();
    let points: Vec<(f64, f64)> = spec
        .z1_list
        .iter()
        .flat_map(|&z| velocities.iter().map(move |&v| (z, v)))
        .collect();
    let rows = points
        .par_iter()
        .map(|&(z1, v)| {
            let s = gas
                .setup(z1, v)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(match row_values(&gas, &s, spec, &ctrl) {
                Ok(row) => row,
                Err(e) => SweepRow {
                    error: Some(e.to_string()),
                    ..SweepRow::kinematics(&s)
                },
            })
        })
        .collect::<std::result::Result<Vec<_>, CliError>>()?;
    Ok(SweepTable {
        meta: SweepMeta {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            spec: spec.clone(),
        },
        rows,
    })
}
