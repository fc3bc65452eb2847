//! Phase-shift series dumps.

use std::io::Write;

use serde::{Deserialize, Serialize};

use super::format::{format_number, quantize};
use super::CliError;
use crate::gas::ElectronGas;
use crate::phase::{
    build_series, default_l_max, PhaseShiftSeries, PotentialKind, PotentialSpec, SeriesSource,
    TailModel, DEFAULT_TRUNCATION_TOL,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum DumpSource {
    /// Radial integration for every l.
    Numerov,
    /// Exact s-wave shift, Born shifts for l ≥ 1 (Hulthén only).
    ExactS,
    /// Closed-form Born shifts.
    Born,
    /// Born shifts from momentum-space quadrature.
    BornQuadrature,
}

impl From<DumpSource> for SeriesSource {
    fn from(s: DumpSource) -> Self {
        match s {
            DumpSource::Numerov => SeriesSource::Numerov,
            DumpSource::ExactS => SeriesSource::ExactHulthenL0,
            DumpSource::Born => SeriesSource::BornClosed,
            DumpSource::BornQuadrature => SeriesSource::BornQuadrature,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum DumpPotential {
    Hulthen,
    Yukawa,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseShiftDump {
    pub r_s: f64,
    pub z1: f64,
    pub v: f64,
    pub potential: PotentialKind,
    pub screening: f64,
    pub series: PhaseShiftSeries,
}

pub fn dump_phase_shifts(
    r_s: f64,
    z1: f64,
    v: f64,
    l_max: Option<usize>,
    potential: DumpPotential,
    source: DumpSource,
) -> Result<PhaseShiftDump, CliError> {
    let gas = ElectronGas::from_rs(r_s).map_err(|e| CliError::Usage(e.to_string()))?;
    let s = gas
        .setup(z1, v)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let p = match potential {
        DumpPotential::Hulthen => PotentialSpec::hulthen_for(&s),
        DumpPotential::Yukawa => PotentialSpec::yukawa_for(&s),
    };
    if l_max == Some(0) {
        return Err(CliError::Usage("--lmax must be at least 1".into()));
    }
    let l_max =
        l_max.unwrap_or_else(|| default_l_max(s.k, p.screening, s.gamma, DEFAULT_TRUNCATION_TOL));
    let mut series = build_series(&p, s.k, l_max, source.into())?;
    series.values.iter_mut().for_each(|d| *d = quantize(*d));
    Ok(PhaseShiftDump {
        r_s,
        z1,
        v,
        potential: p.kind,
        screening: p.screening,
        series,
    })
}

impl PhaseShiftDump {
    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut out = out;
        writeln!(
            out,
            "# phase shifts: r_s = {}, z1 = {}, v = {}, k = {}, {:?} screening = {}",
            self.r_s, self.z1, self.v, self.series.k, self.potential, self.screening
        )?;
        let tail = match self.series.tail_model {
            TailModel::None => "none".to_string(),
            TailModel::CoulombLimit { gamma } => format!("coulomb limit, gamma = {gamma}"),
        };
        writeln!(
            out,
            "# source = {:?}, l_max = {}, tail = {tail}",
            self.series.source,
            self.series.l_max()
        )?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["l", "delta"])?;
        for (l, d) in self.series.values.iter().enumerate() {
            w.write_record([l.to_string(), format_number(*d)])?;
        }
        w.flush()
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("dump serializes");
        s.push('\n');
        s
    }
}
