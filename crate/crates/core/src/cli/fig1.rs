//! Proton and antiproton stopping curves with optional reference overlay.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::format::{format_number, quantize};
use super::sweep::{velocity_grid, Spacing};
use super::CliError;
use crate::gas::ElectronGas;
use crate::stopping::asymptotic_decomposition;

/// Digitized `(v, stopping)` reference points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReferenceOverlay {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

impl ReferenceOverlay {
    /// Two comma-separated columns per line; `#` starts a comment and blank
    /// lines are skipped. Velocities must increase strictly.
    pub fn parse(label: &str, text: &str) -> Result<Self, CliError> {
        let mut points: Vec<(f64, f64)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let bad = |message: String| CliError::Parse {
                line: Some(line_no),
                message,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 2 {
                return Err(bad(format!(
                    "expected 2 columns (v, stopping), found {}",
                    fields.len()
                )));
            }
            let parse = |s: &str| {
                s.parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| bad(format!("'{s}' is not a finite number")))
            };
            let (v, stopping) = (parse(fields[0])?, parse(fields[1])?);
            if let Some(&(prev, _)) = points.last() {
                if v <= prev {
                    return Err(bad(format!(
                        "velocity {v} does not exceed the previous {prev}"
                    )));
                }
            }
            points.push((v, stopping));
        }
        Ok(Self {
            label: label.to_string(),
            points,
        })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "reference".into());
        Self::parse(&label, &text).map_err(|e| e.in_file(path))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Curve {
    Proton,
    Antiproton,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub v: f64,
    /// `z1 = +1` (solid curve).
    pub proton: f64,
    /// `z1 = −1` (dashed curve).
    pub antiproton: f64,
    /// `(proton − antiproton) / mean`.
    pub splitting: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OverlayComparison {
    pub v: f64,
    pub reference: f64,
    /// Curve velocity closest to `v`.
    pub nearest_v: f64,
    pub model: f64,
    /// `100 (reference − model) / model`.
    pub percent_diff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OverlayReport {
    pub label: String,
    pub curve: Curve,
    pub points: Vec<OverlayComparison>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fig1Meta {
    pub tool: String,
    pub version: String,
    pub r_s: f64,
    pub v_min: f64,
    pub v_max: f64,
    pub steps: usize,
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fig1Data {
    pub meta: Fig1Meta,
    pub curves: Vec<CurvePoint>,
    pub overlay: Option<OverlayReport>,
}

pub const FIG1_DEFAULT_RS: f64 = 2.07;
pub const FIG1_DEFAULT_VMIN: f64 = 2.0;
pub const FIG1_DEFAULT_VMAX: f64 = 10.0;
pub const FIG1_DEFAULT_STEPS: usize = 81;

/// Asymptotic stopping for `z1 = ±1` on a linear velocity grid.
pub fn fig1_data(
    r_s: f64,
    v_min: f64,
    v_max: f64,
    steps: usize,
    overlay: Option<(&ReferenceOverlay, Curve)>,
) -> Result<Fig1Data, CliError> {
    if steps < 2 {
        return Err(CliError::Usage(format!(
            "--steps must be at least 2, got {steps}"
        )));
    }
    if !(v_min > 0.0) || !(v_min < v_max) || !v_max.is_finite() {
        return Err(CliError::Usage(format!(
            "need 0 < vmin < vmax, got {v_min}, {v_max}"
        )));
    }
    let gas = ElectronGas::from_rs(r_s).map_err(|e| CliError::Usage(e.to_string()))?;
    let curves = velocity_grid(v_min, v_max, steps, Spacing::Linear)
        .into_iter()
        .map(|v| {
            let total = |z1: f64| -> Result<f64, CliError> {
                let s = gas
                    .setup(z1, v)
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                Ok(asymptotic_decomposition(&gas, &s)?.total)
            };
            let (p, a) = (total(1.0)?, total(-1.0)?);
            Ok(CurvePoint {
                v: quantize(v),
                proton: quantize(p),
                antiproton: quantize(a),
                splitting: quantize((p - a) / (0.5 * (p + a))),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let overlay = overlay.map(|(o, curve)| OverlayReport {
        label: o.label.clone(),
        curve,
        points: o
            .points
            .iter()
            .map(|&(v, reference)| {
                let nearest = curves
                    .iter()
                    .min_by(|a, b| (a.v - v).abs().total_cmp(&(b.v - v).abs()))
                    .expect("at least two curve points");
                let model = match curve {
                    Curve::Proton => nearest.proton,
                    Curve::Antiproton => nearest.antiproton,
                };
                OverlayComparison {
                    v,
                    reference,
                    nearest_v: nearest.v,
                    model,
                    percent_diff: quantize(100.0 * (reference - model) / model),
                }
            })
            .collect(),
    });
    Ok(Fig1Data {
        meta: Fig1Meta {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            r_s,
            v_min,
            v_max,
            steps,
            method: "asymptotic".into(),
        },
        curves,
        overlay,
    })
}

impl Fig1Data {
    /// Long format: `series,v,dEdz,nearest_v,model_dEdz,percent_diff` with
    /// series `proton`, `antiproton` or the overlay label.
    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut out = out;
        writeln!(
            out,
            "# {} {} fig1: asymptotic stopping (Hartree atomic units), r_s = {}",
            self.meta.tool, self.meta.version, self.meta.r_s
        )?;
        writeln!(
            out,
            "# proton: z1 = +1 (solid), antiproton: z1 = -1 (dashed)"
        )?;
        if let Some(o) = &self.overlay {
            writeln!(
                out,
                "# overlay '{}': {} points compared with the {:?} curve at the nearest v",
                o.label,
                o.points.len(),
                o.curve
            )?;
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "series",
            "v",
            "dEdz",
            "nearest_v",
            "model_dEdz",
            "percent_diff",
        ])?;
        for (name, pick) in [("proton", 0usize), ("antiproton", 1)] {
            for c in &self.curves {
                let y = if pick == 0 { c.proton } else { c.antiproton };
                w.write_record([name, &format_number(c.v), &format_number(y), "", "", ""])?;
            }
        }
        if let Some(o) = &self.overlay {
            for p in &o.points {
                w.write_record([
                    o.label.as_str(),
                    &format_number(p.v),
                    &format_number(p.reference),
                    &format_number(p.nearest_v),
                    &format_number(p.model),
                    &format_number(p.percent_diff),
                ])?;
            }
        }
        w.flush()
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("fig1 data serializes");
        s.push('\n');
        s
    }
}
