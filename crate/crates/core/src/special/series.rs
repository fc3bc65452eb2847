use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// How the remainder of an infinite series is handled once summation stops.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum TailMode {
    /// Stop when the current term drops below the tolerance; nothing is added.
    Truncate,
    /// Terms decay like `C / n^p` with `p > 1`. The remainder past `N` is
    /// estimated by `∫_{N+1/2}^∞ C x^{-p} dx` and added to the sum.
    IntegralTailCorrection { decay_power: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SumControl {
    pub abs_tol: f64,
    pub max_terms: usize,
    pub tail_mode: TailMode,
}

impl Default for SumControl {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            max_terms: 1_000_000,
            tail_mode: TailMode::IntegralTailCorrection { decay_power: 3.0 },
        }
    }
}

impl SumControl {
    pub fn truncate(abs_tol: f64, max_terms: usize) -> Self {
        Self {
            abs_tol,
            max_terms,
            tail_mode: TailMode::Truncate,
        }
    }

    /// Keeps the tolerance and cap but pins the decay power of an integral
    /// tail correction, for call sites that know their asymptotics.
    /// A truncating control is returned unchanged.
    pub fn with_decay_power(self, decay_power: f64) -> Self {
        match self.tail_mode {
            TailMode::Truncate => self,
            TailMode::IntegralTailCorrection { .. } => Self {
                tail_mode: TailMode::IntegralTailCorrection { decay_power },
                ..self
            },
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || self.max_terms == 0 {
            return Err(Error::Domain(format!(
                "series control needs abs_tol > 0 and max_terms ≥ 1, got {self:?}"
            )));
        }
        if let TailMode::IntegralTailCorrection { decay_power } = self.tail_mode {
            if !(decay_power > 1.0) {
                return Err(Error::Domain(format!(
                    "integral tail correction needs decay power > 1, got {decay_power}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: usize,
    /// Estimate of the error left after truncation (and tail correction).
    pub tail_bound: f64,
    /// False when `max_terms` was reached first.
    pub converged: bool,
}

impl SeriesResult {
    /// Turns a capped-out result into [`Error::SeriesCapOut`].
    pub fn into_result(self) -> Result<f64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::SeriesCapOut {
                terms: self.terms_used,
                best_estimate: self.value,
                tail_bound: self.tail_bound,
            })
        }
    }
}

/// Sums `term(1) + term(2) + …` until both the current term and the
/// remainder uncertainty are below `ctrl.abs_tol`.
///
/// Terms should be eventually monotone decreasing in magnitude. Reaching
/// `max_terms` yields `converged == false` rather than an error so callers
/// can still inspect the partial value.
pub fn sum_series<F>(term: F, ctrl: &SumControl) -> Result<SeriesResult>
where
    F: Fn(usize) -> f64,
{
    ctrl.validate()?;
    // Neumaier compensated summation; a million terms of mixed magnitude
    // otherwise lose several digits.
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut last = 0.0f64;
    for n in 1..=ctrl.max_terms {
        let t = term(n);
        if !t.is_finite() {
            return Err(Error::Domain(format!(
                "series term {n} is not finite ({t})"
            )));
        }
        let s = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
        last = t;

        if t.abs() >= ctrl.abs_tol {
            continue;
        }
        match ctrl.tail_mode {
            TailMode::Truncate => {
                return Ok(SeriesResult {
                    value: sum + comp,
                    terms_used: n,
                    tail_bound: t.abs(),
                    converged: true,
                });
            }
            TailMode::IntegralTailCorrection { decay_power } => {
                let (tail, uncertainty) = power_law_tail(t, n, decay_power);
                if uncertainty < ctrl.abs_tol {
                    return Ok(SeriesResult {
                        value: sum + comp + tail,
                        terms_used: n,
                        tail_bound: uncertainty,
                        converged: true,
                    });
                }
            }
        }
    }
    let n = ctrl.max_terms;
    let (tail, bound) = match ctrl.tail_mode {
        TailMode::Truncate => (0.0, last.abs()),
        TailMode::IntegralTailCorrection { decay_power } => power_law_tail(last, n, decay_power),
    };
    Ok(SeriesResult {
        value: sum + comp + tail,
        terms_used: n,
        tail_bound: bound,
        converged: false,
    })
}

/// Remainder `Σ_{j>n} C j^{-p}` with `C = t_n n^p`, and the spread between
/// the midpoint and left-endpoint integral estimates as its uncertainty.
fn power_law_tail(t_n: f64, n: usize, p: f64) -> (f64, f64) {
    let nf = n as f64;
    let c = t_n * nf.powf(p);
    let mid = c / ((p - 1.0) * (nf + 0.5).powf(p - 1.0));
    let left = c / ((p - 1.0) * nf.powf(p - 1.0));
    (mid, (left - mid).abs())
}
