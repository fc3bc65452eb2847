//! Number formatting shared by every emitted table.

/// Significant digits written to CSV.
pub const SIGNIFICANT_DIGITS: usize = 10;

/// Decimal scientific notation with ten significant digits.
pub fn format_number(x: f64) -> String {
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
}

/// Rounds `x` to the value its formatted form parses back to, so tables
/// survive a text round trip bit for bit.
pub fn quantize(x: f64) -> f64 {
    if x.is_finite() {
        format_number(x).parse().expect("formatted float parses")
    } else {
        x
    }
}

pub fn quantize_opt(x: Option<f64>) -> Option<f64> {
    x.map(quantize)
}

pub fn format_opt(x: Option<f64>) -> String {
    x.map(format_number).unwrap_or_default()
}
