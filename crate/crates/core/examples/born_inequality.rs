//! Yukawa Born integrals behind the transport/sine-sum inequality: the gap
//! tends to 1/2 as 2k/lambda grows.
//!
//! cargo run --example born_inequality

use phase_stopping::stopping::born_integral_inequality;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:>8} {:>14} {:>14} {:>12} {:>12}",
        "2k/lam", "lhs", "rhs", "gap", "gap closed"
    );
    let k = 6.0;
    for ratio in [2.0, 10.0, 100.0, 123.8, 1000.0, 1e4] {
        let lam = 2.0 * k / ratio;
        let b = born_integral_inequality(1.0, k, lam)?;
        println!(
            "{:>8} {:>14.10} {:>14.10} {:>12.9} {:>12.9}",
            ratio,
            b.lhs,
            b.rhs,
            b.gap(),
            b.gap_closed()
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
