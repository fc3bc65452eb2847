//! The termwise Coulomb identity and the logarithmic divergence of the
//! truncated transport sum.
//!
//! cargo run --example coulomb_identity

use phase_stopping::stopping::{coulomb_identity_check, truncated_coulomb_sum};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let gamma = 1.0 / 6.0;
    println!(
        "{:>3} {:>22} {:>22} {:>10}",
        "l", "(l+1) sin^2", "gamma sin cos", "residual"
    );
    for l in 0..=5 {
        let (lhs, rhs) = coulomb_identity_check(gamma, l);
        println!(
            "{:>3} {:>22.17} {:>22.17} {:>10.1e}",
            l,
            lhs,
            rhs,
            lhs - rhs
        );
    }
    println!();
    println!(
        "{:>8} {:>14} {:>16}",
        "l_max", "sum (gamma=1)", "growth/ln 10"
    );
    let mut previous = None;
    for l_max in [10usize, 100, 1_000, 10_000, 100_000] {
        let s = truncated_coulomb_sum(1.0, l_max);
        let growth = previous
            .map(|p: f64| format!("{:.6}", (s - p) / 10f64.ln()))
            .unwrap_or_default();
        println!("{:>8} {:>14.8} {:>16}", l_max, s, growth);
        previous = Some(s);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
