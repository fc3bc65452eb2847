//! A full partial-wave series from the radial equation, compared with the
//! Born series and the Coulomb differences it approaches at high l.
//!
//! cargo run --release --example numerov_series

use phase_stopping::gas::ElectronGas;
use phase_stopping::phase::{
    build_series, coulomb_diff, default_l_max, PotentialSpec, SeriesSource, DEFAULT_TRUNCATION_TOL,
};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let gas = ElectronGas::from_rs(2.07)?;
    let s = gas.setup(1.0, 6.0)?;
    let p = PotentialSpec::hulthen_for(&s);
    let l_max = default_l_max(s.k, s.lambda_hulthen, s.gamma, DEFAULT_TRUNCATION_TOL);
    let numerov = build_series(&p, s.k, l_max, SeriesSource::Numerov)?;
    let born = build_series(&p, s.k, l_max, SeriesSource::BornClosed)?;
    println!(
        "v = 6, z1 = +1, l_max = {l_max}, |delta_lmax| = {:.2e}",
        numerov.values[l_max].abs()
    );
    println!();
    println!(
        "{:>5} {:>14} {:>14} {:>14} {:>14}",
        "l", "numerov", "born", "diff", "coulomb diff"
    );
    for l in [0usize, 1, 2, 5, 10, 20, 50, 100, 200, 400] {
        println!(
            "{:>5} {:>14.10} {:>14.10} {:>14.10} {:>14.10}",
            l,
            numerov.values[l],
            born.values[l],
            numerov.values[l] - numerov.values[l + 1],
            coulomb_diff(s.gamma, l)
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
