//! Planar Coulomb stopping: the partial-wave sum reproduces
//! (pi gamma / 2) tanh(pi gamma) without any cutoff.
//!
//! cargo run --example two_dimensional

use phase_stopping::gas::ElectronGas;
use phase_stopping::special::SumControl;
use phase_stopping::stopping::{
    planar_partial_wave_sum_closed, stopping_2d_exact, stopping_2d_partial_wave,
};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let gas = ElectronGas::from_rs(2.07)?;
    let n0_2d = 0.01;
    println!(
        "{:>6} {:>18} {:>18} {:>10} {:>14}",
        "gamma", "partial waves", "tanh form", "residual", "dE/dz (2d)"
    );
    for gamma in [0.1, 0.5, 1.0, 2.0] {
        let v = 2.0;
        let s = gas.setup(gamma * v, v)?;
        let sum = stopping_2d_partial_wave(&s, &SumControl::default())?;
        let closed = planar_partial_wave_sum_closed(gamma);
        println!(
            "{:>6} {:>18.12} {:>18.12} {:>10.1e} {:>14.8}",
            gamma,
            sum,
            closed,
            sum - closed,
            stopping_2d_exact(n0_2d, &s)?
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
