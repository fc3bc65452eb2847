//! Bethe, Barkas and Bloch terms over velocity, with Lindhard's Barkas
//! estimate for comparison.
//!
//! cargo run --example barkas_lindhard

use phase_stopping::gas::ElectronGas;
use phase_stopping::stopping::{
    asymptotic_decomposition, lindhard_barkas, LINDHARD_BETA_3PI_2, LINDHARD_BETA_PI,
};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let gas = ElectronGas::from_rs(2.07)?;
    println!(
        "{:>4} {:>9} {:>10} {:>10} {:>10} {:>10} {:>9} {:>9}",
        "v", "L0", "L1", "L2", "S(+1)", "S(-1)", "split %", "L1(pi)/L1"
    );
    for v in [3.0, 4.0, 6.0, 8.0, 10.0] {
        let plus = asymptotic_decomposition(&gas, &gas.setup(1.0, v)?)?;
        let minus = asymptotic_decomposition(&gas, &gas.setup(-1.0, v)?)?;
        let s = gas.setup(1.0, v)?;
        println!(
            "{:>4} {:>9.5} {:>10.6} {:>10.6} {:>10.7} {:>10.7} {:>9.4} {:>9.4}",
            v,
            plus.l0,
            plus.l1,
            plus.l2,
            plus.total,
            minus.total,
            100.0 * plus.barkas_splitting(),
            lindhard_barkas(&gas, &s, LINDHARD_BETA_PI) / plus.l1
        );
    }
    let s = gas.setup(1.0, 6.0)?;
    let l1 = asymptotic_decomposition(&gas, &s)?.l1;
    println!();
    println!(
        "at v = 6: L1(3pi/2)/L1 = {:.4}",
        lindhard_barkas(&gas, &s, LINDHARD_BETA_3PI_2) / l1
    );
    println!(
        "L2 k^2 = {:.6}",
        asymptotic_decomposition(&gas, &s)?.l2 * s.k * s.k
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
