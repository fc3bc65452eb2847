//! Electron-gas parameters and projectile kinematics for aluminium-like
//! density (r_s = 2.07).
//!
//! cargo run --example kinematics

use phase_stopping::gas::{relative_velocity, ElectronGas};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let gas = ElectronGas::from_rs(2.07)?;
    println!("r_s = {}", gas.r_s);
    println!("n0 = {:.6e} bohr^-3", gas.n0);
    println!("omega_p = {:.6} Ha", gas.omega_p);
    println!("k_F = {:.6} bohr^-1", gas.k_f);
    println!();
    println!(
        "{:>5} {:>9} {:>9} {:>9} {:>9}",
        "v", "gamma", "lambda", "Lambda", "2k/Lambda"
    );
    for v in [2.0, 4.0, 6.0, 8.0, 10.0] {
        let s = gas.setup(1.0, v)?;
        println!(
            "{:>5.1} {:>9.5} {:>9.5} {:>9.5} {:>9.3}",
            s.v,
            s.gamma,
            s.lambda_yukawa,
            s.lambda_hulthen,
            s.digamma_argument()
        );
    }
    let v_r = relative_velocity(6.0, gas.ideal_mean_sq_velocity())?;
    println!();
    println!("relative velocity at v = 6 with <v_e^2> = 3/5 k_F^2: {v_r:.6}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
