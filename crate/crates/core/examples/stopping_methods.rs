//! Every stopping route at the reference point r_s = 2.07, v = 6:
//! sine sum on Numerov shifts, its two-term expansion, the transport cross
//! section, and the asymptotic decomposition.
//!
//! cargo run --release --example stopping_methods

use std::f64::consts::PI;

use phase_stopping::gas::ElectronGas;
use phase_stopping::phase::{
    build_series, default_l_max, hulthen_delta0_exact, PotentialSpec, SeriesSource,
    DEFAULT_TRUNCATION_TOL,
};
use phase_stopping::special::SumControl;
use phase_stopping::stopping::{
    asymptotic_decomposition, sine_sum_expansion, stopping_new_form, stopping_transport_form,
};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let gas = ElectronGas::from_rs(2.07)?;
    println!(
        "{:>4} {:>4} {:>12} {:>12} {:>12} {:>12}",
        "z1", "v", "sine sum", "expansion", "transport", "asymptotic"
    );
    for v in [6.0, 8.0] {
        for z1 in [1.0, -1.0] {
            let s = gas.setup(z1, v)?;
            let p = PotentialSpec::hulthen_for(&s);
            let l_max = default_l_max(s.k, s.lambda_hulthen, s.gamma, DEFAULT_TRUNCATION_TOL);
            let series = build_series(&p, s.k, l_max, SeriesSource::Numerov)?;
            let delta0 = hulthen_delta0_exact(&s, &SumControl::default())?.value;
            let expansion = gas.n0 * 2.0 * PI * s.gamma * sine_sum_expansion(delta0, s.gamma)?;
            println!(
                "{:>4} {:>4} {:>12.8} {:>12.8} {:>12.8} {:>12.8}",
                z1,
                v,
                stopping_new_form(&gas, &s, &series)?.value,
                expansion,
                stopping_transport_form(&gas, &s, &series)?.value,
                asymptotic_decomposition(&gas, &s)?.total
            );
        }
    }
    println!();
    println!(
        "The transport form lies below the sine-sum form by about n0 (4 pi/k^2) v^2 gamma^2 / 2."
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
